"""Iterated integrals of lattice-point counting functions."""

from ._gsphere import (  # noqa: F401
    BumpFunction,
    IteratedEvaluator,
    RadialCountTable,
    SqrtRadius,
    build_table,
    c_constant,
    count_n,
    eval_ok,
    figure_rows,
    fourier_check,
    main_coefficient,
    main_formula,
    make_bump,
    pair_counting,
    quadruple,
    run_suite,
    verify_delta_identity,
    verify_nd_identity,
)
