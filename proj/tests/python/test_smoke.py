"""Smoke test for the extension module (run with PYTHONPATH at the build dir)."""

import math
import sys

import _gsphere as g


def approx(a, b, tol=1e-12):
    assert abs(a - b) <= tol * max(1.0, abs(a), abs(b)), (a, b)


def main():
    t = g.build_table(3, 2000)
    assert t.counts[0] == 1
    assert t.counts[1] == 6
    assert t.cumulative[1] == 7

    s1 = g.SqrtRadius.from_sigma2(1, 1)
    assert g.count_n(t, s1) == 7

    ev = g.IteratedEvaluator(t)
    approx(ev.eval_exact(1, s1), 1.0)
    approx(ev.eval_exact(4, s1), 1.0 / 24.0)

    q = g.quadruple(1)
    assert (q["alpha"], q["beta"], q["gamma"], q["delta"]) == (0, 1, 2, 0)

    approx(g.main_coefficient(4), math.pi / 630.0)

    mf = g.main_formula(t, 2, 2.0, 2000)
    ex = ev.eval_exact(2, g.SqrtRadius.from_sigma2(4, 1))
    assert abs(mf["value"] - ex) <= mf["bound"] + 1e-12 * (1 + abs(ex))

    c0 = g.c_constant(0, 1e-9)
    assert c0["value"] > 0 and c0["bound"] < 1e-8

    chi = g.make_bump(0.5, 1.5)
    r = g.verify_delta_identity(t, chi, 2000)
    assert r["pass"], r

    rows = g.figure_rows(t, 16, 2000)
    assert len(rows) == 16
    approx(rows[7]["n34"], 1.0 / 24.0)

    print("smoke OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
