"""Smoke test for the matlin_py extension.

Build it first:

    cargo build --release -p matlin-py
    cp target/release/libmatlin_py.so python/matlin_py.so
    python3 python/smoke_test.py
"""

import json
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import matlin_py  # noqa: E402

A = [[1, 1, 0, 0, 0, 1], [0, 1, -1, 0, 1, 0], [0, 0, 1, 1, 0, 0]]


def sets(*words):
    return sorted([int(c) for c in w] for w in words)


def main():
    m = matlin_py.Matroid.from_matrix(A)
    assert (m.size, m.rank) == (6, 3)
    assert m.bases() == sets("123", "124", "134", "135", "145", "234", "235",
                             "236", "245", "246", "346", "356", "456")
    assert sorted(m.circuits()) == sets("16", "125", "256", "345", "1234", "2346")
    assert sorted(m.cocircuits()) == sets("34", "126", "235", "245", "1356", "1456")
    assert m.f_vector() == [1, 6, 14, 13]
    assert m.h_polynomial() == [4, 5, 3, 1]
    assert m.tutte()[(1, 0)] == 1

    # Rationals may be given as strings or fractions.
    scaled = matlin_py.Matroid.from_matrix(
        [[Fraction(1, 2), "1/2", 0, 0, 0, "1/2"], [0, 1, -1, 0, 1, 0], [0, 0, 1, 1, 0, 0]]
    )
    assert scaled == m

    ideal = m.initial_ideal()
    assert str(ideal) == "<x1y2y6, x1y3y5y6, x1y4y5y6, x2y3y5, x2y4y5, x3y4>"
    assert len(ideal.components()) == 13
    totals, graded = ideal.betti()
    assert totals == [1, 6, 9, 4]
    assert graded == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 3, 2, 0], [0, 2, 7, 4]]
    assert (totals, graded) == m.betti_prediction()
    assert ideal.is_cohen_macaulay()
    assert ideal.bidegree() == "s^3 + 3s^2t + 5st^2 + 4t^3"

    ideals = m.initial_ideals()
    assert len(ideals) == 72
    assert len({i for i, _ in ideals}) == 72
    assert len(m.polytope_vertices()) == 72
    assert m.summand_check()

    # The forms x1+x2+x6+1, x2-x3+x5, x3+x4+1 vanish where A x = (-1, 0, -1).
    affine = matlin_py.AffineSpace(A, [-1, 0, -1])
    assert affine.counts() == (124, 144)
    assert affine.bidegrees() == ("s^3 + 3s^2t + 5st^2 + 4t^3", "3st^2 + 10t^3")
    assert affine.initial_ideal([0, 1, 2, 3, 4, 5, 6]).bidegree() == "3st^2 + 10t^3"

    report = json.loads(matlin_py.report("initial-ideals", json.dumps({"matrix": A}), count=True))
    assert (report["count"], report["bound"]) == (72, 78)
    assert json.loads(matlin_py.report("selftest"))["passed"]

    try:
        matlin_py.Matroid.from_bases(4, [[1, 2], [3, 4]])
    except ValueError as e:
        assert "axiom" in str(e)
    else:
        raise AssertionError("expected a basis axiom violation")

    print("smoke test passed")


if __name__ == "__main__":
    main()
