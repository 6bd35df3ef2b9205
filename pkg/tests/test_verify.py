# -*- coding: utf-8 -*-

import json
import os
import random

import pytest

import bifree
from bifree.core import Bigrade, FreeChainComplex
from bifree.generators import gen_random, gen_wheel
from bifree.linalg import SparseBitMatrix
from bifree.verify import (
    betti_at_grade,
    check_free_complex,
    check_quasi_iso,
    evaluate_at_grade,
    grade_grid,
    pointwise_homology,
    reports_to_json_lines,
)

testdir = os.path.dirname(os.path.abspath(__file__))
testdir = os.path.join(testdir, "files")


def test_evaluate_at_grade():
    complex = gen_wheel(8)
    below = evaluate_at_grade(complex, Bigrade(-1, -1))
    assert [b.n_cols for b in below] == [0, 0, 0]

    above = evaluate_at_grade(complex, Bigrade(100, 100))
    assert [b.n_cols for b in above] == [9, 16, 8]

    # outer cycle, center generator 0 and the even spokes
    boundaries = evaluate_at_grade(complex, Bigrade(0, 14))
    assert [b.n_cols for b in boundaries] == [9, 12, 0]


def test_betti_at_grade():
    complex = bifree.read_scc(os.path.join(testdir, "vertex.scc"))
    assert betti_at_grade(complex, Bigrade(0, 0), 0) == 1
    assert betti_at_grade(complex, Bigrade(0, 0), 1) == 0

    complex = bifree.read_scc(os.path.join(testdir, "hollow_triangle.scc"))
    top = Bigrade(2, 2)
    assert betti_at_grade(complex, top, 0) == 1
    assert betti_at_grade(complex, top, 1) == 1
    assert betti_at_grade(complex, Bigrade(1, 1), 1) == 0

    complex = gen_wheel(8)
    top = Bigrade(14, 14)
    assert [betti_at_grade(complex, top, i) for i in range(3)] == [1, 0, 0]
    assert betti_at_grade(complex, Bigrade(0, 14), 1) == 4


def test_pointwise_homology():
    complex = bifree.read_scc(os.path.join(testdir, "hollow_triangle.scc"))
    homology = pointwise_homology(complex, [(2, 2), Bigrade(0, 0)])
    assert homology == {(2, 2): [1, 1], (0, 0): [1]}


def test_grid_soundness():
    rng = random.Random(0)
    complex = gen_random(40, 3, 2, seed=4)
    xs, ys = grade_grid(complex)
    for __ in range(200):
        x = rng.uniform(-1, 10)
        y = rng.uniform(-1, 10)
        below_x = [v for v in xs if v <= x]
        below_y = [v for v in ys if v <= y]
        expected = [0, 0, 0]
        if below_x and below_y:
            s = Bigrade(below_x[-1], below_y[-1])
            expected = [betti_at_grade(complex, s, i) for i in range(3)]
        s = Bigrade(x, y)
        assert [betti_at_grade(complex, s, i) for i in range(3)] == expected


def test_check_free_complex():
    identity = FreeChainComplex([[Bigrade(0, 0)]], [SparseBitMatrix.zeros(0, 1)])
    report = check_free_complex(identity)
    assert report.ok

    bad = FreeChainComplex(
        [[Bigrade(1, 0)], [Bigrade(0, 0)]],
        [SparseBitMatrix.zeros(0, 1), SparseBitMatrix(1, [(0,)])],
    )
    report = check_free_complex(bad)
    assert not report.ok
    assert report.grading == [(1, 0, 0)]


def test_check_free_complex_boundary_squared():
    # two vertices, one edge and a face whose boundary is that single edge
    bad = FreeChainComplex(
        [[Bigrade(0, 0)] * 2, [Bigrade(0, 0)], [Bigrade(0, 0)]],
        [
            SparseBitMatrix.zeros(0, 2),
            SparseBitMatrix(2, [(0, 1)]),
            SparseBitMatrix(1, [(0,)]),
        ],
    )
    assert check_free_complex(bad).boundary_squared == [1]


def test_mutation_detected():
    filename = os.path.join(testdir, "two_critical_edge.scc")
    complex = bifree.read_scc(filename)
    out = bifree.resolve(complex, suppress_stdout=True)
    assert check_quasi_iso(complex, out).ok

    out.boundaries[1].columns[1] = (0,)
    report = check_quasi_iso(complex, out)
    assert not report.ok
    mismatch = report.first_mismatch
    assert (mismatch.grade, mismatch.dim) == (Bigrade(1, 1), 0)
    assert (mismatch.expected, mismatch.found) == (1, 0)
    assert not check_free_complex(out).ok


def test_mutation_random():
    rng = random.Random(1)
    complex = gen_random(30, 3, 2, seed=1)
    out = bifree.resolve(complex, algorithm="logpath", suppress_stdout=True)
    assert check_quasi_iso(complex, out).ok

    # flip a bit in an edge column that some face column uses
    used = sorted({j for col in out.boundaries[2] for j in col})
    assert used
    boundary = out.boundaries[1]
    j = rng.choice(used)
    r = rng.randrange(boundary.n_rows)
    boundary.columns[j] = tuple(sorted(set(boundary.columns[j]) ^ {r}))
    assert check_free_complex(out).boundary_squared == [1]


def test_grid_cap_sampling():
    complex = gen_random(40, 3, 2, seed=2)
    out = bifree.resolve(complex, suppress_stdout=True)
    with pytest.warns(UserWarning, match="comparing a sample of 10"):
        report = check_quasi_iso(complex, out, grid_cap=10)
    assert report.sampled
    assert report.n_grades == 10
    assert report.ok


def test_reports():
    complex = bifree.read_scc(os.path.join(testdir, "two_critical_edge.scc"))
    out = bifree.resolve(complex, suppress_stdout=True)
    lines = reports_to_json_lines(check_free_complex(out), check_quasi_iso(complex, out))
    first, second = [json.loads(line) for line in lines.splitlines()]
    assert first["check"] == "free-complex" and first["ok"]
    assert second["check"] == "quasi-isomorphism" and second["grades"] == 4
    assert second["first_mismatch"] is None
    assert "ok" in check_quasi_iso(complex, out).to_text()
