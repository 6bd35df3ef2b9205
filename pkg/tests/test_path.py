# -*- coding: utf-8 -*-

import json
import os

import pytest

import bifree
from bifree.core import Bigrade, MultiCriticalComplex, normalize_support
from bifree.generators import gen_modified_wheel, gen_random, gen_star, gen_wheel
from bifree.resolutions import PathResolution
from bifree.resolvers import Path
from bifree.verify import check_free_complex, check_quasi_iso

from .data import *

testdir = os.path.dirname(os.path.abspath(__file__))
testdir = os.path.join(testdir, "files")


def test_path_resolution():
    res = PathResolution(normalize_support([Bigrade(1, 5), Bigrade(3, 2)]))
    assert res.relations == [Bigrade(3, 5)]
    assert res.p1.columns == [(0, 1)]

    res = PathResolution(normalize_support([Bigrade(1, 1)]))
    assert res.n_relations == 0
    assert res.n_syzygies == 0


def test_path_resolution_wheel_center():
    center = gen_wheel(8).block(0)[8]
    res = PathResolution(center.support)
    assert res.n_generators == 8
    assert res.n_relations == 7


def test_connect_path():
    res = PathResolution(normalize_support([Bigrade(i, 9 - i) for i in range(8)]))
    assert res.connect(2, 5) == [2, 3, 4]
    assert res.connect(5, 2) == [2, 3, 4]
    assert res.connect(3, 3) == []


def test_compute_f0_tie_rule():
    complex = MultiCriticalComplex.from_lists(
        [
            [([(1, 4), (2, 2)], []), ([(0, 0)], [])],
            [([(3, 5)], [0, 1])],
        ]
    )
    resolver = Path()
    resolver.prepare(complex)
    f0 = resolver.compute_f0(1)
    # generator (1, 4) of vertex 0 wins over (2, 2); vertex 1 sits at row 2
    assert f0.columns == [(0, 2)]


def test_path_wheel():
    out = Path().resolve(gen_wheel(8), suppress_stdout=True)
    assert out.basis_counts == data_wheel_8_path_basis
    assert out.nnz() == data_wheel_8_path_nnz
    assert out.boundary(2).n_cols == 8
    # three facet entries from f0 and seven relations from h0 per triangle
    assert out.boundary(2).nnz == 80


@pytest.mark.parametrize(
    "l",
    [
        4,
        8,
        16,
        pytest.param(64, marks=pytest.mark.slow),
        pytest.param(256, marks=pytest.mark.slow),
    ],
)
def test_path_wheel_h0(l):
    resolver = Path(check=True)
    resolver.resolve(gen_wheel(l), suppress_stdout=True)
    h0 = resolver.maps["h0"][2]
    assert h0.n_cols == l
    assert all(len(col) == l - 1 for col in h0.columns)
    assert resolver.stats.nnz["h0_2"] == l * (l - 1)


@pytest.mark.parametrize(
    "l",
    [
        2,
        5,
        8,
        pytest.param(64, marks=pytest.mark.slow),
        pytest.param(256, marks=pytest.mark.slow),
    ],
)
def test_path_star_f1(l):
    resolver = Path()
    resolver.resolve(gen_star(l), suppress_stdout=True)
    f1 = resolver.maps["f1"][1]
    assert f1.n_cols == l
    assert all(len(col) == l - 1 for col in f1.columns)
    assert resolver.stats.block_nnz("f1") == l * (l - 1)


@pytest.mark.slow
def test_path_wheel_growth():
    small = Path().resolve(gen_wheel(128), suppress_stdout=True).nnz()
    large = Path().resolve(gen_wheel(256), suppress_stdout=True).nnz()
    assert large / small >= 3.5


def test_path_free_input():
    complex = gen_random(60, 1, 2, seed=5)
    assert complex.is_free()
    resolver = Path()
    out = resolver.resolve(complex, suppress_stdout=True)
    assert bifree.write_scc(out) == bifree.write_scc(complex)
    assert resolver.stats.block_nnz("f1") == 0
    assert resolver.stats.block_nnz("h0") == 0


def test_path_commutation():
    for seed in range(5):
        resolver = Path()
        resolver.resolve(gen_random(50, 4, 3, seed=seed), suppress_stdout=True)
        assert resolver.commutation_defects() == []


def test_path_modified_wheel():
    complex = gen_modified_wheel(6)
    out = Path(check=True).resolve(complex, suppress_stdout=True)
    assert check_free_complex(out).ok
    assert check_quasi_iso(complex, out).ok


@pytest.mark.parametrize("seed", range(8))
def test_path_quasi_iso(seed):
    complex = gen_random(40, 3, 2, seed=seed)
    out = bifree.resolve(complex, algorithm="path", suppress_stdout=True, check=True)
    assert check_free_complex(out).ok
    assert check_quasi_iso(complex, out).ok


def test_path_stats(tmp_path):
    filename = os.path.join(testdir, "hollow_triangle.scc")
    out = bifree.resolve(filename, suppress_stdout=True)
    stats = out.stats
    assert stats.algorithm == "path"
    assert (stats.n, stats.k, stats.d) == (7, 2, 1)
    assert stats.basis_counts == [3, 4, 1]
    assert stats.total_nnz == stats.block_nnz("f0") + stats.block_nnz("p1") + stats.block_nnz(
        "p2"
    ) + stats.block_nnz("f1")
    assert stats.peak_memory == 8 * stats.total_nnz

    path = tmp_path / "stats.json"
    stats.to_json(str(path))
    with open(path) as f:
        assert list(json.load(f).keys()) == data_stats_keys
