# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest

import bifree
from bifree.core import Bigrade, normalize_support
from bifree.generators import (
    gen_degree_rips,
    gen_modified_wheel,
    gen_random,
    gen_star,
    gen_wheel,
    random_bifunction,
)
from bifree.linalg import mat_mul
from bifree.resolutions import LogPathResolution
from bifree.resolvers import LogPath, Path
from bifree.verify import check_free_complex, check_quasi_iso

from .data import *


def staircase(n):
    return normalize_support([Bigrade(i, n - 1 - i) for i in range(n)])


def test_logpath_resolution_sizes():
    res = LogPathResolution(staircase(2))
    assert (res.n_relations, res.n_syzygies) == (1, 0)

    res = LogPathResolution(staircase(5))
    assert res.graph.edges == data_log_path_m4_edges
    assert res.graph.triangles == data_log_path_m4_triangles
    assert res.n_relations == 7
    assert res.n_syzygies == 3

    res = LogPathResolution(staircase(1))
    assert (res.n_relations, res.n_syzygies) == (0, 0)


def test_logpath_resolution_grades():
    res = LogPathResolution(staircase(5))
    # relation (0, 4) and syzygy (0, 2, 4) both sit at the join of the ends
    assert res.relations[6] == Bigrade(4, 4)
    assert res.syzygies[1] == Bigrade(4, 4)
    assert res.syzygies[0] == Bigrade(2, 4)
    assert mat_mul(res.p1, res.p2).is_zero()


def test_logpath_connect():
    res = LogPathResolution(staircase(17))
    edges = [res.graph.edges[r] for r in res.connect(1, 15)]
    assert edges == [(1, 2), (2, 4), (4, 8), (8, 12), (12, 14), (14, 15)]
    assert res.connect(15, 1) == res.connect(1, 15)
    assert res.connect(4, 4) == []


def test_logpath_wheel():
    resolver = LogPath(check=True)
    out = resolver.resolve(gen_wheel(8), suppress_stdout=True)
    assert out.basis_counts == data_wheel_8_logpath_basis
    assert out.nnz() == data_wheel_8_logpath_nnz
    assert out.block_sizes[2] == (8, 0, 4)
    assert all(len(col) == 3 for col in resolver.maps["h0"][2].columns)
    assert check_free_complex(out).ok
    assert check_quasi_iso(gen_wheel(8), out).ok


def test_logpath_wheel_roundtrip():
    out = bifree.resolve(gen_wheel(8), algorithm="logpath", suppress_stdout=True)
    complex = bifree.read_scc(bifree.write_scc(out))
    assert complex.is_free()
    assert complex.validate().is_valid


@pytest.mark.parametrize(
    "l",
    [
        3,
        8,
        17,
        33,
        pytest.param(64, marks=pytest.mark.slow),
        pytest.param(256, marks=pytest.mark.slow),
    ],
)
def test_logpath_star_f1(l):
    resolver = LogPath()
    resolver.resolve(gen_star(l), suppress_stdout=True)
    f1 = resolver.maps["f1"][1]
    bound = 2 * (math.ceil(math.log2(l - 1)) - 1) + 1
    assert all(len(col) <= bound for col in f1.columns)
    assert f1.max_column_nnz() <= 2 * math.ceil(math.log2(l))


@pytest.mark.slow
def test_logpath_wheel_growth():
    small = LogPath().resolve(gen_wheel(128), suppress_stdout=True).nnz()
    large = LogPath().resolve(gen_wheel(256), suppress_stdout=True).nnz()
    assert large / small <= 2.6


@pytest.mark.slow
def test_logpath_wheel_scaling():
    c = None
    for t in range(7, 13):
        l = 2**t
        complex = gen_wheel(l)
        resolver = LogPath()
        out = resolver.resolve(complex, suppress_stdout=True)
        scale = complex.size * (math.log2(complex.criticality) + 2) ** 2
        ratio = out.nnz() / scale
        if c is None:
            c = ratio
        assert ratio <= c
        # one shortest monotone path from the first to the last generator
        assert resolver.maps["h0"][2].max_column_nnz() <= 2 * t
        # triangles are 1-critical
        assert resolver.maps["h1"][2].max_column_nnz() == 0


def test_logpath_free_input():
    complex = gen_random(60, 1, 2, seed=5)
    resolver = LogPath()
    out = resolver.resolve(complex, suppress_stdout=True)
    assert bifree.write_scc(out) == bifree.write_scc(complex)
    for name in ["f1", "h0", "f2", "h1", "H0"]:
        assert resolver.stats.block_nnz(name) == 0


def test_logpath_commutation():
    for seed in range(5):
        resolver = LogPath()
        resolver.resolve(gen_random(60, 5, 3, seed=seed), suppress_stdout=True)
        assert resolver.commutation_defects() == []


def test_logpath_modified_wheel():
    complex = gen_modified_wheel(8)
    out = LogPath(check=True).resolve(complex, suppress_stdout=True)
    assert check_free_complex(out).ok
    assert check_quasi_iso(complex, out).ok


def test_logpath_smaller_than_path():
    complex = gen_modified_wheel(32)
    path = Path().resolve(complex, suppress_stdout=True)
    logpath = LogPath().resolve(complex, suppress_stdout=True)
    assert logpath.nnz() < path.nnz()


@pytest.mark.parametrize("seed", range(8))
def test_logpath_quasi_iso(seed):
    complex = gen_random(40, 6, 2, seed=seed)
    out = bifree.resolve(complex, algorithm="logpath", suppress_stdout=True, check=True)
    assert check_free_complex(out).ok
    assert check_quasi_iso(complex, out).ok


def test_logpath_quasi_iso_three_dimensional():
    complex = gen_random(80, 8, 3, seed=11)
    out = bifree.resolve(complex, algorithm="logpath", suppress_stdout=True, check=True)
    assert check_free_complex(out).ok
    assert check_quasi_iso(complex, out).ok


@pytest.mark.filterwarnings("ignore:grid has")
def test_logpath_bifunction():
    complex = random_bifunction(8, 4, d=2, seed=2)
    out = bifree.resolve(complex, algorithm="logpath", suppress_stdout=True, check=True)
    assert check_free_complex(out).ok
    assert check_quasi_iso(complex, out, grid_cap=300).ok


def test_logpath_degree_rips():
    rng = np.random.default_rng(7)
    complex = gen_degree_rips(rng.random((7, 2)), max_dim=2)
    out = bifree.resolve(complex, algorithm="logpath", suppress_stdout=True, check=True)
    assert check_free_complex(out).ok
    assert check_quasi_iso(complex, out).ok
