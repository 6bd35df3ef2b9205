# -*- coding: utf-8 -*-

import math
from itertools import combinations

import numpy as np
import pytest
from scipy.spatial.distance import pdist

from bifree.core import Bigrade, validate
from bifree.generators import (
    FAMILIES,
    GeneratorParams,
    bifunction_support,
    gen_bifunction,
    gen_degree_rips,
    gen_modified_wheel,
    gen_random,
    gen_star,
    gen_wheel,
    random_bifunction,
)
from bifree.utils import snap
from bifree.verify import betti_at_grade


def test_wheel():
    complex = gen_wheel(8)
    assert validate(complex).is_valid
    assert [len(b) for b in complex.blocks] == [9, 16, 8]
    assert complex.criticality == 8
    assert complex.block(0)[8].support.generators[0] == Bigrade(0, 14)

    top = Bigrade(14, 14)
    assert [betti_at_grade(complex, top, i) for i in range(3)] == [1, 0, 0]


def test_wheel_forces_center_generator():
    complex = gen_wheel(8)
    center = complex.block(0)[8].support
    for edge in complex.block(1):
        if 8 in edge.facets:
            candidates = [g for g in center if g <= edge.support[0]]
            assert len(candidates) == 1


def test_star():
    complex = gen_star(8)
    assert validate(complex).is_valid
    assert [len(b) for b in complex.blocks] == [9, 8]
    for edge in complex.block(1):
        assert edge.support.generators == (Bigrade(0, 14), Bigrade(14, 0))
        assert edge.support.join_all() == Bigrade(14, 14)


@pytest.mark.parametrize("l", [4, 8, 16])
def test_modified_wheel(l):
    complex = gen_modified_wheel(l)
    assert validate(complex).is_valid
    assert complex.criticality == l

    edges = [e.support[0] for e in complex.block(1)]
    relations = [
        a.join(b) for a, b in zip(complex.block(0)[l].support, complex.block(0)[l].support[1:])
    ]
    for a, b in combinations(edges + relations, 2):
        assert not a.comparable(b)
    triangles = [t.support[0] for t in complex.block(2)]
    for a, b in combinations(triangles, 2):
        assert not a.comparable(b)


def test_bifunction_support():
    assert bifunction_support(3, 2, 2).generators == (Bigrade(0, 3), Bigrade(2, 0))
    assert bifunction_support(0, 0, 5).generators == (Bigrade(0, 0),)

    support = bifunction_support(1, 1, 4)
    expected = [Bigrade(0, 1)]
    for j in [2, 1]:
        t = 1 / (1 + math.tan(j * math.pi / 6))
        expected.append(Bigrade(snap(t), snap(1 - t)))
    expected.append(Bigrade(1, 0))
    assert list(support.generators) == expected


def test_bifunction_monotone():
    complex = random_bifunction(12, 4, d=2, seed=1)
    assert validate(complex).is_valid
    assert complex.criticality <= 4
    for dim in range(1, complex.dimension + 1):
        faces = complex.block(dim - 1)
        for cell in complex.block(dim):
            for f in cell.facets:
                for g in cell.support:
                    assert faces[f].support.contains(g)


def test_gen_bifunction_k_too_small():
    with pytest.raises(ValueError, match="k must be at least 2"):
        gen_bifunction([[[]]], [[0.0]], [[0.0]], k=1)


def test_degree_rips_triangle():
    points = [[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3) / 2]]
    complex = gen_degree_rips(points, max_dim=2)
    assert validate(complex).is_valid
    for vertex in complex.block(0):
        assert vertex.support.generators == (Bigrade(0, 2), Bigrade(1, 0))
    for edge in complex.block(1):
        assert edge.support.generators == (Bigrade(1, 0),)
    assert complex.block(2)[0].support.generators == (Bigrade(1, 0),)


def test_degree_rips_random():
    rng = np.random.default_rng(3)
    points = rng.random((9, 2))
    complex = gen_degree_rips(points, max_dim=3)
    assert validate(complex).is_valid
    assert complex.dimension == 3
    assert complex.criticality <= len(np.unique(pdist(points))) + 1


def test_degree_rips_max_edge_length():
    points = [[0.0], [1.0], [3.0]]
    complex = gen_degree_rips(points, max_dim=1, max_edge_length=1.5)
    assert len(complex.block(1)) == 1


def test_random():
    complex = gen_random(100, 4, 2, seed=9)
    assert validate(complex).is_valid
    assert complex.n_cells == 100
    assert complex.criticality <= 4
    assert complex == gen_random(100, 4, 2, seed=9)
    assert complex != gen_random(100, 4, 2, seed=10)


def test_random_free():
    assert gen_random(50, 1, 3, seed=2).is_free()


def test_random_three_dimensional():
    for seed in range(20):
        complex = gen_random(120, 8, 3, seed=seed)
        assert validate(complex).is_valid


def test_generator_params():
    for family in FAMILIES:
        size = 4 if family != "random" else 30
        params = GeneratorParams(family, size, k=3, d=2, seed=0)
        complex = params.build()
        assert validate(complex).is_valid
        assert complex.n_cells > 0

    with pytest.raises(NotImplementedError, match="Unknown family specified"):
        GeneratorParams("torus", 4).build()
    with pytest.raises(ValueError, match="l must be even"):
        GeneratorParams("wheel", 7).build()
