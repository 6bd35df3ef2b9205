# -*- coding: utf-8 -*-

import random
from itertools import combinations

import networkx as nx
import pytest

from bifree.graph import LogPathGraph, log_path_graph
from bifree.linalg import SparseBitMatrix, mat_mul

from .data import *


def edge_indices(graph, edges):
    return [graph.edge_index[e] for e in edges]


def triangle_sum(graph, triangles):
    """Returns the edge indices of the Z2 boundary of a triangle set."""
    cycle = set()
    for t in triangles:
        cycle.symmetric_difference_update(graph.p2[t])
    return sorted(cycle)


@pytest.mark.parametrize("m, n_edges, n_triangles", data_log_path_counts)
def test_graph_counts(m, n_edges, n_triangles):
    graph = LogPathGraph(m)
    assert len(graph.edges) == n_edges
    assert len(graph.triangles) == n_triangles
    assert graph.n_vertices == m + 1


def test_graph_powers_of_two():
    for t in range(2, 11):
        graph = log_path_graph(2**t)
        assert len(graph.edges) == 2 ** (t + 1) - 1
        assert len(graph.triangles) == 2**t - 1


def test_graph_m4():
    graph = log_path_graph(4)
    assert graph.edges == data_log_path_m4_edges
    assert graph.triangles == data_log_path_m4_triangles
    assert graph.p2.columns[1] == tuple(
        sorted(edge_indices(graph, [(0, 2), (2, 4), (0, 4)]))
    )


def test_graph_is_cached():
    assert log_path_graph(12) is log_path_graph(12)


def test_graph_planarity():
    for m in [16, 37, 64]:
        graph = log_path_graph(m)
        for (a, b), (c, d) in combinations(graph.edges, 2):
            assert not (a < c < b < d or c < a < d < b)


@pytest.mark.parametrize("x, y, vertices", data_monotone_paths)
def test_shortest_monotone_path(x, y, vertices):
    graph = log_path_graph(16)
    path = graph.shortest_monotone_path(x, y)
    assert path == list(zip(vertices, vertices[1:]))


def test_shortest_monotone_path_bfs_oracle():
    for m in [5, 16, 33, 64]:
        graph = log_path_graph(m)
        digraph = nx.DiGraph(graph.edges)
        for x in range(m):
            distances = nx.single_source_shortest_path_length(digraph, x)
            for y in range(x + 1, m + 1):
                path = graph.shortest_monotone_path(x, y)
                assert len(path) == distances[y]
                assert path[0][0] == x and path[-1][1] == y


@pytest.mark.slow
@pytest.mark.parametrize("t", range(2, 9))
def test_shortest_monotone_path_exhaustive(t):
    m = 2**t
    graph = log_path_graph(m)
    digraph = nx.DiGraph(graph.edges)
    for x in range(m):
        distances = nx.single_source_shortest_path_length(digraph, x)
        for y in range(x + 1, m + 1):
            path = graph.shortest_monotone_path(x, y)
            assert len(path) == distances[y]
            assert len(path) <= 2 * (t - 1)


def test_shortest_monotone_path_longest():
    for t in range(2, 11):
        graph = log_path_graph(2**t)
        assert len(graph.shortest_monotone_path(1, 2**t - 1)) == 2 * (t - 1)


def test_decompose_single_triangle():
    graph = log_path_graph(4)
    cycle = edge_indices(graph, [(0, 1), (1, 2), (0, 2)])
    assert graph.decompose_and_fill(cycle) == [graph.triangle_index[1]]


def test_decompose_two_triangles():
    graph = log_path_graph(4)
    cycle = edge_indices(graph, [(0, 1), (1, 2), (2, 4), (0, 4)])
    triangles = graph.decompose_and_fill(cycle)
    assert [graph.triangles[t] for t in triangles] == [(0, 1, 2), (0, 2, 4)]
    assert triangle_sum(graph, triangles) == sorted(cycle)
    assert len(triangles) <= len(cycle) - 2


def test_decompose_figure_eight():
    graph = log_path_graph(4)
    cycle = edge_indices(
        graph, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (0, 2)]
    )
    triangles = graph.decompose_and_fill(cycle)
    assert {graph.triangles[t] for t in triangles} == {(0, 1, 2), (2, 3, 4)}


def test_decompose_empty():
    assert log_path_graph(4).decompose_and_fill([]) == []


def test_decompose_random_triangle_sums():
    rng = random.Random(0)
    for m in [4, 7, 16, 45, 64]:
        graph = log_path_graph(m)
        for __ in range(30):
            size = rng.randint(1, len(graph.triangles))
            chosen = sorted(rng.sample(range(len(graph.triangles)), size))
            cycle = triangle_sum(graph, chosen)
            rng.shuffle(cycle)
            triangles = graph.decompose_and_fill(cycle)
            assert triangles == chosen

            chain = SparseBitMatrix(len(graph.triangles), [triangles])
            assert list(mat_mul(graph.p2, chain)[0]) == sorted(cycle)


@pytest.mark.slow
@pytest.mark.parametrize("m", [16, 64, 256])
def test_decompose_many_triangle_sums(m):
    rng = random.Random(m)
    graph = log_path_graph(m)
    n_triangles = len(graph.triangles)
    for __ in range(10000):
        chosen = sorted(rng.sample(range(n_triangles), rng.randint(1, n_triangles)))
        cycle = triangle_sum(graph, chosen)
        rng.shuffle(cycle)
        triangles = graph.decompose_and_fill(cycle)
        assert triangles == chosen
        assert len(triangles) <= len(cycle) - 2
