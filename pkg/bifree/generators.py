# -*- coding: utf-8 -*-

import math
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np
from scipy.spatial.distance import pdist, squareform

from .core import Bigrade, Cell, MultiCriticalComplex, join, normalize_support
from .errors import InvalidBifiltrationError
from .utils import SNAP_DENOMINATOR, snap


FAMILIES = ["wheel", "star", "modified-wheel", "bifunction", "degree-rips", "random"]


def _check_wheel_size(l):
    if l < 4 or l % 2:
        raise ValueError(f"l must be even and at least 4, got {l}")


def _staircase(l):
    return [Bigrade(2 * i, 2 * (l - 1 - i)) for i in range(l)]


def _complex(blocks):
    """Builds a complex from per-dimension lists of (grades, facets)."""
    cells = [
        [
            Cell(i, dim, normalize_support(grades), facets)
            for i, (grades, facets) in enumerate(block)
        ]
        for dim, block in enumerate(blocks)
    ]
    return MultiCriticalComplex(cells)


def _wheel(l, outer_edge, spoke, triangle):
    origin = Bigrade(0, 0)
    vertices = [([origin], []) for __ in range(l)]
    vertices.append((_staircase(l), []))

    edges = [([outer_edge(i)], [i, (i + 1) % l]) for i in range(l)]
    edges += [([spoke(i)], [i, l]) for i in range(l)]

    triangles = [([triangle(i)], [i, l + i, l + (i + 1) % l]) for i in range(l)]
    return _complex([vertices, edges, triangles])


def gen_wheel(l):
    """Returns the wheel with l outer vertices and a center whose
    support is the l-step staircase (2i, 2(l - 1 - i)).

    Outer vertices and edges enter at (0, 0). Even spokes enter at
    (0, 2l - 2) and odd spokes at (2l - 2, 0), so each spoke lifts to a
    single end of the staircase and every triangle has to connect the
    two ends with l - 1 relations.

    Parameters
    ----------
    l : int
        Even number of outer vertices, at least 4.

    Returns
    -------
    complex : bifree.core.MultiCriticalComplex
        l + 1 vertices, 2l edges and l triangles.

    """
    _check_wheel_size(l)
    top = 2 * l - 2

    def spoke(i):
        return Bigrade(0, top) if i % 2 == 0 else Bigrade(top, 0)

    return _wheel(
        l,
        outer_edge=lambda i: Bigrade(0, 0),
        spoke=spoke,
        triangle=lambda i: Bigrade(top, top),
    )


def gen_star(l):
    """Returns the star with l outer vertices around a center with the
    wheel staircase. Each edge is 2-critical at (0, 2l - 2) and
    (2l - 2, 0).
    """
    if l < 2:
        raise ValueError(f"l must be at least 2, got {l}")
    top = 2 * l - 2
    origin = Bigrade(0, 0)
    vertices = [([origin], []) for __ in range(l)]
    vertices.append((_staircase(l), []))
    edges = [([Bigrade(0, top), Bigrade(top, 0)], [i, l]) for i in range(l)]
    return _complex([vertices, edges])


def gen_modified_wheel(l):
    """Returns the wheel with every edge and triangle shifted by
    multiples of u = 1/(4l + 1) so that edge grades, relation grades
    and triangle grades are pairwise incomparable.

    Outer edges move onto the antidiagonal x + y = 2l of the center's
    relations. Even and odd spokes share the antidiagonal
    x + y = 2l - 2 + (l/2 + 1)u and triangles the antidiagonal
    x + y = 4l - 4 + (2l + 1)u.
    """
    _check_wheel_size(l)
    u = Fraction(1, 4 * l + 1)
    top = 2 * l - 2
    half = l // 2

    def outer_edge(i):
        return Bigrade(2 + (i + 1) * u, top - (i + 1) * u)

    def spoke(i):
        if i % 2 == 0:
            e = i // 2
            return Bigrade((e + 1) * u, top + (half - e) * u)
        o = i // 2
        return Bigrade(top + (half - o) * u, (o + 1) * u)

    def triangle(i):
        return Bigrade(top + (half + 1 + i) * u, top + (half + l - i) * u)

    return _wheel(l, outer_edge=outer_edge, spoke=spoke, triangle=triangle)


def bifunction_support(f0, f1, k):
    """Returns the grades where the segment from (0, f0) to (f1, 0)
    meets the k - 2 rays at angles j·pi/(2(k - 1)), together with its
    endpoints, snapped to exact rationals.
    """
    f0 = float(f0)
    f1 = float(f1)
    grades = [Bigrade(0, snap(f0)), Bigrade(snap(f1), 0)]
    if f0 == 0 and f1 == 0:
        return normalize_support(grades)
    for j in range(1, k - 1):
        slope = math.tan(j * math.pi / (2 * (k - 1)))
        t = f0 / (f0 + slope * f1)
        grades.append(Bigrade(snap(t * f1), snap((1 - t) * f0)))
    return normalize_support(grades)


def gen_bifunction(skeleton, f0, f1, k):
    """Returns the k-critical complex of a pair of monotone functions
    on a complex: each cell enters along the segment from (0, f0) to
    (f1, 0), dissected by k - 2 rays through the origin.

    Parameters
    ----------
    skeleton : list
        Per dimension, list of facet index lists.
    f0 : list
        Per dimension, list of nonnegative values.
    f1 : list
        Per dimension, list of nonnegative values.
    k : int
        Criticality bound, at least 2.

    Returns
    -------
    complex : bifree.core.MultiCriticalComplex

    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    blocks = []
    for dim, block in enumerate(skeleton):
        rows = []
        for i, facets in enumerate(block):
            a, b = f0[dim][i], f1[dim][i]
            if a < 0 or b < 0:
                raise InvalidBifiltrationError(
                    f"cell {i} of dimension {dim} has a negative function value"
                )
            for f in facets:
                if f0[dim - 1][f] > a or f1[dim - 1][f] > b:
                    raise InvalidBifiltrationError(
                        f"function values are not monotone on cell {i} of"
                        f" dimension {dim} and its facet {f}"
                    )
            rows.append((list(bifunction_support(a, b, k)), facets))
        blocks.append(rows)
    return _complex(blocks)


def _clique_skeleton(graph, d):
    """Returns the cliques of graph with at most d + 1 vertices as
    sorted tuples, ordered by (max vertex, dimension, vertices). Every
    prefix of this order is closed under faces.
    """
    simplices = [
        tuple(sorted(c)) for c in nx.enumerate_all_cliques(graph) if len(c) <= d + 1
    ]
    simplices.sort(key=lambda s: (s[-1], len(s), s))
    return simplices


def _skeleton_blocks(simplices):
    blocks = []
    index = {}
    for s in sorted(simplices, key=lambda s: (len(s), s[-1], s)):
        dim = len(s) - 1
        while len(blocks) <= dim:
            blocks.append([])
        index[s] = len(blocks[dim])
        facets = [index[f] for f in combinations(s, dim)] if dim else []
        blocks[dim].append((s, facets))
    return blocks


def random_skeleton(n_vertices, d, seed=0, p=None):
    """Returns the clique complex of a seeded random graph truncated
    at dimension d, as per-dimension lists of (vertices, facets).
    """
    if p is None:
        p = min(1.0, 2.0 * (d + 1) / max(n_vertices, 1))
    graph = nx.gnp_random_graph(n_vertices, p, seed=seed)
    return _skeleton_blocks(_clique_skeleton(graph, d))


def random_bifunction(n_vertices, k, d=2, seed=0):
    """Returns a bifunction complex on a random clique complex with
    vertex values drawn uniformly from [0, 1), extended to cells by the
    maximum over their vertices.
    """
    rng = np.random.default_rng(seed)
    blocks = random_skeleton(n_vertices, d, seed=seed)
    g0 = rng.random(n_vertices)
    g1 = rng.random(n_vertices)
    skeleton = [[facets for __, facets in block] for block in blocks]
    f0 = [[float(max(g0[v] for v in s)) for s, __ in block] for block in blocks]
    f1 = [[float(max(g1[v] for v in s)) for s, __ in block] for block in blocks]
    return gen_bifunction(skeleton, f0, f1, k)


def gen_degree_rips(points, max_dim=2, max_edge_length=None):
    """Returns the degree-Rips bifiltration of a point set.

    A simplex is present at (s, c) when its diameter is at most s and
    each of its vertices has at least n - 1 - c neighbours within
    distance s, with n the number of points. Supports are found by
    sweeping the distinct pairwise distances.

    Parameters
    ----------
    points : array_like
        (n, D) coordinates, n >= 2.
    max_dim : int, optional (default: 2)
        Largest simplex dimension, at most 3.
    max_edge_length : float, optional (default: None)
        Leave out simplices with a larger diameter.

    Returns
    -------
    complex : bifree.core.MultiCriticalComplex

    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or len(points) < 2:
        raise ValueError("degree-Rips needs at least 2 points")
    if not 0 <= max_dim <= 3:
        raise ValueError(f"max_dim must be in 0..3, got {max_dim}")

    n = len(points)
    k_max = n - 1
    # distances as integer multiples of 1 / SNAP_DENOMINATOR
    dist = np.rint(squareform(pdist(points)) * SNAP_DENOMINATOR).astype(np.int64)
    thresholds = np.unique(dist)
    neighbours = np.sort(dist, axis=1)

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    limit = None if max_edge_length is None else round(max_edge_length * SNAP_DENOMINATOR)
    for a, b in combinations(range(n), 2):
        if limit is None or dist[a, b] <= limit:
            graph.add_edge(a, b)

    blocks = _skeleton_blocks(_clique_skeleton(graph, max_dim))
    rows = []
    for dim, block in enumerate(blocks):
        row = []
        for s, facets in block:
            diam = max((dist[a, b] for a, b in combinations(s, 2)), default=0)
            grades = []
            last = None
            for t in thresholds[np.searchsorted(thresholds, diam) :]:
                # each row of neighbours includes the point itself at distance 0
                degree = min(
                    int(np.searchsorted(neighbours[v], t, side="right")) - 1 for v in s
                )
                c = k_max - degree
                if last is None or c < last:
                    grades.append(Bigrade(Fraction(int(t), SNAP_DENOMINATOR), c))
                    last = c
                if c == 0:
                    break
            row.append((grades, facets))
        rows.append(row)
    return _complex(rows)


def gen_random(n_cells, k, d, seed=0, grid=8):
    """Returns a seeded random k-critical complex: the first n_cells
    simplices of a truncated random clique complex, each with a random
    antichain of at most k grades on the integer grid 0..grid, repaired
    bottom-up so every facet is present below each grade.

    Parameters
    ----------
    n_cells : int
    k : int
        Criticality bound.
    d : int
        Dimension bound.
    seed : int, optional (default: 0)
    grid : int, optional (default: 8)
        Largest grid coordinate.

    Returns
    -------
    complex : bifree.core.MultiCriticalComplex

    """
    if k < 1 or d < 0 or n_cells < 0:
        raise ValueError("need k >= 1, d >= 0 and n_cells >= 0")
    rng = np.random.default_rng(seed)
    n_vertices = max(2, math.ceil(n_cells / (d + 1)))
    p = min(1.0, 2.0 * (d + 1) / n_vertices)
    graph = nx.gnp_random_graph(n_vertices, p, seed=seed)
    simplices = _clique_skeleton(graph, d)[:n_cells]
    blocks = _skeleton_blocks(simplices)

    cells = []
    for dim, block in enumerate(blocks):
        row = []
        for i, (__, facets) in enumerate(block):
            r = int(rng.integers(1, k + 1))
            r = min(r, grid + 1)
            xs = np.sort(rng.choice(grid + 1, size=r, replace=False))
            ys = np.sort(rng.choice(grid + 1, size=r, replace=False))[::-1]
            grades = []
            for x, y in zip(xs, ys):
                g = Bigrade(int(x), int(y))
                for f in facets:
                    face = cells[dim - 1][f].support
                    if not face.contains(g):
                        g = join(g, _best_generator(face, g))
                grades.append(g)
            row.append(Cell(i, dim, normalize_support(grades), facets))
        cells.append(row)
    return MultiCriticalComplex(cells)


def _best_generator(support, g):
    """Returns the generator of support whose join with g is smallest
    in total, the smaller first coordinate on ties.
    """
    return min(
        support,
        key=lambda h: (max(h.x, g.x) + max(h.y, g.y), h.x),
    )


class GeneratorParams(object):
    """Defines the parameters of one generated instance.

    Parameters
    ----------
    family : str
        One of 'wheel', 'star', 'modified-wheel', 'bifunction',
        'degree-rips' or 'random'.
    size : int
        l for the wheel families and the star, the number of points or
        vertices for degree-rips and bifunction, the number of cells for
        random.
    k : int, optional (default: 4)
        Criticality bound (bifunction, random).
    d : int, optional (default: 2)
        Dimension bound.
    seed : int, optional (default: 0)

    """

    def __init__(self, family, size, k=4, d=2, seed=0):
        self.family = family
        self.size = size
        self.k = k
        self.d = d
        self.seed = seed

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} family={self.family} size={self.size}"
            f" k={self.k} d={self.d} seed={self.seed}>"
        )

    def validate(self):
        if self.family not in FAMILIES:
            raise NotImplementedError(
                "Unknown family specified. Use one of " + ", ".join(f"'{f}'" for f in FAMILIES)
            )
        if self.family in ["wheel", "modified-wheel"]:
            _check_wheel_size(self.size)
        if self.family == "bifunction" and self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")

    def build(self):
        """Generates the instance."""
        self.validate()
        if self.family == "wheel":
            return gen_wheel(self.size)
        if self.family == "star":
            return gen_star(self.size)
        if self.family == "modified-wheel":
            return gen_modified_wheel(self.size)
        if self.family == "bifunction":
            return random_bifunction(self.size, self.k, d=self.d, seed=self.seed)
        if self.family == "degree-rips":
            rng = np.random.default_rng(self.seed)
            return gen_degree_rips(rng.random((self.size, 2)), max_dim=min(self.d, 3))
        return gen_random(self.size, self.k, self.d, seed=self.seed)
