# -*- coding: utf-8 -*-

from collections import defaultdict
from functools import lru_cache

from .errors import ResolutionInvariantError
from .linalg import SparseBitMatrix


def _step(v):
    """Returns 2^r for the largest r with 2^r | v (v > 0)."""
    return v & -v


class LogPathGraph(object):
    """Defines the path graph on vertices 0..m extended by shortcut
    edges (x, x + 2^r) with 2^r | x, and the triangles
    (v - 2^r, v, v + 2^r) that fill it. Edges and triangles that
    overshoot m are left out.

    Parameters
    ----------
    m : int
        Last vertex index.

    Attributes
    ----------
    edges : list
        (a, b) pairs ordered by length, then by start. The path edges
        (j, j + 1) come first.
    triangles : list
        (a, v, b) triples ordered by their middle vertex v.
    p1 : bifree.linalg.SparseBitMatrix
        Boundary from edges to vertices.
    p2 : bifree.linalg.SparseBitMatrix
        Boundary from triangles to edges.

    """

    def __init__(self, m):
        if m < 0:
            raise ValueError("m must be nonnegative")
        self.m = m

        self.edges = []
        length = 1
        while length <= m:
            for x in range(0, m - length + 1, length):
                self.edges.append((x, x + length))
            length *= 2
        self.edge_index = {e: i for i, e in enumerate(self.edges)}

        self.triangles = []
        self.triangle_index = {}
        for v in range(1, m):
            step = _step(v)
            if v + step <= m:
                self.triangle_index[v] = len(self.triangles)
                self.triangles.append((v - step, v, v + step))

        self.p1 = SparseBitMatrix(m + 1, self.edges, check=False)
        self.p2 = SparseBitMatrix(
            len(self.edges),
            [
                sorted(
                    [
                        self.edge_index[(a, v)],
                        self.edge_index[(v, b)],
                        self.edge_index[(a, b)],
                    ]
                )
                for a, v, b in self.triangles
            ],
            check=False,
        )

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} m={self.m} edges={len(self.edges)}"
            f" triangles={len(self.triangles)}>"
        )

    @property
    def n_vertices(self):
        return self.m + 1

    def next_vertex(self, z, y):
        """Takes the biggest step from z towards y that is an edge."""
        step = 1
        while True:
            bigger = 2 * step
            if (z == 0 or z % bigger == 0) and z + bigger <= y:
                step = bigger
            else:
                return z + step

    def shortest_monotone_path(self, x, y):
        return shortest_monotone_path(self, x, y)

    def decompose_and_fill(self, edge_indices):
        return decompose_and_fill(self, edge_indices)


@lru_cache(maxsize=256)
def log_path_graph(m):
    """Returns the (shared) LogPathGraph with last vertex m."""
    return LogPathGraph(m)


def shortest_monotone_path(graph, x, y):
    """Returns the unique shortest monotone path from x to y.

    Parameters
    ----------
    graph : bifree.graph.LogPathGraph
    x : int
    y : int
        0 <= x < y <= graph.m

    Returns
    -------
    path : list
        List of (a, b) edges with a < b, in walking order.

    """
    if not 0 <= x < y <= graph.m:
        raise ValueError(f"need 0 <= x < y <= {graph.m}, got x={x} y={y}")
    path = []
    z = x
    while z < y:
        w = graph.next_vertex(z, y)
        path.append((z, w))
        z = w
    return path


def _euler_circuit(adjacency, used, start_node):
    """Walks a closed Euler circuit through the unused edges reachable
    from start_node (Hierholzer). Returns the vertex sequence.
    """
    pointer = defaultdict(int)
    current_path = [start_node]
    circuit = []
    while current_path:
        v = current_path[-1]
        neighbours = adjacency[v]
        while pointer[v] < len(neighbours) and used[neighbours[pointer[v]][1]]:
            pointer[v] += 1
        if pointer[v] < len(neighbours):
            w, e = neighbours[pointer[v]]
            used[e] = True
            current_path.append(w)
        else:
            circuit.append(current_path.pop())
    circuit.reverse()
    return circuit


def _simple_cycles(circuit):
    """Splits a closed walk into simple cycles with a stack of
    vertices. Each cycle is returned as its vertex list.
    """
    stack = []
    position = {}
    cycles = []
    for v in circuit:
        if v in position:
            i = position[v]
            cycle = stack[i:]
            for w in stack[i + 1 :]:
                del position[w]
            del stack[i + 1 :]
            cycles.append(cycle)
        else:
            position[v] = len(stack)
            stack.append(v)
    return cycles


def decompose_and_fill(graph, edge_indices):
    """Returns the triangles whose boundary sum is the given Z2 cycle.

    The cycle is walked as an Euler circuit starting at its smallest
    vertex, split into simple cycles, and each simple cycle is filled
    with the triangles of its vertices other than the two ends of its
    longest edge. Triangles are summed over Z2 across cycles.

    Parameters
    ----------
    graph : bifree.graph.LogPathGraph
    edge_indices : list
        Indices into graph.edges, each at most once.

    Returns
    -------
    triangles : list
        Sorted triangle indices.

    """
    edge_indices = list(edge_indices)
    if len(set(edge_indices)) != len(edge_indices):
        raise ResolutionInvariantError("cycle contains a repeated edge")

    adjacency = defaultdict(list)
    for e in edge_indices:
        a, b = graph.edges[e]
        adjacency[a].append((b, e))
        adjacency[b].append((a, e))
    for v in sorted(adjacency):
        if len(adjacency[v]) % 2:
            raise ResolutionInvariantError(f"vertex {v} has odd degree in the cycle")

    used = {e: False for e in edge_indices}
    filled = set()
    for start_node in sorted(adjacency):
        if all(used[e] for __, e in adjacency[start_node]):
            continue
        circuit = _euler_circuit(adjacency, used, start_node)
        for cycle in _simple_cycles(circuit):
            lo, hi = min(cycle), max(cycle)
            if (lo, hi) not in graph.edge_index:
                raise ResolutionInvariantError(
                    f"simple cycle {cycle} has no spanning longest edge"
                )
            for v in cycle:
                if v == lo or v == hi:
                    continue
                filled.symmetric_difference_update([graph.triangle_index[v]])
    return sorted(filled)
