# -*- coding: utf-8 -*-

from .core import join
from .errors import ResolutionInvariantError
from .graph import log_path_graph
from .linalg import SparseBitMatrix


class BaseResolution(object):
    """Defines the free resolution of the upset module of one cell.

    Generators sit at the support grades, relations at joins of pairs
    of generators and syzygies at joins of relation endpoints.

    Parameters
    ----------
    support : bifree.core.Support

    Attributes
    ----------
    generators : tuple
        Generator grades (the support antichain).
    relations : list
        Relation grades.
    syzygies : list
        Syzygy grades.
    p1 : bifree.linalg.SparseBitMatrix
        Boundary from relations to generators.
    p2 : bifree.linalg.SparseBitMatrix
        Boundary from syzygies to relations.

    """

    def __init__(self, support):
        self.support = support
        self.generators = support.generators

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} generators={self.n_generators}"
            f" relations={self.n_relations} syzygies={self.n_syzygies}>"
        )

    @property
    def n_generators(self):
        return len(self.generators)

    @property
    def n_relations(self):
        return len(self.relations)

    @property
    def n_syzygies(self):
        return len(self.syzygies)

    def connect(self, j, l):
        """Returns relation indices whose p1 image is g_j + g_l."""
        raise NotImplementedError

    def fill(self, relation_indices):
        """Returns syzygy indices whose p2 image is the given cycle."""
        raise NotImplementedError


class PathResolution(BaseResolution):
    """Generators joined by a path: relation j connects generators j
    and j + 1 at their join.
    """

    def __init__(self, support):
        super().__init__(support)
        gens = self.generators
        self.relations = [join(gens[j], gens[j + 1]) for j in range(len(gens) - 1)]
        self.syzygies = []
        self.p1 = SparseBitMatrix(
            len(gens), [(j, j + 1) for j in range(len(self.relations))], check=False
        )
        self.p2 = SparseBitMatrix.zeros(len(self.relations), 0)

    def connect(self, j, l):
        lo, hi = min(j, l), max(j, l)
        return list(range(lo, hi))

    def fill(self, relation_indices):
        if relation_indices:
            raise ResolutionInvariantError("a path resolution has no syzygies")
        return []


class LogPathResolution(BaseResolution):
    """Generators joined by the log-path graph with shortcut edges, and
    its triangles as syzygies. Generator j is vertex j.
    """

    def __init__(self, support):
        super().__init__(support)
        gens = self.generators
        self.graph = log_path_graph(len(gens) - 1)
        self.relations = [join(gens[a], gens[b]) for a, b in self.graph.edges]
        self.syzygies = []
        for a, v, b in self.graph.triangles:
            z = join(gens[a], gens[b])
            if join(z, gens[v]) != z:
                raise ResolutionInvariantError(
                    f"triangle ({a}, {v}, {b}) is not graded by its longest edge"
                )
            self.syzygies.append(z)
        self.p1 = self.graph.p1
        self.p2 = self.graph.p2

    def connect(self, j, l):
        if j == l:
            return []
        lo, hi = min(j, l), max(j, l)
        index = self.graph.edge_index
        return [index[e] for e in self.graph.shortest_monotone_path(lo, hi)]

    def fill(self, relation_indices):
        return self.graph.decompose_and_fill(relation_indices)
