# -*- coding: utf-8 -*-

import json
from bisect import bisect_left
from collections import Counter
from fractions import Fraction
from functools import reduce

from tabulate import tabulate

from .errors import EmptySupportError
from .linalg import SparseBitMatrix, mat_mul
from .utils import format_number


class Bigrade(object):
    """Defines an exact point of the two-parameter grid.

    Parameters
    ----------
    x : int, str or fractions.Fraction
        First coordinate.
    y : int, str or fractions.Fraction
        Second coordinate.

    """

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = Fraction(x)
        self.y = Fraction(y)

    def __repr__(self):
        return (
            f"<{self.__class__.__name__}"
            f" x={format_number(self.x)} y={format_number(self.y)}>"
        )

    def __iter__(self):
        yield self.x
        yield self.y

    def __eq__(self, other):
        if not isinstance(other, Bigrade):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __le__(self, other):
        return self.x <= other.x and self.y <= other.y

    def __ge__(self, other):
        return other.x <= self.x and other.y <= self.y

    @property
    def key(self):
        """Lexicographic sort key."""
        return (self.x, self.y)

    def comparable(self, other):
        return self <= other or other <= self

    def join(self, other):
        return join(self, other)


def join(a, b):
    """Returns the componentwise maximum of two bigrades."""
    return Bigrade(max(a.x, b.x), max(a.y, b.y))


def meet(a, b):
    """Returns the componentwise minimum of two bigrades."""
    return Bigrade(min(a.x, b.x), min(a.y, b.y))


class Support(object):
    """Defines the minimal generating antichain of an upset.

    Generators are kept sorted by increasing x (and therefore
    decreasing y). Use :func:`normalize_support` to build one from an
    arbitrary list of grades.

    Parameters
    ----------
    generators : list
        List of bifree.core.Bigrade.

    """

    __slots__ = ("generators", "_neg_ys")

    def __init__(self, generators):
        self.generators = tuple(generators)
        self._neg_ys = [-g.y for g in self.generators]

    def __repr__(self):
        return f"<{self.__class__.__name__} n={len(self)}>"

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, idx):
        return self.generators[idx]

    def __eq__(self, other):
        if not isinstance(other, Support):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def is_antichain(self):
        """Whether generators are pairwise incomparable and sorted by
        strictly increasing x.
        """
        for a, b in zip(self.generators, self.generators[1:]):
            if not (a.x < b.x and a.y > b.y):
                return False
        return True

    def first_below(self, s):
        """Returns the index of the generator with the smallest first
        coordinate among those below s, or None.

        The generators below s form a contiguous run ending at the last
        generator with x <= s.x; its start is found by binary search on
        the decreasing second coordinates.
        """
        i = bisect_left(self._neg_ys, -s.y)
        if i < len(self.generators) and self.generators[i].x <= s.x:
            return i
        return None

    def contains(self, s):
        """Whether s lies in the upset, i.e. some generator is <= s."""
        return self.first_below(s) is not None

    def join_all(self):
        """Returns the join of all generators."""
        return Bigrade(self.generators[-1].x, self.generators[0].y)


def normalize_support(grades):
    """Returns the minimal generating antichain of the upset generated
    by grades.

    Parameters
    ----------
    grades : list
        Nonempty list of bifree.core.Bigrade.

    Returns
    -------
    support : bifree.core.Support

    """
    grades = list(grades)
    if not grades:
        raise EmptySupportError("a cell needs at least one entry grade")

    kept = []
    for g in sorted(set(grades), key=lambda g: g.key):
        if not kept or g.y < kept[-1].y:
            kept.append(g)
    return Support(kept)


class Cell(object):
    """Defines a cell of a multi-critical complex.

    Parameters
    ----------
    id : int
        Index within its dimension block.
    dim : int
        Dimension.
    support : bifree.core.Support
        Entry grades.
    facets : list
        Indices of the cells of dimension dim - 1 in the Z2 boundary.

    """

    __slots__ = ("id", "dim", "support", "facets")

    def __init__(self, id, dim, support, facets=()):
        self.id = id
        self.dim = dim
        self.support = support
        self.facets = tuple(sorted(facets))

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} id={self.id} dim={self.dim}"
            f" n={len(self.support)} facets={list(self.facets)}>"
        )

    @property
    def criticality(self):
        return len(self.support)


class Violation(object):
    """Defines a single problem found by :func:`validate`."""

    BAD_INDEX = "bad index"
    NON_ANTICHAIN = "non-antichain support"
    FACE_SUPPORT = "face-support violation"
    BOUNDARY_SQUARED = "boundary squared nonzero"
    VERTEX_FACETS = "vertex with facets"

    __slots__ = ("dim", "cell_id", "reason", "detail")

    def __init__(self, dim, cell_id, reason, detail=""):
        self.dim = dim
        self.cell_id = cell_id
        self.reason = reason
        self.detail = detail

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} dim={self.dim} cell={self.cell_id}"
            f" reason='{self.reason}'>"
        )

    def __str__(self):
        text = f"cell {self.cell_id} of dimension {self.dim}: {self.reason}"
        if self.detail:
            text = f"{text} ({self.detail})"
        return text

    def to_dict(self):
        return {
            "dim": self.dim,
            "cell": self.cell_id,
            "reason": self.reason,
            "detail": self.detail,
        }


class ValidationReport(object):
    """Lists every violation found in a complex; empty when valid."""

    def __init__(self, violations=None):
        self.violations = list(violations or [])

    def __repr__(self):
        return f"<{self.__class__.__name__} valid={self.is_valid} n={len(self)}>"

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    @property
    def is_valid(self):
        return not self.violations

    def reasons(self):
        return [v.reason for v in self.violations]

    def to_text(self):
        if self.is_valid:
            return "valid"
        rows = [[v.dim, v.cell_id, v.reason, v.detail] for v in self.violations]
        return tabulate(rows, headers=["dim", "cell", "reason", "detail"])


class MultiCriticalComplex(object):
    """Defines a k-critical bifiltered cell complex over Z2.

    Parameters
    ----------
    blocks : list
        List of cell lists, indexed by dimension 0..d.

    Attributes
    ----------
    dimension : int
        Top dimension d (-1 for an empty complex).
    criticality : int
        Largest support size k.
    size : int
        Description size n, the total number of support generators.

    """

    def __init__(self, blocks):
        self.blocks = [list(b) for b in blocks]
        while self.blocks and not self.blocks[-1]:
            self.blocks.pop()

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} dim={self.dimension}"
            f" cells={self.n_cells} n={self.size} k={self.criticality}>"
        )

    def __eq__(self, other):
        if not isinstance(other, MultiCriticalComplex):
            return NotImplemented
        return self.to_lists() == other.to_lists()

    @classmethod
    def from_lists(cls, blocks):
        """Builds a complex from per-dimension lists of
        (grades, facets) pairs, grades given as (x, y) tuples or
        Bigrade objects. Supports are normalized.
        """
        cells = []
        for dim, block in enumerate(blocks):
            row = []
            for i, (grades, facets) in enumerate(block):
                grades = [g if isinstance(g, Bigrade) else Bigrade(*g) for g in grades]
                row.append(Cell(i, dim, normalize_support(grades), facets))
            cells.append(row)
        return cls(cells)

    def to_lists(self):
        return [
            [([g.key for g in c.support], list(c.facets)) for c in block]
            for block in self.blocks
        ]

    @property
    def dimension(self):
        return len(self.blocks) - 1

    @property
    def criticality(self):
        return max((len(c.support) for c in self.cells()), default=0)

    @property
    def size(self):
        return sum(len(c.support) for c in self.cells())

    @property
    def n_cells(self):
        return sum(len(b) for b in self.blocks)

    def block(self, dim):
        """Returns the cells of the given dimension (empty outside
        0..d).
        """
        if 0 <= dim < len(self.blocks):
            return self.blocks[dim]
        return []

    def cells(self):
        for block in self.blocks:
            yield from block

    def is_free(self):
        return all(len(c.support) == 1 for c in self.cells())

    def grade_bounds(self):
        """Returns the componentwise minimum and maximum of all support
        grades.
        """
        grades = [g for c in self.cells() for g in c.support]
        if not grades:
            return None, None
        return reduce(meet, grades), reduce(join, grades)

    def base_grade(self):
        """Returns the componentwise minimum of all coordinates."""
        return self.grade_bounds()[0]

    def coordinates(self):
        """Returns the sorted distinct x and y coordinates."""
        xs = sorted({g.x for c in self.cells() for g in c.support})
        ys = sorted({g.y for c in self.cells() for g in c.support})
        return xs, ys

    def boundary(self, dim):
        """Returns the ungraded Z2 boundary from dimension dim to
        dim - 1.
        """
        return SparseBitMatrix(
            len(self.block(dim - 1)), [c.facets for c in self.block(dim)]
        )

    def validate(self):
        return validate(self)


def validate(complex):
    """Checks the cell and complex invariants of a multi-critical
    complex.

    Parameters
    ----------
    complex : bifree.core.MultiCriticalComplex

    Returns
    -------
    report : bifree.core.ValidationReport
        Violations in dimension then cell order.

    """
    violations = []
    for dim, block in enumerate(complex.blocks):
        faces = complex.block(dim - 1)
        for cell in block:
            if not cell.support.is_antichain():
                violations.append(Violation(dim, cell.id, Violation.NON_ANTICHAIN))

            if dim == 0:
                if cell.facets:
                    violations.append(Violation(dim, cell.id, Violation.VERTEX_FACETS))
                continue

            counts = Counter(cell.facets)
            bad = [f for f in cell.facets if not 0 <= f < len(faces)]
            repeated = sorted(f for f, n in counts.items() if n > 1)
            if bad:
                detail = f"facet {bad[0]} not in 0..{len(faces) - 1}"
                violations.append(Violation(dim, cell.id, Violation.BAD_INDEX, detail))
                continue
            if repeated:
                detail = f"facet {repeated[0]} repeated"
                violations.append(Violation(dim, cell.id, Violation.BAD_INDEX, detail))
                continue

            for f in cell.facets:
                face = faces[f]
                for g in cell.support:
                    if not face.support.contains(g):
                        at = f"({format_number(g.x)}, {format_number(g.y)})"
                        detail = f"facet {f} is absent at {at}"
                        violations.append(
                            Violation(dim, cell.id, Violation.FACE_SUPPORT, detail)
                        )
                        break

            if dim >= 2:
                parity = Counter()
                for f in cell.facets:
                    parity.update(faces[f].facets)
                odd = sorted(c for c, n in parity.items() if n % 2)
                if odd:
                    detail = f"face {odd[0]} appears an odd number of times"
                    violations.append(
                        Violation(dim, cell.id, Violation.BOUNDARY_SQUARED, detail)
                    )
    return ValidationReport(violations)


class FreeChainComplex(object):
    """Defines a free (1-critical) chain complex: one bigrade per basis
    element and a Z2 boundary matrix per dimension.

    Parameters
    ----------
    grades : list
        Per dimension, list of bifree.core.Bigrade.
    boundaries : list
        Per dimension i, a SparseBitMatrix from dimension i to i - 1.
        The dimension 0 boundary has no rows.
    block_sizes : list, optional (default: None)
        Per dimension, sizes of the generator, relation and syzygy
        blocks of the basis.

    Attributes
    ----------
    stats : bifree.core.RunStats
        Set when the complex was computed by a resolver.

    """

    def __init__(self, grades, boundaries, block_sizes=None):
        self.grades = [list(g) for g in grades]
        self.boundaries = list(boundaries)
        if block_sizes is None:
            block_sizes = [(len(g),) for g in self.grades]
        self.block_sizes = [tuple(b) for b in block_sizes]
        self.stats = None
        self._trim()

    def _trim(self):
        while self.grades and not self.grades[-1]:
            self.grades.pop()
            self.boundaries.pop()
            self.block_sizes.pop()

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} dim={self.dimension}"
            f" basis={self.basis_counts} nnz={self.nnz()}>"
        )

    @classmethod
    def from_multicritical(cls, complex):
        """Converts a 1-critical complex without change of basis."""
        if not complex.is_free():
            raise ValueError("complex is not 1-critical")
        grades = [[c.support[0] for c in block] for block in complex.blocks]
        boundaries = [complex.boundary(d) for d in range(len(complex.blocks))]
        return cls(grades, boundaries)

    def to_multicritical(self):
        blocks = []
        for dim, grades in enumerate(self.grades):
            boundary = self.boundaries[dim]
            blocks.append(
                [Cell(i, dim, Support([g]), boundary[i]) for i, g in enumerate(grades)]
            )
        return MultiCriticalComplex(blocks)

    @property
    def dimension(self):
        return len(self.grades) - 1

    @property
    def basis_counts(self):
        return [len(g) for g in self.grades]

    def boundary(self, dim):
        if 0 <= dim < len(self.boundaries):
            return self.boundaries[dim]
        rows = len(self.grades[dim - 1]) if 0 <= dim - 1 < len(self.grades) else 0
        return SparseBitMatrix.zeros(rows, 0)

    def nnz(self):
        return sum(b.nnz for b in self.boundaries)

    def description_size(self):
        """Number of nonzero boundary entries plus basis grades."""
        return self.nnz() + sum(self.basis_counts)

    def iter_blocks(self):
        """Yields (dim, grades, boundary) from the top dimension down
        to 0.
        """
        for dim in range(self.dimension, -1, -1):
            yield dim, self.grades[dim], self.boundaries[dim]

    def boundary_squared_violations(self):
        """Returns the dimensions i with a nonzero composite of the
        boundaries of i and i + 1.
        """
        bad = []
        for dim in range(1, self.dimension):
            if not mat_mul(self.boundaries[dim], self.boundaries[dim + 1]).is_zero():
                bad.append(dim)
        return bad

    def grading_violations(self):
        """Returns (dim, row, col) for entries whose row grade is not
        below the column grade.
        """
        bad = []
        for dim in range(1, self.dimension + 1):
            rows = self.grades[dim - 1]
            for j, col in enumerate(self.boundaries[dim]):
                cg = self.grades[dim][j]
                for r in col:
                    if not rows[r] <= cg:
                        bad.append((dim, r, j))
        return bad


class FIRep(object):
    """Defines a free implicit representation of one homology module:
    graded matrices f: Y -> X and g: Z -> Y with f·g = 0, so that
    H_dim is ker f / im g pointwise.

    Parameters
    ----------
    dim : int
        Homology degree m.
    x_grades : list
        Grades of X, one per (m-1)-cell, all at the base grade.
    y_grades : list
        Grades of Y, one per (m-cell, generator).
    z_grades : list
        Grades of Z, the (m+1-cell, generator) block followed by the
        (m-cell, relation) block.
    f : bifree.linalg.SparseBitMatrix
    g : bifree.linalg.SparseBitMatrix

    """

    def __init__(self, dim, x_grades, y_grades, z_grades, f, g):
        self.dim = dim
        self.x_grades = list(x_grades)
        self.y_grades = list(y_grades)
        self.z_grades = list(z_grades)
        self.f = f
        self.g = g

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} dim={self.dim}"
            f" shape=({len(self.z_grades)}, {len(self.y_grades)}, {len(self.x_grades)})>"
        )

    def is_chain(self):
        return mat_mul(self.f, self.g).is_zero()


class RunStats(object):
    """Collects the statistics of one resolution run.

    Attributes
    ----------
    nnz : dict
        Nonzeros per block, keyed like 'f0_2' or 'p1_1'.
    timings : dict
        Wall time in seconds per step.

    """

    STEPS = [
        "build_resolutions",
        "compute_f0",
        "compute_corrections",
        "compute_higher_corrections",
        "assemble",
    ]

    def __init__(self, algorithm, n, k, d):
        self.algorithm = algorithm
        self.n = n
        self.k = k
        self.d = d
        self.basis_counts = []
        self.nnz = {}
        self.timings = {}
        self.io_time = 0.0

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} algorithm={self.algorithm}"
            f" n={self.n} nnz={self.total_nnz}>"
        )

    def record(self, name, dim, matrix):
        if matrix is not None:
            self.nnz[f"{name}_{dim}"] = matrix.nnz

    def block_nnz(self, name):
        """Sums the nonzeros of one block kind over all dimensions."""
        return sum(v for k, v in self.nnz.items() if k.rsplit("_", 1)[0] == name)

    @property
    def total_nnz(self):
        return sum(self.nnz.values())

    @property
    def total_time(self):
        return sum(self.timings.values())

    @property
    def peak_memory(self):
        """Estimated bytes held by stored matrix entries."""
        return 8 * self.total_nnz

    def to_dict(self):
        return {
            "algorithm": self.algorithm,
            "input": {"n": self.n, "k": self.k, "d": self.d},
            "basis_counts": list(self.basis_counts),
            "nnz": dict(sorted(self.nnz.items())),
            "total_nnz": self.total_nnz,
            "timings": {s: self.timings.get(s, 0.0) for s in self.STEPS},
            "io_time": self.io_time,
            "peak_memory": self.peak_memory,
        }

    def to_json(self, path=None, **kwargs):
        kw = {"indent": 2}
        kw.update(kwargs)
        text = json.dumps(self.to_dict(), **kw)
        if path is not None:
            with open(path, "w") as f:
                f.write(text)
        return text

    def summary(self):
        rows = [[s, f"{self.timings.get(s, 0.0):.4f}"] for s in self.STEPS]
        rows.append(["total nnz", self.total_nnz])
        rows.append(["basis", " ".join(str(c) for c in self.basis_counts)])
        return tabulate(rows, headers=[self.algorithm, "value"])
