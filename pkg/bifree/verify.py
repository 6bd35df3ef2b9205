# -*- coding: utf-8 -*-

import json
import warnings

from tabulate import tabulate

from .core import Bigrade, FreeChainComplex, MultiCriticalComplex
from .linalg import rank
from .utils import format_number, grid_sample

# default number of grid grades checked before sampling kicks in
GRID_CAP = 4096


def _members(complex, s):
    """Returns, per dimension, the indices of basis elements present
    at grade s.
    """
    if isinstance(complex, FreeChainComplex):
        return [[i for i, g in enumerate(grades) if g <= s] for grades in complex.grades]
    return [[c.id for c in block if c.support.contains(s)] for block in complex.blocks]


def evaluate_at_grade(complex, s):
    """Evaluates a graded complex at a grade.

    Parameters
    ----------
    complex : bifree.core.MultiCriticalComplex or bifree.core.FreeChainComplex
    s : bifree.core.Bigrade

    Returns
    -------
    boundaries : list
        Per dimension i, the boundary from dimension i to i - 1
        restricted to the basis elements present at s. Its column count
        is the dimension of the chain space.

    """
    members = _members(complex, s)
    boundaries = []
    for dim, cols in enumerate(members):
        rows = members[dim - 1] if dim > 0 else []
        boundaries.append(complex.boundary(dim).submatrix(rows, cols))
    return boundaries


def _betti_numbers(boundaries):
    ranks = [rank(b) for b in boundaries] + [0]
    return [b.n_cols - ranks[i] - ranks[i + 1] for i, b in enumerate(boundaries)]


def betti_at_grade(complex, s, dim):
    """Returns the Z2 Betti number of complex in dimension dim at grade
    s.
    """
    boundaries = evaluate_at_grade(complex, s)
    if not 0 <= dim < len(boundaries):
        return 0
    betti = _betti_numbers(boundaries)
    return betti[dim]


def pointwise_homology(complex, grades):
    """Returns a dict mapping (x, y) to the list of Betti numbers of
    complex at that grade, trailing zeros removed.
    """
    out = {}
    for s in grades:
        if not isinstance(s, Bigrade):
            s = Bigrade(*s)
        betti = _betti_numbers(evaluate_at_grade(complex, s))
        while betti and betti[-1] == 0:
            betti.pop()
        out[s.key] = betti
    return out


def firep_homology_at_grade(firep, s):
    """Returns dim ker f - rank g at grade s, the dimension of the
    homology module represented by firep.
    """
    xs = [i for i, g in enumerate(firep.x_grades) if g <= s]
    ys = [i for i, g in enumerate(firep.y_grades) if g <= s]
    zs = [i for i, g in enumerate(firep.z_grades) if g <= s]
    f = firep.f.submatrix(xs, ys)
    g = firep.g.submatrix(ys, zs)
    return len(ys) - rank(f) - rank(g)


def grade_grid(*complexes):
    """Returns the sorted distinct x and y coordinates of all grades of
    the given complexes.
    """
    xs, ys = set(), set()
    for complex in complexes:
        if isinstance(complex, FreeChainComplex):
            grades = [g for block in complex.grades for g in block]
        else:
            grades = [g for c in complex.cells() for g in c.support]
        xs.update(g.x for g in grades)
        ys.update(g.y for g in grades)
    return sorted(xs), sorted(ys)


class Mismatch(object):
    """Defines a grade and dimension where two complexes have different
    Betti numbers.
    """

    __slots__ = ("grade", "dim", "expected", "found")

    def __init__(self, grade, dim, expected, found):
        self.grade = grade
        self.dim = dim
        self.expected = expected
        self.found = found

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} grade=({format_number(self.grade.x)},"
            f" {format_number(self.grade.y)}) dim={self.dim}"
            f" expected={self.expected} found={self.found}>"
        )

    def to_dict(self):
        return {
            "x": format_number(self.grade.x),
            "y": format_number(self.grade.y),
            "dim": self.dim,
            "expected": self.expected,
            "found": self.found,
        }


class QuasiIsoReport(object):
    """Result of :func:`check_quasi_iso`.

    Attributes
    ----------
    n_grades : int
        Number of grades compared.
    sampled : bool
        Whether the grid was larger than grid_cap and was sampled.
    mismatches : list
        List of bifree.verify.Mismatch in grade order.

    """

    def __init__(self, n_grades, sampled, mismatches):
        self.n_grades = n_grades
        self.sampled = sampled
        self.mismatches = mismatches

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} ok={self.ok} grades={self.n_grades}"
            f" mismatches={len(self.mismatches)}>"
        )

    @property
    def ok(self):
        return not self.mismatches

    @property
    def first_mismatch(self):
        return self.mismatches[0] if self.mismatches else None

    def to_dict(self):
        return {
            "check": "quasi-isomorphism",
            "ok": self.ok,
            "grades": self.n_grades,
            "sampled": self.sampled,
            "mismatches": len(self.mismatches),
            "first_mismatch": self.first_mismatch.to_dict() if self.mismatches else None,
        }

    def to_text(self):
        rows = [["grades compared", self.n_grades], ["sampled", self.sampled]]
        rows.append(["mismatches", len(self.mismatches)])
        if self.mismatches:
            m = self.first_mismatch.to_dict()
            where = f"({m['x']}, {m['y']}) dim {m['dim']}"
            rows.append(["first mismatch", f"{where}: {m['expected']} != {m['found']}"])
        return tabulate(rows, headers=["quasi-isomorphism", "ok" if self.ok else "FAILED"])


class FreeComplexReport(object):
    """Result of :func:`check_free_complex`.

    Attributes
    ----------
    boundary_squared : list
        Dimensions i where the boundary of i composed with the boundary
        of i + 1 is nonzero.
    grading : list
        (dim, row, col) entries whose row grade is not below the column
        grade.

    """

    def __init__(self, boundary_squared, grading):
        self.boundary_squared = boundary_squared
        self.grading = grading

    def __repr__(self):
        return f"<{self.__class__.__name__} ok={self.ok}>"

    @property
    def ok(self):
        return not self.boundary_squared and not self.grading

    def to_dict(self):
        return {
            "check": "free-complex",
            "ok": self.ok,
            "boundary_squared": self.boundary_squared,
            "grading": [list(e) for e in self.grading[:10]],
            "grading_violations": len(self.grading),
        }

    def to_text(self):
        rows = [
            ["boundary squared nonzero in", " ".join(map(str, self.boundary_squared)) or "-"],
            ["grading violations", len(self.grading)],
        ]
        return tabulate(rows, headers=["free complex", "ok" if self.ok else "FAILED"])


def check_free_complex(complex):
    """Checks that the boundaries of a free complex compose to zero and
    respect the grading.

    Parameters
    ----------
    complex : bifree.core.FreeChainComplex

    Returns
    -------
    report : bifree.verify.FreeComplexReport

    """
    return FreeComplexReport(
        complex.boundary_squared_violations(), complex.grading_violations()
    )


def check_quasi_iso(input, output, grid_cap=GRID_CAP, seed=0):
    """Compares the pointwise Betti numbers of two complexes on the grid
    of their coordinates.

    Parameters
    ----------
    input : bifree.core.MultiCriticalComplex
    output : bifree.core.FreeChainComplex or bifree.core.MultiCriticalComplex
    grid_cap : int, optional (default: 4096)
        Largest number of grades to compare. Larger grids are sampled
        with a seeded generator, keeping the four corners.
    seed : int, optional (default: 0)

    Returns
    -------
    report : bifree.verify.QuasiIsoReport

    """
    xs, ys = grade_grid(input, output)
    sampled = len(xs) * len(ys) > grid_cap
    if sampled:
        warnings.warn(
            f"grid has {len(xs) * len(ys)} grades, comparing a sample of {grid_cap}"
        )
    points = grid_sample(xs, ys, grid_cap, seed=seed)

    mismatches = []
    for x, y in points:
        s = Bigrade(x, y)
        expected = _betti_numbers(evaluate_at_grade(input, s))
        found = _betti_numbers(evaluate_at_grade(output, s))
        top = max(len(expected), len(found))
        expected += [0] * (top - len(expected))
        found += [0] * (top - len(found))
        for dim, (a, b) in enumerate(zip(expected, found)):
            if a != b:
                mismatches.append(Mismatch(s, dim, a, b))
    return QuasiIsoReport(len(points), sampled, mismatches)


def reports_to_json_lines(*reports):
    """Returns one JSON object per report, one per line."""
    return "\n".join(json.dumps(r.to_dict()) for r in reports) + "\n"


def as_free(complex):
    """Returns complex as a FreeChainComplex when it is 1-critical."""
    if isinstance(complex, MultiCriticalComplex):
        return FreeChainComplex.from_multicritical(complex)
    return complex
