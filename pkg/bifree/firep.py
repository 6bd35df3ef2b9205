# -*- coding: utf-8 -*-

import logging

from .core import FIRep
from .linalg import SparseBitMatrix, bmat
from .resolvers import Path


logger = logging.getLogger("bifree")


def compute_firep(complex, dim, suppress_stdout=False):
    """Computes a free implicit representation (f, g) of the homology
    of complex in dimension dim.

    X has one basis element per (dim - 1)-cell at the base grade of the
    complex, Y one per generator of a dim-cell and Z one per generator
    of a (dim + 1)-cell followed by one per path relation of a dim-cell.
    f sends a generator to the boundary of its cell and g is
    [f0 | p1].

    Parameters
    ----------
    complex : bifree.core.MultiCriticalComplex
    dim : int
        Homology degree, 0 <= dim <= complex.dimension.
    suppress_stdout : bool, optional (default: False)
        Suppress logs.

    Returns
    -------
    firep : bifree.core.FIRep

    """
    if not 0 <= dim <= complex.dimension:
        raise ValueError(f"dimension {dim} out of range 0..{complex.dimension}")
    if not suppress_stdout:
        logger.info(f"Computing firep for dimension {dim}")

    resolver = Path()
    resolver.prepare(complex)
    lower = resolver.resolutions[dim]
    upper = resolver.resolutions[dim + 1] if dim < complex.dimension else []

    base = complex.base_grade()
    x_grades = [base] * len(complex.block(dim - 1))
    y_grades = [g for r in lower for g in r.generators]
    z_grades = [g for r in upper for g in r.generators]
    z_grades += [g for r in lower for g in r.relations]

    f_columns = []
    for cell, res in zip(complex.block(dim), lower):
        f_columns.extend([cell.facets] * res.n_generators)
    f = SparseBitMatrix(len(x_grades), f_columns, check=False)

    n_upper = resolver.n_gens(dim + 1)
    n_rel = resolver.n_rels(dim)
    f0 = resolver.compute_f0(dim + 1) if n_upper else None
    p1 = resolver.maps["p1"][dim] if n_rel else None
    g = bmat([[f0, p1]], [len(y_grades)], [n_upper, n_rel])
    return FIRep(dim, x_grades, y_grades, z_grades, f, g)
