# -*- coding: utf-8 -*-

import logging
import time
from itertools import accumulate

from ..core import FreeChainComplex, RunStats
from ..errors import InvalidBifiltrationError, ResolutionInvariantError
from ..linalg import SparseBitMatrix, bmat, mat_add, mat_mul


logger = logging.getLogger("bifree")


def _offsets(sizes):
    return [0] + list(accumulate(sizes))


class BaseResolver(object):
    """Defines the steps shared by the path and log-path algorithms:
    per-cell resolutions, lifts of the boundary to generators (f0),
    path corrections (f1, h0) and assembly of the free complex.

    Parameters
    ----------
    check : bool, optional (default: False)
        Whether or not to verify every commutation identity after the
        maps are computed.

    Attributes
    ----------
    maps : dict
        Map name ('f0', 'p1', ...) to a dict of dimension to
        bifree.linalg.SparseBitMatrix.
    stats : bifree.core.RunStats

    """

    resolution_class = None
    name = None

    def __init__(self, check=False):
        self.check = check
        self.complex = None
        self.resolutions = []
        self.maps = {}
        self.stats = None

    def __repr__(self):
        return f"<{self.__class__.__name__} check={self.check}>"

    def _timed(self, step, func, *args):
        start = time.perf_counter()
        out = func(*args)
        self.stats.timings[step] = (
            self.stats.timings.get(step, 0.0) + time.perf_counter() - start
        )
        return out

    def _map(self, name, dim):
        return self.maps.get(name, {}).get(dim)

    def _store(self, name, dim, matrix):
        self.maps.setdefault(name, {})[dim] = matrix
        self.stats.record(name, dim, matrix)

    # basis bookkeeping

    def n_gens(self, dim):
        return self._gen_offsets[dim][-1] if 0 <= dim < len(self.resolutions) else 0

    def n_rels(self, dim):
        return self._rel_offsets[dim][-1] if 0 <= dim < len(self.resolutions) else 0

    def n_syz(self, dim):
        return self._syz_offsets[dim][-1] if 0 <= dim < len(self.resolutions) else 0

    def build_resolutions(self, complex):
        """Builds the resolution of every cell and the index tables
        mapping global basis positions to (cell, local index).
        """
        self.complex = complex
        self.resolutions = [
            [self.resolution_class(c.support) for c in block] for block in complex.blocks
        ]
        self._gen_offsets = []
        self._rel_offsets = []
        self._syz_offsets = []
        self._gen_owner = []
        self._rel_owner = []
        for block in self.resolutions:
            self._gen_offsets.append(_offsets(r.n_generators for r in block))
            self._rel_offsets.append(_offsets(r.n_relations for r in block))
            self._syz_offsets.append(_offsets(r.n_syzygies for r in block))
            self._gen_owner.append(
                [c for c, r in enumerate(block) for __ in range(r.n_generators)]
            )
            self._rel_owner.append(
                [c for c, r in enumerate(block) for __ in range(r.n_relations)]
            )

        for dim, block in enumerate(self.resolutions):
            self._store("p1", dim, self._block_diagonal(block, "p1", dim))
            self._store("p2", dim, self._block_diagonal(block, "p2", dim))
        return self.resolutions

    def prepare(self, complex):
        """Resets the maps and statistics and builds the resolutions."""
        self.maps = {}
        self.stats = RunStats(
            self.name, complex.size, complex.criticality, complex.dimension
        )
        return self._timed("build_resolutions", self.build_resolutions, complex)

    def _block_diagonal(self, block, attr, dim):
        if attr == "p1":
            row_offsets, col_offsets = self._gen_offsets[dim], self._rel_offsets[dim]
        else:
            row_offsets, col_offsets = self._rel_offsets[dim], self._syz_offsets[dim]
        columns = []
        for c, res in enumerate(block):
            offset = row_offsets[c]
            for col in getattr(res, attr).columns:
                columns.append([offset + r for r in col])
        return SparseBitMatrix(row_offsets[-1], columns, check=False)

    def compute_f0(self, dim):
        """Lifts the boundary of dimension dim to generators: each
        generator x of a cell is sent to the sum over facets of the
        facet generator with the smallest first coordinate below x.
        """
        cells = self.complex.block(dim)
        facets = self.resolutions[dim - 1]
        offsets = self._gen_offsets[dim - 1]
        columns = []
        for cell in cells:
            for x in cell.support:
                col = []
                for f in cell.facets:
                    idx = facets[f].support.first_below(x)
                    if idx is None:
                        raise InvalidBifiltrationError(
                            f"cell {cell.id} of dimension {dim} has no generator of"
                            f" facet {f} below {x}"
                        )
                    col.append(offsets[f] + idx)
                col.sort()
                columns.append(col)
        return SparseBitMatrix(offsets[-1], columns, check=False)

    def connect_columns(self, product, dim):
        """Replaces each pair of generator entries of the same cell in
        every column of product (rows G_dim) by the relations that
        connect them.

        Entries of one cell are sorted by generator index and paired
        first with second, third with fourth and so on.
        """
        owner = self._gen_owner[dim]
        gen_offsets = self._gen_offsets[dim]
        rel_offsets = self._rel_offsets[dim]
        block = self.resolutions[dim]
        columns = []
        for j, col in enumerate(product.columns):
            groups = {}
            for r in col:
                groups.setdefault(owner[r], []).append(r - gen_offsets[owner[r]])
            out = set()
            for c, local in groups.items():
                if len(local) % 2:
                    raise ResolutionInvariantError(
                        f"column {j} has an unpaired generator of cell {c}"
                        f" in dimension {dim}"
                    )
                local.sort()
                for a, b in zip(local[::2], local[1::2]):
                    rels = block[c].connect(a, b)
                    out.symmetric_difference_update(rel_offsets[c] + r for r in rels)
            columns.append(sorted(out))
        return SparseBitMatrix(rel_offsets[-1], columns, check=False)

    def fill_columns(self, product, dim):
        """Replaces the relation cycle of each cell in every column of
        product (rows R_dim) by syzygies filling it.
        """
        owner = self._rel_owner[dim]
        rel_offsets = self._rel_offsets[dim]
        syz_offsets = self._syz_offsets[dim]
        block = self.resolutions[dim]
        columns = []
        for j, col in enumerate(product.columns):
            groups = {}
            for r in col:
                groups.setdefault(owner[r], []).append(r - rel_offsets[owner[r]])
            out = []
            for c in sorted(groups):
                try:
                    syz = block[c].fill(groups[c])
                except ResolutionInvariantError as e:
                    raise ResolutionInvariantError(
                        f"column {j}, cell {c} of dimension {dim}: {e}"
                    )
                out.extend(syz_offsets[c] + s for s in syz)
            columns.append(out)
        return SparseBitMatrix(syz_offsets[-1], columns, check=False)

    def compute_corrections(self, dim):
        """Computes f1 (relations of dim to relations of dim - 1) and
        h0 (generators of dim to relations of dim - 2).
        """
        f0 = self._map("f0", dim)
        f1 = self.connect_columns(mat_mul(f0, self._map("p1", dim)), dim - 1)
        self._store("f1", dim, f1)
        if dim >= 2:
            h0 = self.connect_columns(mat_mul(self._map("f0", dim - 1), f0), dim - 2)
            self._store("h0", dim, h0)

    def compute_higher_corrections(self, dim):
        pass

    def assemble(self):
        """Assembles the free complex with basis G_j + R_{j-1} + S_{j-2}
        in dimension j and boundary

            [[f0_j, p1_{j-1}, 0        ],
             [h0_j, f1_{j-1}, p2_{j-2} ],
             [H0_j, h1_{j-1}, f2_{j-2} ]]
        """
        grades = []
        boundaries = []
        block_sizes = []
        top = self.complex.dimension + 2
        for j in range(top + 1):
            col_sizes = [self.n_gens(j), self.n_rels(j - 1), self.n_syz(j - 2)]
            row_sizes = [self.n_gens(j - 1), self.n_rels(j - 2), self.n_syz(j - 3)]
            blocks = [
                [self._map("f0", j), self._map("p1", j - 1), None],
                [self._map("h0", j), self._map("f1", j - 1), self._map("p2", j - 2)],
                [self._map("H0", j), self._map("h1", j - 1), self._map("f2", j - 2)],
            ]
            for i in range(3):
                for k in range(3):
                    if row_sizes[i] == 0 or col_sizes[k] == 0:
                        blocks[i][k] = None

            basis = []
            if j < len(self.resolutions):
                basis.extend(g for r in self.resolutions[j] for g in r.generators)
            if 0 <= j - 1 < len(self.resolutions):
                basis.extend(g for r in self.resolutions[j - 1] for g in r.relations)
            if 0 <= j - 2 < len(self.resolutions):
                basis.extend(g for r in self.resolutions[j - 2] for g in r.syzygies)

            grades.append(basis)
            boundaries.append(bmat(blocks, row_sizes, col_sizes))
            block_sizes.append(tuple(col_sizes))
        return FreeChainComplex(grades, boundaries, block_sizes)

    def commutation_defects(self):
        """Returns (identity, dim) for every commutation identity that
        fails as a Z2 matrix equation.
        """
        defects = []
        d = self.complex.dimension

        def differs(lhs, rhs):
            return not mat_add(lhs, rhs).is_zero()

        def product(a, b):
            if a is None or b is None:
                return None
            return mat_mul(a, b)

        def total(*terms):
            terms = [t for t in terms if t is not None]
            out = terms[0]
            for t in terms[1:]:
                out = mat_add(out, t)
            return out

        for i in range(1, d + 1):
            f0 = self._map("f0", i)
            f1 = self._map("f1", i)
            if differs(mat_mul(self._map("p1", i - 1), f1), mat_mul(f0, self._map("p1", i))):
                defects.append(("p1.f1 = f0.p1", i))
            f2 = self._map("f2", i)
            if f2 is not None and differs(
                mat_mul(f1, self._map("p2", i)), mat_mul(self._map("p2", i - 1), f2)
            ):
                defects.append(("f1.p2 = p2.f2", i))
            if i >= 2:
                h0 = self._map("h0", i)
                if differs(
                    mat_mul(self._map("p1", i - 2), h0),
                    mat_mul(self._map("f0", i - 1), f0),
                ):
                    defects.append(("p1.h0 = f0.f0", i))
                h1 = self._map("h1", i)
                if h1 is not None:
                    lhs = total(
                        mat_mul(h0, self._map("p1", i)),
                        mat_mul(self._map("f1", i - 1), f1),
                    )
                    if differs(lhs, mat_mul(self._map("p2", i - 2), h1)):
                        defects.append(("h0.p1 + f1.f1 = p2.h1", i))
            if i >= 3:
                H0 = self._map("H0", i)
                if H0 is not None:
                    lhs = total(
                        product(self._map("h0", i - 1), f0),
                        product(self._map("f1", i - 2), self._map("h0", i)),
                    )
                    if differs(lhs, mat_mul(self._map("p2", i - 3), H0)):
                        defects.append(("h0.f0 + f1.h0 = p2.H0", i))
        return defects

    def resolve(self, complex, suppress_stdout=False):
        """Computes a free chain complex quasi-isomorphic to complex.

        Parameters
        ----------
        complex : bifree.core.MultiCriticalComplex
            A validated multi-critical complex.
        suppress_stdout : bool, optional (default: False)
            Suppress logs.

        Returns
        -------
        output : bifree.core.FreeChainComplex

        """
        d = complex.dimension
        if not suppress_stdout:
            logger.info(f"Building {self.name} resolutions of {complex.n_cells} cells")
        self.prepare(complex)

        for dim in range(1, d + 1):
            if not suppress_stdout:
                logger.info(f"Computing lifts for dimension {dim}")
            f0 = self._timed("compute_f0", self.compute_f0, dim)
            self._store("f0", dim, f0)

        for dim in range(1, d + 1):
            if not suppress_stdout:
                logger.info(f"Computing corrections for dimension {dim}")
            self._timed("compute_corrections", self.compute_corrections, dim)

        for dim in range(1, d + 1):
            self._timed(
                "compute_higher_corrections", self.compute_higher_corrections, dim
            )

        if self.check:
            defects = self.commutation_defects()
            if defects:
                name, dim = defects[0]
                raise ResolutionInvariantError(
                    f"identity {name} fails in dimension {dim}"
                )

        output = self._timed("assemble", self.assemble)
        self.stats.basis_counts = output.basis_counts
        return output
