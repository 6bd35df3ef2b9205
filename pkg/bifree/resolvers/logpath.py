# -*- coding: utf-8 -*-

from .base import BaseResolver
from ..linalg import mat_add, mat_mul
from ..resolutions import LogPathResolution


class LogPath(BaseResolver):
    """Log-path algorithm: relations form the log-path graph of each
    cell, so any two generators are connected by a logarithmic number
    of relations, and the cycles that appear are filled with triangle
    syzygies. The output carries the generator, relation and syzygy
    blocks.

    Parameters
    ----------
    check : bool, optional (default: False)
        Whether or not to verify every commutation identity after the
        maps are computed.

    """

    resolution_class = LogPathResolution
    name = "logpath"

    def compute_higher_corrections(self, dim):
        """Computes f2 (syzygies of dim to syzygies of dim - 1), h1
        (relations of dim to syzygies of dim - 2) and H0 (generators of
        dim to syzygies of dim - 3) by filling the cycles of the
        corresponding composites.
        """
        f1 = self._map("f1", dim)
        f2 = self.fill_columns(mat_mul(f1, self._map("p2", dim)), dim - 1)
        self._store("f2", dim, f2)

        if dim >= 2:
            h0 = self._map("h0", dim)
            cycles = mat_add(
                mat_mul(h0, self._map("p1", dim)),
                mat_mul(self._map("f1", dim - 1), f1),
            )
            self._store("h1", dim, self.fill_columns(cycles, dim - 2))

        if dim >= 3:
            cycles = mat_add(
                mat_mul(self._map("h0", dim - 1), self._map("f0", dim)),
                mat_mul(self._map("f1", dim - 2), self._map("h0", dim)),
            )
            self._store("H0", dim, self.fill_columns(cycles, dim - 3))
