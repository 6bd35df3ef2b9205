# -*- coding: utf-8 -*-

from .base import BaseResolver
from ..resolutions import PathResolution


class Path(BaseResolver):
    """Path algorithm: the generators of every cell are joined by a
    path of relations, so the output has the generator and relation
    blocks only. Lifts through a cell of criticality k may need k - 1
    relations.

    Parameters
    ----------
    check : bool, optional (default: False)
        Whether or not to verify every commutation identity after the
        maps are computed.

    """

    resolution_class = PathResolution
    name = "path"
