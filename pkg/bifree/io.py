# -*- coding: utf-8 -*-

import time
import warnings

from .core import MultiCriticalComplex
from .firep import compute_firep
from .handlers import SccHandler
from .resolvers import LogPath, Path
from .utils import validate_input


def read_scc(source, validate=True):
    """Read an scc2020 document and return the multi-critical complex
    it describes.

    Parameters
    ----------
    source : str or file-like
        Filepath, '-' for stdin, document text or an open text stream.
    validate : bool, optional (default: True)
        Raise bifree.errors.ValidationError on an invalid bifiltration.

    Returns
    -------
    complex : bifree.core.MultiCriticalComplex

    """
    return SccHandler(source).parse(validate=validate)


def write_scc(complex, path=None):
    """Write a complex as a canonical scc2020 document.

    Parameters
    ----------
    complex : bifree.core.FreeChainComplex or bifree.core.MultiCriticalComplex
    path : str or file-like, optional (default: None)
        Output filepath or open text stream.

    Returns
    -------
    text : str

    """
    if isinstance(path, str):
        with open(path, "w", encoding="utf-8") as f:
            return SccHandler.write(complex, f)
    return SccHandler.write(complex, path)


def _load(source):
    if isinstance(source, MultiCriticalComplex):
        return source, 0.0
    start = time.perf_counter()
    complex = read_scc(source)
    return complex, time.perf_counter() - start


def resolve(source, algorithm="path", suppress_stdout=False, **kwargs):
    """Compute a free chain complex with the same pointwise homology as
    a multi-critical complex.

    Note: keyword arguments other than check raise ValueError.

    Parameters
    ----------
    source : str, file-like or bifree.core.MultiCriticalComplex
        Filepath, '-', document text, an open stream or a complex.
    algorithm : str (default: 'path')
        The resolution method to use ('path' or 'logpath').
        The path algorithm is used by default.
    suppress_stdout : bool, optional (default: False)
        Suppress logs and warnings.
    check : bool, optional (default: False)
        Verify every commutation identity of the computed maps and
        raise bifree.errors.ResolutionInvariantError on failure.

    Returns
    -------
    output : bifree.core.FreeChainComplex
        output.stats holds the bifree.core.RunStats of the run.

    """
    if algorithm not in ["path", "logpath"]:
        raise NotImplementedError(
            "Unknown algorithm specified." " Use either 'path' or 'logpath'"
        )

    with warnings.catch_warnings():
        if suppress_stdout:
            warnings.simplefilter("ignore")

        validate_input(kwargs, algorithm=algorithm)
        complex, io_time = _load(source)
        if complex.n_cells == 0:
            warnings.warn("No cells found in the input complex")
        elif complex.is_free():
            warnings.warn("Input complex is already 1-critical")

        resolver = Path(**kwargs) if algorithm == "path" else LogPath(**kwargs)
        output = resolver.resolve(complex, suppress_stdout=suppress_stdout)
        resolver.stats.io_time = io_time
        output.stats = resolver.stats
        return output


def firep(source, dim=1, suppress_stdout=False):
    """Compute the free implicit representation of the homology of a
    multi-critical complex in one dimension.

    Parameters
    ----------
    source : str, file-like or bifree.core.MultiCriticalComplex
    dim : int, optional (default: 1)
        Homology degree.
    suppress_stdout : bool, optional (default: False)
        Suppress logs and warnings.

    Returns
    -------
    firep : bifree.core.FIRep

    """
    with warnings.catch_warnings():
        if suppress_stdout:
            warnings.simplefilter("ignore")

        complex, __ = _load(source)
        return compute_firep(complex, dim, suppress_stdout=suppress_stdout)
