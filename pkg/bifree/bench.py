# -*- coding: utf-8 -*-

import logging
import statistics
import time

import pandas as pd

from .generators import GeneratorParams
from .resolvers import LogPath, Path


logger = logging.getLogger("bifree")

COLUMNS = ["family", "size", "algorithm", "time_s", "nnz", "basis"]
ALGORITHMS = {"path": Path, "logpath": LogPath}


class Benchmark(object):
    """Describes one benchmark instance and runs the resolvers on it.

    Parameters
    ----------
    params : bifree.generators.GeneratorParams
    repeat : int, optional (default: 3)
        Number of timed runs; the median is reported.

    """

    def __init__(self, params, repeat=3):
        self.params = params
        self.repeat = repeat
        self._complex = None

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.params!r} repeat={self.repeat}>"

    @property
    def complex(self):
        if self._complex is None:
            self._complex = self.params.build()
        return self._complex

    def run(self, algorithm):
        """Returns one result row for algorithm. Instance generation and
        I/O are not timed.
        """
        times = []
        output = None
        for __ in range(self.repeat):
            resolver = ALGORITHMS[algorithm]()
            start = time.perf_counter()
            output = resolver.resolve(self.complex, suppress_stdout=True)
            times.append(time.perf_counter() - start)
        return {
            "family": self.params.family,
            "size": self.params.size,
            "algorithm": algorithm,
            "time_s": statistics.median(times),
            "nnz": output.nnz(),
            "basis": sum(output.basis_counts),
        }


def bench(
    family,
    sizes,
    algorithms=("path", "logpath"),
    repeat=3,
    k=4,
    d=2,
    seed=0,
    suppress_stdout=False,
):
    """Times both algorithms on a family of generated instances.

    Parameters
    ----------
    family : str
        Generator family, see bifree.generators.FAMILIES.
    sizes : list
        Size parameters, one instance each.
    algorithms : tuple, optional (default: ('path', 'logpath'))
    repeat : int, optional (default: 3)
        Timed runs per instance and algorithm; the median is kept.
    k : int, optional (default: 4)
    d : int, optional (default: 2)
    seed : int, optional (default: 0)
    suppress_stdout : bool, optional (default: False)
        Suppress logs.

    Returns
    -------
    df : pandas.DataFrame
        Columns family, size, algorithm, time_s, nnz, basis.

    """
    for algorithm in algorithms:
        if algorithm not in ALGORITHMS:
            raise NotImplementedError(
                "Unknown algorithm specified." " Use either 'path' or 'logpath'"
            )
    rows = []
    for size in sizes:
        params = GeneratorParams(family, size, k=k, d=d, seed=seed)
        benchmark = Benchmark(params, repeat=repeat)
        for algorithm in algorithms:
            if not suppress_stdout:
                logger.info(f"Benchmarking {algorithm} on {family} of size {size}")
            rows.append(benchmark.run(algorithm))
    return pd.DataFrame(rows, columns=COLUMNS)


def overhead(df):
    """Returns the log-path to path ratios of time and nnz per family
    and size.
    """
    wide = df.pivot_table(
        index=["family", "size"], columns="algorithm", values=["time_s", "nnz"]
    )
    out = pd.DataFrame(
        {
            "time_ratio": wide["time_s"]["logpath"] / wide["time_s"]["path"],
            "nnz_ratio": wide["nnz"]["logpath"] / wide["nnz"]["path"],
        }
    )
    return out.reset_index()
