# -*- coding: utf-8 -*-

try:
    import matplotlib.pyplot as plt
except ImportError:
    _HAS_MPL = False
else:
    _HAS_MPL = True

import pandas as pd

from .core import FreeChainComplex, MultiCriticalComplex


class PlotMethods(object):
    def __call__(self, obj, kind="support", filename=None):
        """Plot a complex, an output boundary or a benchmark table
        based on kind specified, useful for debugging instances.

        Parameters
        ----------
        obj : bifree.core.MultiCriticalComplex, bifree.core.FreeChainComplex or pandas.DataFrame
        kind : str, optional (default: 'support')
            {'support', 'matrix', 'bench'}
            The element type for which a plot should be generated.
        filename : str, optional (default: None)
            Absolute path for saving the generated plot.

        Returns
        -------
        fig : matplotlib.fig.Figure

        """
        if not _HAS_MPL:
            raise ImportError("matplotlib is required for plotting.")

        expected = {
            "support": MultiCriticalComplex,
            "matrix": FreeChainComplex,
            "bench": pd.DataFrame,
        }
        if kind not in expected:
            raise NotImplementedError(
                f"Unknown kind='{kind}'. Use one of 'support', 'matrix' or 'bench'"
            )
        if not isinstance(obj, expected[kind]):
            raise TypeError(
                f"kind='{kind}' needs a {expected[kind].__name__},"
                f" got {type(obj).__name__}"
            )

        plot_method = getattr(self, kind)
        fig = plot_method(obj)

        if filename is not None:
            fig.savefig(filename)
            return None

        return fig

    def support(self, complex):
        """Generates a plot of the support staircases of every cell,
        one color per dimension.

        Parameters
        ----------
        complex : bifree.core.MultiCriticalComplex

        Returns
        -------
        fig : matplotlib.fig.Figure

        """
        fig = plt.figure()
        ax = fig.add_subplot(111)
        low, high = complex.grade_bounds()
        if high is None:
            return fig
        right = float(high.x) + 1
        top = float(high.y) + 1
        for dim, block in enumerate(complex.blocks):
            color = f"C{dim}"
            for cell in block:
                gens = cell.support.generators
                xs, ys = [float(gens[0].x)], [top]
                for a, b in zip(gens, gens[1:]):
                    xs.extend([float(a.x), float(b.x)])
                    ys.extend([float(a.y), float(a.y)])
                xs.extend([float(gens[-1].x), right])
                ys.extend([float(gens[-1].y), float(gens[-1].y)])
                ax.plot(xs, ys, color=color, alpha=0.5, linewidth=0.8)
            ax.plot([], [], color=color, label=f"dim {dim}")
        ax.set_xlim(float(low.x) - 0.5, right)
        ax.set_ylim(float(low.y) - 0.5, top)
        ax.legend()
        return fig

    def matrix(self, complex):
        """Generates a sparsity plot of every boundary matrix of a free
        complex.

        Parameters
        ----------
        complex : bifree.core.FreeChainComplex

        Returns
        -------
        fig : matplotlib.fig.Figure

        """
        dims = list(range(1, complex.dimension + 1))
        fig, axes = plt.subplots(1, max(len(dims), 1), squeeze=False)
        for ax, dim in zip(axes[0], dims):
            boundary = complex.boundary(dim)
            rows, cols = [], []
            for j, col in enumerate(boundary):
                rows.extend(col)
                cols.extend([j] * len(col))
            ax.scatter(cols, rows, s=1, marker="s")
            ax.set_xlim(-0.5, boundary.n_cols - 0.5)
            ax.set_ylim(boundary.n_rows - 0.5, -0.5)
            ax.set_title(f"dim {dim}, nnz {boundary.nnz}")
        return fig

    def bench(self, df):
        """Generates a log-log plot of output nnz against instance
        size, one line per family and algorithm.

        Parameters
        ----------
        df : pandas.DataFrame
            As returned by bifree.bench.bench.

        Returns
        -------
        fig : matplotlib.fig.Figure

        """
        fig = plt.figure()
        ax = fig.add_subplot(111)
        for (family, algorithm), group in df.groupby(["family", "algorithm"]):
            group = group.sort_values("size")
            ax.loglog(group["size"], group["nnz"], marker="o", label=f"{family} {algorithm}")
        ax.set_xlabel("size")
        ax.set_ylabel("nnz")
        ax.legend()
        return fig
