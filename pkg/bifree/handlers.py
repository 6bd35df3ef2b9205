# -*- coding: utf-8 -*-

import io
import sys

from .core import Bigrade, Cell, FreeChainComplex, MultiCriticalComplex, normalize_support
from .errors import (
    FacetIndexError,
    MissingHeaderError,
    NumberFormatError,
    OddCoordinateError,
    ParameterCountError,
    SccParseError,
    ValidationError,
)
from .utils import format_number, parse_number


HEADER = "scc2020"


class SccHandler(object):
    """Handles reading and writing scc2020 documents. Input documents
    may carry several grades per cell; output documents carry exactly
    one.

    Parameters
    ----------
    source : str or file-like
        Filepath, '-' for stdin, the document text itself (anything
        containing a newline) or an open text stream.

    """

    def __init__(self, source):
        self.source = source
        self.lines = {}

    def __repr__(self):
        is_path = isinstance(self.source, str) and "\n" not in self.source
        name = self.source if is_path else "<text>"
        return f"<{self.__class__.__name__} source={name}>"

    def read(self):
        """Returns the document text."""
        if hasattr(self.source, "read"):
            return self.source.read()
        if self.source == "-":
            return sys.stdin.read()
        if "\n" in self.source:
            return self.source
        with open(self.source, encoding="utf-8") as f:
            return f.read()

    @staticmethod
    def _content_lines(text):
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, line

    def _parse_cell(self, lineno, line, dim, n_faces):
        if line.count(";") != 1:
            raise SccParseError("expected exactly one ';'", lineno=lineno)
        left, right = line.split(";")
        tokens = left.split()
        if not tokens or len(tokens) % 2:
            raise OddCoordinateError(
                f"expected a nonempty even number of coordinates, got {len(tokens)}",
                lineno=lineno,
            )
        values = [parse_number(t, lineno=lineno) for t in tokens]
        grades = [Bigrade(values[i], values[i + 1]) for i in range(0, len(values), 2)]

        facets = []
        for token in right.split():
            try:
                f = int(token)
            except ValueError:
                raise NumberFormatError(f"'{token}' is not a facet index", lineno=lineno)
            if not 0 <= f < n_faces:
                raise FacetIndexError(
                    f"facet index {f} out of range for a block of {n_faces} cells",
                    lineno=lineno,
                )
            facets.append(f)
        return grades, facets

    def parse(self, validate=True):
        """Parses the document into a multi-critical complex.

        Parameters
        ----------
        validate : bool, optional (default: True)
            Whether or not to run :func:`bifree.core.validate` and raise
            on the first violation.

        Returns
        -------
        complex : bifree.core.MultiCriticalComplex

        """
        text = self.read()
        content = self._content_lines(text)

        lineno, line = next(content, (1, ""))
        if line != HEADER:
            raise MissingHeaderError(f"expected '{HEADER}' header", lineno=lineno)

        lineno, line = next(content, (lineno + 1, ""))
        if line != "2":
            raise ParameterCountError(
                f"expected 2 parameters, got '{line}'", lineno=lineno
            )

        lineno, line = next(content, (lineno + 1, ""))
        try:
            sizes = [int(t) for t in line.split()]
        except ValueError:
            raise SccParseError(f"invalid block sizes '{line}'", lineno=lineno)
        if not sizes or any(s < 0 for s in sizes):
            raise SccParseError(f"invalid block sizes '{line}'", lineno=lineno)

        top = len(sizes) - 1
        blocks = [None] * len(sizes)
        self.lines = {}
        for b, size in enumerate(sizes):
            dim = top - b
            n_faces = sizes[b + 1] if dim > 0 else 0
            block = []
            for i in range(size):
                item = next(content, None)
                if item is None:
                    raise SccParseError(
                        f"expected {size - i} more cells of dimension {dim}",
                        lineno=lineno + 1,
                    )
                lineno, line = item
                grades, facets = self._parse_cell(lineno, line, dim, n_faces)
                block.append(Cell(i, dim, normalize_support(grades), facets))
                self.lines[(dim, i)] = lineno
            blocks[dim] = block

        extra = next(content, None)
        if extra is not None:
            raise SccParseError("unexpected content after the last block", lineno=extra[0])

        complex = MultiCriticalComplex(blocks)
        if validate:
            report = complex.validate()
            if not report.is_valid:
                first = report.violations[0]
                lineno = self.lines.get((first.dim, first.cell_id))
                raise ValidationError(report, lineno=lineno)
        return complex

    @staticmethod
    def _format_line(grades, facets):
        coords = " ".join(f"{format_number(g.x)} {format_number(g.y)}" for g in grades)
        facets = " ".join(str(f) for f in sorted(facets))
        return f"{coords} ; {facets}" if facets else f"{coords} ;"

    @classmethod
    def write(cls, complex, f=None):
        """Writes a complex as a canonical scc2020 document.

        Parameters
        ----------
        complex : bifree.core.FreeChainComplex or bifree.core.MultiCriticalComplex
        f : file-like, optional (default: None)
            Stream to write to.

        Returns
        -------
        text : str

        """
        out = io.StringIO()
        out.write(f"{HEADER}\n2\n")
        if isinstance(complex, FreeChainComplex):
            blocks = [
                [([g], boundary[i]) for i, g in enumerate(grades)]
                for __, grades, boundary in complex.iter_blocks()
            ]
        else:
            blocks = [
                [(c.support.generators, c.facets) for c in complex.block(dim)]
                for dim in range(complex.dimension, -1, -1)
            ]
        if not blocks:
            blocks = [[]]
        out.write(" ".join(str(len(b)) for b in blocks) + "\n")
        for block in blocks:
            for grades, facets in block:
                out.write(cls._format_line(grades, facets) + "\n")

        text = out.getvalue()
        if f is not None:
            f.write(text)
        return text

    @classmethod
    def write_firep(cls, firep, f=None):
        """Writes an FI-rep as a three block document: Z, Y, X."""
        out = io.StringIO()
        out.write(f"{HEADER}\n# firep of homology in dimension {firep.dim}\n2\n")
        out.write(
            f"{len(firep.z_grades)} {len(firep.y_grades)} {len(firep.x_grades)}\n"
        )
        for grades, matrix in [
            (firep.z_grades, firep.g),
            (firep.y_grades, firep.f),
        ]:
            for i, g in enumerate(grades):
                out.write(cls._format_line([g], matrix[i]) + "\n")
        for g in firep.x_grades:
            out.write(cls._format_line([g], ()) + "\n")

        text = out.getvalue()
        if f is not None:
            f.write(text)
        return text
