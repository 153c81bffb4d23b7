"""Dense GF(2) matrices with bit-packed rows.

Rows are stored as Python integers (bit j = column j), which keeps all
arithmetic exact and makes XOR-heavy kernels cheap at desk scale.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def parity(x: int) -> int:
    return x.bit_count() & 1


class BinaryMatrix:
    """A rows x cols matrix over GF(2)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [0] * rows
        else:
            if len(data) != rows:
                raise ValueError(f"expected {rows} row words, got {len(data)}")
            mask = (1 << cols) - 1
            self.data = [int(r) & mask for r in data]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "BinaryMatrix":
        """Build from an iterable of 0/1 row sequences."""
        packed = []
        width = cols
        for row in rows:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged rows")
            word = 0
            for j, bit in enumerate(row):
                if bit & 1:
                    word |= 1 << j
            packed.append(word)
        if width is None:
            raise ValueError("cannot infer column count from empty input")
        return cls(len(packed), width, packed)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    def row(self, i: int) -> int:
        return self.data[i]

    def get(self, i: int, j: int) -> int:
        if not (0 <= j < self.cols):
            raise IndexError(j)
        return (self.data[i] >> j) & 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(self.data)))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.rows}x{self.cols})"

    def to_lists(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self.cols)] for w in self.data]

    def is_zero(self) -> bool:
        return not any(self.data)

    def transpose(self) -> "BinaryMatrix":
        out = [0] * self.cols
        for i, w in enumerate(self.data):
            bit = 1 << i
            while w:
                j = (w & -w).bit_length() - 1
                out[j] |= bit
                w &= w - 1
        return BinaryMatrix(self.cols, self.rows, out)

    def __matmul__(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.cols} vs {other.rows}")
        out = []
        for w in self.data:
            acc = 0
            t = w
            while t:
                j = (t & -t).bit_length() - 1
                acc ^= other.data[j]
                t &= t - 1
            out.append(acc)
        return BinaryMatrix(self.rows, other.cols, out)

    def mul_vector(self, v: int) -> int:
        """Matrix-vector product; v is a column vector packed as an int."""
        out = 0
        for i, w in enumerate(self.data):
            if parity(w & v):
                out |= 1 << i
        return out

    def rank(self) -> int:
        return RowBasis(self.data).rank

    def row_basis(self) -> "RowBasis":
        return RowBasis(self.data)

    def kernel_basis(self) -> list[int]:
        """Basis of {v : M v = 0}, vectors packed over the column index."""
        reduced: list[int] = []
        pivots: list[int] = []
        for w in self.data:
            for r, p in zip(reduced, pivots):
                if (w >> p) & 1:
                    w ^= r
            if w:
                reduced.append(w)
                pivots.append(w.bit_length() - 1)
        # back-substitute so each pivot column appears in exactly one row
        for idx in range(len(reduced)):
            for jdx in range(idx):
                if (reduced[jdx] >> pivots[idx]) & 1:
                    reduced[jdx] ^= reduced[idx]
        pivot_set = set(pivots)
        basis = []
        for col in range(self.cols):
            if col in pivot_set:
                continue
            vec = 1 << col
            for r, p in zip(reduced, pivots):
                if (r >> col) & 1:
                    vec |= 1 << p
            basis.append(vec)
        return basis


class RowBasis:
    """Incremental echelon basis for a GF(2) row space."""

    __slots__ = ("vectors", "pivots")

    def __init__(self, rows: Iterable[int] = ()):
        self.vectors: list[int] = []
        self.pivots: list[int] = []
        for w in rows:
            self.add(w)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def reduce(self, v: int) -> int:
        for w, p in zip(self.vectors, self.pivots):
            if (v >> p) & 1:
                v ^= w
        return v

    def add(self, v: int) -> bool:
        """Insert v; returns True if it enlarged the span."""
        v = self.reduce(v)
        if v == 0:
            return False
        self.vectors.append(v)
        self.pivots.append(v.bit_length() - 1)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.vectors)


def in_row_space(m: BinaryMatrix, v: int) -> bool:
    """Decide membership of v in the row space of m."""
    return RowBasis(m.data).contains(v)


def vector_from_bits(bits: Iterable[int]) -> int:
    word = 0
    for j, bit in enumerate(bits):
        if bit & 1:
            word |= 1 << j
    return word


def vector_to_bits(v: int, width: int) -> list[int]:
    return [(v >> j) & 1 for j in range(width)]


def support(v: int) -> tuple[int, ...]:
    """Indices of the set bits, ascending."""
    out = []
    while v:
        j = (v & -v).bit_length() - 1
        out.append(j)
        v &= v - 1
    return tuple(out)
