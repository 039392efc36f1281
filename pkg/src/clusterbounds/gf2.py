"""Dense linear algebra over GF(2) on bit-packed values.

Vectors and matrices are immutable and backed by Python integers: bit j
of a row word is column j.  XOR, popcount and hashing are cheap at any
width, and equal values compare and hash equal, so they can be used as
set/dict keys and shared freely across threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError


def _require_same_len(a: int, b: int) -> None:
    if a != b:
        raise ValidationError(f"length mismatch: {a} != {b}")


@dataclass(frozen=True)
class BitVector:
    """Fixed-length vector over GF(2), packed into one integer."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValidationError("negative vector length")
        if self.bits < 0 or self.bits >> self.n:
            raise ValidationError("bits set beyond vector length")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVector":
        bits = 0
        for j in indices:
            if not 0 <= j < n:
                raise ValidationError(f"index {j} out of range for length {n}")
            bits |= 1 << j
        return cls(n, bits)

    @classmethod
    def from01(cls, text: str) -> "BitVector":
        text = text.strip().replace(" ", "")
        if set(text) - {"0", "1"}:
            raise ValidationError("expected a string of 0s and 1s")
        bits = 0
        for j, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << j
        return cls(len(text), bits)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        _require_same_len(self.n, other.n)
        return BitVector(self.n, self.bits ^ other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if (self.bits >> j) & 1)

    def dot(self, other: "BitVector") -> int:
        """Inner product mod 2."""
        _require_same_len(self.n, other.n)
        return (self.bits & other.bits).bit_count() & 1

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.n + other.n, self.bits | (other.bits << self.n))

    def split(self, k: int) -> tuple["BitVector", "BitVector"]:
        """Split into the first k coordinates and the rest."""
        if not 0 <= k <= self.n:
            raise ValidationError(f"split point {k} out of range")
        return BitVector(k, self.bits & ((1 << k) - 1)), BitVector(self.n - k, self.bits >> k)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.n))

    def __str__(self) -> str:
        return self.to01()


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over GF(2); each row is one packed integer."""

    rows: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValidationError("negative column count")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.cols:
                raise ValidationError(f"row {i} has bits beyond column {self.cols - 1}")

    # -- construction ------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << j for j in range(n)), n)

    @classmethod
    def from_rows(cls, rows: Iterable[int], cols: int) -> "BitMatrix":
        return cls(tuple(rows), cols)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        if not entries:
            return cls((), 0)
        ncols = len(entries[0])
        rows = []
        for r in entries:
            if len(r) != ncols:
                raise ValidationError("ragged rows")
            rows.append(sum((1 << j) for j, x in enumerate(r) if int(x) & 1))
        return cls(tuple(rows), ncols)

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector]) -> "BitMatrix":
        if not vectors:
            return cls((), 0)
        n = vectors[0].n
        for v in vectors:
            _require_same_len(v.n, n)
        return cls(tuple(v.bits for v in vectors), n)

    # -- shape and access --------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.rows[i])

    def row_weight(self, i: int) -> int:
        return self.rows[i].bit_count()

    def max_row_weight(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __iter__(self) -> Iterator[BitVector]:
        return (self.row(i) for i in range(len(self.rows)))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.row(i).to01() for i in range(len(self.rows)))

    # -- algebra ------------------------------------------------------

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            w = 0
            for i, r in enumerate(self.rows):
                if (r >> j) & 1:
                    w |= 1 << i
            cols.append(w)
        return BitMatrix(tuple(cols), len(self.rows))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.nrows:
            raise ValidationError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self.rows:
            acc = 0
            j = 0
            rr = r
            while rr:
                if rr & 1:
                    acc ^= other.rows[j]
                rr >>= 1
                j += 1
            out.append(acc)
        return BitMatrix(tuple(out), other.cols)

    def mul_vec(self, v: BitVector) -> BitVector:
        """Matrix-vector product; returns one bit per row."""
        _require_same_len(self.cols, v.n)
        bits = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(len(self.rows), bits)

    def kron(self, other: "BitMatrix") -> "BitMatrix":
        """Kronecker product over GF(2)."""
        oc = other.cols
        out = []
        for a in self.rows:
            for b in other.rows:
                w = 0
                aa = a
                j = 0
                while aa:
                    if aa & 1:
                        w |= b << (j * oc)
                    aa >>= 1
                    j += 1
                out.append(w)
        return BitMatrix(tuple(out), self.cols * oc)

    # -- elimination ---------------------------------------------------

    def _rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form; pivots are taken at the lowest
        available column so results are reproducible."""
        rows = list(self.rows)
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, len(rows)) if (rows[i] >> c) & 1), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            for i in range(len(rows)):
                if i != r and (rows[i] >> c) & 1:
                    rows[i] ^= rows[r]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return pivots, rows[:r]

    def rank(self) -> int:
        return len(self._rref()[0])

    def kernel_dimension(self) -> int:
        return self.cols - self.rank()

    def kernel_basis(self) -> list[BitVector]:
        """Basis of the right kernel, one vector per free column."""
        pivots, rows = self._rref()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            bits = 1 << f
            for c, row in zip(pivots, rows):
                if (row >> f) & 1:
                    bits |= 1 << c
            basis.append(BitVector(self.cols, bits))
        return basis

    def row_space_contains(self, x: BitVector) -> bool:
        """Whether x is a GF(2) combination of the rows."""
        _require_same_len(self.cols, x.n)
        pivots, rows = self._rref()
        bits = x.bits
        for c, row in zip(pivots, rows):
            if (bits >> c) & 1:
                bits ^= row
        return bits == 0


def hstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.nrows != b.nrows:
        raise ValidationError(f"row mismatch in hstack: {a.nrows} != {b.nrows}")
    rows = tuple(ra | (rb << a.cols) for ra, rb in zip(a.rows, b.rows))
    return BitMatrix(rows, a.cols + b.cols)


def vstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    _require_same_len(a.cols, b.cols)
    return BitMatrix(a.rows + b.rows, a.cols)


def rank(m: BitMatrix) -> int:
    return m.rank()


def kernel_dimension(m: BitMatrix) -> int:
    return m.kernel_dimension()


def row_space_contains(m: BitMatrix, x: BitVector) -> bool:
    return m.row_space_contains(x)


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return a.kron(b)
