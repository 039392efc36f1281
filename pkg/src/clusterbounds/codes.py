"""Stabilizer and CSS codes in binary symplectic form.

A Pauli operator maps, up to phase, to a pair of length-n bit vectors
(v, u) with X-part v and Z-part u.  A code is stored through its
generator matrix G = (A_X | A_Z) and check matrix H = (A_Z | A_X); the
syndrome of an error is H times its binary form, and two operators
commute exactly when their symplectic product vanishes.

Also provides the standard constructions used in tests and demos (toric
code, hypergraph product) and the combined space-time code that models
repeated noisy syndrome measurement rounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import CommutativityError, ValidationError
from .gf2 import BitMatrix, BitVector, hstack, vstack

_LABEL_FOR_BITS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS_FOR_LABEL = {lbl: vu for vu, lbl in _LABEL_FOR_BITS.items()}


@dataclass(frozen=True)
class PauliOp:
    """n-qubit Pauli operator as an (X-part, Z-part) bit-vector pair.

    Phases are dropped throughout: products are componentwise XOR and Y
    is treated as the X and Z bits both set.
    """

    v: BitVector
    u: BitVector

    def __post_init__(self) -> None:
        if self.v.n != self.u.n:
            raise ValidationError("X and Z parts must have equal length")

    @classmethod
    def identity(cls, n: int) -> "PauliOp":
        return cls(BitVector(n), BitVector(n))

    @classmethod
    def from_label(cls, label: str) -> "PauliOp":
        """Build from a string like 'XIZY'."""
        n = len(label)
        vbits = ubits = 0
        for j, ch in enumerate(label.upper()):
            if ch not in _BITS_FOR_LABEL:
                raise ValidationError(f"unknown Pauli letter {ch!r}")
            vb, ub = _BITS_FOR_LABEL[ch]
            vbits |= vb << j
            ubits |= ub << j
        return cls(BitVector(n, vbits), BitVector(n, ubits))

    @classmethod
    def single(cls, n: int, j: int, label: str) -> "PauliOp":
        """Single-qubit Pauli at position j."""
        vb, ub = _BITS_FOR_LABEL[label.upper()]
        return cls(BitVector(n, vb << j), BitVector(n, ub << j))

    @classmethod
    def from_binary(cls, bits: BitVector) -> "PauliOp":
        """Inverse of to_binary: a length-2n vector laid out (v | u)."""
        if bits.n % 2:
            raise ValidationError("binary form must have even length")
        v, u = bits.split(bits.n // 2)
        return cls(v, u)

    @property
    def n(self) -> int:
        return self.v.n

    @property
    def weight(self) -> int:
        return (self.v.bits | self.u.bits).bit_count()

    def support(self) -> tuple[int, ...]:
        return BitVector(self.n, self.v.bits | self.u.bits).support()

    def entry(self, j: int) -> str:
        return _LABEL_FOR_BITS[(self.v[j], self.u[j])]

    def label(self) -> str:
        return "".join(self.entry(j) for j in range(self.n))

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        return PauliOp(self.v ^ other.v, self.u ^ other.u)

    def to_binary(self) -> BitVector:
        """Length-2n vector laid out (v | u), matching generator rows."""
        return self.v.concat(self.u)


def symplectic_product(e1: PauliOp, e2: PauliOp) -> int:
    """0 when the operators commute, 1 when they anticommute."""
    if e1.n != e2.n:
        raise ValidationError("operators act on different qubit counts")
    return e1.v.dot(e2.u) ^ e1.u.dot(e2.v)


def _pauli_row_weight(row: int, n: int) -> int:
    vbits = row & ((1 << n) - 1)
    ubits = row >> n
    return (vbits | ubits).bit_count()


@dataclass(frozen=True)
class StabilizerCode:
    """Stabilizer code given by generator rows over 2n binary columns.

    The generator matrix may contain dependent rows; k is always
    computed from the rank.  w is the largest Pauli weight of a row.
    """

    G: BitMatrix
    H: BitMatrix
    n: int
    k: int
    w: int
    d: int | None = None
    D: float | None = None

    @property
    def r(self) -> int:
        """Number of independent generators, n - k."""
        return self.n - self.k

    @property
    def num_generators(self) -> int:
        return self.G.nrows

    def generator(self, i: int) -> PauliOp:
        return PauliOp.from_binary(self.G.row(i))

    def syndrome(self, e: PauliOp) -> BitVector:
        """One bit per generator row; zero exactly when e is undetectable."""
        if e.n != self.n:
            raise ValidationError(f"operator acts on {e.n} qubits, code has {self.n}")
        return self.H.mul_vec(e.to_binary())

    def is_stabilizer_element(self, e: PauliOp) -> bool:
        """Whether an undetectable operator lies in the stabilizer group."""
        if self.syndrome(e):
            raise ValidationError("operator is detectable, not an undetectable error")
        return self.G.row_space_contains(e.to_binary())


def new_stabilizer(
    G: BitMatrix, n: int | None = None, d: int | None = None, D: float | None = None
) -> StabilizerCode:
    """Validate a generator matrix and build the code.

    Rejects zero rows and any anticommuting row pair (reported by
    index).  The check matrix is G with the X and Z blocks swapped.
    """
    if n is None:
        if G.cols % 2:
            raise ValidationError("generator matrix must have 2n columns")
        n = G.cols // 2
    if G.cols != 2 * n:
        raise ValidationError(f"expected {2 * n} columns, got {G.cols}")
    mask = (1 << n) - 1
    for i, row in enumerate(G.rows):
        if row == 0:
            raise ValidationError(f"generator row {i} is zero")
    for i, j in itertools.combinations(range(G.nrows), 2):
        ri, rj = G.rows[i], G.rows[j]
        sp = ((ri & mask) & (rj >> n)).bit_count() + ((ri >> n) & (rj & mask)).bit_count()
        if sp & 1:
            raise CommutativityError(i, j)
    H = BitMatrix(tuple(((row >> n) | ((row & mask) << n)) for row in G.rows), 2 * n)
    k = n - G.rank()
    w = max(_pauli_row_weight(row, n) for row in G.rows)
    return StabilizerCode(G=G, H=H, n=n, k=k, w=w, d=d, D=D)


@dataclass(frozen=True)
class CssCode:
    """CSS code with X-type generator rows G_X and Z-type rows G_Z."""

    G_X: BitMatrix
    G_Z: BitMatrix
    n: int
    k: int
    w_X: int
    w_Z: int
    d: int | None = None
    D: float | None = None

    @cached_property
    def stabilizer(self) -> StabilizerCode:
        """Block-diagonal symplectic view of the same code."""
        n = self.n
        x_rows = tuple(r for r in self.G_X.rows)
        z_rows = tuple(r << n for r in self.G_Z.rows)
        G = BitMatrix(x_rows + z_rows, 2 * n)
        return new_stabilizer(G, n, d=self.d, D=self.D)

    def sector(self, errors: str) -> tuple[BitMatrix, BitMatrix]:
        """(checks, degeneracy) pair for one error type.

        X errors trip the Z-type generators and are degenerate modulo
        the X-type generators, and vice versa.
        """
        if errors == "x":
            return self.G_Z, self.G_X
        if errors == "z":
            return self.G_X, self.G_Z
        raise ValidationError(f"unknown sector {errors!r}, expected 'x' or 'z'")


def new_css(
    G_X: BitMatrix, G_Z: BitMatrix, d: int | None = None, D: float | None = None
) -> CssCode:
    """Validate orthogonality of the two sectors and build the code."""
    if G_X.cols != G_Z.cols:
        raise ValidationError("G_X and G_Z must have the same number of columns")
    n = G_X.cols
    for name, M in (("G_X", G_X), ("G_Z", G_Z)):
        for i, row in enumerate(M.rows):
            if row == 0:
                raise ValidationError(f"{name} row {i} is zero")
    for i, rx in enumerate(G_X.rows):
        for j, rz in enumerate(G_Z.rows):
            if (rx & rz).bit_count() & 1:
                raise CommutativityError(i, j)
    k = n - G_X.rank() - G_Z.rank()
    return CssCode(
        G_X=G_X,
        G_Z=G_Z,
        n=n,
        k=k,
        w_X=G_X.max_row_weight(),
        w_Z=G_Z.max_row_weight(),
        d=d,
        D=D,
    )


def toric_code(L: int) -> CssCode:
    """Toric code on an L x L periodic square lattice, [[2L^2, 2, L]].

    Qubits sit on bonds.  Horizontal bonds are indexed row-major as
    r*L + c for 0 <= r, c < L; vertical bonds follow at L^2 + r*L + c.
    The X-type generators are the four bonds around each plaquette, the
    Z-type generators the four bonds meeting at each lattice site.
    """
    if L < 2:
        raise ValidationError("toric code needs L >= 2")
    n = 2 * L * L

    def hbond(r: int, c: int) -> int:
        return (r % L) * L + (c % L)

    def vbond(r: int, c: int) -> int:
        return L * L + (r % L) * L + (c % L)

    x_rows = []
    z_rows = []
    for r in range(L):
        for c in range(L):
            plaq = (hbond(r, c), hbond(r + 1, c), vbond(r, c), vbond(r, c + 1))
            site = (hbond(r, c), hbond(r, c - 1), vbond(r, c), vbond(r - 1, c))
            x_rows.append(sum(1 << j for j in plaq))
            z_rows.append(sum(1 << j for j in site))
    return new_css(BitMatrix(tuple(x_rows), n), BitMatrix(tuple(z_rows), n), d=L)


def hypergraph_product(H1: BitMatrix, H2: BitMatrix) -> CssCode:
    """CSS code built from two classical parity-check matrices.

    With H1 of shape r1 x n1 and H2 of shape r2 x n2 the code has
    n1*n2 + r1*r2 qubits and the two sectors are orthogonal by
    construction.
    """
    if H1.is_zero() or H2.is_zero():
        raise ValidationError("constituent matrices must be nonzero")
    r1, n1 = H1.shape
    r2, n2 = H2.shape
    gx = hstack(H1.kron(BitMatrix.identity(n2)), BitMatrix.identity(r1).kron(H2.transpose()))
    gz = hstack(BitMatrix.identity(n1).kron(H2), H1.transpose().kron(BitMatrix.identity(r2)))
    gx = BitMatrix(tuple(r for r in gx.rows if r), gx.cols)
    gz = BitMatrix(tuple(r for r in gz.rows if r), gz.cols)
    return new_css(gx, gz)


def repetition_transpose(m: int) -> BitMatrix:
    """The m x (m-1) bidiagonal matrix coupling consecutive rounds."""
    if m < 2:
        raise ValidationError("need m >= 2")
    rows = []
    for i in range(m):
        bits = 0
        if i - 1 >= 0:
            bits |= 1 << (i - 1)
        if i <= m - 2:
            bits |= 1 << i
        rows.append(bits)
    return BitMatrix(tuple(rows), m - 1)


@dataclass(frozen=True)
class FtCode:
    """Combined space-time binary code for m noisy measurement rounds.

    P is the check matrix over N = m*n + (m-1)*r columns: the first m*n
    columns are per-round qubit errors, the trailing (m-1)*r columns are
    syndrome-bit errors (the last round is taken as read out exactly).
    Q spans the degeneracy: products of generators and errors that
    cancel between consecutive rounds.
    """

    m: int
    P: BitMatrix
    Q: BitMatrix
    n: int
    r: int
    N: int
    K: int
    w: int
    D_ft: int | None = None

    @property
    def qubit_cols(self) -> int:
        return self.m * self.n


def ft_extend_matrices(H: BitMatrix, G: BitMatrix, m: int, d: int | None = None) -> FtCode:
    """Build the combined code from a (checks, degeneracy) pair.

    For m = 1 the syndrome block is empty and the construction returns
    the bare pair.
    """
    if m < 1:
        raise ValidationError("need m >= 1")
    r, n = H.shape
    if G.cols != n:
        raise ValidationError("H and G must act on the same columns")
    im = BitMatrix.identity(m)
    if m == 1:
        P = H
        Q = G
    else:
        R = repetition_transpose(m)
        P = hstack(im.kron(H), R.kron(BitMatrix.identity(r)))
        top = hstack(
            R.transpose().kron(BitMatrix.identity(n)),
            BitMatrix.identity(m - 1).kron(H.transpose()),
        )
        bottom = hstack(im.kron(G), BitMatrix.zeros(m * G.nrows, (m - 1) * r))
        Q = vstack(top, bottom)
    N = m * n + (m - 1) * r
    K = N - P.rank() - Q.rank()
    return FtCode(
        m=m,
        P=P,
        Q=Q,
        n=n,
        r=r,
        N=N,
        K=K,
        w=P.max_row_weight(),
        D_ft=None if d is None else min(d, m),
    )


def ft_extend(code: CssCode, m: int, errors: str = "x") -> FtCode:
    """Combined code for one CSS error sector over m measurement rounds.

    errors='x' tracks X-type qubit errors (checked by the Z-type
    generators) together with flips of those measured syndrome bits.
    """
    checks, degeneracy = code.sector(errors)
    return ft_extend_matrices(checks, degeneracy, m, d=code.d)


def min_nontrivial_weight(
    checks: BitMatrix, degeneracy: BitMatrix, max_weight: int
) -> int | None:
    """Smallest weight of a vector killed by checks but outside the row
    space of degeneracy, searching exhaustively up to max_weight."""
    n = checks.cols
    cols = [sum(((checks.rows[i] >> j) & 1) << i for i in range(checks.nrows)) for j in range(n)]
    pivots, rows = degeneracy._rref()
    for w in range(1, max_weight + 1):
        for combo in itertools.combinations(range(n), w):
            s = 0
            bits = 0
            for j in combo:
                s ^= cols[j]
                bits |= 1 << j
            if s:
                continue
            red = bits
            for c, row in zip(pivots, rows):
                if (red >> c) & 1:
                    red ^= row
            if red:
                return w
    return None


def css_distance_bruteforce(code: CssCode, max_weight: int) -> int | None:
    """Exhaustive CSS distance: the smaller of the two sector searches."""
    best = None
    for errors in ("x", "z"):
        checks, degeneracy = code.sector(errors)
        w = min_nontrivial_weight(checks, degeneracy, max_weight if best is None else best - 1)
        if w is not None:
            best = w if best is None else min(best, w)
    return best
