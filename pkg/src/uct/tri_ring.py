"""Upper-triangular matrix rings over lookup-table fields, plus Z_n.

The entry order is fixed project-wide: the stored upper triangle is
listed row by row with the diagonal included,

    (0,0), (0,1), ..., (0,n-1), (1,1), ..., (1,n-1), ..., (n-1,n-1)

and the canonical integer encoding reads that sequence as base-q digits,
first entry least significant.  The encoding is a bijection between
T_n(F) and 0..q**(n(n+1)/2)-1; exported graphs and all structural maps
depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, RingTooLarge
from .finite_field import DEFAULT_FIELD_CAP, FieldTable, make_field

DEFAULT_VERTEX_CAP = 1 << 16
HARD_VERTEX_CAP = 1 << 20


@lru_cache(maxsize=None)
def upper_positions(n: int) -> tuple:
    """Row-major (i, j) positions of the stored upper triangle, i <= j."""
    return tuple((i, j) for i in range(n) for j in range(i, n))


@lru_cache(maxsize=None)
def diagonal_slots(n: int) -> tuple:
    """Indices of the diagonal entries inside the canonical entry sequence."""
    return tuple(t for t, (i, j) in enumerate(upper_positions(n)) if i == j)


@lru_cache(maxsize=None)
def strict_upper_slots(n: int) -> tuple:
    return tuple(t for t, (i, j) in enumerate(upper_positions(n)) if i < j)


@dataclass(frozen=True)
class TriMatrix:
    """Upper-triangular n x n matrix; entries are field element indices."""

    field: FieldTable
    n: int
    entries: tuple

    def __post_init__(self):
        want = self.n * (self.n + 1) // 2
        if len(self.entries) != want:
            raise ValueError(f"need {want} entries for n={self.n}, got {len(self.entries)}")
        if any(not 0 <= e < self.field.q for e in self.entries):
            raise ValueError("entry out of field range")

    def __repr__(self):
        return f"TriMatrix(n={self.n}, q={self.field.q}, entries={self.entries})"


def mat_sub(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    if a.n != b.n or a.field != b.field:
        raise DimensionMismatch("operands live in different rings")
    sub = a.field.sub_table
    return TriMatrix(a.field, a.n,
                     tuple(int(sub[x, y]) for x, y in zip(a.entries, b.entries)))


def mat_det(a: TriMatrix) -> int:
    """Determinant: the field product of the diagonal entries."""
    mul = a.field.mul_table
    v = 1
    for t in diagonal_slots(a.n):
        v = int(mul[v, a.entries[t]])
    return v


def is_unit(a: TriMatrix) -> bool:
    return all(a.entries[t] != 0 for t in diagonal_slots(a.n))


def diagonal_of(a: TriMatrix) -> tuple:
    return tuple(a.entries[t] for t in diagonal_slots(a.n))


def strict_upper_of(a: TriMatrix) -> tuple:
    """Entries (i, j) with i < j, in row-major order."""
    return tuple(a.entries[t] for t in strict_upper_slots(a.n))


def from_parts(field: FieldTable, n: int, strict_upper, diagonal) -> TriMatrix:
    """Rebuild a matrix from its strictly-upper part and its diagonal."""
    entries = [0] * (n * (n + 1) // 2)
    for t, e in zip(strict_upper_slots(n), strict_upper):
        entries[t] = e
    for t, e in zip(diagonal_slots(n), diagonal):
        entries[t] = e
    return TriMatrix(field, n, tuple(entries))


def encode(a: TriMatrix) -> int:
    """Canonical integer encoding (entry sequence as base-q digits, LSD first)."""
    v = 0
    for e in reversed(a.entries):
        v = v * a.field.q + e
    return v


def decode(field: FieldTable, n: int, code: int) -> TriMatrix:
    entries = []
    for _ in range(n * (n + 1) // 2):
        code, r = divmod(code, field.q)
        entries.append(r)
    return TriMatrix(field, n, tuple(entries))


@dataclass(frozen=True)
class RingSpec:
    """Parameters sufficient to rebuild one supported ring deterministically.

    kind "tri": T_n(GF(p^k)); kind "zn": integers modulo `modulus`.
    The CLI spelling is ``tri:N,P,K`` / ``zn:M``.
    """

    kind: str
    n: int = 0
    p: int = 0
    k: int = 0
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "tri":
            if self.n < 2:
                raise ValueError("matrix dimension must be >= 2")
            if self.k < 1:
                raise ValueError("extension degree must be >= 1")
        elif self.kind == "zn":
            if self.modulus < 2:
                raise ValueError("modulus must be >= 2")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @staticmethod
    def triangular(n: int, p: int, k: int = 1) -> "RingSpec":
        return RingSpec(kind="tri", n=n, p=p, k=k)

    @staticmethod
    def integers_mod(m: int) -> "RingSpec":
        return RingSpec(kind="zn", modulus=m)

    @staticmethod
    def parse(text: str) -> "RingSpec":
        """Parse the CLI spelling ``tri:N,P,K`` or ``zn:M``."""
        kind, _, rest = text.partition(":")
        try:
            if kind == "tri":
                n, p, k = (int(x) for x in rest.split(","))
                return RingSpec.triangular(n, p, k)
            if kind == "zn":
                return RingSpec.integers_mod(int(rest))
        except ValueError as exc:
            raise ValueError(f"bad ring spec {text!r}: {exc}") from None
        raise ValueError(f"bad ring spec {text!r}: kind must be tri or zn")

    def __str__(self):
        if self.kind == "tri":
            return f"tri:{self.n},{self.p},{self.k}"
        return f"zn:{self.modulus}"

    @property
    def q(self) -> int:
        if self.kind != "tri":
            raise ValueError("q is only defined for triangular rings")
        return self.p ** self.k

    @property
    def order(self) -> int:
        if self.kind == "tri":
            return self.q ** (self.n * (self.n + 1) // 2)
        return self.modulus

    def field(self, cap: int = DEFAULT_FIELD_CAP) -> FieldTable:
        if self.kind != "tri":
            raise ValueError("only triangular rings carry a field")
        return _field(self.p, self.k, cap)


@lru_cache(maxsize=None)
def _field(p, k, cap):
    return make_field(p, k, cap)


def _check_order(spec: RingSpec, cap: int):
    if spec.order > cap:
        raise RingTooLarge(f"ring {spec} has {spec.order} elements, cap is {cap}")


def enumerate_ring(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> list:
    """Every ring element exactly once, in canonical-encoding order.

    Triangular rings yield TriMatrix values (element at position i decodes
    encoding i); Z_n yields the residues 0..n-1.
    """
    _check_order(spec, cap)
    if spec.kind == "zn":
        return list(range(spec.modulus))
    f = spec.field()
    return [decode(f, spec.n, e) for e in range(spec.order)]


def entry_digit_matrix(spec: RingSpec, cap: int = DEFAULT_VERTEX_CAP) -> np.ndarray:
    """order x n(n+1)/2 array: row e holds the canonical entry digits of
    the matrix with encoding e.  Triangular rings only."""
    if spec.kind != "tri":
        raise ValueError("digit matrix is only defined for triangular rings")
    _check_order(spec, cap)
    q = spec.q
    codes = np.arange(spec.order, dtype=np.int64)
    cols = []
    for _ in range(spec.n * (spec.n + 1) // 2):
        codes, r = np.divmod(codes, q)
        cols.append(r.astype(np.int16))
    return np.stack(cols, axis=1)


def zn_units(m: int) -> np.ndarray:
    """Boolean mask over 0..m-1: True where the residue is a unit of Z_m."""
    return np.gcd(np.arange(m, dtype=np.int64), m) == 1
