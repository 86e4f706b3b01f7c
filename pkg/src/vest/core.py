"""Exact scalars, vectors, matrices, and the validated instance model.

Two semirings are supported: exact rationals (backed by ``fractions.Fraction``,
which keeps every value in canonical gcd-reduced form with a positive
denominator) and GF(2) (ints 0/1 with mod-2 arithmetic). Vectors are plain
tuples of scalars. Matrices come in two immutable flavors: ``DenseMatrix``
stores every entry; ``FunctionalMatrix`` compactly encodes a square 0/1
matrix with at most one 1 per row as a list of row actions. Everything here
is immutable and pure, so values can be shared freely across workers.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Union[int, Fraction]
Vector = tuple


class VestError(Exception):
    """Base class for every error this package raises deliberately."""


class DimensionMismatch(VestError):
    pass


class EmptyTransformationList(VestError):
    pass


class NonBinaryEntry(VestError):
    pass


class NonSquare(VestError):
    pass


class ResourceBound(VestError):
    """An enumeration would exceed its configured cap."""


class Semiring(Enum):
    """Arithmetic domain tag: exact rationals ("q") or GF(2) ("gf2")."""

    RATIONAL = "q"
    GF2 = "gf2"

    @property
    def zero(self) -> Scalar:
        return _Q_ZERO if self is Semiring.RATIONAL else 0

    @property
    def one(self) -> Scalar:
        return _Q_ONE if self is Semiring.RATIONAL else 1

    def canon(self, value) -> Scalar:
        """Canonicalize *value* into this semiring.

        Rationals accept ints, Fractions, and "p/q" strings and come back as
        Fractions (gcd-reduced, positive denominator, zero as 0/1). GF(2)
        accepts anything numerically equal to 0 or 1 and comes back as an
        int. Floats are rejected outright: this library is exact.
        """
        if isinstance(value, float):
            raise TypeError("floating-point values are not supported")
        if isinstance(value, str):
            value = Fraction(value)
        if self is Semiring.RATIONAL:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise TypeError(f"cannot make a rational scalar from {type(value).__name__}")
        if value == 0:
            return 0
        if value == 1:
            return 1
        raise NonBinaryEntry(f"GF(2) entry must be 0 or 1, got {value!r}")

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self is Semiring.RATIONAL:
            return a + b
        return (a + b) & 1

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self is Semiring.RATIONAL:
            return a * b
        return a & b


_Q_ZERO = Fraction(0)
_Q_ONE = Fraction(1)


def canon_vector(semiring: Semiring, entries: Iterable) -> Vector:
    """Canonicalize every entry; see ``Semiring.canon``."""
    return tuple(semiring.canon(e) for e in entries)


def scalar_to_string(x: Scalar) -> str:
    """Render a scalar exactly: "p/q", or plain "p" when the denominator is 1."""
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


class DenseMatrix:
    """Immutable r x c matrix of exact scalars, stored row-major.

    Equality is mathematical: a DenseMatrix equals a FunctionalMatrix with
    the same shape and entries, and Fraction(1) entries equal int 1.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        packed = tuple(tuple(row) for row in rows)
        if not packed or not packed[0]:
            raise DimensionMismatch("matrix must have at least one row and one column")
        width = len(packed[0])
        if any(len(row) != width for row in packed):
            raise DimensionMismatch("matrix rows have inconsistent lengths")
        self.rows = packed

    @classmethod
    def identity(cls, d: int) -> "DenseMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, DenseMatrix):
            return self.rows == other.rows
        if isinstance(other, FunctionalMatrix):
            return self.rows == other.dense().rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"DenseMatrix({self.nrows}x{self.ncols})"


class FunctionalMatrix:
    """Square 0/1 matrix with at most one 1 per row, stored as row actions.

    Action ``None`` is the all-zero row; action ``j`` is the unit row that
    copies column j. Applying such a matrix never adds two entries, so a 0/1
    vector stays 0/1 and the result is the same in both semirings.
    """

    __slots__ = ("actions",)

    def __init__(self, actions: Iterable[Optional[int]]):
        acts = tuple(actions)
        if not acts:
            raise DimensionMismatch("matrix must have at least one row")
        d = len(acts)
        for j in acts:
            if j is not None and not 0 <= j < d:
                raise DimensionMismatch(f"copy source {j} outside [0, {d})")
        self.actions = acts

    @property
    def dim(self) -> int:
        return len(self.actions)

    nrows = dim
    ncols = dim

    def dense(self) -> DenseMatrix:
        """Expand to the equivalent dense 0/1 matrix."""
        d = len(self.actions)
        rows = []
        for j in self.actions:
            row = [0] * d
            if j is not None:
                row[j] = 1
            rows.append(tuple(row))
        return DenseMatrix(rows)

    def entry(self, i: int, j: int) -> Scalar:
        return 1 if self.actions[i] == j else 0

    def __eq__(self, other):
        if isinstance(other, FunctionalMatrix):
            return self.actions == other.actions
        if isinstance(other, DenseMatrix):
            return self.dense().rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.dense().rows)

    def __repr__(self):
        return f"FunctionalMatrix(dim={self.dim})"


Matrix = Union[DenseMatrix, FunctionalMatrix]


def to_functional(matrix: Matrix) -> Optional[FunctionalMatrix]:
    """Classify a square matrix, returning its row-action form.

    Returns None when some entry lies outside {0, 1} or some row carries two
    or more ones; that is a classification result, not an error. Non-square input
    raises NonSquare.
    """
    if isinstance(matrix, FunctionalMatrix):
        return matrix
    if matrix.nrows != matrix.ncols:
        raise NonSquare(f"matrix is {matrix.nrows}x{matrix.ncols}")
    actions = []
    for row in matrix.rows:
        src = None
        for j, e in enumerate(row):
            if e == 0:
                continue
            if e == 1 and src is None:
                src = j
            else:
                return None
        actions.append(src)
    return FunctionalMatrix(actions)


def apply(matrix: Matrix, x: Sequence[Scalar], semiring: Semiring = Semiring.RATIONAL) -> Vector:
    """Exact matrix-vector product in *semiring*.

    The functional path computes each output entry as 0 or a copied input
    entry, with no additions; the dense path folds each row with the
    semiring's add/mul.
    """
    if isinstance(matrix, FunctionalMatrix):
        if matrix.dim != len(x):
            raise DimensionMismatch(f"matrix has {matrix.dim} columns, vector has {len(x)}")
        zero = semiring.zero
        return tuple(zero if j is None else x[j] for j in matrix.actions)
    if matrix.ncols != len(x):
        raise DimensionMismatch(f"matrix has {matrix.ncols} columns, vector has {len(x)}")
    add, mul, zero = semiring.add, semiring.mul, semiring.zero
    out = []
    for row in matrix.rows:
        acc = zero
        for coeff, xj in zip(row, x):
            if coeff != 0 and xj != 0:
                acc = add(acc, mul(coeff, xj))
        out.append(acc)
    return tuple(out)


def is_zero_vector(x: Sequence[Scalar]) -> bool:
    return all(e == 0 for e in x)


@dataclass(frozen=True)
class VestInstance:
    """A validated instance: start vector, m square transformations, selector.

    ``functional_forms[i]`` is the row-action form of transformation i when
    it qualifies (detected automatically at construction), else None.
    """

    semiring: Semiring
    v: Vector
    transformations: tuple
    selector: DenseMatrix
    functional_forms: tuple

    @property
    def d(self) -> int:
        return len(self.v)

    @property
    def m(self) -> int:
        return len(self.transformations)

    @property
    def h(self) -> int:
        return self.selector.nrows

    @property
    def all_functional(self) -> bool:
        return all(f is not None for f in self.functional_forms)

    @property
    def packed_ready(self) -> bool:
        """True when the bitset evaluation path applies: 0/1 start vector and
        every transformation functional (trajectories then stay 0/1)."""
        return self.all_functional and all(e == 0 or e == 1 for e in self.v)


def new_instance(
    semiring: Semiring,
    v: Sequence[Scalar],
    transformations: Sequence[Matrix],
    selector: Matrix,
) -> VestInstance:
    """Validate, canonicalize, and classify a raw instance description.

    Every scalar is canonicalized for *semiring*; functional forms are
    detected and cached for every transformation that qualifies.
    """
    trans = tuple(transformations)
    if not trans:
        raise EmptyTransformationList("an instance needs at least one transformation")
    vv = canon_vector(semiring, v)
    d = len(vv)
    if d == 0:
        raise DimensionMismatch("the start vector must have dimension >= 1")

    stored = []
    forms = []
    for idx, t in enumerate(trans):
        if isinstance(t, FunctionalMatrix):
            if t.dim != d:
                raise DimensionMismatch(
                    f"transformation {idx} is {t.dim}x{t.dim}, expected {d}x{d}")
            stored.append(t)
            forms.append(t)
        elif isinstance(t, DenseMatrix):
            if t.nrows != d or t.ncols != d:
                raise DimensionMismatch(
                    f"transformation {idx} is {t.nrows}x{t.ncols}, expected {d}x{d}")
            canon = DenseMatrix(tuple(canon_vector(semiring, row) for row in t.rows))
            stored.append(canon)
            forms.append(to_functional(canon))
        else:
            raise TypeError(f"transformation {idx} is not a matrix: {type(t).__name__}")

    if isinstance(selector, FunctionalMatrix):
        selector = selector.dense()
    if not isinstance(selector, DenseMatrix):
        raise TypeError(f"selector is not a matrix: {type(selector).__name__}")
    if selector.ncols != d:
        raise DimensionMismatch(
            f"selector has {selector.ncols} columns, expected {d}")
    sel = DenseMatrix(tuple(canon_vector(semiring, row) for row in selector.rows))

    return VestInstance(semiring, vv, tuple(stored), sel, tuple(forms))


def instance_fingerprint(instance: VestInstance) -> str:
    """Short stable digest of the instance's mathematical content.

    Transformations with a functional form are hashed through that form, so
    dense and compact representations of the same matrix agree.
    """
    h = hashlib.sha256()
    h.update(f"{instance.semiring.value};{instance.d};{instance.h};{instance.m};".encode())
    h.update(",".join(scalar_to_string(e) for e in instance.v).encode())
    for t, form in zip(instance.transformations, instance.functional_forms):
        if form is not None:
            h.update(b"|F")
            h.update(",".join("z" if a is None else str(a) for a in form.actions).encode())
        else:
            h.update(b"|D")
            h.update(",".join(scalar_to_string(e) for row in t.rows for e in row).encode())
    h.update(b"|S")
    h.update(",".join(scalar_to_string(e) for row in instance.selector.rows for e in row).encode())
    return h.hexdigest()[:16]
