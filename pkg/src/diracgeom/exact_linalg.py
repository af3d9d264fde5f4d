"""Exact linear algebra over the Gaussian rationals Q(i).

Scalars are stored as a common-denominator triple ``(a + b*i) / d`` with
``d > 0`` and ``gcd(a, b, d) == 1``, which is a unique representative.
Row reduction clears denominators and eliminates over the Gaussian
integers, dividing out the integer content of every row as it goes, and
only returns to field elements when normalizing pivots.  Real input takes
a pure-integer path.

Subspaces are canonicalized to their reduced row echelon basis at
construction, so ``==`` on two subspaces is subspace equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
    "parse_scalar",
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "image",
    "preimage",
    "intersect",
    "sum_subspaces",
    "annihilator",
    "conj",
    "DimensionError",
]


class DimensionError(ValueError):
    """Shapes of the operands do not fit together."""


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


class Scalar:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = _to_fraction(re)
        im = _to_fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "Scalar":
        # callers guarantee d != 0
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        s = object.__new__(cls)
        s._a, s._b, s._d = a, b, d
        return s

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "Scalar":
        if self._b == 0:
            return self
        s = object.__new__(Scalar)
        s._a, s._b, s._d = self._a, -self._b, self._d
        return s

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __neg__(self) -> "Scalar":
        s = object.__new__(Scalar)
        s._a, s._b, s._d = -self._a, -self._b, self._d
        return s

    def __pos__(self) -> "Scalar":
        return self

    def __add__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return Scalar._raw(self._a + other._a, self._b + other._b, d1)
        return Scalar._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        a, b, c, e = self._a, self._b, other._a, other._b
        if b == 0 and e == 0:
            return Scalar._raw(a * c, 0, self._d * other._d)
        return Scalar._raw(a * c - b * e, a * e + b * c, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return Scalar._raw(d * a, -d * b, n)

    def __truediv__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return as_scalar(other) * self.inverse()

    def __repr__(self) -> str:
        return f"Scalar('{self}')"

    def __str__(self) -> str:
        return format_scalar(self)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, Scalars and scalar strings to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        s = object.__new__(Scalar)
        s._a, s._b, s._d = x, 0, 1
        return s
    if isinstance(x, Rational):
        return Scalar._raw(int(x.numerator), 0, int(x.denominator))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(s: Scalar) -> str:
    """Canonical text form: ``a/b``, ``a/b+c/d*i`` or ``c/d*i``."""
    re_part, im_part = s.re, s.im
    if im_part == 0:
        return _format_rational(re_part)
    im_text = _format_rational(im_part) + "*i"
    if re_part == 0:
        return im_text
    sign = "" if im_part < 0 else "+"
    return f"{_format_rational(re_part)}{sign}{im_text}"


_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?:(?P<isign>[+-])(?P<imabs>\d+(?:/\d+)?)?\*?i)?"
    rf"|(?P<im>{_RAT})?\*?i|(?P<ionly>[+-])?i)$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical text form (whitespace tolerated).

    Accepts ``3``, ``-1/2``, ``1/2+3/4*i``, ``-2*i``, ``i`` and ``1-i``.
    """
    t = text.replace(" ", "")
    m = _SCALAR_RE.match(t)
    if not m or not t:
        raise ValueError(f"malformed scalar {text!r}")
    if m.group("re") is not None:
        re_part = Fraction(m.group("re"))
        if m.group("isign") is None:
            return Scalar(re_part)
        mag = Fraction(m.group("imabs")) if m.group("imabs") else Fraction(1)
        return Scalar(re_part, mag if m.group("isign") == "+" else -mag)
    if m.group("im") is not None:
        return Scalar(0, Fraction(m.group("im")))
    return Scalar(0, -1 if m.group("ionly") == "-" else 1)


# ---------------------------------------------------------------------------
# integer-cleared row reduction (the workhorse)
# ---------------------------------------------------------------------------


def _clear_row(row: Sequence[Scalar]):
    """Scale a row of Scalars to Gaussian integers; returns (re_ints, im_ints)."""
    L = 1
    for s in row:
        d = s._d
        if d != 1 and L % d:
            L = L * d // gcd(L, d)
    return [s._a * (L // s._d) for s in row], [s._b * (L // s._d) for s in row]


def _rref_real(rows: list[list[int]], ncols: int):
    rows = [r for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        best = 0
        for i in range(r, nrows):
            v = rows[i][c]
            if v and (p < 0 or abs(v) < best):
                p, best = i, abs(v)
                if best == 1:
                    break
        if p < 0:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        pr = rows[r]
        pv = pr[c]
        for i in range(nrows):
            if i == r:
                continue
            ri = rows[i]
            x = ri[c]
            if not x:
                continue
            g = gcd(pv, x)
            a, b = pv // g, x // g
            new = [a * u - b * w for u, w in zip(ri, pr)]
            g = gcd(*new)
            if g > 1:
                new = [u // g for u in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    out = []
    for k, c in enumerate(pivots):
        row = rows[k]
        pv = row[c]
        out.append(tuple(Scalar._raw(u, 0, pv) if u else ZERO for u in row))
    return out, pivots


def _rref_complex(re_rows: list[list[int]], im_rows: list[list[int]], ncols: int):
    pairs = [(a, b) for a, b in zip(re_rows, im_rows) if any(a) or any(b)]
    R = [p[0] for p in pairs]
    M = [p[1] for p in pairs]
    pivots: list[int] = []
    r = 0
    nrows = len(R)
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if R[i][c] or M[i][c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            R[p], R[r] = R[r], R[p]
            M[p], M[r] = M[r], M[p]
        pr, pm = R[r], M[r]
        va, vb = pr[c], pm[c]
        for i in range(nrows):
            if i == r:
                continue
            xa, xb = R[i][c], M[i][c]
            if not xa and not xb:
                continue
            ra, rm = R[i], M[i]
            # row_i <- piv * row_i - x * piv_row  (Gaussian integer arithmetic)
            new_a = [va * u - vb * w - (xa * s - xb * t) for u, w, s, t in zip(ra, rm, pr, pm)]
            new_b = [va * w + vb * u - (xa * t + xb * s) for u, w, s, t in zip(ra, rm, pr, pm)]
            g = gcd(*new_a, *new_b)
            if g > 1:
                new_a = [u // g for u in new_a]
                new_b = [u // g for u in new_b]
            R[i], M[i] = new_a, new_b
        pivots.append(c)
        r += 1
    out = []
    for k, c in enumerate(pivots):
        ra, rm = R[k], M[k]
        va, vb = ra[c], rm[c]
        n = va * va + vb * vb
        # u / (va + i vb) = u * (va - i vb) / n
        out.append(
            tuple(
                Scalar._raw(u * va + w * vb, w * va - u * vb, n) if (u or w) else ZERO
                for u, w in zip(ra, rm)
            )
        )
    return out, pivots


def _rref_rows(rows: Iterable[Sequence[Scalar]], ncols: int):
    """RREF of a list of Scalar rows; zero rows dropped.  Returns (rows, pivots)."""
    re_rows, im_rows = [], []
    cplx = False
    for row in rows:
        a, b = _clear_row(row)
        re_rows.append(a)
        im_rows.append(b)
        if not cplx and any(b):
            cplx = True
    if not cplx:
        return _rref_real(re_rows, ncols)
    return _rref_complex(re_rows, im_rows, ncols)


def _nullspace_from_rref(red, pivots, ncols: int) -> list[tuple[Scalar, ...]]:
    """Nullspace basis read off rows already in RREF, one vector per free column."""
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        v = [ZERO] * ncols
        v[j] = ONE
        for k, c in enumerate(pivots):
            x = red[k][j]
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return basis


def _nullspace_rows(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[tuple[Scalar, ...]]:
    """Basis of {v : row . v = 0 for every row}."""
    red, pivots = _rref_rows(rows, ncols)
    return _nullspace_from_rref(red, pivots, ncols)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def _vec(xs) -> tuple[Scalar, ...]:
    return tuple(as_scalar(x) for x in xs)


class Matrix:
    """Dense immutable matrix of Scalars; acts on column vectors."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Sequence[Sequence] = (), cols: int | None = None):
        data = [_vec(r) for r in data]
        nrows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise DimensionError("ragged matrix rows")
        self.rows = nrows
        self.cols = cols
        self.entries = tuple(x for r in data for x in r)

    @classmethod
    def _from_rows(cls, rows: Sequence[tuple[Scalar, ...]], cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m.entries = tuple(x for r in rows for x in r)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._from_rows([tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._from_rows([(ZERO,) * cols for _ in range(rows)], cols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        out_rows: list[tuple[Scalar, ...]] = []
        cols = None
        for brow in blocks:
            h = brow[0].rows
            if any(b.rows != h for b in brow):
                raise DimensionError("block row heights differ")
            width = sum(b.cols for b in brow)
            if cols is None:
                cols = width
            elif cols != width:
                raise DimensionError("block column widths differ")
            for i in range(h):
                out_rows.append(tuple(x for b in brow for x in b.row(i)))
        return cls._from_rows(out_rows, cols or 0)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        c = self.cols
        return self.entries[i * c : (i + 1) * c]

    def row_list(self) -> list[tuple[Scalar, ...]]:
        c = self.cols
        e = self.entries
        return [e[i * c : (i + 1) * c] for i in range(self.rows)]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return self.entries[j :: self.cols] if self.cols else ()

    @property
    def T(self) -> "Matrix":
        return Matrix._from_rows([self.col(j) for j in range(self.cols)], self.rows)

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self.row_list()]

    def apply(self, v: Sequence) -> tuple[Scalar, ...]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for a {self.rows}x{self.cols} matrix")
        v = _vec(v)
        return tuple(dot(r, v) for r in self.row_list())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.col(j) for j in range(other.cols)]
        return Matrix._from_rows([tuple(dot(r, c) for c in ocols) for r in self.row_list()], other.cols)

    def _zip(self, other: "Matrix", op) -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        m = object.__new__(Matrix)
        m.rows, m.cols = self.rows, self.cols
        m.entries = tuple(op(a, b) for a, b in zip(self.entries, other.entries))
        return m

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        m = object.__new__(Matrix)
        m.rows, m.cols = self.rows, self.cols
        m.entries = tuple(c * x for x in self.entries)
        return m

    def conj(self) -> "Matrix":
        m = object.__new__(Matrix)
        m.rows, m.cols = self.rows, self.cols
        m.entries = tuple(x.conjugate() for x in self.entries)
        return m

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_antisymmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        return all(self[i, j] == -self[j, i] for i in range(n) for j in range(i, n))

    def rank(self) -> int:
        return len(_rref_rows(self.row_list(), self.cols)[1])

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        aug = [r + tuple(ONE if i == j else ZERO for j in range(n)) for i, r in enumerate(self.row_list())]
        red, pivots = _rref_rows(aug, 2 * n)
        # pivots ascend, so the left block is invertible iff pivot n-1 sits in column n-1
        if n and (len(pivots) < n or pivots[n - 1] != n - 1):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._from_rows([r[n:] for r in red[:n]], n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.row_list())
        return f"Matrix([{body}])"


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """Bilinear (not Hermitian) dot product."""
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of Q(i)^n held by its reduced row echelon basis."""

    __slots__ = ("ambient_dim", "_rows", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = []
        for v in vectors:
            v = _vec(v)
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            rows.append(v)
        red, piv = _rref_rows(rows, ambient_dim)
        self.ambient_dim = ambient_dim
        self._rows = tuple(red)
        self._pivots = tuple(piv)

    @classmethod
    def _canonical(cls, ambient_dim: int, rows, pivots) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim = ambient_dim
        s._rows = tuple(rows)
        s._pivots = tuple(pivots)
        return s

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, vectors)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._canonical(n, (), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls._canonical(n, Matrix.identity(n).row_list(), range(n))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors with the given indices."""
        idx = sorted(set(indices))
        rows = [tuple(ONE if j == i else ZERO for j in range(n)) for i in idx]
        return cls._canonical(n, rows, idx)

    @property
    def basis(self) -> Matrix:
        return Matrix._from_rows(self._rows, self.ambient_dim)

    @property
    def vectors(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence[Scalar]) -> list[Scalar]:
        """Remainder of ``v`` after clearing the pivot entries against the basis."""
        w = list(v)
        for row, c in zip(self._rows, self._pivots):
            x = w[c]
            if x:
                w = [a - x * b if b else a for a, b in zip(w, row)]
        return w

    def contains(self, v: Sequence) -> bool:
        v = _vec(v)
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        return not any(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> tuple[Scalar, ...]:
        """Coefficients of ``v`` in the stored basis; ``v`` must lie in the subspace."""
        v = _vec(v)
        if any(self.reduce(v)):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self._pivots)

    def combine(self, coeffs: Sequence) -> tuple[Scalar, ...]:
        """The vector with the given coordinates in the stored basis."""
        acc = [ZERO] * self.ambient_dim
        for c, row in zip(coeffs, self._rows):
            c = as_scalar(c)
            if c:
                acc = [a + c * b for a, b in zip(acc, row)]
        return tuple(acc)

    def issubset(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        if self.dim > other.dim:
            return False
        return all(not any(other.reduce(v)) for v in self._rows)

    __le__ = issubset

    def __ge__(self, other: "Subspace") -> bool:
        return other.issubset(self)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_subspaces(self, other)

    def conj(self) -> "Subspace":
        if all(x.is_real() for r in self._rows for x in r):
            return self
        return Subspace(self.ambient_dim, [tuple(x.conjugate() for x in r) for r in self._rows])

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"Subspace({self.ambient_dim}, [{body}])"


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form with zero rows removed."""
    red, _ = _rref_rows(m.row_list(), m.cols)
    return Matrix._from_rows(red, m.cols)


def kernel(f: Matrix) -> Subspace:
    """{x : f x = 0} as a subspace of the domain."""
    return Subspace(f.cols, _nullspace_rows(f.row_list(), f.cols))


def annihilator(s: Subspace) -> Subspace:
    """Ann(s) in dual coordinates (dual basis shares indices with the primal)."""
    return Subspace(s.ambient_dim, _nullspace_from_rref(s._rows, s._pivots, s.ambient_dim))


def sum_subspaces(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if not a._rows:
        return b
    if not b._rows:
        return a
    return Subspace(a.ambient_dim, a._rows + b._rows)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b = Ann(Ann(a) + Ann(b))."""
    _check_ambient(a, b)
    n = a.ambient_dim
    if not a._rows or not b._rows:
        return Subspace.zero(n)
    if a.dim == n:
        return b
    if b.dim == n:
        return a
    eqs = _nullspace_from_rref(a._rows, a._pivots, n) + _nullspace_from_rref(b._rows, b._pivots, n)
    return Subspace(n, _nullspace_rows(eqs, n))


def image(f: Matrix, s: Subspace) -> Subspace:
    """f(s); ``s`` lives in the domain of ``f``."""
    if s.ambient_dim != f.cols:
        raise DimensionError(f"subspace of dimension {s.ambient_dim} fed to a map with {f.cols} columns")
    frows = f.row_list()
    return Subspace(f.rows, [tuple(dot(r, v) for r in frows) for v in s._rows])


def preimage(f: Matrix, s: Subspace) -> Subspace:
    """f^{-1}(s) = ker(N f) where the rows of N span Ann(s)."""
    if s.ambient_dim != f.rows:
        raise DimensionError(f"subspace of dimension {s.ambient_dim} pulled back along a map with {f.rows} rows")
    eqs = _nullspace_from_rref(s._rows, s._pivots, s.ambient_dim)
    fcols = [f.col(j) for j in range(f.cols)]
    composed = [tuple(dot(phi, c) for c in fcols) for phi in eqs]
    return Subspace(f.cols, _nullspace_rows(composed, f.cols))


def conj(x):
    """Entrywise complex conjugation of a Scalar, vector, Matrix or Subspace."""
    if isinstance(x, Scalar):
        return x.conjugate()
    if isinstance(x, (Matrix, Subspace)):
        return x.conj()
    if isinstance(x, (tuple, list)):
        return type(x)(conj(v) for v in x)
    return as_scalar(x).conjugate()
