"""Exact linear algebra over the rationals or a prime field.

Everything the rest of the package computes reduces to Gaussian elimination
on small dense matrices.  Entries are :class:`fractions.Fraction` (the default
field) or :class:`Mod` residues; no floating point appears anywhere.

Subspaces are stored by their reduced row-echelon basis, which is unique, so
two :class:`Subspace` objects are equal exactly when they span the same space.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


# ---------------------------------------------------------------------------
# fields


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, Fraction):
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError("mixing residues of different primes")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero mod %d" % self.p)
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.value == o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "Mod(%d, %d)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


class Rationals:
    """The default base field."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            s = x.strip()
            if not _RATIONAL_RE.match(s):
                raise ValueError("not a rational literal: %r" % x)
            value = Fraction(s)  # raises ZeroDivisionError on "p/0"
            return value
        raise TypeError("cannot convert %r to a rational" % (x,))

    def format(self, x) -> str:
        return str(Fraction(x))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field of residues modulo a prime."""

    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.name = "Fp:%d" % p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)

    def __call__(self, x):
        if isinstance(x, Mod):
            return x
        if isinstance(x, str):
            s = x.strip()
            if not _RATIONAL_RE.match(s):
                raise ValueError("not a rational literal: %r" % x)
            x = Fraction(s)
        return Mod(x, self.p)

    def format(self, x) -> str:
        return str(self(x).value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()


def field_from_name(name: str):
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError("unknown field %r (expected 'Q' or 'Fp:<p>')" % name)


def field_of(x):
    """Best guess of the field a scalar lives in."""
    if isinstance(x, Mod):
        return PrimeField(x.p)
    return QQ


# ---------------------------------------------------------------------------
# vectors (plain tuples of scalars)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def vzero(n, field=QQ):
    return (field.zero,) * n


def is_zero_vector(v) -> bool:
    return all(x == 0 for x in v)


def unit_vector(n, i, field=QQ):
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def lincomb(coeffs, vectors, n, field=QQ):
    """Return sum(c * v) over paired coefficients and vectors of length n."""
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for k, x in enumerate(v):
            if x != 0:
                out[k] += c * x
    return tuple(out)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None, field=None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        if field is None:
            field = QQ
            for r in rows:
                if r:
                    field = field_of(r[0])
                    break
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.field = field

    @classmethod
    def _raw(cls, rows, ncols, field):
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m.field = field
        return m

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        return cls._raw(tuple((field.zero,) * ncols for _ in range(nrows)), ncols, field)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls._raw(tuple(unit_vector(n, i, field) for i in range(n)), n, field)

    @classmethod
    def from_columns(cls, cols, nrows, field=QQ):
        cols = [tuple(c) for c in cols]
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls._raw(rows, len(cols), field)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix._raw(tuple(zip(*self.rows)) if self.nrows else
                           tuple(() for _ in range(self.ncols)), self.nrows, self.field)

    def flat(self):
        """Row-major entry tuple."""
        return tuple(x for r in self.rows for x in r)

    @classmethod
    def from_flat(cls, entries, nrows, ncols, field=QQ):
        entries = tuple(entries)
        if len(entries) != nrows * ncols:
            raise DimensionError("expected %d entries, got %d" % (nrows * ncols, len(entries)))
        rows = tuple(entries[i * ncols:(i + 1) * ncols] for i in range(nrows))
        return cls._raw(rows, ncols, field)

    def apply(self, v):
        if len(v) != self.ncols:
            raise DimensionError("matrix %dx%d applied to vector of length %d"
                                 % (self.nrows, self.ncols, len(v)))
        zero = self.field.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, v):
                if a != 0 and b != 0:
                    s += a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError("cannot multiply %dx%d by %dx%d"
                                     % (self.nrows, self.ncols, other.nrows, other.ncols))
            zero = self.field.zero
            n = other.ncols
            orows = other.rows
            rows = []
            for r in self.rows:
                acc = [zero] * n
                for k, a in enumerate(r):
                    if a == 0:
                        continue
                    for j, b in enumerate(orows[k]):
                        if b != 0:
                            acc[j] += a * b
                rows.append(tuple(acc))
            return Matrix._raw(tuple(rows), n, self.field)
        return self.apply(tuple(other))

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch %s vs %s" % (self.shape, other.shape))
        return Matrix._raw(tuple(vadd(a, b) for a, b in zip(self.rows, other.rows)),
                           self.ncols, self.field)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionError("shape mismatch %s vs %s" % (self.shape, other.shape))
        return Matrix._raw(tuple(vsub(a, b) for a, b in zip(self.rows, other.rows)),
                           self.ncols, self.field)

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self.rows), self.ncols, self.field)

    def scale(self, c):
        return Matrix._raw(tuple(vscale(c, r) for r in self.rows), self.ncols, self.field)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.shape, self.rows))

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def rank(self):
        return Subspace.span(self.rows, self.ncols, self.field).dim

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return "Matrix(%dx%d: [%s])" % (self.nrows, self.ncols, body)


def vstack(mats, ncols=None, field=QQ):
    mats = list(mats)
    if not mats:
        return Matrix._raw((), ncols or 0, field)
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise DimensionError("vstack of matrices with different column counts")
    return Matrix._raw(tuple(r for m in mats for r in m.rows), ncols, mats[0].field)


def kron(a: Matrix, b: Matrix) -> Matrix:
    zero = a.field.zero
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple((x * y if x != 0 and y != 0 else zero) for x in ra for y in rb))
    return Matrix._raw(tuple(rows), a.ncols * b.ncols, a.field)


def block_diag(mats, field=QQ):
    n = sum(m.nrows for m in mats)
    c = sum(m.ncols for m in mats)
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append((field.zero,) * off + r + (field.zero,) * (c - off - m.ncols))
        off += m.ncols
    return Matrix._raw(tuple(rows), c, field) if rows else Matrix.zeros(n, c, field)


# ---------------------------------------------------------------------------
# elimination


class _Echelon:
    """Incrementally maintained reduced echelon basis."""

    def __init__(self, n, field):
        self.n = n
        self.field = field
        self.rows = {}  # pivot column -> row (list), pivot entry 1

    def reduce(self, v):
        v = list(v)
        for c, row in self.rows.items():
            f = v[c]
            if f != 0:
                for k, x in enumerate(row):
                    if x != 0:
                        v[k] -= f * x
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        for c, x in enumerate(v):
            if x != 0:
                break
        else:
            return False
        inv = self.field.one / x
        v = [y * inv if y != 0 else y for y in v]
        for pc, row in self.rows.items():
            f = row[c]
            if f != 0:
                for k, y in enumerate(v):
                    if y != 0:
                        row[k] -= f * y
        self.rows[c] = v
        return True

    def basis(self):
        return tuple(tuple(self.rows[c]) for c in sorted(self.rows))


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    ech = _Echelon(m.ncols, m.field)
    for r in m.rows:
        ech.add(r)
    basis = ech.basis()
    rows = basis + tuple((m.field.zero,) * m.ncols for _ in range(m.nrows - len(basis)))
    return Matrix._raw(rows, m.ncols, m.field)


class Subspace:
    """A subspace of K^n held by its canonical reduced echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "field")

    def __init__(self, ambient_dim, basis, field=QQ, _trusted=False):
        if not _trusted:
            ech = _Echelon(ambient_dim, field)
            for v in basis:
                if len(v) != ambient_dim:
                    raise DimensionError("vector of length %d in %d-dim space"
                                         % (len(v), ambient_dim))
                ech.add(tuple(field(x) for x in v))
            basis = ech.basis()
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.pivots = tuple(next(i for i, x in enumerate(b) if x != 0) for b in self.basis)
        self.field = field

    @classmethod
    def span(cls, vectors, ambient_dim, field=QQ):
        return cls(ambient_dim, vectors, field)

    @classmethod
    def zero(cls, n, field=QQ):
        return cls(n, (), field, _trusted=True)

    @classmethod
    def full(cls, n, field=QQ):
        return cls(n, tuple(unit_vector(n, i, field) for i in range(n)), field, _trusted=True)

    @property
    def dim(self):
        return len(self.basis)

    def is_full(self):
        return self.dim == self.ambient_dim

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspaces of K^%d and K^%d"
                                 % (self.ambient_dim, other.ambient_dim))

    def reduce(self, x):
        x = list(x)
        for c, row in zip(self.pivots, self.basis):
            f = x[c]
            if f != 0:
                for k, y in enumerate(row):
                    if y != 0:
                        x[k] -= f * y
        return x

    def contains(self, x) -> bool:
        if len(x) != self.ambient_dim:
            raise DimensionError("vector of length %d tested against K^%d"
                                 % (len(x), self.ambient_dim))
        return all(y == 0 for y in self.reduce(x))

    def __contains__(self, x):
        return self.contains(x)

    def coordinates(self, x):
        """Coefficients of x in the echelon basis; ValueError if x is outside."""
        if not self.contains(x):
            raise ValueError("vector is not in the subspace")
        return tuple(x[c] for c in self.pivots)

    def vector(self, coords):
        return lincomb(coords, self.basis, self.ambient_dim, self.field)

    def is_subspace_of(self, other) -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other):
        return self.is_subspace_of(other)

    def __add__(self, other):
        return span_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def annihilator(self) -> "Subspace":
        """{w : w . v = 0 for every v in self}."""
        if not self.basis:
            return Subspace.full(self.ambient_dim, self.field)
        return kernel(Matrix._raw(self.basis, self.ambient_dim, self.field))

    def equations(self) -> Matrix:
        """A matrix whose kernel is this subspace."""
        ann = self.annihilator()
        return Matrix._raw(ann.basis, self.ambient_dim, self.field)

    def complement_basis(self, within: "Subspace") -> tuple:
        """Basis vectors of ``within`` extending a basis of ``self & within``."""
        ech = _Echelon(self.ambient_dim, self.field)
        for b in intersect(self, within).basis:
            ech.add(b)
        out = []
        for b in within.basis:
            if ech.add(b):
                out.append(b)
        return tuple(out)

    def __repr__(self):
        return "Subspace(dim=%d in K^%d)" % (self.dim, self.ambient_dim)


def kernel(m: Matrix) -> Subspace:
    """{v : m v = 0}."""
    r = rref(m)
    n = m.ncols
    field = m.field
    pivots = {}
    for row in r.rows:
        for c, x in enumerate(row):
            if x != 0:
                pivots[c] = row
                break
    vecs = []
    for f in range(n):
        if f in pivots:
            continue
        v = [field.zero] * n
        v[f] = field.one
        for c, row in pivots.items():
            v[c] = -row[f]
        vecs.append(v)
    return Subspace(n, vecs, field)


def image(m: Matrix) -> Subspace:
    return Subspace(m.nrows, m.columns(), m.field)


def span_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check(v)
    return Subspace(u.ambient_dim, u.basis + v.basis, u.field)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    u._check(v)
    eqs = u.annihilator().basis + v.annihilator().basis
    if not eqs:
        return Subspace.full(u.ambient_dim, u.field)
    return kernel(Matrix._raw(eqs, u.ambient_dim, u.field))


def intersect_all(spaces, n, field=QQ) -> Subspace:
    eqs = []
    for s in spaces:
        eqs.extend(s.annihilator().basis)
    if not eqs:
        return Subspace.full(n, field)
    return kernel(Matrix._raw(tuple(eqs), n, field))


def preimage(m: Matrix, v: Subspace) -> Subspace:
    """{x : m x in v}."""
    if m.nrows != v.ambient_dim:
        raise DimensionError("map into K^%d, subspace of K^%d" % (m.nrows, v.ambient_dim))
    eqs = v.equations()
    if eqs.nrows == 0:
        return Subspace.full(m.ncols, m.field)
    return kernel(eqs @ m)


def preimage_all(maps, v: Subspace, n, field=QQ) -> Subspace:
    """{x : m x in v for every m in maps}, solved as one stacked system."""
    eqs = v.equations()
    if eqs.nrows == 0:
        return Subspace.full(n, field)
    blocks = [eqs @ m for m in maps]
    if not blocks:
        return Subspace.full(n, field)
    return kernel(vstack(blocks))


def solve(m: Matrix, b) -> tuple | None:
    """One solution x of m x = b, or None when inconsistent."""
    if len(b) != m.nrows:
        raise DimensionError("right-hand side length %d for %d rows" % (len(b), m.nrows))
    aug = Matrix._raw(tuple(r + (x,) for r, x in zip(m.rows, b)), m.ncols + 1, m.field)
    r = rref(aug)
    x = [m.field.zero] * m.ncols
    for row in r.rows:
        for c, y in enumerate(row):
            if y != 0:
                break
        else:
            continue
        if c == m.ncols:
            return None
        x[c] = row[-1]
    return tuple(x)
