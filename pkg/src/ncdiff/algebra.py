"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .exactla import QQ, Matrix, Subspace, kernel, vstack, unit_vector, DimensionError


@dataclass(frozen=True)
class Report:
    """Outcome of a validation: ``ok`` plus the first violation, if any."""

    ok: bool
    violation: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class Algebra:
    """Unital associative algebra with ``e_i e_j = sum_k mul[i][j][k] e_k``."""

    name: str
    basis_labels: tuple
    unit: tuple
    mul: tuple
    field: object = dc_field(default=QQ)

    def __post_init__(self):
        n = len(self.basis_labels)
        f = self.field
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        object.__setattr__(self, "unit", tuple(f(x) for x in self.unit))
        if len(self.unit) != n:
            raise DimensionError("unit has %d coordinates, algebra has dim %d"
                                 % (len(self.unit), n))
        mul = tuple(tuple(tuple(f(x) for x in cell) for cell in row) for row in self.mul)
        if len(mul) != n or any(len(row) != n or any(len(c) != n for c in row) for row in mul):
            raise DimensionError("structure constants must be a %dx%dx%d array" % (n, n, n))
        object.__setattr__(self, "mul", mul)
        # left_mats[i] is the matrix of x -> e_i x, right_mats[i] of x -> x e_i
        left = tuple(Matrix.from_columns([mul[i][j] for j in range(n)], n, f) for i in range(n))
        right = tuple(Matrix.from_columns([mul[j][i] for j in range(n)], n, f) for i in range(n))
        object.__setattr__(self, "_left", left)
        object.__setattr__(self, "_right", right)

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.basis_labels == other.basis_labels
                and self.unit == other.unit and self.mul == other.mul
                and self.field == other.field)

    def __hash__(self):
        return hash((self.basis_labels, self.unit, self.mul))

    def __repr__(self):
        return "Algebra(%r, dim=%d)" % (self.name, self.dim)

    # elements -----------------------------------------------------------

    def basis(self, i):
        return unit_vector(self.dim, i, self.field)

    def element(self, label):
        return self.basis(self.basis_labels.index(label))

    def zero(self):
        return (self.field.zero,) * self.dim

    def elem(self, coeffs):
        """Coerce a coefficient sequence (or a basis label) into an element."""
        if isinstance(coeffs, str):
            return self.element(coeffs)
        coeffs = tuple(self.field(x) for x in coeffs)
        if len(coeffs) != self.dim:
            raise DimensionError("element has %d coordinates, algebra has dim %d"
                                 % (len(coeffs), self.dim))
        return coeffs

    def multiply(self, a, b):
        if len(a) != self.dim or len(b) != self.dim:
            raise DimensionError("elements must have %d coordinates" % self.dim)
        out = [self.field.zero] * self.dim
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                xy = x * y
                for k, c in enumerate(self.mul[i][j]):
                    if c != 0:
                        out[k] += xy * c
        return tuple(out)

    def commutator(self, a, b):
        ab = self.multiply(a, b)
        ba = self.multiply(b, a)
        return tuple(x - y for x, y in zip(ab, ba))

    def left_matrix(self, a) -> Matrix:
        """Matrix of x -> a x."""
        return _combine(self._left, a, self.dim, self.field)

    def right_matrix(self, a) -> Matrix:
        """Matrix of x -> x a."""
        return _combine(self._right, a, self.dim, self.field)

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mul[i][j] == self.mul[j][i] for i in range(n) for j in range(n))

    def validate(self) -> Report:
        return validate(self)

    def center(self) -> Subspace:
        return center(self)


def _combine(mats, a, n, field):
    nz = [i for i, x in enumerate(a) if x != 0]
    if len(nz) == 1 and a[nz[0]] == 1:
        return mats[nz[0]]
    out = Matrix.zeros(n, n, field)
    for x, m in zip(a, mats):
        if x != 0:
            out = out + m.scale(x)
    return out


def multiply(A: Algebra, a, b):
    return A.multiply(a, b)


def validate(A: Algebra) -> Report:
    """Check associativity on basis triples and the two unit laws."""
    n = A.dim
    if n == 0 or all(x == 0 for x in A.unit):
        return Report(False, "unit is zero")
    for i, j, k in itertools.product(range(n), repeat=3):
        ei, ej, ek = A.basis(i), A.basis(j), A.basis(k)
        lhs = A.multiply(A.multiply(ei, ej), ek)
        rhs = A.multiply(ei, A.multiply(ej, ek))
        if lhs != rhs:
            return Report(False, "associativity fails on (%s, %s, %s)"
                          % (A.basis_labels[i], A.basis_labels[j], A.basis_labels[k]),
                          (i, j, k))
    for i in range(n):
        ei = A.basis(i)
        if A.multiply(A.unit, ei) != ei:
            return Report(False, "left unit law fails on %s" % A.basis_labels[i], (i,))
        if A.multiply(ei, A.unit) != ei:
            return Report(False, "right unit law fails on %s" % A.basis_labels[i], (i,))
    return Report(True)


def center(A: Algebra) -> Subspace:
    """Kernel of the stacked system z -> z e_i - e_i z."""
    n = A.dim
    blocks = [A._right[i] - A._left[i] for i in range(n)]
    return kernel(vstack(blocks))


def is_central(A: Algebra, z) -> bool:
    return all(A.commutator(z, A.basis(i)) == A.zero() for i in range(A.dim))


# ---------------------------------------------------------------------------
# the zoo


def _from_table(name, labels, table, unit):
    """Build an algebra from a product table ``table[(a, b)] = {label: coeff}``."""
    n = len(labels)
    idx = {l: i for i, l in enumerate(labels)}
    mul = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (a, b), prod in table.items():
        for lab, c in prod.items():
            mul[idx[a]][idx[b]][idx[lab]] += c
    u = [0] * n
    for lab, c in unit.items():
        u[idx[lab]] = c
    return Algebra(name, tuple(labels), tuple(u), tuple(tuple(tuple(c) for c in r) for r in mul))


def truncated_polynomial(n: int, name: str | None = None) -> Algebra:
    """Q[x]/(x^n) in the monomial basis 1, x, ..., x^(n-1)."""
    labels = ["1"] + ["x" if k == 1 else "x^%d" % k for k in range(1, n)]
    table = {}
    for i in range(n):
        for j in range(n):
            table[labels[i], labels[j]] = {labels[i + j]: 1} if i + j < n else {}
    return _from_table(name or "trunc%d" % n, labels, table, {"1": 1})


def matrix_algebra(n: int = 2, upper: bool = False, name: str | None = None) -> Algebra:
    """Full (or upper-triangular) n x n matrices in the matrix-unit basis."""
    pairs = [(i, j) for i in range(n) for j in range(n) if not upper or i <= j]
    labels = ["E%d%d" % (i + 1, j + 1) for i, j in pairs]
    table = {}
    for (i, j), la in zip(pairs, labels):
        for (k, l), lb in zip(pairs, labels):
            table[la, lb] = {"E%d%d" % (i + 1, l + 1): 1} if j == k else {}
    unit = {"E%d%d" % (i + 1, i + 1): 1 for i in range(n)}
    return _from_table(name or ("ut%d" % n if upper else "m%d" % n), labels, table, unit)


def quaternions() -> Algebra:
    labels = ["1", "i", "j", "k"]
    rules = {
        ("i", "i"): ("1", -1), ("j", "j"): ("1", -1), ("k", "k"): ("1", -1),
        ("i", "j"): ("k", 1), ("j", "i"): ("k", -1),
        ("j", "k"): ("i", 1), ("k", "j"): ("i", -1),
        ("k", "i"): ("j", 1), ("i", "k"): ("j", -1),
    }
    table = {}
    for a in labels:
        for b in labels:
            if a == "1":
                table[a, b] = {b: 1}
            elif b == "1":
                table[a, b] = {a: 1}
            else:
                lab, c = rules[a, b]
                table[a, b] = {lab: c}
    return _from_table("quat", labels, table, {"1": 1})


def group_algebra_s3() -> Algebra:
    """Q[S_3]; (g h)(x) = g(h(x)), elements as permutations of (0, 1, 2)."""
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    name_of = dict(zip(perms, labels))
    table = {}
    for g, lg in zip(perms, labels):
        for h, lh in zip(perms, labels):
            gh = tuple(g[h[x]] for x in range(3))
            table[lg, lh] = {name_of[gh]: 1}
    return _from_table("gs3", labels, table, {"e": 1})


def _field_q() -> Algebra:
    return Algebra("Q", ("1",), (1,), (((1,),),))


_ZOO = {
    "Q": _field_q,
    "dual": lambda: truncated_polynomial(2, "dual"),
    "trunc3": lambda: truncated_polynomial(3, "trunc3"),
    "trunc4": lambda: truncated_polynomial(4, "trunc4"),
    "m2": lambda: matrix_algebra(2),
    "quat": quaternions,
    "ut2": lambda: matrix_algebra(2, upper=True),
    "gs3": group_algebra_s3,
}

ZOO_NAMES = tuple(_ZOO)


def zoo(name: str) -> Algebra:
    """Return a built-in algebra by name (see ``ZOO_NAMES``)."""
    try:
        A = _ZOO[name]()
    except KeyError:
        raise KeyError("unknown zoo algebra %r; known: %s" % (name, ", ".join(ZOO_NAMES))) from None
    if name == "dual":
        A = Algebra("dual", ("1", "eps"), A.unit, A.mul)
    return A
