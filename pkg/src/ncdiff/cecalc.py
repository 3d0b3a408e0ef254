"""The Chevalley-Eilenberg calculus of A-valued forms on the derivations of A.

A degree-k cochain is stored by its values on all k-tuples of a fixed K-basis
u_0, ..., u_{n-1} of the derivation Lie algebra: coordinate
``flat(t) * dim A + c`` holds component c of phi(u_{t_1}, ..., u_{t_k}).
Skew-symmetry and Z_A-multilinearity are linear constraints on these
coordinates, which is what ``cochain_space`` solves.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import Algebra
from .derivations import DerLie, derivation_lie_algebra
from .exactla import Matrix, Subspace, kernel, kron, vstack


@dataclass(frozen=True, eq=False)
class Cochain:
    calc: "CECalculus"
    degree: int
    coeffs: tuple

    def value(self, t):
        m = self.calc.algebra.dim
        i = self.calc.flat(t) * m
        return self.coeffs[i:i + m]

    def __add__(self, other):
        self._same(other)
        return Cochain(self.calc, self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        return Cochain(self.calc, self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c):
        return Cochain(self.calc, self.degree, tuple(c * a for a in self.coeffs))

    def _same(self, other):
        if other.calc is not self.calc or other.degree != self.degree:
            raise ValueError("cochains of different degree or calculus")

    def __eq__(self, other):
        return (isinstance(other, Cochain) and other.calc is self.calc
                and other.degree == self.degree and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def is_zero(self):
        return all(x == 0 for x in self.coeffs)

    def left_mul(self, a):
        """(a phi)(...) = a phi(...)."""
        return self.calc.map_values(self, lambda v: self.calc.algebra.multiply(a, v))

    def right_mul(self, a):
        """(phi a)(...) = phi(...) a."""
        return self.calc.map_values(self, lambda v: self.calc.algebra.multiply(v, a))

    def __repr__(self):
        return "Cochain(degree=%d)" % self.degree


def shuffle_sign(first, total):
    """Sign of the permutation listing ``first`` then the complement, both increasing."""
    inversions = sum(p - k for k, p in enumerate(first))
    return -1 if inversions % 2 else 1


class CECalculus:
    """Cochains, coboundary and wedge product for one algebra."""

    def __init__(self, A: Algebra, der: DerLie | None = None):
        self.algebra = A
        self.der = der or derivation_lie_algebra(A)
        self.n = self.der.dim
        self.field = A.field
        self._spaces = {}

    # coordinates --------------------------------------------------------

    def flat(self, t):
        i = 0
        for x in t:
            i = i * self.n + x
        return i

    def coord_dim(self, k):
        return self.n ** k * self.algebra.dim

    def tuples(self, k):
        return itertools.product(range(self.n), repeat=k)

    def from_function(self, k, f) -> Cochain:
        """Cochain whose value on the index tuple t is f(t)."""
        coeffs = []
        for t in self.tuples(k):
            coeffs.extend(f(t))
        return Cochain(self, k, tuple(coeffs))

    def from_vector(self, k, v) -> Cochain:
        if len(v) != self.coord_dim(k):
            raise ValueError("expected %d coordinates" % self.coord_dim(k))
        return Cochain(self, k, tuple(v))

    def element(self, a) -> Cochain:
        """A degree-0 cochain."""
        return Cochain(self, 0, tuple(a))

    def zero(self, k) -> Cochain:
        return Cochain(self, k, (self.field.zero,) * self.coord_dim(k))

    def map_values(self, phi, f) -> Cochain:
        return self.from_function(phi.degree, lambda t: f(phi.value(t)))

    # structure ---------------------------------------------------------

    @cached_property
    def center_basis(self):
        return self.algebra.center().basis

    @cached_property
    def center_actions(self):
        """For each center basis element z, the n x n matrix of u -> z u on derivations."""
        A = self.algebra
        mats = []
        for z in self.center_basis:
            Lz = A.left_matrix(z)
            cols = []
            for u in self.der.basis:
                zu = u.__class__(u.source, u.target, Lz @ u.matrix)
                cols.append(self.der.coordinates(zu))
            mats.append(Matrix.from_columns(cols, self.n, self.field))
        return mats

    def constraint_matrix(self, k) -> Matrix:
        """Skew-symmetry and Z_A-multilinearity rows on degree-k coordinates."""
        A = self.algebra
        m, N = A.dim, self.coord_dim(k)
        zero, one = self.field.zero, self.field.one
        rows = []
        tuples = list(self.tuples(k))
        for t in tuples:
            base = self.flat(t) * m
            for j in range(k - 1):
                s = list(t)
                s[j], s[j + 1] = s[j + 1], s[j]
                other = self.flat(s) * m
                for c in range(m):
                    row = [zero] * N
                    row[base + c] += one
                    row[other + c] += one
                    rows.append(tuple(row))
        for z, gamma in zip(self.center_basis, self.center_actions):
            Lz = A.left_matrix(z)
            for t in tuples:
                base = self.flat(t) * m
                for j in range(k):
                    for c in range(m):
                        row = [zero] * N
                        # phi(..., z u_{t_j}, ...) = sum_l gamma[l][t_j] phi(..., u_l, ...)
                        for l in range(self.n):
                            g = gamma[l, t[j]]
                            if g != 0:
                                s = list(t)
                                s[j] = l
                                row[self.flat(s) * m + c] += g
                        for cc in range(m):
                            if Lz[c, cc] != 0:
                                row[base + cc] -= Lz[c, cc]
                        rows.append(tuple(row))
        return Matrix(rows, N, self.field) if rows else Matrix.zeros(0, N, self.field)

    def cochain_space(self, k) -> Subspace:
        if k not in self._spaces:
            N = self.coord_dim(k)
            if k > self.n and self.field.one + self.field.one != 0:
                # skew-symmetric forms vanish beyond the number of basis vectors
                S = Subspace.zero(N, self.field)
            else:
                M = self.constraint_matrix(k)
                S = kernel(M) if M.nrows else Subspace.full(N, self.field)
            self._spaces[k] = S
        return self._spaces[k]

    def is_cochain(self, phi: Cochain) -> bool:
        return self.cochain_space(phi.degree).contains(phi.coeffs)

    def basis(self, k):
        return [Cochain(self, k, b) for b in self.cochain_space(k).basis]

    def random_cochain(self, k, rng: random.Random, lo=-2, hi=2) -> Cochain:
        S = self.cochain_space(k)
        coords = [self.field(rng.randint(lo, hi)) for _ in range(S.dim)]
        return Cochain(self, k, S.vector(coords))

    # operations --------------------------------------------------------

    def _der_apply(self, i, v):
        return self.der.basis[i].matrix.apply(v)

    def d(self, phi: Cochain, check=True) -> Cochain:
        """Chevalley-Eilenberg coboundary."""
        k = phi.degree
        c = self.der.bracket

        def value(t):
            out = [self.field.zero] * self.algebra.dim
            for i in range(k + 1):
                rest = t[:i] + t[i + 1:]
                term = self._der_apply(t[i], phi.value(rest))
                sgn = -1 if i % 2 else 1
                for q, x in enumerate(term):
                    if x != 0:
                        out[q] += sgn * x
            for i, j in itertools.combinations(range(k + 1), 2):
                rest = tuple(t[s] for s in range(k + 1) if s != i and s != j)
                sgn = -1 if (i + j) % 2 else 1
                for l, g in enumerate(c[t[i]][t[j]]):
                    if g == 0:
                        continue
                    val = phi.value((l,) + rest)
                    for q, x in enumerate(val):
                        if x != 0:
                            out[q] += sgn * g * x
            return out

        res = self.from_function(k + 1, value)
        if check and not self.is_cochain(res):
            raise ArithmeticError("coboundary left the cochain subspace")
        return res

    def exact(self, a) -> Cochain:
        """da, i.e. u -> u(a)."""
        return self.d(self.element(a))

    def wedge(self, phi: Cochain, psi: Cochain, check=True) -> Cochain:
        r, s = phi.degree, psi.degree
        A = self.algebra
        total = r + s
        shuffles = [(I, tuple(x for x in range(total) if x not in I),
                     shuffle_sign(I, total)) for I in itertools.combinations(range(total), r)]

        def value(t):
            out = [self.field.zero] * A.dim
            for I, J, sgn in shuffles:
                x = phi.value(tuple(t[i] for i in I))
                if all(v == 0 for v in x):
                    continue
                y = psi.value(tuple(t[j] for j in J))
                for q, v in enumerate(A.multiply(x, y)):
                    if v != 0:
                        out[q] += sgn * v
            return out

        res = self.from_function(total, value)
        if check and not self.is_cochain(res):
            raise ArithmeticError("wedge left the cochain subspace")
        return res

    # the subalgebra generated by exact forms ---------------------------

    def generated_subalgebra(self, k_max=3) -> list:
        """[O^0 A, O^1 A, ...] as subspaces of the cochain coordinate spaces."""
        A = self.algebra
        k_max = min(k_max, max(self.n, 1))
        layers = [Subspace.full(A.dim, self.field)]
        gens = []
        for j in range(A.dim):
            db = self.exact(A.basis(j))
            for i in range(A.dim):
                gens.append(db.left_mul(A.basis(i)))
        layers.append(Subspace(self.coord_dim(1), [g.coeffs for g in gens], self.field))
        one_forms = [Cochain(self, 1, b) for b in layers[1].basis]
        for k in range(2, k_max + 1):
            prev = [Cochain(self, k - 1, b) for b in layers[-1].basis]
            vecs = [self.wedge(w, eta).coeffs for w in one_forms for eta in prev]
            layers.append(Subspace(self.coord_dim(k), vecs, self.field))
        return layers

    # checks ------------------------------------------------------------

    def o1_direct(self) -> Subspace:
        """Hom_{Z_A}(der A, A) computed as a hom space, in cochain coordinates."""
        A = self.algebra
        m, n = A.dim, self.n
        if n == 0:
            return Subspace.zero(0, self.field)
        eye_n = Matrix.identity(n, self.field)
        eye_m = Matrix.identity(m, self.field)
        blocks = []
        for z, gamma in zip(self.center_basis, self.center_actions):
            # f o gamma_z - L_z o f on row-major entries of the m x n matrix f
            blocks.append(kron(eye_m, gamma.T) - kron(A.left_matrix(z), eye_n))
        S = kernel(vstack(blocks))
        # entry (c, t) of f is coordinate t*m + c of the cochain
        perm = lambda v: tuple(v[c * n + t] for t in range(n) for c in range(m))
        return Subspace(n * m, [perm(v) for v in S.basis], self.field)

    def da_b_identity_holds(self) -> bool:
        """da . b = d(ab) - a . db for all basis a, b."""
        A = self.algebra
        for i, j in itertools.product(range(A.dim), repeat=2):
            a, b = A.basis(i), A.basis(j)
            lhs = self.exact(a).right_mul(b)
            rhs = self.exact(A.multiply(a, b)) - self.exact(b).left_mul(a)
            if lhs != rhs:
                return False
        return True


# ---------------------------------------------------------------------------
# module-level operations


def cochain_space(A: Algebra, k: int, calc: CECalculus | None = None) -> Subspace:
    return (calc or CECalculus(A)).cochain_space(k)


def ce_d(phi: Cochain) -> Cochain:
    return phi.calc.d(phi)


def wedge(phi: Cochain, psi: Cochain) -> Cochain:
    return phi.calc.wedge(phi, psi)


def generated_subalgebra(A: Algebra, k_max=3, calc: CECalculus | None = None) -> list:
    return (calc or CECalculus(A)).generated_subalgebra(k_max)


def dd_zero(calc: CECalculus, k_max=2) -> bool:
    """d o d = 0 on every basis cochain of degree <= k_max."""
    for k in range(k_max + 1):
        for phi in calc.basis(k):
            if not calc.d(calc.d(phi)).is_zero():
                return False
    return True


@dataclass
class LeibnizReport:
    trials: int
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def graded_leibniz_check(A: Algebra, trials=100, seed=0, calc: CECalculus | None = None,
                         degrees=None) -> LeibnizReport:
    """d(phi ^ psi) = d phi ^ psi + (-1)^|phi| phi ^ d psi on random cochains."""
    calc = calc or CECalculus(A)
    rng = random.Random(seed)
    report = LeibnizReport(trials)
    for trial in range(trials):
        p, q = degrees if degrees else (rng.randint(0, 2), rng.randint(0, 2))
        phi = calc.random_cochain(p, rng)
        psi = calc.random_cochain(q, rng)
        lhs = calc.d(calc.wedge(phi, psi))
        sign = -1 if p % 2 else 1
        rhs = calc.wedge(calc.d(phi), psi) + calc.wedge(phi, calc.d(psi)).scale(sign)
        if lhs != rhs:
            report.violations.append({"trial": trial, "degrees": (p, q)})
    return report


LINEARITIES = ("left", "right", "two-sided")


@dataclass(frozen=True)
class DualityReport:
    linearity: str
    der_dim: int
    one_forms_dim: int
    hom_dim: int
    rank: int

    @property
    def injective(self):
        return self.rank == self.der_dim

    @property
    def surjective(self):
        return self.rank == self.hom_dim

    @property
    def bijective(self):
        return self.injective and self.surjective


def vector_field_duality(A: Algebra, calc: CECalculus | None = None,
                         linearity="left") -> DualityReport:
    """Evaluation u -> (omega -> omega(u)) from der A into A-linear maps O^1 A -> A.

    ``linearity`` selects f(a omega) = a f(omega) ("left"), f(omega a) = f(omega) a
    ("right") or both ("two-sided").
    """
    if linearity not in LINEARITIES:
        raise ValueError("linearity must be one of %s" % (LINEARITIES,))
    calc = calc or CECalculus(A)
    m, n = A.dim, calc.n
    O1 = calc.generated_subalgebra(1)[1]
    M = O1.dim
    if M == 0:
        return DualityReport(linearity, n, 0, 0, 0)
    basis = O1.basis
    f = A.field

    def action(side):
        # e_i acting on O^1 A, in the basis of O^1 A
        mats = []
        for i in range(m):
            e = A.basis(i)
            imgs = [Cochain(calc, 1, b) for b in basis]
            imgs = [w.left_mul(e) if side == "left" else w.right_mul(e) for w in imgs]
            mats.append(Matrix.from_columns([O1.coordinates(w.coeffs) for w in imgs], M, f))
        return mats

    eye_M, eye_m = Matrix.identity(M, f), Matrix.identity(m, f)
    blocks = []
    # F Lambda_i = L_i F (left) or F Rho_i = R_i F (right), row-major entries of F
    if linearity in ("left", "two-sided"):
        blocks += [kron(eye_m, lam.T) - kron(A.left_matrix(A.basis(i)), eye_M)
                   for i, lam in enumerate(action("left"))]
    if linearity in ("right", "two-sided"):
        blocks += [kron(eye_m, rho.T) - kron(A.right_matrix(A.basis(i)), eye_M)
                   for i, rho in enumerate(action("right"))]
    H = kernel(vstack(blocks))
    evs = []
    for t in range(n):
        vec = tuple(b[t * m + c] for c in range(m) for b in basis)
        if not H.contains(vec):
            raise ArithmeticError("evaluation at a derivation is not %s A-linear" % linearity)
        evs.append(vec)
    rank = Subspace(m * M, evs, f).dim
    return DualityReport(linearity, n, M, H.dim, rank)
