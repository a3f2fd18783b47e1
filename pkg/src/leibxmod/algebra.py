"""Finite-dimensional Leibniz algebras over the rationals.

A Leibniz algebra is a vector space with a bilinear bracket satisfying

    [x, [y, z]] = [[x, y], z] - [[x, z], y],

a Lie algebra when additionally [x, x] = 0.  Algebras are presented by
structure constants c[i][j] = coordinates of [e_i, e_j]; a Leibniz
action of one algebra on another is a pair of trilinear tables (left
^m n and right n^m) subject to six compatibility axioms.  Validity is
always a report, not a boolean: downstream debugging needs the
violating triple and its residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratlin import (
    RatMatrix,
    Subspace,
    kernel,
    quotient,
    rat,
    vec,
    vec_is_zero,
    vec_accum,
    zero_vec,
)


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of a structural check: list of (label, residual) violations."""

    subject: str
    valid: bool
    violations: tuple

    def summary(self) -> str:
        if self.valid:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: INVALID ({len(self.violations)} violation(s))"]
        for label, residual in self.violations:
            lines.append(f"  {label}: residual {tuple(str(x) for x in residual)}")
        return "\n".join(lines)


def _report(subject, violations) -> ValidityReport:
    return ValidityReport(subject, not violations, tuple(violations))


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Structure-constant presentation: [e_i, e_j] = sum_k c[i][j][k] e_k."""

    name: str
    dim: int
    basis_names: tuple
    c: tuple  # c[i][j] is the coordinate vector of [e_i, e_j]

    def __post_init__(self):
        if len(self.basis_names) != self.dim or len(self.c) != self.dim:
            raise ValueError("structure table shape mismatch")
        for row in self.c:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise ValueError("structure table shape mismatch")

    @classmethod
    def from_table(cls, name: str, basis_names: Sequence[str], table) -> "LeibnizAlgebra":
        d = len(basis_names)
        c = tuple(tuple(vec(table[i][j]) for j in range(d)) for i in range(d))
        return cls(name, d, tuple(basis_names), c)

    @classmethod
    def abelian(cls, name: str, dim: int, basis_names=None) -> "LeibnizAlgebra":
        names = tuple(basis_names) if basis_names else tuple(f"e{i+1}" for i in range(dim))
        z = zero_vec(dim)
        return cls(name, dim, names, tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear extension of the structure constants."""
        acc = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            ci = self.c[i]
            for j, b in enumerate(y):
                if b != 0:
                    vec_accum(acc, a * b, ci[j])
        return tuple(acc)

    def full_subspace(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero_subspace(self) -> Subspace:
        return Subspace.zero(self.dim)


def check_leibniz(a: LeibnizAlgebra) -> ValidityReport:
    """Leibniz identity residuals on all basis triples."""
    bad = []
    names = a.basis_names
    for i in range(a.dim):
        ei = tuple(Fraction(1 if t == i else 0) for t in range(a.dim))
        for j in range(a.dim):
            for k in range(a.dim):
                r = a.bracket(ei, a.c[j][k])
                r = tuple(
                    x - y + z
                    for x, y, z in zip(r, a.bracket(a.c[i][j], _unit(a.dim, k)),
                                       a.bracket(a.c[i][k], _unit(a.dim, j))))
                # residual of [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]
                if not vec_is_zero(r):
                    bad.append((f"({names[i]},{names[j]},{names[k]})", r))
    return _report(f"leibniz identity on {a.name}", bad)


def _unit(n, i):
    return tuple(Fraction(1 if t == i else 0) for t in range(n))


def is_lie(a: LeibnizAlgebra) -> bool:
    """True iff the bracket is alternating ([x,x]=0; char 0 polarization)."""
    for i in range(a.dim):
        if not vec_is_zero(a.c[i][i]):
            return False
        for j in range(a.dim):
            if not vec_is_zero(tuple(x + y for x, y in zip(a.c[i][j], a.c[j][i]))):
                return False
    return True


@dataclass(frozen=True)
class LeibnizAction:
    """Mutual-action tables: left[i][j] = ^{m_i} n_j, right[j][i] = n_j ^ {m_i}."""

    actor: LeibnizAlgebra
    acted: LeibnizAlgebra
    left: tuple   # left[i][j]   in acted, i over actor, j over acted
    right: tuple  # right[j][i]  in acted, j over acted, i over actor

    def __post_init__(self):
        dm, dn = self.actor.dim, self.acted.dim
        if len(self.left) != dm or any(len(r) != dn for r in self.left):
            raise ValueError("left action table shape mismatch")
        if len(self.right) != dn or any(len(r) != dm for r in self.right):
            raise ValueError("right action table shape mismatch")

    @classmethod
    def trivial(cls, actor: LeibnizAlgebra, acted: LeibnizAlgebra) -> "LeibnizAction":
        z = zero_vec(acted.dim)
        left = tuple(tuple(z for _ in range(acted.dim)) for _ in range(actor.dim))
        right = tuple(tuple(z for _ in range(actor.dim)) for _ in range(acted.dim))
        return cls(actor, acted, left, right)

    @classmethod
    def adjoint(cls, a: LeibnizAlgebra) -> "LeibnizAction":
        """Action of an algebra on itself by brackets: ^x y=[x,y], y^x=[y,x]."""
        left = tuple(tuple(a.c[i][j] for j in range(a.dim)) for i in range(a.dim))
        right = tuple(tuple(a.c[j][i] for i in range(a.dim)) for j in range(a.dim))
        return cls(a, a, left, right)

    def act_left(self, mvec: Sequence, nvec: Sequence) -> tuple:
        """^x y for x in the actor, y in the acted algebra."""
        acc = [Fraction(0)] * self.acted.dim
        for i, a in enumerate(mvec):
            if a == 0:
                continue
            li = self.left[i]
            for j, b in enumerate(nvec):
                if b != 0:
                    vec_accum(acc, a * b, li[j])
        return tuple(acc)

    def act_right(self, nvec: Sequence, mvec: Sequence) -> tuple:
        """y^x for y in the acted algebra, x in the actor."""
        acc = [Fraction(0)] * self.acted.dim
        for j, b in enumerate(nvec):
            if b == 0:
                continue
            rj = self.right[j]
            for i, a in enumerate(mvec):
                if a != 0:
                    vec_accum(acc, b * a, rj[i])
        return tuple(acc)


def check_action(act: LeibnizAction) -> ValidityReport:
    """All six action axioms evaluated on basis triples.

    With L[i][j] = ^{m_i} n_j and R[j][i] = n_j ^ {m_i}, cm/cn the actor
    and acted structure constants, the axioms read:

      1. ^{[m,m']}n   = ^m(^{m'}n) + (^m n)^{m'}
      2. ^m [n,n']    = [^m n, n'] - [^m n', n]
      3. n^{[m,m']}   = (n^m)^{m'} - (n^{m'})^m
      4. [n,n']^m     = [n^m, n'] + [n, n'^m]
      5. ^m(^{m'}n)   = -^m(n^{m'})
      6. [n, ^m n']   = -[n, n'^m]
    """
    m, n = act.actor, act.acted
    L, R = act.left, act.right
    cm, cn = m.c, n.c
    dm, dn = m.dim, n.dim
    bad = []

    def comb(table_rows, coeffs):
        acc = [Fraction(0)] * dn
        for k, ck in enumerate(coeffs):
            if ck != 0:
                vec_accum(acc, ck, table_rows[k])
        return acc

    for i in range(dm):
        for i2 in range(dm):
            for j in range(dn):
                # axiom 1 over (m_i, m_i2, n_j)
                t1 = comb([L[k][j] for k in range(dm)], cm[i][i2])
                t2 = comb([L[i][k] for k in range(dn)], L[i2][j])
                t3 = comb([R[k][i2] for k in range(dn)], L[i][j])
                r = tuple(x - y - z for x, y, z in zip(t1, t2, t3))
                if not vec_is_zero(r):
                    bad.append((f"axiom1 ({m.basis_names[i]},{m.basis_names[i2]},"
                                f"{n.basis_names[j]})", r))
                # axiom 5 over (m_i, m_i2, n_j)
                t1 = comb([L[i][k] for k in range(dn)], L[i2][j])
                t2 = comb([L[i][k] for k in range(dn)], R[j][i2])
                r = tuple(x + y for x, y in zip(t1, t2))
                if not vec_is_zero(r):
                    bad.append((f"axiom5 ({m.basis_names[i]},{m.basis_names[i2]},"
                                f"{n.basis_names[j]})", r))

    for j in range(dn):
        for i in range(dm):
            for i2 in range(dm):
                # axiom 3 over (n_j, m_i, m_i2)
                t1 = comb([R[j][k] for k in range(dm)], cm[i][i2])
                t2 = comb([R[k][i2] for k in range(dn)], R[j][i])
                t3 = comb([R[k][i] for k in range(dn)], R[j][i2])
                r = tuple(x - y + z for x, y, z in zip(t1, t2, t3))
                if not vec_is_zero(r):
                    bad.append((f"axiom3 ({n.basis_names[j]},{m.basis_names[i]},"
                                f"{m.basis_names[i2]})", r))

    for i in range(dm):
        for j in range(dn):
            for j2 in range(dn):
                # axiom 2 over (m_i, n_j, n_j2)
                t1 = comb([L[i][k] for k in range(dn)], cn[j][j2])
                t2 = comb([cn[k][j2] for k in range(dn)], L[i][j])
                t3 = comb([cn[k][j] for k in range(dn)], L[i][j2])
                r = tuple(x - y + z for x, y, z in zip(t1, t2, t3))
                if not vec_is_zero(r):
                    bad.append((f"axiom2 ({m.basis_names[i]},{n.basis_names[j]},"
                                f"{n.basis_names[j2]})", r))
                # axiom 4 over (n_j, n_j2, m_i)
                t1 = comb([R[k][i] for k in range(dn)], cn[j][j2])
                t2 = comb([cn[k][j2] for k in range(dn)], R[j][i])
                t3 = [Fraction(0)] * dn
                for k, ck in enumerate(R[j2][i]):
                    if ck != 0:
                        vec_accum(t3, ck, cn[j][k])
                r = tuple(x - y - z for x, y, z in zip(t1, t2, t3))
                if not vec_is_zero(r):
                    bad.append((f"axiom4 ({n.basis_names[j]},{n.basis_names[j2]},"
                                f"{m.basis_names[i]})", r))
                # axiom 6 over (n_j, m_i, n_j2)
                t1 = [Fraction(0)] * dn
                for k, ck in enumerate(L[i][j2]):
                    if ck != 0:
                        vec_accum(t1, ck, cn[j][k])
                t2 = [Fraction(0)] * dn
                for k, ck in enumerate(R[j2][i]):
                    if ck != 0:
                        vec_accum(t2, ck, cn[j][k])
                r = tuple(x + y for x, y in zip(t1, t2))
                if not vec_is_zero(r):
                    bad.append((f"axiom6 ({n.basis_names[j]},{m.basis_names[i]},"
                                f"{n.basis_names[j2]})", r))

    return _report(f"action of {m.name} on {n.name}", bad)


@dataclass(frozen=True)
class AlgebraHom:
    """Linear map between algebras, target.dim x source.dim matrix."""

    source: LeibnizAlgebra
    target: LeibnizAlgebra
    matrix: RatMatrix

    def __post_init__(self):
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise ValueError("homomorphism matrix shape mismatch")

    @classmethod
    def identity(cls, a: LeibnizAlgebra) -> "AlgebraHom":
        return cls(a, a, RatMatrix.identity(a.dim))

    def apply(self, v: Sequence) -> tuple:
        return self.matrix.mul_vec(vec(v))

    def is_surjective(self) -> bool:
        from .ratlin import rank
        return rank(self.matrix) == self.target.dim


def check_hom(f: AlgebraHom) -> ValidityReport:
    """Residuals f([e_i,e_j]) - [f(e_i), f(e_j)] on all basis pairs."""
    a, b = f.source, f.target
    bad = []
    for i in range(a.dim):
        fi = f.matrix.column(i)
        for j in range(a.dim):
            r = tuple(x - y for x, y in zip(f.apply(a.c[i][j]),
                                            b.bracket(fi, f.matrix.column(j))))
            if not vec_is_zero(r):
                bad.append((f"({a.basis_names[i]},{a.basis_names[j]})", r))
    return _report(f"homomorphism {a.name} -> {b.name}", bad)


def span_brackets(a: LeibnizAlgebra, X: Subspace, Y: Subspace) -> Subspace:
    """Linear span of {[x, y] : x in X, y in Y} (basis pairs suffice)."""
    if X.ambient_dim != a.dim or Y.ambient_dim != a.dim:
        raise ValueError("subspace/algebra dimension mismatch")
    out = [a.bracket(x, y) for x in X.basis.entries for y in Y.basis.entries]
    return Subspace.from_vectors(a.dim, out)


def center(a: LeibnizAlgebra) -> Subspace:
    """Two-sided center {x : [x, a] = [a, x] = 0}."""
    rows = []
    for j in range(a.dim):
        for k in range(a.dim):
            rows.append(tuple(a.c[i][j][k] for i in range(a.dim)))  # x -> [x, e_j]
            rows.append(tuple(a.c[j][i][k] for i in range(a.dim)))  # x -> [e_j, x]
    return kernel(RatMatrix.from_rows(rows, cols=a.dim))


def ideal_closure(a: LeibnizAlgebra, seed: Subspace) -> Subspace:
    """Least two-sided ideal containing seed, by fixpoint iteration."""
    if seed.ambient_dim != a.dim:
        raise ValueError("seed/algebra dimension mismatch")
    s = seed
    full = a.full_subspace()
    while True:
        nxt = s.add(span_brackets(a, full, s)).add(span_brackets(a, s, full))
        if nxt == s:
            return s
        s = nxt


def is_ideal(a: LeibnizAlgebra, s: Subspace) -> bool:
    return ideal_closure(a, s) == s


def quotient_algebra(a: LeibnizAlgebra, ideal: Subspace,
                     name: "str | None" = None) -> "tuple[LeibnizAlgebra, AlgebraHom]":
    """Quotient by a two-sided ideal, with the projection homomorphism.

    The quotient basis is the pivot-complement of the ideal, so the
    returned structure constants are deterministic; basis names are the
    names of the surviving coordinates.
    """
    if not is_ideal(a, ideal):
        raise ValueError(f"subspace is not a two-sided ideal of {a.name}")
    qm = quotient(a.dim, ideal)
    names = tuple(a.basis_names[f] for f in qm.free)
    c = tuple(
        tuple(qm.project(a.bracket(qm.section.column(i), qm.section.column(j)))
              for j in range(qm.dim))
        for i in range(qm.dim))
    out = LeibnizAlgebra(name or f"{a.name}_quot", qm.dim, names, c)
    rep = check_leibniz(out)
    if not rep.valid:
        raise AssertionError(f"quotient of {a.name} lost the Leibniz identity: "
                             f"{rep.summary()}")
    return out, AlgebraHom(a, out, qm.projection)


def subalgebra_on(a: LeibnizAlgebra, s: Subspace, name: str) -> "tuple[LeibnizAlgebra, RatMatrix]":
    """Algebra structure induced on a bracket-closed subspace.

    Returns the algebra in the coordinates of s's canonical basis plus
    the inclusion matrix (a.dim x s.dim).  Raises if s is not closed.
    """
    base = s.basis.entries
    c = []
    for x in base:
        row = []
        for y in base:
            b = a.bracket(x, y)
            if not s.contains_vector(b):
                raise ValueError("subspace is not bracket-closed")
            row.append(s.coords(b))
        c.append(tuple(row))
    names = tuple(f"s{i+1}" for i in range(s.dim))
    sub = LeibnizAlgebra(name, s.dim, names, tuple(c))
    incl = RatMatrix.from_columns(list(base), rows=a.dim) if base else RatMatrix.zeros(a.dim, 0)
    return sub, incl
