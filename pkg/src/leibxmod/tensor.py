"""Non-abelian tensor and exterior products, and the Schur multiplier.

The tensor product of two Leibniz algebras with mutual actions is
modelled as a quotient of the linear span of the pure symbols
m_a * n_b (block MN) and n_b * m_a (block NM).  Scalar and additivity
rules are absorbed by linearity of the symbol space; the remaining
defining relations become vectors spanning a relation subspace, and the
bracket is given on symbols by one fixed representative per block pair,
the other representative being congruent modulo the relations.
Well-definedness of the bracket on the quotient is asserted, not
assumed; so is the Leibniz identity of the result.

The exterior product divides further by the subspace glued from the
pullback of the two structure maps over the shared base.  From it the
induced crossed module on the exterior squares, the evaluation maps
onto the original pair, and the Schur multiplier (the kernel of that
evaluation) are produced, each with its promised properties asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    AlgebraHom,
    LeibnizAction,
    LeibnizAlgebra,
    check_action,
    check_hom,
    check_leibniz,
)
from .ratlin import (
    QuotientMap,
    RatMatrix,
    Subspace,
    kernel,
    quotient,
    rank,
    unit_vec,
    vec_accum,
    vec_is_zero,
)
from .xmod import (
    CrossedModule,
    XModHom,
    center_xmod,
    check_xmod,
    check_xmod_hom,
)


@dataclass(frozen=True)
class MutualActionPair:
    """Two algebras acting on each other, both actions individually valid."""

    m: LeibnizAlgebra
    n: LeibnizAlgebra
    m_on_n: LeibnizAction
    n_on_m: LeibnizAction

    def __post_init__(self):
        if self.m_on_n.actor != self.m or self.m_on_n.acted != self.n:
            raise ValueError("m_on_n must be an action of m on n")
        if self.n_on_m.actor != self.n or self.n_on_m.acted != self.m:
            raise ValueError("n_on_m must be an action of n on m")

    @classmethod
    def from_shared_base(cls, eta: CrossedModule, delta: CrossedModule) -> "MutualActionPair":
        """Mutual actions induced through the shared base of two crossed
        modules: each factor acts by mapping down and using the base action."""
        if eta.base != delta.base:
            raise ValueError("crossed modules must share the same base")
        m, n = eta.top, delta.top
        m_on_n = LeibnizAction(
            m, n,
            tuple(tuple(delta.action.act_left(eta.delta.column(a), unit_vec(n.dim, b))
                        for b in range(n.dim)) for a in range(m.dim)),
            tuple(tuple(delta.action.act_right(unit_vec(n.dim, b), eta.delta.column(a))
                        for a in range(m.dim)) for b in range(n.dim)))
        n_on_m = LeibnizAction(
            n, m,
            tuple(tuple(eta.action.act_left(delta.delta.column(b), unit_vec(m.dim, a))
                        for a in range(m.dim)) for b in range(n.dim)),
            tuple(tuple(eta.action.act_right(unit_vec(m.dim, a), delta.delta.column(b))
                        for b in range(n.dim)) for a in range(m.dim)))
        return cls(m, n, m_on_n, n_on_m)


# ambient layout: MN symbol m_a * n_b at a*dn + b, NM symbol n_b * m_a at
# dm*dn + b*dm + a

def _sym_mn(dm: int, dn: int, u, v) -> tuple:
    acc = [Fraction(0)] * (2 * dm * dn)
    for p, up in enumerate(u):
        if up == 0:
            continue
        for q, vq in enumerate(v):
            if vq != 0:
                acc[p * dn + q] += up * vq
    return tuple(acc)


def _sym_nm(dm: int, dn: int, w, z) -> tuple:
    off = dm * dn
    acc = [Fraction(0)] * (2 * off)
    for q, wq in enumerate(w):
        if wq == 0:
            continue
        for p, zp in enumerate(z):
            if zp != 0:
                acc[off + q * dm + p] += wq * zp
    return tuple(acc)


def _legs(dm: int, dn: int, s: int):
    """Decode ambient index s to ('mn', a, b) or ('nm', b, a)."""
    if s < dm * dn:
        return ("mn",) + divmod(s, dn)
    b, a = divmod(s - dm * dn, dm)
    return ("nm", b, a)


def _primary_entry(pair: MutualActionPair, i: int, j: int) -> tuple:
    """The chosen bracket representative: lands in the left factor's block."""
    mo, no = pair.m_on_n, pair.n_on_m
    dm, dn = pair.m.dim, pair.n.dim
    li, lj = _legs(dm, dn, i), _legs(dm, dn, j)
    if li[0] == "mn":
        a, b = li[1], li[2]
        u = no.right[a][b]                       # m_a ^ {n_b} in m
        v = mo.left[lj[1]][lj[2]] if lj[0] == "mn" else mo.right[lj[1]][lj[2]]
        return _sym_mn(dm, dn, u, v)
    b, a = li[1], li[2]
    w = mo.right[b][a]                           # n_b ^ {m_a} in n
    z = no.left[lj[1]][lj[2]] if lj[0] == "nm" else no.right[lj[1]][lj[2]]
    return _sym_nm(dm, dn, w, z)


def _alt_entry(pair: MutualActionPair, i: int, j: int) -> tuple:
    """The other representative, congruent to the primary one modulo the
    relation subspace (their differences are relation rows)."""
    mo, no = pair.m_on_n, pair.n_on_m
    dm, dn = pair.m.dim, pair.n.dim
    li, lj = _legs(dm, dn, i), _legs(dm, dn, j)
    if li[0] == "mn":
        a, b = li[1], li[2]
        w = mo.left[a][b]                        # ^{m_a} n_b in n
        z = no.right[lj[1]][lj[2]] if lj[0] == "mn" else no.left[lj[1]][lj[2]]
        return _sym_nm(dm, dn, w, z)
    b, a = li[1], li[2]
    u = no.left[b][a]                            # ^{n_b} m_a in m
    v = mo.right[lj[1]][lj[2]] if lj[0] == "nm" else mo.left[lj[1]][lj[2]]
    return _sym_mn(dm, dn, u, v)


def _defining_rows(pair: MutualActionPair) -> list:
    """Relation vectors: a bracketed leg rewrites through the actions, the
    two one-sided actions agree up to sign in the second slot, and the two
    representatives of every symbol bracket coincide."""
    m, n = pair.m, pair.n
    mo, no = pair.m_on_n, pair.n_on_m
    dm, dn = m.dim, n.dim
    off = dm * dn
    amb = 2 * off
    rows = []

    def add(acc):
        if not vec_is_zero(acc):
            rows.append(tuple(acc))

    # m_a * [n_b, n_c] = m_a^{n_b} * n_c - m_a^{n_c} * n_b
    for a in range(dm):
        for b in range(dn):
            for c in range(dn):
                acc = [Fraction(0)] * amb
                for k, x in enumerate(n.c[b][c]):
                    if x:
                        acc[a * dn + k] += x
                for p, x in enumerate(no.right[a][b]):
                    if x:
                        acc[p * dn + c] -= x
                for p, x in enumerate(no.right[a][c]):
                    if x:
                        acc[p * dn + b] += x
                add(acc)
    # n_b * [m_a, m_a2] = n_b^{m_a} * m_a2 - n_b^{m_a2} * m_a
    for b in range(dn):
        for a in range(dm):
            for a2 in range(dm):
                acc = [Fraction(0)] * amb
                for k, x in enumerate(m.c[a][a2]):
                    if x:
                        acc[off + b * dm + k] += x
                for q, x in enumerate(mo.right[b][a]):
                    if x:
                        acc[off + q * dm + a2] -= x
                for q, x in enumerate(mo.right[b][a2]):
                    if x:
                        acc[off + q * dm + a] += x
                add(acc)
    # [m_a, m_a2] * n_b = ^{m_a}n_b * m_a2 - m_a * n_b^{m_a2}
    for a in range(dm):
        for a2 in range(dm):
            for b in range(dn):
                acc = [Fraction(0)] * amb
                for k, x in enumerate(m.c[a][a2]):
                    if x:
                        acc[k * dn + b] += x
                for q, x in enumerate(mo.left[a][b]):
                    if x:
                        acc[off + q * dm + a2] -= x
                for q, x in enumerate(mo.right[b][a2]):
                    if x:
                        acc[a * dn + q] += x
                add(acc)
    # [n_b, n_b2] * m_a = ^{n_b}m_a * n_b2 - n_b * m_a^{n_b2}
    for b in range(dn):
        for b2 in range(dn):
            for a in range(dm):
                acc = [Fraction(0)] * amb
                for k, x in enumerate(n.c[b][b2]):
                    if x:
                        acc[off + k * dm + a] += x
                for p, x in enumerate(no.left[b][a]):
                    if x:
                        acc[p * dn + b2] -= x
                for p, x in enumerate(no.right[a][b2]):
                    if x:
                        acc[off + b * dm + p] += x
                add(acc)
    # m_a * ^{m_a2}n_b = - m_a * n_b^{m_a2}
    for a in range(dm):
        for a2 in range(dm):
            for b in range(dn):
                acc = [Fraction(0)] * amb
                for q, x in enumerate(mo.left[a2][b]):
                    if x:
                        acc[a * dn + q] += x
                for q, x in enumerate(mo.right[b][a2]):
                    if x:
                        acc[a * dn + q] += x
                add(acc)
    # n_b * ^{n_b2}m_a = - n_b * m_a^{n_b2}
    for b in range(dn):
        for b2 in range(dn):
            for a in range(dm):
                acc = [Fraction(0)] * amb
                for p, x in enumerate(no.left[b2][a]):
                    if x:
                        acc[off + b * dm + p] += x
                for p, x in enumerate(no.right[a][b2]):
                    if x:
                        acc[off + b * dm + p] += x
                add(acc)
    # both representatives of [symbol_i, symbol_j] agree
    for i in range(amb):
        for j in range(amb):
            prim = _primary_entry(pair, i, j)
            alt = _alt_entry(pair, i, j)
            add([x - y for x, y in zip(prim, alt)])
    return rows


@dataclass(frozen=True)
class QuotientPresentation:
    """A symbol-space quotient carrying the induced Leibniz structure."""

    name: str
    pair: MutualActionPair
    ambient_dim: int
    relations: Subspace
    bracket_on_ambient: tuple   # [i][j] -> ambient vector
    resolved: LeibnizAlgebra
    qmap: QuotientMap

    def mn_index(self, a: int, b: int) -> int:
        return a * self.pair.n.dim + b

    def nm_index(self, b: int, a: int) -> int:
        dm, dn = self.pair.m.dim, self.pair.n.dim
        return dm * dn + b * dm + a

    def symbol_mn(self, u, v) -> tuple:
        """Ambient vector of u * v for u in m, v in n (bilinear)."""
        return _sym_mn(self.pair.m.dim, self.pair.n.dim, u, v)

    def symbol_nm(self, w, z) -> tuple:
        """Ambient vector of w * z for w in n, z in m (bilinear)."""
        return _sym_nm(self.pair.m.dim, self.pair.n.dim, w, z)

    def class_of(self, ambient_vec) -> tuple:
        return self.qmap.project(ambient_vec)

    def bracket_ambient(self, x, y) -> tuple:
        """Bilinear extension of the representative table."""
        acc = [Fraction(0)] * self.ambient_dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            ti = self.bracket_on_ambient[i]
            for j, b in enumerate(y):
                if b != 0:
                    vec_accum(acc, a * b, ti[j])
        return tuple(acc)

    def alt_bracket_on_ambient(self, i: int, j: int) -> tuple:
        return _alt_entry(self.pair, i, j)


def _symbol_names(pair: MutualActionPair) -> tuple:
    mn = [f"{pair.m.basis_names[a]}*{pair.n.basis_names[b]}"
          for a in range(pair.m.dim) for b in range(pair.n.dim)]
    nm = [f"{pair.n.basis_names[b]}*{pair.m.basis_names[a]}"
          for b in range(pair.n.dim) for a in range(pair.m.dim)]
    return tuple(mn + nm)


def _build_presentation(pair: MutualActionPair, extra_rows, name: str) -> QuotientPresentation:
    for act, side in ((pair.m_on_n, "m on n"), (pair.n_on_m, "n on m")):
        rep = check_action(act)
        if not rep.valid:
            raise ValueError(f"invalid action ({side}) for {name}:\n{rep.summary()}")
    dm, dn = pair.m.dim, pair.n.dim
    amb = 2 * dm * dn
    rows = _defining_rows(pair)
    rows.extend(tuple(r) for r in extra_rows)
    relations = Subspace.from_vectors(amb, sorted(set(rows)))
    table = tuple(tuple(_primary_entry(pair, i, j) for j in range(amb))
                  for i in range(amb))

    def bracket_amb(x, y):
        acc = [Fraction(0)] * amb
        for i, a in enumerate(x):
            if a == 0:
                continue
            ti = table[i]
            for j, b in enumerate(y):
                if b != 0:
                    vec_accum(acc, a * b, ti[j])
        return tuple(acc)

    for r in relations.basis.entries:
        for s in range(amb):
            e = unit_vec(amb, s)
            if not relations.contains_vector(bracket_amb(r, e)):
                raise AssertionError(
                    f"bracket of {name} not well-defined: relation * symbol "
                    f"{s} escapes the relation subspace")
            if not relations.contains_vector(bracket_amb(e, r)):
                raise AssertionError(
                    f"bracket of {name} not well-defined: symbol {s} * "
                    f"relation escapes the relation subspace")

    qmap = quotient(amb, relations)
    names = _symbol_names(pair)
    res_names = tuple(names[f] for f in qmap.free)
    c = tuple(
        tuple(qmap.project(bracket_amb(qmap.section.column(i),
                                       qmap.section.column(j)))
              for j in range(qmap.dim))
        for i in range(qmap.dim))
    resolved = LeibnizAlgebra(name, qmap.dim, res_names, c)
    rep = check_leibniz(resolved)
    if not rep.valid:
        raise AssertionError(f"{name} lost the Leibniz identity:\n{rep.summary()}")
    return QuotientPresentation(name, pair, amb, relations, table, resolved, qmap)


@lru_cache(maxsize=None)
def tensor_product(pair: MutualActionPair, name=None) -> QuotientPresentation:
    """The algebra generated by the pure symbols of the two factors."""
    return _build_presentation(pair, (),
                               name or f"{pair.m.name}(x){pair.n.name}")


def square_subspace(eta: CrossedModule, delta: CrossedModule) -> Subspace:
    """The glue subspace in the tensor ambient of eta.top and delta.top:
    symbols u * v' - v * u' over pairs (u, v) from the pullback of the two
    structure maps over the shared base."""
    if eta.base != delta.base:
        raise ValueError("crossed modules must share the same base")
    m, n = eta.top, delta.top
    q = eta.base
    cols = []
    for a in range(m.dim):
        cols.append(eta.delta.column(a))
    for b in range(n.dim):
        cols.append(tuple(-x for x in delta.delta.column(b)))
    pullback = kernel(RatMatrix.from_columns(cols, rows=q.dim))
    pairs = [(v[:m.dim], v[m.dim:]) for v in pullback.basis.entries]
    gens = []
    for (u1, v1) in pairs:
        for (u2, v2) in pairs:
            g = _sym_mn(m.dim, n.dim, u1, v2)
            h = _sym_nm(m.dim, n.dim, v1, u2)
            gens.append(tuple(x - y for x, y in zip(g, h)))
    return Subspace.from_vectors(2 * m.dim * n.dim, gens)


@lru_cache(maxsize=None)
def exterior_presentation(eta: CrossedModule, delta: CrossedModule,
                          name=None) -> QuotientPresentation:
    """Tensor product of the two tops divided by the glue subspace."""
    pair = MutualActionPair.from_shared_base(eta, delta)
    box = square_subspace(eta, delta)
    return _build_presentation(pair, box.basis.entries,
                               name or f"{eta.top.name}(^){delta.top.name}")


def one_leg_span(pres: QuotientPresentation, m_sub: Subspace,
                 n_sub: Subspace) -> Subspace:
    """Span, inside the resolved quotient, of the classes of all symbols
    with the m-leg in m_sub or the n-leg in n_sub."""
    dm, dn = pres.pair.m.dim, pres.pair.n.dim
    gens = []
    for u in m_sub.basis.entries:
        for j in range(dn):
            ej = unit_vec(dn, j)
            gens.append(pres.class_of(pres.symbol_mn(u, ej)))
            gens.append(pres.class_of(pres.symbol_nm(ej, u)))
    for v in n_sub.basis.entries:
        for i in range(dm):
            ei = unit_vec(dm, i)
            gens.append(pres.class_of(pres.symbol_mn(ei, v)))
            gens.append(pres.class_of(pres.symbol_nm(v, ei)))
    return Subspace.from_vectors(pres.resolved.dim, gens)


@dataclass(frozen=True)
class ExteriorSquareData:
    """The exterior squares of a crossed module with their induced
    structure: the connecting homomorphism between them, the action of
    the base square on the top square, and the evaluation maps back onto
    the crossed module's components."""

    qn: QuotientPresentation
    qq: QuotientPresentation
    id_wedge_delta: AlgebraHom
    action: LeibnizAction
    lambda_n: AlgebraHom
    mu_q: AlgebraHom
    induced_xmod: CrossedModule
    phi: XModHom


def _base_action_on_ambient(xm: CrossedModule, other_left, other_right, dn: int):
    """Linear maps for the base acting on the tensor ambient of
    (base, top') symbols, where the base acts on top' by the tables
    other_left/other_right.

    Returns (act_left, act_right): act_left(i, vec), act_right(vec, i).
    """
    q = xm.base
    dm = q.dim
    off = dm * dn

    def act_left(i, v):
        acc = [Fraction(0)] * (2 * off)
        for s, coef in enumerate(v):
            if coef == 0:
                continue
            if s < off:
                a, b = divmod(s, dn)
                sign = 1
            else:
                b, a = divmod(s - off, dm)
                sign = -1
            # ^q (q_a * n_b) = [q, q_a] * n_b - (^q n_b) * q_a
            for k, x in enumerate(q.c[i][a]):
                if x:
                    acc[k * dn + b] += sign * coef * x
            for p, x in enumerate(other_left[i][b]):
                if x:
                    acc[off + p * dm + a] -= sign * coef * x
        return tuple(acc)

    def act_right(v, i):
        acc = [Fraction(0)] * (2 * off)
        for s, coef in enumerate(v):
            if coef == 0:
                continue
            if s < off:
                a, b = divmod(s, dn)
                # (q_a * n_b)^q = [q_a, q] * n_b + q_a * (n_b^q)
                for k, x in enumerate(q.c[a][i]):
                    if x:
                        acc[k * dn + b] += coef * x
                for p, x in enumerate(other_right[b][i]):
                    if x:
                        acc[a * dn + p] += coef * x
            else:
                b, a = divmod(s - off, dm)
                # (n_b * q_a)^q = (n_b^q) * q_a + n_b * [q_a, q]
                for p, x in enumerate(other_right[b][i]):
                    if x:
                        acc[off + p * dm + a] += coef * x
                for k, x in enumerate(q.c[a][i]):
                    if x:
                        acc[off + b * dm + k] += coef * x
        return tuple(acc)

    return act_left, act_right


def _combine(coeffs, tables, j, dim, side):
    """Linear combination of action-table rows: the action of an element
    with the given actor coordinates on basis vector j of the acted space."""
    acc = [Fraction(0)] * dim
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        vec_accum(acc, c, tables[i][j] if side == "left" else tables[j][i])
    return tuple(acc)


def _descend_action(pres: QuotientPresentation, act_left, act_right, dq: int):
    """Push an ambient action of the base down to the resolved quotient,
    asserting the relation subspace is stable."""
    for i in range(dq):
        for r in pres.relations.basis.entries:
            if not pres.relations.contains_vector(act_left(i, r)):
                raise AssertionError(
                    f"base action does not preserve the relations of {pres.name}")
            if not pres.relations.contains_vector(act_right(r, i)):
                raise AssertionError(
                    f"base action does not preserve the relations of {pres.name}")
    sec = pres.qmap.section
    left = tuple(
        tuple(pres.class_of(act_left(i, sec.column(j)))
              for j in range(pres.resolved.dim))
        for i in range(dq))
    right = tuple(
        tuple(pres.class_of(act_right(sec.column(j), i))
              for i in range(dq))
        for j in range(pres.resolved.dim))
    return left, right


@lru_cache(maxsize=None)
def exterior_square_data(xm: CrossedModule) -> ExteriorSquareData:
    """Exterior squares of a crossed module with all induced structure."""
    rep = check_xmod(xm)
    if not rep.valid:
        raise ValueError(f"invalid crossed module:\n{rep.summary()}")
    q, n = xm.base, xm.top
    dq, dn = q.dim, n.dim
    qid = CrossedModule.adjoint_identity(q)
    qn = exterior_presentation(qid, xm, name=f"{q.name}(^){n.name}")
    qq = exterior_presentation(qid, qid, name=f"{q.name}(^){q.name}")

    # evaluation maps on ambient symbols: q * n -> ^q n, n * q -> n^q,
    # and q * q' -> [q, q'] on both blocks
    lam_cols = [None] * qn.ambient_dim
    for a in range(dq):
        for b in range(dn):
            lam_cols[qn.mn_index(a, b)] = xm.action.left[a][b]
            lam_cols[qn.nm_index(b, a)] = xm.action.right[b][a]
    lam_amb = RatMatrix.from_columns(lam_cols, rows=dn)
    mu_cols = [None] * qq.ambient_dim
    for a in range(dq):
        for b in range(dq):
            mu_cols[qq.mn_index(a, b)] = q.c[a][b]
            mu_cols[qq.nm_index(b, a)] = q.c[b][a]
    mu_amb = RatMatrix.from_columns(mu_cols, rows=dq)
    for r in qn.relations.basis.entries:
        if not vec_is_zero(lam_amb.mul_vec(r)):
            raise AssertionError("top evaluation map does not kill the relations")
    for r in qq.relations.basis.entries:
        if not vec_is_zero(mu_amb.mul_vec(r)):
            raise AssertionError("base evaluation map does not kill the relations")
    lambda_n = AlgebraHom(qn.resolved, n, lam_amb.mul(qn.qmap.section))
    mu_q = AlgebraHom(qq.resolved, q, mu_amb.mul(qq.qmap.section))

    # connecting map on symbols: q_a * n_b -> q_a * dn_b, n_b * q_a -> dn_b * q_a
    idd_cols = []
    for s in range(qn.ambient_dim):
        kind, x, y = _legs(dq, dn, s)
        if kind == "mn":
            a, b = x, y
            idd_cols.append(qq.symbol_mn(unit_vec(dq, a), xm.delta.column(b)))
        else:
            b, a = x, y
            idd_cols.append(qq.symbol_nm(xm.delta.column(b), unit_vec(dq, a)))
    idd_amb = RatMatrix.from_columns(idd_cols, rows=qq.ambient_dim)
    for r in qn.relations.basis.entries:
        if not qq.relations.contains_vector(idd_amb.mul_vec(r)):
            raise AssertionError("connecting map does not preserve the relations")
    id_wedge_delta = AlgebraHom(
        qn.resolved, qq.resolved,
        qq.qmap.projection.mul(idd_amb).mul(qn.qmap.section))

    # action of the base on the top square, then pulled back through mu
    al_qn, ar_qn = _base_action_on_ambient(
        xm, xm.action.left, xm.action.right, dn)
    left_qn, right_qn = _descend_action(qn, al_qn, ar_qn, dq)
    mu_mat = mu_q.matrix
    left = tuple(
        tuple(_combine(mu_mat.column(x), left_qn, j, qn.resolved.dim, side="left")
              for j in range(qn.resolved.dim))
        for x in range(qq.resolved.dim))
    right = tuple(
        tuple(_combine(mu_mat.column(x), right_qn, j, qn.resolved.dim, side="right")
              for x in range(qq.resolved.dim))
        for j in range(qn.resolved.dim))
    action = LeibnizAction(qq.resolved, qn.resolved, left, right)

    induced = CrossedModule(f"({qn.name},{qq.name})", qn.resolved, qq.resolved,
                            id_wedge_delta.matrix, action)
    irep = check_xmod(induced)
    if not irep.valid:
        raise AssertionError(
            f"exterior squares fail the crossed module laws:\n{irep.summary()}")
    phi = XModHom(induced, xm, lambda_n.matrix, mu_q.matrix)
    prep = check_xmod_hom(phi)
    if not prep.valid:
        raise AssertionError(
            f"evaluation is not a crossed module map:\n{prep.summary()}")
    z = center_xmod(induced)
    if not z.top_sub.contains_subspace(kernel(lambda_n.matrix)):
        raise AssertionError("kernel of the top evaluation is not central")
    if not z.base_sub.contains_subspace(kernel(mu_q.matrix)):
        raise AssertionError("kernel of the base evaluation is not central")
    return ExteriorSquareData(qn, qq, id_wedge_delta, action, lambda_n, mu_q,
                              induced, phi)


@lru_cache(maxsize=None)
def schur_multiplier(xm: CrossedModule) -> "tuple[CrossedModule, XModHom]":
    """Kernel of the evaluation of the exterior squares onto the crossed
    module, as an abelian crossed module with trivial action, plus its
    inclusion into the induced crossed module on the squares."""
    esd = exterior_square_data(xm)
    kt = kernel(esd.lambda_n.matrix)
    kb = kernel(esd.mu_q.matrix)
    for u in kt.basis.entries:
        for v in kt.basis.entries:
            if not vec_is_zero(esd.qn.resolved.bracket(u, v)):
                raise AssertionError("multiplier top is not abelian")
    for u in kb.basis.entries:
        for v in kb.basis.entries:
            if not vec_is_zero(esd.qq.resolved.bracket(u, v)):
                raise AssertionError("multiplier base is not abelian")
    dcols = []
    for u in kt.basis.entries:
        w = esd.id_wedge_delta.apply(u)
        if not kb.contains_vector(w):
            raise AssertionError("connecting map does not restrict to the multiplier")
    for u in kt.basis.entries:
        dcols.append(kb.coords(esd.id_wedge_delta.apply(u)))
    for u in kb.basis.entries:
        for j in range(kt.dim):
            if not vec_is_zero(esd.action.act_left(u, kt.basis.entries[j])):
                raise AssertionError("multiplier action is not trivial")
            if not vec_is_zero(esd.action.act_right(kt.basis.entries[j], u)):
                raise AssertionError("multiplier action is not trivial")
    top = LeibnizAlgebra.abelian(f"M({xm.name}).top", kt.dim,
                                 tuple(f"a{i+1}" for i in range(kt.dim)))
    base = LeibnizAlgebra.abelian(f"M({xm.name}).base", kb.dim,
                                  tuple(f"b{i+1}" for i in range(kb.dim)))
    delta = RatMatrix.from_columns(dcols, rows=kb.dim)
    mult = CrossedModule(f"M({xm.name})", top, base, delta,
                         LeibnizAction.trivial(base, top))
    incl = XModHom(mult, esd.induced_xmod,
                   RatMatrix.from_columns(list(kt.basis.entries),
                                          rows=esd.qn.resolved.dim),
                   RatMatrix.from_columns(list(kb.basis.entries),
                                          rows=esd.qq.resolved.dim))
    irep = check_xmod_hom(incl)
    if not irep.valid:
        raise AssertionError(
            f"multiplier inclusion is not a crossed module map:\n{irep.summary()}")
    return mult, incl


def _induced_presentation_hom(src: QuotientPresentation,
                              tgt: QuotientPresentation,
                              fm: RatMatrix, fn: RatMatrix) -> AlgebraHom:
    """Quotient-level map induced by componentwise symbol substitution."""
    cols = []
    for s in range(src.ambient_dim):
        kind, x, y = _legs(src.pair.m.dim, src.pair.n.dim, s)
        if kind == "mn":
            cols.append(tgt.symbol_mn(fm.column(x), fn.column(y)))
        else:
            cols.append(tgt.symbol_nm(fn.column(x), fm.column(y)))
    amb = RatMatrix.from_columns(cols, rows=tgt.ambient_dim)
    for r in src.relations.basis.entries:
        if not tgt.relations.contains_vector(amb.mul_vec(r)):
            raise AssertionError(
                f"induced map {src.name} -> {tgt.name} does not preserve relations")
    hom = AlgebraHom(src.resolved, tgt.resolved,
                     tgt.qmap.projection.mul(amb).mul(src.qmap.section))
    hrep = check_hom(hom)
    if not hrep.valid:
        raise AssertionError(
            f"induced map {src.name} -> {tgt.name} is not a homomorphism:\n"
            f"{hrep.summary()}")
    return hom


def induced_exterior_hom(f: XModHom) -> "tuple[AlgebraHom, AlgebraHom]":
    """Maps induced on the exterior squares by a surjective crossed module
    map, with surjectivity and the one-leg description of the kernels
    asserted."""
    if not f.is_surjective():
        raise ValueError("induced exterior maps need a surjective homomorphism")
    frep = check_xmod_hom(f)
    if not frep.valid:
        raise ValueError(f"invalid crossed module map:\n{frep.summary()}")
    src = exterior_square_data(f.source)
    tgt = exterior_square_data(f.target)
    top_hom = _induced_presentation_hom(src.qn, tgt.qn, f.base_map, f.top_map)
    base_hom = _induced_presentation_hom(src.qq, tgt.qq, f.base_map, f.base_map)
    if rank(top_hom.matrix) != tgt.qn.resolved.dim:
        raise AssertionError("induced top map is not surjective")
    if rank(base_hom.matrix) != tgt.qq.resolved.dim:
        raise AssertionError("induced base map is not surjective")
    kp = f.kernel_pair()
    if kernel(top_hom.matrix) != one_leg_span(src.qn, kp.base_sub, kp.top_sub):
        raise AssertionError(
            "kernel of the induced top map differs from the one-leg span")
    if kernel(base_hom.matrix) != one_leg_span(src.qq, kp.base_sub, kp.base_sub):
        raise AssertionError(
            "kernel of the induced base map differs from the one-leg span")
    return top_hom, base_hom


def multiplier_functorial_map(f: XModHom) -> XModHom:
    """Restriction of the induced exterior maps to the multipliers."""
    top_hom, base_hom = induced_exterior_hom(f)
    m_src, _ = schur_multiplier(f.source)
    m_tgt, _ = schur_multiplier(f.target)
    src = exterior_square_data(f.source)
    tgt = exterior_square_data(f.target)
    kt_src = kernel(src.lambda_n.matrix)
    kb_src = kernel(src.mu_q.matrix)
    kt_tgt = kernel(tgt.lambda_n.matrix)
    kb_tgt = kernel(tgt.mu_q.matrix)
    tcols = []
    for u in kt_src.basis.entries:
        w = top_hom.apply(u)
        if not kt_tgt.contains_vector(w):
            raise AssertionError("induced top map does not preserve the multiplier")
        tcols.append(kt_tgt.coords(w))
    bcols = []
    for u in kb_src.basis.entries:
        w = base_hom.apply(u)
        if not kb_tgt.contains_vector(w):
            raise AssertionError("induced base map does not preserve the multiplier")
        bcols.append(kb_tgt.coords(w))
    out = XModHom(m_src, m_tgt,
                  RatMatrix.from_columns(tcols, rows=m_tgt.top.dim),
                  RatMatrix.from_columns(bcols, rows=m_tgt.base.dim))
    orep = check_xmod_hom(out)
    if not orep.valid:
        raise AssertionError(
            f"multiplier map is not a crossed module map:\n{orep.summary()}")
    return out
