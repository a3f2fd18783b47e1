"""Shared constructions for the test suite: standard algebras and a
seeded random generator of valid Leibniz algebras.

The random generator works by relation-solving: it fixes a valid base
algebra B from a small catalogue, appends a central annihilating socle
T, and solves the Leibniz identity for the unknown extension cocycle
w: B x B -> T.  For that ansatz the identity is linear in w (the socle
kills every product of two unknowns), so the solution space is the
kernel of an exact rational constraint matrix; a random point of it is
a valid algebra by construction, and a random unimodular change of
basis densifies the table without changing validity.
"""

import random
from fractions import Fraction

from leibxmod.algebra import LeibnizAction, LeibnizAlgebra, check_leibniz
from leibxmod.extensions import Extension
from leibxmod.ratlin import RatMatrix, Subspace, kernel, unit_vec, zero_vec
from leibxmod.xmod import CrossedModule, SubPair, XModHom, center_xmod


def k_abelian(n, name=None):
    return LeibnizAlgebra.abelian(name or f"k{n}", n)


def zero_algebra():
    return LeibnizAlgebra("zero", 0, (), ())


def n2():
    z = zero_vec(2)
    c = (((Fraction(0), Fraction(1)), z), (z, z))
    return LeibnizAlgebra("n2", 2, ("e1", "e2"), c)


def heis3():
    z = zero_vec(3)
    zvec = (Fraction(0), Fraction(0), Fraction(1))
    nzvec = (Fraction(0), Fraction(0), Fraction(-1))
    c = (
        (z, zvec, z),
        (nzvec, z, z),
        (z, z, z),
    )
    return LeibnizAlgebra("heis3", 3, ("x", "y", "z"), c)


def sl2():
    def v(*xs):
        return tuple(Fraction(x) for x in xs)
    # basis e, f, h with [e,f]=h, [h,e]=2e, [h,f]=-2f, antisymmetric
    c = (
        (v(0, 0, 0), v(0, 0, 1), v(-2, 0, 0)),
        (v(0, 0, -1), v(0, 0, 0), v(0, 2, 0)),
        (v(2, 0, 0), v(0, -2, 0), v(0, 0, 0)),
    )
    return LeibnizAlgebra("sl2", 3, ("e", "f", "h"), c)


def bad_dim1():
    c = (((Fraction(1),),),)
    return LeibnizAlgebra("bad1", 1, ("e",), c)


def r2_nonlie():
    """Non-Lie dim 2 with [e2,e1] = e2 (and no other products)."""
    z = zero_vec(2)
    c = ((z, z), ((Fraction(0), Fraction(1)), z))
    return LeibnizAlgebra("r2", 2, ("e1", "e2"), c)


def sol2_lie():
    """Solvable Lie dim 2: [e1,e2] = e2 = -[e2,e1]."""
    z = zero_vec(2)
    c = ((z, (Fraction(0), Fraction(1))), ((Fraction(0), Fraction(-1)), z))
    return LeibnizAlgebra("sol2", 2, ("e1", "e2"), c)


_CATALOGUE = {1: [k_abelian(1)], 2: [k_abelian(2), n2(), r2_nonlie(), sol2_lie()]}


def _cocycle_solutions(base):
    """Kernel of the linearized Leibniz constraint on w: B x B -> K."""
    b = base.dim
    nvars = b * b
    rows = []
    for i in range(b):
        for j in range(b):
            for k in range(b):
                row = [Fraction(0)] * nvars
                for q in range(b):
                    row[i * b + q] += base.c[j][k][q]       # w(e_i, [e_j,e_k])
                for p in range(b):
                    row[p * b + k] -= base.c[i][j][p]       # w([e_i,e_j], e_k)
                    row[p * b + j] += base.c[i][k][p]       # w([e_i,e_k], e_j)
                rows.append(row)
    return kernel(RatMatrix.from_rows(rows, cols=nvars))


def _central_extension(base, socle_dim, rng, name):
    b, t, d = base.dim, socle_dim, base.dim + socle_dim
    sol = _cocycle_solutions(base)
    omega = [[zero_vec(t) for _ in range(b)] for _ in range(b)]
    for s in range(t):
        point = [Fraction(0)] * (b * b)
        for kvec in sol.basis.entries:
            a = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            for idx, x in enumerate(kvec):
                point[idx] += a * x
        for i in range(b):
            for j in range(b):
                row = list(omega[i][j])
                row[s] = point[i * b + j]
                omega[i][j] = tuple(row)
    c = []
    for i in range(d):
        crow = []
        for j in range(d):
            if i < b and j < b:
                crow.append(tuple(base.c[i][j]) + omega[i][j])
            else:
                crow.append(zero_vec(d))
        c.append(tuple(crow))
    names = tuple(f"e{i+1}" for i in range(d))
    return LeibnizAlgebra(name, d, names, tuple(c))


def _change_basis(a, rng):
    """Conjugate by a random product of elementary matrices (unimodular)."""
    d = a.dim
    if d < 2:
        return a
    g = RatMatrix.identity(d)
    ginv = RatMatrix.identity(d)
    for _ in range(rng.randint(1, 2)):
        i, j = rng.sample(range(d), 2)
        lam = Fraction(rng.choice([-1, 1, 2]))
        e = [[Fraction(1 if r == c else 0) for c in range(d)] for r in range(d)]
        e[i][j] = lam
        einv = [[Fraction(1 if r == c else 0) for c in range(d)] for r in range(d)]
        einv[i][j] = -lam
        g = g.mul(RatMatrix.from_rows(e))
        ginv = RatMatrix.from_rows(einv).mul(ginv)
    c = tuple(
        tuple(ginv.mul_vec(a.bracket(g.column(i), g.column(j))) for j in range(d))
        for i in range(d))
    return LeibnizAlgebra(a.name + "'", d, a.basis_names, c)


def random_leibniz_corpus(count=12, seed=20260817):
    """Deterministic list of `count` random valid Leibniz algebras, dim <= 3."""
    rng = random.Random(seed)
    out = []
    recipes = []
    for i in range(count):
        if i % 3 == 0:
            recipes.append((rng.choice(_CATALOGUE[1]), rng.choice([1, 2])))
        else:
            recipes.append((rng.choice(_CATALOGUE[2]), 1))
    for idx, (base, socle) in enumerate(recipes):
        alg = _central_extension(base, socle, rng, f"rand{idx+1}")
        alg = _change_basis(alg, rng)
        rep = check_leibniz(alg)
        assert rep.valid, f"random generator produced an invalid algebra:\n{rep.summary()}"
        out.append(alg)
    return out


def fixture_algebras():
    """The named corpus used across oracle and acceptance tests."""
    return [k_abelian(1), k_abelian(2), k_abelian(3), n2(), heis3(), sl2()]


def _padded_algebra(a, pad):
    d = a.dim + pad
    z = zero_vec(d)
    c = tuple(
        tuple(tuple(a.c[i][j]) + zero_vec(pad) if i < a.dim and j < a.dim else z
              for j in range(d))
        for i in range(d))
    names = tuple(a.basis_names) + tuple(f"p{i+1}" for i in range(pad))
    return LeibnizAlgebra(f"{a.name}+k{pad}", d, names, c)


def padded_split_extension(xm, top_pad=1, base_pad=1, name=None):
    """Block-sum of a crossed module with an abelian trivially-acted pad,
    projected onto the original summand: split, central, and (for a
    nonzero pad) never stem because the pad misses the derived pair."""
    dt, db = xm.top.dim, xm.base.dim
    top = _padded_algebra(xm.top, top_pad)
    base = _padded_algebra(xm.base, base_pad)
    delta = RatMatrix.from_rows(
        [[xm.delta.row(i)[j] if j < dt else Fraction(0) for j in range(top.dim)]
         for i in range(db)]
        + [[Fraction(0)] * top.dim for _ in range(base_pad)],
        cols=top.dim)
    left = tuple(
        tuple(tuple(xm.action.left[i][j]) + zero_vec(top_pad)
              if i < db and j < dt else zero_vec(top.dim)
              for j in range(top.dim))
        for i in range(base.dim))
    right = tuple(
        tuple(tuple(xm.action.right[j][i]) + zero_vec(top_pad)
              if j < dt and i < db else zero_vec(top.dim)
              for i in range(base.dim))
        for j in range(top.dim))
    total = CrossedModule(f"{xm.name}+pad", top, base, delta,
                          LeibnizAction(base, top, left, right))
    proj = XModHom(
        total, xm,
        RatMatrix.from_rows([[Fraction(1 if i == j else 0)
                              for j in range(top.dim)] for i in range(dt)],
                            cols=top.dim),
        RatMatrix.from_rows([[Fraction(1 if i == j else 0)
                              for j in range(base.dim)] for i in range(db)],
                            cols=base.dim))
    return Extension.from_projection(proj, name or f"{xm.name}_split")


def zero_over(a, name=None):
    """The crossed module (0, a, i)."""
    zt = zero_algebra()
    return CrossedModule(name or f"(0,{a.name},i)", zt, a,
                         RatMatrix.zeros(a.dim, 0), LeibnizAction.trivial(a, zt))


def n2_over_k():
    """The stem cover presentation of (0, k, i) by (0, n2, i)."""
    total = zero_over(n2())
    ker = SubPair(total, Subspace.zero(0),
                  Subspace.from_vectors(2, [unit_vec(2, 1)]))
    return Extension.from_quotient_by(total, ker, name="n2_over_k")


def center_quotient(xm, name):
    return Extension.from_quotient_by(
        xm, SubPair(xm, center_xmod(xm).top_sub, center_xmod(xm).base_sub),
        name=name)


def central_fixture_extensions():
    """Central extensions covering stem covers, stem non-covers, identity,
    and split cases; the shared corpus for connecting-map properties."""
    xm_n2 = CrossedModule.adjoint_identity(n2())
    xm_h = CrossedModule.adjoint_identity(heis3())
    xm_k2 = CrossedModule.adjoint_identity(k_abelian(2))
    line = Subspace.from_vectors(2, [unit_vec(2, 0)])
    return [
        n2_over_k(),
        Extension.from_projection(XModHom.identity(xm_n2), name="id_n2"),
        center_quotient(xm_n2, "n2_mod_center"),
        center_quotient(xm_h, "heis3_mod_center"),
        Extension.from_quotient_by(xm_k2, SubPair(xm_k2, line, line),
                                   name="k2_mod_line"),
        padded_split_extension(xm_n2),
        padded_split_extension(xm_h, top_pad=2, base_pad=1),
    ]
