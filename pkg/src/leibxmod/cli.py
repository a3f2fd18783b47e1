"""Fixture files and the command-line interface.

Fixture files are JSON documents (UTF-8) with a top-level ``kind`` of
``algebra``, ``action``, ``xmod``, ``hom``, or ``extension``.  Every
rational number is a string ("3", "-1/2"); floats are rejected outright.
Bracket tables, action tables, connecting maps, and hom matrices are
sparse mappings keyed by basis names, with omitted entries meaning zero.
Where a field expects a sub-object (an algebra inside an action, the
total of an extension), it may hold either an inline document or a bare
name, which resolves to ``<name>.<kind>`` in the directory of the
referencing file.

Document shapes, with all sparse mappings optional per entry::

    algebra    name, dim, basis (list of distinct names),
               brackets[left][right] = {basis: rational}
    action     name, actor, acted (algebra refs),
               left[actor_basis][acted_basis]  = {acted_basis: rational},
               right[acted_basis][actor_basis] = {acted_basis: rational}
    xmod       name, top, base (algebra refs), action (action ref whose
               endpoints must equal base/top),
               delta[top_basis] = {base_basis: rational}
    hom        name, source, target; either matrix[src_basis] =
               {tgt_basis: rational} between algebras, or top_map and
               base_map between crossed modules
    extension  name, total, quotient (xmod refs),
               projection = {top_map, base_map}; the kernel pair is
               recomputed from the projection

Commands print a human-readable report by default and a canonical JSON
document under ``--json``; ``--out`` redirects the payload to a file.
``stemcover`` and ``liezation`` always emit the constructed crossed
module as a fixture document, so their output can be fed back in.

Exit codes: 0 the input was read and found valid (or the computation
succeeded), 1 the input was read but is invalid or fails a precondition
(not central, not perfect, degree out of range), 2 the input could not
be turned into a domain object at all (missing file, malformed JSON,
zero denominator, unknown basis name, unresolvable reference).
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import (
    AlgebraHom,
    LeibnizAction,
    LeibnizAlgebra,
    check_action,
    check_hom,
    check_leibniz,
)
from .extensions import (
    Extension,
    check_extension,
    classify,
    prop41_crosscheck,
    six_term_report,
    stem_cover_of_perfect,
)
from .homology import hl
from .ratlin import RatMatrix, rank, zero_vec
from .tensor import exterior_square_data, schur_multiplier
from .xmod import CrossedModule, XModHom, check_xmod, check_xmod_hom, liezation


class FixtureError(Exception):
    """Anything that prevents a file from becoming a domain object."""


_FIELDS = {
    "algebra": {"kind", "name", "dim", "basis", "brackets"},
    "action": {"kind", "name", "actor", "acted", "left", "right"},
    "xmod": {"kind", "name", "top", "base", "delta", "action"},
    "hom": {"kind", "name", "source", "target", "matrix", "top_map", "base_map"},
    "extension": {"kind", "name", "total", "quotient", "projection"},
}


@dataclass(frozen=True)
class _Ctx:
    directory: Path
    active: frozenset  # resolved paths currently being loaded (cycle guard)


def _require(doc, field, where):
    if field not in doc:
        raise FixtureError(f"{where}: missing field {field!r}")
    return doc[field]


def _rat(s, where):
    if not isinstance(s, str):
        raise FixtureError(f"{where}: rationals must be strings, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise FixtureError(f"{where}: malformed rational {s!r}") from None


def _sparse_vec(doc, names, where):
    if not isinstance(doc, dict):
        raise FixtureError(f"{where}: expected a sparse mapping, got {doc!r}")
    index = {n: i for i, n in enumerate(names)}
    v = [Fraction(0)] * len(names)
    for k, s in doc.items():
        if k not in index:
            raise FixtureError(f"{where}: unknown basis name {k!r}")
        v[index[k]] = _rat(s, f"{where}[{k}]")
    return tuple(v)


def _table(doc, row_names, col_names, out_names, where):
    """Sparse doc[row][col] = vector over out_names, as a dense tuple table."""
    if not isinstance(doc, dict):
        raise FixtureError(f"{where}: expected a mapping")
    ri = {n: i for i, n in enumerate(row_names)}
    ci = {n: i for i, n in enumerate(col_names)}
    z = zero_vec(len(out_names))
    rows = [[z for _ in col_names] for _ in row_names]
    for rn, row in doc.items():
        if rn not in ri:
            raise FixtureError(f"{where}: unknown basis name {rn!r}")
        if not isinstance(row, dict):
            raise FixtureError(f"{where}[{rn}]: expected a mapping")
        for cn, sv in row.items():
            if cn not in ci:
                raise FixtureError(f"{where}[{rn}]: unknown basis name {cn!r}")
            rows[ri[rn]][ci[cn]] = _sparse_vec(sv, out_names, f"{where}[{rn}][{cn}]")
    return tuple(tuple(r) for r in rows)


def _matrix(doc, src_names, tgt_names, where):
    """Sparse doc[src] = vector over tgt_names, as a column matrix."""
    if not isinstance(doc, dict):
        raise FixtureError(f"{where}: expected a mapping")
    si = {n: i for i, n in enumerate(src_names)}
    cols = [zero_vec(len(tgt_names))] * len(src_names)
    for sn, sv in doc.items():
        if sn not in si:
            raise FixtureError(f"{where}: unknown basis name {sn!r}")
        cols[si[sn]] = _sparse_vec(sv, tgt_names, f"{where}[{sn}]")
    return RatMatrix.from_columns(cols, rows=len(tgt_names))


def _parse_algebra(doc, ctx, where):
    name = _require(doc, "name", where)
    dim = _require(doc, "dim", where)
    basis = _require(doc, "basis", where)
    if not isinstance(dim, int) or dim < 0:
        raise FixtureError(f"{where}: dim must be a non-negative integer")
    if (not isinstance(basis, list) or len(basis) != dim
            or len(set(basis)) != dim
            or not all(isinstance(b, str) for b in basis)):
        raise FixtureError(f"{where}: basis must list {dim} distinct names")
    c = _table(doc.get("brackets", {}), basis, basis, basis, f"{where}.brackets")
    return LeibnizAlgebra(name, dim, tuple(basis), c)


def _parse_action(doc, ctx, where):
    actor = _subobject(_require(doc, "actor", where), "algebra", ctx, f"{where}.actor")
    acted = _subobject(_require(doc, "acted", where), "algebra", ctx, f"{where}.acted")
    left = _table(doc.get("left", {}), actor.basis_names, acted.basis_names,
                  acted.basis_names, f"{where}.left")
    right = _table(doc.get("right", {}), acted.basis_names, actor.basis_names,
                   acted.basis_names, f"{where}.right")
    return LeibnizAction(actor, acted, left, right)


def _parse_xmod(doc, ctx, where):
    name = _require(doc, "name", where)
    top = _subobject(_require(doc, "top", where), "algebra", ctx, f"{where}.top")
    base = _subobject(_require(doc, "base", where), "algebra", ctx, f"{where}.base")
    delta = _matrix(doc.get("delta", {}), top.basis_names, base.basis_names,
                    f"{where}.delta")
    action = _subobject(_require(doc, "action", where), "action", ctx,
                        f"{where}.action")
    if action.actor != base or action.acted != top:
        raise FixtureError(
            f"{where}: action endpoints disagree with the base/top algebras")
    return CrossedModule(name, top, base, delta, action)


def _parse_hom(doc, ctx, where):
    if "matrix" in doc:
        src = _subobject(_require(doc, "source", where), "algebra", ctx,
                         f"{where}.source")
        tgt = _subobject(_require(doc, "target", where), "algebra", ctx,
                         f"{where}.target")
        return AlgebraHom(src, tgt, _matrix(doc["matrix"], src.basis_names,
                                            tgt.basis_names, f"{where}.matrix"))
    src = _subobject(_require(doc, "source", where), "xmod", ctx, f"{where}.source")
    tgt = _subobject(_require(doc, "target", where), "xmod", ctx, f"{where}.target")
    top = _matrix(_require(doc, "top_map", where), src.top.basis_names,
                  tgt.top.basis_names, f"{where}.top_map")
    base = _matrix(_require(doc, "base_map", where), src.base.basis_names,
                   tgt.base.basis_names, f"{where}.base_map")
    return XModHom(src, tgt, top, base)


def _parse_extension(doc, ctx, where):
    name = _require(doc, "name", where)
    total = _subobject(_require(doc, "total", where), "xmod", ctx, f"{where}.total")
    quotient = _subobject(_require(doc, "quotient", where), "xmod", ctx,
                          f"{where}.quotient")
    pj = _require(doc, "projection", where)
    if not isinstance(pj, dict):
        raise FixtureError(f"{where}.projection: expected a mapping")
    proj = XModHom(
        total, quotient,
        _matrix(_require(pj, "top_map", f"{where}.projection"),
                total.top.basis_names, quotient.top.basis_names,
                f"{where}.projection.top_map"),
        _matrix(_require(pj, "base_map", f"{where}.projection"),
                total.base.basis_names, quotient.base.basis_names,
                f"{where}.projection.base_map"))
    return Extension.from_projection(proj, name)


_PARSERS = {
    "algebra": _parse_algebra,
    "action": _parse_action,
    "xmod": _parse_xmod,
    "hom": _parse_hom,
    "extension": _parse_extension,
}


def _parse_doc(doc, expect, ctx, where):
    if not isinstance(doc, dict):
        raise FixtureError(f"{where}: expected an object document")
    kind = doc.get("kind", expect)
    if kind not in _PARSERS:
        raise FixtureError(f"{where}: unknown kind {kind!r}")
    if expect is not None and kind != expect:
        raise FixtureError(f"{where}: expected kind {expect!r}, found {kind!r}")
    stray = set(doc) - _FIELDS[kind]
    if stray:
        raise FixtureError(f"{where}: unknown fields {sorted(stray)}")
    return _PARSERS[kind](doc, ctx, where)


def _subobject(ref, kind, ctx, where):
    if isinstance(ref, str):
        return load_fixture(ctx.directory / f"{ref}.{kind}", expect=kind,
                            active=ctx.active)
    return _parse_doc(ref, kind, ctx, where)


def load_fixture(path, expect=None, active=frozenset()):
    """Parse one fixture file (and whatever it references) to a domain object."""
    path = Path(path)
    try:
        resolved = path.resolve()
        if resolved in active:
            raise FixtureError(f"circular reference through {path.name}")
        text = path.read_text(encoding="utf-8")
    except OSError as ex:
        raise FixtureError(f"cannot read {path}: {ex}") from None
    try:
        doc = json.loads(text)
    except ValueError as ex:
        raise FixtureError(f"{path.name}: not a JSON document ({ex})") from None
    ctx = _Ctx(path.parent, active | {resolved})
    return _parse_doc(doc, expect, ctx, path.name)


# -- canonical serialization -----------------------------------------------------

def _sparse_from_vec(v, names):
    return {names[i]: str(x) for i, x in enumerate(v) if x}


def _sparse_from_table(table, row_names, col_names, out_names):
    out = {}
    for i, rn in enumerate(row_names):
        row = {}
        for j, cn in enumerate(col_names):
            ent = _sparse_from_vec(table[i][j], out_names)
            if ent:
                row[cn] = ent
        if row:
            out[rn] = row
    return out


def _sparse_from_matrix(m, src_names, tgt_names):
    out = {}
    for j, sn in enumerate(src_names):
        ent = _sparse_from_vec(m.column(j), tgt_names)
        if ent:
            out[sn] = ent
    return out


def algebra_doc(a):
    return {"kind": "algebra", "name": a.name, "dim": a.dim,
            "basis": list(a.basis_names),
            "brackets": _sparse_from_table(a.c, a.basis_names, a.basis_names,
                                           a.basis_names)}


def action_doc(act, name=None):
    return {"kind": "action",
            "name": name or f"action({act.actor.name},{act.acted.name})",
            "actor": algebra_doc(act.actor), "acted": algebra_doc(act.acted),
            "left": _sparse_from_table(act.left, act.actor.basis_names,
                                       act.acted.basis_names,
                                       act.acted.basis_names),
            "right": _sparse_from_table(act.right, act.acted.basis_names,
                                        act.actor.basis_names,
                                        act.acted.basis_names)}


def xmod_doc(xm):
    return {"kind": "xmod", "name": xm.name,
            "top": algebra_doc(xm.top), "base": algebra_doc(xm.base),
            "delta": _sparse_from_matrix(xm.delta, xm.top.basis_names,
                                         xm.base.basis_names),
            "action": action_doc(xm.action)}


def hom_doc(h, name=None):
    if isinstance(h, AlgebraHom):
        return {"kind": "hom",
                "name": name or f"{h.source.name}->{h.target.name}",
                "source": algebra_doc(h.source), "target": algebra_doc(h.target),
                "matrix": _sparse_from_matrix(h.matrix, h.source.basis_names,
                                              h.target.basis_names)}
    return {"kind": "hom", "name": name or f"{h.source.name}->{h.target.name}",
            "source": xmod_doc(h.source), "target": xmod_doc(h.target),
            "top_map": _sparse_from_matrix(h.top_map, h.source.top.basis_names,
                                           h.target.top.basis_names),
            "base_map": _sparse_from_matrix(h.base_map, h.source.base.basis_names,
                                            h.target.base.basis_names)}


def extension_doc(e):
    return {"kind": "extension", "name": e.name,
            "total": xmod_doc(e.total), "quotient": xmod_doc(e.quotient),
            "projection": {
                "top_map": _sparse_from_matrix(e.proj.top_map,
                                               e.total.top.basis_names,
                                               e.quotient.top.basis_names),
                "base_map": _sparse_from_matrix(e.proj.base_map,
                                                e.total.base.basis_names,
                                                e.quotient.base.basis_names)}}


def emit(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _dense(m):
    return [[str(x) for x in row] for row in m.entries]


# -- commands ---------------------------------------------------------------------

def _write(args, text, doc):
    payload = emit(doc) if args.json else text
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _mark(b):
    return "✓" if b else "✗"


_CHECKS = {
    LeibnizAlgebra: check_leibniz,
    LeibnizAction: check_action,
    CrossedModule: check_xmod,
    AlgebraHom: check_hom,
    XModHom: check_xmod_hom,
    Extension: check_extension,
}


def cmd_check(args):
    obj = load_fixture(args.path)
    rep = _CHECKS[type(obj)](obj)
    doc = {"subject": rep.subject, "valid": rep.valid,
           "violations": [{"label": label, "residual": [str(x) for x in res]}
                          for label, res in rep.violations]}
    _write(args, rep.summary() + "\n", doc)
    return 0 if rep.valid else 1


def cmd_multiplier(args):
    xm = load_fixture(args.path, expect="xmod")
    rep = check_xmod(xm)
    if not rep.valid:
        print(f"error: {rep.summary()}", file=sys.stderr)
        return 1
    esd = exterior_square_data(xm)
    mult, _ = schur_multiplier(xm)
    r = rank(mult.delta)
    lines = [
        f"q^n = {esd.qn.name}: dim {esd.qn.resolved.dim}",
        f"q^q = {esd.qq.name}: dim {esd.qq.resolved.dim}",
        f"M = ({mult.top.dim}, {mult.base.dim}), rank δ| = {r}",
        "structure: abelian crossed module with trivial action",
    ]
    delta = _sparse_from_matrix(mult.delta, mult.top.basis_names,
                                mult.base.basis_names)
    for an, col in delta.items():
        img = " + ".join(f"{c}*{bn}" if c != "1" else bn
                         for bn, c in sorted(col.items()))
        lines.append(f"δ| {an} = {img}")
    doc = {"xmod": xm.name,
           "qn": {"name": esd.qn.name, "dim": esd.qn.resolved.dim},
           "qq": {"name": esd.qq.name, "dim": esd.qq.resolved.dim},
           "multiplier": {"top_dim": mult.top.dim, "base_dim": mult.base.dim,
                          "rank_delta": r, "delta": delta}}
    _write(args, "\n".join(lines) + "\n", doc)
    return 0


def cmd_exterior(args):
    xm = load_fixture(args.path, expect="xmod")
    rep = check_xmod(xm)
    if not rep.valid:
        print(f"error: {rep.summary()}", file=sys.stderr)
        return 1
    esd = exterior_square_data(xm)
    lines = [
        f"q^n = {esd.qn.name}: dim {esd.qn.resolved.dim}, "
        f"basis [{', '.join(esd.qn.resolved.basis_names)}]",
        f"q^q = {esd.qq.name}: dim {esd.qq.resolved.dim}, "
        f"basis [{', '.join(esd.qq.resolved.basis_names)}]",
        f"evaluation to top: rank {rank(esd.lambda_n.matrix)}",
        f"evaluation to base: rank {rank(esd.mu_q.matrix)}",
        f"induced crossed module: {esd.induced_xmod.name}",
    ]
    doc = {"xmod": xm.name,
           "qn": {"name": esd.qn.name, "dim": esd.qn.resolved.dim,
                  "basis": list(esd.qn.resolved.basis_names)},
           "qq": {"name": esd.qq.name, "dim": esd.qq.resolved.dim,
                  "basis": list(esd.qq.resolved.basis_names)},
           "rank_lambda": rank(esd.lambda_n.matrix),
           "rank_mu": rank(esd.mu_q.matrix),
           "id_wedge_delta": _sparse_from_matrix(
               esd.id_wedge_delta.matrix, esd.qn.resolved.basis_names,
               esd.qq.resolved.basis_names)}
    _write(args, "\n".join(lines) + "\n", doc)
    return 0


def cmd_classify(args):
    e = load_fixture(args.path, expect="extension")
    try:
        fl = classify(e)
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1
    lines = [f"central {_mark(fl.central)} stem {_mark(fl.stem_extension)} "
             f"cover {_mark(fl.stem_cover)}"]
    p41 = None
    if fl.central:
        rep = prop41_crosscheck(e)
        p41 = {"kernel_in_derived": rep.kernel_in_derived,
               "theta_surjective": rep.theta_surjective,
               "kernel_to_abelianization_zero": rep.kernel_to_abelianization_zero,
               "abelianizations_isomorphic": rep.abelianizations_isomorphic,
               "theta_bijective": rep.theta_bijective,
               "multiplier_map_vanishes": rep.multiplier_map_vanishes}
        lines.append("stem characterizations (agree pairwise):")
        for key, val in p41.items():
            lines.append(f"  {key.replace('_', ' ')}: {_mark(val)}")
    else:
        lines.append("stem characterizations: need a central extension")
    doc = {"extension": e.name, "central": fl.central,
           "stem_extension": fl.stem_extension, "stem_cover": fl.stem_cover,
           "prop41": p41}
    _write(args, "\n".join(lines) + "\n", doc)
    return 0


def cmd_verify(args):
    e = load_fixture(args.path, expect="extension")
    try:
        rep = six_term_report(e)
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1
    lines = []
    interior = rep.nodes[:-1]
    for n in interior:
        lines.append(
            f"{n.name}: image ({n.incoming_image_top.dim}, "
            f"{n.incoming_image_base.dim}) vs kernel "
            f"({n.outgoing_kernel_top.dim}, {n.outgoing_kernel_base.dim}) "
            f"-> exact {_mark(n.exact)}")
    last = rep.nodes[-1]
    lines.append(f"{last.name}: image ({last.incoming_image_top.dim}, "
                 f"{last.incoming_image_base.dim}) -> surjective {_mark(last.exact)}")
    lines.append(f"exact at {sum(n.exact for n in interior)}/{len(interior)} "
                 "interior nodes")
    doc = {"extension": rep.extension, "exact": rep.exact,
           "nodes": [{"name": n.name, "exact": n.exact,
                      "image": [n.incoming_image_top.dim,
                                n.incoming_image_base.dim],
                      "kernel": [n.outgoing_kernel_top.dim,
                                 n.outgoing_kernel_base.dim]}
                     for n in rep.nodes],
           "maps": [{"name": nm, "top": _dense(tm), "base": _dense(bm)}
                    for nm, tm, bm in rep.maps]}
    _write(args, "\n".join(lines) + "\n", doc)
    return 0 if rep.exact else 1


def cmd_stemcover(args):
    xm = load_fixture(args.path, expect="xmod")
    try:
        e = stem_cover_of_perfect(xm)
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1
    payload = emit(xmod_doc(e.total))
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return 0


def cmd_liezation(args):
    xm = load_fixture(args.path, expect="xmod")
    rep = check_xmod(xm)
    if not rep.valid:
        print(f"error: {rep.summary()}", file=sys.stderr)
        return 1
    lz, _ = liezation(xm)
    payload = emit(xmod_doc(lz))
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return 0


def cmd_hl(args):
    a = load_fixture(args.path, expect="algebra")
    try:
        n = hl(a, args.degree)
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 1
    _write(args, f"{n}\n",
           {"algebra": a.name, "degree": args.degree, "dim": n})
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="leibxmod",
        description="Exact-rational invariants of Leibniz crossed modules.")
    sub = ap.add_subparsers(dest="command", required=True)
    table = [
        ("check", cmd_check, "validate any fixture file"),
        ("multiplier", cmd_multiplier, "multiplier of a crossed module"),
        ("exterior", cmd_exterior, "exterior squares of a crossed module"),
        ("classify-extension", cmd_classify,
         "central / stem / cover flags of an extension"),
        ("verify-sequence", cmd_verify,
         "six-term exactness report of a central extension"),
        ("stemcover", cmd_stemcover,
         "emit the stem cover total of a perfect crossed module"),
        ("liezation", cmd_liezation,
         "emit the universal Lie quotient of a crossed module"),
        ("hl", cmd_hl, "Leibniz homology dimension of an algebra"),
    ]
    for name, fn, help_text in table:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("path", help="fixture file")
        if name == "hl":
            sp.add_argument("degree", type=int, help="homology degree")
        sp.add_argument("--json", action="store_true",
                        help="machine-readable canonical JSON output")
        sp.add_argument("--out", default=None, help="write output to a file")
        sp.set_defaults(fn=fn)
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except FixtureError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
