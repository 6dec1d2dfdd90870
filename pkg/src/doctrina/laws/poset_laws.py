"""Checkers for every registered law in the poset instance.

Each checker takes an instance bundle (a poset under "X" or a monotone map
under "f", plus optionally pinned part slots) and quantifies over whatever
the bundle leaves open.  All comparisons are exact set identities.
"""

from __future__ import annotations

from typing import Any, Mapping

from .. import poset as po
from ..fincat import FinPoset
from . import generate as gen

Inst = Mapping[str, Any]


def _pin(inst: Inst, slot: str, family) -> tuple:
    return (inst[slot],) if slot in inst else tuple(family)


def _elems(inst: Inst, x: FinPoset, slot: str = "x") -> tuple[str, ...]:
    return (inst[slot],) if slot in inst else x.elements


def _eq(lhs: po.Part, rhs: po.Part) -> bool:
    return lhs.members == rhs.members


def _fail(detail: str, lhs, rhs, **slots) -> dict:
    return {"detail": detail, "lhs": lhs, "rhs": rhs, **slots}


i = po.as_part  # the inclusion of closed parts into parts, used constantly below


# ---------------------------------------------------------------------------
# adjunction chains as Galois conditions


def chk_galois_closed(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            if po.hom(i(po.down_closure(p)), i(m)) != po.hom(p, i(m)):
                return _fail("closure adjunction", po.down_closure(p), m, P=p, M=m)
            if po.hom(i(m), p) != po.hom(i(m), i(po.down_interior(p))):
                return _fail("interior adjunction", po.down_interior(p), m, P=p, M=m)
        for n in _pin(inst, "N", gen.ups_of(x)):
            if po.hom(i(po.up_closure(p)), i(n)) != po.hom(p, i(n)):
                return _fail("primed closure adjunction", po.up_closure(p), n, P=p, N=n)
            if po.hom(i(n), p) != po.hom(i(n), i(po.up_interior(p))):
                return _fail("primed interior adjunction", po.up_interior(p), n, P=p, N=n)
    return None


def chk_galois_subst(inst: Inst) -> dict | None:
    f = inst["f"]
    for p in _pin(inst, "P", gen.parts_of(f.dom)):
        for q in _pin(inst, "Q", gen.parts_of(f.cod)):
            if po.hom(po.sigma(f, p), q) != po.hom(p, po.substitution(f, q)):
                return _fail("sigma adjunction", po.sigma(f, p), po.substitution(f, q), P=p, Q=q)
            if po.hom(po.substitution(f, q), p) != po.hom(q, po.pi(f, p)):
                return _fail("pi adjunction", po.substitution(f, q), po.pi(f, p), P=p, Q=q)
    return None


def chk_frob(inst: Inst) -> dict | None:
    f = inst["f"]
    for p in _pin(inst, "P", gen.parts_of(f.dom)):
        for q in _pin(inst, "Q", gen.parts_of(f.cod)):
            lhs = po.conj(po.sigma(f, p), q)
            rhs = po.sigma(f, po.conj(p, po.substitution(f, q)))
            if not _eq(lhs, rhs):
                return _fail("Frobenius", lhs, rhs, P=p, Q=q)
    return None


# ---------------------------------------------------------------------------
# the one-sided and mixed laws of the introduction


def chk_int1c(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for v in _pin(inst, "M", gen.downs_of(x)):
            lhs = po.down_interior(po.implication(i(v), i(po.down_interior(p))))
            rhs = po.down_interior(po.implication(i(v), p))
            if not _eq(lhs, rhs):
                return _fail("left form", lhs, rhs, P=p, M=v)
        for v in _pin(inst, "N", gen.ups_of(x)):
            lhs = po.up_interior(po.implication(i(v), i(po.up_interior(p))))
            rhs = po.up_interior(po.implication(i(v), p))
            if not _eq(lhs, rhs):
                return _fail("right form", lhs, rhs, P=p, N=v)
    return None


def chk_int1d(inst: Inst) -> dict | None:
    x = inst["X"]
    for v in _pin(inst, "M", gen.downs_of(x)):
        for w in _pin(inst, "L", gen.downs_of(x)):
            meet = po.conj(i(v), i(w))
            if not _eq(i(po.down_closure(meet)), meet):
                return _fail("left form", po.down_closure(meet), meet, M=v, L=w)
    for v in _pin(inst, "N", gen.ups_of(x)):
        for w in _pin(inst, "O", gen.ups_of(x)):
            meet = po.conj(i(v), i(w))
            if not _eq(i(po.up_closure(meet)), meet):
                return _fail("right form", po.up_closure(meet), meet, N=v, O=w)
    return None


def chk_int1a(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for v in _pin(inst, "M", gen.downs_of(x)):
            lhs = po.up_interior(po.implication(i(po.down_closure(p)), i(v)))
            rhs = po.up_interior(po.implication(p, i(v)))
            if not _eq(lhs, rhs):
                return _fail("left form", lhs, rhs, P=p, M=v)
        for v in _pin(inst, "N", gen.ups_of(x)):
            lhs = po.down_interior(po.implication(i(po.up_closure(p)), i(v)))
            rhs = po.down_interior(po.implication(p, i(v)))
            if not _eq(lhs, rhs):
                return _fail("right form", lhs, rhs, P=p, N=v)
    return None


def chk_int1(inst: Inst) -> dict | None:
    x = inst["X"]
    for v in _pin(inst, "N", gen.ups_of(x)):
        for w in _pin(inst, "M", gen.downs_of(x)):
            exp = po.implication(i(v), i(w))
            if not _eq(i(po.down_interior(exp)), exp):
                return _fail("up implies down is down", po.down_interior(exp), exp, N=v, M=w)
            exp2 = po.implication(i(w), i(v))
            if not _eq(i(po.up_interior(exp2)), exp2):
                return _fail("down implies up is up", po.up_interior(exp2), exp2, N=v, M=w)
    return None


def chk_int1b(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for v in _pin(inst, "N", gen.ups_of(x)):
            lhs = po.down_closure(po.conj(i(po.down_closure(p)), i(v)))
            rhs = po.down_closure(po.conj(p, i(v)))
            if not _eq(lhs, rhs):
                return _fail("left form", lhs, rhs, P=p, N=v)
        for v in _pin(inst, "M", gen.downs_of(x)):
            lhs = po.up_closure(po.conj(i(po.up_closure(p)), i(v)))
            rhs = po.up_closure(po.conj(p, i(v)))
            if not _eq(lhs, rhs):
                return _fail("right form", lhs, rhs, P=p, M=v)
    return None


def chk_rsl1(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for n in _pin(inst, "N", gen.ups_of(x)):
            lhs = po.down_closure(po.conj(p, i(n)))
            rhs = po.down_closure(po.conj(i(po.down_closure(p)), i(n)))
            if not _eq(lhs, rhs):
                return _fail("mixed Frobenius, left", lhs, rhs, P=p, N=n)
    return None


def chk_rsl2(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            lhs = po.up_closure(po.conj(p, i(m)))
            rhs = po.up_closure(po.conj(i(po.up_closure(p)), i(m)))
            if not _eq(lhs, rhs):
                return _fail("mixed Frobenius, right", lhs, rhs, P=p, M=m)
    return None


def chk_rsl3(inst: Inst) -> dict | None:
    x = inst["X"]
    for n in _pin(inst, "N", gen.ups_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            exp = po.implication(i(n), i(m))
            if not _eq(exp, i(po.down_interior(exp))):
                return _fail("left form", exp, po.down_interior(exp), N=n, M=m)
            exp2 = po.implication(i(m), i(n))
            if not _eq(exp2, i(po.up_interior(exp2))):
                return _fail("right form", exp2, po.up_interior(exp2), N=n, M=m)
    return None


def chk_rsl4(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            lhs = po.up_interior(po.implication(p, i(m)))
            rhs = po.up_interior(po.implication(i(po.down_closure(p)), i(m)))
            if not _eq(lhs, rhs):
                return _fail("left form", lhs, rhs, P=p, M=m)
            lhs = po.down_interior(po.implication(i(m), p))
            rhs = po.down_interior(po.implication(i(m), i(po.down_interior(p))))
            if not _eq(lhs, rhs):
                return _fail("left coreflection form", lhs, rhs, P=p, M=m)
        for n in _pin(inst, "N", gen.ups_of(x)):
            lhs = po.down_interior(po.implication(p, i(n)))
            rhs = po.down_interior(po.implication(i(po.up_closure(p)), i(n)))
            if not _eq(lhs, rhs):
                return _fail("right form", lhs, rhs, P=p, N=n)
            lhs = po.up_interior(po.implication(i(n), p))
            rhs = po.up_interior(po.implication(i(n), i(po.up_interior(p))))
            if not _eq(lhs, rhs):
                return _fail("right coreflection form", lhs, rhs, P=p, N=n)
    return None


def chk_expcl(inst: Inst) -> dict | None:
    x = inst["X"]
    for m in _pin(inst, "M", gen.downs_of(x)):
        for n in _pin(inst, "N", gen.ups_of(x)):
            exp = po.implication(i(m), i(n))
            if not _eq(exp, i(po.up_closure(exp))):
                return _fail("exponential not up-closed", exp, po.up_closure(exp), M=m, N=n)
    for b in _pin(inst, "B", gen.biclosed_of(x)):
        for c in _pin(inst, "C", gen.biclosed_of(x)):
            exp = po.implication(i(b), i(c))
            bic = po.conj(i(po.down_closure(exp)), i(po.up_closure(exp)))
            if not (_eq(exp, i(po.down_closure(exp))) and _eq(exp, i(po.up_closure(exp)))):
                return _fail("biclosed exponential", exp, bic, B=b, C=c)
    return None


def chk_vcompl(inst: Inst) -> dict | None:
    x = inst["X"]
    full = x.universe
    for m in _pin(inst, "M", gen.downs_of(x)):
        neg = po.complement_against(m, False)
        if neg.members != full - m.members:
            return _fail("complement value", neg, po.part(x, full - m.members), M=m)
        if po.complement_against_up(neg, False).members != m.members:
            return _fail("double complement", po.complement_against_up(neg, False), m, M=m)
        if po.complement_against(m, True).members != full:
            return _fail("complement against true", po.complement_against(m, True), po.top(x), M=m)
    for n in _pin(inst, "N", gen.ups_of(x)):
        neg = po.complement_against_up(n, False)
        if neg.members != full - n.members:
            return _fail("dual complement value", neg, po.part(x, full - n.members), N=n)
    return None


# ---------------------------------------------------------------------------
# restricted Frobenius


def chk_temp3(inst: Inst) -> dict | None:
    f = inst["f"]
    x = f.dom
    for p in _pin(inst, "P", gen.parts_of(x)):
        for b in _pin(inst, "B", gen.biclosed_of(x)):
            lhs = po.down_closure(po.conj(p, i(b)))
            rhs = po.conj(i(po.down_closure(p)), i(b))
            if not _eq(lhs, rhs):
                return _fail("closure form", lhs, rhs, P=p, B=b)
    for m in _pin(inst, "M", gen.downs_of(x)):
        for b in _pin(inst, "C", gen.biclosed_of(f.cod)):
            pulled = po.down_set(x, po.substitution(f, i(b)).members)
            lhs = po.exists_along(f, po.down_set(x, po.conj(i(m), i(pulled)).members))
            rhs = po.conj(i(po.exists_along(f, m)), i(b))
            if not _eq(lhs, rhs):
                return _fail("left quantification form", lhs, rhs, M=m, C=b)
    for n in _pin(inst, "N", gen.ups_of(x)):
        for b in _pin(inst, "C", gen.biclosed_of(f.cod)):
            pulled = po.up_set(x, po.substitution(f, i(b)).members)
            lhs = po.exists_along_up(f, po.up_set(x, po.conj(i(n), i(pulled)).members))
            rhs = po.conj(i(po.exists_along_up(f, n)), i(b))
            if not _eq(lhs, rhs):
                return _fail("right quantification form", lhs, rhs, N=n, C=b)
    return None


# ---------------------------------------------------------------------------
# the enriched adjunction-like laws


def chk_adj1(inst: Inst) -> dict | None:
    f = inst["f"]
    for p in _pin(inst, "P", gen.parts_of(f.dom)):
        for q in _pin(inst, "Q", gen.parts_of(f.cod)):
            if po.hom(po.substitution(f, q), p) != po.hom(q, po.pi(f, p)):
                return _fail("right adjoint form", po.hom(po.substitution(f, q), p), po.hom(q, po.pi(f, p)), P=p, Q=q)
            if po.hom(p, po.substitution(f, q)) != po.hom(po.sigma(f, p), q):
                return _fail("left adjoint form", po.hom(p, po.substitution(f, q)), po.hom(po.sigma(f, p), q), P=p, Q=q)
    return None


def chk_adj2(inst: Inst) -> dict | None:
    f = inst["f"]
    for p in _pin(inst, "P", gen.parts_of(f.dom)):
        for q in _pin(inst, "Q", gen.parts_of(f.cod)):
            if po.meets(po.substitution(f, q), p) != po.meets(q, po.sigma(f, p)):
                return _fail("first form", po.meets(po.substitution(f, q), p), po.meets(q, po.sigma(f, p)), P=p, Q=q)
            if po.meets(p, po.substitution(f, q)) != po.meets(po.sigma(f, p), q):
                return _fail("second form", po.meets(p, po.substitution(f, q)), po.meets(po.sigma(f, p), q), P=p, Q=q)
    return None


def chk_adj3(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            if po.nat(m, po.down_interior(p)) != po.hom(i(m), p):
                return _fail("left form", po.nat(m, po.down_interior(p)), po.hom(i(m), p), P=p, M=m)
        for n in _pin(inst, "N", gen.ups_of(x)):
            if po.nat_up(n, po.up_interior(p)) != po.hom(i(n), p):
                return _fail("right form", po.nat_up(n, po.up_interior(p)), po.hom(i(n), p), P=p, N=n)
    return None


def chk_adj4(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            if po.nat(po.down_closure(p), m) != po.hom(p, i(m)):
                return _fail("left form", po.nat(po.down_closure(p), m), po.hom(p, i(m)), P=p, M=m)
        for n in _pin(inst, "N", gen.ups_of(x)):
            if po.nat_up(po.up_closure(p), n) != po.hom(p, i(n)):
                return _fail("right form", po.nat_up(po.up_closure(p), n), po.hom(p, i(n)), P=p, N=n)
    return None


def chk_adj5(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for n in _pin(inst, "N", gen.ups_of(x)):
            if po.ten(n, po.down_closure(p)) != po.meets(i(n), p):
                return _fail("left form", po.ten(n, po.down_closure(p)), po.meets(i(n), p), P=p, N=n)
        for m in _pin(inst, "M", gen.downs_of(x)):
            if po.ten(po.up_closure(p), m) != po.meets(p, i(m)):
                return _fail("right form", po.ten(po.up_closure(p), m), po.meets(p, i(m)), P=p, M=m)
    return None


def chk_adj6(inst: Inst) -> dict | None:
    f = inst["f"]
    for m in _pin(inst, "M", gen.downs_of(f.cod)):
        for l in _pin(inst, "L", gen.downs_of(f.dom)):
            if po.nat(po.restrict_down(f, m), l) != po.nat(m, po.forall_along(f, l)):
                return _fail("left form", po.nat(po.restrict_down(f, m), l), po.nat(m, po.forall_along(f, l)), M=m, L=l)
    for n in _pin(inst, "N", gen.ups_of(f.cod)):
        for o in _pin(inst, "O", gen.ups_of(f.dom)):
            if po.nat_up(po.restrict_up(f, n), o) != po.nat_up(n, po.forall_along_up(f, o)):
                return _fail("right form", po.nat_up(po.restrict_up(f, n), o), po.nat_up(n, po.forall_along_up(f, o)), N=n, O=o)
    return None


def chk_adj7(inst: Inst) -> dict | None:
    f = inst["f"]
    for l in _pin(inst, "L", gen.downs_of(f.dom)):
        for m in _pin(inst, "M", gen.downs_of(f.cod)):
            if po.nat(l, po.restrict_down(f, m)) != po.nat(po.exists_along(f, l), m):
                return _fail("left form", po.nat(l, po.restrict_down(f, m)), po.nat(po.exists_along(f, l), m), L=l, M=m)
    for o in _pin(inst, "O", gen.ups_of(f.dom)):
        for n in _pin(inst, "N", gen.ups_of(f.cod)):
            if po.nat_up(o, po.restrict_up(f, n)) != po.nat_up(po.exists_along_up(f, o), n):
                return _fail("right form", po.nat_up(o, po.restrict_up(f, n)), po.nat_up(po.exists_along_up(f, o), n), O=o, N=n)
    return None


def chk_adj8(inst: Inst) -> dict | None:
    f = inst["f"]
    for n in _pin(inst, "N", gen.ups_of(f.cod)):
        for l in _pin(inst, "L", gen.downs_of(f.dom)):
            if po.ten(po.restrict_up(f, n), l) != po.ten(n, po.exists_along(f, l)):
                return _fail("first form", po.ten(po.restrict_up(f, n), l), po.ten(n, po.exists_along(f, l)), N=n, L=l)
    for o in _pin(inst, "O", gen.ups_of(f.dom)):
        for m in _pin(inst, "M", gen.downs_of(f.cod)):
            if po.ten(o, po.restrict_down(f, m)) != po.ten(po.exists_along_up(f, o), m):
                return _fail("second form", po.ten(o, po.restrict_down(f, m)), po.ten(po.exists_along_up(f, o), m), O=o, M=m)
    return None


# ---------------------------------------------------------------------------
# the truth-valued laws computed through quantification to the point


def _hom_pt(p: po.Part, q: po.Part) -> bool:
    return bool(po.pi(gen.bang_map(p.base), po.implication(p, q)).members)


def _meets_pt(p: po.Part, q: po.Part) -> bool:
    return bool(po.sigma(gen.bang_map(p.base), po.conj(p, q)).members)


def chk_hyp(inst: Inst) -> dict | None:
    f = inst["f"]
    for p in _pin(inst, "P", gen.parts_of(f.dom)):
        for q in _pin(inst, "Q", gen.parts_of(f.cod)):
            pairs = (
                ("hom right", _hom_pt(po.substitution(f, q), p), _hom_pt(q, po.pi(f, p))),
                ("hom left", _hom_pt(p, po.substitution(f, q)), _hom_pt(po.sigma(f, p), q)),
                ("meets first", _meets_pt(po.substitution(f, q), p), _meets_pt(q, po.sigma(f, p))),
                ("meets second", _meets_pt(p, po.substitution(f, q)), _meets_pt(po.sigma(f, p), q)),
            )
            for detail, lhs, rhs in pairs:
                if lhs != rhs:
                    return _fail(detail, lhs, rhs, P=p, Q=q)
    return None


def chk_hyp2(inst: Inst) -> dict | None:
    f = inst["f"]
    if not po.is_surjective(f):
        return None
    for q in _pin(inst, "Q", gen.parts_of(f.cod)):
        pulled = po.substitution(f, q)
        if _eq(po.pi(gen.bang_map(f.dom), pulled), po.pi(gen.bang_map(f.cod), q)) and _eq(
            po.sigma(gen.bang_map(f.dom), pulled), po.sigma(gen.bang_map(f.cod), q)
        ):
            continue
        return _fail(
            "surjective substitution",
            po.pi(gen.bang_map(f.dom), pulled),
            po.pi(gen.bang_map(f.cod), q),
            Q=q,
        )
    return None


def chk_hyp3(inst: Inst) -> dict | None:
    x = inst["X"]
    for e in _elems(inst, x):
        single = po.singleton(x, e)
        for p in _pin(inst, "P", gen.parts_of(x)):
            value = e in p.members
            if po.hom(single, p) != value or po.meets(single, p) != value:
                return _fail("singleton evaluation", po.hom(single, p), value, P=p, x=e)
    return None


def chk_hyp4(inst: Inst) -> dict | None:
    f = inst["f"]
    for y in _elems(inst, f.cod, "y"):
        single = po.substitution(f, po.singleton(f.cod, y))
        for p in _pin(inst, "P", gen.parts_of(f.dom)):
            if (y in po.pi(f, p).members) != po.hom(single, p):
                return _fail("universal image", y in po.pi(f, p).members, po.hom(single, p), P=p, y=y)
            if (y in po.sigma(f, p).members) != po.meets(single, p):
                return _fail("image", y in po.sigma(f, p).members, po.meets(single, p), P=p, y=y)
    return None


def chk_rmkhyp(inst: Inst) -> dict | None:
    x = inst["X"]
    for e in _elems(inst, x):
        for p in _pin(inst, "P", gen.parts_of(x)):
            member = e in p.members
            via_singleton = po.hom(po.singleton(x, e), p)
            k = po.comprehension_k(p)
            factors = any(
                po.compose_maps(k, g).mapping == gen.point_map(x, e).mapping
                for g in gen.enumerate_monotone(gen.POINT, k.dom)
            )
            if not (member == via_singleton == factors):
                return _fail("external evaluation chain", (member, via_singleton), factors, P=p, x=e)
    return None


# ---------------------------------------------------------------------------
# limits, Yoneda, quantification formulas


def chk_td2(inst: Inst) -> dict | None:
    f = inst["f"]
    if po.is_final(f):
        for m in _pin(inst, "M", gen.downs_of(f.cod)):
            if po.lim_down(po.restrict_down(f, m)) != po.lim_down(m):
                return _fail("final limit", po.lim_down(po.restrict_down(f, m)), po.lim_down(m), M=m)
        for n in _pin(inst, "N", gen.ups_of(f.cod)):
            if po.colim_up(po.restrict_up(f, n)) != po.colim_up(n):
                return _fail("final colimit", po.colim_up(po.restrict_up(f, n)), po.colim_up(n), N=n)
    if po.is_initial(f):
        for m in _pin(inst, "M", gen.downs_of(f.cod)):
            if po.colim_down(po.restrict_down(f, m)) != po.colim_down(m):
                return _fail("initial colimit", po.colim_down(po.restrict_down(f, m)), po.colim_down(m), M=m)
        for n in _pin(inst, "N", gen.ups_of(f.cod)):
            if po.lim_up(po.restrict_up(f, n)) != po.lim_up(n):
                return _fail("initial limit", po.lim_up(po.restrict_up(f, n)), po.lim_up(n), N=n)
    return None


def chk_td3(inst: Inst) -> dict | None:
    x = inst["X"]
    for e in _elems(inst, x):
        down, up = po.principal_down(x, e), po.principal_up(x, e)
        for m in _pin(inst, "M", gen.downs_of(x)):
            value = e in m.members
            if po.nat(down, m) != value or po.ten(up, m) != value:
                return _fail("left evaluation", (po.nat(down, m), po.ten(up, m)), value, M=m, x=e)
        for n in _pin(inst, "N", gen.ups_of(x)):
            value = e in n.members
            if po.nat_up(up, n) != value or po.ten(n, down) != value:
                return _fail("right evaluation", (po.nat_up(up, n), po.ten(n, down)), value, N=n, x=e)
    return None


def chk_td4(inst: Inst) -> dict | None:
    f = inst["f"]
    x, y_base = f.dom, f.cod
    for y in _elems(inst, f.cod, "y"):
        slice_pull = po.restrict_down(f, po.principal_down(y_base, y))
        coslice_pull = po.restrict_up(f, po.principal_up(y_base, y))
        for m in _pin(inst, "M", gen.downs_of(x)):
            if (y in po.forall_along(f, m).members) != po.nat(slice_pull, m):
                return _fail("universal form", y in po.forall_along(f, m).members, po.nat(slice_pull, m), M=m, y=y)
            if (y in po.exists_along(f, m).members) != po.ten(coslice_pull, m):
                return _fail("existential form", y in po.exists_along(f, m).members, po.ten(coslice_pull, m), M=m, y=y)
        for n in _pin(inst, "N", gen.ups_of(x)):
            if (y in po.forall_along_up(f, n).members) != po.nat_up(coslice_pull, n):
                return _fail("primed universal form", y in po.forall_along_up(f, n).members, po.nat_up(coslice_pull, n), N=n, y=y)
            if (y in po.exists_along_up(f, n).members) != po.ten(n, slice_pull):
                return _fail("primed existential form", y in po.exists_along_up(f, n).members, po.ten(n, slice_pull), N=n, y=y)
    for e in _elems(inst, x):
        for p in _pin(inst, "P", gen.parts_of(x)):
            if (e in po.down_interior(p).members) != po.hom(i(po.principal_down(x, e)), p):
                return _fail("interior form", e in po.down_interior(p).members, po.hom(i(po.principal_down(x, e)), p), P=p, x=e)
            if (e in po.down_closure(p).members) != po.meets(i(po.principal_up(x, e)), p):
                return _fail("closure form", e in po.down_closure(p).members, po.meets(i(po.principal_up(x, e)), p), P=p, x=e)
    return None


# ---------------------------------------------------------------------------
# comprehension consequences


def chk_compr0(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        sub = po.comprehension_k(p).dom
        if po.coend_part(p) != po.components(sub):
            return _fail("coend through comprehension", po.coend_part(p), po.components(sub), P=p)
    return None


def chk_compr1(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for q in _pin(inst, "Q", gen.parts_of(x)):
            via_q = po.coend_part(po.substitution(po.comprehension_k(q), p))
            via_p = po.coend_part(po.substitution(po.comprehension_k(p), q))
            if po.meets(p, q) != via_q or po.meets(p, q) != via_p:
                return _fail("meets as coend", po.meets(p, q), (via_q, via_p), P=p, Q=q)
    return None


def chk_compr2(inst: Inst) -> dict | None:
    x = inst["X"]
    for n in _pin(inst, "N", gen.ups_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            k_n = po.comprehension_k(i(n))
            via_n = po.colim_down(po.down_set(k_n.dom, po.substitution(k_n, i(m)).members))
            k_m = po.comprehension_k(i(m))
            via_m = po.colim_up(po.up_set(k_m.dom, po.substitution(k_m, i(n)).members))
            if po.ten(n, m) != via_n or po.ten(n, m) != via_m:
                return _fail("tensor as colimit", po.ten(n, m), (via_n, via_m), N=n, M=m)
    return None


def chk_compr3(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        for q in _pin(inst, "Q", gen.parts_of(x)):
            via_p = po.end_part(po.substitution(po.comprehension_k(p), q))
            if po.hom(p, q) != via_p:
                return _fail("hom as end", po.hom(p, q), via_p, P=p, Q=q)
    return None


def chk_compr4(inst: Inst) -> dict | None:
    x = inst["X"]
    for l in _pin(inst, "L", gen.downs_of(x)):
        for m in _pin(inst, "M", gen.downs_of(x)):
            k_l = po.comprehension_k(i(l))
            via = po.lim_down(po.down_set(k_l.dom, po.substitution(k_l, i(m)).members))
            if po.nat(l, m) != via:
                return _fail("transformations as limit", po.nat(l, m), via, L=l, M=m)
    for n in _pin(inst, "N", gen.ups_of(x)):
        for o in _pin(inst, "O", gen.ups_of(x)):
            k_n = po.comprehension_k(i(n))
            via = po.lim_up(po.up_set(k_n.dom, po.substitution(k_n, i(o)).members))
            if po.nat_up(n, o) != via:
                return _fail("primed transformations as limit", po.nat_up(n, o), via, N=n, O=o)
    return None


def chk_compr5(inst: Inst) -> dict | None:
    f = inst["f"]
    for p in _pin(inst, "P", gen.parts_of(f.dom)):
        if po.is_left_dense(p) != po.is_final(po.comprehension_k(p)):
            return _fail("dense versus final inclusion", po.is_left_dense(p), po.is_final(po.comprehension_k(p)), P=p)
    if po.is_final(f) != po.is_left_dense(po.comprehension_c(f)):
        return _fail("final versus dense extension", po.is_final(f), po.is_left_dense(po.comprehension_c(f)))
    x = f.dom
    if po.components(x) != po.is_left_dense(po.sigma(gen.bang_map(x), po.top(x))):
        return _fail("connected versus dense image", po.components(x), po.is_left_dense(po.sigma(gen.bang_map(x), po.top(x))))
    return None


# ---------------------------------------------------------------------------
# sup and inf


def chk_sup_point(inst: Inst) -> dict | None:
    x = inst["X"]
    greatest = next(
        (e for e in x.elements if all(x.le(o, e) for o in x.elements)), None
    )
    sup_id = po.sup_of_map(po.identity_map(x))
    if (greatest is None) != (sup_id is None) or greatest != sup_id:
        return _fail("greatest element versus sup of identity", greatest, sup_id)
    dense_sups = [
        po.sup(p) for p in gen.parts_of(x) if po.is_left_dense(p) and po.sup(p) is not None
    ]
    if bool(dense_sups) != (greatest is not None):
        return _fail("dense part with sup", dense_sups, greatest)
    if dense_sups and any(s != greatest for s in dense_sups):
        return _fail("dense sup value", dense_sups, greatest)
    return None


def chk_rmksup(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _pin(inst, "P", gen.parts_of(x)):
        if po.sup(p) != po.sup(i(po.down_closure(p))):
            return _fail("sup through closure", po.sup(p), po.sup(i(po.down_closure(p))), P=p)
        if po.inf(p) != po.inf(i(po.up_closure(p))):
            return _fail("inf through closure", po.inf(p), po.inf(i(po.up_closure(p))), P=p)
    return None


def _finals_into(t: FinPoset) -> tuple[po.MonotoneMap, ...]:
    bound = min(len(t.elements), 3)
    out = [po.identity_map(t)]
    for s in gen.poset_universe(bound):
        for cand in gen.enumerate_monotone(s, t):
            if po.is_final(cand):
                out.append(cand)
    return tuple(out)


def chk_sup_final(inst: Inst) -> dict | None:
    f = inst["f"]
    sup_f = po.sup_of_map(f)
    for t in _pin(inst, "t", _finals_into(f.dom)):
        sup_ft = po.sup_of_map(po.compose_maps(f, t))
        if sup_ft != sup_f:
            return _fail("final maps preserve sups", sup_ft, sup_f, t=t)
    return None
