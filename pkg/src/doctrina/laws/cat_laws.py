"""Checkers for every registered law in the category instance.

Bundles carry a corpus category under "X" or a functor between corpus
categories under "f"; presheaf, copresheaf and part slots are quantified
when unpinned.  Comparisons are exact bijections of finite sets (equal
cardinalities of canonically labeled truth sets) or isomorphisms of
set-valued parts found by guarded search.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Mapping

from .. import cat as ct
from ..fincat import FinCategory, FinFunctor, enumerate_functors, is_discrete_fibration
from . import generate as gen
from .types import GenConfig

Inst = Mapping[str, Any]

CONFIG_SLOT = "config"


def _config(inst: Inst) -> GenConfig:
    return inst.get(CONFIG_SLOT) or GenConfig()


def _fail(detail: str, lhs, rhs, **slots) -> dict:
    return {"detail": detail, "lhs": lhs, "rhs": rhs, **slots}


def _presheaves(inst: Inst, base: FinCategory, slot: str, cap: int | None = None):
    if slot in inst:
        return (inst[slot],)
    cfg = _config(inst)
    return gen.capped(gen.presheaves_on(base, cfg.max_fiber), cap or cfg.presheaf_cap)


def _copresheaves(inst: Inst, base: FinCategory, slot: str, cap: int | None = None):
    if slot in inst:
        return (inst[slot],)
    cfg = _config(inst)
    return gen.capped(gen.copresheaves_on(base, cfg.max_fiber), cap or cfg.presheaf_cap)


def _parts(inst: Inst, base: FinCategory, slot: str = "P"):
    if slot in inst:
        return (inst[slot],)
    cfg = _config(inst)
    return gen.parts_over(base, cfg.corpus, cfg.part_cap, cfg.budget)


def _sizes(t) -> int:
    return t.size


# ---------------------------------------------------------------------------
# certification of the closure and interior formulas (external adjunctions)


def chk_dmadj(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _parts(inst, x):
        cl = ct.closure(p)
        for m in _presheaves(inst, x, "M"):
            lhs = len(ct.part_maps(p, ct.elements(m)))
            rhs = ct.nat(cl, m).size
            if lhs != rhs:
                return _fail("closure adjunction", lhs, rhs, P=p, M=m)
    return None


def chk_sqadj(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _parts(inst, x):
        itr = ct.interior(p)
        for m in _presheaves(inst, x, "M"):
            lhs = len(ct.part_maps(ct.elements(m), p))
            rhs = ct.nat(m, itr).size
            if lhs != rhs:
                return _fail("interior adjunction", lhs, rhs, P=p, M=m)
    return None


def chk_coh(inst: Inst) -> dict | None:
    f = inst["f"]
    for m in _presheaves(inst, f.cod, "M"):
        el = ct.elements(m)
        if not is_discrete_fibration(el.proj):
            return _fail("elements is a discrete fibration", False, True, M=m)
        if not ct.presheaves_isomorphic(ct.presheaf_of(el), m):
            return _fail("round trip", ct.presheaf_of(el), m, M=m)
        pulled = ct.elements(ct.restrict(f, m))
        substituted = ct.substitution(f, el)
        if not ct.parts_isomorphic(pulled, substituted):
            return _fail("substitution coherence", pulled, substituted, M=m)
    for n in _copresheaves(inst, f.cod, "N"):
        el = ct.elements_co(n)
        if not ct.presheaves_isomorphic(ct.copresheaf_of(el), n):
            return _fail("dual round trip", ct.copresheaf_of(el), n, N=n)
    return None


# ---------------------------------------------------------------------------
# the weak adjunction-like laws


def chk_wadj2(inst: Inst) -> dict | None:
    f = inst["f"]
    for q in _parts(inst, f.cod, "Q"):
        pulled = ct.substitution(f, q)
        for p in _parts(inst, f.dom, "P"):
            if ct.meets(pulled, p).size != ct.meets(q, ct.sigma(f, p)).size:
                return _fail("first form", ct.meets(pulled, p), ct.meets(q, ct.sigma(f, p)), P=p, Q=q)
            if ct.meets(p, pulled).size != ct.meets(ct.sigma(f, p), q).size:
                return _fail("second form", ct.meets(p, pulled), ct.meets(ct.sigma(f, p), q), P=p, Q=q)
    return None


def chk_wadj5(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _parts(inst, x):
        cl, cl_co = ct.closure(p), ct.closure_co(p)
        for n in _copresheaves(inst, x, "N"):
            if ct.ten(n, cl).size != ct.meets(ct.elements_co(n), p).size:
                return _fail("left form", ct.ten(n, cl), ct.meets(ct.elements_co(n), p), P=p, N=n)
        for m in _presheaves(inst, x, "M"):
            if ct.ten(cl_co, m).size != ct.meets(p, ct.elements(m)).size:
                return _fail("right form", ct.ten(cl_co, m), ct.meets(p, ct.elements(m)), P=p, M=m)
    return None


def chk_wadj6(inst: Inst) -> dict | None:
    f = inst["f"]
    for m in _presheaves(inst, f.cod, "M"):
        pulled = ct.restrict(f, m)
        for l in _presheaves(inst, f.dom, "L"):
            if ct.nat(pulled, l).size != ct.nat(m, ct.ran(f, l)).size:
                return _fail("left form", ct.nat(pulled, l), ct.nat(m, ct.ran(f, l)), M=m, L=l)
    for o in _copresheaves(inst, f.cod, "O"):
        pulled_co = ct.restrict_co(f, o)
        for n in _copresheaves(inst, f.dom, "N"):
            if ct.nat_co(pulled_co, n).size != ct.nat_co(o, ct.ran_co(f, n)).size:
                return _fail("right form", ct.nat_co(pulled_co, n), ct.nat_co(o, ct.ran_co(f, n)), O=o, N=n)
    return None


def chk_wadj7(inst: Inst) -> dict | None:
    f = inst["f"]
    for l in _presheaves(inst, f.dom, "L"):
        pushed = ct.lan(f, l)
        for m in _presheaves(inst, f.cod, "M"):
            if ct.nat(l, ct.restrict(f, m)).size != ct.nat(pushed, m).size:
                return _fail("left form", ct.nat(l, ct.restrict(f, m)), ct.nat(pushed, m), L=l, M=m)
    for n in _copresheaves(inst, f.dom, "N"):
        pushed_co = ct.lan_co(f, n)
        for o in _copresheaves(inst, f.cod, "O"):
            if ct.nat_co(n, ct.restrict_co(f, o)).size != ct.nat_co(pushed_co, o).size:
                return _fail("right form", ct.nat_co(n, ct.restrict_co(f, o)), ct.nat_co(pushed_co, o), N=n, O=o)
    return None


def chk_wadj8(inst: Inst) -> dict | None:
    f = inst["f"]
    for n in _copresheaves(inst, f.cod, "N"):
        pulled = ct.restrict_co(f, n)
        for l in _presheaves(inst, f.dom, "L"):
            if ct.ten(pulled, l).size != ct.ten(n, ct.lan(f, l)).size:
                return _fail("first form", ct.ten(pulled, l), ct.ten(n, ct.lan(f, l)), N=n, L=l)
    for o in _copresheaves(inst, f.dom, "O"):
        pushed = ct.lan_co(f, o)
        for m in _presheaves(inst, f.cod, "M"):
            if ct.ten(o, ct.restrict(f, m)).size != ct.ten(pushed, m).size:
                return _fail("second form", ct.ten(o, ct.restrict(f, m)), ct.ten(pushed, m), O=o, M=m)
    return None


# ---------------------------------------------------------------------------
# restricted Frobenius


def chk_temp3(inst: Inst) -> dict | None:
    f = inst["f"]
    for l in _presheaves(inst, f.dom, "L"):
        pushed = ct.lan(f, l)
        for b in _biclosed(inst, f.cod, "C"):
            lhs = ct.lan(f, ct.wedge(l, ct.restrict(f, b)))
            rhs = ct.wedge(pushed, b)
            if not ct.presheaves_isomorphic(lhs, rhs):
                return _fail("left quantification form", lhs, rhs, L=l, C=b)
    return None


def _biclosed(inst: Inst, base: FinCategory, slot: str):
    if slot in inst:
        return (inst[slot],)
    cfg = _config(inst)
    pool = [m for m in gen.presheaves_on(base, cfg.max_fiber) if ct.is_biclosed(m)]
    return gen.capped(pool, max(4, cfg.presheaf_cap // 2))


# ---------------------------------------------------------------------------
# limits, Yoneda, Kan formulas


def chk_td2(inst: Inst) -> dict | None:
    f = inst["f"]
    if ct.is_final(f):
        for m in _presheaves(inst, f.cod, "M"):
            if ct.lim(ct.restrict(f, m)).size != ct.lim(m).size:
                return _fail("final limit", ct.lim(ct.restrict(f, m)), ct.lim(m), M=m)
        for n in _copresheaves(inst, f.cod, "N"):
            if ct.colim_co(ct.restrict_co(f, n)).size != ct.colim_co(n).size:
                return _fail("final colimit", ct.colim_co(ct.restrict_co(f, n)), ct.colim_co(n), N=n)
    if ct.is_initial(f):
        for m in _presheaves(inst, f.cod, "M"):
            if ct.colim(ct.restrict(f, m)).size != ct.colim(m).size:
                return _fail("initial colimit", ct.colim(ct.restrict(f, m)), ct.colim(m), M=m)
        for n in _copresheaves(inst, f.cod, "N"):
            if ct.lim_co(ct.restrict_co(f, n)).size != ct.lim_co(n).size:
                return _fail("initial limit", ct.lim_co(ct.restrict_co(f, n)), ct.lim_co(n), N=n)
    return None


def chk_td3(inst: Inst) -> dict | None:
    """Yoneda with the canonical bijection, natural in the object."""
    x = inst["X"]
    slices = {e: ct.slice_presheaf(x, e) for e in x.objects}
    coslices = {e: ct.coslice_copresheaf(x, e) for e in x.objects}
    for m in _presheaves(inst, x, "M"):
        evaluate = {}  # object -> transformation label -> value of the bijection
        for e in x.objects:
            trs = ct.natural_transformations(slices[e], m)
            if len(trs) != len(m.at(e)):
                return _fail("representable size", len(trs), len(m.at(e)), M=m, x=e)
            table = {tr.label(): tr.comp[e][x.id_of[e]] for tr in trs}
            if sorted(table.values()) != sorted(m.at(e)):
                return _fail("canonical bijection", sorted(table.values()), sorted(m.at(e)), M=m, x=e)
            evaluate[e] = table
        for u in x.mor_names:  # naturality of the bijection against every morphism
            if x.is_identity(u):
                continue
            e, e2 = x.src[u], x.tgt[u]
            tau = ct.natural_transformation(
                slices[e],
                slices[e2],
                {z: {w: x.compose(u, w) for w in slices[e].at(z)} for z in x.objects},
                check=False,
            )
            for tr in ct.natural_transformations(slices[e2], m):
                restricted = ct.compose_natural(tr, tau)
                if m.act[u][evaluate[e2][tr.label()]] != evaluate[e][restricted.label()]:
                    return _fail(
                        "bijection naturality",
                        m.act[u][evaluate[e2][tr.label()]],
                        evaluate[e][restricted.label()],
                        M=m,
                        x=e,
                    )
        for e in x.objects:
            tensor = ct.ten(coslices[e], m)
            if tensor.size != len(m.at(e)):
                return _fail("tensor evaluation", tensor.size, len(m.at(e)), M=m, x=e)
    for n in _copresheaves(inst, x, "N"):
        for e in x.objects:
            if ct.nat_co(coslices[e], n).size != len(n.at(e)):
                return _fail("primed representable size", ct.nat_co(coslices[e], n).size, len(n.at(e)), N=n, x=e)
            if ct.ten(n, slices[e]).size != len(n.at(e)):
                return _fail("primed tensor evaluation", ct.ten(n, slices[e]).size, len(n.at(e)), N=n, x=e)
    return None


def chk_td4(inst: Inst) -> dict | None:
    f = inst["f"]
    y_base = f.cod
    for m in _presheaves(inst, f.dom, "M"):
        pushed, lifted = ct.lan(f, m), ct.ran(f, m)
        for y in y_base.objects:
            formula = ct.ten(ct.restrict_co(f, ct.coslice_copresheaf(y_base, y)), m)
            if len(pushed.at(y)) != formula.size:
                return _fail("existential formula", len(pushed.at(y)), formula.size, M=m, y=y)
            formula2 = ct.nat(ct.restrict(f, ct.slice_presheaf(y_base, y)), m)
            if len(lifted.at(y)) != formula2.size:
                return _fail("universal formula", len(lifted.at(y)), formula2.size, M=m, y=y)
    return None


def chk_intro_ten(inst: Inst) -> dict | None:
    """The tensor evaluation chain through the singleton's closure."""
    from ..fincat import point_functor, terminal_category

    x = inst["X"]
    one = terminal_category()
    for n in _copresheaves(inst, x, "N"):
        for e in x.objects:
            point = point_functor(x, e)
            against_slice = ct.ten(n, ct.slice_presheaf(x, e)).size
            against_extension = ct.ten(n, ct.lan(point, ct.top(one))).size
            pulled_to_point = ct.ten(ct.restrict_co(point, n), ct.top(one)).size
            value = len(n.at(e))
            if not (against_slice == against_extension == pulled_to_point == value):
                return _fail(
                    "evaluation chain",
                    (against_slice, against_extension, pulled_to_point),
                    value,
                    N=n,
                    x=e,
                )
    return None


def chk_tennat(inst: Inst) -> dict | None:
    x = inst["X"]
    for n in _copresheaves(inst, x, "N"):
        for m in _presheaves(inst, x, "M"):
            direct = ct.ten(n, m).size
            oracle = gen.coend_oracle(n, m).size
            via_colim = ct.ten_by_colimit(n, m).size
            if not (direct == oracle == via_colim):
                return _fail("tensor routes", direct, (oracle, via_colim), N=n, M=m)
    for l in _presheaves(inst, x, "L"):
        for m in _presheaves(inst, x, "M"):
            if ct.nat(l, m).size != ct.nat_by_limit(l, m).size:
                return _fail("transformation routes", ct.nat(l, m), ct.nat_by_limit(l, m), L=l, M=m)
    return None


def chk_compr0(inst: Inst) -> dict | None:
    x = inst["X"]
    for p in _parts(inst, x):
        through_components = ct.components(p.total)
        if ct.coend(p).size != through_components.size:
            return _fail("coend through comprehension", ct.coend(p), through_components, P=p)
        via_colim = ct.colim(ct.top(p.total))
        if ct.coend(p).size != via_colim.size:
            return _fail("coend as colimit of the top part", ct.coend(p), via_colim, P=p)
    return None


def chk_compr5(inst: Inst) -> dict | None:
    f = inst["f"]
    for p in _parts(inst, f.dom):
        if ct.is_left_dense(p) != ct.is_final(p.proj):
            return _fail("dense versus final projection", ct.is_left_dense(p), ct.is_final(p.proj), P=p)
    if ct.is_final(f) != ct.is_left_dense(ct.sigma(f, ct.id_part(f.dom))):
        return _fail("final versus dense image", ct.is_final(f), ct.is_left_dense(ct.sigma(f, ct.id_part(f.dom))))
    x = f.dom
    if (ct.coend(ct.id_part(x)).size == 1) != (ct.components(x).size == 1):
        return _fail("connected versus singleton coend", ct.coend(ct.id_part(x)), ct.components(x))
    return None


# ---------------------------------------------------------------------------
# sup and the final-point proposition


def chk_sup_point(inst: Inst) -> dict | None:
    x = inst["X"]
    final_points = [
        e
        for e in x.objects
        if all(len(x.hom(y, e)) == 1 for y in x.objects)
    ]
    sup_id = ct.sup(ct.id_part(x))
    if bool(final_points) != (sup_id is not None):
        return _fail("final point versus sup of identity", final_points, sup_id)
    if final_points and sup_id != min(final_points):
        return _fail("sup of identity value", sup_id, min(final_points))
    return None


def chk_sup_final(inst: Inst) -> dict | None:
    from ..fincat import compose_functors

    f = inst["f"]
    sup_f = ct.sup_of_functor(f)
    for t in _pin_functors(inst, f.dom):
        sup_ft = ct.sup_of_functor(compose_functors(f, t))
        if sup_ft != sup_f:
            return _fail("final maps preserve sups", sup_ft, sup_f, t=t)
    return None


def _pin_functors(inst: Inst, target: FinCategory):
    if "t" in inst:
        return (inst["t"],)
    return _finals_into(target, _config(inst))


@lru_cache(maxsize=None)
def _finals_into_cached(target: FinCategory, corpus_names: tuple, budget: int):
    from ..fincat import identity_functor

    cats = gen.corpus()
    out = [identity_functor(target)]
    for name in corpus_names:
        for cand in enumerate_functors(cats[name], target, budget):
            if ct.is_final(cand):
                out.append(cand)
    return tuple(out)


def _finals_into(target: FinCategory, cfg: GenConfig):
    return _finals_into_cached(target, cfg.corpus, cfg.budget)
