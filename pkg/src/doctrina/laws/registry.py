"""The law registry: every checked law, its statement, and where it applies.

Statements are the laws' formulas in the operator notation of the two
doctrine modules; names are the short identifiers the command line accepts
through --law.  Negative controls are deliberately corrupted checker
fixtures, registered separately, that certify the machinery can fail.
"""

from __future__ import annotations

from .. import cat as ct
from .. import poset as po
from ..fincat import FinSet
from . import cat_laws as cl
from . import generate as gen
from . import poset_laws as pl
from .types import GenConfig, LawSpec


def _law(name, statement, applies_to, poset_scope=None, cat_scope=None, pc=None, cc=None):
    return LawSpec(
        name=name,
        statement=statement,
        applies_to=applies_to,
        poset_scope=poset_scope,
        cat_scope=cat_scope,
        poset_checker=pc,
        cat_checker=cc,
    )


LAWS: tuple[LawSpec, ...] = (
    # adjunction chains as Galois conditions
    _law("galois_closed", "◊P ⊆ M ⟺ P ⊆ iM ; iM ⊆ P ⟺ M ⊆ □P (and primed)", "poset", "poset", None, pl.chk_galois_closed),
    _law("galois_subst", "ΣfP ⊆ Q ⟺ P ⊆ f*Q ; f*Q ⊆ P ⟺ Q ⊆ ΠfP", "poset", "map", None, pl.chk_galois_subst),
    _law("frob", "ΣfP ∧ Q = Σf(P ∧ f*Q)", "poset", "map", None, pl.chk_frob),
    # one-sided and mixed introduction laws
    _law("int1c", "□(iV ⇒ i□P) = □(iV ⇒ P) (and primed)", "poset", "poset", None, pl.chk_int1c),
    _law("int1d", "i◊(iV ∧ iW) = iV ∧ iW (and primed)", "poset", "poset", None, pl.chk_int1d),
    _law("int1a", "□'(i◊P ⇒ iV) = □'(P ⇒ iV) (and mirror)", "poset", "poset", None, pl.chk_int1a),
    _law("int1", "i□(i'V ⇒ iW) = i'V ⇒ iW (and mirror)", "poset", "poset", None, pl.chk_int1),
    _law("int1b", "◊(i◊P ∧ i'V) = ◊(P ∧ i'V) (and mirror)", "poset", "poset", None, pl.chk_int1b),
    _law("rsl1", "◊(P ∧ i'N) = ◊(i◊P ∧ i'N)", "poset", "poset", None, pl.chk_rsl1),
    _law("rsl2", "◊'(P ∧ iM) = ◊'(i'◊'P ∧ iM)", "poset", "poset", None, pl.chk_rsl2),
    _law("rsl3", "i'N ⇒ iM = i□(i'N ⇒ iM) ; iM ⇒ i'N = i'□'(iM ⇒ i'N)", "poset", "poset", None, pl.chk_rsl3),
    _law("rsl4", "□'(P ⇒ iM) = □'(i◊P ⇒ iM) and □(iM ⇒ P) = □(iM ⇒ i□P) (and mirrors)", "poset", "poset", None, pl.chk_rsl4),
    _law("expcl", "iM ⇒ i'N is right closed; bB ⇒ bC is biclosed", "poset", "poset", None, pl.chk_expcl),
    _law("vcompl", "¬(M,false) is the up-closed complement; ¬¬M = M; ¬(M,true) = ⊤", "poset", "poset", None, pl.chk_vcompl),
    # the enriched adjunction-like laws
    _law("adj1", "hom(f*Q,P) = hom(Q,ΠfP) ; hom(P,f*Q) = hom(ΣfP,Q)", "poset", "map", None, pl.chk_adj1),
    _law("adj2", "meets(f*Q,P) = meets(Q,ΣfP) ; meets(P,f*Q) = meets(ΣfP,Q)", "poset", "map", None, pl.chk_adj2),
    _law("adj3", "nat(M,□P) = hom(iM,P) (and primed)", "poset", "poset", None, pl.chk_adj3),
    _law("adj4", "nat(◊P,M) = hom(P,iM) (and primed)", "poset", "poset", None, pl.chk_adj4),
    _law("adj5", "ten(N,◊P) = meets(i'N,P) ; ten(◊'P,M) = meets(P,iM)", "poset", "poset", None, pl.chk_adj5),
    _law("adj6", "nat(f·M,L) = nat(M,∀fL) (and primed)", "poset", "map", None, pl.chk_adj6),
    _law("adj7", "nat(L,f·M) = nat(∃fL,M) (and primed)", "poset", "map", None, pl.chk_adj7),
    _law("adj8", "ten(f'·N,L) = ten(N,∃fL) ; ten(N,f·M) = ten(∃'fN,M)", "poset", "map", None, pl.chk_adj8),
    # quantification to the point
    _law("hyp", "the four adjunction-like laws with hom/meets computed through Π/Σ to the point", "poset", "map", None, pl.chk_hyp),
    _law("hyp2", "f surjective ⟹ ΠX f*Q = ΠY Q and ΣX f*Q = ΣY Q", "poset", "map", None, pl.chk_hyp2),
    _law("hyp3", "x*P = hom({x},P) = meets({x},P)", "poset", "poset", None, pl.chk_hyp3),
    _law("hyp4", "y*ΠfP = hom(f*{y},P) ; y*ΣfP = meets(f*{y},P)", "poset", "map", None, pl.chk_hyp4),
    _law("rmkhyp", "x ∈ P ⟺ {x} ⊆ P ⟺ x factors through kP", "poset", "poset", None, pl.chk_rmkhyp),
    # restricted Frobenius
    _law(
        "temp3",
        "◊(P ∧ bB) = ◊P ∧ jB ; ∃f(M ∧ f·jB) = ∃fM ∧ jB (and primed)",
        "both",
        "map",
        "functor",
        pl.chk_temp3,
        cl.chk_temp3,
    ),
    # limits, Yoneda, Kan formulas
    _law("td2", "f final ⟹ lim(f·M) = lim M and colim'(f'·N) = colim' N (initial dual)", "both", "map", "functor", pl.chk_td2, cl.chk_td2),
    _law("td3", "nat(X/x,M) ≅ M(x) ; ten(x\\X,M) ≅ M(x) (and primed)", "both", "poset", "category", pl.chk_td3, cl.chk_td3),
    _law("td4", "y·∀fM ≅ nat(f·Y/y,M) ; y·∃fM ≅ ten(f'·y\\Y,M) ; x·□P ≅ hom(iX/x,P) ; x·◊P ≅ meets(i'x\\X,P)", "both", "map", "functor", pl.chk_td4, cl.chk_td4),
    # comprehension consequences
    _law("compr0", "coend P ≅ comp of the comprehension of P", "both", "poset", "category", pl.chk_compr0, cl.chk_compr0),
    _law("compr1", "meets(P,Q) ≅ coend over kQ of (kQ)*P ≅ coend over kP of (kP)*Q", "poset", "poset", None, pl.chk_compr1),
    _law("compr2", "ten(N,M) ≅ colim over k i'N of (k i'N)·M ≅ colim' over k iM of (k iM)'·N", "poset", "poset", None, pl.chk_compr2),
    _law("compr3", "hom(P,Q) ≅ end over kP of (kP)*Q", "poset", "poset", None, pl.chk_compr3),
    _law("compr4", "nat(L,M) ≅ lim over k iL of (k iL)·M (and primed)", "poset", "poset", None, pl.chk_compr4),
    _law("compr5", "P dense ⟺ kP final ; f final ⟺ cf dense ; X connected ⟺ ΣX1X dense", "both", "map", "functor", pl.chk_compr5, cl.chk_compr5),
    # tensor and transformation computed along comprehension (category side)
    _law("tennat", "ten = tensor oracle = ten by colimit ; nat = nat by limit", "cat", None, "category", None, cl.chk_tennat),
    _law("intro_ten", "ten(N,X/x) ≅ ten(x'·N,1) ≅ N(x)", "cat", None, "category", None, cl.chk_intro_ten),
    # weak adjunction-like laws (category side)
    _law("wadj2", "meets(f*Q,P) ≅ meets(Q,ΣfP) (both forms)", "cat", None, "functor", None, cl.chk_wadj2),
    _law("wadj5", "ten(N,◊P) ≅ meets(i'N,P) ; ten(◊'P,M) ≅ meets(P,iM)", "cat", None, "category", None, cl.chk_wadj5),
    _law("wadj6", "nat(f·M,L) ≅ nat(M,∀fL) (and primed)", "cat", None, "functor", None, cl.chk_wadj6),
    _law("wadj7", "nat(L,f·M) ≅ nat(∃fL,M) (and primed)", "cat", None, "functor", None, cl.chk_wadj7),
    _law("wadj8", "ten(f'·N,L) ≅ ten(N,∃fL) ; ten(N,f·M) ≅ ten(∃'fN,M)", "cat", None, "functor", None, cl.chk_wadj8),
    _law("dmadj", "maps over X from P to iM ≅ nat(◊P,M)", "cat", None, "category", None, cl.chk_dmadj),
    _law("sqadj", "maps over X from iM to P ≅ nat(M,□P)", "cat", None, "category", None, cl.chk_sqadj),
    _law("coh", "presheaf/elements round trip ; i(f·M) ≅ f*(iM)", "cat", None, "functor", None, cl.chk_coh),
    # sup and inf
    _law("sup_point", "X has a final point ⟺ id_X has a Sup (value: the least-named final point)", "both", "poset", "category", pl.chk_sup_point, cl.chk_sup_point),
    _law("sup_final", "t final ⟹ Sup(ft) exists iff Sup(f) does, with the same value", "both", "map", "functor", pl.chk_sup_final, cl.chk_sup_final),
    _law("rmksup", "sup P = sup ◊P and inf P = inf ◊'P (existence and value)", "poset", "poset", None, pl.chk_rmksup),
)


def registry() -> dict[str, LawSpec]:
    return {law.name: law for law in LAWS}


def poset_law_names() -> tuple[str, ...]:
    return tuple(law.name for law in LAWS if law.applies_to in ("poset", "both"))


def cat_law_names() -> tuple[str, ...]:
    return tuple(law.name for law in LAWS if law.applies_to in ("cat", "both"))


# ---------------------------------------------------------------------------
# negative controls: corrupted operators that must produce failures


def neg_closure_flip(inst) -> dict | None:
    """rsl1 with the left closure replaced by the right closure."""
    x = inst["X"]
    for p in pl._pin(inst, "P", gen.parts_of(x)):
        for n in pl._pin(inst, "N", gen.ups_of(x)):
            lhs = po.up_closure(po.conj(p, po.as_part(n)))
            rhs = po.up_closure(po.conj(po.as_part(po.up_closure(p)), po.as_part(n)))
            if lhs.members != rhs.members:
                return pl._fail("corrupted mixed Frobenius", lhs, rhs, P=p, N=n)
    return None


def neg_interior_as_closure(inst) -> dict | None:
    """adj3 with the interior replaced by the closure."""
    x = inst["X"]
    for p in pl._pin(inst, "P", gen.parts_of(x)):
        for m in pl._pin(inst, "M", gen.downs_of(x)):
            if po.nat(m, po.down_closure(p)) != po.hom(po.as_part(m), p):
                return pl._fail(
                    "corrupted interior adjunction",
                    po.nat(m, po.down_closure(p)),
                    po.hom(po.as_part(m), p),
                    P=p,
                    M=m,
                )
    return None


def neg_forall_no_interior(inst) -> dict | None:
    """td4 universal form with the quantification missing the interior step."""
    f = inst["f"]
    for y in f.cod.elements:
        slice_pull = po.restrict_down(f, po.principal_down(f.cod, y))
        for m in pl._pin(inst, "M", gen.downs_of(f.dom)):
            corrupted = po.pi(f, po.as_part(m))
            if (y in corrupted.members) != po.nat(slice_pull, m):
                return pl._fail(
                    "corrupted universal image",
                    y in corrupted.members,
                    po.nat(slice_pull, m),
                    M=m,
                    y=y,
                )
    return None


def _lan_unquotiented(f, m):
    """Left extension missing the connected-components quotient."""
    pushed = ct.sigma(f, ct.elements(m))
    base, E, proj = pushed.base, pushed.total, pushed.proj
    sets = {
        y: tuple(
            sorted(f"({e}|{w})" for e in E.objects for w in base.hom(y, proj.ob[e]))
        )
        for y in base.objects
    }
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        y, y2 = base.src[u], base.tgt[u]
        actions[u] = {
            f"({e}|{w})": f"({e}|{base.compose(w, u)})"
            for e in E.objects
            for w in base.hom(y2, proj.ob[e])
        }
    return ct.presheaf(base, sets, actions, check=False)


def neg_lan_unquotiented(inst) -> dict | None:
    """wadj7 with the left extension missing its quotient."""
    f = inst["f"]
    for l in cl._presheaves(inst, f.dom, "L"):
        pushed = _lan_unquotiented(f, l)
        for m in cl._presheaves(inst, f.cod, "M"):
            if ct.nat(l, ct.restrict(f, m)).size != ct.nat(pushed, m).size:
                return cl._fail(
                    "corrupted extension",
                    ct.nat(l, ct.restrict(f, m)).size,
                    ct.nat(pushed, m).size,
                    L=l,
                    M=m,
                )
    return None


def neg_ten_unquotiented(inst) -> dict | None:
    """tensor as a disjoint sum of pairs, missing the span quotient."""
    x = inst["X"]
    for n in cl._copresheaves(inst, x, "N"):
        for m in cl._presheaves(inst, x, "M"):
            raw = FinSet(
                tuple(
                    f"({o}|{a}|{b})"
                    for o in x.objects
                    for a in n.at(o)
                    for b in m.at(o)
                )
            )
            if raw.size != gen.coend_oracle(n, m).size:
                return cl._fail("corrupted tensor", raw.size, gen.coend_oracle(n, m).size, N=n, M=m)
    return None


NEGATIVE_CONTROLS: tuple[LawSpec, ...] = (
    LawSpec(
        name="neg_closure_flip",
        statement="rsl1 with ◊ replaced by ◊'",
        applies_to="poset",
        poset_scope="poset",
        poset_checker=neg_closure_flip,
        kind="negative",
    ),
    LawSpec(
        name="neg_interior_as_closure",
        statement="adj3 with □ replaced by ◊",
        applies_to="poset",
        poset_scope="poset",
        poset_checker=neg_interior_as_closure,
        kind="negative",
    ),
    LawSpec(
        name="neg_forall_no_interior",
        statement="td4 with ∀f replaced by Πf",
        applies_to="poset",
        poset_scope="map",
        poset_checker=neg_forall_no_interior,
        kind="negative",
    ),
    LawSpec(
        name="neg_lan_unquotiented",
        statement="wadj7 with ∃f missing the components quotient",
        applies_to="cat",
        cat_scope="functor",
        cat_checker=neg_lan_unquotiented,
        kind="negative",
    ),
    LawSpec(
        name="neg_ten_unquotiented",
        statement="ten as the unquotiented sum of pairs",
        applies_to="cat",
        cat_scope="category",
        cat_checker=neg_ten_unquotiented,
        kind="negative",
    ),
)
