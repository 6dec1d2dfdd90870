"""The set-valued doctrine of finite categories.

Parts of a category X are finite categories over X; left and right closed
parts are presheaves and copresheaves, included among parts through their
categories of elements (discrete fibrations and opfibrations); truth values
are finite sets.

Closure is computed by connected components of comma categories and interior
by maps-over-the-base out of slices; neither formula is taken on faith: the
law registry certifies both against the adjunction bijections by exhaustive
enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

from .errors import (
    BaseMismatch,
    BudgetExceeded,
    InvalidPresheaf,
    NotADiscreteFibration,
    NotNatural,
    UnknownObject,
)
from .fincat import (
    DEFAULT_BUDGET,
    FinCategory,
    FinFunctor,
    FinSet,
    bang_functor,
    build_category,
    build_functor,
    compose_functors,
    discrete_category,
    functors_over,
    identity_functor,
    identity_name,
    is_discrete_fibration,
    is_discrete_opfibration,
    pi0,
    pi0_partition,
    point_functor,
    pullback,
    terminal_category,
)

TruthSet = FinSet

TRUE = FinSet(("*",))


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class PartOver:
    """A finite category over X: a total category with its projection."""

    total: FinCategory
    proj: FinFunctor

    def __post_init__(self) -> None:
        if self.proj.dom != self.total:
            raise BaseMismatch("projection does not start at the total category")

    @property
    def base(self) -> FinCategory:
        return self.proj.cod


def part_over(proj: FinFunctor) -> PartOver:
    return PartOver(proj.dom, proj)


def id_part(base: FinCategory) -> PartOver:
    return PartOver(base, identity_functor(base))


def point_part(base: FinCategory, x: str) -> PartOver:
    """The singleton part at the object x."""
    return part_over(point_functor(base, x))


@dataclass(frozen=True)
class Presheaf:
    """Contravariant finite-set-valued data on a finite category.

    ``sets`` assigns each object its sorted value tuple; the action of a
    morphism u: x -> x' is a total function from the values at x' to the
    values at x, stored as a sorted graph.
    """

    base: FinCategory
    sets: tuple[tuple[str, tuple[str, ...]], ...]
    actions: tuple[tuple[str, tuple[tuple[str, str], ...]], ...]

    @cached_property
    def value(self) -> dict[str, tuple[str, ...]]:
        return dict(self.sets)

    @cached_property
    def act(self) -> dict[str, dict[str, str]]:
        return {name: dict(graph) for name, graph in self.actions}

    def at(self, x: str) -> tuple[str, ...]:
        try:
            return self.value[x]
        except KeyError:
            raise UnknownObject(f"no object {x!r} in the base") from None

    def total_size(self) -> int:
        return sum(len(v) for _, v in self.sets)

    def __repr__(self) -> str:
        inner = ";".join(f"{x}:{','.join(v)}" for x, v in self.sets)
        return f"Presheaf[{inner}]"


@dataclass(frozen=True, repr=False)
class Copresheaf(Presheaf):
    """Covariant dual: the action of u: x -> x' maps values at x to values at x'."""

    def __repr__(self) -> str:
        inner = ";".join(f"{x}:{','.join(v)}" for x, v in self.sets)
        return f"Copresheaf[{inner}]"


def _action_endpoints(base: FinCategory, u: str, *, contra: bool) -> tuple[str, str]:
    # returns (from-object, to-object) of the action function
    if contra:
        return base.tgt[u], base.src[u]
    return base.src[u], base.tgt[u]


def _build_set_valued(
    cls,
    base: FinCategory,
    sets: Mapping[str, Iterable[str]],
    actions: Mapping[str, Mapping[str, str]],
    *,
    contra: bool,
    check: bool,
):
    value = {x: tuple(sorted(sets.get(x, ()))) for x in base.objects}
    for x in sets:
        if x not in value:
            raise UnknownObject(f"value set on unknown object {x!r}")
    act: dict[str, dict[str, str]] = {}
    for u in base.mor_names:
        if base.is_identity(u):
            src_obj = base.src[u]
            act[u] = {m: m for m in value[src_obj]}
            continue
        graph = dict(actions.get(u, {}))
        act[u] = graph
    pre = cls(
        base,
        tuple(sorted(value.items())),
        tuple(sorted((u, tuple(sorted(g.items()))) for u, g in act.items())),
    )
    if check:
        _check_set_valued(pre, contra=contra)
    return pre


def _check_set_valued(m: Presheaf, *, contra: bool) -> None:
    base = m.base
    for u in base.mor_names:
        frm, to = _action_endpoints(base, u, contra=contra)
        graph = m.act[u]
        if set(graph) != set(m.value[frm]):
            raise InvalidPresheaf(f"action of {u!r} is not total on the values at {frm!r}")
        for v in graph.values():
            if v not in m.value[to]:
                raise InvalidPresheaf(f"action of {u!r} leaves the values at {to!r}")
    for x, i in base.id_of.items():
        if m.act[i] != {v: v for v in m.value[x]}:
            raise InvalidPresheaf(f"identity action at {x!r} is not the identity")
    for (g, f), gf in base.comp.items():
        if contra:
            composed = {v: m.act[f][m.act[g][v]] for v in m.act[g]}
        else:
            composed = {v: m.act[g][m.act[f][v]] for v in m.act[f]}
        if composed != m.act[gf]:
            raise InvalidPresheaf(f"functoriality fails on the pair ({g}, {f})")


def presheaf(
    base: FinCategory,
    sets: Mapping[str, Iterable[str]],
    actions: Mapping[str, Mapping[str, str]] = {},
    *,
    check: bool = True,
) -> Presheaf:
    return _build_set_valued(Presheaf, base, sets, actions, contra=True, check=check)


def copresheaf(
    base: FinCategory,
    sets: Mapping[str, Iterable[str]],
    actions: Mapping[str, Mapping[str, str]] = {},
    *,
    check: bool = True,
) -> Copresheaf:
    return _build_set_valued(Copresheaf, base, sets, actions, contra=False, check=check)


def top(base: FinCategory) -> Presheaf:
    actions = {
        u: {"*": "*"} for u in base.mor_names if not base.is_identity(u)
    }
    return presheaf(base, {x: ("*",) for x in base.objects}, actions, check=False)


def top_co(base: FinCategory) -> Copresheaf:
    actions = {
        u: {"*": "*"} for u in base.mor_names if not base.is_identity(u)
    }
    return copresheaf(base, {x: ("*",) for x in base.objects}, actions, check=False)


def empty_presheaf(base: FinCategory) -> Presheaf:
    return presheaf(base, {}, check=False)


def empty_copresheaf(base: FinCategory) -> Copresheaf:
    return copresheaf(base, {}, check=False)


def wedge(m: Presheaf, n: Presheaf) -> Presheaf:
    """Pointwise product of presheaves, with paired labels."""
    if m.base != n.base:
        raise BaseMismatch("presheaves live over different bases")
    base = m.base
    sets = {
        x: tuple(f"({a}|{b})" for a in m.at(x) for b in n.at(x)) for x in base.objects
    }
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        frm, _ = _action_endpoints(base, u, contra=True)
        actions[u] = {
            f"({a}|{b})": f"({m.act[u][a]}|{n.act[u][b]})"
            for a in m.at(frm)
            for b in n.at(frm)
        }
    return presheaf(base, sets, actions, check=False)


def wedge_co(m: Copresheaf, n: Copresheaf) -> Copresheaf:
    if m.base != n.base:
        raise BaseMismatch("copresheaves live over different bases")
    base = m.base
    sets = {
        x: tuple(f"({a}|{b})" for a in m.at(x) for b in n.at(x)) for x in base.objects
    }
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        frm, _ = _action_endpoints(base, u, contra=False)
        actions[u] = {
            f"({a}|{b})": f"({m.act[u][a]}|{n.act[u][b]})"
            for a in m.at(frm)
            for b in n.at(frm)
        }
    return copresheaf(base, sets, actions, check=False)


@dataclass(frozen=True)
class NaturalTransformation:
    source: Presheaf
    target: Presheaf
    components: tuple[tuple[str, tuple[tuple[str, str], ...]], ...]

    @cached_property
    def comp(self) -> dict[str, dict[str, str]]:
        return {x: dict(graph) for x, graph in self.components}

    def label(self) -> str:
        return "|".join(
            f"{x}:" + ",".join(f"{a}>{b}" for a, b in graph)
            for x, graph in self.components
        )

    def __repr__(self) -> str:
        return f"NatTrans({self.label()})"


def natural_transformation(
    source: Presheaf,
    target: Presheaf,
    components: Mapping[str, Mapping[str, str]],
    *,
    check: bool = True,
) -> NaturalTransformation:
    if source.base != target.base:
        raise BaseMismatch("source and target live over different bases")
    comp = {
        x: dict(components.get(x, {})) for x in source.base.objects
    }
    tr = NaturalTransformation(
        source, target, tuple(sorted((x, tuple(sorted(g.items()))) for x, g in comp.items()))
    )
    if check:
        _check_natural(tr)
    return tr


def _check_natural(tr: NaturalTransformation) -> None:
    base = tr.source.base
    contra = not isinstance(tr.source, Copresheaf)
    for x in base.objects:
        graph = tr.comp[x]
        if set(graph) != set(tr.source.at(x)):
            raise NotNatural(f"component at {x!r} is not total")
        for v in graph.values():
            if v not in tr.target.at(x):
                raise NotNatural(f"component at {x!r} leaves the target values")
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        frm, to = _action_endpoints(base, u, contra=contra)
        for v in tr.source.at(frm):
            if tr.comp[to][tr.source.act[u][v]] != tr.target.act[u][tr.comp[frm][v]]:
                raise NotNatural(f"naturality fails at {u!r} on {v!r}")


def compose_natural(
    second: NaturalTransformation, first: NaturalTransformation
) -> NaturalTransformation:
    if first.target != second.source:
        raise BaseMismatch("transformations are not composable")
    comps = {
        x: {a: second.comp[x][b] for a, b in graph.items()}
        for x, graph in first.comp.items()
    }
    return natural_transformation(first.source, second.target, comps, check=False)


def natural_transformations(
    source: Presheaf, target: Presheaf, budget: int = DEFAULT_BUDGET
) -> tuple[NaturalTransformation, ...]:
    """All natural transformations, in deterministic order."""
    if source.base != target.base:
        raise BaseMismatch("source and target live over different bases")
    base = source.base
    contra = not isinstance(source, Copresheaf)
    per_object = []
    size = 1
    for x in base.objects:
        dom_v, cod_v = source.at(x), target.at(x)
        if dom_v and not cod_v:
            return ()
        graphs = [
            dict(zip(dom_v, images))
            for images in itertools.product(cod_v, repeat=len(dom_v))
        ]
        per_object.append(graphs)
        size *= max(1, len(graphs))
        if size > budget:
            raise BudgetExceeded(f"natural transformation search: {size} candidates")
    found = []
    for combo in itertools.product(*per_object):
        comps = dict(zip(base.objects, combo))
        ok = True
        for u in base.mor_names:
            if base.is_identity(u):
                continue
            frm, to = _action_endpoints(base, u, contra=contra)
            for v in source.at(frm):
                if comps[to][source.act[u][v]] != target.act[u][comps[frm][v]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(natural_transformation(source, target, comps, check=False))
    return tuple(found)


# ---------------------------------------------------------------------------
# elements and its inverse


def elements(m: Presheaf) -> PartOver:
    """Category of elements: the discrete fibration presenting the presheaf."""
    base = m.base
    objs = [f"({x}|{v})" for x in base.objects for v in m.at(x)]
    morphisms = []
    mor_map = {}
    obj_map = {f"({x}|{v})": x for x in base.objects for v in m.at(x)}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        x, x2 = base.src[u], base.tgt[u]
        for v2 in m.at(x2):
            name = f"({u}|{v2})"
            morphisms.append((name, f"({x}|{m.act[u][v2]})", f"({x2}|{v2})"))
            mor_map[name] = u

    def lift_name(u: str, v_tgt: str) -> str:
        if base.is_identity(u):
            return identity_name(f"({base.src[u]}|{v_tgt})")
        return f"({u}|{v_tgt})"

    compose = []
    for u1 in base.mor_names:
        for u2 in base.mor_names:
            if base.src[u2] != base.tgt[u1]:
                continue
            if base.is_identity(u1) and base.is_identity(u2):
                continue
            u21 = base.compose(u2, u1)
            for v2 in m.at(base.tgt[u2]):
                compose.append(
                    (lift_name(u2, v2), lift_name(u1, m.act[u2][v2]), lift_name(u21, v2))
                )
    total = build_category(objs, morphisms, compose, check=False)
    for o in total.objects:
        mor_map[total.id_of[o]] = base.id_of[obj_map[o]]
    return part_over(build_functor(total, base, obj_map, mor_map, check=False))


def elements_co(n: Copresheaf) -> PartOver:
    """Dual category of elements: the discrete opfibration of a copresheaf."""
    base = n.base
    obj_map = {f"({x}|{v})": x for x in base.objects for v in n.at(x)}
    morphisms = []
    mor_map = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        x, x2 = base.src[u], base.tgt[u]
        for v in n.at(x):
            name = f"({u}|{v})"
            morphisms.append((name, f"({x}|{v})", f"({x2}|{n.act[u][v]})"))
            mor_map[name] = u

    def lift_name(u: str, v_src: str) -> str:
        if base.is_identity(u):
            return identity_name(f"({base.src[u]}|{v_src})")
        return f"({u}|{v_src})"

    compose = []
    for u1 in base.mor_names:
        for u2 in base.mor_names:
            if base.src[u2] != base.tgt[u1]:
                continue
            if base.is_identity(u1) and base.is_identity(u2):
                continue
            u21 = base.compose(u2, u1)
            for v in n.at(base.src[u1]):
                compose.append(
                    (lift_name(u2, n.act[u1][v]), lift_name(u1, v), lift_name(u21, v))
                )
    total = build_category(list(obj_map), morphisms, compose, check=False)
    for o in total.objects:
        mor_map[total.id_of[o]] = base.id_of[obj_map[o]]
    return part_over(build_functor(total, base, obj_map, mor_map, check=False))


def presheaf_of(p: PartOver) -> Presheaf:
    """Fibers and unique lifts of a discrete fibration, as a presheaf."""
    if not is_discrete_fibration(p.proj):
        raise NotADiscreteFibration("projection lacks unique target lifts")
    base, E, proj = p.base, p.total, p.proj
    sets = {x: [] for x in base.objects}
    for e in E.objects:
        sets[proj.ob[e]].append(e)
    lifts: dict[tuple[str, str], str] = {}
    for m in E.mor_names:
        lifts[(proj.mor[m], E.tgt[m])] = E.src[m]
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        actions[u] = {e: lifts[(u, e)] for e in sets[base.tgt[u]]}
    return presheaf(base, sets, actions, check=False)


def copresheaf_of(p: PartOver) -> Copresheaf:
    if not is_discrete_opfibration(p.proj):
        raise NotADiscreteFibration("projection lacks unique source lifts")
    base, E, proj = p.base, p.total, p.proj
    sets = {x: [] for x in base.objects}
    for e in E.objects:
        sets[proj.ob[e]].append(e)
    lifts: dict[tuple[str, str], str] = {}
    for m in E.mor_names:
        lifts[(proj.mor[m], E.src[m])] = E.tgt[m]
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        actions[u] = {e: lifts[(u, e)] for e in sets[base.src[u]]}
    return copresheaf(base, sets, actions, check=False)


# ---------------------------------------------------------------------------
# substitution and image for parts


def sigma(f: FinFunctor, p: PartOver) -> PartOver:
    """Image part: postcomposition of the projection."""
    if p.base != f.dom:
        raise BaseMismatch("part does not live over the domain")
    return part_over(compose_functors(f, p.proj))


def substitution(f: FinFunctor, q: PartOver) -> PartOver:
    """Strict pullback of the part along the functor."""
    if q.base != f.cod:
        raise BaseMismatch("part does not live over the codomain")
    _, proj1, _ = pullback(f, q.proj)
    return part_over(proj1)


def meets(p: PartOver, q: PartOver) -> TruthSet:
    """Components of the strict pullback of the two parts."""
    if p.base != q.base:
        raise BaseMismatch("parts live over different bases")
    total, _, _ = pullback(p.proj, q.proj)
    return pi0(total)


def restrict(f: FinFunctor, m: Presheaf) -> Presheaf:
    """Substitution of a presheaf along a functor (precomposition)."""
    if m.base != f.cod:
        raise BaseMismatch("presheaf does not live over the codomain")
    sets = {x: m.at(f.ob[x]) for x in f.dom.objects}
    actions = {
        u: dict(m.act[f.mor[u]])
        for u in f.dom.mor_names
        if not f.dom.is_identity(u)
    }
    return presheaf(f.dom, sets, actions, check=False)


def restrict_co(f: FinFunctor, n: Copresheaf) -> Copresheaf:
    if n.base != f.cod:
        raise BaseMismatch("copresheaf does not live over the codomain")
    sets = {x: n.at(f.ob[x]) for x in f.dom.objects}
    actions = {
        u: dict(n.act[f.mor[u]])
        for u in f.dom.mor_names
        if not f.dom.is_identity(u)
    }
    return copresheaf(f.dom, sets, actions, check=False)


# ---------------------------------------------------------------------------
# closure and interior


def closure(p: PartOver) -> Presheaf:
    """Left closure: at x, the components of the comma of x into the part."""
    base, E, proj = p.base, p.total, p.proj

    comp_label: dict[str, dict[tuple[str, str], str]] = {}
    for x in base.objects:
        nodes = [(e, w) for e in E.objects for w in base.hom(x, proj.ob[e])]
        parent = {node: node for node in nodes}

        def find(node):
            while parent[node] != node:
                parent[node] = parent[parent[node]]
                node = parent[node]
            return node

        for m in E.mor_names:
            e, e2 = E.src[m], E.tgt[m]
            for w in base.hom(x, proj.ob[e]):
                a, b = find((e, w)), find((e2, base.compose(proj.mor[m], w)))
                if a != b:
                    parent[b] = a
        roots = {node: find(node) for node in nodes}
        label_of_root = {}
        for root in set(roots.values()):
            label_of_root[root] = min(
                f"({e}|{w})" for (e, w), r in roots.items() if r == root
            )
        comp_label[x] = {node: label_of_root[roots[node]] for node in nodes}

    sets = {x: tuple(sorted(set(comp_label[x].values()))) for x in base.objects}
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        x, x2 = base.src[u], base.tgt[u]
        table = {}
        for (e, w), lab in comp_label[x2].items():
            table.setdefault(lab, comp_label[x][(e, base.compose(w, u))])
        actions[u] = table
    return presheaf(base, sets, actions, check=False)


def closure_co(p: PartOver) -> Copresheaf:
    """Right closure: at x, the components of the comma of the part into x."""
    base, E, proj = p.base, p.total, p.proj
    comp_label: dict[str, dict[tuple[str, str], str]] = {}
    for x in base.objects:
        nodes = [(e, w) for e in E.objects for w in base.hom(proj.ob[e], x)]
        parent = {node: node for node in nodes}

        def find(node):
            while parent[node] != node:
                parent[node] = parent[parent[node]]
                node = parent[node]
            return node

        for m in E.mor_names:
            e, e2 = E.src[m], E.tgt[m]
            for w in base.hom(proj.ob[e2], x):
                a, b = find((e2, w)), find((e, base.compose(w, proj.mor[m])))
                if a != b:
                    parent[b] = a
        roots = {node: find(node) for node in nodes}
        label_of_root = {}
        for root in set(roots.values()):
            label_of_root[root] = min(
                f"({e}|{w})" for (e, w), r in roots.items() if r == root
            )
        comp_label[x] = {node: label_of_root[roots[node]] for node in nodes}

    sets = {x: tuple(sorted(set(comp_label[x].values()))) for x in base.objects}
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        x, x2 = base.src[u], base.tgt[u]
        table = {}
        for (e, w), lab in comp_label[x].items():
            table.setdefault(lab, comp_label[x2][(e, base.compose(u, w))])
        actions[u] = table
    return copresheaf(base, sets, actions, check=False)


def slice_presheaf(base: FinCategory, x: str) -> Presheaf:
    """The representable at x, with precomposition action."""
    base.require_object(x)
    sets = {y: base.hom(y, x) for y in base.objects}
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        actions[u] = {w: base.compose(w, u) for w in sets[base.tgt[u]]}
    return presheaf(base, sets, actions, check=False)


def coslice_copresheaf(base: FinCategory, x: str) -> Copresheaf:
    base.require_object(x)
    sets = {y: base.hom(x, y) for y in base.objects}
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        actions[u] = {w: base.compose(u, w) for w in sets[base.src[u]]}
    return copresheaf(base, sets, actions, check=False)


def _functor_label(h: FinFunctor) -> str:
    objs = ",".join(f"{a}>{b}" for a, b in h.obj_map)
    mors = ",".join(
        f"{a}>{b}" for a, b in h.mor_map if not h.dom.is_identity(a)
    )
    return f"o:{objs};m:{mors}"


def part_maps(p: PartOver, q: PartOver, budget: int = DEFAULT_BUDGET) -> dict[str, FinFunctor]:
    """Morphisms of parts over the base, keyed by canonical label."""
    if p.base != q.base:
        raise BaseMismatch("parts live over different bases")
    return {_functor_label(h): h for h in functors_over(p.proj, q.proj, budget)}


def interior(p: PartOver, budget: int = DEFAULT_BUDGET) -> Presheaf:
    """Right adjoint to elements: at x, the maps over the base from the slice."""
    base = p.base
    slice_parts = {x: elements(slice_presheaf(base, x)) for x in base.objects}
    maps = {x: part_maps(slice_parts[x], p, budget) for x in base.objects}
    sets = {x: tuple(sorted(maps[x])) for x in base.objects}
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        x, x2 = base.src[u], base.tgt[u]
        # postcomposition with u sends the slice at x into the slice at x2
        sl_x, sl_x2 = slice_parts[x], slice_parts[x2]
        obj_map = {}
        mor_map = {}
        for y in base.objects:
            for w in base.hom(y, x):
                obj_map[f"({y}|{w})"] = f"({y}|{base.compose(u, w)})"
        for v in base.mor_names:
            if base.is_identity(v):
                continue
            for w in base.hom(base.tgt[v], x):
                mor_map[f"({v}|{w})"] = f"({v}|{base.compose(u, w)})"
        slide = build_functor(sl_x.total, sl_x2.total, obj_map, mor_map, check=False)
        actions[u] = {
            label: _functor_label(compose_functors(h, slide))
            for label, h in maps[x2].items()
        }
    return presheaf(base, sets, actions, check=False)


def interior_co(p: PartOver, budget: int = DEFAULT_BUDGET) -> Copresheaf:
    """Dual interior: at x, the maps over the base from the coslice."""
    base = p.base
    coslice_parts = {x: elements_co(coslice_copresheaf(base, x)) for x in base.objects}
    maps = {x: part_maps(coslice_parts[x], p, budget) for x in base.objects}
    sets = {x: tuple(sorted(maps[x])) for x in base.objects}
    actions = {}
    for u in base.mor_names:
        if base.is_identity(u):
            continue
        x, x2 = base.src[u], base.tgt[u]
        # precomposition with u sends the coslice at x2 into the coslice at x
        sl_x, sl_x2 = coslice_parts[x], coslice_parts[x2]
        obj_map = {}
        mor_map = {}
        for y in base.objects:
            for w in base.hom(x2, y):
                obj_map[f"({y}|{w})"] = f"({y}|{base.compose(w, u)})"
        for v in base.mor_names:
            if base.is_identity(v):
                continue
            for w in base.hom(x2, base.src[v]):
                mor_map[f"({v}|{w})"] = f"({v}|{base.compose(w, u)})"
        slide = build_functor(sl_x2.total, sl_x.total, obj_map, mor_map, check=False)
        actions[u] = {
            label: _functor_label(compose_functors(h, slide))
            for label, h in maps[x].items()
        }
    return copresheaf(base, sets, actions, check=False)


# ---------------------------------------------------------------------------
# Kan extensions


def lan(f: FinFunctor, m: Presheaf) -> Presheaf:
    """Left extension along f, computed as the closure of the pushed elements."""
    if m.base != f.dom:
        raise BaseMismatch("presheaf does not live over the domain")
    return closure(sigma(f, elements(m)))


def lan_co(f: FinFunctor, n: Copresheaf) -> Copresheaf:
    if n.base != f.dom:
        raise BaseMismatch("copresheaf does not live over the domain")
    return closure_co(sigma(f, elements_co(n)))


def ran(f: FinFunctor, m: Presheaf, budget: int = DEFAULT_BUDGET) -> Presheaf:
    """Right extension along f: at y, the transformations from the restricted slice."""
    if m.base != f.dom:
        raise BaseMismatch("presheaf does not live over the domain")
    Y = f.cod
    source = {y: restrict(f, slice_presheaf(Y, y)) for y in Y.objects}
    trs = {
        y: {tr.label(): tr for tr in natural_transformations(source[y], m, budget)}
        for y in Y.objects
    }
    sets = {y: tuple(sorted(trs[y])) for y in Y.objects}
    actions = {}
    for v in Y.mor_names:
        if Y.is_identity(v):
            continue
        y, y2 = Y.src[v], Y.tgt[v]
        post = {
            x: {w: Y.compose(v, w) for w in source[y].at(x)} for x in f.dom.objects
        }
        tau = natural_transformation(source[y], source[y2], post, check=False)
        actions[v] = {
            label: compose_natural(tr, tau).label() for label, tr in trs[y2].items()
        }
    return presheaf(Y, sets, actions, check=False)


def ran_co(f: FinFunctor, n: Copresheaf, budget: int = DEFAULT_BUDGET) -> Copresheaf:
    if n.base != f.dom:
        raise BaseMismatch("copresheaf does not live over the domain")
    Y = f.cod
    source = {y: restrict_co(f, coslice_copresheaf(Y, y)) for y in Y.objects}
    trs = {
        y: {tr.label(): tr for tr in natural_transformations(source[y], n, budget)}
        for y in Y.objects
    }
    sets = {y: tuple(sorted(trs[y])) for y in Y.objects}
    actions = {}
    for v in Y.mor_names:
        if Y.is_identity(v):
            continue
        y, y2 = Y.src[v], Y.tgt[v]
        pre = {
            x: {w: Y.compose(w, v) for w in source[y2].at(x)} for x in f.dom.objects
        }
        tau = natural_transformation(source[y2], source[y], pre, check=False)
        actions[v] = {
            label: compose_natural(tr, tau).label() for label, tr in trs[y].items()
        }
    return copresheaf(Y, sets, actions, check=False)


# ---------------------------------------------------------------------------
# truth-valued functors


def coend(p: PartOver) -> TruthSet:
    """Components of the total category (comprehension is the identity here)."""
    return pi0(p.total)


def end(p: PartOver, budget: int = DEFAULT_BUDGET) -> TruthSet:
    """Matching families of interior values, compatible with all slice maps."""
    return lim(interior(p, budget), budget)


def nat(l: Presheaf, m: Presheaf, budget: int = DEFAULT_BUDGET) -> TruthSet:
    return FinSet(tuple(tr.label() for tr in natural_transformations(l, m, budget)))


def nat_co(n: Copresheaf, o: Copresheaf, budget: int = DEFAULT_BUDGET) -> TruthSet:
    return FinSet(tuple(tr.label() for tr in natural_transformations(n, o, budget)))


def ten(n: Copresheaf, m: Presheaf) -> TruthSet:
    """Tensor of a copresheaf against a presheaf: meets of their elements."""
    if n.base != m.base:
        raise BaseMismatch("arguments live over different bases")
    return meets(elements_co(n), elements(m))


def lim(m: Presheaf, budget: int = DEFAULT_BUDGET) -> TruthSet:
    return nat(top(m.base), m, budget)


def colim(m: Presheaf) -> TruthSet:
    return pi0(elements(m).total)


def lim_co(n: Copresheaf, budget: int = DEFAULT_BUDGET) -> TruthSet:
    return nat_co(top_co(n.base), n, budget)


def colim_co(n: Copresheaf) -> TruthSet:
    return pi0(elements_co(n).total)


def ten_by_colimit(n: Copresheaf, m: Presheaf) -> TruthSet:
    """Tensor as a colimit over the elements of the copresheaf."""
    if n.base != m.base:
        raise BaseMismatch("arguments live over different bases")
    return colim(restrict(elements_co(n).proj, m))


def nat_by_limit(l: Presheaf, m: Presheaf, budget: int = DEFAULT_BUDGET) -> TruthSet:
    """Transformations as a limit over the elements of the source."""
    if l.base != m.base:
        raise BaseMismatch("arguments live over different bases")
    return lim(restrict(elements(l).proj, m), budget)


# ---------------------------------------------------------------------------
# components, discreteness, finality


def components(base: FinCategory) -> TruthSet:
    return pi0(base)


def discrete(v: TruthSet) -> FinCategory:
    return discrete_category(v.elements)


def constant_part(base: FinCategory, v: TruthSet) -> PartOver:
    """The substitution of a truth value along the map to the point."""
    _, proj1, _ = pullback(bang_functor(base), bang_functor(discrete(v)))
    return part_over(proj1)


def is_final(f: FinFunctor) -> bool:
    """Every comma from an object of the codomain into f is nonempty connected."""
    ext = lan(f, top(f.dom))
    return all(len(ext.at(y)) == 1 for y in f.cod.objects)


def is_initial(f: FinFunctor) -> bool:
    ext = lan_co(f, top_co(f.dom))
    return all(len(ext.at(y)) == 1 for y in f.cod.objects)


def is_left_dense(p: PartOver) -> bool:
    cl = closure(p)
    return all(len(cl.at(x)) == 1 for x in p.base.objects)


def is_right_dense(p: PartOver) -> bool:
    cl = closure_co(p)
    return all(len(cl.at(x)) == 1 for x in p.base.objects)


def has_terminal_object(base: FinCategory) -> str | None:
    """Least-named object to which every object has exactly one morphism."""
    for x in base.objects:
        if all(len(base.hom(y, x)) == 1 for y in base.objects):
            return x
    return None


def has_initial_object(base: FinCategory) -> str | None:
    for x in base.objects:
        if all(len(base.hom(x, y)) == 1 for y in base.objects):
            return x
    return None


# ---------------------------------------------------------------------------
# sup / inf reflections


def sup(p: PartOver, budget: int = DEFAULT_BUDGET) -> str | None:
    """Reflection of the closure of the part into representables.

    Returns the least-named object x admitting a unit whose pastings with
    morphisms out of x biject with the transformations into every slice
    (reflections are unique only up to isomorphism).
    """
    base = p.base
    m = closure(p)
    slices = {y: slice_presheaf(base, y) for y in base.objects}
    into = {y: natural_transformations(m, slices[y], budget) for y in base.objects}
    for x in base.objects:
        for unit in into[x]:
            if _is_reflection_unit(base, m, slices, into, x, unit):
                return x
    return None


def _is_reflection_unit(base, m, slices, into, x, unit) -> bool:
    for y in base.objects:
        seen = set()
        for g in base.hom(x, y):
            post = {
                z: {w: base.compose(g, w) for w in slices[x].at(z)}
                for z in base.objects
            }
            tau = natural_transformation(slices[x], slices[y], post, check=False)
            seen.add(compose_natural(tau, unit).label())
        if len(seen) != len(base.hom(x, y)) or seen != {t.label() for t in into[y]}:
            return False
    return True


def inf(p: PartOver, budget: int = DEFAULT_BUDGET) -> str | None:
    """Dual reflection of the right closure into corepresentables."""
    base = p.base
    n = closure_co(p)
    coslices = {y: coslice_copresheaf(base, y) for y in base.objects}
    into = {y: natural_transformations(n, coslices[y], budget) for y in base.objects}
    for x in base.objects:
        for unit in into[x]:
            ok = True
            for y in base.objects:
                seen = set()
                for g in base.hom(y, x):
                    pre = {
                        z: {w: base.compose(w, g) for w in coslices[x].at(z)}
                        for z in base.objects
                    }
                    tau = natural_transformation(coslices[x], coslices[y], pre, check=False)
                    seen.add(compose_natural(tau, unit).label())
                if len(seen) != len(base.hom(y, x)) or seen != {t.label() for t in into[y]}:
                    ok = False
                    break
            if ok:
                return x
    return None


def sup_of_functor(f: FinFunctor, budget: int = DEFAULT_BUDGET) -> str | None:
    """Sup of a functor into X: the sup of the part it presents (its colimit)."""
    return sup(part_over(f), budget)


# ---------------------------------------------------------------------------
# isomorphism checks


def presheaves_isomorphic(m: Presheaf, n: Presheaf, budget: int = DEFAULT_BUDGET) -> bool:
    """Search for a natural family of bijections."""
    if m.base != n.base:
        return False
    if type(m) is not type(n):
        return False
    base = m.base
    if any(len(m.at(x)) != len(n.at(x)) for x in base.objects):
        return False
    size = 1
    for x in base.objects:
        size *= max(1, _factorial(len(m.at(x))))
    if size > budget:
        raise BudgetExceeded(f"presheaf isomorphism search: {size} candidates")
    contra = not isinstance(m, Copresheaf)
    per_object = [
        [dict(zip(m.at(x), perm)) for perm in itertools.permutations(n.at(x))]
        for x in base.objects
    ]
    for combo in itertools.product(*per_object):
        comps = dict(zip(base.objects, combo))
        ok = True
        for u in base.mor_names:
            if base.is_identity(u):
                continue
            frm, to = _action_endpoints(base, u, contra=contra)
            for v in m.at(frm):
                if comps[to][m.act[u][v]] != n.act[u][comps[frm][v]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def parts_isomorphic(p: PartOver, q: PartOver, budget: int = DEFAULT_BUDGET) -> bool:
    """Isomorphism over the base: a bijective map of parts."""
    if p.base != q.base:
        return False
    if len(p.total.objects) != len(q.total.objects) or len(p.total.morphisms) != len(
        q.total.morphisms
    ):
        return False
    return any(h.is_bijective() for h in functors_over(p.proj, q.proj, budget))


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# enumeration of set-valued parts (shared by the law suites and tests)


@lru_cache(maxsize=None)
def enumerate_presheaves(
    base: FinCategory, max_fiber: int = 2, budget: int = DEFAULT_BUDGET
) -> tuple[Presheaf, ...]:
    return tuple(
        _enumerate_set_valued(base, max_fiber, budget, contra=True, cls=Presheaf)
    )


@lru_cache(maxsize=None)
def enumerate_copresheaves(
    base: FinCategory, max_fiber: int = 2, budget: int = DEFAULT_BUDGET
) -> tuple[Copresheaf, ...]:
    return tuple(
        _enumerate_set_valued(base, max_fiber, budget, contra=False, cls=Copresheaf)
    )


def _enumerate_set_valued(base, max_fiber, budget, *, contra, cls):
    non_id = [name for name, _, _ in base.non_identity_morphisms()]
    found = []
    total = 0
    for sizes in itertools.product(range(max_fiber + 1), repeat=len(base.objects)):
        value = {
            x: tuple(str(i) for i in range(k)) for x, k in zip(base.objects, sizes)
        }
        options = []
        feasible = True
        block = 1
        for u in non_id:
            frm, to = _action_endpoints(base, u, contra=contra)
            dom_v, cod_v = value[frm], value[to]
            if dom_v and not cod_v:
                feasible = False
                break
            graphs = [
                dict(zip(dom_v, images))
                for images in itertools.product(cod_v, repeat=len(dom_v))
            ]
            options.append(graphs or [{}])
            block *= max(1, len(graphs))
        if not feasible:
            continue
        total += block
        if total > budget:
            raise BudgetExceeded(f"set-valued enumeration: {total} candidates")
        for combo in itertools.product(*options):
            actions = dict(zip(non_id, combo))
            candidate = _build_set_valued(
                cls, base, value, actions, contra=contra, check=False
            )
            try:
                _check_set_valued(candidate, contra=contra)
            except InvalidPresheaf:
                continue
            found.append(candidate)
    return found


def is_biclosed(m: Presheaf) -> bool:
    """A presheaf whose elements category is also an opfibration."""
    return is_discrete_opfibration(elements(m).proj)


def presheaf_on_point(v: TruthSet) -> Presheaf:
    return presheaf(terminal_category(), {"*": v.elements}, check=False)


def copresheaf_on_point(v: TruthSet) -> Copresheaf:
    return copresheaf(terminal_category(), {"*": v.elements}, check=False)


# names of the registered laws this doctrine participates in (the registry
# meta-test cross-checks this list against the laws module)
LAW_NAMES = (
    "temp3", "td2", "td3", "td4", "compr0", "compr5",
    "sup_point", "sup_final",
    "tennat", "intro_ten",
    "wadj2", "wadj5", "wadj6", "wadj7", "wadj8",
    "dmadj", "sqadj", "coh",
)
