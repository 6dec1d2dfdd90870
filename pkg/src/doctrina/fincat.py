"""Finite categories, finite posets, functors, and the constructions on them.

Everything here is a plain combinatorial object: a category is a finite
composition table, a poset is a finite relation.  All values are immutable
after construction and all operations are pure functions, so results can be
shared freely.  Brute-force searches (functor enumeration, isomorphism
search) are guarded by an explicit candidate budget.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadIdentity,
    BaseMismatch,
    BudgetExceeded,
    DuplicateName,
    IllTypedComposite,
    InvalidFunctor,
    MissingComposite,
    NonAssociative,
    NotAPoset,
    UnknownObject,
)

DEFAULT_BUDGET = 10**6

Mor = tuple[str, str, str]  # (name, source, target)


def identity_name(obj: str) -> str:
    return f"id_{obj}"


def _charge(budget: int, candidates: int, what: str) -> None:
    if candidates > budget:
        raise BudgetExceeded(f"{what}: {candidates} candidates exceed budget {budget}")


# ---------------------------------------------------------------------------
# finite sets


@dataclass(frozen=True)
class FinSet:
    """A finite set with canonically sorted, unique labels."""

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise DuplicateName(f"duplicate labels in finite set: {self.elements}")
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, label: str) -> bool:
        return label in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


# ---------------------------------------------------------------------------
# finite categories


@dataclass(frozen=True)
class FinCategory:
    """A finite category as an explicit, total composition table.

    ``morphisms`` holds every morphism, identities included, as
    ``(name, source, target)``; ``identity`` assigns each object its identity
    morphism; ``composition`` maps every composable pair ``(g, f)`` with
    ``src(g) = tgt(f)`` to the name of ``g after f``.  Names are unique and
    the stored tuples are canonically sorted, so equal categories compare
    equal structurally.
    """

    objects: tuple[str, ...]
    morphisms: tuple[Mor, ...]
    identity: tuple[tuple[str, str], ...]
    composition: tuple[tuple[str, str, str], ...]

    @cached_property
    def src(self) -> dict[str, str]:
        return {name: s for name, s, _ in self.morphisms}

    @cached_property
    def tgt(self) -> dict[str, str]:
        return {name: t for name, _, t in self.morphisms}

    @cached_property
    def id_of(self) -> dict[str, str]:
        return dict(self.identity)

    @cached_property
    def identity_names(self) -> frozenset[str]:
        return frozenset(name for _, name in self.identity)

    @cached_property
    def comp(self) -> dict[tuple[str, str], str]:
        return {(g, f): gf for g, f, gf in self.composition}

    @cached_property
    def mor_names(self) -> tuple[str, ...]:
        return tuple(name for name, _, _ in self.morphisms)

    @cached_property
    def _hom(self) -> dict[tuple[str, str], tuple[str, ...]]:
        table: dict[tuple[str, str], list[str]] = {
            (x, y): [] for x in self.objects for y in self.objects
        }
        for name, s, t in self.morphisms:
            table[(s, t)].append(name)
        return {key: tuple(sorted(names)) for key, names in table.items()}

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        self.require_object(x)
        self.require_object(y)
        return self._hom[(x, y)]

    def compose(self, g: str, f: str) -> str:
        """Composite of ``f`` followed by ``g``."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise MissingComposite(f"no composite for pair ({g}, {f})") from None

    def is_identity(self, name: str) -> bool:
        return name in self.identity_names

    def require_object(self, x: str) -> None:
        if x not in self.src and x not in set(self.objects):
            raise UnknownObject(f"no object named {x!r}")

    def non_identity_morphisms(self) -> tuple[Mor, ...]:
        return tuple(m for m in self.morphisms if m[0] not in self.identity_names)

    def __repr__(self) -> str:  # keep test failures readable
        return f"FinCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


def build_category(
    objects: Iterable[str],
    morphisms: Iterable[Sequence[str]],
    compose: Mapping[tuple[str, str], str] | Iterable[Sequence[str]] = (),
    identity: Mapping[str, str] | None = None,
    *,
    check: bool = True,
) -> FinCategory:
    """Assemble a category from a raw table.

    Identities absent from ``morphisms`` are added under the name
    ``id_<object>`` and identity composites are filled in automatically;
    every other composable pair must be listed in ``compose``.
    """
    objs = tuple(sorted(objects))
    if len(set(objs)) != len(objs):
        raise DuplicateName(f"duplicate object names: {objs}")

    mors: dict[str, tuple[str, str]] = {}
    for entry in morphisms:
        name, s, t = entry[0], entry[1], entry[2]
        if name in mors:
            raise DuplicateName(f"duplicate morphism name: {name}")
        if s not in objs or t not in objs:
            raise UnknownObject(f"morphism {name}: unknown endpoint {s!r} or {t!r}")
        mors[name] = (s, t)

    ids = dict(identity) if identity is not None else {}
    for x in objs:
        name = ids.get(x, identity_name(x))
        ids[x] = name
        if name in mors:
            if mors[name] != (x, x):
                raise BadIdentity(f"identity {name} of {x} has endpoints {mors[name]}")
        else:
            mors[name] = (x, x)
    if check and len(set(ids.values())) != len(ids):
        raise BadIdentity(f"identity assignment not injective: {ids}")

    table: dict[tuple[str, str], str] = {}
    pairs = compose.items() if isinstance(compose, Mapping) else ((e[0], e[1], e[2]) for e in compose)
    for entry in pairs:
        if isinstance(compose, Mapping):
            (g, f), gf = entry  # type: ignore[misc]
        else:
            g, f, gf = entry  # type: ignore[misc]
        for name in (g, f, gf):
            if name not in mors:
                raise UnknownObject(f"compose entry mentions unknown morphism {name!r}")
        table[(g, f)] = gf

    # identity composites are implied and must not contradict neutrality
    id_names = set(ids.values())
    for f, (s, t) in mors.items():
        for g, f2, expected in (
            (ids[t], f, f),
            (f, ids[s], f),
        ):
            listed = table.get((g, f2))
            if listed is not None and listed != expected:
                raise BadIdentity(f"identity not neutral: ({g}, {f2}) -> {listed}")
            table[(g, f2)] = expected

    mor_tuple = tuple(sorted((name, s, t) for name, (s, t) in mors.items()))
    cat = FinCategory(
        objects=objs,
        morphisms=mor_tuple,
        identity=tuple(sorted(ids.items())),
        composition=tuple(sorted((g, f, gf) for (g, f), gf in table.items())),
    )
    if check:
        _check_category(cat)
    return cat


def _check_category(cat: FinCategory) -> None:
    src, tgt = cat.src, cat.tgt
    comp = cat.comp
    for (g, f), gf in comp.items():
        if src[g] != tgt[f]:
            raise IllTypedComposite(f"pair ({g}, {f}) is not composable")
        if src[gf] != src[f] or tgt[gf] != tgt[g]:
            raise IllTypedComposite(
                f"composite ({g}, {f}) -> {gf} has endpoints "
                f"({src[gf]}, {tgt[gf]}), expected ({src[f]}, {tgt[g]})"
            )
    names = cat.mor_names
    for f in names:
        for g in names:
            if src[g] == tgt[f] and (g, f) not in comp:
                raise MissingComposite(f"no composite for pair ({g}, {f})")
    for x, i in cat.id_of.items():
        if src.get(i) != x or tgt.get(i) != x:
            raise BadIdentity(f"identity of {x} is {i}: {src.get(i)} -> {tgt.get(i)}")
    for f in names:
        if comp[(cat.id_of[tgt[f]], f)] != f or comp[(f, cat.id_of[src[f]])] != f:
            raise BadIdentity(f"identity not neutral on {f}")
    for f in names:
        for g in names:
            if src[g] != tgt[f]:
                continue
            for h in names:
                if src[h] != tgt[g]:
                    continue
                if comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)]:
                    raise NonAssociative(f"triple ({h}, {g}, {f}) is not associative")


def validate_category(doc: Mapping) -> FinCategory:
    """Validate a raw category description (the JSON document shape)."""
    morphisms = [(m["name"], m["src"], m["tgt"]) for m in doc.get("morphisms", ())]
    return build_category(
        doc.get("objects", ()),
        morphisms,
        [tuple(entry) for entry in doc.get("compose", ())],
        doc.get("identity"),
        check=True,
    )


# ---------------------------------------------------------------------------
# functors


@dataclass(frozen=True)
class FinFunctor:
    dom: FinCategory
    cod: FinCategory
    obj_map: tuple[tuple[str, str], ...]
    mor_map: tuple[tuple[str, str], ...]

    @cached_property
    def ob(self) -> dict[str, str]:
        return dict(self.obj_map)

    @cached_property
    def mor(self) -> dict[str, str]:
        return dict(self.mor_map)

    def on_obj(self, x: str) -> str:
        try:
            return self.ob[x]
        except KeyError:
            raise UnknownObject(f"functor undefined on object {x!r}") from None

    def on_mor(self, m: str) -> str:
        try:
            return self.mor[m]
        except KeyError:
            raise UnknownObject(f"functor undefined on morphism {m!r}") from None

    def is_bijective(self) -> bool:
        return (
            len(set(self.ob.values())) == len(self.cod.objects) == len(self.ob)
            and len(set(self.mor.values())) == len(self.cod.mor_names) == len(self.mor)
        )

    def __repr__(self) -> str:
        return f"FinFunctor({dict(self.obj_map)!r}, {dict(self.mor_map)!r})"


def build_functor(
    dom: FinCategory,
    cod: FinCategory,
    obj_map: Mapping[str, str],
    mor_map: Mapping[str, str] | None = None,
    *,
    check: bool = True,
) -> FinFunctor:
    """Assemble a functor; identity images are filled in from the object map."""
    ob = dict(obj_map)
    mor = dict(mor_map) if mor_map else {}
    for x in dom.objects:
        if x not in ob:
            raise InvalidFunctor(f"object {x!r} has no image")
        if ob[x] not in set(cod.objects):
            raise UnknownObject(f"object image {ob[x]!r} not in codomain")
    for x, i in dom.id_of.items():
        expected = cod.id_of[ob[x]]
        if mor.get(i, expected) != expected:
            raise InvalidFunctor(f"identity {i} must map to {expected}, got {mor[i]}")
        mor[i] = expected
    fun = FinFunctor(dom, cod, tuple(sorted(ob.items())), tuple(sorted(mor.items())))
    if check:
        _check_functor(fun)
    return fun


def _check_functor(fun: FinFunctor) -> None:
    dom, cod = fun.dom, fun.cod
    for name in dom.mor_names:
        if name not in fun.mor:
            raise InvalidFunctor(f"morphism {name!r} has no image")
        image = fun.mor[name]
        if image not in cod.src:
            raise UnknownObject(f"morphism image {image!r} not in codomain")
        if cod.src[image] != fun.ob[dom.src[name]] or cod.tgt[image] != fun.ob[dom.tgt[name]]:
            raise InvalidFunctor(f"{name!r} image {image!r} breaks source/target")
    for (g, f), gf in dom.comp.items():
        if cod.compose(fun.mor[g], fun.mor[f]) != fun.mor[gf]:
            raise InvalidFunctor(f"composition not preserved on ({g}, {f})")


def identity_functor(cat: FinCategory) -> FinFunctor:
    return build_functor(
        cat, cat, {x: x for x in cat.objects}, {m: m for m in cat.mor_names}, check=False
    )


def compose_functors(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    if f.cod != g.dom:
        raise BaseMismatch("functors are not composable")
    return build_functor(
        f.dom,
        g.cod,
        {x: g.ob[y] for x, y in f.ob.items()},
        {m: g.mor[n] for m, n in f.mor.items()},
        check=False,
    )


def terminal_category() -> FinCategory:
    return build_category(["*"], [], [], check=False)


def discrete_category(labels: Iterable[str]) -> FinCategory:
    return build_category(list(labels), [], [], check=False)


def point_functor(cat: FinCategory, x: str) -> FinFunctor:
    """The functor from the terminal category picking out ``x``."""
    cat.require_object(x)
    return build_functor(terminal_category(), cat, {"*": x}, check=False)


def bang_functor(cat: FinCategory) -> FinFunctor:
    """The unique functor to the terminal category."""
    one = terminal_category()
    return build_functor(
        cat, one, {x: "*" for x in cat.objects}, {m: "id_*" for m in cat.mor_names}, check=False
    )


# ---------------------------------------------------------------------------
# basic constructions


def poset_as_category(poset: "FinPoset") -> FinCategory:
    """The thin category with one morphism x -> y exactly when x <= y."""
    morphisms = []
    compose = []
    name = {}
    for x, y in sorted(poset.leq):
        name[(x, y)] = identity_name(x) if x == y else f"le({x},{y})"
        if x != y:
            morphisms.append((name[(x, y)], x, y))
    pairs = dict(name)
    for (x, y), f in pairs.items():
        for (y2, z), g in pairs.items():
            if y2 != y:
                continue
            if x != y and y != z:
                compose.append((g, f, pairs[(x, z)]))
    return build_category(poset.elements, morphisms, compose, check=False)


def pi0_partition(cat: FinCategory) -> dict[str, str]:
    """Map each object to its connected-component label (least member name)."""
    parent: dict[str, str] = {x: x for x in cat.objects}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for name, s, t in cat.morphisms:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rt] = rs
    roots = {x: find(x) for x in cat.objects}
    label = {}
    for root in set(roots.values()):
        label[root] = min(x for x in cat.objects if roots[x] == root)
    return {x: label[roots[x]] for x in cat.objects}


def pi0(cat: FinCategory) -> FinSet:
    """Connected components of the category, labeled by least object name."""
    return FinSet(tuple(sorted(set(pi0_partition(cat).values()))))


def comma(f: FinFunctor, g: FinFunctor) -> tuple[FinCategory, FinFunctor, FinFunctor]:
    """The comma category (f / g) of two functors with common codomain.

    Objects are triples (a, b, w: f a -> g b); morphisms are pairs (p, q)
    making the evident square commute.  Returns the category together with
    the projections to dom(f) and dom(g).
    """
    if f.cod != g.cod:
        raise BaseMismatch("comma requires functors with a common codomain")
    base = f.cod
    A, B = f.dom, g.dom
    objs: dict[str, tuple[str, str, str]] = {}
    for a in A.objects:
        for b in B.objects:
            for w in base.hom(f.ob[a], g.ob[b]):
                objs[f"({a}|{b}|{w})"] = (a, b, w)

    def arrow_name(p: str, q: str, s: str, t: str) -> str:
        if s == t and A.is_identity(p) and B.is_identity(q):
            return identity_name(s)
        return f"[{p}|{q}]{s}>{t}"

    morphisms = []
    data: dict[str, tuple[str, str, str, str]] = {}  # name -> (src, tgt, p, q)
    for o1, (a1, b1, w1) in objs.items():
        for o2, (a2, b2, w2) in objs.items():
            for p in A.hom(a1, a2):
                for q in B.hom(b1, b2):
                    if base.compose(g.mor[q], w1) != base.compose(w2, f.mor[p]):
                        continue
                    name = arrow_name(p, q, o1, o2)
                    data[name] = (o1, o2, p, q)
                    if not (o1 == o2 and A.is_identity(p) and B.is_identity(q)):
                        morphisms.append((name, o1, o2))

    compose = []
    by_src: dict[str, list[str]] = {}
    for name, (s, t, _, _) in data.items():
        by_src.setdefault(s, []).append(name)
    for m1, (s1, t1, p1, q1) in data.items():
        for m2 in by_src.get(t1, ()):
            _, t2, p2, q2 = data[m2]
            p, q = A.compose(p2, p1), B.compose(q2, q1)
            compose.append((m2, m1, arrow_name(p, q, s1, t2)))
    cat = build_category(list(objs), morphisms, compose, check=False)
    proj_a = build_functor(
        cat,
        A,
        {o: objs[o][0] for o in objs},
        {name: data[name][2] for name in data},
        check=False,
    )
    proj_b = build_functor(
        cat,
        B,
        {o: objs[o][1] for o in objs},
        {name: data[name][3] for name in data},
        check=False,
    )
    return cat, proj_a, proj_b


def pullback(f: FinFunctor, g: FinFunctor) -> tuple[FinCategory, FinFunctor, FinFunctor]:
    """Strict pullback of two functors with common codomain, with projections."""
    if f.cod != g.cod:
        from .errors import BaseMismatch

        raise BaseMismatch("pullback requires functors with a common codomain")
    A, B = f.dom, g.dom
    objs = {
        f"({a}|{b})": (a, b)
        for a in A.objects
        for b in B.objects
        if f.ob[a] == g.ob[b]
    }
    morphisms = []
    data: dict[str, tuple[str, str]] = {}
    for m in A.mor_names:
        for n in B.mor_names:
            if f.mor[m] != g.mor[n]:
                continue
            s = f"({A.src[m]}|{B.src[n]})"
            t = f"({A.tgt[m]}|{B.tgt[n]})"
            if s not in objs or t not in objs:
                continue
            if A.is_identity(m) and B.is_identity(n):
                data[identity_name(s)] = (m, n)
                continue
            name = f"({m}|{n})"
            morphisms.append((name, s, t))
            data[name] = (m, n)

    def pair_name(m: str, n: str, src_obj: str) -> str:
        if A.is_identity(m) and B.is_identity(n):
            return identity_name(src_obj)
        return f"({m}|{n})"

    compose = []
    for name1, (m1, n1) in data.items():
        for name2, (m2, n2) in data.items():
            if A.src[m2] != A.tgt[m1] or B.src[n2] != B.tgt[n1]:
                continue
            m, n = A.compose(m2, m1), B.compose(n2, n1)
            compose.append((name2, name1, pair_name(m, n, f"({A.src[m1]}|{B.src[n1]})")))
    cat = build_category(list(objs), morphisms, compose, check=False)
    proj_a = build_functor(
        cat, A, {o: ab[0] for o, ab in objs.items()},
        {name: mn[0] for name, mn in data.items()}, check=False,
    )
    proj_b = build_functor(
        cat, B, {o: ab[1] for o, ab in objs.items()},
        {name: mn[1] for name, mn in data.items()}, check=False,
    )
    return cat, proj_a, proj_b


def product_category(A: FinCategory, B: FinCategory) -> tuple[FinCategory, FinFunctor, FinFunctor]:
    """Binary product of categories (pullback over the terminal category)."""
    return pullback(bang_functor(A), bang_functor(B))


def is_discrete_fibration(p: FinFunctor) -> bool:
    """Unique lifts of codomain morphisms: for e in E and w: x -> p(e),
    exactly one morphism of E with target e maps to w."""
    E, X = p.dom, p.cod
    into: dict[str, list[str]] = {e: [] for e in E.objects}
    for m in E.mor_names:
        into[E.tgt[m]].append(m)
    for e in E.objects:
        images = [p.mor[m] for m in into[e]]
        wanted = [w for w in X.mor_names if X.tgt[w] == p.ob[e]]
        for w in wanted:
            if images.count(w) != 1:
                return False
    return True


def is_discrete_opfibration(p: FinFunctor) -> bool:
    """Dual: unique lifts with a given source."""
    E, X = p.dom, p.cod
    outof: dict[str, list[str]] = {e: [] for e in E.objects}
    for m in E.mor_names:
        outof[E.src[m]].append(m)
    for e in E.objects:
        images = [p.mor[m] for m in outof[e]]
        wanted = [w for w in X.mor_names if X.src[w] == p.ob[e]]
        for w in wanted:
            if images.count(w) != 1:
                return False
    return True


def enumerate_functors(
    A: FinCategory, B: FinCategory, budget: int = DEFAULT_BUDGET
) -> list[FinFunctor]:
    """All functors A -> B in a deterministic order, by guarded brute force."""
    non_id = [name for name, _, _ in A.non_identity_morphisms()]
    if not A.objects:
        return [build_functor(A, B, {}, {}, check=False)]
    total = 0
    found = []
    obj_choices = list(itertools.product(B.objects, repeat=len(A.objects)))
    for assignment in obj_choices:
        ob = dict(zip(A.objects, assignment))
        options = []
        feasible = True
        size = 1
        for m in non_id:
            opts = B.hom(ob[A.src[m]], ob[A.tgt[m]])
            if not opts:
                feasible = False
                break
            options.append(opts)
            size *= len(opts)
        if not feasible:
            continue
        total += size
        _charge(budget, total, f"enumerate_functors({len(A.objects)} objects)")
        for images in itertools.product(*options):
            mor = dict(zip(non_id, images))
            for x in A.objects:
                mor[A.id_of[x]] = B.id_of[ob[x]]
            ok = True
            for (g, f), gf in A.comp.items():
                if B.comp[(mor[g], mor[f])] != mor[gf]:
                    ok = False
                    break
            if ok:
                found.append(build_functor(A, B, ob, mor, check=False))
    return found


def functors_over(
    p: FinFunctor, q: FinFunctor, budget: int = DEFAULT_BUDGET
) -> list[FinFunctor]:
    """All functors h: dom(p) -> dom(q) with q . h = p (morphisms over the base)."""
    if p.cod != q.cod:
        from .errors import BaseMismatch

        raise BaseMismatch("functors_over requires a common base")
    E, F = p.dom, q.dom
    fibers: dict[str, list[str]] = {x: [] for x in q.cod.objects}
    for e in F.objects:
        fibers[q.ob[e]].append(e)
    mor_fibers: dict[str, list[str]] = {w: [] for w in q.cod.mor_names}
    for m in F.mor_names:
        mor_fibers[q.mor[m]].append(m)

    non_id = [name for name, _, _ in E.non_identity_morphisms()]
    obj_options = [fibers[p.ob[e]] for e in E.objects]
    size = 1
    for opts in obj_options:
        if not opts:
            return []
        size *= len(opts)
    _charge(budget, size, "functors_over object assignments")

    found = []
    total = 0
    for assignment in itertools.product(*obj_options):
        ob = dict(zip(E.objects, assignment))
        options = []
        feasible = True
        block = 1
        for m in non_id:
            opts = [
                n
                for n in mor_fibers[p.mor[m]]
                if F.src[n] == ob[E.src[m]] and F.tgt[n] == ob[E.tgt[m]]
            ]
            if not opts:
                feasible = False
                break
            options.append(sorted(opts))
            block *= len(opts)
        if not feasible:
            continue
        total += block
        _charge(budget, total, "functors_over morphism assignments")
        for images in itertools.product(*options):
            mor = dict(zip(non_id, images))
            for x in E.objects:
                mor[E.id_of[x]] = F.id_of[ob[x]]
            ok = True
            for (g, f), gf in E.comp.items():
                if F.comp[(mor[g], mor[f])] != mor[gf]:
                    ok = False
                    break
            if ok:
                found.append(build_functor(E, F, ob, mor, check=False))
    return found


def categories_isomorphic(A: FinCategory, B: FinCategory, budget: int = DEFAULT_BUDGET) -> bool:
    """Exhaustive isomorphism search, feasible at the enforced size bounds."""
    if len(A.objects) != len(B.objects) or len(A.morphisms) != len(B.morphisms):
        return False
    hom_profile = lambda C: sorted(  # noqa: E731
        len(C._hom[(x, y)]) for x in C.objects for y in C.objects
    )
    if hom_profile(A) != hom_profile(B):
        return False
    return any(f.is_bijective() for f in enumerate_functors(A, B, budget))


# ---------------------------------------------------------------------------
# finite posets


@dataclass(frozen=True)
class FinPoset:
    """A finite poset: elements plus the full order relation as a set of pairs."""

    elements: tuple[str, ...]
    leq: frozenset[tuple[str, str]]

    @cached_property
    def down(self) -> dict[str, frozenset[str]]:
        return {
            x: frozenset(y for y in self.elements if (y, x) in self.leq)
            for x in self.elements
        }

    @cached_property
    def up(self) -> dict[str, frozenset[str]]:
        return {
            x: frozenset(y for y in self.elements if (x, y) in self.leq)
            for x in self.elements
        }

    def le(self, x: str, y: str) -> bool:
        return (x, y) in self.leq

    @property
    def universe(self) -> frozenset[str]:
        return frozenset(self.elements)

    def __repr__(self) -> str:
        strict = sorted((x, y) for x, y in self.leq if x != y)
        rel = ",".join(f"{x}<{y}" for x, y in strict)
        return f"poset[{','.join(self.elements)};{rel}]"


def build_poset(
    elements: Iterable[str],
    leq: Iterable[Sequence[str]] = (),
    *,
    close: bool = False,
    check: bool = True,
) -> FinPoset:
    """Assemble a poset.  The relation must be listed in full (reflexive and
    transitive) unless ``close=True``, which applies the closure first."""
    elems = tuple(sorted(elements))
    if len(set(elems)) != len(elems):
        raise DuplicateName(f"duplicate elements: {elems}")
    rel = {(pair[0], pair[1]) for pair in leq}
    for x, y in rel:
        if x not in elems or y not in elems:
            raise UnknownObject(f"relation mentions unknown element: ({x}, {y})")
    if close:
        rel |= {(x, x) for x in elems}
        changed = True
        while changed:
            changed = False
            for x, y in list(rel):
                for y2, z in list(rel):
                    if y2 == y and (x, z) not in rel:
                        rel.add((x, z))
                        changed = True
    if check:
        for x in elems:
            if (x, x) not in rel:
                raise NotAPoset(f"relation not reflexive at {x}")
        for x, y in rel:
            if (y, x) in rel and x != y:
                raise NotAPoset(f"antisymmetry fails on ({x}, {y})")
            for y2, z in rel:
                if y2 == y and (x, z) not in rel:
                    raise NotAPoset(f"transitivity fails on ({x}, {y}, {z})")
    return FinPoset(elems, frozenset(rel))


def chain_poset(n: int, labels: Sequence[str] | None = None) -> FinPoset:
    elems = list(labels) if labels is not None else [str(i) for i in range(n)]
    rel = [(elems[i], elems[j]) for i in range(n) for j in range(i, n)]
    return build_poset(elems, rel, check=False)


def discrete_poset(labels: Iterable[str]) -> FinPoset:
    elems = list(labels)
    return build_poset(elems, [(x, x) for x in elems], check=False)
