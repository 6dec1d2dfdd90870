"""The two-valued doctrine of finite posets.

Parts of a poset X are plain subsets; the two closed-part classes are the
down-closed and up-closed subsets; truth values are booleans.  Every operator
below is an exact finite-set computation, and each down-side operator has an
up-side dual obtained by flipping the order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    BaseMismatch,
    InvalidPart,
    NotClosed,
    NotMonotone,
    UnknownObject,
)
from .fincat import FinPoset

Truth2 = bool  # the truth-value object over the point: exactly two values


# ---------------------------------------------------------------------------
# parts and monotone maps


@dataclass(frozen=True)
class Part:
    """A subset of a finite poset."""

    base: FinPoset
    members: frozenset[str]

    def __post_init__(self) -> None:
        stray = self.members - self.base.universe
        if stray:
            raise InvalidPart(f"members outside base: {sorted(stray)}")

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))

    def __repr__(self) -> str:
        return "{" + ",".join(self.sorted_members()) + "}"


@dataclass(frozen=True, repr=False)
class DownSet(Part):
    def __post_init__(self) -> None:
        super().__post_init__()
        for x in self.members:
            if not self.base.down[x] <= self.members:
                raise NotClosed(f"not down-closed at {x}")


@dataclass(frozen=True, repr=False)
class UpSet(Part):
    def __post_init__(self) -> None:
        super().__post_init__()
        for x in self.members:
            if not self.base.up[x] <= self.members:
                raise NotClosed(f"not up-closed at {x}")


@dataclass(frozen=True, repr=False)
class BiclosedPart(Part):
    """Both down- and up-closed: a union of connected components of the order."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for x in self.members:
            if not (self.base.down[x] | self.base.up[x]) <= self.members:
                raise NotClosed(f"not biclosed at {x}")


@dataclass(frozen=True)
class MonotoneMap:
    dom: FinPoset
    cod: FinPoset
    mapping: tuple[tuple[str, str], ...]

    @cached_property
    def table(self) -> dict[str, str]:
        return dict(self.mapping)

    @cached_property
    def fibers(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {y: set() for y in self.cod.elements}
        for x, y in self.mapping:
            out[y].add(x)
        return {y: frozenset(v) for y, v in out.items()}

    def __call__(self, x: str) -> str:
        try:
            return self.table[x]
        except KeyError:
            raise UnknownObject(f"map undefined on {x!r}") from None

    def __repr__(self) -> str:
        arrows = ",".join(f"{x}>{y}" for x, y in self.mapping)
        return f"map[{arrows}]"


def monotone_map(
    dom: FinPoset, cod: FinPoset, mapping: Mapping[str, str], *, check: bool = True
) -> MonotoneMap:
    table = dict(mapping)
    for x in dom.elements:
        if x not in table:
            raise NotMonotone(f"map undefined on {x!r}")
        if table[x] not in cod.universe:
            raise UnknownObject(f"image {table[x]!r} not in codomain")
    if check:
        for x, y in dom.leq:
            if (table[x], table[y]) not in cod.leq:
                raise NotMonotone(f"order not preserved on ({x}, {y})")
    return MonotoneMap(dom, cod, tuple(sorted(table.items())))


def identity_map(poset: FinPoset) -> MonotoneMap:
    return MonotoneMap(poset, poset, tuple((x, x) for x in poset.elements))


def compose_maps(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    if f.cod != g.dom:
        raise BaseMismatch("maps are not composable")
    return MonotoneMap(f.dom, g.cod, tuple(sorted((x, g(y)) for x, y in f.mapping)))


def _same_base(*parts: Part) -> FinPoset:
    base = parts[0].base
    for p in parts[1:]:
        if p.base != base:
            raise BaseMismatch("parts live over different posets")
    return base


def part(base: FinPoset, members: Iterable[str]) -> Part:
    return Part(base, frozenset(members))


def down_set(base: FinPoset, members: Iterable[str]) -> DownSet:
    return DownSet(base, frozenset(members))


def up_set(base: FinPoset, members: Iterable[str]) -> UpSet:
    return UpSet(base, frozenset(members))


def biclosed(base: FinPoset, members: Iterable[str]) -> BiclosedPart:
    return BiclosedPart(base, frozenset(members))


def top(base: FinPoset) -> Part:
    return Part(base, base.universe)


def top_down(base: FinPoset) -> DownSet:
    return DownSet(base, base.universe)


def top_up(base: FinPoset) -> UpSet:
    return UpSet(base, base.universe)


def principal_down(base: FinPoset, x: str) -> DownSet:
    """The slice at x: the principal down-set of x."""
    if x not in base.universe:
        raise UnknownObject(f"no element {x!r}")
    return DownSet(base, base.down[x])


def principal_up(base: FinPoset, x: str) -> UpSet:
    """The coslice at x: the principal up-set of x."""
    if x not in base.universe:
        raise UnknownObject(f"no element {x!r}")
    return UpSet(base, base.up[x])


def singleton(base: FinPoset, x: str) -> Part:
    if x not in base.universe:
        raise UnknownObject(f"no element {x!r}")
    return Part(base, frozenset({x}))


# ---------------------------------------------------------------------------
# the cartesian closed structure of parts


def conj(p: Part, q: Part) -> Part:
    base = _same_base(p, q)
    return Part(base, p.members & q.members)


def implication(p: Part, q: Part) -> Part:
    """Exponential in the Boolean algebra of subsets: (not P) union Q."""
    base = _same_base(p, q)
    return Part(base, (base.universe - p.members) | q.members)


def hom(p: Part, q: Part) -> Truth2:
    _same_base(p, q)
    return p.members <= q.members


def meets(p: Part, q: Part) -> Truth2:
    _same_base(p, q)
    return bool(p.members & q.members)


def nat(l: DownSet, m: DownSet) -> Truth2:
    _same_base(l, m)
    return l.members <= m.members


def nat_up(n: UpSet, o: UpSet) -> Truth2:
    _same_base(n, o)
    return n.members <= o.members


def ten(n: UpSet, m: DownSet) -> Truth2:
    _same_base(n, m)
    return bool(n.members & m.members)


# ---------------------------------------------------------------------------
# substitution and its adjoints


def substitution(f: MonotoneMap, q: Part) -> Part:
    if q.base != f.cod:
        raise BaseMismatch("part does not live over the codomain")
    return Part(f.dom, frozenset(x for x in f.dom.elements if f(x) in q.members))


def sigma(f: MonotoneMap, p: Part) -> Part:
    if p.base != f.dom:
        raise BaseMismatch("part does not live over the domain")
    return Part(f.cod, frozenset(f(x) for x in p.members))


def pi(f: MonotoneMap, p: Part) -> Part:
    if p.base != f.dom:
        raise BaseMismatch("part does not live over the domain")
    return Part(f.cod, frozenset(y for y in f.cod.elements if f.fibers[y] <= p.members))


def restrict_down(f: MonotoneMap, m: DownSet) -> DownSet:
    """Substitution restricted to down-closed parts (preimage)."""
    return DownSet(f.dom, substitution(f, m).members)


def restrict_up(f: MonotoneMap, n: UpSet) -> UpSet:
    return UpSet(f.dom, substitution(f, n).members)


# ---------------------------------------------------------------------------
# closure and interior


def down_closure(p: Part) -> DownSet:
    base = p.base
    return DownSet(base, frozenset(y for x in p.members for y in base.down[x]))


def down_interior(p: Part) -> DownSet:
    base = p.base
    return DownSet(base, frozenset(x for x in base.elements if base.down[x] <= p.members))


def up_closure(p: Part) -> UpSet:
    base = p.base
    return UpSet(base, frozenset(y for x in p.members for y in base.up[x]))


def up_interior(p: Part) -> UpSet:
    base = p.base
    return UpSet(base, frozenset(x for x in base.elements if base.up[x] <= p.members))


def as_part(p: Part) -> Part:
    """Forget closedness (the inclusion of closed parts into all parts)."""
    return Part(p.base, p.members)


# ---------------------------------------------------------------------------
# quantification along a map, for closed parts


def exists_along(f: MonotoneMap, m: DownSet) -> DownSet:
    """Left adjoint to restriction: down-closure of the image."""
    if m.base != f.dom:
        raise BaseMismatch("part does not live over the domain")
    return down_closure(sigma(f, as_part(m)))


def forall_along(f: MonotoneMap, m: DownSet) -> DownSet:
    """Right adjoint to restriction: down-interior of the fiberwise quantification."""
    if m.base != f.dom:
        raise BaseMismatch("part does not live over the domain")
    return down_interior(pi(f, as_part(m)))


def exists_along_up(f: MonotoneMap, n: UpSet) -> UpSet:
    if n.base != f.dom:
        raise BaseMismatch("part does not live over the domain")
    return up_closure(sigma(f, as_part(n)))


def forall_along_up(f: MonotoneMap, n: UpSet) -> UpSet:
    if n.base != f.dom:
        raise BaseMismatch("part does not live over the domain")
    return up_interior(pi(f, as_part(n)))


# ---------------------------------------------------------------------------
# comprehension


def comprehension_c(f: MonotoneMap) -> Part:
    """The extension of a map: its image as a part of the codomain."""
    return sigma(f, top(f.dom))


def sub_poset(base: FinPoset, members: Iterable[str]) -> FinPoset:
    mem = sorted(set(members))
    return FinPoset(
        tuple(mem), frozenset((x, y) for x, y in base.leq if x in set(mem) and y in set(mem))
    )


def comprehension_k(p: Part) -> MonotoneMap:
    """The inclusion of a part with its induced order."""
    sub = sub_poset(p.base, p.members)
    return MonotoneMap(sub, p.base, tuple((x, x) for x in sub.elements))


# ---------------------------------------------------------------------------
# truth-valued functors over the point


def end_part(p: Part) -> Truth2:
    """Right adjoint at the point: the part is everything."""
    return p.members == p.base.universe


def coend_part(p: Part) -> Truth2:
    """Left adjoint at the point: the part is inhabited."""
    return bool(p.members)


def lim_down(m: DownSet) -> Truth2:
    return m.members == m.base.universe


def colim_down(m: DownSet) -> Truth2:
    return bool(m.members)


def lim_up(n: UpSet) -> Truth2:
    return n.members == n.base.universe


def colim_up(n: UpSet) -> Truth2:
    return bool(n.members)


def components(base: FinPoset) -> Truth2:
    """Two-valued reflection in discrete spaces: inhabitation of the poset."""
    return coend_part(top(base))


# ---------------------------------------------------------------------------
# classifications of maps and parts


def is_surjective(f: MonotoneMap) -> Truth2:
    return sigma(f, top(f.dom)).members == f.cod.universe


def is_final(f: MonotoneMap) -> Truth2:
    return exists_along(f, top_down(f.dom)).members == f.cod.universe


def is_initial(f: MonotoneMap) -> Truth2:
    return exists_along_up(f, top_up(f.dom)).members == f.cod.universe


def is_left_dense(p: Part) -> Truth2:
    return down_closure(p).members == p.base.universe


def is_right_dense(p: Part) -> Truth2:
    return up_closure(p).members == p.base.universe


# ---------------------------------------------------------------------------
# complement against a truth value


def complement_against(m: DownSet, v: Truth2) -> UpSet:
    """Implication into the constant part at v; certified up-closed on return."""
    base = m.base
    against = top(base) if v else Part(base, frozenset())
    return UpSet(base, implication(as_part(m), against).members)


def complement_against_up(n: UpSet, v: Truth2) -> DownSet:
    base = n.base
    against = top(base) if v else Part(base, frozenset())
    return DownSet(base, implication(as_part(n), against).members)


# ---------------------------------------------------------------------------
# sup / inf reflections (partially defined)


def sup(p: Part) -> str | None:
    """Least upper bound of the part, or None when no reflection exists."""
    base = p.base
    for x in base.elements:  # sorted; uniqueness holds by antisymmetry
        if not all(base.le(m, x) for m in p.members):
            continue
        if all(
            base.le(x, y)
            for y in base.elements
            if all(base.le(m, y) for m in p.members)
        ):
            return x
    return None


def inf(p: Part) -> str | None:
    """Greatest lower bound of the part, or None."""
    base = p.base
    for x in base.elements:
        if not all(base.le(x, m) for m in p.members):
            continue
        if all(
            base.le(y, x)
            for y in base.elements
            if all(base.le(y, m) for m in p.members)
        ):
            return x
    return None


def sup_of_map(f: MonotoneMap) -> str | None:
    """Sup of a map with codomain X: the sup of its extension."""
    return sup(comprehension_c(f))


# ---------------------------------------------------------------------------
# part enumeration helpers (shared by the law suites and tests)


def all_parts(base: FinPoset) -> tuple[Part, ...]:
    out = []
    for bits in itertools.product((False, True), repeat=len(base.elements)):
        out.append(Part(base, frozenset(itertools.compress(base.elements, bits))))
    return tuple(out)


def all_down_sets(base: FinPoset) -> tuple[DownSet, ...]:
    return tuple(
        DownSet(base, p.members) for p in all_parts(base) if down_closure(p).members == p.members
    )


def all_up_sets(base: FinPoset) -> tuple[UpSet, ...]:
    return tuple(
        UpSet(base, p.members) for p in all_parts(base) if up_closure(p).members == p.members
    )


def all_biclosed(base: FinPoset) -> tuple[BiclosedPart, ...]:
    down = {p.members for p in all_down_sets(base)}
    up = {p.members for p in all_up_sets(base)}
    return tuple(BiclosedPart(base, m) for m in sorted(down & up, key=sorted))


# names of the registered laws this doctrine participates in (the registry
# meta-test cross-checks this list against the laws module)
LAW_NAMES = (
    "galois_closed", "galois_subst", "frob",
    "int1c", "int1d", "int1a", "int1", "int1b",
    "rsl1", "rsl2", "rsl3", "rsl4", "expcl", "vcompl",
    "adj1", "adj2", "adj3", "adj4", "adj5", "adj6", "adj7", "adj8",
    "hyp", "hyp2", "hyp3", "hyp4", "rmkhyp",
    "temp3", "td2", "td3", "td4",
    "compr0", "compr1", "compr2", "compr3", "compr4", "compr5",
    "sup_point", "sup_final", "rmksup",
)
