"""Instance generators, the category corpus, and the independent tensor oracle."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .. import cat as ct
from .. import poset as po
from ..errors import BaseMismatch, BudgetExceeded
from ..fincat import (
    DEFAULT_BUDGET,
    FinCategory,
    FinPoset,
    FinSet,
    build_category,
    build_poset,
    terminal_category,
)

POINT = build_poset(["*"], [("*", "*")], check=False)


def bang_map(x: FinPoset) -> po.MonotoneMap:
    return po.MonotoneMap(x, POINT, tuple((e, "*") for e in x.elements))


def point_map(x: FinPoset, e: str) -> po.MonotoneMap:
    return po.monotone_map(POINT, x, {"*": e}, check=False)


# ---------------------------------------------------------------------------
# labeled posets and monotone maps


@lru_cache(maxsize=None)
def enumerate_posets(n: int, budget: int = DEFAULT_BUDGET) -> tuple[FinPoset, ...]:
    """All labeled posets on {0..n-1}, in a deterministic order."""
    if n == 0:
        return (build_poset([], [], check=False),)
    elems = [str(i) for i in range(n)]
    strict_pairs = [(x, y) for x in elems for y in elems if x != y]
    if 2 ** len(strict_pairs) > budget:
        raise BudgetExceeded(f"enumerate_posets({n}): {2 ** len(strict_pairs)} candidates")
    found = []
    for bits in itertools.product((False, True), repeat=len(strict_pairs)):
        rel = {(x, x) for x in elems}
        rel.update(p for p, keep in zip(strict_pairs, bits) if keep)
        if any((y, x) in rel for x, y in rel if x != y):
            continue
        if any(
            (x, z) not in rel
            for x, y in rel
            for y2, z in rel
            if y == y2
        ):
            continue
        found.append(FinPoset(tuple(elems), frozenset(rel)))
    found.sort(key=lambda p: tuple(sorted(p.leq)))
    return tuple(found)


@lru_cache(maxsize=None)
def enumerate_monotone(
    x: FinPoset, y: FinPoset, budget: int = DEFAULT_BUDGET
) -> tuple[po.MonotoneMap, ...]:
    """All monotone maps x -> y, in a deterministic order."""
    if not x.elements:
        return (po.MonotoneMap(x, y, ()),)
    candidates = len(y.elements) ** len(x.elements)
    if candidates > budget:
        raise BudgetExceeded(f"enumerate_monotone: {candidates} candidates")
    found = []
    for images in itertools.product(y.elements, repeat=len(x.elements)):
        table = dict(zip(x.elements, images))
        if all((table[a], table[b]) in y.leq for a, b in x.leq):
            found.append(po.MonotoneMap(x, y, tuple(sorted(table.items()))))
    return tuple(found)


@lru_cache(maxsize=None)
def poset_universe(max_size: int) -> tuple[FinPoset, ...]:
    out: list[FinPoset] = []
    for n in range(1, max_size + 1):
        out.extend(enumerate_posets(n))
    return tuple(out)


@lru_cache(maxsize=None)
def monotone_universe(max_size: int) -> tuple[po.MonotoneMap, ...]:
    posets = poset_universe(max_size)
    out: list[po.MonotoneMap] = []
    for x in posets:
        for y in posets:
            out.extend(enumerate_monotone(x, y))
    return tuple(out)


def sampled_maps(config_seed: int, count: int, size: int) -> tuple[po.MonotoneMap, ...]:
    """Seeded sample of monotone maps between labeled posets of the given size."""
    rng = random.Random(config_seed)
    posets = enumerate_posets(size)
    out = []
    while len(out) < count:
        x = posets[rng.randrange(len(posets))]
        y = posets[rng.randrange(len(posets))]
        maps = enumerate_monotone(x, y)
        out.append(maps[rng.randrange(len(maps))])
    return tuple(out)


# caches for part families, shared by every checker


@lru_cache(maxsize=None)
def parts_of(x: FinPoset) -> tuple[po.Part, ...]:
    return po.all_parts(x)


@lru_cache(maxsize=None)
def downs_of(x: FinPoset) -> tuple[po.DownSet, ...]:
    return po.all_down_sets(x)


@lru_cache(maxsize=None)
def ups_of(x: FinPoset) -> tuple[po.UpSet, ...]:
    return po.all_up_sets(x)


@lru_cache(maxsize=None)
def biclosed_of(x: FinPoset) -> tuple[po.BiclosedPart, ...]:
    return po.all_biclosed(x)


# ---------------------------------------------------------------------------
# the category corpus


@lru_cache(maxsize=None)
def corpus() -> dict[str, FinCategory]:
    """The fixed stress corpus of nine small categories."""
    two = build_category(["a", "b"], [("u", "a", "b")], [])
    parallel = build_category(["a", "b"], [("u", "a", "b"), ("v", "a", "b")], [])
    chain3 = build_category(
        ["a", "b", "c"],
        [("u", "a", "b"), ("v", "b", "c"), ("w", "a", "c")],
        [("v", "u", "w")],
    )
    span = build_category(["a", "b", "s"], [("f", "s", "a"), ("g", "s", "b")], [])
    cospan = build_category(["a", "b", "c"], [("f", "a", "c"), ("g", "b", "c")], [])
    retract = build_category(
        ["A", "B"],
        [("s", "A", "B"), ("p", "B", "A"), ("e", "B", "B")],
        [("p", "s", "id_A"), ("s", "p", "e"), ("e", "e", "e"), ("e", "s", "s"), ("p", "e", "p")],
    )
    z2 = build_category(["z"], [("g", "z", "z")], [("g", "g", "id_z")])
    iso = build_category(
        ["a", "b"],
        [("u", "a", "b"), ("v", "b", "a")],
        [("v", "u", "id_a"), ("u", "v", "id_b")],
    )
    return {
        "one": terminal_category(),
        "two": two,
        "parallel": parallel,
        "chain3": chain3,
        "span": span,
        "cospan": cospan,
        "retract": retract,
        "z2": z2,
        "iso": iso,
    }


@lru_cache(maxsize=None)
def corpus_functors(names: tuple[str, ...], budget: int = DEFAULT_BUDGET):
    """All functors between ordered pairs of corpus categories, with names."""
    from ..fincat import enumerate_functors

    cats = corpus()
    out = []
    for a in names:
        for b in names:
            for i, fun in enumerate(enumerate_functors(cats[a], cats[b], budget)):
                out.append((f"{a}->{b}#{i}", fun))
    return tuple(out)


@lru_cache(maxsize=None)
def presheaves_on(base: FinCategory, max_fiber: int = 2) -> tuple[ct.Presheaf, ...]:
    return ct.enumerate_presheaves(base, max_fiber)


@lru_cache(maxsize=None)
def copresheaves_on(base: FinCategory, max_fiber: int = 2) -> tuple[ct.Copresheaf, ...]:
    return ct.enumerate_copresheaves(base, max_fiber)


@lru_cache(maxsize=None)
def parts_over(
    base: FinCategory, corpus_names: tuple[str, ...], cap: int, budget: int = DEFAULT_BUDGET
) -> tuple[ct.PartOver, ...]:
    """A deterministic spread of parts over the base: corpus totals with
    every projection functor, capped evenly across totals."""
    from ..fincat import enumerate_functors

    cats = corpus()
    pool: list[ct.PartOver] = []
    for name in corpus_names:
        for fun in enumerate_functors(cats[name], base, budget):
            pool.append(ct.part_over(fun))
    return capped(pool, cap, salt=f"parts_over:{len(pool)}")


def capped(seq, cap: int, *, salt: str = "") -> tuple:
    """Deterministic selection of at most cap items, spread evenly."""
    items = list(seq)
    if cap <= 0 or len(items) <= cap:
        return tuple(items)
    step = len(items) / cap
    picked = [items[int(i * step)] for i in range(cap)]
    return tuple(picked)


# ---------------------------------------------------------------------------
# the classical tensor oracle


def coend_oracle(n: ct.Copresheaf, m: ct.Presheaf) -> FinSet:
    """Quotient of the pairwise sums by the span relations, via union-find.

    Independent of the pullback route used by the tensor operation: it never
    builds a category, only identifies pairs along each morphism's two legs.
    """
    if n.base != m.base:
        raise BaseMismatch("arguments live over different bases")
    base = n.base
    nodes = [
        (x, a, b) for x in base.objects for a in n.at(x) for b in m.at(x)
    ]
    parent = {node: node for node in nodes}

    def find(node):
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    for u in base.mor_names:
        if base.is_identity(u):
            continue
        x, x2 = base.src[u], base.tgt[u]
        for a in n.at(x):
            for b2 in m.at(x2):
                left = find((x, a, m.act[u][b2]))
                right = find((x2, n.act[u][a], b2))
                if left != right:
                    parent[right] = left
    labels = {}
    for node in nodes:
        root = find(node)
        key = f"({node[0]}|{node[1]}|{node[2]})"
        labels[root] = min(labels.get(root, key), key)
    return FinSet(tuple(sorted(set(labels.values()))))
