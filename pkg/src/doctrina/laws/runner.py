"""Law suite execution: instance streams, verdicts, replay, cross-checks."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Iterable, Mapping

from .. import cat as ct
from .. import files
from .. import poset as po
from ..errors import BudgetExceeded, DoctrinaError
from ..fincat import (
    FinCategory,
    FinFunctor,
    FinPoset,
    FinSet,
    build_functor,
    poset_as_category,
)
from . import generate as gen
from .cat_laws import CONFIG_SLOT
from .registry import LAWS, NEGATIVE_CONTROLS, registry
from .types import GenConfig, LawReport, LawSpec, SuiteResult

TIERS = ("exhaustive", "sampled", "corpus", "cross")


# ---------------------------------------------------------------------------
# value serialization for replayable counterexamples


def serialize_value(v: Any) -> Any:
    if isinstance(v, po.BiclosedPart):
        return {"kind": "biclosed", **files.part_doc(v)}
    if isinstance(v, po.DownSet):
        return {"kind": "down", **files.part_doc(v)}
    if isinstance(v, po.UpSet):
        return {"kind": "up", **files.part_doc(v)}
    if isinstance(v, po.Part):
        return {"kind": "part", **files.part_doc(v)}
    if isinstance(v, po.MonotoneMap):
        return {"kind": "map", **files.monotone_doc(v)}
    if isinstance(v, FinPoset):
        return {"kind": "poset", **files.poset_doc(v)}
    if isinstance(v, ct.Copresheaf):
        return {"kind": "copresheaf", **files.presheaf_doc(v)}
    if isinstance(v, ct.Presheaf):
        return {"kind": "presheaf", **files.presheaf_doc(v)}
    if isinstance(v, ct.PartOver):
        return {"kind": "partover", **files.partover_doc(v)}
    if isinstance(v, FinFunctor):
        return {"kind": "functor", **files.functor_doc(v)}
    if isinstance(v, FinCategory):
        return {"kind": "category", **files.category_doc(v)}
    if isinstance(v, FinSet):
        return {"kind": "truthset", **files.truthset_doc(v)}
    if isinstance(v, (tuple, list)):
        return [serialize_value(item) for item in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return repr(v)


def parse_value(doc: Any) -> Any:
    if not isinstance(doc, Mapping) or "kind" not in doc:
        return doc
    kind = doc["kind"]
    if kind == "poset":
        return files.parse_poset(doc)
    if kind in ("part", "down", "up", "biclosed"):
        cls = {
            "part": po.Part,
            "down": po.DownSet,
            "up": po.UpSet,
            "biclosed": po.BiclosedPart,
        }[kind]
        return files.parse_part(doc, cls=cls)
    if kind == "map":
        return files.parse_monotone(doc)
    if kind == "category":
        return files.parse_category(doc)
    if kind == "functor":
        return files.parse_functor(doc)
    if kind in ("presheaf", "copresheaf"):
        return files.parse_presheaf(doc)
    if kind == "partover":
        return files.parse_partover(doc)
    if kind == "truthset":
        return FinSet(tuple(doc["elements"]))
    return doc


def _describe(bundle: Mapping[str, Any]) -> str:
    names = {id(c): name for name, c in gen.corpus().items()}
    bits = []
    for slot in sorted(bundle):
        if slot == CONFIG_SLOT:
            continue
        v = bundle[slot]
        if isinstance(v, FinCategory):
            label = next(
                (name for name, c in gen.corpus().items() if c == v),
                f"cat[{','.join(v.objects)}]",
            )
            bits.append(f"{slot}={label}")
        elif isinstance(v, FinFunctor):
            dom = next((n for n, c in gen.corpus().items() if c == v.dom), "?")
            cod = next((n for n, c in gen.corpus().items() if c == v.cod), "?")
            arrows = ",".join(f"{a}>{b}" for a, b in v.obj_map)
            bits.append(f"{slot}={dom}->{cod}[{arrows}]")
        else:
            bits.append(f"{slot}={v!r}")
    return "; ".join(bits) or "(empty)"


# ---------------------------------------------------------------------------
# single-law checking and replay


def check_law(law: LawSpec, doctrine: str, bundle: Mapping[str, Any]) -> LawReport:
    checker = law.poset_checker if doctrine == "poset" else law.cat_checker
    instance = _describe(bundle)
    if checker is None:
        return LawReport(law.name, doctrine, instance, "skip", reason="not applicable")
    try:
        outcome = checker(bundle)
    except BudgetExceeded as exc:
        return LawReport(law.name, doctrine, instance, "skip", reason=str(exc))
    except (DoctrinaError, KeyError, ValueError) as exc:
        return LawReport(
            law.name,
            doctrine,
            instance,
            "fail",
            counterexample={"doctrine": doctrine, "error": repr(exc), "bundle": _payload(bundle, {})},
        )
    if outcome is None:
        return LawReport(law.name, doctrine, instance, "pass")
    pinned = {k: v for k, v in outcome.items() if k not in ("detail", "lhs", "rhs")}
    counterexample = {
        "doctrine": doctrine,
        "detail": outcome.get("detail", ""),
        "lhs": serialize_value(outcome.get("lhs")),
        "rhs": serialize_value(outcome.get("rhs")),
        "bundle": _payload(bundle, pinned),
    }
    return LawReport(law.name, doctrine, instance, "fail", counterexample=counterexample)


def _payload(bundle: Mapping[str, Any], pinned: Mapping[str, Any]) -> dict:
    merged = {k: v for k, v in bundle.items() if k != CONFIG_SLOT}
    merged.update(pinned)
    return {slot: serialize_value(v) for slot, v in merged.items()}


def replay(report_doc: Mapping[str, Any]) -> LawReport:
    """Re-run a failure payload; the verdict must reproduce bit for bit."""
    law = registry()[report_doc["law"]]
    counterexample = report_doc["counterexample"]
    bundle = {slot: parse_value(doc) for slot, doc in counterexample["bundle"].items()}
    return check_law(law, counterexample["doctrine"], bundle)


# ---------------------------------------------------------------------------
# instance streams


def _poset_bundles(law: LawSpec, posets, maps) -> Iterable[Mapping[str, Any]]:
    if law.poset_scope == "poset":
        for x in posets:
            yield {"X": x}
    elif law.poset_scope == "map":
        for f in maps:
            yield {"f": f}


def _cat_bundles(law: LawSpec, config: GenConfig) -> Iterable[Mapping[str, Any]]:
    cats = gen.corpus()
    if law.cat_scope == "category":
        for name in config.corpus:
            yield {"X": cats[name], CONFIG_SLOT: config}
    elif law.cat_scope == "functor":
        for _, fun in gen.corpus_functors(config.corpus, config.budget):
            yield {"f": fun, CONFIG_SLOT: config}


def _selected(laws: tuple[str, ...] | None, include_negative: bool) -> list[LawSpec]:
    pool = list(LAWS) + (list(NEGATIVE_CONTROLS) if include_negative else [])
    if laws is None:
        return pool
    wanted = set(laws)
    missing = wanted - {law.name for law in pool}
    if missing:
        raise KeyError(f"unknown law names: {sorted(missing)}")
    return [law for law in pool if law.name in wanted]


def run_suite(
    config: GenConfig = GenConfig(),
    doctrine: str = "both",
    laws: tuple[str, ...] | None = None,
    tiers: tuple[str, ...] = TIERS,
    workers: int = 1,
    include_negative: bool = False,
    report_stream=None,
) -> SuiteResult:
    """Check the selected laws over the selected tiers.

    The aggregate is deterministic and independent of the worker count:
    tasks are generated in a fixed order and reports are sorted before
    aggregation.
    """
    started = time.monotonic()
    selected = _selected(laws, include_negative)
    tasks: list[tuple[LawSpec, str, Mapping[str, Any]]] = []

    if doctrine in ("poset", "both"):
        if "exhaustive" in tiers:
            posets = gen.poset_universe(config.max_poset_size)
            maps = gen.monotone_universe(config.max_poset_size)
            for law in selected:
                if law.poset_checker is not None:
                    for bundle in _poset_bundles(law, posets, maps):
                        tasks.append((law, "poset", bundle))
        if "sampled" in tiers:
            sampled = gen.sampled_maps(config.seed, config.sample_count, config.sample_poset_size)
            seen: dict[FinPoset, None] = {}
            for f in sampled:
                seen.setdefault(f.dom)
                seen.setdefault(f.cod)
            sampled_posets = tuple(seen)
            for law in selected:
                if law.poset_checker is not None:
                    for bundle in _poset_bundles(law, sampled_posets, sampled):
                        tasks.append((law, "poset", bundle))
    if doctrine in ("cat", "both") and "corpus" in tiers:
        for law in selected:
            if law.cat_checker is not None:
                for bundle in _cat_bundles(law, config):
                    tasks.append((law, "cat", bundle))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda t: check_law(*t), tasks))
    else:
        reports = [check_law(*task) for task in tasks]

    if doctrine in ("both",) and "cross" in tiers and laws is None:
        reports.extend(transport_reports(config))

    reports.sort(key=lambda r: (r.law, r.doctrine, r.instance, r.verdict))
    result = SuiteResult()
    for report in reports:
        result.record(report)
        if report_stream is not None:
            report_stream(report)
    result.elapsed = time.monotonic() - started
    return result


# ---------------------------------------------------------------------------
# cross-instance coherence: the thin-category transport of a poset


def _chi(c: FinCategory, m: po.DownSet) -> ct.Presheaf:
    sets = {x: ("*",) if x in m.members else () for x in c.objects}
    actions = {
        u: ({"*": "*"} if c.tgt[u] in m.members else {})
        for u in c.mor_names
        if not c.is_identity(u)
    }
    return ct.presheaf(c, sets, actions, check=False)


def _chi_co(c: FinCategory, n: po.UpSet) -> ct.Copresheaf:
    sets = {x: ("*",) if x in n.members else () for x in c.objects}
    actions = {
        u: ({"*": "*"} if c.src[u] in n.members else {})
        for u in c.mor_names
        if not c.is_identity(u)
    }
    return ct.copresheaf(c, sets, actions, check=False)


def _induced_part(c: FinCategory, x: FinPoset, p: po.Part) -> ct.PartOver:
    sub = poset_as_category(po.sub_poset(x, p.members))
    obj_map = {e: e for e in sub.objects}
    mor_map = {m: m for m in sub.mor_names}
    return ct.part_over(build_functor(sub, c, obj_map, mor_map, check=False))


def _thin_functor(cf: FinCategory, cg: FinCategory, f: po.MonotoneMap) -> FinFunctor:
    obj_map = dict(f.mapping)
    mor_map = {}
    for m in cf.mor_names:
        if cf.is_identity(m):
            continue
        s, t = obj_map[cf.src[m]], obj_map[cf.tgt[m]]
        mor_map[m] = cg.id_of[s] if s == t else f"le({s},{t})"
    return build_functor(cf, cg, obj_map, mor_map, check=False)


def transport_reports(config: GenConfig) -> list[LawReport]:
    """The category doctrine on thin categories reproduces the poset verdicts."""
    out = []
    for x in gen.poset_universe(min(config.max_poset_size, 3)):
        c = poset_as_category(x)
        problems = _transport_poset(x, c)
        out.append(
            LawReport(
                "transport",
                "cross",
                f"X={x!r}",
                "fail" if problems else "pass",
                counterexample=problems,
            )
        )
    maps = [f for f in gen.monotone_universe(min(config.max_poset_size, 3))]
    for f in gen.capped(maps, 160):
        problems = _transport_map(f)
        out.append(
            LawReport(
                "transport",
                "cross",
                f"f={f!r}",
                "fail" if problems else "pass",
                counterexample=problems,
            )
        )
    return out


def _transport_poset(x: FinPoset, c: FinCategory) -> dict | None:
    for p in gen.parts_of(x):
        part = _induced_part(c, x, p)
        cl, itr = ct.closure(part), ct.interior(part)
        cl_co, itr_co = ct.closure_co(part), ct.interior_co(part)
        for e in x.elements:
            if (e in po.down_closure(p).members) != bool(cl.at(e)):
                return {"op": "closure", "P": serialize_value(p), "at": e}
            if (e in po.down_interior(p).members) != bool(itr.at(e)):
                return {"op": "interior", "P": serialize_value(p), "at": e}
            if (e in po.up_closure(p).members) != bool(cl_co.at(e)):
                return {"op": "closure'", "P": serialize_value(p), "at": e}
            if (e in po.up_interior(p).members) != bool(itr_co.at(e)):
                return {"op": "interior'", "P": serialize_value(p), "at": e}
    for l in gen.downs_of(x):
        for m in gen.downs_of(x):
            if po.nat(l, m) != bool(ct.nat(_chi(c, l), _chi(c, m)).size):
                return {"op": "nat", "L": serialize_value(l), "M": serialize_value(m)}
    for n in gen.ups_of(x):
        for m in gen.downs_of(x):
            if po.ten(n, m) != bool(ct.ten(_chi_co(c, n), _chi(c, m)).size):
                return {"op": "ten", "N": serialize_value(n), "M": serialize_value(m)}
    return None


def _transport_map(f: po.MonotoneMap) -> dict | None:
    cf, cg = poset_as_category(f.dom), poset_as_category(f.cod)
    fun = _thin_functor(cf, cg, f)
    for m in gen.downs_of(f.dom):
        chi = _chi(cf, m)
        pushed, lifted = ct.lan(fun, chi), ct.ran(fun, chi)
        exists = po.exists_along(f, m).members
        forall = po.forall_along(f, m).members
        for y in f.cod.elements:
            if (y in exists) != bool(pushed.at(y)):
                return {"op": "exists", "M": serialize_value(m), "at": y}
            if (y in forall) != bool(lifted.at(y)):
                return {"op": "forall", "M": serialize_value(m), "at": y}
    return None
