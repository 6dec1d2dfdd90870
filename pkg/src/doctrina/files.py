"""JSON documents for every value the engine exchanges.

Serialization is canonical: keys sorted, labels in their canonical order,
so identical values produce byte-identical documents.  Parsers accept inline
sub-documents wherever a base is referenced; the CLI additionally resolves
string references as paths.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Mapping

from . import cat as ct
from . import poset as po
from .errors import InvalidDocument
from .fincat import FinCategory, FinFunctor, FinPoset, FinSet, build_poset, validate_category


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def canonical_json_line(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# ---------------------------------------------------------------------------
# writers


def poset_doc(p: FinPoset) -> dict:
    return {
        "elements": list(p.elements),
        "leq": [[x, y] for x, y in sorted(p.leq)],
    }


def part_doc(p: po.Part, *, with_base: bool = True) -> dict:
    doc: dict[str, Any] = {"members": list(p.sorted_members())}
    if with_base:
        doc["base"] = poset_doc(p.base)
    return doc


def monotone_doc(f: po.MonotoneMap) -> dict:
    return {
        "dom": poset_doc(f.dom),
        "cod": poset_doc(f.cod),
        "map": dict(f.mapping),
    }


def category_doc(c: FinCategory) -> dict:
    identities = set(c.identity_names)
    return {
        "objects": list(c.objects),
        "morphisms": [
            {"name": name, "src": s, "tgt": t}
            for name, s, t in c.morphisms
            if name not in identities
        ],
        "identity": dict(c.identity),
        "compose": [
            [g, f, gf]
            for g, f, gf in c.composition
            if g not in identities and f not in identities
        ],
    }


def functor_doc(f: FinFunctor, *, with_bases: bool = True) -> dict:
    identities = set(f.dom.identity_names)
    doc: dict[str, Any] = {
        "obj": dict(f.obj_map),
        "mor": {m: i for m, i in f.mor_map if m not in identities},
    }
    if with_bases:
        doc["dom"] = category_doc(f.dom)
        doc["cod"] = category_doc(f.cod)
    return doc


def presheaf_doc(m: ct.Presheaf, *, with_base: bool = True) -> dict:
    identities = set(m.base.identity_names)
    doc: dict[str, Any] = {
        "variance": "co" if isinstance(m, ct.Copresheaf) else "contra",
        "sets": {x: list(v) for x, v in m.sets},
        "actions": {
            u: dict(graph) for u, graph in m.actions if u not in identities
        },
    }
    if with_base:
        doc["base"] = category_doc(m.base)
    return doc


def partover_doc(p: ct.PartOver, *, with_base: bool = True) -> dict:
    doc: dict[str, Any] = {
        "total": category_doc(p.total),
        "proj": functor_doc(p.proj, with_bases=False),
    }
    if with_base:
        doc["base"] = category_doc(p.base)
    return doc


def truthset_doc(t: FinSet) -> dict:
    return {"elements": list(t.elements), "size": t.size}


def truth2_doc(v: bool) -> dict:
    return {"truth": bool(v)}


# ---------------------------------------------------------------------------
# readers


def _resolve(ref: Any, parse: Callable, anchor: Path | None, what: str):
    if isinstance(ref, Mapping):
        return parse(ref, anchor=anchor)
    if isinstance(ref, str):
        path = Path(ref)
        if anchor is not None and not path.is_absolute():
            path = anchor / path
        return parse(load_json(path), anchor=path.parent)
    raise InvalidDocument(f"{what}: expected an inline document or a path string")


def load_json(path: Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except FileNotFoundError:
        raise InvalidDocument(f"{path}: file not found") from None
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InvalidDocument(f"{path}: top-level value must be an object")
    return doc


def parse_poset(doc: Mapping, *, close: bool = False, anchor: Path | None = None) -> FinPoset:
    _need(doc, "elements", "poset")
    return build_poset(doc["elements"], doc.get("leq", ()), close=close)


def parse_part(
    doc: Mapping,
    base: FinPoset | None = None,
    *,
    cls=po.Part,
    anchor: Path | None = None,
) -> po.Part:
    if base is None:
        _need(doc, "base", "part")
        base = _resolve(doc["base"], parse_poset, anchor, "part base")
    _need(doc, "members", "part")
    return cls(base, frozenset(doc["members"]))


def parse_monotone(doc: Mapping, *, anchor: Path | None = None) -> po.MonotoneMap:
    for key in ("dom", "cod", "map"):
        _need(doc, key, "monotone map")
    dom = _resolve(doc["dom"], parse_poset, anchor, "map domain")
    cod = _resolve(doc["cod"], parse_poset, anchor, "map codomain")
    return po.monotone_map(dom, cod, doc["map"])


def parse_category(doc: Mapping, *, anchor: Path | None = None) -> FinCategory:
    _need(doc, "objects", "category")
    return validate_category(doc)


def parse_functor(
    doc: Mapping,
    dom: FinCategory | None = None,
    cod: FinCategory | None = None,
    *,
    anchor: Path | None = None,
) -> FinFunctor:
    from .fincat import build_functor

    if dom is None:
        _need(doc, "dom", "functor")
        dom = _resolve(doc["dom"], parse_category, anchor, "functor domain")
    if cod is None:
        _need(doc, "cod", "functor")
        cod = _resolve(doc["cod"], parse_category, anchor, "functor codomain")
    _need(doc, "obj", "functor")
    return build_functor(dom, cod, doc["obj"], doc.get("mor", {}))


def parse_presheaf(
    doc: Mapping, base: FinCategory | None = None, *, anchor: Path | None = None
) -> ct.Presheaf:
    if base is None:
        _need(doc, "base", "presheaf")
        base = _resolve(doc["base"], parse_category, anchor, "presheaf base")
    variance = doc.get("variance", "contra")
    if variance not in ("contra", "co"):
        raise InvalidDocument(f"presheaf variance must be 'contra' or 'co', got {variance!r}")
    builder = ct.copresheaf if variance == "co" else ct.presheaf
    return builder(base, doc.get("sets", {}), doc.get("actions", {}))


def parse_partover(
    doc: Mapping, base: FinCategory | None = None, *, anchor: Path | None = None
) -> ct.PartOver:
    from .fincat import build_functor

    if base is None:
        _need(doc, "base", "part over a category")
        base = _resolve(doc["base"], parse_category, anchor, "part base")
    _need(doc, "total", "part over a category")
    total = _resolve(doc["total"], parse_category, anchor, "part total")
    proj_doc = doc.get("proj", {})
    _need(proj_doc, "obj", "part projection")
    proj = build_functor(total, base, proj_doc["obj"], proj_doc.get("mor", {}))
    return ct.part_over(proj)


def _need(doc: Mapping, key: str, what: str) -> None:
    if key not in doc:
        raise InvalidDocument(f"{what}: missing required key {key!r}")
