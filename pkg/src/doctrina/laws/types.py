"""Law registry types and the generation configuration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from ..fincat import DEFAULT_BUDGET

Checker = Callable[[Mapping[str, Any]], "dict | None"]


@dataclass(frozen=True)
class LawSpec:
    """One named law with the checkers that decide it on an instance bundle.

    A checker receives a bundle holding the structural inputs (a poset or a
    monotone map; a category or a functor) and quantifies internally over
    every part slot the bundle leaves unpinned, so a failure payload can be
    replayed by pinning the offending slots.  It returns None on success or a
    dict of pinned values and both computed sides on failure.
    """

    name: str
    statement: str
    applies_to: str  # "poset" | "cat" | "both"
    poset_scope: str | None = None  # "poset" | "map"
    cat_scope: str | None = None  # "category" | "functor"
    poset_checker: Checker | None = None
    cat_checker: Checker | None = None
    kind: str = "law"  # "law" | "negative"


@dataclass
class LawReport:
    """Verdict of one law on one generated instance."""

    law: str
    doctrine: str
    instance: str
    verdict: str  # "pass" | "fail" | "skip"
    counterexample: dict | None = None
    reason: str | None = None

    def to_doc(self) -> dict:
        doc: dict[str, Any] = {
            "law": self.law,
            "doctrine": self.doctrine,
            "instance": self.instance,
            "verdict": self.verdict,
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        if self.reason is not None:
            doc["reason"] = self.reason
        return doc


@dataclass(frozen=True)
class GenConfig:
    """Instance generation parameters.

    Defaults give exhaustive poset coverage at sizes up to three and the
    fixed nine-category corpus; the four-element tier and the combinatorial
    pairings on the category side are deterministic seeded samples.
    """

    max_poset_size: int = 3
    sample_poset_size: int = 4
    sample_count: int = 50
    seed: int = 7
    budget: int = DEFAULT_BUDGET
    corpus: tuple[str, ...] = (
        "one",
        "two",
        "parallel",
        "chain3",
        "span",
        "cospan",
        "retract",
        "z2",
        "iso",
    )
    max_fiber: int = 2
    presheaf_cap: int = 10
    part_cap: int = 8
    pair_cap: int = 48


@dataclass
class SuiteResult:
    """Aggregated outcome of a suite run; order-independent and deterministic."""

    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    reports: list[LawReport] = field(default_factory=list)  # failures and skips only
    elapsed: float = 0.0

    def record(self, report: LawReport) -> None:
        bucket = self.counts.setdefault(report.law, {"pass": 0, "fail": 0, "skip": 0})
        bucket[report.verdict] += 1
        if report.verdict != "pass":
            self.reports.append(report)

    @property
    def failures(self) -> int:
        return sum(bucket["fail"] for bucket in self.counts.values())

    @property
    def checks(self) -> int:
        return sum(sum(bucket.values()) for bucket in self.counts.values())

    def to_doc(self) -> dict:
        return {
            "laws": {law: dict(bucket) for law, bucket in sorted(self.counts.items())},
            "checks": self.checks,
            "failures": self.failures,
            "reports": [r.to_doc() for r in self.reports],
        }
