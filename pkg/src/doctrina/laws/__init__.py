"""Instance generators, oracles, and the registry of machine-checked laws."""

from .generate import (
    POINT,
    coend_oracle,
    corpus,
    corpus_functors,
    enumerate_monotone,
    enumerate_posets,
    monotone_universe,
    poset_universe,
    sampled_maps,
)
from .registry import LAWS, NEGATIVE_CONTROLS, cat_law_names, poset_law_names, registry
from .runner import check_law, replay, run_suite, transport_reports
from .types import GenConfig, LawReport, LawSpec, SuiteResult

__all__ = [
    "POINT",
    "LAWS",
    "NEGATIVE_CONTROLS",
    "GenConfig",
    "LawReport",
    "LawSpec",
    "SuiteResult",
    "check_law",
    "coend_oracle",
    "corpus",
    "corpus_functors",
    "cat_law_names",
    "enumerate_monotone",
    "enumerate_posets",
    "monotone_universe",
    "poset_law_names",
    "poset_universe",
    "registry",
    "replay",
    "run_suite",
    "sampled_maps",
    "transport_reports",
]
