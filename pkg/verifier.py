"""
Verifier Module

Compares a computed U_N against the reference fixtures. Count and value-set
agreement decide the outcome; orbit sizes, named generators and the classification
listings are compared too but only produce warnings, because the listings are
transcriptions while the computed set is checked by the definitional oracle.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from enumerator import DEFAULT_CAP, NotClosed, enumerate_unital, orbit_decompose, sorted_values, value_set
from refdata import REFDATA, RefData
from unital import UnitalFn, canonical_key, render_text

logger = logging.getLogger(__name__)


@dataclass
class VerifyReport:
    """Outcome of verifying one order against the fixtures."""
    order: int
    computed_count: int
    expected_count: int
    count_match: bool
    values_match: bool
    missing_values: List[str] = field(default_factory=list)
    extra_values: List[str] = field(default_factory=list)
    orbit_sizes: List[int] = field(default_factory=list)
    expected_orbit_sizes: Optional[List[int]] = None
    generators_distinct: Optional[bool] = None
    missing_from_computed: List[str] = field(default_factory=list)
    extra_in_computed: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.count_match and self.values_match

    @property
    def orbit_sizes_match(self) -> Optional[bool]:
        if self.expected_orbit_sizes is None:
            return None
        return sorted(self.orbit_sizes) == sorted(self.expected_orbit_sizes)

    def summary_lines(self) -> List[str]:
        """One line per check, suitable for terminal output."""
        lines = [
            f"count: computed {self.computed_count}, expected {self.expected_count} "
            f"({'ok' if self.count_match else 'MISMATCH'})",
        ]
        if self.values_match:
            lines.append("values: C^%d matches" % self.order)
        else:
            lines.append(
                f"values: MISMATCH missing {self.missing_values} extra {self.extra_values}"
            )
        if self.expected_orbit_sizes is not None:
            state = "ok" if self.orbit_sizes_match else "differs"
            lines.append(f"orbits: sizes {sorted(self.orbit_sizes, reverse=True)} ({state})")
        if self.generators_distinct is not None:
            lines.append(f"generators: {'distinct orbits' if self.generators_distinct else 'NOT distinct'}")
        lines.extend(f"warning: {w}" for w in self.warnings)
        lines.append("PASSED" if self.passed else "FAILED")
        return lines

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.order,
            "passed": self.passed,
            "count_match": self.count_match,
            "computed_count": self.computed_count,
            "expected_count": self.expected_count,
            "values_match": self.values_match,
            "missing_values": self.missing_values,
            "extra_values": self.extra_values,
            "orbit_sizes": sorted(self.orbit_sizes, reverse=True),
            "expected_orbit_sizes": (
                None if self.expected_orbit_sizes is None else sorted(self.expected_orbit_sizes, reverse=True)
            ),
            "orbit_sizes_match": self.orbit_sizes_match,
            "generators_distinct": self.generators_distinct,
            "missing_from_computed": self.missing_from_computed,
            "extra_in_computed": self.extra_in_computed,
            "warnings": self.warnings,
        }


def verify(
    n: int,
    refdata: RefData = REFDATA,
    jobs: int = 1,
    functions: Optional[Iterable[UnitalFn]] = None,
    cap: int = DEFAULT_CAP,
) -> VerifyReport:
    """
    Verify U_n against the fixtures.

    Args:
        n: Order with a reference count
        refdata: Fixtures to compare against
        jobs: Worker processes for the enumeration
        functions: A precomputed U_n, skipping the enumeration

    Returns:
        VerifyReport

    Raises:
        ValueError: If the fixtures have no count for n
    """
    expected_count = refdata.expected_count(n)
    if expected_count is None:
        raise ValueError(f"No reference data for N={n}; available: {refdata.orders()}")
    if functions is None:
        functions = enumerate_unital(n, jobs=jobs, cap=cap)
    functions = list(functions)
    computed_keys = {canonical_key(f): f for f in functions}

    computed_values = value_set(n, functions=functions)
    expected_values = refdata.expected_values(n)
    if expected_values is None:
        values_match, missing_values, extra_values = True, [], []
    else:
        values_match = computed_values == expected_values
        missing_values = [str(v) for v in sorted_values(expected_values - computed_values)]
        extra_values = [str(v) for v in sorted_values(computed_values - expected_values)]

    report = VerifyReport(
        order=n,
        computed_count=len(computed_keys),
        expected_count=expected_count,
        count_match=len(computed_keys) == expected_count,
        values_match=values_match,
        missing_values=missing_values,
        extra_values=extra_values,
    )

    try:
        orbits = orbit_decompose(functions)
    except NotClosed as e:
        orbits = []
        report.warnings.append(f"orbit decomposition skipped: {e}")
    report.orbit_sizes = [orbit.size for orbit in orbits]
    expected_sizes = refdata.expected_orbit_sizes(n)
    if expected_sizes is not None and orbits:
        report.expected_orbit_sizes = list(expected_sizes)
        if not report.orbit_sizes_match:
            report.warnings.append(
                f"orbit sizes {sorted(report.orbit_sizes)} differ from reference {sorted(expected_sizes)}"
            )

    generators = refdata.generators(n)
    if generators and orbits:
        orbit_of = {key: index for index, orbit in enumerate(orbits) for key in orbit.members}
        hits = []
        for g in generators:
            key = canonical_key(g)
            if key not in orbit_of:
                report.warnings.append(f"named generator {render_text(g)} is not in U_{n}")
            else:
                hits.append(orbit_of[key])
        report.generators_distinct = len(hits) == len(generators) and len(set(hits)) == len(hits)
        if not report.generators_distinct:
            shared = [index for index, count in Counter(hits).items() if count > 1]
            report.warnings.append(f"named generators share orbits {shared}")

    expansion = refdata.expand_seeds(n)
    if expansion.functions:
        report.missing_from_computed = sorted(k for k in expansion.functions if k not in computed_keys)
        report.extra_in_computed = sorted(k for k in computed_keys if k not in expansion.functions)
        if report.missing_from_computed:
            report.warnings.append(f"{len(report.missing_from_computed)} listed functions missing from computed set")
        if report.extra_in_computed:
            report.warnings.append(f"{len(report.extra_in_computed)} computed functions absent from the listing")
    report.warnings.extend(expansion.problems)

    logger.info("Verification N=%d: %s", n, "passed" if report.passed else "failed")
    return report
