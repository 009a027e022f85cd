"""
Reference Data Module

Read-only reference fixtures for N <= 4: the known counts, the value sets
C^N, the U_4 orbit sizes, the named U_4 orbit generators and the published
classification lists.

The lists are stored as sextet seeds exactly as the classification
displays write them (with every epsilon spelled out), in formula syntax.
Expanding each seed with `sextet` gives the transcribed list. Entries whose
printed form is known to be garbled are flagged verbatim_uncertain; they are
kept as printed rather than silently corrected.
"""

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from formula import FormulaError, parse_function, parse_value
from unital import P1Value, UnitalError, UnitalFn, canonical_key, sextet

logger = logging.getLogger(__name__)

FIXTURE_VERSION = "1"



@dataclass(frozen=True)
class SeedEntry:
    """One <f>_6 generator of a classification display."""
    order: int
    formula: str
    source: str
    family: str
    verbatim_uncertain: bool = False

    def function(self) -> UnitalFn:
        return parse_function(self.formula, self.order)


@dataclass(frozen=True)
class ListingExpansion:
    """Sextet expansion of the seeds of one order."""
    order: int
    functions: Mapping[str, UnitalFn]
    problems: Tuple[str, ...] = ()


def _seed(order: int, formula: str, family: str, uncertain: bool = False) -> SeedEntry:
    # source names the printed list, the block inside it and the entry
    source = f"U_{order} list, {family} block, entry <{formula}>_6"
    return SeedEntry(order, formula, source, family, uncertain)


def _over(epsilons: Tuple[str, ...], order: int, family: str,
          templates: Tuple[str, ...], uncertain: bool = False) -> List[SeedEntry]:
    return [
        _seed(order, template.format(e=f"({eps})"), family, uncertain)
        for eps in epsilons
        for template in templates
    ]


def _u2_seeds() -> List[SeedEntry]:
    family = "main"
    return [
        _seed(2, formula, family)
        for formula in ("x", "-x", "x**2", "(1+x)/2", "(1+x)/(2*x)", "(1+x)**2/(4*x)")
    ]


def _u3_seeds() -> List[SeedEntry]:
    seeds = [
        _seed(3, "x**3", "main"),
        _seed(3, "(1-ub)*x/(x-u)", "main"),
    ]
    seeds += _over(("1", "u", "ub"), 3, "main", (
        "{e}*x",
        "(1-u)/({e}*x-u)",
        "(1-u*{e}*x)/(1-{e}*x)",
        "-3*{e}*x/({e}*x-1)**2",
    ))
    return seeds


def _u4_seeds() -> List[SeedEntry]:
    pm = ("1", "-1")
    seeds = _over(pm, 4, "O(x)", (
        "{e}*x",
        "{e}*i*x",
        "i*(x+1)/({e}*(x-1))",
        "i*(x-i)/({e}*(x+i))",
        "(x+{e})/(x-i)",
        "(x+{e})/(x+i)",
    ))
    # The expanded O(x^2) listing is printed with a duplicated block.
    seeds += _over(pm, 4, "O(x^2)", (
        "{e}*x**2",
        "{e}*((x-1)/(x+1))**2",
        "{e}*((x-i)/(x+i))**2",
    ), uncertain=True)
    seeds += [
        _seed(4, formula, "O(x^4)")
        for formula in ("x**4", "((x+1)/(x-1))**4", "((x-i)/(x+i))**4")
    ]
    seeds += _over(pm, 4, "O(2x/(x^2+1))", (
        "2*{e}*x/(x**2+1)",
        "2*{e}*i*x/(x**2-1)",
        "{e}*(x**2-1)/(x**2+1)",
    ))
    seeds.append(_seed(4, "4*x**2/(x**2+1)**2", "<4x^2/(x^2+1)^2>"))
    seeds += _over(pm, 4, "O(2x/(x+1))", (
        "{e}*(x-1)/(x+1)",
        "{e}*(x-i)/(x+i)",
    ))
    # The listing writes these two with undefined shorthand for 1 -+ i.
    seeds += _over(pm, 4, "O(2x/(x+1))", (
        "w*x/(x+{e})",
        "wb*x/(x+{e})",
    ), uncertain=True)
    seeds += [
        _seed(4, formula, "O(x(x-1)/(x^2+1))")
        for formula in ("x*(x-1)/(x**2+1)", "x*(x+1)/(x**2+1)", "x*(x-i)/(x**2-1)", "x*(x+i)/(x**2-1)")
    ]
    seeds += [
        _seed(4, formula, "O(2(1+i)x/((x+1)(x+i)))")
        for formula in ("2*(1+i)*x/((x+1)*(x+i))", "2*(1-i)*x/((x+1)*(x-i))")
    ]
    return seeds


@dataclass(frozen=True)
class RefData:
    """
    The reference fixtures.

    counts and value_sets are what verification checks; orbit_sizes,
    named_generators and seeds feed the informational parts of the report.
    """
    counts: Mapping[int, int]
    value_sets: Mapping[int, Tuple[str, ...]]
    orbit_sizes: Mapping[int, Tuple[int, ...]]
    named_generators: Mapping[int, Tuple[str, ...]]
    seeds: Tuple[SeedEntry, ...] = field(default=())
    version: str = FIXTURE_VERSION

    def orders(self) -> List[int]:
        return sorted(self.counts)

    def expected_count(self, n: int) -> Optional[int]:
        return self.counts.get(n)

    def expected_values(self, n: int) -> Optional[FrozenSet[P1Value]]:
        texts = self.value_sets.get(n)
        if texts is None:
            return None
        return frozenset(parse_value(text, n) for text in texts)

    def expected_orbit_sizes(self, n: int) -> Optional[Tuple[int, ...]]:
        sizes = self.orbit_sizes.get(n)
        return None if sizes is None else tuple(sorted(sizes))

    def generators(self, n: int) -> List[UnitalFn]:
        return [parse_function(text, n) for text in self.named_generators.get(n, ())]

    def seeds_for(self, n: int) -> List[SeedEntry]:
        return [seed for seed in self.seeds if seed.order == n]

    def expand_seeds(self, n: int) -> ListingExpansion:
        """
        Expand every seed of order n into its sextet.

        Seeds that do not parse or are not unital are reported in `problems`
        instead of raising, since the listings are transcriptions.
        """
        functions: Dict[str, UnitalFn] = {}
        problems: List[str] = []
        for seed in self.seeds_for(n):
            try:
                images = sextet(seed.function())
            except (FormulaError, UnitalError) as e:
                flag = " (verbatim-uncertain)" if seed.verbatim_uncertain else ""
                problems.append(f"{seed.source}{flag}: {e}")
                logger.warning("Skipping reference seed %r: %s", seed.formula, e)
                continue
            for f in images:
                functions.setdefault(canonical_key(f), f)
        return ListingExpansion(n, MappingProxyType(functions), tuple(problems))


REFDATA = RefData(
    counts=MappingProxyType({1: 6, 2: 36, 3: 84, 4: 252}),
    value_sets=MappingProxyType({
        # <x>_6 evaluated at 0
        1: ("0", "1", "inf"),
        2: ("0", "1", "-1", "1/2", "2", "inf"),
        3: ("0", "1", "u", "-u", "ub", "-ub", "1+u", "1-u", "1+ub", "1-ub", "1/(1-u)", "1/(1-ub)", "inf"),
        4: ("0", "1", "-1", "1/2", "2", "i", "-i", "1+i", "1-i", "(1+i)/2", "(1-i)/2", "inf"),
    }),
    orbit_sizes=MappingProxyType({4: (72, 36, 18, 36, 6, 48, 24, 12)}),
    named_generators=MappingProxyType({
        4: (
            "x",
            "x**2",
            "x**4",
            "2*x/(x**2+1)",
            "4*x**2/(x**2+1)**2",
            "2*x/(x+1)",
            "x*(x-1)/(x**2+1)",
            "2*(1+i)*x/((x+1)*(x+i))",
        ),
    }),
    seeds=tuple([_seed(1, "x", "main")] + _u2_seeds() + _u3_seeds() + _u4_seeds()),
)
