"""
Enumerator Module

Complete enumeration of the N-unital functions U_N. Every f in U_N with
g = 1 - f can be written with shared poles and disjoint zeros as

    P - C*Q = D*R,   f = D*R/P,   g = C*Q/P,

where P, Q, R are monic products of (x - mu) over pairwise disjoint subsets
L, K, J of Gamma_N^0. The Mason-Stothers theorem bounds every degree by N,
which makes the search over (J, K, L) finite. For each search atom the pair
(C, D) is found by an exact linear solve over all coefficient rows.

On top of the enumeration this module decomposes U_N into symmetry orbits,
computes the value set C^N = {f(0)} and compares it with the conjectured
closed form.
"""

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb, factorial
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from cyclotomic import CycNum, OrderMismatch, euler_phi, galois_exponents, root_of_unity
from polyring import Poly, RootSpec, all_keys, from_factored
from unital import (
    NotUnital,
    P1Value,
    UnitalFn,
    canonical_key,
    complement,
    galois_map,
    place_maps,
    reciprocal,
    scale_sub,
    substitute,
    value_at_zero,
)

logger = logging.getLogger(__name__)

DEFAULT_CAP = 6
COST_WARNING_N = 5

# Labels of the partition: a point of Gamma_N^0 is unused or belongs to J, K or L.
UNUSED, PART_J, PART_K, PART_L = 0, 1, 2, 3


class EnumerationError(Exception):
    """Base exception for enumeration errors."""
    pass


class NotClosed(EnumerationError):
    """Raised when a symmetry image falls outside the function set."""
    pass


class CapExceeded(EnumerationError, ValueError):
    """Raised when N exceeds the configured enumeration cap."""
    pass


def degree_bound(n: int) -> int:
    """
    Largest numerator or denominator degree of an N-unital function.

    Mason-Stothers with the N + 2 places Gamma_N^0 U {infinity} gives N.
    """
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    return n


@dataclass(frozen=True)
class PartitionTriple:
    """One search atom: pairwise disjoint J (zeros of f), K (zeros of g), L (shared poles)."""
    order: int
    J: RootSpec
    K: RootSpec
    L: RootSpec

    def __post_init__(self):
        j, k, l = set(self.J.keys), set(self.K.keys), set(self.L.keys)
        if j & k or j & l or k & l:
            raise ValueError("J, K and L must be pairwise disjoint")
        bound = degree_bound(self.order)
        for name, spec in (("J", self.J), ("K", self.K), ("L", self.L)):
            if spec.order != self.order:
                raise OrderMismatch(f"{name} has order {spec.order}, expected {self.order}")
            if spec.degree > bound:
                raise ValueError(f"{name} has degree {spec.degree} > {bound}")
        if not (j or l) or not (k or l):
            raise ValueError("Both f and g must be non-constant")

    def polys(self) -> Tuple[Poly, Poly, Poly]:
        """(P, Q, R) = products over L, K, J."""
        return from_factored(self.L), from_factored(self.K), from_factored(self.J)


@dataclass
class SearchStats:
    """Counters of one enumeration run."""
    order: int
    atoms_visited: int = 0
    atoms_pruned: int = 0
    atoms_solved: int = 0
    functions: int = 0
    seconds: float = 0.0
    jobs: int = 1
    prune: bool = True

    def merge(self, other: "SearchStats") -> None:
        self.atoms_visited += other.atoms_visited
        self.atoms_pruned += other.atoms_pruned
        self.atoms_solved += other.atoms_solved

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.order,
            "atoms_visited": self.atoms_visited,
            "atoms_pruned": self.atoms_pruned,
            "atoms_solved": self.atoms_solved,
            "functions": self.functions,
            "seconds": round(self.seconds, 3),
            "jobs": self.jobs,
            "prune": self.prune,
        }


def solve_CD(P: Poly, Q: Poly, R: Poly) -> Optional[Tuple[CycNum, CycNum]]:
    """
    Solve P = C*Q + D*R for nonzero constants C, D.

    Two coefficient rows with a nonzero 2x2 minor fix (C, D) by Cramer's rule;
    every remaining row is then checked exactly. When no such pair of rows
    exists, Q and R are proportional; for monic Q, R with disjoint roots that
    means Q = R = 1, which the non-constant requirement already excludes, so
    no solution is reported.

    Args:
        P, Q, R: Monic nonzero polynomials of the same order

    Returns:
        (C, D), or None if the system is inconsistent, rank deficient, or forces C = 0 or D = 0
    """
    if not (P.order == Q.order == R.order):
        raise OrderMismatch("solve_CD needs polynomials of one order")
    if P.is_zero() or Q.is_zero() or R.is_zero():
        raise ValueError("solve_CD needs nonzero polynomials")
    top = max(P.degree, Q.degree, R.degree)
    solution = None
    for i in range(top + 1):
        qi, ri = Q.coeff(i), R.coeff(i)
        for j in range(i + 1, top + 1):
            qj, rj = Q.coeff(j), R.coeff(j)
            det = qi * rj - qj * ri
            if det.is_zero():
                continue
            pi, pj = P.coeff(i), P.coeff(j)
            c = (pi * rj - pj * ri) / det
            d = (qi * pj - qj * pi) / det
            solution = (c, d)
            break
        if solution is not None:
            break
    if solution is None:
        return None
    c, d = solution
    if c.is_zero() or d.is_zero():
        return None
    for k in range(top + 1):
        if P.coeff(k) != c * Q.coeff(k) + d * R.coeff(k):
            return None
    return c, d


def _degrees_admissible(p: int, q: int, r: int, distinct_roots: int) -> bool:
    # In P = C*Q + D*R the top degree must occur twice, and Mason-Stothers
    # bounds it by the number of distinct roots minus one.
    top = max(p, q, r)
    if top > distinct_roots - 1:
        return False
    return sorted((p, q, r))[1] == top


@lru_cache(maxsize=None)
def _exponent_vectors(length: int, bound: int) -> Tuple[Tuple[int, ...], ...]:
    """Positive integer vectors of the given length with sum <= bound."""
    return tuple(v for v in itertools.product(range(1, bound + 1), repeat=length) if sum(v) <= bound)


def assignments(n: int) -> Iterator[Tuple[int, ...]]:
    """Every labelling of Gamma_N^0 (in key order) by UNUSED, PART_J, PART_K, PART_L."""
    return itertools.product((UNUSED, PART_J, PART_K, PART_L), repeat=n + 1)


def _atoms(n: int, assignment: Sequence[int], prune: bool, stats: SearchStats) -> Iterator[PartitionTriple]:
    keys = all_keys(n)
    j_keys = [k for k, a in zip(keys, assignment) if a == PART_J]
    k_keys = [k for k, a in zip(keys, assignment) if a == PART_K]
    l_keys = [k for k, a in zip(keys, assignment) if a == PART_L]
    if not (j_keys or l_keys) or not (k_keys or l_keys):
        return
    bound = degree_bound(n)
    distinct = len(j_keys) + len(k_keys) + len(l_keys)
    for a in _exponent_vectors(len(j_keys), bound):
        J = RootSpec(n, tuple(zip(j_keys, a)))
        for b in _exponent_vectors(len(k_keys), bound):
            K = RootSpec(n, tuple(zip(k_keys, b)))
            # (K, J, L) describes the same pair {f, 1 - f}
            if K.exps < J.exps:
                continue
            for c in _exponent_vectors(len(l_keys), bound):
                stats.atoms_visited += 1
                if prune and not _degrees_admissible(sum(c), sum(b), sum(a), distinct):
                    stats.atoms_pruned += 1
                    continue
                yield PartitionTriple(n, J, K, RootSpec(n, tuple(zip(l_keys, c))))


def partition_triples(n: int, prune: bool = True) -> Iterator[PartitionTriple]:
    """All search atoms for order n in deterministic order."""
    stats = SearchStats(n, prune=prune)
    for assignment in assignments(n):
        yield from _atoms(n, assignment, prune, stats)


def estimate_search_size(n: int) -> int:
    """
    Number of search atoms before pruning and before the J/K exchange is folded.

    A part with k keys has comb(N, k) exponent vectors of sum <= N, so this is a
    multinomial sum over the part sizes.
    """
    bound = degree_bound(n)
    points = n + 1
    total = 0
    for j in range(points + 1):
        for k in range(points + 1 - j):
            for l in range(points + 1 - j - k):
                if j + l == 0 or k + l == 0:
                    continue
                rest = points - j - k - l
                ways = factorial(points) // (factorial(j) * factorial(k) * factorial(l) * factorial(rest))
                total += ways * comb(bound, j) * comb(bound, k) * comb(bound, l)
    return total


def solve_triple(triple: PartitionTriple) -> Optional[Tuple[UnitalFn, UnitalFn]]:
    """
    Solve one atom; on success return (f, g) = (D*R/P, C*Q/P) with f + g = 1.
    """
    P, Q, R = triple.polys()
    solution = solve_CD(P, Q, R)
    if solution is None:
        return None
    c, d = solution
    n = triple.order
    poles = {k: -e for k, e in triple.L.exps}
    f = UnitalFn.from_parts(n, d, {**poles, **triple.J.as_dict()})
    g = UnitalFn.from_parts(n, c, {**poles, **triple.K.as_dict()})
    return f, g


def _search_chunk(task: Tuple[int, Tuple[Tuple[int, ...], ...], bool]) -> Tuple[List[UnitalFn], SearchStats]:
    n, chunk, prune = task
    stats = SearchStats(n, prune=prune)
    found: List[UnitalFn] = []
    for assignment in chunk:
        for triple in _atoms(n, assignment, prune, stats):
            pair = solve_triple(triple)
            if pair is not None:
                stats.atoms_solved += 1
                found.extend(pair)
    return found, stats


def check_order(n: int, cap: int = DEFAULT_CAP) -> None:
    """
    Raises:
        ValueError: If n < 1
        CapExceeded: If n > cap
    """
    if n < 1:
        raise ValueError(f"N must be a positive integer, got {n}")
    if n > cap:
        raise CapExceeded(f"N={n} exceeds the enumeration cap {cap}")


def enumerate_with_stats(
    n: int, jobs: int = 1, prune: bool = True, cap: int = DEFAULT_CAP
) -> Tuple[Tuple[UnitalFn, ...], SearchStats]:
    """
    Enumerate U_n and report search counters.

    The assignment space is split into independent chunks; with jobs > 1 they
    run in a process pool. Results are merged by canonical key and sorted, so
    the output does not depend on the number of workers.

    Args:
        n: Order N
        jobs: Worker processes (1 runs inline)
        prune: Skip atoms whose degrees cannot balance (exact necessary conditions)
        cap: Largest N accepted

    Returns:
        Tuple of (functions sorted by canonical key, SearchStats)
    """
    check_order(n, cap)
    if n >= COST_WARNING_N:
        logger.warning(
            "Search space for N=%d: %d partition atoms before pruning; this may take a while",
            n, estimate_search_size(n),
        )
    started = time.perf_counter()
    jobs = max(1, jobs)
    all_assignments = tuple(assignments(n))
    chunk_count = jobs * 4 if jobs > 1 else 1
    chunks = [all_assignments[i::chunk_count] for i in range(chunk_count)]
    tasks = [(n, chunk, prune) for chunk in chunks if chunk]

    if jobs == 1:
        results = [_search_chunk(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_search_chunk, tasks))

    stats = SearchStats(n, jobs=jobs, prune=prune)
    merged: Dict[str, UnitalFn] = {}
    for found, chunk_stats in results:
        stats.merge(chunk_stats)
        for f in found:
            merged.setdefault(canonical_key(f), f)
    functions = tuple(merged[key] for key in sorted(merged))
    stats.functions = len(functions)
    stats.seconds = time.perf_counter() - started
    logger.info(
        "U_%d: %d functions from %d solved atoms (%d visited, %d pruned) in %.2fs",
        n, stats.functions, stats.atoms_solved, stats.atoms_visited, stats.atoms_pruned, stats.seconds,
    )
    return functions, stats


def enumerate_unital(n: int, jobs: int = 1, prune: bool = True, cap: int = DEFAULT_CAP) -> Tuple[UnitalFn, ...]:
    """U_n sorted by canonical key."""
    functions, _ = enumerate_with_stats(n, jobs=jobs, prune=prune, cap=cap)
    return functions


class SymmetryGroup(Enum):
    """
    Symmetry groups for orbit decomposition.

    BASIC is generated by S3 on values, x -> zeta^r x and Gal(Q(zeta_N)/Q).
    FULL adds every Moebius substitution permuting Gamma_N^0 and infinity,
    which for N = 4 is the octahedral group.
    """
    BASIC = "basic"
    FULL = "full"


@dataclass(frozen=True)
class OrbitReport:
    """One orbit of U_N under a symmetry group."""
    generator: UnitalFn
    size: int
    members: Tuple[str, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generator": str(self.generator),
            "generator_key": canonical_key(self.generator),
            "size": self.size,
        }


def symmetry_images(f: UnitalFn, group: SymmetryGroup = SymmetryGroup.FULL) -> List[UnitalFn]:
    """Images of f under a generating set: 1-f, 1/f, x -> zeta x, every sigma_k, and for FULL every place map."""
    images = [complement(f), reciprocal(f), scale_sub(f, 1)]
    images.extend(galois_map(f, k) for k in galois_exponents(f.order) if k != 1)
    if group is SymmetryGroup.FULL:
        images.extend(substitute(f, m) for m in place_maps(f.order))
    return images


def group_order(n: int, group: SymmetryGroup = SymmetryGroup.FULL) -> int:
    """Order of the symmetry group; every orbit size divides it."""
    substitutions = n if group is SymmetryGroup.BASIC else len(place_maps(n))
    return 6 * substitutions * euler_phi(n)


def orbit_decompose(
    functions: Iterable[UnitalFn], group: SymmetryGroup = SymmetryGroup.FULL
) -> List[OrbitReport]:
    """
    Partition a symmetry-closed set into orbits.

    Keys are visited in sorted order, so each orbit's generator is its
    key-minimal member and the reports come out sorted by generator key.

    Raises:
        NotClosed: If some symmetry image is missing from the set
    """
    keyed = {canonical_key(f): f for f in functions}
    visited = set()
    reports: List[OrbitReport] = []
    for key in sorted(keyed):
        if key in visited:
            continue
        members = {key}
        queue = [keyed[key]]
        while queue:
            current = queue.pop()
            try:
                images = symmetry_images(current, group)
            except NotUnital as e:
                raise NotClosed(f"{current} is not unital: {e}")
            for image in images:
                image_key = canonical_key(image)
                if image_key not in keyed:
                    raise NotClosed(f"Image {image} of {current} is missing from the set")
                if image_key not in members:
                    members.add(image_key)
                    queue.append(image)
        visited |= members
        reports.append(OrbitReport(keyed[key], len(members), tuple(sorted(members))))
    return reports


def value_set(
    n: int, functions: Optional[Iterable[UnitalFn]] = None, jobs: int = 1, cap: int = DEFAULT_CAP
) -> FrozenSet[P1Value]:
    """C^N = {f(0) : f in U_N}; pass precomputed functions to skip the enumeration."""
    if functions is None:
        functions = enumerate_unital(n, jobs=jobs, cap=cap)
    return frozenset(value_at_zero(f) for f in functions)


def sorted_values(values: Iterable[P1Value]) -> List[P1Value]:
    return sorted(values, key=P1Value.sort_key)


def _one_minus(c: P1Value) -> P1Value:
    if c.is_infinite:
        return c
    return P1Value.finite(1 - c.value)


def _invert(c: P1Value) -> P1Value:
    if c.is_infinite:
        return P1Value.finite(CycNum.zero(c.order))
    if c.value.is_zero():
        return P1Value.infinity(c.order)
    return P1Value.finite(c.value.inverse())


def value_orbit(c: P1Value) -> FrozenSet[P1Value]:
    """
    Orbit of a point of P^1 under z, 1-z, 1/z, z/(z-1), (z-1)/z, 1/(1-z).

    The six maps are generated by 1-z and 1/z; coinciding images collapse, so
    the result has 1, 2, 3 or 6 elements.
    """
    orbit = {c}
    queue = [c]
    while queue:
        current = queue.pop()
        for image in (_one_minus(current), _invert(current)):
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return frozenset(orbit)


def _base_values(n: int) -> set:
    return {
        P1Value.finite(CycNum.zero(n)),
        P1Value.finite(CycNum.one(n)),
        P1Value.infinity(n),
    }


def conjectured_value_set(n: int) -> FrozenSet[P1Value]:
    """
    The conjectured closed form of C^N.

    Even N: {0, 1, inf} with the orbits of zeta^j for j = 1..N/2.
    Odd N: {0, 1, inf} with the orbits of +-zeta^j for j = 1..(N-1)/2;
    for N = 1 the union is empty.
    """
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    values = _base_values(n)
    if n % 2 == 0:
        for j in range(1, n // 2 + 1):
            values |= value_orbit(P1Value.finite(root_of_unity(n, j)))
    else:
        for sign in (1, -1):
            for j in range(1, (n - 1) // 2 + 1):
                values |= value_orbit(P1Value.finite(root_of_unity(n, j) * sign))
    return frozenset(values)


def conjecture_bound(n: int) -> int:
    """3N for even N, 6N - 3 for odd N."""
    return 3 * n if n % 2 == 0 else 6 * n - 3


@dataclass(frozen=True)
class ConjectureReport:
    """Comparison of the computed C^N with the conjectured set; never an assertion."""
    order: int
    computed: FrozenSet[P1Value]
    conjectured: FrozenSet[P1Value]
    match: bool
    cardinality: int
    bound: int
    bound_holds: bool
    notes: Tuple[str, ...] = field(default=())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.order,
            "match": self.match,
            "cardinality": self.cardinality,
            "conjectured_cardinality": len(self.conjectured),
            "bound": self.bound,
            "bound_holds": self.bound_holds,
            "computed": [str(v) for v in sorted_values(self.computed)],
            "conjectured": [str(v) for v in sorted_values(self.conjectured)],
            "missing_from_computed": [str(v) for v in sorted_values(self.conjectured - self.computed)],
            "extra_in_computed": [str(v) for v in sorted_values(self.computed - self.conjectured)],
            "notes": list(self.notes),
        }


def conjecture_report(
    n: int, functions: Optional[Iterable[UnitalFn]] = None, jobs: int = 1, cap: int = DEFAULT_CAP
) -> ConjectureReport:
    """Compare value_set(n) with conjectured_value_set(n); a mismatch is reported, not raised."""
    computed = value_set(n, functions=functions, jobs=jobs, cap=cap)
    conjectured = conjectured_value_set(n)
    bound = conjecture_bound(n)
    notes = []
    if n == 1:
        notes.append("N=1: the union over j is empty; the conjectured set is taken to be {0, 1, inf}")
    report = ConjectureReport(
        order=n,
        computed=computed,
        conjectured=conjectured,
        match=computed == conjectured,
        cardinality=len(computed),
        bound=bound,
        bound_holds=len(computed) <= bound,
        notes=tuple(notes),
    )
    logger.info("Conjecture check N=%d: match=%s, #C^N=%d, bound=%d", n, report.match, report.cardinality, bound)
    return report
