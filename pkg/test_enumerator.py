from collections import Counter

import pytest

from cyclotomic import CycNum, galois_exponents
from enumerator import (
    CapExceeded,
    NotClosed,
    PartitionTriple,
    SymmetryGroup,
    conjecture_report,
    conjectured_value_set,
    degree_bound,
    enumerate_unital,
    enumerate_with_stats,
    estimate_search_size,
    group_order,
    orbit_decompose,
    partition_triples,
    solve_CD,
    solve_triple,
    value_orbit,
    value_set,
)
from formula import parse_function, parse_value
from polyring import Poly, RootSpec, from_factored
from refdata import REFDATA
from unital import (
    canonical_key,
    complement,
    definitional_oracle,
    embed_function,
    galois_map,
    scale_sub,
    sextet,
    value_at_zero,
)

EXPECTED_COUNTS = {1: 6, 2: 36, 3: 84, 4: 252}


def values(texts, n):
    return frozenset(parse_value(t, n) for t in texts)


def key_set(functions):
    return {canonical_key(f) for f in functions}


def test_degree_bound():
    assert degree_bound(4) == 4
    assert degree_bound(3) == 3
    assert degree_bound(1) == 1
    with pytest.raises(ValueError):
        degree_bound(0)


def test_solve_cd_examples():
    x = Poly.x(2)
    one = Poly.constant(2, 1)
    C, D = solve_CD(x + one, x - one, x)
    assert C == CycNum.from_rational(2, -1)
    assert D == CycNum.from_rational(2, 2)

    C, D = solve_CD(one, x - one, x)
    assert C == CycNum.from_rational(2, -1)
    assert D == CycNum.one(2)

    assert solve_CD(one, (x - one) * (x - one), x) is None


def test_solve_triple_gives_complementary_pair():
    triple = PartitionTriple(2, RootSpec(2, ((-1, 1),)), RootSpec(2, ((0, 1),)), RootSpec(2, ((1, 1),)))
    f, g = solve_triple(triple)
    assert f == parse_function("2*x/(x+1)", 2)
    assert g == complement(f)


def test_partition_triple_validation():
    with pytest.raises(ValueError):
        PartitionTriple(2, RootSpec(2, ((0, 1),)), RootSpec(2, ((0, 1),)), RootSpec(2))
    with pytest.raises(ValueError):
        PartitionTriple(2, RootSpec(2), RootSpec(2, ((0, 1),)), RootSpec(2))
    with pytest.raises(ValueError):
        PartitionTriple(2, RootSpec(2, ((0, 3),)), RootSpec(2, ((1, 1),)), RootSpec(2))


def test_partition_triples_are_valid_and_halved():
    triples = list(partition_triples(2, prune=False))
    seen = {(t.J, t.K, t.L) for t in triples}
    for t in triples:
        assert t.polys()[0] == from_factored(t.L)
        assert t.J.exps <= t.K.exps
        if t.J != t.K:
            assert (t.K, t.J, t.L) not in seen


def test_estimate_search_size():
    # N=1: points {0, 1}; every J/K/L assignment with J u L and K u L nonempty
    assert estimate_search_size(1) == 8
    assert estimate_search_size(4) > estimate_search_size(3) > 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts(n, unital_sets):
    assert len(unital_sets[n]) == EXPECTED_COUNTS[n]


def test_u1_is_sextet_of_x(unital_sets):
    assert key_set(unital_sets[1]) == key_set(sextet(parse_function("x", 1)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pruning_does_not_change_result(n, unital_sets):
    assert key_set(enumerate_unital(n, prune=False)) == key_set(unital_sets[n])


def test_parallel_matches_inline(unital_sets):
    functions, stats = enumerate_with_stats(3, jobs=2)
    assert [canonical_key(f) for f in functions] == [canonical_key(f) for f in unital_sets[3]]
    assert stats.functions == 84
    assert stats.jobs == 2


def test_stats_counters():
    _, stats = enumerate_with_stats(2)
    assert stats.atoms_visited >= stats.atoms_pruned + stats.atoms_solved
    assert stats.atoms_solved > 0
    assert stats.to_dict()["n"] == 2


def test_deterministic_order(unital_sets):
    keys = [canonical_key(f) for f in unital_sets[2]]
    assert keys == sorted(keys)
    assert keys == [canonical_key(f) for f in enumerate_unital(2)]


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_unital(7)
    with pytest.raises(CapExceeded):
        enumerate_unital(3, cap=2)
    with pytest.raises(ValueError):
        enumerate_unital(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_member_passes_oracle(n, unital_sets):
    for f in unital_sets[n]:
        assert definitional_oracle(f)
        assert f.numerator_degree <= n and f.denominator_degree <= n


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetry_closure(n, unital_sets):
    keys = key_set(unital_sets[n])
    for f in unital_sets[n]:
        assert canonical_key(complement(f)) in keys
        assert key_set(sextet(f)) <= keys
        assert len(key_set(sextet(f))) == 6
        for r in range(n):
            assert canonical_key(scale_sub(f, r)) in keys
        for k in galois_exponents(n):
            assert canonical_key(galois_map(f, k)) in keys


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (1, 4), (2, 4)])
def test_embedding_monotonicity(m, n, unital_sets):
    keys = key_set(unital_sets[n])
    for f in unital_sets[m]:
        assert canonical_key(embed_function(f, n)) in keys


def test_u4_orbits(u4_orbits):
    assert len(u4_orbits) == 8
    assert Counter(o.size for o in u4_orbits) == Counter([72, 36, 18, 36, 6, 48, 24, 12])
    for o in u4_orbits:
        assert group_order(4) % o.size == 0
        assert o.size == len(o.members)
        assert canonical_key(o.generator) == o.members[0]
    generators = [canonical_key(o.generator) for o in u4_orbits]
    assert generators == sorted(generators)


def test_named_generators_in_distinct_orbits(u4_orbits):
    orbit_of = {key: i for i, o in enumerate(u4_orbits) for key in o.members}
    hits = [orbit_of[canonical_key(g)] for g in REFDATA.generators(4)]
    assert len(set(hits)) == 8


def test_small_orbits(unital_sets):
    for group in SymmetryGroup:
        assert [o.size for o in orbit_decompose(unital_sets[1], group)] == [6]
    basic = orbit_decompose(unital_sets[2], SymmetryGroup.BASIC)
    assert sorted(o.size for o in basic) == [6, 6, 12, 12]
    # x -> 1/x and the other place maps join the degree-1 sextets
    assert sorted(o.size for o in orbit_decompose(unital_sets[2])) == [12, 24]


def test_full_orbits_are_unions_of_basic_orbits(unital_sets):
    full = orbit_decompose(unital_sets[4])
    orbit_of = {key: i for i, o in enumerate(full) for key in o.members}
    for o in orbit_decompose(unital_sets[4], SymmetryGroup.BASIC):
        assert len({orbit_of[key] for key in o.members}) == 1


def test_orbit_sizes_divide_group_order(unital_sets):
    for n in (2, 3, 4):
        for group in SymmetryGroup:
            for o in orbit_decompose(unital_sets[n], group):
                assert group_order(n, group) % o.size == 0


def test_orbit_decompose_detects_missing_images(unital_sets):
    with pytest.raises(NotClosed):
        orbit_decompose(unital_sets[2][1:])


def test_orbit_decompose_deterministic(unital_sets, u4_orbits):
    again = orbit_decompose(reversed(unital_sets[4]))
    assert [(canonical_key(o.generator), o.members) for o in again] == \
        [(canonical_key(o.generator), o.members) for o in u4_orbits]


def test_value_sets(unital_sets):
    assert value_set(1, unital_sets[1]) == values(["0", "1", "inf"], 1)
    assert value_set(2, unital_sets[2]) == values(["0", "1", "-1", "1/2", "2", "inf"], 2)
    c4 = ["0", "1", "-1", "1/2", "2", "i", "-i", "1+i", "1-i", "(1+i)/2", "(1-i)/2", "inf"]
    assert value_set(4, unital_sets[4]) == values(c4, 4)
    c3 = ["0", "1", "u", "-u", "ub", "-ub", "1+u", "1-u", "1+ub", "1-ub", "1/(1-u)", "1/(1-ub)", "inf"]
    assert value_set(3, unital_sets[3]) == values(c3, 3)
    assert len(value_set(3, unital_sets[3])) == 11


def test_value_orbit_examples():
    assert value_orbit(parse_value("2", 2)) == values(["2", "-1", "1/2"], 2)
    assert value_orbit(parse_value("1", 4)) == values(["1", "0", "inf"], 4)
    assert value_orbit(parse_value("-u", 3)) == values(["-u", "-ub"], 3)
    assert len(value_orbit(parse_value("i", 4))) == 6


def test_conjectured_value_sets():
    assert conjectured_value_set(2) == values(["0", "1", "inf", "-1", "2", "1/2"], 2)
    assert len(conjectured_value_set(4)) == 12
    assert len(conjectured_value_set(3)) == 11
    assert conjectured_value_set(1) == values(["0", "1", "inf"], 1)


@pytest.mark.parametrize("n,cardinality,bound", [(1, 3, 3), (2, 6, 6), (3, 11, 15), (4, 12, 12)])
def test_conjecture_reports(n, cardinality, bound, unital_sets):
    report = conjecture_report(n, functions=unital_sets[n])
    assert report.match
    assert report.cardinality == cardinality
    assert report.bound == bound
    assert report.bound_holds
    assert list(report.to_dict())[:3] == ["n", "match", "cardinality"]
    assert bool(report.notes) == (n == 1)


def test_conjecture_mismatch_is_reported_not_raised(unital_sets):
    i_value = parse_value("i", 4)
    partial = [f for f in unital_sets[4] if value_at_zero(f) != i_value]
    report = conjecture_report(4, functions=partial)
    assert not report.match
    assert report.to_dict()["missing_from_computed"] == [str(i_value)]


@pytest.mark.slow
def test_conjecture_probe_n5_completes():
    report = conjecture_report(5)
    assert report.bound == 27
    assert isinstance(report.match, bool)
