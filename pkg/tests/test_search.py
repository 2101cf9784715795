import pytest

from skewbrace.checks import check_power_formula, check_omega_containment, two_of_three_check
from skewbrace.errors import SizeBoundError
from skewbrace.params import RunConfig
from skewbrace.pgroup import parse_spec, order_histogram, all_subgroups
from skewbrace.rank import IndexGroup, rank_general
from skewbrace.holomorph import HolElement, RegularSubgroup, hol_compose
from skewbrace.search import (enumerate_regular_subgroups, naive_regular_subgroups,
                              automorphisms_for_enumeration, regular_subgroup_cover,
                              _SearchTables, _Conflict, _explore_branches)

C4_HISTOGRAM = {1: 1, 2: 1, 4: 2}


@pytest.mark.parametrize('text,count', [('2:[2]', 2), ('2:[1,1]', 4)])
def test_counts_agree_with_naive_oracle(text, count, params):
    G = parse_spec(text)
    found = enumerate_regular_subgroups(G, params)
    naive = naive_regular_subgroups(G, params)
    assert len(found) == count
    assert [N.key for N in found] == [N.key for N in naive]


def test_klein_braces(klein, params):
    subgroups = enumerate_regular_subgroups(klein, params)
    fingerprints = [N.fingerprint(params) for N in subgroups]
    assert sum(fp.histogram == C4_HISTOGRAM for fp in fingerprints) == 3
    assert sum(N.is_translations() for N in subgroups) == 1
    assert all(fp.abelian for fp in fingerprints)


def test_output_is_canonical(klein, params):
    subgroups = enumerate_regular_subgroups(klein, params)
    keys = [N.key for N in subgroups]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert [N.key for N in enumerate_regular_subgroups(klein, params)] == keys


def test_worker_count_does_not_change_output(klein):
    one, two = RunConfig(), RunConfig()
    two.workers = 2
    assert ([N.key for N in enumerate_regular_subgroups(klein, one)] ==
            [N.key for N in enumerate_regular_subgroups(klein, two)])


def test_every_result_is_a_brace(params):
    for text in ('2:[2]', '2:[1,1]', '2:[3]', '3:[2]'):
        for N in enumerate_regular_subgroups(parse_spec(text), params):
            assert check_power_formula(N.brace(), params).ok


@pytest.mark.parametrize('text', ['2:[2]', '2:[3]'])
def test_orders_do_not_increase_at_rank_p_minus_1(text, params):
    for N in enumerate_regular_subgroups(parse_spec(text), params):
        report = check_omega_containment(N.brace(), params)
        assert report.ok
        assert all(report.data['containment'])


def test_orders_can_increase_above_rank_p_minus_1(klein, params):
    contained = [all(check_omega_containment(N.brace(), params).data['containment'])
                 for N in enumerate_regular_subgroups(klein, params)]
    assert not all(contained)


def test_small_rank_histograms_c9(c9, params):
    h = order_histogram(c9)
    for N in enumerate_regular_subgroups(c9, params):
        assert N.fingerprint(params).histogram == h
        assert rank_general(IndexGroup.circle(N.brace())) == 1


def test_two_of_three_small_groups(params):
    for text in ('2:[2]', '2:[1,1]', '2:[3]', '2:[2,1]', '2:[1,1,1]'):
        G = parse_spec(text)
        subsets = all_subgroups(G)
        for N in enumerate_regular_subgroups(G, params):
            b = N.brace()
            assert all(two_of_three_check(b, H).ok for H in subsets)


def test_product_outside_p_power_order_ends_branch(klein, params):
    tables = _SearchTables(klein, automorphisms_for_enumeration(klein, params))
    # the identity and the three transvections of GL(2, 2)
    assert len(tables.autos) == 4
    a, b = [i for i in range(len(tables.autos)) if i != tables.identity][:2]
    with pytest.raises(_Conflict):
        tables.compose(a, b)
    assert tables.compose(a, a) == tables.identity
    assert tables.compose(tables.identity, b) == b


@pytest.mark.parametrize('text', ['2:[1,1]', '2:[2,1]', '2:[1,1,1]', '3:[1,1]'])
def test_reduced_search_finds_every_subgroup(text, params):
    G = parse_spec(text)
    tables = _SearchTables(G, automorphisms_for_enumeration(G, params))
    unreduced = sorted(set(_explore_branches(tables, range(len(tables.autos)))))
    found = enumerate_regular_subgroups(G, params)
    assert [N.key for N in found] == [
        tuple(tables.autos[a].key for a in assign) for assign in unreduced]


def test_enumeration_is_closed_under_conjugation(klein, params):
    subgroups = enumerate_regular_subgroups(klein, params)
    keys = set(N.key for N in subgroups)
    zero = klein.zero()
    for phi in automorphisms_for_enumeration(klein, params):
        left, right = HolElement(phi.inverse, zero), HolElement(phi, zero)
        for N in subgroups:
            moved = [hol_compose(hol_compose(left, n), right) for n in N]
            assert RegularSubgroup(klein, moved, params=params).key in keys


@pytest.mark.parametrize('text', ['2:[1,1]', '2:[2,1]', '3:[1,1]'])
def test_cover_is_part_of_enumeration(text, params):
    G = parse_spec(text)
    keys = [N.key for N in enumerate_regular_subgroups(G, params)]
    cover = regular_subgroup_cover(G, params)
    assert [N.key for N in cover] == sorted(N.key for N in cover)
    assert set(N.key for N in cover) <= set(keys)
    assert sum(N.is_translations() for N in cover) == 1


@pytest.mark.parametrize('text', ['2:[2,1]', '3:[1,1]'])
def test_power_formula_on_every_brace(text, params):
    for N in enumerate_regular_subgroups(parse_spec(text), params):
        assert check_power_formula(N.brace(), params).ok


def test_bounds(params):
    with pytest.raises(SizeBoundError):
        enumerate_regular_subgroups(parse_spec('3:[1,1,1,1]'), params)
    with pytest.raises(SizeBoundError):
        automorphisms_for_enumeration(parse_spec('2:[7]'), params)
    with pytest.raises(SizeBoundError):
        naive_regular_subgroups(parse_spec('3:[2]'), params)


@pytest.mark.slow
def test_small_rank_histograms_c27(params):
    G = parse_spec('3:[3]')
    h = order_histogram(G)
    subgroups = enumerate_regular_subgroups(G, params)
    assert any(N.is_translations() for N in subgroups)
    for N in subgroups:
        assert N.fingerprint(params).histogram == h
        assert rank_general(IndexGroup.circle(N.brace())) == 1
        assert check_power_formula(N.brace(), params).ok


@pytest.mark.slow
@pytest.mark.parametrize('text', ['2:[4]', '2:[3,1]', '2:[2,2]', '2:[2,1,1]', '2:[1,1,1,1]'])
def test_two_of_three_order_16(text, params):
    G = parse_spec(text)
    subsets = all_subgroups(G)
    # conjugating N and H by the same automorphism of G preserves the conditions
    for N in regular_subgroup_cover(G, params):
        b = N.brace()
        assert all(two_of_three_check(b, H).ok for H in subsets)


@pytest.mark.slow
@pytest.mark.parametrize('text', ['3:[2,1]', '2:[4]', '2:[3,1]', '2:[2,2]', '2:[2,1,1]',
                                  '2:[1,1,1,1]', '3:[4]'])
def test_power_formula_on_every_brace_slow(text, params):
    # conjugating by an automorphism of G gives an isomorphic brace
    for N in regular_subgroup_cover(parse_spec(text), params):
        assert check_power_formula(N.brace(), params).ok
