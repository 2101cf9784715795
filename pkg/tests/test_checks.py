import pytest

from skewbrace.brace import Brace
from skewbrace.checks import (check_brace_axiom, biskew_report, is_biskew, check_power_formula,
                              check_omega_containment, check_theorem_small_rank,
                              check_elementwise_orders, check_abelian_isomorphism, circle_rank,
                              two_of_three_check, sub_brace_check, subset_conditions)
from skewbrace.checks.axioms import ASSOCIATIVITY, BRACE_AXIOM, BISKEW_AXIOM, law_holds
from skewbrace.gamma import gamma_from_kernel_hom, gamma_from_table
from skewbrace.pgroup import all_subgroups, span
from skewbrace.report import PASS, FAIL, VACUOUS, INFO


@pytest.fixture
def klein_c4(klein):
    """ a o g = a^(A^g2) + g with A the shear: (G, o) is cyclic of order 4 """
    return Brace(klein, gamma_from_kernel_hom(klein, (0, 1), 1, [[1, 1], [0, 1]]))


@pytest.fixture
def broken_z4(c4):
    """ gamma(2) should be the identity """
    return Brace(c4, gamma_from_table(c4, [[[1]], [[3]], [[3]], [[3]]]))


def test_brace_axiom_exhaustive(brace32, params):
    report = check_brace_axiom(brace32, params)
    assert report.ok
    assert report[BRACE_AXIOM].detail.endswith('all 531441 triples')
    assert report.status('identity') == PASS
    assert report.status('inverses') == PASS


def test_brace_axiom_sampled(brace32, params):
    params.exhaustive_triples = 1000
    params.n_sample_triples = 2000
    report = check_brace_axiom(brace32, params)
    assert report.ok
    assert '2000 random triples' in report[ASSOCIATIVITY].detail


def test_associativity_failure_has_witness(broken_z4, params):
    report = check_brace_axiom(broken_z4, params)
    assert report.status(ASSOCIATIVITY) == FAIL
    assert report.status(BRACE_AXIOM) == PASS
    assert report[ASSOCIATIVITY].witness is not None


def test_scalar_laws_agree(brace32):
    G = brace32.spec
    a, b, c = G.element((1, 0)), G.element((2, 5)), G.element((7, 1))
    for law in (ASSOCIATIVITY, BRACE_AXIOM, BISKEW_AXIOM):
        assert law_holds(brace32, law, a, b, c)


def test_biskew(brace32, brace_z4, trivial_c9, params):
    assert is_biskew(brace32, params)
    assert is_biskew(brace_z4, params)
    assert is_biskew(trivial_c9, params)
    assert biskew_report(brace32, params).status(BISKEW_AXIOM) == PASS


def test_power_formula(brace32, klein_c4, params):
    assert check_power_formula(brace32, params).ok
    assert check_power_formula(klein_c4, params).ok


def test_omega_containment_at_rank_p_minus_1(brace32, brace_z4, params):
    for b in (brace32, brace_z4):
        report = check_omega_containment(b, params)
        assert report.ok
        assert all(report.data['containment'])
        assert all(v.status == PASS for v in report.verdicts)


def test_omega_containment_fails_above_rank_p_minus_1(klein_c4, params):
    report = check_omega_containment(klein_c4, params)
    assert report.ok
    assert report.data['containment'] == [False, True]
    assert report['Omega_1(G,+) in Omega_1(G,o)'].status == INFO


def test_small_rank_theorem(trivial_c9, params):
    report = check_theorem_small_rank(trivial_c9, params)
    assert report.status('small rank iff') == PASS
    assert report.status('histograms equal') == PASS
    assert report.data['ranks'] == (1, 1)


def test_small_rank_theorem_at_rank_p_minus_1(brace32, params):
    report = check_theorem_small_rank(brace32, params)
    assert report.ok
    assert report.status('small rank iff') == PASS
    assert report.status('histograms equal') == INFO
    assert report['rank (G,o)'].detail == '>= 2'
    h_add, h_circ = report.data['histograms']
    assert h_add == {1: 1, 3: 8, 9: 72}
    assert h_circ == {1: 1, 3: 62, 9: 18}


def test_small_rank_theorem_reports_histograms_for_p_2(klein_c4, params):
    report = check_theorem_small_rank(klein_c4, params)
    assert report.status('small rank iff') == VACUOUS
    assert report.status('histograms equal') == INFO
    detail = report['histograms equal'].detail
    assert detail == 'p = 2, not asserted: {1:1,2:3} vs {1:1,2:1,4:2}'
    assert report.data['histograms'] == ({1: 1, 2: 3}, {1: 1, 2: 1, 4: 2})


def test_circle_rank(klein_c4, params):
    assert circle_rank(klein_c4, params) == 1


def test_elementwise_orders(trivial_c9, brace32, params):
    assert check_elementwise_orders(trivial_c9, params).status('same order') == PASS
    report = check_elementwise_orders(brace32, params)
    assert report.status('same order') == INFO
    assert report.data['differing'] == 54


def test_abelian_isomorphism(trivial_c9, brace32, params):
    assert check_abelian_isomorphism(trivial_c9, params).status('isomorphic') == PASS
    assert check_abelian_isomorphism(brace32, params).status('isomorphic') == VACUOUS


def test_two_of_three_on_every_subgroup(brace32, klein_c4):
    for b in (brace32, klein_c4):
        for H in all_subgroups(b.spec):
            assert two_of_three_check(b, H).ok


def test_subset_conditions_on_a_set(brace32, ring32):
    u = ring32.u
    assert subset_conditions(brace32, [brace32.spec.zero(), u]) == (False, False, False)
    assert subset_conditions(brace32, ring32.H) == (True, True, True)


def test_sub_brace(brace32, ring32, klein_c4):
    report = sub_brace_check(brace32, ring32.H)
    assert report.status('sub-brace iff invariant') == PASS
    assert report.data['sub_brace']
    # <(1,0)> is fixed by the shear, but <(0,1)> is not
    G = klein_c4.spec
    assert sub_brace_check(klein_c4, span([G.element((1, 0))])).data['sub_brace']
    report = sub_brace_check(klein_c4, span([G.element((0, 1))]))
    assert report.ok
    assert not report.data['sub_brace']
    outside = [G.zero(), G.element((0, 1)), G.element((1, 1))]
    assert sub_brace_check(klein_c4, outside).status('sub-brace iff invariant') == VACUOUS
