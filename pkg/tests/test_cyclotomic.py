import pytest

from skewbrace.checks import check_brace_axiom, is_biskew, check_omega_containment
from skewbrace.cyclotomic import (TruncatedCyclotomicRing, companion_rows, build_ring,
                                  build_example_brace, elements_in_H, outside_order_check,
                                  noncommuting_witness, verify_example_statements,
                                  conjugation_identity_check, maximal_class_check,
                                  histogram_contrast_check)
from skewbrace.errors import SpecError
from skewbrace.gamma import validate_gamma
from skewbrace.morphisms import endo_power
from skewbrace.params import RunConfig
from skewbrace.pgroup import element_order
from skewbrace.report import PASS, INFO, VACUOUS, PAPER_GAP


def test_companion_rows():
    assert companion_rows(2) == [[-1]]
    assert companion_rows(3) == [[0, -1], [1, -1]]
    assert companion_rows(5) == [[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]


@pytest.mark.parametrize('p,k', [(4, 2), (3, 0), (1, 1)])
def test_invalid_ring(p, k):
    with pytest.raises(SpecError):
        TruncatedCyclotomicRing(p, k)


def test_ring_invariants(ring32):
    assert str(ring32.spec) == '3:[2,2]'
    assert ring32.spec.rank == ring32.p - 1
    assert ring32.order_H == 27
    assert ring32.H.order == 27
    assert ring32.unit.rows == ((0, 1), (8, 1))
    assert ring32.invariants_report().ok
    assert len(ring32.invariants()) == 6
    assert endo_power(ring32.omega, 3).is_identity()
    assert ring32.in_H(ring32.spec.element((8, 1)))
    assert not ring32.in_H(ring32.u)


def test_gamma_structure(ring32, brace32):
    assert brace32.gamma(ring32.u) == ring32.omega
    assert all(brace32.gamma(h).is_identity() for h in ring32.H)
    g = ring32.spec.element((4, 7))
    for h in ring32.H.elements()[:9]:
        assert brace32.gamma(g + h) == brace32.gamma(g)


def test_example_is_a_valid_brace(ring32, brace32, params):
    report = validate_gamma(ring32.spec, brace32.gamma, params)
    assert report.data['mode'] == 'exhaustive-pass'
    assert check_brace_axiom(brace32, params).ok
    assert is_biskew(brace32, params)


def test_example_statements_p3_k2(ring32, brace32, params):
    report = verify_example_statements(brace32, ring32, params)
    assert report.ok
    for name in ('(G,o) non-abelian', 'orders agree on H', 'orders outside H', 'H maximal',
                 'gamma(u) = w', 'gamma trivial on H', 'o = + on H',
                 'Omega_i(G,o) not subgroups'):
        assert report.status(name) == PASS, name
    assert report['gamma trivial on H'].detail == 'all 27 elements of H'
    assert report['orders agree on H'].detail == 'all 27 elements of H'


def test_noncommuting_witness(ring32, brace32):
    u, h = noncommuting_witness(brace32, ring32)
    assert u == ring32.u
    assert ring32.in_H(h)
    assert brace32.circle(u, h) != brace32.circle(h, u)


def test_outside_order(ring32, brace32, params):
    report = outside_order_check(brace32, ring32, params)
    assert report.ok
    assert report.data['checked'] == 54
    outside, _ = elements_in_H(ring32, params, inside=False)
    assert all(element_order(g) == 9 for g in outside)
    assert all(brace32.circle_order(g) == 3 for g in outside)


def test_sampled_sweeps(ring32, brace32):
    params = RunConfig()
    params.exhaustive_elements_order = 10
    params.n_sample_elements = 200
    inside, detail = elements_in_H(ring32, params, inside=True)
    assert len(inside) == 200
    assert detail == '200 random elements of H'
    assert all(ring32.in_H(h) for h in inside)
    outside, _ = elements_in_H(ring32, params, inside=False)
    assert not any(ring32.in_H(g) for g in outside)
    assert outside_order_check(brace32, ring32, params).ok
    report = verify_example_statements(brace32, ring32, params)
    assert report.ok
    assert report['gamma trivial on H'].detail == '200 random elements of H'
    again, _ = elements_in_H(ring32, params, inside=True)
    assert again == inside


def test_conjugation_and_maximal_class(ring32, brace32, params):
    assert conjugation_identity_check(brace32, ring32, params).ok
    assert maximal_class_check(ring32, params).ok


def test_histograms(ring32, brace32, params):
    report = histogram_contrast_check(brace32, ring32, params)
    assert report.status('histograms differ') == PASS
    assert report.data['histograms'] == ({1: 1, 3: 8, 9: 72}, {1: 1, 3: 62, 9: 18})
    assert check_omega_containment(brace32, params).ok


def test_p2_reports_the_abelian_circle_group(params):
    R = build_ring(2, 2)
    b = build_example_brace(R, params)
    report = verify_example_statements(b, R, params)
    assert report.ok
    assert report.status('(G,o) non-abelian') == PAPER_GAP
    assert report['(G,o) non-abelian'].detail == 'circle group abelian'
    assert report.status('Omega_i(G,o) not subgroups') == PAPER_GAP
    assert outside_order_check(b, R, params).ok
    assert maximal_class_check(R, params).ok
    assert histogram_contrast_check(b, R, params).status('histograms differ') == INFO


def test_k1_is_degenerate(params):
    R = build_ring(3, 1)
    b = build_example_brace(R, params)
    report = verify_example_statements(b, R, params)
    assert report.ok
    assert report.status('(G,o) non-abelian') == INFO
    assert report.status('Omega_i(G,o) not subgroups') == VACUOUS
    assert 'k = 1' in report['orders outside H'].detail


@pytest.mark.slow
def test_example_statements_p3_k3(params):
    R = build_ring(3, 3)
    b = build_example_brace(R, params)
    assert validate_gamma(R.spec, b.gamma, params).data['mode'] == 'exhaustive-pass'
    report = verify_example_statements(b, R, params)
    assert report.ok
    assert report.status('Omega_i(G,o) not subgroups') == PASS
    assert outside_order_check(b, R, params).data['checked'] == 729 - 243
    assert check_brace_axiom(b, params).ok
    assert is_biskew(b, params)


@pytest.mark.slow
def test_p5_k2_sampled(params):
    R = build_ring(5, 2)
    assert R.invariants_report().ok
    b = build_example_brace(R, params)
    report = validate_gamma(R.spec, b.gamma, params)
    assert report.data['mode'] == 'structural+sampled-pass'
    outside = outside_order_check(b, R, params)
    assert outside.ok
    assert outside.data['checked'] == RunConfig().n_sample_elements >= 10 ** 4
