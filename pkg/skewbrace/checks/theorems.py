""" Order statistics of (G, +) against (G, o): Omega containment, the small
rank theorem, element-wise orders and the abelian isomorphism statement. """

import numpy as np

from ..brace import order_histogram_circle
from ..errors import SizeBoundError
from ..params import RunConfig
from ..pgroup import rank_abelian, order_histogram, abelian_invariants_from_histogram
from ..rank import IndexGroup, rank_general
from ..report import Report, FAIL, VACUOUS, INFO


def _log_p(n, p):
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def _orders(brace, params):
    spec = brace.spec
    spec.check_materializable(params.max_materialized)
    return spec.orders_array(), brace.circle_orders(params)


def check_omega_containment(brace, params=None):
    """ Omega_i(G, +) inside Omega_i(G, o) for every i.  Asserted when
    rank(G, +) <= p - 1, reported otherwise. """
    params = params or RunConfig()
    spec = brace.spec
    p = spec.p
    report = Report('omega containment')
    additive, circle = _orders(brace, params)
    asserted = rank_abelian(spec) <= p - 1
    top = max(_log_p(int(additive.max()), p), _log_p(int(circle.max()), p))
    holds = []
    for i in range(1, top + 1):
        bad = np.nonzero((additive <= p ** i) & (circle > p ** i))[0]
        holds.append(not len(bad))
        name = 'Omega_%s(G,+) in Omega_%s(G,o)' % (i, i)
        witness = spec.element_at(int(bad[0])) if len(bad) else None
        if asserted:
            report.check(name, not len(bad), '%s elements violate' % len(bad), witness)
        else:
            report.add(name, INFO, '%s (rank %s > p-1, not asserted)' % (
                'holds' if not len(bad) else 'fails for %s elements' % len(bad),
                rank_abelian(spec)), witness)
    report.data['containment'] = holds
    return report


def circle_rank(brace, params=None, cap=None):
    """ rank_general of (G, o) """
    params = params or RunConfig()
    return rank_general(IndexGroup.circle(brace), bound=params.rank_general_order, cap=cap)


def check_theorem_small_rank(brace, params=None):
    """ (G, +) has small rank iff (G, o) has, and then both groups have the
    same number of elements of each order.

    The circle rank is only computed up to p - 1, which is all the small
    rank verdict needs. """
    params = params or RunConfig()
    spec = brace.spec
    p = spec.p
    report = Report('small rank')
    r_add = rank_abelian(spec)
    report.add('rank (G,+)', INFO, str(r_add))
    h_add = order_histogram(spec, params)
    h_circ = order_histogram_circle(brace, params)
    report.data['histograms'] = (h_add, h_circ)

    try:
        r_circ = circle_rank(brace, params, cap=max(1, p - 1))
    except SizeBoundError as e:
        report.add('rank (G,o)', INFO, 'not computed: %s' % e)
        return report
    capped = r_circ >= p - 1
    report.add('rank (G,o)', INFO, '>= %s' % (p - 1) if capped else str(r_circ))
    report.data['ranks'] = (r_add, r_circ)

    small_add = r_add < p - 1
    small_circ = r_circ < p - 1
    if p == 2:
        report.add('small rank iff', VACUOUS, 'p = 2: small rank means rank 0')
        report.add('histograms equal', INFO, 'p = 2, not asserted: %s vs %s' % (h_add, h_circ))
        return report
    report.check('small rank iff', small_add == small_circ,
                 '(G,+) %s, (G,o) %s' % ('small' if small_add else 'not small',
                                          'small' if small_circ else 'not small'))
    if small_add and small_circ:
        report.check('histograms equal', h_add == h_circ, '%s vs %s' % (h_add, h_circ))
    else:
        report.add('histograms equal', INFO, 'not asserted: %s vs %s' % (h_add, h_circ))
    return report


def check_elementwise_orders(brace, params=None):
    """ Every element has the same order in (G, +) and (G, o).  Asserted for
    rank < p - 1, and for elementary abelian (G, +) of rank <= p - 1. """
    params = params or RunConfig()
    spec = brace.spec
    p = spec.p
    report = Report('element orders')
    additive, circle = _orders(brace, params)
    bad = np.nonzero(additive != circle)[0]
    witness = spec.element_at(int(bad[0])) if len(bad) else None
    r = rank_abelian(spec)
    elementary = spec.exponents[0] == 1
    if r < p - 1 or (elementary and r <= p - 1):
        report.check('same order', not len(bad), '%s elements differ' % len(bad), witness)
    else:
        report.add('same order', INFO, '%s elements differ (rank %s, not asserted)'
                   % (len(bad), r), witness)
    report.data['differing'] = int(len(bad))
    return report


def check_abelian_isomorphism(brace, params=None):
    """ For (G, +) of small rank with (G, o) abelian, the two groups are
    isomorphic: the invariants read off the circle histogram are G's. """
    params = params or RunConfig()
    spec = brace.spec
    report = Report('abelian isomorphism')
    if rank_abelian(spec) >= spec.p - 1:
        report.add('isomorphic', VACUOUS, 'rank %s >= p-1' % rank_abelian(spec))
        return report
    if not brace.is_circle_abelian(params):
        report.add('isomorphic', VACUOUS, '(G,o) is not abelian')
        return report
    h = order_histogram_circle(brace, params)
    try:
        exponents = abelian_invariants_from_histogram(h)
    except ValueError as e:
        report.add('isomorphic', FAIL, str(e))
        return report
    report.check('isomorphic', exponents == spec.exponents,
                 '(G,o) has invariants %s, (G,+) %s' % (list(exponents), list(spec.exponents)))
    return report
