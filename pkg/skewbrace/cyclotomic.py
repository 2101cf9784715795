""" Truncations of the ring Z_p[w], w a primitive p-th root of unity, and the
braces of maximal class built on them.

The additive group of Z_p[w] / p^k is free over Z/p^k on 1, w, ..., w^(p-2),
so it is the group p:[k,...,k] of rank p - 1, with w acting by the companion
matrix of the p-th cyclotomic polynomial.  The gamma function is
``gamma(g) = w^c(g)``, c the coefficient sum mod p, whose kernel H is the
image of the maximal ideal (w - 1). """

import timeit
import numpy as np
from sympy import Matrix, Poly, cyclotomic_poly, eye, symbols

from .brace import Brace, omega_circle_is_subgroup, order_histogram_circle
from .errors import InvariantError, SpecError
from .gamma import gamma_from_kernel_hom
from .holomorph import HolElement
from .morphisms import (EndoMatrix, validate_endo, to_automorphism, compose, endo_add,
                        endo_sub, endo_scale, endo_power, is_automorphism, apply)
from .params import RunConfig
from .pgroup import GroupSpec, Subgroup, element_order, is_prime, order_histogram
from .report import Report, PASS, FAIL, VACUOUS, PAPER_GAP, INFO, log


def companion_rows(p):
    """ Integer companion matrix of the p-th cyclotomic polynomial, column j
    being the image of w^j """
    x = symbols('x')
    coeffs = [int(a) for a in Poly(cyclotomic_poly(p, x), x).all_coeffs()]
    d = len(coeffs) - 1
    # monic: x^d + a_(d-1) x^(d-1) + ... + a_0, listed from the top
    low = list(reversed(coeffs[1:]))
    rows = [[0] * d for _ in range(d)]
    for j in range(d - 1):
        rows[j + 1][j] = 1
    for i in range(d):
        rows[i][d - 1] = -low[i]
    return rows


class TruncatedCyclotomicRing(object):
    """ Z_p[w] / p^k as an abelian group with the action of w.  The
    identities that make it the quotient by I^(k(p-1)) are verified by
    ``verify`` (``build_ring`` does so on construction). """

    def __init__(self, p, k):
        p, k = int(p), int(k)
        if not is_prime(p):
            raise SpecError("Invalid p: %s is not prime" % p)
        if k < 1:
            raise SpecError("Invalid k: %s (must be >= 1)" % k)
        self._p = p
        self._k = k
        self._spec = GroupSpec(p, [k] * (p - 1))
        self._companion = companion_rows(p)
        self._omega = to_automorphism(validate_endo(self._companion, self._spec))
        self._coeffs = (1,) * (p - 1)

    @property
    def p(self):
        return self._p

    @property
    def k(self):
        return self._k

    @property
    def spec(self):
        return self._spec

    @property
    def omega(self):
        """ Multiplication by w, the automorphism alpha """
        return self._omega

    @property
    def u(self):
        """ The ring identity 1 """
        return self._spec.basis()[0]

    @property
    def coeffs(self):
        """ Coefficients of c, the coefficient sum mod p """
        return self._coeffs

    @property
    def order_H(self):
        return self._p ** (self._k * (self._p - 1) - 1)

    def c(self, g):
        return sum(g.coords) % self._p

    def in_H(self, g):
        return self.c(g) == 0

    @property
    def H(self):
        """ ker c as a materialized subgroup """
        if not hasattr(self, '_H'):
            X = self._spec.elements_array
            indices = np.nonzero(X.sum(axis=1) % self._p == 0)[0]
            self._H = Subgroup(self._spec, indices)
        return self._H

    @property
    def unit(self):
        """ U with (w - 1)^(p-1) = p U, computed over the integers """
        if not hasattr(self, '_unit'):
            D = (Matrix(self._companion) - eye(self._p - 1)) ** (self._p - 1)
            if any(int(x) % self._p for x in D):
                raise InvariantError("(w - 1)^(p-1) is not divisible by p")
            rows = [[int(D[i, j]) // self._p for j in range(D.cols)] for i in range(D.rows)]
            self._unit = validate_endo(rows, self._spec)
        return self._unit

    def invariants(self):
        """ (name, holds, detail) for every defining identity """
        p = self._p
        G = self._spec
        W = self._omega
        one = EndoMatrix.identity(G)
        checks = []
        checks.append(('w^p = 1', endo_power(W, p).is_identity(), 'order of w divides %s' % p))
        total = EndoMatrix.zero(G)
        for i in range(p):
            total = endo_add(total, endo_power(W, i))
        checks.append(('Phi_p(w) = 0', total == EndoMatrix.zero(G), '1 + w + ... + w^(p-1) = 0'))
        U = self.unit
        lhs = endo_power(endo_sub(W, one), p - 1)
        checks.append(('(w - 1)^(p-1) = p U', lhs == endo_scale(p, U), 'U = %s' % U))
        checks.append(('U invertible', is_automorphism(U), 'so I^(k(p-1)) = p^k E'))
        # c(wx) = c(x): every column of w sums to 1 mod p
        column_sums = [sum(row[j] for row in W.rows) % p for j in range(G.rank)]
        checks.append(('H is w-invariant', all(s == 1 % p for s in column_sums),
                       'column sums %s mod %s' % (column_sums, p)))
        checks.append(('|G : H| = p', self.c(self.u) == 1 % p,
                       '|H| = %s^%s' % (p, self._k * (p - 1) - 1)))
        return checks

    def verify(self):
        for name, ok, detail in self.invariants():
            if not ok:
                raise InvariantError("Ring invariant failed for p=%s, k=%s: %s (%s)" %
                                     (self._p, self._k, name, detail))
        return self

    def invariants_report(self):
        report = Report('ring')
        for name, ok, detail in self.invariants():
            report.check(name, ok, detail)
        return report

    def __repr__(self):
        return 'TruncatedCyclotomicRing(p=%s, k=%s)' % (self._p, self._k)


def build_ring(p, k):
    return TruncatedCyclotomicRing(p, k).verify()


def build_example_brace(R, params=None):
    """ The brace whose gamma has kernel H and sends u to w """
    gamma = gamma_from_kernel_hom(R.spec, R.coeffs, 1, R.omega, params)
    return Brace(R.spec, gamma)


## ELEMENT SWEEPS ##

def _exhaustive(R, params):
    return R.spec.order <= params.exhaustive_elements_order


def elements_in_H(R, params, inside=True):
    """ Elements of H (or of G - H): all of them up to
    ``exhaustive_elements_order``, otherwise a seeded uniform sample of
    ``n_sample_elements``.  Returns (elements, description). """
    G = R.spec
    p = R.p
    if _exhaustive(R, params):
        X = G.elements_array
        keep = (X.sum(axis=1) % p == 0) == inside
        elements = [G.element(x) for x in X[keep].tolist()]
        return elements, 'all %s elements %s H' % (len(elements), 'of' if inside else 'outside')
    rng = np.random.default_rng(params.seed)
    X = G.random_coords(rng, params.n_sample_elements)
    shifts = rng.integers(1, p, size=params.n_sample_elements) if p > 2 else \
        np.ones(params.n_sample_elements, dtype=np.int64)
    elements = []
    for x, s in zip(X.tolist(), shifts.tolist()):
        g = G.element(x)
        c = R.c(g)
        if inside:
            g = g - c * R.u
        elif c == 0:
            g = g + s * R.u
        elements.append(g)
    return elements, '%s random elements %s H' % (len(elements), 'of' if inside else 'outside')


def _circle_orders(b, R, elements, params):
    if _exhaustive(R, params):
        orders = b.circle_orders(params)
        return [int(orders[g.index]) for g in elements]
    return [b.circle_order(g) for g in elements]


def outside_order_check(b, R, params=None):
    """ Every element outside H has circle order p """
    params = params or RunConfig()
    report = Report('outside H')
    if params.logging:
        t0 = timeit.default_timer()
        log(params, "outside_order_check: p=%s, k=%s..." % (R.p, R.k))
    elements, swept = elements_in_H(R, params, inside=False)
    orders = _circle_orders(b, R, elements, params)
    bad = [g for g, n in zip(elements, orders) if n != R.p]
    report.check('circle order p outside H', not bad, swept, witness=bad[0] if bad else None)
    report.data['checked'] = len(elements)
    if params.logging:
        t1 = timeit.default_timer()
        log(params, "outside_order_check: done (%s s)" % (t1 - t0))
    return report


def noncommuting_witness(b, R):
    """ (u, h) with h in H and u o h != h o u, searched among
    h = (w - 1)^j u """
    W1 = endo_sub(R.omega, EndoMatrix.identity(R.spec))
    h = R.u
    for _ in range(R.k * (R.p - 1)):
        h = apply(W1, h)
        if h.is_zero():
            break
        if not b.commutes(R.u, h):
            return R.u, h
    return None


def verify_example_statements(b, R, params=None):
    """ (1) (G, o) is non-abelian; (2) orders agree on H; (3) outside H the
    additive order is p^k and the circle order p; H has index p. """
    params = params or RunConfig()
    p, k = R.p, R.k
    G = R.spec
    report = Report('example')

    if params.logging:
        t0 = timeit.default_timer()
        log(params, "verify_example_statements: p=%s, k=%s..." % (p, k))

    witness = noncommuting_witness(b, R)
    if witness is not None:
        report.add('(G,o) non-abelian', PASS, 'u o h != h o u', witness='u=%s, h=%s' % witness)
    elif p == 2:
        report.add('(G,o) non-abelian', PAPER_GAP, 'circle group abelian')
    elif k == 1:
        report.add('(G,o) non-abelian', INFO, 'k = 1: not claimed, no witness found')
    else:
        report.add('(G,o) non-abelian', FAIL, 'no non-commuting pair (u, h) found')

    inside, inside_swept = elements_in_H(R, params, inside=True)
    circle = _circle_orders(b, R, inside, params)
    bad = [h for h, n in zip(inside, circle) if element_order(h) != n]
    report.check('orders agree on H', not bad, inside_swept, witness=bad[0] if bad else None)

    outside, swept = elements_in_H(R, params, inside=False)
    circle = _circle_orders(b, R, outside, params)
    bad = [g for g, n in zip(outside, circle)
           if element_order(g) != p ** k or n != p]
    detail = '(+)-order %s and (o)-order %s over %s' % (p ** k, p, swept)
    if k == 1:
        detail += ' (k = 1: both orders are p)'
    report.check('orders outside H', not bad, detail, witness=bad[0] if bad else None)

    index_ok = R.c(R.u) == 1 % p
    if G.order <= params.max_materialized:
        index_ok = index_ok and R.H.order * p == G.order
    report.check('H maximal', index_ok, '|G : H| = %s' % p)

    report.check('gamma(u) = w', b.gamma(R.u) == R.omega, 'gamma(u) = %s' % b.gamma(R.u))
    bad = [h for h in inside if not b.gamma(h).is_identity()]
    report.check('gamma trivial on H', not bad, inside_swept,
                 witness=bad[0] if bad else None)

    if R.order_H <= 3 ** 5 and G.order <= params.max_materialized:
        S = R.H.indices
        add = G.index(G.add_array(G.coords(S)[:, np.newaxis, :], G.coords(S)[np.newaxis, :, :])
                      .reshape(-1, G.rank)).reshape(len(S), len(S))
        same = np.array_equal(b.circle_array(S[:, np.newaxis], S[np.newaxis, :]), add)
        report.check('o = + on H', same, 'all %s pairs of H' % len(S) ** 2)

    if k == 1:
        report.add('Omega_i(G,o) not subgroups', VACUOUS, 'no i with 0 < i < k')
    elif G.order <= params.exhaustive_elements_order:
        subgroups = [i for i in range(1, k) if omega_circle_is_subgroup(b, i, params)]
        detail = 'for 0 < i < %s' % k
        if not subgroups:
            report.add('Omega_i(G,o) not subgroups', PASS, detail)
        elif p == 2:
            report.add('Omega_i(G,o) not subgroups', PAPER_GAP,
                       'Omega_%s(G,o) is a subgroup' % subgroups[0])
        else:
            report.add('Omega_i(G,o) not subgroups', FAIL, detail,
                       witness='i=%s' % subgroups[0])
    else:
        report.add('Omega_i(G,o) not subgroups', INFO,
                   'not checked: |G| > %s' % params.exhaustive_elements_order)

    if params.logging:
        t1 = timeit.default_timer()
        log(params, "verify_example_statements: done (%s s)" % (t1 - t0))
    return report


def conjugation_identity_check(b, R, params=None):
    """ u^-1 o h o u = w h for every h in H """
    params = params or RunConfig()
    report = Report('conjugation')
    u_inv = b.circle_inverse(R.u)
    inside, swept = elements_in_H(R, params, inside=True)
    bad = [h for h in inside
           if b.circle(b.circle(u_inv, h), R.u) != apply(R.omega, h)]
    report.check('u^-1 o h o u = w h', not bad, swept, witness=bad[0] if bad else None)
    return report


def maximal_class_check(R, params=None):
    """ Every (alpha^i, g) with 0 < i < p has order p in Hol(G) """
    params = params or RunConfig()
    report = Report('maximal class')
    G = R.spec
    if G.order <= params.exhaustive_elements_order:
        elements, swept = G.elements(), 'all %s elements' % G.order
    else:
        rng = np.random.default_rng(params.seed)
        elements = [G.element(x) for x in G.random_coords(rng, params.n_sample_elements).tolist()]
        swept = '%s random elements' % len(elements)
    bad = None
    alpha = R.omega
    for i in range(1, R.p):
        for g in elements:
            if HolElement(alpha, g).order() != R.p:
                bad = HolElement(alpha, g)
                break
        if bad is not None:
            break
        alpha = compose(alpha, R.omega)
    report.check('(alpha^i, g) has order p', bad is None,
                 '0 < i < %s over %s' % (R.p, swept), witness=bad)
    return report


def histogram_contrast_check(b, R, params=None):
    """ At rank p - 1 the order histograms of (G, +) and (G, o) differ
    (for odd p and k > 1): the small rank bound is sharp """
    params = params or RunConfig()
    report = Report('histograms')
    G = R.spec
    if G.order > params.max_materialized:
        report.add('histograms differ', INFO, 'not computed: |G| > %s' % params.max_materialized)
        return report
    h_add = order_histogram(G, params)
    h_circ = order_histogram_circle(b, params)
    report.data['histograms'] = (h_add, h_circ)
    detail = '%s vs %s' % (h_add, h_circ)
    if R.p == 2 or R.k == 1:
        report.add('histograms differ', INFO, detail + ' (not asserted for p = 2 or k = 1)')
    else:
        report.check('histograms differ', h_add != h_circ, detail)
    return report
