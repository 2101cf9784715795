""" A brace (G, +, o) built from a gamma function: ``a o g = a^gamma(g) + g``.

Scalar operations work on ``GroupElement`` objects with exact integers.  The
``*_array`` methods work on arrays of canonical indices and need the group
to be materializable. """

import math
import numpy as np

from .errors import SpecError
from .morphisms import EndoMatrix, endo_add, endo_sub, endo_scale, compose, apply
from .params import RunConfig
from .parallel import run_chunks
from .pgroup import GroupElement, OrderHistogram


class Brace(object):
    """ The additive group ``spec`` with the circle operation of ``gamma``.
    Immutable. """

    def __init__(self, spec, gamma):
        if gamma.spec != spec:
            raise SpecError("Mismatched groups: %s and %s" % (gamma.spec, spec))
        self._spec = spec
        self._gamma = gamma

    @property
    def spec(self):
        return self._spec

    @property
    def gamma(self):
        return self._gamma

    @property
    def p(self):
        return self._spec.p

    def _check(self, a):
        if not isinstance(a, GroupElement) or a.spec != self._spec:
            raise SpecError("Mismatched groups: %s and %s" %
                            (self._spec, getattr(a, 'spec', a)))

    ## SCALAR ##

    def circle(self, a, g):
        self._check(a)
        self._check(g)
        return apply(self._gamma(g), a) + g

    def circle_inverse(self, g):
        """ x with x o g = g o x = 0 """
        self._check(g)
        return apply(self._gamma(g).inverse, -g)

    def circle_power_iter(self, g, n):
        """ g o g o ... o g (n factors); 0 for n = 0 """
        self._check(g)
        if n < 0:
            raise ValueError("Invalid exponent: %s" % n)
        A = self._gamma(g)
        x = self._spec.zero()
        for _ in range(n):
            x = apply(A, x) + g
        return x

    def delta(self, g):
        """ gamma(g) - 1, a plain endomorphism """
        return endo_sub(self._gamma(g), EndoMatrix.identity(self._spec))

    def circle_power_formula(self, g):
        """ g^(o p) = (p + C(p,2) d + ... + C(p,p-1) d^(p-2))(g) + d^(p-1)(g)
        with d = delta(g) """
        self._check(g)
        p = self.p
        d = self.delta(g)
        S = EndoMatrix.zero(self._spec)
        d_j = EndoMatrix.identity(self._spec)
        for j in range(p - 1):
            S = endo_add(S, endo_scale(math.comb(p, j + 1), d_j))
            d_j = compose(d_j, d)
        return apply(S, g) + apply(d_j, g)

    def circle_order(self, g):
        """ Order of g in (G, o), by repeated p-th powering """
        self._check(g)
        order = 1
        x = g
        while not x.is_zero():
            x = self.circle_power_iter(x, self.p)
            order *= self.p
        return order

    def commutes(self, a, b):
        return self.circle(a, b) == self.circle(b, a)

    ## VECTORIZED ##

    def circle_array(self, a, g):
        """ Indices of a o g for index arrays ``a`` and ``g`` (broadcast) """
        spec = self._spec
        a, g = np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                   np.asarray(g, dtype=np.int64))
        shape = a.shape
        a, g = a.ravel(), g.ravel()
        X = spec.coords(a)
        Y = spec.coords(g)
        M = self._gamma.matrices()[g]
        Z = (np.einsum('nij,nj->ni', M, X) + Y) % spec.moduli_array
        return spec.index(Z).reshape(shape)

    def circle_inverse_array(self, g):
        spec = self._spec
        g = np.asarray(g, dtype=np.int64)
        shape = g.shape
        X = spec.coords(g.ravel())
        inverses = self._gamma.inverse_stack[self._gamma.labels_array(X)]
        Z = np.einsum('nij,nj->ni', inverses, spec.neg_array(X))
        return spec.index(Z % spec.moduli_array).reshape(shape)

    def circle_power_array(self, g, n):
        """ Indices of g^(o n) for an index array ``g`` """
        spec = self._spec
        g = np.asarray(g, dtype=np.int64)
        Y = spec.coords(g)
        M = self._gamma.matrices()[g]
        X = np.zeros_like(Y)
        for _ in range(n):
            X = (np.einsum('nij,nj->ni', M, X) + Y) % spec.moduli_array
        return spec.index(X)

    def circle_orders_array(self, g=None):
        """ Circle orders of an index array (default: every element) """
        if g is None:
            g = np.arange(self._spec.order, dtype=np.int64)
        x = np.asarray(g, dtype=np.int64).copy()
        orders = np.ones(len(x), dtype=np.int64)
        live = np.nonzero(x)[0]
        while len(live):
            x[live] = self.circle_power_array(x[live], self.p)
            orders[live] *= self.p
            live = live[x[live] != 0]
        return orders

    def circle_orders(self, params=None):
        """ Circle order of every element, in canonical order """
        params = params or RunConfig()
        self._spec.check_materializable(params.max_materialized)
        chunks = run_chunks(_circle_orders_chunk, (self,), self._spec.order,
                            params.workers)
        return np.concatenate(chunks) if chunks else np.ones(0, dtype=np.int64)

    def commutator_witness(self, params=None):
        """ A pair (a, b) with a o b != b o a, or None if (G, o) is abelian """
        params = params or RunConfig()
        self._spec.check_materializable(params.max_materialized)
        for result in run_chunks(_commutator_chunk, (self,), self._spec.order,
                                 params.workers):
            if result is not None:
                return tuple(self._spec.element_at(i) for i in result)
        return None

    def is_circle_abelian(self, params=None):
        return self.commutator_witness(params) is None

    def center_order(self, params=None):
        """ |Z(G, o)| """
        params = params or RunConfig()
        self._spec.check_materializable(params.max_materialized)
        return int(sum(run_chunks(_center_chunk, (self,), self._spec.order,
                                  params.workers)))

    def __repr__(self):
        return 'Brace(%s, %r)' % (self._spec, self._gamma)


def _row_blocks(n, start, stop, width=1):
    """ Row blocks of [start, stop) holding about 2^18 / width entries of a
    row length n """
    block = max(1, 2 ** 18 // max(1, n * width))
    for a0 in range(start, stop, block):
        yield a0, min(stop, a0 + block)


def _circle_orders_chunk(brace, start, stop):
    return brace.circle_orders_array(np.arange(start, stop, dtype=np.int64))


def _commutator_chunk(brace, start, stop):
    n = brace.spec.order
    b = np.arange(n, dtype=np.int64)
    for a0, a1 in _row_blocks(n, start, stop, brace.spec.rank ** 2):
        a = np.arange(a0, a1, dtype=np.int64)[:, np.newaxis]
        bad_a, bad_b = np.nonzero(brace.circle_array(a, b) != brace.circle_array(b, a))
        if len(bad_a):
            return a0 + int(bad_a[0]), int(bad_b[0])
    return None


def _center_chunk(brace, start, stop):
    n = brace.spec.order
    b = np.arange(n, dtype=np.int64)
    count = 0
    for a0, a1 in _row_blocks(n, start, stop, brace.spec.rank ** 2):
        a = np.arange(a0, a1, dtype=np.int64)[:, np.newaxis]
        count += int((brace.circle_array(a, b) == brace.circle_array(b, a)).all(axis=1).sum())
    return count


def circle(b, a, g):
    return b.circle(a, g)


def circle_inverse(b, g):
    return b.circle_inverse(g)


def circle_power_iter(b, g, n):
    return b.circle_power_iter(g, n)


def circle_power_formula(b, g):
    return b.circle_power_formula(g)


def circle_order(b, g):
    return b.circle_order(g)


def omega_circle_indices(b, i, params=None):
    """ Sorted indices of the elements whose circle order divides p^i """
    return np.nonzero(b.circle_orders(params) <= b.p ** i)[0]


def omega_circle(b, i, params=None):
    """ The SET of elements of circle order dividing p^i, in canonical order.
    It need not be a subgroup of (G, o). """
    spec = b.spec
    return [spec.element_at(int(j)) for j in omega_circle_indices(b, i, params)]


def omega_circle_is_subgroup(b, i, params=None):
    """ Whether the circle-Omega set is closed under o (a finite set containing
    0 and closed under the operation is a subgroup) """
    S = omega_circle_indices(b, i, params)
    mask = np.zeros(b.spec.order, dtype=bool)
    mask[S] = True
    for a0, a1 in _row_blocks(len(S), 0, len(S), b.spec.rank ** 2):
        if not mask[b.circle_array(S[a0:a1, np.newaxis], S[np.newaxis, :])].all():
            return False
    return True


def order_histogram_circle(b, params=None):
    return OrderHistogram.from_orders(b.circle_orders(params))
