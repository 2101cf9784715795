""" Gamma functions G -> Aut(G).

A gamma function satisfies the functional equation

    gamma(h^gamma(g) + g) = gamma(h) gamma(g)

(products in the right-action order of ``morphisms.compose``) and defines
the circle operation ``h o g = h^gamma(g) + g``.  Two encodings exist: an
explicit table over all of G, and the kernel-homomorphism encoding
``gamma(g) = A^c(g)`` for a linear functional ``c: G -> Z/p^m`` and an
automorphism A with ``A^(p^m) = 1`` and ``c(Ax - x) = 0``. """

import timeit
import numpy as np

from .errors import SpecError, SizeBoundError, GammaError
from .morphisms import (EndoMatrix, to_automorphism, compose,
                        endo_power, validate_endo)
from .params import RunConfig
from .pgroup import GroupElement, MAX_MATERIALIZED
from .parallel import run_chunks
from .report import Report, PASS, FAIL, log


class GammaFunction(object):
    """ A map G -> Aut(G).  Construct with ``gamma_from_table``,
    ``gamma_from_kernel_hom`` or ``GammaFunction.trivial``; the functional
    equation itself is checked by ``validate_gamma``. """

    TABLE = 'table'
    KERNEL_HOM = 'kernel-hom'

    def __init__(self, spec, encoding, table=None, coeffs=None, log_modulus=None,
                 automorphism=None):
        self._spec = spec
        self._encoding = encoding
        if encoding == GammaFunction.TABLE:
            self._table = tuple(table)
        elif encoding == GammaFunction.KERNEL_HOM:
            self._coeffs = tuple(int(x) for x in coeffs)
            self._log_modulus = int(log_modulus)
            self._automorphism = automorphism
            # A^0, ..., A^(p^m - 1)
            powers = [to_automorphism(EndoMatrix.identity(spec))]
            for _ in range(self.modulus - 1):
                powers.append(compose(powers[-1], automorphism))
            self._powers = tuple(powers)
        else:
            raise ValueError("Invalid encoding: %s" % encoding)

    @staticmethod
    def trivial(spec):
        """ gamma = id everywhere, so that o coincides with + """
        return gamma_from_kernel_hom(spec, (0,) * spec.rank, 1,
                                     EndoMatrix.identity(spec))

    @property
    def spec(self):
        return self._spec

    @property
    def encoding(self):
        return self._encoding

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def log_modulus(self):
        return self._log_modulus

    @property
    def modulus(self):
        """ p^m, the order of the target of c """
        return self._spec.p ** self._log_modulus

    @property
    def automorphism(self):
        return self._automorphism

    @property
    def table(self):
        return self._table

    def c(self, g):
        """ Value of the kernel functional, in [0, p^m) """
        return sum(a * x for a, x in zip(self._coeffs, g.coords)) % self.modulus

    def __call__(self, g):
        if not isinstance(g, GroupElement) or g.spec != self._spec:
            raise SpecError("Mismatched groups: %s and %s" %
                            (self._spec, getattr(g, 'spec', g)))
        if self._encoding == GammaFunction.TABLE:
            return self._table[g.index]
        return self._powers[self.c(g)]

    def at_index(self, i):
        if self._encoding == GammaFunction.TABLE:
            return self._table[i]
        return self(self._spec.element_at(i))

    def in_kernel(self, g):
        return self(g).is_identity()

    def is_trivial(self):
        if self._encoding == GammaFunction.KERNEL_HOM:
            return (not any(x % self.modulus for x in self._coeffs) or
                    self._automorphism.is_identity())
        return all(A.is_identity() for A in self._table)

    ## VECTORIZED ##

    def labels_array(self, X):
        """ For an (n, rank) coordinate array: an index into ``stack`` per
        row """
        X = np.asarray(X, dtype=np.int64)
        if self._encoding == GammaFunction.TABLE:
            return self._spec.index(X)
        c = np.array(self._coeffs, dtype=np.int64) % self.modulus
        # row-wise dot product, reduced term by term
        return ((X % self.modulus) * c).sum(axis=1) % self.modulus

    @property
    def stack(self):
        """ Distinct-by-position matrices as a read-only (n, r, r) int64
        array; ``stack[labels_array(X)]`` gives gamma of every row """
        if not hasattr(self, '_stack'):
            mats = self._table if self._encoding == GammaFunction.TABLE else self._powers
            self._stack = np.array([A.rows for A in mats], dtype=np.int64).reshape(
                len(mats), self._spec.rank, self._spec.rank)
            self._stack.setflags(write=False)
        return self._stack

    @property
    def inverse_stack(self):
        """ Inverses of the matrices of ``stack``, position by position """
        if not hasattr(self, '_inverse_stack'):
            mats = self._table if self._encoding == GammaFunction.TABLE else self._powers
            self._inverse_stack = np.array([A.inverse.rows for A in mats], dtype=np.int64).reshape(
                len(mats), self._spec.rank, self._spec.rank)
            self._inverse_stack.setflags(write=False)
        return self._inverse_stack

    def matrices_array(self, X):
        """ gamma of every row of an (n, rank) coordinate array, as an
        (n, r, r) array """
        return self.stack[self.labels_array(X)]

    def matrices(self):
        """ gamma of every element, in canonical order """
        if not hasattr(self, '_matrices'):
            self._matrices = self.matrices_array(self._spec.elements_array)
            self._matrices.setflags(write=False)
        return self._matrices

    def __eq__(self, other):
        """ Equal as functions on G (encodings may differ) """
        if not isinstance(other, GammaFunction) or self._spec != other._spec:
            return False
        if (self._encoding == other._encoding == GammaFunction.KERNEL_HOM and
                self._coeffs == other._coeffs and
                self._log_modulus == other._log_modulus and
                self._automorphism == other._automorphism):
            return True
        return bool(np.array_equal(self.matrices(), other.matrices()))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._spec)

    def __repr__(self):
        if self._encoding == GammaFunction.KERNEL_HOM:
            return 'GammaFunction(%s, c=%s mod %s^%s, A=%s)' % (
                self._spec, self._coeffs, self._spec.p, self._log_modulus,
                self._automorphism)
        return 'GammaFunction(%s, table)' % self._spec


def gamma_from_table(G, table, params=None):
    """ Build a table-encoded gamma function.  ``table`` is a dict keyed by
    ``GroupElement`` or a list in canonical element order; its values are
    matrices (lists of rows or ``EndoMatrix``). """
    params = params or RunConfig()
    if G.order > params.exhaustive_pairs_order:
        raise SizeBoundError('|G| for a table-encoded gamma', G.order,
                             params.exhaustive_pairs_order)
    if isinstance(table, dict):
        rows = [None] * G.order
        for g, M in table.items():
            if g.spec != G:
                raise SpecError("Mismatched groups: %s and %s" % (g.spec, G))
            rows[g.index] = M
        missing = [i for i, M in enumerate(rows) if M is None]
        if missing:
            raise SpecError("Invalid gamma table: no entry for %s" %
                            G.element_at(missing[0]))
        table = rows
    table = list(table)
    if len(table) != G.order:
        raise SpecError("Invalid gamma table: %s entries for |G| = %s" %
                        (len(table), G.order))
    autos = []
    for M in table:
        if not isinstance(M, EndoMatrix):
            M = validate_endo(M, G)
        elif M.spec != G:
            raise SpecError("Mismatched groups: %s and %s" % (M.spec, G))
        autos.append(to_automorphism(M))
    return GammaFunction(G, GammaFunction.TABLE, table=autos)


def validate_functional(G, coeffs, log_modulus):
    """ c: G -> Z/p^m is well defined iff p^max(0, m - e_i) divides c_i """
    coeffs = tuple(int(x) for x in coeffs)
    if len(coeffs) != G.rank:
        raise SpecError("Invalid functional: %s coefficients for %s" % (len(coeffs), G))
    if log_modulus < 1:
        raise SpecError("Invalid functional modulus: %s^%s" % (G.p, log_modulus))
    modulus = G.p ** log_modulus
    for i, (x, e) in enumerate(zip(coeffs, G.exponents)):
        d = G.p ** max(0, log_modulus - e)
        if x % d:
            raise SpecError("Invalid functional on %s: coefficient %s = %s is not "
                            "divisible by %s" % (G, i + 1, x, d))
    return tuple(x % modulus for x in coeffs)


def gamma_from_kernel_hom(G, coeffs, log_modulus, A, params=None):
    """ gamma(g) = A^c(g) for c = ``coeffs`` taken mod p^``log_modulus``.

    Requires ``A^(p^m) = 1`` (so gamma is a homomorphism from (G, +)) and
    ``Ax - x in ker c`` for all x.  The latter is linear in x, so checking
    it on the standard basis is exact; up to ``exhaustive_pairs_order`` it is
    also swept over every element, above it over a random sample. """
    params = params or RunConfig()
    coeffs = validate_functional(G, coeffs, log_modulus)
    if not isinstance(A, EndoMatrix):
        A = validate_endo(A, G)
    if A.spec != G:
        raise SpecError("Mismatched groups: %s and %s" % (A.spec, G))
    A = to_automorphism(A)
    modulus = G.p ** log_modulus
    if modulus > MAX_MATERIALIZED:
        raise SizeBoundError('functional modulus', modulus, MAX_MATERIALIZED)
    if not endo_power(A, modulus).is_identity():
        raise GammaError("Invalid kernel-hom gamma: A^%s != 1 for A = %s" % (modulus, A))

    def premise_fails(X):
        D = (A.apply_array(X) - X) % G.moduli_array
        vals = ((D % modulus) * np.array(coeffs, dtype=np.int64)).sum(axis=1) % modulus
        bad = np.nonzero(vals)[0]
        return G.element(X[bad[0]].tolist()) if len(bad) else None

    # basis vectors, exact in python integers
    for b in G.basis():
        d = A.apply(b) - b
        if sum(x * y for x, y in zip(coeffs, d.coords)) % modulus:
            raise GammaError("Invalid kernel-hom gamma: Ax - x not in ker c", witness=b)

    if G.order <= params.exhaustive_pairs_order:
        X = G.elements_array
    elif G.exponent <= MAX_MATERIALIZED:
        X = G.random_coords(np.random.default_rng(params.seed), params.n_sample_elements)
    else:
        X = None
    if X is not None:
        witness = premise_fails(X)
        if witness is not None:
            raise GammaError("Invalid kernel-hom gamma: Ax - x not in ker c",
                             witness=witness)
    return GammaFunction(G, GammaFunction.KERNEL_HOM, coeffs=coeffs,
                         log_modulus=log_modulus, automorphism=A)


def functional_equation_holds(gamma, h, g):
    """ Scalar check of gamma(h^gamma(g) + g) == gamma(h) gamma(g) """
    return gamma(gamma(g).apply(h) + g) == compose(gamma(h), gamma(g))


def _functional_equation_chunk(gamma, start, stop):
    """ First failing pair (h, g) with g in [start, stop), as indices """
    spec = gamma.spec
    X = spec.elements_array
    mods = spec.moduli_array
    M = gamma.matrices()
    n, r = spec.order, spec.rank
    block = max(1, 2 ** 20 // (n * r * r))
    for g0 in range(start, stop, block):
        g1 = min(stop, g0 + block)
        Mg = M[g0:g1]
        Y = (np.einsum('sij,nj->sni', Mg, X) + X[g0:g1, np.newaxis, :]) % mods
        lhs = M[spec.index(Y.reshape(-1, r))].reshape(g1 - g0, n, r, r)
        # gamma(h) gamma(g) is the matrix product gamma(g) . gamma(h)
        rhs = np.einsum('sij,njk->snik', Mg, M) % mods[np.newaxis, np.newaxis, :, np.newaxis]
        bad_g, bad_h = np.nonzero((lhs != rhs).any(axis=(2, 3)))
        if len(bad_g):
            return int(bad_h[0]), g0 + int(bad_g[0])
    return None


def validate_gamma(G, gamma, params=None):
    """ Check the gamma functional equation.  Failures are reported with a
    witness pair (h, g), never raised.

    ``report.data['mode']`` is one of ``exhaustive-pass``,
    ``structural+sampled-pass`` or ``fail``. """
    params = params or RunConfig()
    report = Report('gamma')
    if gamma.spec != G:
        raise SpecError("Mismatched groups: %s and %s" % (gamma.spec, G))

    if params.logging:
        t0 = timeit.default_timer()
        log(params, "validate_gamma: %s on %s..." % (gamma.encoding, G))

    report.check('gamma(0) = id', gamma(G.zero()).is_identity(),
                 'gamma(0) = %s' % gamma(G.zero()), witness=G.zero())

    witness = None
    if G.order <= params.exhaustive_pairs_order:
        for result in run_chunks(_functional_equation_chunk, (gamma,), G.order,
                                 params.workers):
            if result is not None:
                witness = tuple(G.element_at(i) for i in result)
                break
        checked = 'all %s pairs' % (G.order ** 2)
        mode = 'exhaustive'
    else:
        if gamma.encoding != GammaFunction.KERNEL_HOM:
            raise SizeBoundError('|G| for a table-encoded gamma', G.order,
                                 params.exhaustive_pairs_order)
        rng = np.random.default_rng(params.seed)
        H = G.random_coords(rng, params.n_sample_pairs).tolist()
        Gs = G.random_coords(rng, params.n_sample_pairs).tolist()
        for h, g in zip(H, Gs):
            h, g = G.element(h), G.element(g)
            if not functional_equation_holds(gamma, h, g):
                witness = (h, g)
                break
        checked = 'kernel-hom premises exact, %s random pairs' % params.n_sample_pairs
        mode = 'structural+sampled'

    if witness is None:
        report.add('functional equation', PASS, checked)
        report.data['mode'] = '%s-pass' % mode
    else:
        report.add('functional equation', FAIL,
                   'gamma(h^gamma(g) + g) != gamma(h) gamma(g)',
                   witness='h=%s, g=%s' % witness)
        report.data['mode'] = 'fail'
        report.data['witness'] = witness

    if params.logging:
        t1 = timeit.default_timer()
        log(params, "validate_gamma: done (%s s)" % (t1 - t0))
    return report
