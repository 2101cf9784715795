""" The holomorph Hol(G) = Aut(G) x| G acting on G by ``x -> x^phi + g``,
and its regular subgroups, which are the braces on G.

The element of a regular subgroup N sending 0 to g is ``(gamma(g), g)``, so
N is stored as its gamma table in canonical translation order. """

from .brace import Brace, order_histogram_circle
from .errors import SpecError
from .gamma import GammaFunction, gamma_from_table, validate_gamma
from .morphisms import EndoMatrix, to_automorphism, compose, apply
from .params import RunConfig
from .pgroup import GroupElement, abelian_invariants_from_histogram


class HolElement(object):
    """ (phi, g), acting by x -> phi(x) + g.  Immutable. """

    def __init__(self, phi, g):
        if phi.spec != g.spec:
            raise SpecError("Mismatched groups: %s and %s" % (phi.spec, g.spec))
        self._phi = to_automorphism(phi)
        self._g = g

    @staticmethod
    def identity(spec):
        return HolElement(EndoMatrix.identity(spec), spec.zero())

    @staticmethod
    def translation(g):
        """ rho(g) = (1, g) """
        return HolElement(EndoMatrix.identity(g.spec), g)

    @property
    def spec(self):
        return self._g.spec

    @property
    def phi(self):
        return self._phi

    @property
    def g(self):
        return self._g

    def __mul__(self, other):
        return hol_compose(self, other)

    def __call__(self, x):
        return hol_apply(self, x)

    def order(self):
        identity = HolElement.identity(self.spec)
        x = self
        n = 1
        while x != identity:
            x = hol_compose(x, self)
            n += 1
        return n

    def __eq__(self, other):
        return (isinstance(other, HolElement) and self._g == other._g and
                self._phi == other._phi)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._phi, self._g))

    def __repr__(self):
        return '(%s, %s)' % (self._phi, self._g)


def _check_same(a, b):
    if a.spec != b.spec:
        raise SpecError("Mismatched groups: %s and %s" % (a.spec, b.spec))


def hol_compose(a, b):
    """ First a, then b: (phi, g)(psi, h) = (phi psi, g^psi + h) """
    _check_same(a, b)
    return HolElement(compose(a.phi, b.phi), apply(b.phi, a.g) + b.g)


def hol_apply(a, x):
    if not isinstance(x, GroupElement) or x.spec != a.spec:
        raise SpecError("Mismatched groups: %s and %s" % (a.spec, getattr(x, 'spec', x)))
    return apply(a.phi, x) + a.g


def hol_inverse(a):
    phi_inv = a.phi.inverse
    return HolElement(phi_inv, -apply(phi_inv, a.g))


def nu_of(b, g):
    """ nu(g) = gamma(g) rho(g), the element of the regular subgroup of b
    sending 0 to g """
    return HolElement(b.gamma(g), g)


class Fingerprint(object):
    """ Isomorphism invariants of a regular subgroup N, i.e. of (G, o):
    order histogram, abelian flag and center order.  For abelian N the
    histogram determines the isomorphism type. """

    def __init__(self, histogram, abelian, center_order):
        self.histogram = histogram
        self.abelian = bool(abelian)
        self.center_order = int(center_order)

    def abelian_invariants(self):
        """ Exponents of N when abelian, else None """
        if not self.abelian:
            return None
        return abelian_invariants_from_histogram(self.histogram)

    def key(self):
        return (self.histogram.items(), self.abelian, self.center_order)

    def __eq__(self, other):
        return isinstance(other, Fingerprint) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return '%s\t%s\t%s' % ('abelian' if self.abelian else 'nonabelian',
                               self.histogram.to_text(), self.center_order)

    def __repr__(self):
        return 'Fingerprint(%s, abelian=%s, center=%s)' % (
            self.histogram, self.abelian, self.center_order)


class RegularSubgroup(object):
    """ A regular subgroup of Hol(G), stored as the automorphism part of its
    element over each translation, in canonical translation order.

    With ``check`` the regularity of the given elements and the closure of
    the set are verified (the latter is the gamma functional equation). """

    def __init__(self, spec, elements, check=True, params=None):
        params = params or RunConfig()
        elements = list(elements)
        if len(elements) != spec.order:
            raise SpecError("Not regular: %s elements for |G| = %s" %
                            (len(elements), spec.order))
        by_translation = [None] * spec.order
        for n in elements:
            if n.spec != spec:
                raise SpecError("Mismatched groups: %s and %s" % (n.spec, spec))
            i = n.g.index
            if by_translation[i] is not None:
                raise SpecError("Not regular: two elements send 0 to %s" % n.g)
            by_translation[i] = n.phi
        self._spec = spec
        self._gamma = gamma_from_table(spec, by_translation, params)
        if check:
            report = validate_gamma(spec, self._gamma, params)
            if not report.ok:
                raise SpecError("Not closed: %s" % report['functional equation'].witness)

    @staticmethod
    def from_gamma(gamma, params=None):
        """ Wrap a gamma function known to satisfy the functional equation """
        N = RegularSubgroup.__new__(RegularSubgroup)
        N._spec = gamma.spec
        if gamma.encoding != GammaFunction.TABLE:
            gamma = gamma_from_table(gamma.spec, [gamma.at_index(i)
                                                  for i in range(gamma.spec.order)],
                                     params)
        N._gamma = gamma
        return N

    @property
    def spec(self):
        return self._spec

    @property
    def gamma(self):
        return self._gamma

    @property
    def order(self):
        return self._spec.order

    def elements(self):
        return [HolElement(A, g) for A, g in zip(self._gamma.table, self._spec.elements())]

    def __iter__(self):
        return iter(self.elements())

    def __len__(self):
        return self.order

    def __contains__(self, n):
        return (isinstance(n, HolElement) and n.spec == self._spec and
                self._gamma(n.g) == n.phi)

    def element_at(self, g):
        """ The unique element sending 0 to g """
        return HolElement(self._gamma(g), g)

    @property
    def key(self):
        """ Canonical form: automorphism entries over the translations """
        return tuple(A.key for A in self._gamma.table)

    def is_translations(self):
        """ Whether this is rho(G) """
        return all(A.is_identity() for A in self._gamma.table)

    def brace(self):
        return Brace(self._spec, self._gamma)

    def fingerprint(self, params=None):
        return fingerprint(self, params)

    def __eq__(self, other):
        return (isinstance(other, RegularSubgroup) and self._spec == other._spec and
                self.key == other.key)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return 'RegularSubgroup(%s)' % self._spec


def gamma_to_subgroup(b, params=None):
    """ nu(G) = {(gamma(g), g)} """
    b.spec.check_materializable((params or RunConfig()).max_materialized)
    return RegularSubgroup.from_gamma(b.gamma, params)


def subgroup_to_gamma(N):
    """ The brace whose gamma reads off the automorphism part of N """
    return N.brace()


def fingerprint(N, params=None):
    """ (order histogram, abelian flag, center order) of N, computed on
    (G, o), which nu identifies with N """
    b = N.brace()
    return Fingerprint(order_histogram_circle(b, params), b.is_circle_abelian(params),
                       b.center_order(params))


def is_closed_set(elements):
    """ Direct closure test of a set of ``HolElement`` under composition """
    members = set(elements)
    return all(hol_compose(a, b) in members for a in members for b in members)
