""" Finite abelian p-groups presented as Z/p^e1 x ... x Z/p^er.

Elements are residue tuples.  Scalar arithmetic uses Python integers (exact
up to ``MAX_ARITHMETIC_ORDER``); sweeps over the whole group use numpy arrays
of coordinates or of canonical indices.  The canonical index of an element is
its mixed-radix value with the first coordinate most significant, so index
order is lexicographic order on coordinates. """

import re
import numpy as np

from .errors import SpecError, SizeBoundError

#: largest group whose elements may be materialized as an array
MAX_MATERIALIZED = 2 ** 24

#: largest group order for element-only arithmetic
MAX_ARITHMETIC_ORDER = 2 ** 62


def is_prime(n):
    """ Trial division """
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def valuation(a, p, e):
    """ p-adic valuation of the residue ``a`` mod p^e, with v(0) = e """
    a %= p ** e
    if a == 0:
        return e
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


class GroupSpec(object):
    """ The group Z/p^e1 x ... x Z/p^er with e1 >= ... >= er >= 1.
    Immutable. """

    def __init__(self, p, exponents):
        p = int(p)
        if not is_prime(p):
            raise SpecError("Invalid p: %s is not prime" % p)
        exponents = tuple(int(e) for e in exponents)
        if not exponents:
            raise SpecError("Invalid exponents: empty")
        for e in exponents:
            if e < 1:
                raise SpecError("Invalid exponent: %s (must be >= 1)" % e)
        self._p = p
        self._exponents = tuple(sorted(exponents, reverse=True))
        self._moduli = tuple(p ** e for e in self._exponents)
        if self.order > MAX_ARITHMETIC_ORDER:
            raise SizeBoundError('group order', self.order, MAX_ARITHMETIC_ORDER)

    ## STRUCTURE ##

    @property
    def p(self):
        return self._p

    @property
    def exponents(self):
        return self._exponents

    @property
    def moduli(self):
        """ (p^e1, ..., p^er) """
        return self._moduli

    @property
    def rank(self):
        return len(self._exponents)

    @property
    def log_order(self):
        return sum(self._exponents)

    @property
    def order(self):
        return self._p ** self.log_order

    @property
    def exponent(self):
        """ exponent of the group, p^e1 """
        return self._moduli[0]

    def __eq__(self, other):
        return (isinstance(other, GroupSpec) and
                self._p == other._p and self._exponents == other._exponents)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._p, self._exponents))

    def __str__(self):
        return '%s:[%s]' % (self._p, ','.join(str(e) for e in self._exponents))

    def __repr__(self):
        return 'GroupSpec(%r)' % str(self)

    ## ELEMENTS ##

    def element(self, coords):
        return GroupElement(self, coords)

    def zero(self):
        return GroupElement(self, (0,) * self.rank)

    def basis(self):
        """ The standard generators, one per cyclic factor """
        return [GroupElement(self, tuple(int(i == j) for j in range(self.rank)))
                for i in range(self.rank)]

    def check_materializable(self, bound=None):
        bound = MAX_MATERIALIZED if bound is None else bound
        if self.order > bound:
            raise SizeBoundError('|%s|' % self, self.order, bound)

    @property
    def moduli_array(self):
        if not hasattr(self, '_moduli_array'):
            self._moduli_array = np.array(self._moduli, dtype=np.int64)
            self._moduli_array.setflags(write=False)
        return self._moduli_array

    @property
    def elements_array(self):
        """ All elements as an (order, rank) coordinate array, in canonical
        order """
        if not hasattr(self, '_elements_array'):
            self.check_materializable()
            self._elements_array = self.coords(np.arange(self.order, dtype=np.int64))
            self._elements_array.setflags(write=False)
        return self._elements_array

    def elements(self):
        """ All elements as ``GroupElement`` objects, in canonical order """
        return [GroupElement(self, row) for row in self.elements_array.tolist()]

    def index(self, coords):
        """ Canonical indices of an (n, rank) coordinate array """
        coords = np.asarray(coords, dtype=np.int64) % self.moduli_array
        return np.ravel_multi_index(tuple(coords.T), self._moduli).astype(np.int64)

    def coords(self, indices):
        """ Coordinate array of an array of canonical indices """
        return np.stack(np.unravel_index(np.asarray(indices, dtype=np.int64),
                                         self._moduli), axis=-1).astype(np.int64)

    def element_at(self, index):
        return GroupElement(self, self.coords(np.array([index]))[0].tolist())

    def random_coords(self, rng, n):
        """ ``n`` uniformly random elements as an (n, rank) coordinate array,
        drawn from the ``numpy.random.Generator`` ``rng`` """
        return rng.integers(0, self.moduli_array, size=(n, self.rank), dtype=np.int64)

    def add_array(self, X, Y):
        return (X + Y) % self.moduli_array

    def neg_array(self, X):
        return (-X) % self.moduli_array

    def orders_array(self, X=None):
        """ Additive orders of the rows of ``X`` (default: every element) """
        if X is None:
            X = self.elements_array
        X = np.asarray(X, dtype=np.int64)
        exps = np.array(self._exponents, dtype=np.int64)
        v = np.zeros(X.shape, dtype=np.int64)
        for t in range(1, self._exponents[0] + 1):
            v += ((X % self._p ** t) == 0) & (t <= exps)[np.newaxis, :]
        return self._p ** (exps[np.newaxis, :] - v).max(axis=1)


class GroupElement(object):
    """ An element of a ``GroupSpec``, coordinates always reduced.
    Immutable. """

    def __init__(self, spec, coords):
        coords = tuple(int(a) for a in coords)
        if len(coords) != spec.rank:
            raise SpecError("Invalid element %s for group %s" % (coords, spec))
        self._spec = spec
        self._coords = tuple(a % m for a, m in zip(coords, spec.moduli))

    @property
    def spec(self):
        return self._spec

    @property
    def coords(self):
        return self._coords

    @property
    def index(self):
        """ Canonical (mixed radix) index """
        i = 0
        for a, m in zip(self._coords, self._spec.moduli):
            i = i * m + a
        return i

    def is_zero(self):
        return not any(self._coords)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, neg(other))

    def __neg__(self):
        return neg(self)

    def __rmul__(self, n):
        return smul(n, self)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and
                self._spec == other._spec and self._coords == other._coords)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        _check_same(self, other)
        return self._coords < other._coords

    def __hash__(self):
        return hash((self._spec, self._coords))

    def __str__(self):
        return '(%s)' % ','.join(str(a) for a in self._coords)

    def __repr__(self):
        return str(self)


def _check_same(a, b):
    if a.spec != b.spec:
        raise SpecError("Mismatched groups: %s and %s" % (a.spec, b.spec))


def add(a, b):
    _check_same(a, b)
    return GroupElement(a.spec, [x + y for x, y in zip(a.coords, b.coords)])


def neg(a):
    return GroupElement(a.spec, [-x for x in a.coords])


def smul(n, a):
    return GroupElement(a.spec, [n * x for x in a.coords])


def element_order(a):
    """ p^(max_i (e_i - v_p(a_i))) """
    spec = a.spec
    return spec.p ** max(e - valuation(x, spec.p, e)
                         for x, e in zip(a.coords, spec.exponents))


class Subgroup(object):
    """ A materialized subgroup: its generators and the canonical sorted
    array of member indices.  Immutable. """

    def __init__(self, spec, indices, generators=()):
        self._spec = spec
        self._indices = np.unique(np.asarray(indices, dtype=np.int64))
        self._indices.setflags(write=False)
        self._generators = tuple(generators)

    @property
    def spec(self):
        return self._spec

    @property
    def generators(self):
        return self._generators

    @property
    def indices(self):
        return self._indices

    @property
    def order(self):
        return len(self._indices)

    @property
    def coords(self):
        if not hasattr(self, '_coords'):
            self._coords = self._spec.coords(self._indices)
            self._coords.setflags(write=False)
        return self._coords

    @property
    def mask(self):
        """ Boolean membership array over all group indices """
        if not hasattr(self, '_mask'):
            self._mask = np.zeros(self._spec.order, dtype=bool)
            self._mask[self._indices] = True
            self._mask.setflags(write=False)
        return self._mask

    def elements(self):
        return [GroupElement(self._spec, row) for row in self.coords.tolist()]

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements())

    def __contains__(self, a):
        if not isinstance(a, GroupElement) or a.spec != self._spec:
            return False
        i = np.searchsorted(self._indices, a.index)
        return i < len(self._indices) and self._indices[i] == a.index

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self._spec == other._spec and
                np.array_equal(self._indices, other._indices))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._spec, self._indices.tobytes()))

    def __repr__(self):
        return 'Subgroup(%s, order=%s)' % (self._spec, self.order)

    def is_closed(self):
        """ Direct closure test under addition and negation """
        X = self.coords
        spec = self._spec
        if not self.mask[0]:
            return False
        if not self.mask[spec.index(spec.neg_array(X))].all():
            return False
        sums = spec.add_array(X[:, np.newaxis, :], X[np.newaxis, :, :])
        return bool(self.mask[spec.index(sums.reshape(-1, spec.rank))].all())


def span(gens, spec=None):
    """ Smallest subgroup containing ``gens`` """
    gens = list(gens)
    if spec is None:
        if not gens:
            raise SpecError("span of an empty list needs a group")
        spec = gens[0].spec
    for g in gens:
        if g.spec != spec:
            raise SpecError("Mismatched groups: %s and %s" % (g.spec, spec))

    mods = spec.moduli_array
    X = np.zeros((1, spec.rank), dtype=np.int64)
    members = {0}
    for g in gens:
        if g.index in members:
            continue
        # multiples of g, built by repeated addition so nothing overflows
        n = element_order(g)
        multiples = np.zeros((n, spec.rank), dtype=np.int64)
        step = np.array(g.coords, dtype=np.int64)
        for k in range(1, n):
            multiples[k] = (multiples[k - 1] + step) % mods
        X = (X[:, np.newaxis, :] + multiples[np.newaxis, :, :]) % mods
        X = X.reshape(-1, spec.rank)
        if len(X) > MAX_MATERIALIZED:
            raise SizeBoundError('span size', len(X), MAX_MATERIALIZED)
        indices = np.unique(spec.index(X))
        X = spec.coords(indices)
        members = set(indices.tolist())
    return Subgroup(spec, spec.index(X), generators=gens)


def omega_set(G, i):
    """ The subgroup of elements of order dividing p^i """
    gens = [smul(G.p ** max(0, e - i), b) for e, b in zip(G.exponents, G.basis())]
    return span([g for g in gens if not g.is_zero()], spec=G)


def rank_abelian(G):
    return G.rank


def is_small_rank(G):
    return G.rank < G.p - 1


def all_subgroups(G, params=None):
    """ Every subgroup of G, ordered by order and then member indices """
    G.check_materializable(params.max_materialized if params else None)
    trivial = span([], spec=G)
    found = {trivial.indices.tobytes(): trivial}
    frontier = [trivial]
    while frontier:
        next_frontier = []
        for S in frontier:
            for i in np.nonzero(~S.mask)[0]:
                T = span(S.generators + (G.element_at(int(i)),), spec=G)
                key = T.indices.tobytes()
                if key not in found:
                    found[key] = T
                    next_frontier.append(T)
        frontier = next_frontier
    return sorted(found.values(),
                  key=lambda S: (S.order, tuple(S.indices.tolist())))


class OrderHistogram(object):
    """ Mapping element order -> number of elements of exactly that order.
    Immutable. """

    def __init__(self, counts):
        counts = {int(k): int(v) for k, v in dict(counts).items() if int(v)}
        for k, v in counts.items():
            if k < 1 or v < 0:
                raise ValueError("Invalid histogram entry %s:%s" % (k, v))
        if counts.get(1) != 1:
            raise ValueError("Invalid histogram: count at order 1 must be 1")
        self._items = tuple(sorted(counts.items()))

    @staticmethod
    def from_orders(orders):
        values, counts = np.unique(np.asarray(orders), return_counts=True)
        return OrderHistogram(dict(zip(values.tolist(), counts.tolist())))

    @staticmethod
    def from_text(text):
        """ Parse ``order:count`` pairs joined by commas """
        counts = {}
        try:
            for item in re.sub(r'\s+', '', text).strip('{}').split(','):
                k, v = item.split(':')
                counts[int(k)] = int(v)
        except ValueError:
            raise SpecError("Invalid histogram: %r" % text)
        return OrderHistogram(counts)

    @property
    def counts(self):
        return dict(self._items)

    def items(self):
        return self._items

    @property
    def total(self):
        return sum(v for _, v in self._items)

    def get(self, order, default=0):
        return self.counts.get(order, default)

    def to_text(self):
        return ','.join('%s:%s' % kv for kv in self._items)

    def __eq__(self, other):
        if isinstance(other, dict):
            other = OrderHistogram(other)
        return isinstance(other, OrderHistogram) and self._items == other._items

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._items)

    def __str__(self):
        return '{%s}' % self.to_text()

    def __repr__(self):
        return 'OrderHistogram(%s)' % str(self)


def order_histogram(G, params=None):
    G.check_materializable(params.max_materialized if params else None)
    return OrderHistogram.from_orders(G.orders_array())


def abelian_invariants_from_histogram(h):
    """ Exponents of the unique abelian p-group with histogram ``h``.

    |Omega_i| = p^(sum_j min(e_j, i)), so the jumps of log_p |Omega_i| count
    the factors with e_j >= i; the exponents are the conjugate partition. """
    counts = h.counts
    orders = sorted(counts)
    if orders == [1]:
        raise ValueError("Invalid histogram: trivial group has no prime")
    p = orders[1]
    if not is_prime(p):
        raise ValueError("Invalid histogram: smallest order %s is not prime" % p)
    top = 0
    for k in orders:
        e = _exact_log(k, p)
        if e is None:
            raise ValueError("Invalid histogram: %s is not a power of %s" % (k, p))
        top = max(top, e)

    logs = [0]
    cumulative = 1
    for i in range(1, top + 1):
        cumulative += counts.get(p ** i, 0)
        s = _exact_log(cumulative, p)
        if s is None:
            raise ValueError("Histogram not realizable: |Omega_%s| = %s" % (i, cumulative))
        logs.append(s)
    jumps = [logs[i] - logs[i - 1] for i in range(1, top + 1)]
    if any(d < 1 for d in jumps) or any(a < b for a, b in zip(jumps, jumps[1:])):
        raise ValueError("Histogram not realizable: Omega jumps %s" % jumps)

    exponents = tuple(sum(1 for d in jumps if d > j) for j in range(jumps[0]))
    if order_histogram(GroupSpec(p, exponents)) != h:
        raise ValueError("Histogram not realizable by an abelian %s-group" % p)
    return exponents


def _exact_log(n, p):
    e = 0
    while n > 1 and n % p == 0:
        n //= p
        e += 1
    return e if n == 1 else None


def parse_spec(text):
    """ Parse ``p:[e1,...,er]`` (whitespace is ignored) """
    m = re.match(r'^(\d+):\[(\d+(?:,\d+)*)\]$', re.sub(r'\s+', '', text))
    if not m:
        raise SpecError("Invalid group spec: %r (expected p:[e1,...,er])" % text)
    return GroupSpec(int(m.group(1)), [int(e) for e in m.group(2).split(',')])


def parse_element(text, spec):
    """ Parse ``(a1,...,ar)``; entries are reduced """
    m = re.match(r'^\((-?\d+(?:,-?\d+)*)\)$', re.sub(r'\s+', '', text))
    if not m:
        raise SpecError("Invalid element literal: %r" % text)
    return GroupElement(spec, [int(a) for a in m.group(1).split(',')])
