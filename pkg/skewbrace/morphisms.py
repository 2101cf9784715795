""" Endomorphisms of a ``GroupSpec`` as integer matrices.

Entry m[i][j] is the coefficient of the map from factor j into factor i, so
``apply(M, a)_i = sum_j m[i][j] a_j mod p^e_i``.  Actions are written on the
right, as exponents: ``compose(A, B)`` is "first A, then B", which is the
matrix product ``B . A``. """

import re
import itertools
import numpy as np

from .errors import SpecError, NotAutomorphismError, InvariantError, SizeBoundError
from .pgroup import GroupElement


class EndoMatrix(object):
    """ A validated endomorphism, entries reduced mod p^e_i.  Immutable;
    construct with ``validate_endo``. """

    def __init__(self, spec, rows):
        self._spec = spec
        self._rows = tuple(tuple(int(x) for x in row) for row in rows)

    @staticmethod
    def identity(spec):
        r = spec.rank
        return EndoMatrix(spec, [[int(i == j) for j in range(r)] for i in range(r)])

    @staticmethod
    def zero(spec):
        return EndoMatrix(spec, [[0] * spec.rank for _ in range(spec.rank)])

    @property
    def spec(self):
        return self._spec

    @property
    def rows(self):
        return self._rows

    @property
    def key(self):
        """ Flattened entries, used for canonical ordering """
        return tuple(x for row in self._rows for x in row)

    @property
    def array(self):
        """ Entries as a read-only int64 array (for vectorized sweeps) """
        if not hasattr(self, '_array'):
            self._array = np.array(self._rows, dtype=np.int64).reshape(
                self._spec.rank, self._spec.rank)
            self._array.setflags(write=False)
        return self._array

    def is_identity(self):
        return self == EndoMatrix.identity(self._spec)

    def apply(self, a):
        return apply(self, a)

    def apply_array(self, X):
        """ Apply to every row of an (n, rank) coordinate array """
        return (np.asarray(X, dtype=np.int64) @ self.array.T) % self._spec.moduli_array

    def __eq__(self, other):
        return (isinstance(other, EndoMatrix) and self._spec == other._spec and
                self._rows == other._rows)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._spec, self._rows))

    def __str__(self):
        return '[%s]' % ','.join('[%s]' % ','.join(str(x) for x in row)
                                 for row in self._rows)

    def __repr__(self):
        return 'EndoMatrix(%s, %s)' % (self._spec, self)


class Automorphism(EndoMatrix):
    """ An ``EndoMatrix`` certified invertible, with its inverse cached.
    Construct with ``to_automorphism``. """

    def __init__(self, spec, rows, inverse_rows=None):
        super(Automorphism, self).__init__(spec, rows)
        self._inverse_rows = inverse_rows

    @property
    def inverse(self):
        if not hasattr(self, '_inverse'):
            self._inverse = Automorphism(self._spec, self._inverse_rows, self._rows)
            self._inverse._inverse = self
        return self._inverse

    def __repr__(self):
        return 'Automorphism(%s, %s)' % (self._spec, self)


def _divisor(spec, i, j):
    """ m[i][j] must be divisible by p^max(0, e_i - e_j) """
    return spec.p ** max(0, spec.exponents[i] - spec.exponents[j])


def validate_endo(M, G):
    """ Check the well-definedness constraint and reduce the entries """
    r = G.rank
    try:
        M = [[int(x) for x in row] for row in M]
    except (TypeError, ValueError):
        raise SpecError("Invalid matrix: %r" % (M,))
    if len(M) != r or any(len(row) != r for row in M):
        raise SpecError("Invalid matrix: expected %sx%s for %s" % (r, r, G))
    for i in range(r):
        for j in range(r):
            d = _divisor(G, i, j)
            if M[i][j] % d:
                raise SpecError(
                    "Invalid endomorphism of %s: entry (%s,%s) = %s is not "
                    "divisible by %s" % (G, i + 1, j + 1, M[i][j], d))
    return EndoMatrix(G, [[x % G.moduli[i] for x in row] for i, row in enumerate(M)])


def _check_same(A, B):
    if A.spec != B.spec:
        raise SpecError("Mismatched groups: %s and %s" % (A.spec, B.spec))


def apply(M, a):
    if not isinstance(a, GroupElement) or a.spec != M.spec:
        raise SpecError("Mismatched groups: %s and %s" % (M.spec, getattr(a, 'spec', a)))
    return GroupElement(M.spec, [sum(m * x for m, x in zip(row, a.coords))
                                 for row in M.rows])


def _matmul(spec, X, Y):
    """ Integer matrix product X . Y with row i reduced mod p^e_i """
    r = spec.rank
    return [[sum(X[i][k] * Y[k][j] for k in range(r)) % spec.moduli[i]
             for j in range(r)] for i in range(r)]


def compose(A, B):
    """ First A, then B: apply(compose(A, B), x) == apply(B, apply(A, x)) """
    _check_same(A, B)
    rows = _matmul(A.spec, B.rows, A.rows)
    if isinstance(A, Automorphism) and isinstance(B, Automorphism):
        inv = _matmul(A.spec, A.inverse.rows, B.inverse.rows)
        return Automorphism(A.spec, rows, inv)
    return EndoMatrix(A.spec, rows)


def endo_add(A, B):
    _check_same(A, B)
    return EndoMatrix(A.spec, [[(x + y) % m for x, y in zip(ra, rb)]
                               for ra, rb, m in zip(A.rows, B.rows, A.spec.moduli)])


def endo_sub(A, B):
    _check_same(A, B)
    return EndoMatrix(A.spec, [[(x - y) % m for x, y in zip(ra, rb)]
                               for ra, rb, m in zip(A.rows, B.rows, A.spec.moduli)])


def endo_scale(n, A):
    return EndoMatrix(A.spec, [[(n * x) % m for x in row]
                               for row, m in zip(A.rows, A.spec.moduli)])


def endo_power(A, n):
    """ A composed with itself n times (n >= 0), by repeated squaring """
    if n < 0:
        raise ValueError("Invalid exponent: %s" % n)
    result = EndoMatrix.identity(A.spec)
    base = A
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    if isinstance(A, Automorphism) and not isinstance(result, Automorphism):
        result = to_automorphism(result)
    return result


def _inverse_mod_p(rows, p):
    """ Gauss-Jordan inverse of a square matrix over GF(p); None if singular """
    r = len(rows)
    aug = np.concatenate([np.array(rows, dtype=np.int64).reshape(r, r) % p,
                          np.eye(r, dtype=np.int64)], axis=1)
    for col in range(r):
        pivots = np.nonzero(aug[col:, col] % p)[0]
        if not len(pivots):
            return None
        piv = col + pivots[0]
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] = (aug[col] * pow(int(aug[col, col]), -1, p)) % p
        for row in range(r):
            if row != col and aug[row, col]:
                aug[row] = (aug[row] - aug[row, col] * aug[col]) % p
    return aug[:, r:].tolist()


def _reduced_mod_p(M):
    """ The matrix of the induced map on G/pG """
    spec = M.spec
    return [[x % spec.p for x in row] for row in M.rows]


def is_automorphism(M):
    """ M is invertible iff it induces an invertible map on G/pG """
    return _inverse_mod_p(_reduced_mod_p(M), M.spec.p) is not None


def to_automorphism(M):
    """ Certify M invertible and compute its inverse by Newton lifting
    X <- X (2 - M X) from the inverse mod p """
    if isinstance(M, Automorphism):
        return M
    spec = M.spec
    X = _inverse_mod_p(_reduced_mod_p(M), spec.p)
    if X is None:
        raise NotAutomorphismError("Not an automorphism of %s: %s" % (spec, M))
    two = [[2 * int(i == j) for j in range(spec.rank)] for i in range(spec.rank)]
    # the error I - M X squares at every step and is 0 mod p at the start
    for _ in range(max(1, spec.exponents[0]).bit_length()):
        MX = _matmul(spec, M.rows, X)
        X = _matmul(spec, X, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(two, MX)])
    if not EndoMatrix(spec, _matmul(spec, M.rows, X)).is_identity():
        raise InvariantError("Newton lift failed for %s" % M)
    return Automorphism(spec, M.rows, X)


def automorphism_order(A, bound=None):
    """ Order of A in Aut(G), by repeated composition """
    identity = EndoMatrix.identity(A.spec)
    B = A
    n = 1
    while B != identity:
        B = compose(B, A)
        n += 1
        if bound is not None and n > bound:
            return None
    return n


def count_candidate_matrices(G):
    """ Number of well-defined endomorphism matrices, prod p^min(e_i, e_j) """
    return G.p ** sum(min(a, b) for a in G.exponents for b in G.exponents)


def enumerate_automorphisms(G, limit=10 ** 6):
    """ All automorphisms of G, in canonical (entry-lexicographic) order.

    Invertibility only depends on the entries mod p, so every reduced
    pattern is tested once and only the invertible ones are lifted. """
    count = count_candidate_matrices(G)
    if count > limit:
        raise SizeBoundError('candidate matrices for Aut(%s)' % G, count, limit)
    r = G.rank
    p = G.p
    cells = [(i, j) for i in range(r) for j in range(r)]
    # entries with p | divisor are 0 mod p; the others are free mod p
    free = [c for c in cells if _divisor(G, *c) == 1]

    autos = []
    for pattern in itertools.product(range(p), repeat=len(free)):
        reduced = [[0] * r for _ in range(r)]
        for (i, j), v in zip(free, pattern):
            reduced[i][j] = v
        if _inverse_mod_p(reduced, p) is None:
            continue
        # lifts: free cells take v + p t, the others multiples of the divisor
        choices = []
        for (i, j) in cells:
            m = G.moduli[i]
            if (i, j) in free:
                choices.append(range(reduced[i][j], m, p))
            else:
                choices.append(range(0, m, _divisor(G, i, j)))
        for entries in itertools.product(*choices):
            rows = [list(entries[i * r:(i + 1) * r]) for i in range(r)]
            autos.append(to_automorphism(EndoMatrix(G, rows)))
    autos.sort(key=lambda A: A.key)
    return autos


def parse_matrix(text):
    """ Parse ``[[m11,...,m1r],...,[mr1,...,mrr]]`` into a list of rows """
    compact = re.sub(r'\s+', '', text)
    if not re.match(r'^\[\[(-?\d+(,-?\d+)*)\](,\[(-?\d+(,-?\d+)*)\])*\]$', compact):
        raise SpecError("Invalid matrix literal: %r" % text)
    return [[int(x) for x in row.split(',')]
            for row in re.findall(r'\[(-?\d+(?:,-?\d+)*)\]', compact)]
