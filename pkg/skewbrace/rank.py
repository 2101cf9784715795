""" Rank of a finite p-group given by a multiplication on indices: the largest
r such that the group has a subgroup of exponent p and order p^r. """

import numpy as np

from .errors import SizeBoundError


class IndexGroup(object):
    """ A finite group on ``range(n)`` with identity 0.  ``mul`` multiplies
    two broadcastable index arrays. """

    def __init__(self, n, mul, p):
        self.n = int(n)
        self.mul = mul
        self.p = int(p)

    @staticmethod
    def additive(spec):
        """ (G, +) of a ``GroupSpec`` """
        def mul(a, b):
            a, b = np.broadcast_arrays(a, b)
            X = spec.add_array(spec.coords(a.ravel()), spec.coords(b.ravel()))
            return spec.index(X).reshape(a.shape)
        return IndexGroup(spec.order, mul, spec.p)

    @staticmethod
    def circle(brace):
        """ (G, o) of a ``Brace`` """
        return IndexGroup(brace.spec.order, brace.circle_array, brace.p)

    def power(self, x, n):
        y = np.zeros_like(x)
        for _ in range(n):
            y = self.mul(y, x)
        return y


def rank_general(group, bound=2 ** 12, cap=None):
    """ Exact rank by backtracking over exponent-p subgroups.

    A subgroup S is grown by an element x of order p that normalizes it, so
    that <S, x> = S <x> has order p |S|; every exponent-p subgroup is
    reached this way along a normal series.  With ``cap`` the search stops
    as soon as rank ``cap`` is reached. """
    if group.n > bound:
        raise SizeBoundError('group order for rank_general', group.n, bound)
    p = group.p
    everything = np.arange(group.n, dtype=np.int64)
    # elements of order 1 or p
    small = group.power(everything, p) == 0
    candidates = np.nonzero(small)[0][1:]
    inverse_of = group.power(everything, p - 1)

    best = [0]
    seen = set()

    def grow(S, r):
        if r > best[0]:
            best[0] = r
        if cap is not None and best[0] >= cap:
            return
        mask = np.zeros(group.n, dtype=bool)
        mask[S] = True
        for x in candidates:
            if mask[x]:
                continue
            # x S x^-1 == S
            conj = group.mul(group.mul(x, S), inverse_of[x])
            if not mask[conj].all():
                continue
            cosets = [S]
            y = np.int64(x)
            for _ in range(p - 1):
                cosets.append(group.mul(S, y))
                y = group.mul(y, x)
            T = np.unique(np.concatenate(cosets))
            if not small[T].all():
                continue
            key = T.tobytes()
            if key in seen:
                continue
            seen.add(key)
            grow(T, r + 1)
            if cap is not None and best[0] >= cap:
                return

    grow(np.zeros(1, dtype=np.int64), 0)
    return best[0]
