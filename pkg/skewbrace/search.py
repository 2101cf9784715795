""" Exhaustive enumeration of the regular subgroups of Hol(G).

Automorphisms are turned into permutations of the canonical indices and a
holomorph element is a pair (automorphism id, translation index).  A regular
subgroup N has exactly one element over each translation, so the search
grows a partial subgroup by choosing the element over the smallest
translation not reached yet, closes it under composition, and prunes as soon
as two elements share a translation.  Every subgroup is found along exactly
one path.  Since |N| = |G| is a power of p, only automorphisms of p-power
order can occur.

Conjugating by an automorphism phi that fixes the translation with index 1
maps regular subgroups to regular subgroups and the element over that
translation to its phi-conjugate.  The search therefore only starts from one
automorphism per conjugacy class of that stabilizer, and the full list is
the union of the stabilizer orbits of what it finds. """

import timeit
import itertools
import numpy as np

from .errors import SizeBoundError, InvariantError
from .gamma import gamma_from_table
from .holomorph import RegularSubgroup, HolElement, hol_compose
from .morphisms import enumerate_automorphisms
from .params import RunConfig
from .parallel import run_items
from .report import log, progress


def automorphisms_for_enumeration(G, params=None):
    """ Aut(G) when G is within the enumeration bounds: |G| up to
    ``enumeration_small_order``, or up to ``enumeration_max_order`` with
    |Aut(G)| at most ``enumeration_max_aut`` """
    params = params or RunConfig()
    if G.order > params.enumeration_max_order:
        raise SizeBoundError('|G| for enumeration', G.order, params.enumeration_max_order)
    autos = enumerate_automorphisms(G, params.matrix_enumeration_limit)
    if G.order > params.enumeration_small_order and len(autos) > params.enumeration_max_aut:
        raise SizeBoundError('|Aut(%s)| for enumeration' % G, len(autos),
                             params.enumeration_max_aut)
    return autos


def _permutation_order(perm):
    """ lcm of the cycle lengths """
    seen = np.zeros(len(perm), dtype=bool)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        order = order * length // np.gcd(order, length)
    return int(order)


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _matrix_strides(G):
    """ Mixed-radix place values of the entries of an endomorphism matrix,
    row by row, so that keys sort like the entries """
    r = G.rank
    radices = np.repeat(G.moduli_array, r)
    strides = np.ones(r * r, dtype=np.int64)
    for c in range(r * r - 2, -1, -1):
        strides[c] = strides[c + 1] * radices[c + 1]
    return strides.reshape(r, r)


class _Conflict(Exception):
    pass


class _SearchTables(object):
    """ Permutation and matrix forms of the p-power-order automorphisms, the
    addition table of G and the stabilizer of translation 1 """

    def __init__(self, G, autos):
        X = G.elements_array
        perms = np.array([G.index(A.apply_array(X)) for A in autos], dtype=np.int64)
        keep = [i for i in range(len(autos)) if _is_power_of(_permutation_order(perms[i]), G.p)]
        self.n = G.order
        self.autos = [autos[i] for i in keep]
        self.perms = [tuple(perms[i].tolist()) for i in keep]
        self.ids = {P: i for i, P in enumerate(self.perms)}
        self.identity = self.ids[tuple(range(self.n))]
        idx = np.arange(self.n, dtype=np.int64)
        self.add = G.index(G.add_array(X[idx][:, np.newaxis, :],
                                       X[np.newaxis, :, :]).reshape(-1, G.rank)
                           ).reshape(self.n, self.n).tolist()
        self._products = {}

        self.moduli = G.moduli_array[:, np.newaxis]
        self.strides = _matrix_strides(G)
        self.mats = np.array([A.rows for A in self.autos], dtype=np.int64).reshape(
            len(self.autos), G.rank, G.rank)
        self.keys = (self.mats * self.strides).sum(axis=(1, 2))
        if np.any(np.diff(self.keys) <= 0):
            raise InvariantError("automorphisms are not in canonical order")
        fix = [i for i in range(len(autos)) if perms[i, 1] == 1]
        self.stab = np.array([autos[i].rows for i in fix], dtype=np.int64).reshape(
            len(fix), G.rank, G.rank)
        self.stab_inverse = np.array([autos[i].inverse.rows for i in fix],
                                     dtype=np.int64).reshape(len(fix), G.rank, G.rank)
        self.stab_perms = perms[fix]

    def compose(self, a, b):
        """ Automorphism id of "first a, then b".  A product of p-power
        order automorphisms that is not of p-power order lies in no
        p-subgroup, so it ends the branch. """
        key = (a, b)
        c = self._products.get(key)
        if c is None:
            pa, pb = self.perms[a], self.perms[b]
            c = self.ids.get(tuple(pb[x] for x in pa), -1)
            self._products[key] = c
        if c < 0:
            raise _Conflict()
        return c

    def multiply(self, x, y):
        """ (a, g)(b, h) = (ab, g^b + h) """
        (a, g), (b, h) = x, y
        return self.compose(a, b), self.add[self.perms[b][g]][h]

    def lookup(self, M):
        """ Ids of an array of automorphism matrices (last two axes) """
        q = (M * self.strides).sum(axis=(-2, -1))
        ids = np.minimum(np.searchsorted(self.keys, q), len(self.keys) - 1)
        if not np.array_equal(self.keys[ids], q):
            raise InvariantError("conjugate is not a p-power order automorphism")
        return ids

    def root_choices(self):
        """ One automorphism id from each conjugacy class of the stabilizer
        of translation 1 """
        seen = np.zeros(len(self.autos), dtype=bool)
        roots = []
        for a in range(len(self.autos)):
            if seen[a]:
                continue
            roots.append(a)
            # phi^-1 a phi is the matrix Phi A Phi^-1
            C = np.einsum('sij,jk,skl->sil', self.stab, self.mats[a], self.stab_inverse,
                          optimize=True) % self.moduli
            seen[self.lookup(C)] = True
        return roots

    def conjugates(self, assign):
        """ (phi, 0)^-1 N (phi, 0) for every phi in the stabilizer, as an
        array of translation-indexed automorphism ids, one row per phi """
        M = self.mats[np.asarray(assign, dtype=np.int64)]
        C = np.einsum('sij,njk,skl->snil', self.stab, M, self.stab_inverse,
                      optimize=True) % self.moduli
        ids = self.lookup(C)
        # the element over t moves to the translation t^phi
        out = np.empty_like(ids)
        out[np.arange(len(ids))[:, np.newaxis], self.stab_perms] = ids
        return out


def _close(tables, assign, elements, x):
    """ Close ``elements`` (with translation map ``assign``) under x.  Returns
    the new (assign, elements) or None when two elements share a
    translation. """
    assign = list(assign)
    elements = list(elements)

    def admit(y):
        a, t = y
        if assign[t] == -1:
            assign[t] = a
            elements.append(y)
            return True
        if assign[t] != a:
            raise _Conflict()
        return False

    try:
        # powers of x first: cheap conflicts show up early
        y = x
        new = []
        while admit(y):
            new.append(y)
            y = tables.multiply(y, x)
        while new:
            found = []
            for y in new:
                for z in list(elements):
                    for w in (tables.multiply(y, z), tables.multiply(z, y)):
                        if admit(w):
                            found.append(w)
            new = found
    except _Conflict:
        return None
    return assign, elements


def _explore(tables, assign, elements, results):
    try:
        t = assign.index(-1)
    except ValueError:
        results.append(tuple(assign))
        return
    for a in range(len(tables.autos)):
        grown = _close(tables, assign, elements, (a, t))
        if grown is not None:
            _explore(tables, grown[0], grown[1], results)


def _explore_branches(tables, first_choices):
    """ Search below the given choices for the element over translation 1 """
    n = tables.n
    assign = [-1] * n
    assign[0] = tables.identity
    elements = [(tables.identity, 0)]
    results = []
    for a in first_choices:
        grown = _close(tables, assign, elements, (a, 1))
        if grown is not None:
            _explore(tables, grown[0], grown[1], results)
    return results


def _search(G, params):
    """ Tables and the sorted id tuples of the subgroups found from the
    root choices """
    autos = automorphisms_for_enumeration(G, params)
    tables = _SearchTables(G, autos)
    roots = tables.root_choices()
    log(params, "enumerate_regular_subgroups: |Aut| = %s, %s of p-power order, %s roots" %
        (len(autos), len(tables.autos), len(roots)))

    if params.workers > 1:
        found = [key for part in run_items(_explore_branches, (tables,), roots,
                                           params.workers)
                 for key in part]
    else:
        found = []
        for a in progress(roots, params, 'branches'):
            found.extend(_explore_branches(tables, [a]))
    return tables, sorted(set(found))


def _to_subgroups(G, tables, found, params):
    # ids follow the canonical order of the automorphisms, so sorted id
    # tuples are in canonical subgroup order
    return [RegularSubgroup.from_gamma(
        gamma_from_table(G, [tables.autos[a] for a in assign], params))
        for assign in found]


def regular_subgroup_cover(G, params=None):
    """ Regular subgroups of Hol(G) meeting every conjugacy class under
    Aut(G), in canonical order.  Statements that are transported by
    automorphisms of G only need to be checked on these. """
    params = params or RunConfig()
    tables, found = _search(G, params)
    return _to_subgroups(G, tables, found, params)


def enumerate_regular_subgroups(G, params=None):
    """ Every regular subgroup of Hol(G), without duplicates, in canonical
    order (by the automorphism entries over the translations).  The output
    does not depend on ``params.workers``. """
    params = params or RunConfig()

    if params.logging:
        t0 = timeit.default_timer()
        log(params, "enumerate_regular_subgroups: %s..." % G)

    tables, cover = _search(G, params)
    found = set()
    for assign in cover:
        if assign not in found:
            found.update(tuple(row) for row in tables.conjugates(assign).tolist())
    result = _to_subgroups(G, tables, sorted(found), params)

    if params.logging:
        t1 = timeit.default_timer()
        log(params, "enumerate_regular_subgroups: %s subgroups (%s s)" % (len(result), t1 - t0))
    return result


def naive_regular_subgroups(G, params=None):
    """ Independent oracle: filter every |G|-subset of Hol(G) for regularity
    and closure.  Only for |Hol(G)| <= ``naive_oracle_hol_order``. """
    params = params or RunConfig()
    autos = enumerate_automorphisms(G, params.matrix_enumeration_limit)
    hol_order = len(autos) * G.order
    if hol_order > params.naive_oracle_hol_order:
        raise SizeBoundError('|Hol(%s)| for the naive oracle' % G, hol_order,
                             params.naive_oracle_hol_order)
    hol = [HolElement(A, g) for A in autos for g in G.elements()]
    found = {}
    for subset in itertools.combinations(hol, G.order):
        if len(set(x.g for x in subset)) != G.order:
            continue
        members = set(subset)
        if all(hol_compose(x, y) in members for x in subset for y in subset):
            N = RegularSubgroup(G, subset, check=False, params=params)
            found[N.key] = N
    return [found[k] for k in sorted(found)]
