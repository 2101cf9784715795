""" Subsets H of a brace: additive subgroup, circle subgroup, gamma(H)-invariance.
Any two of the three conditions imply the third. """

import numpy as np

from ..pgroup import Subgroup
from ..report import Report, VACUOUS, INFO


def _additive_subgroup(H):
    return H.is_closed()


def _circle_subgroup(brace, H):
    S = H.indices
    if not H.mask[0]:
        return False
    if not H.mask[brace.circle_inverse_array(S)].all():
        return False
    return bool(H.mask[brace.circle_array(S[:, np.newaxis], S[np.newaxis, :])].all())


def _gamma_invariant(brace, H):
    """ gamma(h) x in H for all h, x in H """
    spec = brace.spec
    X = H.coords
    M = brace.gamma.matrices()[H.indices]
    images = np.einsum('hij,xj->hxi', M, X) % spec.moduli_array
    return bool(H.mask[spec.index(images.reshape(-1, spec.rank))].all())


def subset_conditions(brace, H):
    """ (H <= (G,+), H <= (G,o), H gamma(H)-invariant) """
    if not isinstance(H, Subgroup):
        H = Subgroup(brace.spec, [h.index for h in H])
    return (_additive_subgroup(H), _circle_subgroup(brace, H), _gamma_invariant(brace, H))


def two_of_three_check(brace, H):
    """ Evaluate the three conditions on H and check that no two of them
    hold without the third.  ``report.data['conditions']`` holds the three
    booleans. """
    report = Report('two of three')
    conditions = subset_conditions(brace, H)
    additive, circle, invariant = conditions
    report.add('H <= (G,+)', INFO, str(additive))
    report.add('H <= (G,o)', INFO, str(circle))
    report.add('gamma(H)-invariant', INFO, str(invariant))
    report.check('two imply the third', sum(conditions) != 2,
                 'conditions %s' % (conditions,), witness=H)
    report.data['conditions'] = conditions
    return report


def sub_brace_check(brace, H):
    """ For H <= (G,+): (H, +, o) is a sub-brace iff H is gamma(H)-invariant """
    report = Report('sub-brace')
    additive, circle, invariant = subset_conditions(brace, H)
    if not additive:
        report.add('sub-brace iff invariant', VACUOUS, 'H is not a subgroup of (G,+)')
    else:
        report.check('sub-brace iff invariant', circle == invariant,
                     'sub-brace %s, invariant %s' % (circle, invariant), witness=H)
    report.data['sub_brace'] = additive and circle
    return report
