""" Exception types.  All input errors are ``ValueError`` subclasses so that
callers that only care about "bad input" can keep catching ``ValueError``. """


class SpecError(ValueError):
    """ Malformed literal or file, non-prime ``p``, bad exponent, or operands
    that belong to different groups. """
    pass


class SizeBoundError(ValueError):
    """ A desk-scale bound was exceeded.  The message names the bound. """

    def __init__(self, what, value, bound):
        self.what = what
        self.value = value
        self.bound = bound
        super(SizeBoundError, self).__init__(
            "%s = %s exceeds bound %s" % (what, value, bound))


class NotAutomorphismError(ValueError):
    pass


class GammaError(ValueError):
    """ A gamma function premise failed.  ``witness`` is the offending
    element (or pair). """

    def __init__(self, message, witness=None):
        self.witness = witness
        super(GammaError, self).__init__(message)


class InvariantError(AssertionError):
    """ An internal construction invariant failed.  This indicates a bug,
    not bad input. """
    pass
