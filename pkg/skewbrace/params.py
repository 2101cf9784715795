import json
import hashlib


class RunConfig():
    """ Global parameter values for a run.  The same parameters (including
    the seed) always produce the same output. """

    def __init__(self):

        #: if True, print progress (and timings) to stderr
        self.logging = False

        #: seed for every sampled check (64-bit, non-negative)
        self.seed = 0

        #: number of worker processes used to partition sweeps.  Output does
        #: not depend on this value.
        self.workers = 1

        #: "human" for readable reports, "tsv" for machine-readable rows
        self.output_format = 'human'

        #: largest group whose elements may be materialized as an array
        self.max_materialized = 2 ** 24

        #: the gamma functional equation is checked on all |G|^2 pairs up to
        #: this group order; above it, structurally plus a random sample
        self.exhaustive_pairs_order = 2 ** 12

        #: the brace axiom is checked on all triples while |G|^3 is at most
        #: this value
        self.exhaustive_triples = 2 ** 24

        #: per-element sweeps of the cyclotomic example are exhaustive up
        #: to this group order
        self.exhaustive_elements_order = 3 ** 6

        #: random pairs for the sampled functional-equation check
        self.n_sample_pairs = 10 ** 4

        #: random triples for the sampled brace-axiom and bi-skew checks
        self.n_sample_triples = 10 ** 5

        #: random elements for sampled per-element sweeps
        self.n_sample_elements = 10 ** 4

        #: backtracking bound for the rank of a general group
        self.rank_general_order = 2 ** 12

        #: regular subgroups are enumerated unconditionally up to this order
        self.enumeration_small_order = 16

        #: above ``enumeration_small_order`` and up to this order,
        #: enumeration also requires |Aut(G)| <= ``enumeration_max_aut``
        self.enumeration_max_order = 81

        #: see ``enumeration_max_order``
        self.enumeration_max_aut = 10 ** 4

        #: most candidate matrices examined when listing automorphisms
        self.matrix_enumeration_limit = 10 ** 6

        #: the naive subset-filter oracle only runs up to this |Hol(G)|
        self.naive_oracle_hol_order = 32

    #: parameters to be saved/loaded
    ALL_PARAMS = [
        'seed',
        'workers',
        'output_format',
        'max_materialized',
        'exhaustive_pairs_order',
        'exhaustive_triples',
        'exhaustive_elements_order',
        'n_sample_pairs',
        'n_sample_triples',
        'n_sample_elements',
        'rank_general_order',
        'enumeration_small_order',
        'enumeration_max_order',
        'enumeration_max_aut',
        'matrix_enumeration_limit',
        'naive_oracle_hol_order',
    ]

    #: these parameters are discrete 1-of-N choices
    PARAM_CHOICES = {
        'output_format': (
            "human",
            "tsv",
        ),
    }

    #: bounds on parameters
    PARAM_BOUNDS = {
        'seed': (0, 2 ** 64 - 1),
        'workers': (1, 256),
        'max_materialized': (1, 2 ** 24),
        'exhaustive_pairs_order': (1, 2 ** 12),
        'exhaustive_triples': (1, 2 ** 24),
        'exhaustive_elements_order': (1, 2 ** 24),
        'n_sample_pairs': (1, 10 ** 7),
        'n_sample_triples': (1, 10 ** 7),
        'n_sample_elements': (1, 10 ** 7),
        'rank_general_order': (1, 2 ** 12),
        'enumeration_small_order': (1, 16),
        'enumeration_max_order': (1, 81),
        'enumeration_max_aut': (1, 10 ** 4),
        'matrix_enumeration_limit': (1, 10 ** 7),
        'naive_oracle_hol_order': (1, 32),
    }

    def to_json(self, indent=4, **extra_kwargs):
        """ Convert parameters to a JSON-encoded string """
        obj = {k: getattr(self, k)
               for k in RunConfig.ALL_PARAMS}
        if extra_kwargs:
            obj.update(extra_kwargs)
        return json.dumps(obj, sort_keys=True, indent=indent)

    def __str__(self):
        return self.to_json()

    @staticmethod
    def from_file(filename):
        """ Load parameters from ``filename`` (in JSON format) """
        with open(filename) as f:
            return RunConfig.from_dict(json.load(f))

    @staticmethod
    def from_dict(d):
        """ Load parameters from a dictionary """
        ret = RunConfig()
        for k, v in d.items():
            if not k.startswith('_') and k not in RunConfig.ALL_PARAMS:
                raise ValueError("Invalid parameter: %s" % k)
            setattr(ret, k, v)
        ret.validate()
        return ret

    def md5(self):
        """ Fingerprint of the parameters that can change a report (every
        persisted one except ``workers``) """
        dump = json.dumps({k: getattr(self, k) for k in RunConfig.ALL_PARAMS
                           if k != 'workers'}, sort_keys=True)
        m = hashlib.md5()
        m.update(dump.encode('utf-8'))
        return m.hexdigest()

    def save(self, filename, **extra_kwargs):
        """ Save parameters to ``filename`` (in JSON format) """
        with open(filename, 'w') as f:
            f.write(self.to_json(**extra_kwargs))

    def clip(self):
        """ Clip parameters to be within bounds """
        for k, bounds in RunConfig.PARAM_BOUNDS.items():
            v = getattr(self, k)
            setattr(self, k, int(min(max(v, bounds[0]), bounds[1])))

    def validate(self):
        """ Raise ``ValueError`` if a parameter is out of its choices or
        bounds (``clip`` silently fixes the latter instead). """
        for k, choices in RunConfig.PARAM_CHOICES.items():
            if getattr(self, k) not in choices:
                raise ValueError("Invalid %s: %s" % (k, getattr(self, k)))
        for k, (lo, hi) in RunConfig.PARAM_BOUNDS.items():
            v = getattr(self, k)
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError("Invalid %s: %r (expected an integer)" % (k, v))
            if not lo <= v <= hi:
                raise ValueError("Invalid %s: %s (bounds %s..%s)" % (k, v, lo, hi))
        return self
