import sys
from tqdm import tqdm

#: verdict statuses.  Only FAIL makes a report (and a run) fail.
PASS = 'pass'
FAIL = 'fail'
VACUOUS = 'vacuous'
PAPER_GAP = 'paper-gap'
INFO = 'info'

STATUSES = (PASS, FAIL, VACUOUS, PAPER_GAP, INFO)


def log(params, msg):
    """ Print a progress line to stderr if ``params.logging`` is set.  stdout
    is reserved for reports. """
    if params is not None and params.logging:
        tqdm.write(msg, file=sys.stderr)


def progress(iterable, params, desc, total=None):
    """ ``tqdm`` progress bar on stderr, shown only when logging """
    return tqdm(iterable, desc=desc, total=total, ncols=100, file=sys.stderr,
                disable=params is None or not params.logging)


class Verdict(object):
    """ One checked (or reported) statement. """

    def __init__(self, name, status, detail='', witness=None):
        if status not in STATUSES:
            raise ValueError("Invalid status: %s" % status)
        self.name = name
        self.status = status
        self.detail = detail
        self.witness = witness

    @property
    def ok(self):
        return self.status != FAIL

    def __repr__(self):
        return 'Verdict(%r, %r, %r)' % (self.name, self.status, self.detail)


class Report(object):
    """ Ordered list of verdicts under a title.  ``data`` holds the raw
    values (histograms, counts, ranks) for programmatic use. """

    def __init__(self, title):
        self.title = title
        self.verdicts = []
        self.data = {}

    def add(self, name, status, detail='', witness=None):
        v = Verdict(name, status, detail, witness)
        self.verdicts.append(v)
        return v

    def check(self, name, condition, detail='', witness=None):
        """ Add a PASS/FAIL verdict from a boolean """
        return self.add(name, PASS if condition else FAIL, detail,
                        None if condition else witness)

    def extend(self, other):
        """ Append the verdicts of another report, prefixing their names """
        for v in other.verdicts:
            self.verdicts.append(Verdict(
                '%s.%s' % (other.title, v.name), v.status, v.detail, v.witness))
        return self

    def __getitem__(self, name):
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def status(self, name):
        return self[name].status

    @property
    def ok(self):
        return all(v.ok for v in self.verdicts)

    def render(self, output_format='human'):
        if output_format == 'tsv':
            return ''.join(
                '%s\t%s\t%s\t%s\n' % (self.title, v.name, v.status,
                                      _one_line(v.detail))
                for v in self.verdicts)
        elif output_format == 'human':
            lines = ['== %s ==' % self.title]
            for v in self.verdicts:
                line = '  [%s] %s' % (v.status.upper(), v.name)
                if v.detail:
                    line += ': %s' % v.detail
                if v.witness is not None:
                    line += ' (witness: %s)' % (v.witness,)
                lines.append(line)
            return '\n'.join(lines) + '\n'
        else:
            raise ValueError("Invalid output_format: %s" % output_format)


def _one_line(text):
    return str(text).replace('\t', ' ').replace('\n', ' ')
