""" brace-v1 files: a group spec and a gamma function, one statement per line.

    brace-v1
    group 3:[1,1]
    gamma kernelhom
    c (1,1) mod 3^1
    A [[0,2],[1,2]]

or ``gamma table`` followed by one ``(coords) [[matrix]]`` line per element
in canonical order.  Blank lines and ``#`` comments are ignored.  The writer
emits reduced entries, so writing a parsed file reproduces it exactly. """

import os
import re

from .brace import Brace
from .errors import SpecError
from .gamma import GammaFunction, gamma_from_table, gamma_from_kernel_hom
from .morphisms import parse_matrix
from .pgroup import parse_spec, parse_element

MAGIC = 'brace-v1'


def write_brace(b):
    """ Canonical brace-v1 text of the brace ``b`` """
    gamma = b.gamma
    G = b.spec
    lines = [MAGIC, 'group %s' % G]
    if gamma.encoding == GammaFunction.KERNEL_HOM:
        lines.append('gamma kernelhom')
        lines.append('c (%s) mod %s^%s' % (','.join(str(x) for x in gamma.coeffs),
                                           G.p, gamma.log_modulus))
        lines.append('A %s' % gamma.automorphism)
    else:
        lines.append('gamma table')
        for g, A in zip(G.elements(), gamma.table):
            lines.append('%s %s' % (g, A))
    return '\n'.join(lines) + '\n'


def _statements(text):
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield n, line


def read_brace(text, params=None):
    """ Parse brace-v1 text into a ``Brace``.  The gamma premises checked at
    construction raise (``GammaError``); the functional equation itself is
    left to ``validate_gamma``. """
    statements = list(_statements(text))
    if not statements or statements[0][1] != MAGIC:
        raise SpecError("Invalid brace file: first line must be %r" % MAGIC)
    if len(statements) < 3:
        raise SpecError("Invalid brace file: truncated")

    n, line = statements[1]
    if not line.startswith('group '):
        raise SpecError("Invalid brace file (line %s): expected 'group p:[...]'" % n)
    G = parse_spec(line[len('group '):])

    n, line = statements[2]
    body = statements[3:]
    if line == 'gamma kernelhom':
        if len(body) != 2:
            raise SpecError("Invalid brace file (line %s): kernelhom needs 'c' and 'A' lines" % n)
        (nc, c_line), (na, a_line) = body
        m = re.match(r'^c\s+(\(.*\))\s+mod\s+(\d+)\s*\^\s*(\d+)$', c_line)
        if not m:
            raise SpecError("Invalid brace file (line %s): expected 'c (coeffs) mod p^m'" % nc)
        if int(m.group(2)) != G.p:
            raise SpecError("Invalid brace file (line %s): modulus base %s != p = %s" %
                            (nc, m.group(2), G.p))
        coeffs = [int(x) for x in re.sub(r'[\s()]', '', m.group(1)).split(',')]
        if not a_line.startswith('A '):
            raise SpecError("Invalid brace file (line %s): expected 'A [[...]]'" % na)
        gamma = gamma_from_kernel_hom(G, coeffs, int(m.group(3)),
                                      parse_matrix(a_line[2:]), params)
    elif line == 'gamma table':
        if len(body) != G.order:
            raise SpecError("Invalid brace file: %s table lines for |G| = %s" %
                            (len(body), G.order))
        table = []
        for (nt, t_line), expected in zip(body, range(G.order)):
            m = re.match(r'^(\([^)]*\))\s*(\[.*\])$', t_line)
            if not m:
                raise SpecError("Invalid brace file (line %s): expected '(coords) [[matrix]]'" % nt)
            g = parse_element(m.group(1), G)
            if g.index != expected:
                raise SpecError("Invalid brace file (line %s): %s out of canonical order" %
                                (nt, g))
            table.append(parse_matrix(m.group(2)))
        gamma = gamma_from_table(G, table, params)
    else:
        raise SpecError("Invalid brace file (line %s): unknown gamma encoding %r" % (n, line))
    return Brace(G, gamma)


def save_brace(filename, b):
    dirname = os.path.dirname(filename)
    if dirname and not os.path.exists(dirname):
        os.makedirs(dirname)
    with open(filename, 'w', encoding='utf-8') as f:
        f.write(write_brace(b))


def load_brace(filename, params=None):
    if not filename:
        raise ValueError("Empty filename")
    with open(filename, encoding='utf-8') as f:
        return read_brace(f.read(), params)
