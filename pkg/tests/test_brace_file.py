import pytest

from skewbrace.brace_file import write_brace, read_brace, save_brace, load_brace
from skewbrace.errors import SpecError, GammaError
from skewbrace.gamma import GammaFunction, validate_gamma
from skewbrace.holomorph import gamma_to_subgroup

Z4_TEXT = ('brace-v1\n'
           'group 2:[2]\n'
           'gamma kernelhom\n'
           'c (1) mod 2^1\n'
           'A [[3]]\n')


def test_write_kernel_hom(brace_z4):
    assert write_brace(brace_z4) == Z4_TEXT


def test_read_kernel_hom(brace_z4):
    b = read_brace(Z4_TEXT)
    assert b.spec == brace_z4.spec
    assert b.gamma == brace_z4.gamma
    assert b.gamma.encoding == GammaFunction.KERNEL_HOM


def test_comments_and_blank_lines():
    text = ('# a brace on Z/4\n'
            'brace-v1\n'
            '\n'
            'group 2:[2]   # cyclic\n'
            'gamma kernelhom\n'
            'c ( 5 ) mod 2 ^ 1\n'
            'A [[-1]]\n')
    assert write_brace(read_brace(text)) == Z4_TEXT


def test_table_round_trip(brace_z4):
    N = gamma_to_subgroup(brace_z4)
    text = write_brace(N.brace())
    assert text.splitlines()[2:] == ['gamma table', '(0) [[1]]', '(1) [[3]]',
                                     '(2) [[1]]', '(3) [[3]]']
    b = read_brace(text)
    assert b.gamma.encoding == GammaFunction.TABLE
    assert b.gamma == brace_z4.gamma
    assert write_brace(b) == text


def test_example_file_round_trip(brace32, tmp_path):
    filename = str(tmp_path / 'sub' / 'ex32.brace')
    save_brace(filename, brace32)
    b = load_brace(filename)
    assert b.gamma == brace32.gamma
    assert write_brace(b) == write_brace(brace32)
    assert write_brace(b).splitlines()[1:4] == ['group 3:[2,2]', 'gamma kernelhom',
                                                'c (1,1) mod 3^1']


def test_corrupted_table_is_read_then_fails_validation(params):
    text = ('brace-v1\ngroup 2:[2]\ngamma table\n'
            '(0) [[1]]\n(1) [[3]]\n(2) [[3]]\n(3) [[3]]\n')
    b = read_brace(text)
    report = validate_gamma(b.spec, b.gamma, params)
    assert not report.ok
    assert report['functional equation'].witness is not None


@pytest.mark.parametrize('text', [
    '',
    'brace-v2\ngroup 2:[2]\ngamma kernelhom\nc (1) mod 2^1\nA [[3]]\n',
    'brace-v1\ngroup 2:[2]\n',
    'brace-v1\ngroop 2:[2]\ngamma kernelhom\nc (1) mod 2^1\nA [[3]]\n',
    'brace-v1\ngroup 2:[2]\ngamma kernelhom\nc (1) mod 3^1\nA [[3]]\n',
    'brace-v1\ngroup 2:[2]\ngamma kernelhom\nc (1) mod 2^1\n',
    'brace-v1\ngroup 2:[2]\ngamma sparse\n',
    'brace-v1\ngroup 2:[2]\ngamma table\n(0) [[1]]\n(2) [[1]]\n(1) [[1]]\n(3) [[1]]\n',
    'brace-v1\ngroup 2:[2]\ngamma table\n(0) [[1]]\n',
])
def test_malformed(text):
    with pytest.raises(SpecError):
        read_brace(text)


def test_bad_kernel_hom_premise():
    text = 'brace-v1\ngroup 3:[1,1]\ngamma kernelhom\nc (1,0) mod 3^1\nA [[1,1],[0,1]]\n'
    with pytest.raises(GammaError):
        read_brace(text)


def test_load_empty_filename():
    with pytest.raises(ValueError):
        load_brace('')
