import io
import os

import pytest

from skewbrace.cli import (main, build_parser, params_from_args, cmd_group_info,
                           EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_SIZE_BOUND)
from skewbrace.pgroup import parse_spec


def run(*argv):
    out = io.StringIO()
    code = main(list(argv) + ['-q'], out=out)
    return code, out.getvalue()


def test_group_info():
    code, text = run('group', 'info', '3:[2,1]')
    assert code == EXIT_OK
    assert '[INFO] rank: 2' in text
    assert '[INFO] small rank: no' in text
    code, text = run('group', 'info', '3:[3]')
    assert '[INFO] small rank: yes' in text
    assert '[INFO] histogram: {1:1,3:2,9:6,27:18}' in text


def test_group_info_needs_no_materialization():
    report = cmd_group_info(parse_spec('3:[20,10]'))
    assert report['|Omega_1|'].detail == '9'
    assert report['order'].detail == str(3 ** 30)


def test_group_info_rejects_bad_prime():
    assert run('group', 'info', '4:[1]')[0] == EXIT_USAGE


def test_enumerate_tsv():
    code, text = run('enumerate', '2:[2]', '--format', 'tsv')
    assert code == EXIT_OK
    rows = text.splitlines()
    assert len(rows) == 2
    assert all(len(row.split('\t')) == 4 for row in rows)
    code, text = run('enumerate', '2:[1,1]', '--format', 'tsv')
    rows = text.splitlines()
    assert len(rows) == 4
    assert sum(row.split('\t')[2] == '1:1,2:1,4:2' for row in rows) == 3


def test_enumerate_emit_dir(tmp_path):
    code, text = run('--format', 'tsv', 'enumerate', '2:[2]', '--emit-dir', str(tmp_path))
    assert code == EXIT_OK
    files = [row.split('\t')[4] for row in text.splitlines()]
    assert all(os.path.exists(f) for f in files)
    assert run('verify', files[1])[0] == EXIT_OK


def test_enumerate_bound():
    assert run('enumerate', '3:[1,1,1,1]')[0] == EXIT_SIZE_BOUND


def test_example_and_verify(tmp_path):
    filename = str(tmp_path / 'ex32.brace')
    code, text = run('example', '--p', '3', '--k', '2', '--emit', filename)
    assert code == EXIT_OK
    assert '[FAIL]' not in text
    code, text = run('verify', filename)
    assert code == EXIT_OK
    assert '{1:1,3:8,9:72}' in text
    assert '{1:1,3:62,9:18}' in text


def test_example_p2_is_a_paper_gap():
    code, text = run('example', '--p', '2', '--k', '2', '--format', 'tsv')
    assert code == EXIT_OK
    assert 'example\t(G,o) non-abelian\tpaper-gap\tcircle group abelian' in text


def test_example_k1():
    code, text = run('example', '--p', '3', '--k', '1')
    assert code == EXIT_OK
    assert 'k = 1' in text


def test_verify_trivial(tmp_path):
    filename = tmp_path / 'trivial.brace'
    filename.write_text('brace-v1\ngroup 3:[2]\ngamma kernelhom\nc (0) mod 3^1\nA [[1]]\n')
    code, text = run('verify', str(filename))
    assert code == EXIT_OK
    assert '[PASS] histograms equal' in text


def test_verify_corrupted(tmp_path):
    filename = tmp_path / 'bad.brace'
    filename.write_text('brace-v1\ngroup 2:[2]\ngamma table\n'
                        '(0) [[1]]\n(1) [[3]]\n(2) [[3]]\n(3) [[3]]\n')
    code, text = run('verify', str(filename))
    assert code == EXIT_CHECK_FAILED
    assert '[FAIL] functional equation' in text
    assert 'witness: h=' in text


def test_verify_missing_file(tmp_path):
    assert run('verify', str(tmp_path / 'nope.brace'))[0] == EXIT_USAGE


def test_output_is_deterministic():
    first = run('example', '--p', '3', '--k', '2', '--seed', '5')
    again = run('example', '--p', '3', '--k', '2', '--seed', '5')
    parallel = run('--workers', '2', 'example', '--p', '3', '--k', '2', '--seed', '5')
    assert first == again == parallel


def test_enumerate_worker_independent():
    assert run('enumerate', '2:[1,1]', '--format', 'tsv') == \
        run('enumerate', '2:[1,1]', '--format', 'tsv', '--workers', '3')


def test_flags(tmp_path):
    parameters = tmp_path / 'params.json'
    parameters.write_text('{"seed": 9, "n_sample_elements": 50}')
    args = build_parser().parse_args(['-p', str(parameters), 'verify', 'x', '--seed', '3'])
    params = params_from_args(args)
    assert params.seed == 3
    assert params.n_sample_elements == 50
    assert params.logging
    assert run('--seed', '-1', 'group', 'info', '3:[2]')[0] == EXIT_USAGE


def test_usage_errors():
    assert main([], out=io.StringIO()) == EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        main(['frobnicate'], out=io.StringIO())
    assert e.value.code == 2
