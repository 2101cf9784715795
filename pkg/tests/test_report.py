import pytest

from skewbrace.report import Report, Verdict, PASS, FAIL, PAPER_GAP, VACUOUS, INFO


def test_verdict_rejects_unknown_status():
    with pytest.raises(ValueError):
        Verdict('x', 'maybe')


def test_report_ok_only_fails_on_fail():
    report = Report('r')
    report.add('a', PAPER_GAP, 'gap')
    report.add('b', VACUOUS)
    report.add('c', INFO, 'n')
    assert report.ok
    report.check('d', False, 'broken', witness=(1, 2))
    assert not report.ok
    assert report.status('d') == FAIL
    assert report['d'].witness == (1, 2)


def test_check_drops_witness_on_pass():
    report = Report('r')
    v = report.check('a', True, witness='w')
    assert v.status == PASS
    assert v.witness is None


def test_render_tsv_is_one_line_per_verdict():
    report = Report('gamma')
    report.add('functional equation', PASS, 'all\t16\npairs')
    report.add('other', INFO)
    assert report.render('tsv') == ('gamma\tfunctional equation\tpass\tall 16 pairs\n'
                                    'gamma\tother\tinfo\t\n')


def test_render_human():
    report = Report('t')
    report.check('x', False, 'bad', witness='(1)')
    assert report.render('human') == '== t ==\n  [FAIL] x: bad (witness: (1))\n'
    with pytest.raises(ValueError):
        report.render('xml')


def test_extend_prefixes_names():
    inner = Report('inner')
    inner.add('a', PASS)
    outer = Report('outer').extend(inner)
    assert outer['inner.a'].status == PASS
    with pytest.raises(KeyError):
        outer['a']
