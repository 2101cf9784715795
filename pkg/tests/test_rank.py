import pytest

from skewbrace.errors import SizeBoundError
from skewbrace.pgroup import parse_spec
from skewbrace.rank import IndexGroup, rank_general


@pytest.mark.parametrize('text,rank', [('3:[2]', 1), ('3:[3]', 1), ('3:[1,1]', 2),
                                       ('2:[1,1,1]', 3), ('2:[2,1]', 2), ('3:[2,2]', 2)])
def test_additive_rank(text, rank):
    assert rank_general(IndexGroup.additive(parse_spec(text))) == rank


def test_cap_stops_early():
    G = parse_spec('2:[1,1,1]')
    assert rank_general(IndexGroup.additive(G), cap=1) == 1


def test_bound():
    with pytest.raises(SizeBoundError):
        rank_general(IndexGroup.additive(parse_spec('3:[2]')), bound=4)


def test_circle_rank_can_grow(brace_z4):
    # (Z/4, o) is a Klein four-group
    assert rank_general(IndexGroup.circle(brace_z4)) == 2


def test_circle_rank_of_example(brace32):
    # Omega_1(H) with one element outside H: exponent 3, order 27
    assert rank_general(IndexGroup.circle(brace32)) == 3
    assert rank_general(IndexGroup.circle(brace32), cap=2) == 2


def test_power(brace32):
    group = IndexGroup.circle(brace32)
    g = brace32.spec.element((1, 0))
    assert int(group.power(g.index, 3)) == brace32.circle_power_iter(g, 3).index
