from fractions import Fraction as F
from itertools import islice
from math import comb

from hgcauchy.combinat import (
    STRICT_COMPOSITION_CAP,
    multinomial,
    strict_compositions,
    weak_compositions,
)
from hgcauchy.rational import format_rational, parse_rational, rat


def test_strict_composition_counts():
    assert list(strict_compositions(0)) == [()]
    for total in range(1, 11):
        comps = list(strict_compositions(total))
        assert len(comps) == 2 ** (total - 1)
        assert all(sum(c) == total and min(c) >= 1 for c in comps)


def test_strict_compositions_are_lexicographic():
    comps = list(strict_compositions(5))
    assert comps == sorted(comps)
    assert len(set(comps)) == len(comps)


def test_generator_is_lazy_and_uncapped():
    # the raw generator carries no cap (the table builders enforce theirs);
    # pulling a prefix of a huge enumeration must return instantly
    opening = list(islice(strict_compositions(STRICT_COMPOSITION_CAP + 8), 2))
    assert opening[0] == (1,) * (STRICT_COMPOSITION_CAP + 8)
    assert opening[1] == (1,) * (STRICT_COMPOSITION_CAP + 6) + (2,)


def test_weak_composition_counts():
    for total in range(6):
        for parts in range(1, 5):
            comps = list(weak_compositions(total, parts))
            assert len(comps) == comb(total + parts - 1, parts - 1)
            assert all(sum(c) == total and len(c) == parts for c in comps)


def test_multinomial_values():
    assert multinomial(()) == 1
    assert multinomial((3,)) == 1
    assert multinomial((1, 1)) == 2
    assert multinomial((2, 1, 1)) == 12


def test_rational_round_trip():
    for value in (F(0), F(1, 2), F(-19, 720), F(7)):
        assert parse_rational(format_rational(value)) == value
    assert format_rational(F(-1, 12)) == "-1/12"
    assert parse_rational(" 3/4 ") == F(3, 4)
    assert rat(2, 6) == F(1, 3)
