import itertools

import pytest

from _support import artin_key, divisor_poset
from braidkit.normal_form import equal
from braidkit.simple import (
    NotSimpleError,
    SimpleElement,
    all_simples,
    delta,
    from_word,
    join,
    left_divides_atom,
    meet,
    meet_right,
    right_complement,
    to_word,
)
from braidkit.words import BraidWord, concat, delta_word, parse_word, permutation


def s(text, n):
    return from_word(parse_word(text, n))


def test_delta():
    assert to_word(delta(2)).letters == (1,)
    assert to_word(delta(3)).letters == (1, 2, 1)
    assert delta(3).perm == (2, 1, 0)
    assert to_word(delta(1)).letters == ()
    for n in range(1, 7):
        assert len(to_word(delta(n))) == n * (n - 1) // 2
        assert to_word(delta(n)) == delta_word(n)


def test_from_word():
    assert s("1 2", 3).perm == permutation(parse_word("1 2", 3)).images
    with pytest.raises(NotSimpleError, match="cross twice"):
        s("1 1", 3)
    with pytest.raises(NotSimpleError, match="not positive"):
        s("-1", 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bijection_with_permutations(n):
    simples = all_simples(n)
    assert len({x.perm for x in simples}) == len(list(itertools.permutations(range(n))))
    for x in simples:
        assert from_word(to_word(x)) == x
        assert permutation(to_word(x)).images == x.perm


def test_left_divides_atom_examples():
    assert left_divides_atom(1, delta(3))
    assert not left_divides_atom(2, s("1", 3))
    assert not left_divides_atom(1, s("2 1", 3))
    assert left_divides_atom(2, s("2 1", 3))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_left_divides_atom_matches_brute_force(n):
    poset = divisor_poset(n)
    for key in poset.divisors:
        elem = from_word(poset.word[key])
        for i in range(1, n):
            atom = artin_key(BraidWord(n, (i,)))
            assert left_divides_atom(i, elem) == poset.leq(atom, key)


def test_meet_join_examples():
    a, b = s("1", 3), s("2", 3)
    assert meet(a, b).is_identity()
    assert join(a, b) == delta(3)
    assert to_word(join(s("1", 4), s("3", 4))).letters == (1, 3)
    for x in all_simples(3):
        assert meet(delta(3), x) == x
        assert meet(x, x) == x
        assert join(x, SimpleElement.identity(3)) == x
        assert meet_right(delta(3), x) == x


def test_right_complement():
    assert right_complement(SimpleElement.identity(3)) == delta(3)
    assert right_complement(delta(3)).is_identity()
    assert to_word(right_complement(s("1", 3))).letters == (2, 1)
    for n in range(1, 6):
        for x in all_simples(n):
            assert equal(concat(to_word(x), to_word(right_complement(x))), delta_word(n))


def test_meet_right():
    assert meet_right(s("1", 3), s("2", 3)).is_identity()
    assert to_word(meet_right(s("1 2", 3), s("2", 3))).letters == (2,)


@pytest.mark.parametrize("n", [3, 4])
def test_lattice_laws(n):
    simples = all_simples(n)
    for a, b in itertools.product(simples, repeat=2):
        m, j = meet(a, b), join(a, b)
        assert m == meet(b, a) and j == join(b, a)
        assert meet(a, j) == a
        assert join(a, m) == a
    for a, b, c in itertools.islice(itertools.product(simples, repeat=3), 0, None, 7):
        assert meet(meet(a, b), c) == meet(a, meet(b, c))
        assert join(join(a, b), c) == join(a, join(b, c))
