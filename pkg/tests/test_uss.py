from itertools import permutations

import pytest

from periodic_braids.classical import PermBraid, conjugate_nf, normal_form_artin, uss_artin
from periodic_braids.uss import (
    DeltaUssPattern,
    EpsilonUssPattern,
    conjugator_alpha,
    conjugator_beta,
    delta_patterns,
    enumerate_uss,
    epsilon_patterns,
    pattern_braid,
    uss_count,
    uss_delta_member,
    uss_epsilon_member,
)
from periodic_braids.words import Permutation, delta_word, epsilon_word, exponent_sum


def braid(n, cycles):
    return PermBraid(n, Permutation.from_cycles(n, cycles))


def simple_of(nf):
    """The simple braid of a normal form of canonical length at most 1 (epsilon_3 is Delta)."""
    return PermBraid.from_images(nf.factors[0] if nf.factors else tuple(range(nf.n - 1, -1, -1)))


def test_delta_member_examples():
    for n in range(3, 9):
        d = simple_of(normal_form_artin(delta_word(n)))
        p = uss_delta_member(d)
        assert p.u == tuple(range(2, n)) and p.d == ()
    p = uss_delta_member(braid(4, [(1, 2, 4, 3)]))
    assert p == DeltaUssPattern(4, (2,), (3,))
    assert uss_delta_member(braid(4, [(1, 3, 2, 4)])) is None
    assert uss_delta_member(braid(4, [(1, 2, 3)])) is None


def test_non_unimodal_eight_cycle_with_nine_crossings():
    """An 8-cycle simple braid of exponent sum 9 cannot be conjugate to delta."""
    n = 8
    hit = None
    for rest in permutations(range(2, n + 1)):
        b = braid(n, [(1,) + rest])
        if b.crossings() == 9:
            hit = b
            break
    assert hit is not None
    assert uss_delta_member(hit) is None


def test_alpha_examples():
    assert conjugator_alpha(DeltaUssPattern(5, (2, 3, 4), ())).letters == ()
    assert conjugator_alpha(DeltaUssPattern(4, (2,), (3,))).letters == (2, 1)
    assert conjugator_alpha(DeltaUssPattern(5, (), (2, 4))).letters == (1, 3, 2, 1)


def test_epsilon_member_examples():
    for n in range(3, 9):
        e = simple_of(normal_form_artin(epsilon_word(n)))
        p = uss_epsilon_member(e)
        assert p.a == 2 and p.d == () and p.u == tuple(range(3, n))
    assert uss_epsilon_member(braid(4, [(2, 3, 4)])) is None
    assert uss_epsilon_member(braid(4, [(1, 2, 3)])) is None
    p = uss_epsilon_member(braid(4, [(1, 2, 4)]))
    assert p == EpsilonUssPattern(4, 3, (2,), ())


def test_beta_examples():
    p = EpsilonUssPattern(6, 2, (3, 4, 5), ())
    assert p.b == 2 and conjugator_beta(p).letters == ()
    p = EpsilonUssPattern(4, 3, (2,), ())
    assert p.b == 3 and conjugator_beta(p).letters == (2,)
    p = EpsilonUssPattern(5, 2, (4,), (3,))
    assert p.b == 3
    assert conjugator_beta(p).letters == (2, 1, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_conjugators_verify(n):
    d = normal_form_artin(delta_word(n))
    e = normal_form_artin(epsilon_word(n))
    for p in delta_patterns(n):
        s = normal_form_artin(pattern_braid(p).word())
        assert conjugate_nf(s, conjugator_alpha(p)) == d
    for p in epsilon_patterns(n):
        s = normal_form_artin(pattern_braid(p).word())
        assert conjugate_nf(s, conjugator_beta(p)) == e


def test_enumeration_counts():
    assert len(enumerate_uss(4, "delta")) == 4
    assert len(enumerate_uss(8, "delta")) == 64
    assert len(enumerate_uss(8, "epsilon")) == 192
    assert len(enumerate_uss(3, "epsilon")) == 1
    assert uss_count(20, "delta") == 2**18
    with pytest.raises(ValueError):
        enumerate_uss(2, "delta")
    with pytest.raises(ValueError):
        enumerate_uss(5, "gamma")
    with pytest.raises(ValueError):
        uss_count(5, "gamma")


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_exponent_sums(n):
    for s in enumerate_uss(n, "delta"):
        assert exponent_sum(s.word()) == n - 1
    for s in enumerate_uss(n, "epsilon"):
        assert exponent_sum(s.word()) == n


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_matches_generic_uss(n):
    for family, w in (("delta", delta_word(n)), ("epsilon", epsilon_word(n))):
        members = uss_artin(w)
        generic = {simple_of(m) for m in members}
        assert all(m.inf + m.length == 1 for m in members)
        assert generic == enumerate_uss(n, family)
