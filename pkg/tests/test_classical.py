import random

import pytest

from periodic_braids import classical
from periodic_braids.classical import (
    NormalFormA,
    PermBraid,
    USSOverflow,
    USSTimeout,
    conjugate_nf,
    cycling_artin,
    decycling_artin,
    half_twist,
    is_left_weighted,
    min_length_representative,
    normal_form_artin,
    tau_artin,
    uss_artin,
    uss_closure,
)
from periodic_braids.words import ArtinWord, delta_word, epsilon_word, half_twist_word, parse_word

import oracles


def nf(text, n):
    return normal_form_artin(parse_word(text, n))


def test_half_twist():
    assert half_twist(3).images == (2, 1, 0)
    assert str(half_twist(3)) == "3 2 1"
    assert half_twist(2).images == (1, 0)


def test_normal_form_examples():
    assert nf("", 3).raw == (0, ())
    assert nf("1 2 1", 3).raw == (1, ())
    assert nf("1 2 1", 3).render() == "D^1 |"
    r = nf("1 1", 3)
    assert r.inf == 0 and len(r.factors) == 2
    assert all(f == classical.ops(3).atom(0) for f in r.factors)
    assert r.render() == "D^0 | 2 1 3 | 2 1 3"
    assert nf("-1", 3).render() == "D^-1 | 3 1 2"


def test_normal_form_word_is_equal():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(2, 6)
        w = ArtinWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 20))))
        r = normal_form_artin(w)
        assert normal_form_artin(r.word()) == r
        assert is_left_weighted(r)


@pytest.mark.parametrize("n", [3, 4])
def test_normal_form_matches_positive_oracle(n):
    """Each factor is the longest simple prefix of the remaining positive word."""
    rules = oracles.artin_relations(n)
    simple = oracles.classical_simple_words(n)
    rng = random.Random(n)
    o = classical.ops(n)
    for _ in range(40):
        word = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(1, 7)))
        r = normal_form_artin(ArtinWord(n, word))
        assert r.word().letters in oracles.positive_class(word, rules)
        factors = [o.delta] * r.inf + list(r.factors)
        rest = r.word().letters
        for f in factors:
            size = len(o.simple_letters(f))
            assert oracles.max_simple_prefix_length(rest, rules, simple) == size
            rest = rest[size:]


def test_equal_positive_words_share_normal_form():
    n = 4
    rules = oracles.artin_relations(n)
    rng = random.Random(11)
    for _ in range(30):
        word = tuple(rng.randint(1, n - 1) for _ in range(6))
        cls = oracles.positive_class(word, rules)
        forms = {normal_form_artin(ArtinWord(n, w)) for w in cls}
        assert len(forms) == 1
        other = tuple(rng.randint(1, n - 1) for _ in range(6))
        same = normal_form_artin(ArtinWord(n, other)) in forms
        assert same == (other in cls)


def test_tau_examples():
    s1 = PermBraid.from_images(classical.ops(4).atom(0))
    assert tau_artin(s1).images == classical.ops(4).atom(2)
    assert tau_artin(half_twist(4)) == half_twist(4)
    ident = PermBraid.from_images((0, 1, 2, 3))
    assert tau_artin(ident) == ident
    # check against the normal form of Delta^-1 s1 Delta
    d = half_twist_word(4)
    assert nf("1", 4).raw != normal_form_artin(d.inverse() * parse_word("1", 4) * d).raw
    assert normal_form_artin(d.inverse() * parse_word("1", 4) * d).raw == (0, (classical.ops(4).atom(2),))


def test_cycling_examples():
    pure = nf("1 2 1 1 2 1", 3)
    assert cycling_artin(pure) == (pure, ArtinWord(3))
    assert decycling_artin(pure) == (pure, ArtinWord(3))
    x = nf("1 1", 3)
    y, c = cycling_artin(x)
    assert y == x and c.letters == (1,)
    assert conjugate_nf(x, c) == y
    y, c = decycling_artin(x)
    assert c.letters == (-1,)
    assert conjugate_nf(x, c) == y


def test_cycling_returns_on_uss():
    for w in [delta_word(5), epsilon_word(5), parse_word("1 1 2 -3", 4)]:
        for member in uss_artin(w):
            cur = member
            for _ in range(100):
                cur, _ = cycling_artin(cur)
                if cur == member:
                    break
            assert cur == member


def test_min_length_examples():
    r, c = min_length_representative(delta_word(4))
    assert r.length == 1 and c.letters == ()
    r, c = min_length_representative(half_twist_word(3) ** 2)
    assert r.raw == (2, ()) and c.letters == ()
    w = parse_word("-1", 4) * delta_word(4) * parse_word("1", 4)
    r, c = min_length_representative(w)
    assert r.length == 1
    assert conjugate_nf(normal_form_artin(w), c) == r


def test_min_length_receipts():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(3, 6)
        w = ArtinWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(15)))
        r, c = min_length_representative(w)
        assert conjugate_nf(normal_form_artin(w), c) == r
        assert r.length <= normal_form_artin(w).length


def test_uss_examples():
    assert len(uss_artin(delta_word(4))) == 4
    assert len(uss_artin(epsilon_word(4))) == 4
    twist = normal_form_artin(half_twist_word(5) ** 2)
    assert uss_artin(half_twist_word(5) ** 2) == {twist}


def test_uss_members_share_length():
    w = parse_word("1 2 -3 2 2", 4)
    members = uss_artin(w)
    assert len({m.length for m in members}) == 1


def test_uss_closure_conjugators():
    w = parse_word("-2", 4) * epsilon_word(4) * parse_word("2 3", 4)
    found = uss_closure(w)
    for raw, toks in found.items():
        c = classical.tokens_word(4, toks)
        assert conjugate_nf(normal_form_artin(w), c).raw == raw


def test_uss_closure_limits():
    with pytest.raises(USSOverflow):
        uss_closure(delta_word(6), cap=3)
    with pytest.raises(USSOverflow):
        uss_closure(delta_word(6), max_conjugations=10)
    with pytest.raises(USSTimeout):
        uss_closure(delta_word(8), deadline=0.0)


def test_normal_form_render_and_word():
    r = NormalFormA(3, -1, ((1, 2, 0),))
    assert r.render() == "D^-1 | 2 3 1"
    assert normal_form_artin(r.word()) == r
