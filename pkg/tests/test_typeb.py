import random
from itertools import combinations

import pytest

from periodic_braids import band
from periodic_braids.band import band_delta, normal_form_band
from periodic_braids.classical import normal_form_artin
from periodic_braids.typeb import (
    MirrorPair,
    PolygonalDecomposition,
    SymmetricPolygon,
    TypeBWord,
    artin_to_sym,
    decompose_polygonal,
    fixed_puncture,
    is_symmetric_simple,
    mirror_pair_word,
    rho_apply,
    sym_to_artin,
    symmetric_polygon_word,
    symmetric_polygon_word_short,
    theta_prime_apply,
)
from periodic_braids.words import (
    ArtinWord,
    BandWord,
    epsilon_word,
    half_twist_word,
    parse_band_word,
    sigma_run,
    word_permutation,
)


def random_p2(n, length, rng):
    w = ArtinWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)))
    return w * sigma_run(word_permutation(w)(2), 2, n)


def same_artin(a, b):
    return normal_form_artin(a) == normal_form_artin(b)


def test_rho_examples():
    assert rho_apply(TypeBWord(3, (1,))).letters == (1, 1)
    assert rho_apply(TypeBWord(3, (2,))).letters == (1, 2, -1)
    for n in range(3, 8):
        alpha = TypeBWord(n - 1, tuple(range(n - 1, 0, -1)))
        assert same_artin(rho_apply(alpha), epsilon_word(n))


def test_theta_prime_examples():
    n = 5
    assert theta_prime_apply(TypeBWord(n - 1, (1,))).letters == ((n, 1, 1),)
    assert theta_prime_apply(TypeBWord(n - 1, (2,))).letters == ((2, 1, 1), (n + 1, n, 1))
    for n in range(3, 8):
        alpha = TypeBWord(n - 1, tuple(range(n - 1, 0, -1)))
        assert normal_form_band(theta_prime_apply(alpha)).raw == (1, ())


def test_typeb_word_validation():
    with pytest.raises(ValueError):
        TypeBWord(3, (4,))
    with pytest.raises(ValueError):
        TypeBWord(3, (0,))


def test_artin_to_sym_examples():
    n = 5
    assert artin_to_sym(ArtinWord(n, (1, 1))).letters == ((n, 1, 1),)
    assert artin_to_sym(ArtinWord(n)).letters == ()
    for n in range(3, 8):
        assert normal_form_band(artin_to_sym(epsilon_word(n))).raw == (1, ())
    with pytest.raises(ValueError):
        artin_to_sym(ArtinWord(4, (1,)))


def test_artin_to_sym_agrees_with_theta_prime():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(3, 7)
        b = TypeBWord(n - 1, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(8)))
        lhs = normal_form_band(artin_to_sym(rho_apply(b)))
        assert lhs == normal_form_band(theta_prime_apply(b))


def test_decompose_examples():
    for n in range(3, 7):
        m = 2 * n - 2
        d = decompose_polygonal(band_delta(m).word() ** 3)
        assert d.delta_power == 3 and d.items == ()
    n = 5
    d = decompose_polygonal(BandWord(8, ((n, 1, 1),)))
    assert d.items == (SymmetricPolygon((1, n)),)
    assert d.render() == "d^0 [S{1,5}]"
    d = decompose_polygonal(BandWord(8, ((2, 1, 1), (n + 1, n, 1))))
    assert len(d.items) == 1 and isinstance(d.items[0], MirrorPair)
    assert d.items[0].block == (1, 2) and d.items[0].offset == 0
    assert d.render() == "d^0 [M{1,2}+off0]"
    with pytest.raises(ValueError):
        decompose_polygonal(parse_band_word("2:1", 8))
    with pytest.raises(ValueError):
        decompose_polygonal(parse_band_word("2:1", 5))


def test_sym_to_artin_examples():
    for n in range(3, 7):
        assert same_artin(sym_to_artin(PolygonalDecomposition(n, 2)), epsilon_word(n) ** 2)
        assert same_artin(sym_to_artin(PolygonalDecomposition(n, -1)), epsilon_word(n) ** -1)
    n = 5
    poly = ArtinWord(n, tuple(symmetric_polygon_word(SymmetricPolygon((1, n)), n)))
    assert same_artin(poly, ArtinWord(n, (1, 1)))
    pair = decompose_polygonal(BandWord(8, ((2, 1, 1), (n + 1, n, 1)))).items[0]
    got = ArtinWord(n, tuple(mirror_pair_word(pair, n)))
    assert same_artin(got, rho_apply(TypeBWord(n - 1, (2,))))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_polygon_forms_agree(n):
    """Both spellings of every symmetric polygon give the same braid."""
    m = 2 * n - 2
    for size in range(1, n):
        for half in combinations(range(1, n), size):
            block = tuple(sorted(set(half) | {v + n - 1 for v in half}))
            x = band.perm_from_blocks(m, [[v - 1 for v in block]])
            assert is_symmetric_simple(x, n)
            p = SymmetricPolygon(block)
            a = ArtinWord(n, tuple(symmetric_polygon_word(p, n)))
            b = ArtinWord(n, tuple(symmetric_polygon_word_short(p, n)))
            assert same_artin(a, b)
            d = decompose_polygonal(band.NormalFormB(m, 0, (x,)).word())
            if len(block) == m:
                assert d.delta_power == 1 and d.items == ()
            else:
                assert d.items == (p,)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_round_trip(n):
    rng = random.Random(100 + n)
    for _ in range(60):
        w = random_p2(n, rng.randint(0, 25), rng)
        z = artin_to_sym(w)
        assert len(z) <= 2 * len(w)
        d = decompose_polygonal(z)
        assert same_artin(sym_to_artin(d), w)
        assert all(is_symmetric_simple(f, n) for f in normal_form_band(z).factors)
        assert sum(d.factor_sizes) == len(d.items)


def test_fixed_puncture_examples():
    for n in range(3, 8):
        assert fixed_puncture(epsilon_word(n)) == 2
        for a in range(1, n + 1):
            c = sigma_run(a, 2, n)
            assert fixed_puncture(c * epsilon_word(n) * c.inverse()) == a
    with pytest.raises(ValueError):
        fixed_puncture(half_twist_word(4) ** 2)
