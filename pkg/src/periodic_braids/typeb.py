"""Bridge between braids fixing puncture 2 and symmetric band braids.

Three groups are identified here:

* ``P_{n,2}``, the braids in ``B_n`` whose permutation fixes 2;
* the Artin group of type ``B_{n-1}`` with generators ``s_1 .. s_{n-1}``;
* ``Sym_{2n-2}``, the braids on ``2n-2`` points invariant under rotation
  by half a turn (index shift by ``n-1``).

``rho`` maps type B to ``P_{n,2}`` and ``theta'`` maps type B to the
symmetric braids.  :func:`artin_to_sym` goes straight from a word in
``P_{n,2}`` to a band word, and :func:`sym_to_artin` undoes it through the
polygonal decomposition of a band normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import band
from .words import ArtinWord, BandWord, epsilon_word, word_permutation

BandLetter = tuple[int, int, int]


@dataclass(frozen=True)
class TypeBWord:
    rank: int  # n - 1
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")

    @property
    def n(self) -> int:
        return self.rank + 1


def rho_apply(w: TypeBWord) -> ArtinWord:
    """s_1 -> s1^2, s_2 -> s1 s2 s1^-1, s_i -> s_i."""
    out: list[int] = []
    for x in w.letters:
        i, e = abs(x), (1 if x > 0 else -1)
        if i == 1:
            out.extend([e, e])
        elif i == 2:
            out.extend([1, 2 * e, -1])
        else:
            out.append(i * e)
    return ArtinWord(w.n, tuple(out))


def theta_prime_apply(w: TypeBWord) -> BandWord:
    """s_1 -> a_{n,1}, s_i -> a_{i,i-1} a_{i+n-1,i+n-2}."""
    n = w.n
    out: list[BandLetter] = []
    for x in w.letters:
        i, e = abs(x), (1 if x > 0 else -1)
        if i == 1:
            out.append((n, 1, e))
        else:
            pair = [(i, i - 1, e), (i + n - 1, i + n - 2, e)]
            out.extend(pair if e > 0 else pair[::-1])
    return BandWord(2 * n - 2, tuple(out))


def artin_to_sym(w: ArtinWord) -> BandWord:
    """Letter-by-letter rewrite of a braid fixing 2 into a symmetric band word."""
    n = w.n
    if word_permutation(w)(2) != 2:
        raise ValueError("braid does not fix puncture 2")
    k = 2  # current position of the strand that started at 2
    out: list[BandLetter] = []
    for x in w.letters:
        mu = abs(x)
        if x > 0:
            if mu < k - 1:
                out += [(mu + 1, mu, 1), (mu + n, mu + n - 1, 1)]
            elif mu == k - 1:
                k -= 1
            elif mu == k:
                out.append((mu + n - 1, mu, 1))
                k += 1
            else:
                out += [(mu, mu - 1, 1), (mu + n - 1, mu + n - 2, 1)]
        else:
            if mu < k - 1:
                out += [(mu + n, mu + n - 1, -1), (mu + 1, mu, -1)]
            elif mu == k - 1:
                out.append((mu + n - 1, mu, -1))
                k -= 1
            elif mu == k:
                k += 1
            else:
                out += [(mu + n - 1, mu + n - 2, -1), (mu, mu - 1, -1)]
    return BandWord(2 * n - 2, tuple(out))


@dataclass(frozen=True)
class SymmetricPolygon:
    block: tuple[int, ...]  # full symmetric block, 1-indexed

    def render(self) -> str:
        return "[S{" + ",".join(map(str, self.block)) + "}]"


@dataclass(frozen=True)
class MirrorPair:
    block: tuple[int, ...]  # representative block (smaller minimum of the pair)
    offset: int  # k with block+k (or its mirror+k) inside 1..n-1
    normalized: tuple[int, ...] = field(compare=False, default=())

    def render(self) -> str:
        return "[M{" + ",".join(map(str, self.block)) + f"}}+off{self.offset}]"


@dataclass(frozen=True)
class PolygonalDecomposition:
    n: int
    delta_power: int
    items: tuple = ()
    factor_sizes: tuple[int, ...] = ()  # items per normal-form factor

    @property
    def points(self) -> int:
        return 2 * self.n - 2

    def render(self) -> str:
        return " ".join([f"d^{self.delta_power}"] + [it.render() for it in self.items])

    def __str__(self) -> str:
        return self.render()


def _shift(block, k: int, m: int) -> tuple[int, ...]:
    return tuple(sorted((v - 1 + k) % m + 1 for v in block))


def is_symmetric_simple(x: tuple[int, ...], n: int) -> bool:
    return band.ops(2 * n - 2).tau(x, n - 1) == x


def decompose_polygonal(w: BandWord) -> PolygonalDecomposition:
    m = w.m
    if m % 2 or m < 4:
        raise ValueError(f"symmetric braids live on an even number >= 4 of points, got {m}")
    n = m // 2 + 1
    nf = band.normal_form_band(w)
    o = band.ops(m)
    items: list = []
    sizes = []
    for idx, f in enumerate(nf.factors):
        if not is_symmetric_simple(f, n):
            raise ValueError(f"normal form factor {idx + 1} is not symmetric")
        blocks = o.blocks(f)
        sym = [b for b in blocks if _shift(b, n - 1, m) == b]
        pairs = {}
        for b in blocks:
            mate = _shift(b, n - 1, m)
            if mate != b:
                rep = min(b, mate)
                pairs[rep] = (rep, mate if rep == b else b)
        before = len(items)
        items.extend(SymmetricPolygon(b) for b in sym)
        for rep in sorted(pairs):
            items.append(_mirror_pair(rep, n))
        sizes.append(len(items) - before)
    return PolygonalDecomposition(n, nf.inf, tuple(items), tuple(sizes))


def _mirror_pair(block: tuple[int, ...], n: int) -> MirrorPair:
    m = 2 * n - 2
    mate = _shift(block, n - 1, m)
    for k in range(n - 1):
        for b in (block, mate):
            moved = _shift(b, k, m)
            if moved[-1] <= n - 1:
                return MirrorPair(block, k, moved)
    raise ValueError(f"block {block} and its mirror image do not fit in a half turn")


def _gap_inverses(js: tuple[int, ...]) -> list[int]:
    inside = set(js)
    return [-i for i in range(js[0] + 1, js[-1]) if i not in inside]


def mirror_pair_word(p: MirrorPair, n: int) -> list[int]:
    js = p.normalized
    core = [1] + _gap_inverses(js) + list(range(js[-1], js[0], -1)) + [-1]
    eps = list(epsilon_word(n).letters)
    eps_inv = [-v for v in reversed(eps)]
    return eps * p.offset + core + eps_inv * p.offset


def symmetric_polygon_word(p: SymmetricPolygon, n: int) -> list[int]:
    js = tuple(v for v in p.block if v <= n - 1)
    j1, jd = js[0], js[-1]
    return ([1] + _gap_inverses(js) + list(range(jd, j1, -1)) + list(range(j1, 1, -1))
            + [1, 1] + [-i for i in range(2, j1 + 1)] + [-1])


def symmetric_polygon_word_short(p: SymmetricPolygon, n: int) -> list[int]:
    """The same element written as s1 (gaps^-1) (s_jd .. s_1) s1 (s2^-1 .. s_j1^-1) s1^-1."""
    js = tuple(v for v in p.block if v <= n - 1)
    j1, jd = js[0], js[-1]
    return [1] + _gap_inverses(js) + list(range(jd, 0, -1)) + [1] + [-i for i in range(2, j1 + 1)] + [-1]


def sym_to_artin(d: PolygonalDecomposition) -> ArtinWord:
    n = d.n
    eps = list(epsilon_word(n).letters)
    if d.delta_power >= 0:
        letters = eps * d.delta_power
    else:
        letters = [-v for v in reversed(eps)] * -d.delta_power
    for it in d.items:
        if isinstance(it, SymmetricPolygon):
            letters += symmetric_polygon_word(it, n)
        else:
            letters += mirror_pair_word(it, n)
    return ArtinWord(n, tuple(letters))


def fixed_puncture(w: ArtinWord) -> int:
    fixed = word_permutation(w).fixed_points()
    if len(fixed) != 1:
        raise ValueError(f"expected exactly one fixed puncture, found {len(fixed)}")
    return fixed[0]
