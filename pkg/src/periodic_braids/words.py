"""Braid words, band words and permutations.

Letters of an :class:`ArtinWord` are signed integers: ``i`` stands for
sigma_i and ``-i`` for its inverse.  Band letters are ``(t, s, sign)``
triples with ``t > s``.

Permutations follow the right-action convention: the letters of a word
are applied from left to right to *positions*, and ``pi(i)`` is the final
position of the strand that starts at position ``i``.  Internally images
are 0-indexed; everything user facing is 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]  # 0-indexed: images[i] = pi(i)

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.one_line()}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_one_line(cls, values: Sequence[int]) -> Permutation:
        return cls(tuple(v - 1 for v in values))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls(tuple(img))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] + 1

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other`` (permutation of a product word)."""
        return Permutation(tuple(other.images[v] for v in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def fixed_points(self) -> list[int]:
        return [i + 1 for i, v in enumerate(self.images) if i == v]

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least element, 1-indexed."""
        seen = [False] * self.size
        out = []
        for i in range(self.size):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def one_line(self) -> str:
        return " ".join(str(v + 1) for v in self.images)

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class ArtinWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 strands, got {self.n}")
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"letter {x} out of range for {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: ArtinWord) -> ArtinWord:
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return ArtinWord(self.n, self.letters + other.letters)

    def __pow__(self, e: int) -> ArtinWord:
        base = self if e >= 0 else self.inverse()
        return ArtinWord(self.n, base.letters * abs(e))

    def inverse(self) -> ArtinWord:
        return ArtinWord(self.n, tuple(-x for x in reversed(self.letters)))

    def __str__(self) -> str:
        return render_word(self)


@dataclass(frozen=True)
class BandWord:
    m: int
    letters: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"need at least 2 points, got {self.m}")
        for t, s, e in self.letters:
            if not (1 <= s < t <= self.m) or e not in (1, -1):
                raise ValueError(f"bad band letter a({t},{s})^{e} for {self.m} points")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BandWord) -> BandWord:
        if other.m != self.m:
            raise ValueError("point counts differ")
        return BandWord(self.m, self.letters + other.letters)

    def __pow__(self, e: int) -> BandWord:
        base = self if e >= 0 else self.inverse()
        return BandWord(self.m, base.letters * abs(e))

    def inverse(self) -> BandWord:
        return BandWord(self.m, tuple((t, s, -e) for t, s, e in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(e for _, _, e in self.letters)

    def __str__(self) -> str:
        return render_band_word(self)


def parse_word(text: str, strands: int) -> ArtinWord:
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise ValueError(f"malformed letter {tok!r}") from None
        letters.append(x)
    return ArtinWord(strands, tuple(letters))


def render_word(w: ArtinWord) -> str:
    return " ".join(str(x) for x in w.letters)


def parse_band_word(text: str, points: int) -> BandWord:
    letters = []
    for tok in text.split():
        sign = 1
        body = tok
        if body.startswith("-"):
            sign, body = -1, body[1:]
        parts = body.split(":")
        if len(parts) != 2:
            raise ValueError(f"malformed band letter {tok!r}")
        try:
            t, s = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"malformed band letter {tok!r}") from None
        letters.append((t, s, sign))
    return BandWord(points, tuple(letters))


def render_band_word(w: BandWord) -> str:
    return " ".join(("-" if e < 0 else "") + f"{t}:{s}" for t, s, e in w.letters)


def exponent_sum(w: ArtinWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def word_permutation(w: ArtinWord) -> Permutation:
    # track where each position's strand sits: pos_of[strand] after each swap
    at = list(range(w.n))  # at[position] = starting position of the strand there
    for x in w.letters:
        i = abs(x) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    img = [0] * w.n
    for pos, strand in enumerate(at):
        img[strand] = pos
    return Permutation(tuple(img))


def band_permutation(w: BandWord) -> Permutation:
    at = list(range(w.m))
    for t, s, _ in w.letters:
        at[s - 1], at[t - 1] = at[t - 1], at[s - 1]
    img = [0] * w.m
    for pos, strand in enumerate(at):
        img[strand] = pos
    return Permutation(tuple(img))


def sigma_run(start: int, end: int, n: int) -> ArtinWord:
    """Shortest positive word carrying puncture ``start`` to ``end``.

    ``sigma_run(i, j)`` is sigma_i ... sigma_{j-1} for i < j and
    sigma_{i-1} ... sigma_j for i > j; equal endpoints give the empty word.
    """
    if not (1 <= start <= n and 1 <= end <= n):
        raise ValueError(f"puncture out of range 1..{n}")
    if start < end:
        return ArtinWord(n, tuple(range(start, end)))
    return ArtinWord(n, tuple(range(start - 1, end - 1, -1)))


def invert_word(w: ArtinWord) -> ArtinWord:
    return w.inverse()


def free_reduce(w: ArtinWord) -> ArtinWord:
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return ArtinWord(w.n, tuple(out))


def delta_word(n: int) -> ArtinWord:
    """delta = sigma_{n-1} ... sigma_1."""
    return ArtinWord(n, tuple(range(n - 1, 0, -1)))


def epsilon_word(n: int) -> ArtinWord:
    """epsilon = sigma_1 delta."""
    return ArtinWord(n, (1,) + tuple(range(n - 1, 0, -1)))


def half_twist_word(n: int) -> ArtinWord:
    """Delta = sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1)."""
    letters: list[int] = []
    for j in range(1, n):
        letters.extend(range(j, 0, -1))
    return ArtinWord(n, tuple(letters))
