"""Closed-form ultra summit sets of delta and epsilon.

USS(delta) consists of the simple braids whose permutation is a single
cycle ``(1 u_1 ... u_r n d_t ... d_1)`` climbing from 1 to n through an
increasing sequence and falling back through a decreasing one.  USS(epsilon)
is the same picture on n-1 points with one extra fixed point ``a``,
which can be neither 1 nor n.  Each member comes with an explicit simple
(resp. at most two-factor) conjugator to delta (resp. epsilon).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classical import PermBraid
from .words import ArtinWord, Permutation, sigma_run

MAX_ENUMERATION_N = 12


@dataclass(frozen=True)
class DeltaUssPattern:
    n: int
    u: tuple[int, ...]  # increasing
    d: tuple[int, ...]  # d_1 < ... < d_t

    def cycle(self) -> tuple[int, ...]:
        return (1,) + self.u + (self.n,) + tuple(reversed(self.d))


@dataclass(frozen=True)
class EpsilonUssPattern:
    n: int
    a: int
    u: tuple[int, ...]
    d: tuple[int, ...]

    @property
    def b(self) -> int:
        below = [i for i, di in enumerate(self.d, start=1) if di < self.a]
        return self.a + len(self.d) - (max(below) if below else 0)

    def cycle(self) -> tuple[int, ...]:
        return (1,) + self.u + (self.n,) + tuple(reversed(self.d))


def _split_cycle(cyc: tuple[int, ...], n: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Split ``(1 ... n ...)`` into its climb and fall, or None if not unimodal."""
    if cyc[0] != 1 or n not in cyc:
        return None
    top = cyc.index(n)
    up, down = cyc[1:top], cyc[top + 1:]
    if list(up) != sorted(up) or list(down) != sorted(down, reverse=True):
        return None
    return tuple(up), tuple(reversed(down))


def uss_delta_member(s: PermBraid) -> DeltaUssPattern | None:
    n = s.n
    cycles = s.perm.cycles()
    if len(cycles) != 1 or len(cycles[0]) != n:
        return None
    split = _split_cycle(cycles[0], n)
    if split is None:
        return None
    return DeltaUssPattern(n, *split)


def uss_epsilon_member(s: PermBraid) -> EpsilonUssPattern | None:
    n = s.n
    fixed = s.perm.fixed_points()
    cycles = s.perm.cycles()
    if len(fixed) != 1 or len(cycles) != 1 or len(cycles[0]) != n - 1:
        return None
    a = fixed[0]
    if a in (1, n):
        return None
    split = _split_cycle(cycles[0], n)
    if split is None:
        return None
    return EpsilonUssPattern(n, a, *split)


def _runs_to_one(n: int, d: tuple[int, ...]) -> list[int]:
    letters: list[int] = []
    for di in d:
        letters.extend(sigma_run(di, 1, n).letters)
    return letters


def conjugator_alpha(p: DeltaUssPattern) -> ArtinWord:
    """alpha with alpha^-1 s alpha = delta."""
    return ArtinWord(p.n, tuple(_runs_to_one(p.n, p.d)))


def conjugator_beta(p: EpsilonUssPattern) -> ArtinWord:
    """beta with beta^-1 s beta = epsilon."""
    letters = _runs_to_one(p.n, p.d) + list(sigma_run(p.b, 2, p.n).letters)
    return ArtinWord(p.n, tuple(letters))


def pattern_braid(p: DeltaUssPattern | EpsilonUssPattern) -> PermBraid:
    return PermBraid(p.n, Permutation.from_cycles(p.n, [p.cycle()]))


def delta_patterns(n: int) -> list[DeltaUssPattern]:
    inner = list(range(2, n))
    out = []
    for r in range(len(inner) + 1):
        for up in combinations(inner, r):
            down = tuple(v for v in inner if v not in up)
            out.append(DeltaUssPattern(n, up, down))
    return out


def epsilon_patterns(n: int) -> list[EpsilonUssPattern]:
    out = []
    for a in range(2, n):
        inner = [v for v in range(2, n) if v != a]
        for r in range(len(inner) + 1):
            for up in combinations(inner, r):
                down = tuple(v for v in inner if v not in up)
                out.append(EpsilonUssPattern(n, a, up, down))
    return out


def enumerate_uss(n: int, family: str) -> set[PermBraid]:
    if not 3 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"n={n} outside the enumeration range 3..{MAX_ENUMERATION_N}")
    if family == "delta":
        pats: list = delta_patterns(n)
    elif family == "epsilon":
        pats = epsilon_patterns(n)
    else:
        raise ValueError(f"family must be 'delta' or 'epsilon', got {family!r}")
    return {pattern_braid(p) for p in pats}


def uss_count(n: int, family: str) -> int:
    """Closed-form size: 2^(n-2) for delta, (n-2) 2^(n-3) for epsilon."""
    if family == "delta":
        return 2 ** (n - 2)
    if family == "epsilon":
        return (n - 2) * 2 ** (n - 3)
    raise ValueError(f"family must be 'delta' or 'epsilon', got {family!r}")
