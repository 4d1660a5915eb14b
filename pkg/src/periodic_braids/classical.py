"""Classical Garside structure on the Artin braid group.

Simple elements are permutation braids; a permutation ``pi`` (0-indexed
images) stands for the positive braid in which strands starting at
``i < j`` cross exactly when ``pi(i) > pi(j)``.  The starting set of a
simple element is its descent set ``{i : pi(i) > pi(i+1)}`` and its
finishing set is the descent set of ``pi^-1``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from . import _garside as G
from .words import ArtinWord, Permutation, half_twist_word

Simple = tuple[int, ...]
NF = tuple[int, tuple[Simple, ...]]


class ClassicalOps:
    def __init__(self, n: int) -> None:
        if n < 2:
            raise ValueError(f"need at least 2 strands, got {n}")
        self.size = n
        self.identity: Simple = tuple(range(n))
        self.delta: Simple = tuple(range(n - 1, -1, -1))
        self.delta_length = n * (n - 1) // 2
        self._rev = list(range(n - 1, -1, -1))

    def mul(self, x: Simple, y: Simple) -> Simple:
        return tuple([y[v] for v in x])

    def tau(self, x: Simple, e: int = 1) -> Simple:
        if e % 2 == 0:
            return x
        n1 = self.size - 1
        return tuple([n1 - x[n1 - j] for j in range(self.size)])

    def right_complement(self, x: Simple) -> Simple:
        # x^-1 Delta
        n1 = self.size - 1
        inv = G.inverse_perm(x)
        return tuple([n1 - v for v in inv])

    def left_complement(self, x: Simple) -> Simple:
        # Delta x^-1
        inv = G.inverse_perm(x)
        n1 = self.size - 1
        return tuple([inv[n1 - j] for j in range(self.size)])

    def left_weight(self, a: Simple, b: Simple) -> tuple[Simple, Simple] | None:
        """Move atoms of S(b) outside F(a) across the bar until none remain."""
        ai = [0] * self.size
        for i, v in enumerate(a):
            ai[v] = i
        bl = list(b)
        stack = [i for i in range(self.size - 1) if bl[i] > bl[i + 1] and ai[i] < ai[i + 1]]
        if not stack:
            return None
        last = self.size - 2
        pop, push = stack.pop, stack.append
        while stack:
            i = pop()
            j = i + 1
            if bl[i] > bl[j] and ai[i] < ai[j]:
                bl[i], bl[j] = bl[j], bl[i]
                ai[i], ai[j] = ai[j], ai[i]
                if i:
                    push(i - 1)
                if i < last:
                    push(j)
        out = [0] * self.size
        for i, v in enumerate(ai):
            out[v] = i
        return tuple(out), tuple(bl)

    def append_atom(self, x: Simple, i: int) -> Simple | None:
        """x * sigma_{i+1} if still simple (0-indexed atom i)."""
        inv = G.inverse_perm(x)
        if inv[i] > inv[i + 1]:
            return None
        out = list(x)
        out[inv[i]], out[inv[i + 1]] = i + 1, i
        return tuple(out)

    def prepend_atom(self, i: int, x: Simple) -> Simple | None:
        """sigma_{i+1} * x if still simple."""
        if x[i] > x[i + 1]:
            return None
        out = list(x)
        out[i], out[i + 1] = out[i + 1], out[i]
        return tuple(out)

    def atom(self, i: int) -> Simple:
        out = list(range(self.size))
        out[i], out[i + 1] = i + 1, i
        return tuple(out)

    def simple_letters(self, x: Simple) -> list[int]:
        """A positive word (1-indexed letters) for the permutation braid."""
        cur = list(x)
        out = []
        i = 0
        while i < self.size - 1:
            if cur[i] > cur[i + 1]:
                out.append(i + 1)
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                i = max(i - 1, 0)
            else:
                i += 1
        return out

    def starting_set(self, x: Simple) -> set[int]:
        return {i + 1 for i in range(self.size - 1) if x[i] > x[i + 1]}

    def finishing_set(self, x: Simple) -> set[int]:
        inv = G.inverse_perm(x)
        return {i + 1 for i in range(self.size - 1) if inv[i] > inv[i + 1]}


@lru_cache(maxsize=None)
def ops(n: int) -> ClassicalOps:
    return ClassicalOps(n)


@dataclass(frozen=True)
class PermBraid:
    n: int
    perm: Permutation

    @classmethod
    def from_images(cls, images: Simple) -> PermBraid:
        return cls(len(images), Permutation(tuple(images)))

    @property
    def images(self) -> Simple:
        return self.perm.images

    def word(self) -> ArtinWord:
        return ArtinWord(self.n, tuple(ops(self.n).simple_letters(self.images)))

    def crossings(self) -> int:
        x = self.images
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if x[i] > x[j])

    def __str__(self) -> str:
        return self.perm.one_line()


@dataclass(frozen=True)
class NormalFormA:
    n: int
    inf: int
    factors: tuple[Simple, ...] = ()

    @property
    def length(self) -> int:
        """Canonical length."""
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def raw(self) -> NF:
        return (self.inf, self.factors)

    def braids(self) -> list[PermBraid]:
        return [PermBraid.from_images(f) for f in self.factors]

    def word(self) -> ArtinWord:
        letters: list[int] = []
        d = half_twist_word(self.n).letters
        if self.inf >= 0:
            letters.extend(d * self.inf)
        else:
            letters.extend(tuple(-x for x in reversed(d)) * -self.inf)
        o = ops(self.n)
        for f in self.factors:
            letters.extend(o.simple_letters(f))
        return ArtinWord(self.n, tuple(letters))

    def is_delta_power(self) -> bool:
        return not self.factors

    def render(self) -> str:
        parts = [f"D^{self.inf}"] + [" ".join(str(v + 1) for v in f) for f in self.factors]
        if len(parts) == 1:
            return parts[0] + " |"
        return " | ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _wrap(n: int, raw: NF) -> NormalFormA:
    return NormalFormA(n, raw[0], raw[1])


def word_tokens(w: ArtinWord) -> list[G.Token]:
    """Split a word into maximal runs of simple elements and their inverses."""
    o = ops(w.n)
    tokens: list[G.Token] = []
    cur: Simple | None = None
    sign = 0
    for x in w.letters:
        i = abs(x) - 1
        if x > 0:
            if sign > 0:
                nxt = o.append_atom(cur, i)  # type: ignore[arg-type]
                if nxt is not None:
                    cur = nxt
                    continue
            if cur is not None:
                tokens.append((cur, sign))
            cur, sign = o.atom(i), 1
        else:
            if sign < 0:
                nxt = o.prepend_atom(i, cur)  # type: ignore[arg-type]
                if nxt is not None:
                    cur = nxt
                    continue
            if cur is not None:
                tokens.append((cur, sign))
            cur, sign = o.atom(i), -1
    if cur is not None:
        tokens.append((cur, sign))
    return tokens


def half_twist(n: int) -> PermBraid:
    return PermBraid.from_images(ops(n).delta)


def normal_form_artin(w: ArtinWord) -> NormalFormA:
    return _wrap(w.n, G.nf_from_tokens(ops(w.n), word_tokens(w)))


def nf_mul(a: NormalFormA, b: NormalFormA) -> NormalFormA:
    return _wrap(a.n, G.nf_mul(ops(a.n), a.raw, b.raw))


def nf_inverse(a: NormalFormA) -> NormalFormA:
    return _wrap(a.n, G.nf_inverse(ops(a.n), a.raw))


def nf_power(a: NormalFormA, e: int) -> NormalFormA:
    return _wrap(a.n, G.nf_power(ops(a.n), a.raw, e))


def conjugate_nf(a: NormalFormA, c: ArtinWord) -> NormalFormA:
    """Normal form of c^-1 a c."""
    cn = normal_form_artin(c)
    return nf_mul(nf_mul(nf_inverse(cn), a), cn)


def tokens_word(n: int, tokens: list[G.Token]) -> ArtinWord:
    o = ops(n)
    letters: list[int] = []
    for x, e in tokens:
        ls = o.simple_letters(x)
        if e > 0:
            letters.extend(ls)
        else:
            letters.extend(-v for v in reversed(ls))
    return ArtinWord(n, tuple(letters))


def tau_artin(x: PermBraid) -> PermBraid:
    return PermBraid.from_images(ops(x.n).tau(x.images, 1))


def cycling_artin(nf: NormalFormA) -> tuple[NormalFormA, ArtinWord]:
    raw, tok = G.cycling(ops(nf.n), nf.raw)
    return _wrap(nf.n, raw), tokens_word(nf.n, [tok] if tok else [])


def decycling_artin(nf: NormalFormA) -> tuple[NormalFormA, ArtinWord]:
    raw, tok = G.decycling(ops(nf.n), nf.raw)
    return _wrap(nf.n, raw), tokens_word(nf.n, [tok] if tok else [])


def min_length_tokens(nf: NormalFormA, max_steps: int | None = None) -> tuple[NormalFormA, list[G.Token]]:
    raw, toks = G.super_summit(ops(nf.n), nf.raw, max_steps)
    return _wrap(nf.n, raw), toks


def min_length_representative(w: ArtinWord, max_steps: int | None = None) -> tuple[NormalFormA, ArtinWord]:
    """Conjugate of minimal canonical length and ``C`` with ``C^-1 w C`` equal to it."""
    res, toks = min_length_tokens(normal_form_artin(w), max_steps)
    return res, tokens_word(w.n, toks)


def is_left_weighted(nf: NormalFormA) -> bool:
    return G.is_left_weighted(ops(nf.n), nf.factors)


def all_simples(n: int) -> Iterator[Simple]:
    return permutations(range(n))


class USSOverflow(RuntimeError):
    pass


class USSTimeout(RuntimeError):
    pass


def uss_closure(
    w: ArtinWord,
    cap: int = 10_000,
    max_conjugations: int | None = None,
    stop_at: NF | None = None,
    deadline: float | None = None,
) -> dict[NF, list[G.Token]]:
    """Ultra summit set of ``w`` with a conjugator from ``w`` to each member.

    Orbit closure under conjugation by every simple element; cycling orbits
    are added wholesale.  ``cap`` bounds the set size and ``max_conjugations``
    the number of trial conjugations, and exceeding either raises
    :class:`USSOverflow`.  With ``stop_at`` the search returns as soon as that
    member is found; ``deadline`` is a ``time.perf_counter`` value after which
    :class:`USSTimeout` is raised.
    """
    o = ops(w.n)
    nf = normal_form_artin(w)
    sss, toks = G.super_summit(o, nf.raw)
    entry, more = G.ultra_summit_entry(o, sss)
    found: dict[NF, list[G.Token]] = {}
    queue: list[NF] = []
    target_len = len(entry[1])
    trials = 0

    def add_orbit(start: NF, path: list[G.Token]) -> None:
        cur, cp = start, path
        while cur not in found:
            found[cur] = cp
            queue.append(cur)
            if len(found) > cap:
                raise USSOverflow(f"ultra summit set larger than {cap}")
            nxt, t = G.cycling(o, cur)
            if t is None:
                break
            cur, cp = nxt, cp + [t]

    add_orbit(entry, toks + more)
    while queue:
        if stop_at is not None and stop_at in found:
            return found
        y = queue.pop(0)
        ypath = found[y]
        for s in all_simples(w.n):
            trials += 1
            if max_conjugations is not None and trials > max_conjugations:
                raise USSOverflow(f"more than {max_conjugations} trial conjugations")
            if deadline is not None and trials % 256 == 0 and time.perf_counter() > deadline:
                raise USSTimeout("deadline passed during ultra summit closure")
            if s == o.identity:
                continue
            z = G.nf_mul(o, G.nf_mul(o, (-1, (o.left_complement(s),)), y), (0, (s,)))
            if len(z[1]) != target_len or z[0] != y[0] or z in found:
                continue
            if _in_uss(o, z):
                add_orbit(z, ypath + [(s, 1)])
                if stop_at is not None and stop_at in found:
                    return found
    return found


def _in_uss(o: ClassicalOps, z: NF) -> bool:
    """A super summit element is ultra summit iff cycling brings it back."""
    seen = set()
    cur = z
    while cur not in seen:
        seen.add(cur)
        cur, t = G.cycling(o, cur)
        if t is None:
            return True
    return cur == z


def uss_artin(w: ArtinWord, cap: int = 10_000) -> set[NormalFormA]:
    return {_wrap(w.n, raw) for raw in uss_closure(w, cap)}
