"""Band generator (Birman-Ko-Lee) Garside structure.

Simple elements are non-crossing partitions of ``m`` points.  Internally a
partition is stored as the permutation sending each point of a block to
the next larger point of the same block (and the largest back to the
smallest), which is the permutation of the braid
``a_{i_k i_{k-1}} ... a_{i_2 i_1}``.  The Garside element is the one-block
partition ``delta`` and conjugation by delta rotates indices by +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _garside as G
from .words import ArtinWord, BandWord

Simple = tuple[int, ...]
NF = tuple[int, tuple[Simple, ...]]


def block_labels(x: Simple) -> list[int]:
    lab = [-1] * len(x)
    for i in range(len(x)):
        if lab[i] < 0:
            j = i
            while lab[j] < 0:
                lab[j] = i
                j = x[j]
    return lab


def perm_from_blocks(m: int, blocks) -> Simple:
    out = list(range(m))
    for b in blocks:
        b = sorted(b)
        for u, v in zip(b, b[1:] + b[:1]):
            out[u] = v
    return tuple(out)


class BandOps:
    def __init__(self, m: int) -> None:
        if m < 2:
            raise ValueError(f"need at least 2 points, got {m}")
        self.size = m
        self.identity: Simple = tuple(range(m))
        self.delta: Simple = tuple((i + 1) % m for i in range(m))
        self.delta_length = m - 1

    def mul(self, x: Simple, y: Simple) -> Simple:
        return tuple([y[v] for v in x])

    def tau(self, x: Simple, e: int = 1) -> Simple:
        m = self.size
        e %= m
        if not e:
            return x
        return tuple([(x[(j - e) % m] + e) % m for j in range(m)])

    def right_complement(self, x: Simple) -> Simple:
        # x^-1 delta
        m = self.size
        inv = G.inverse_perm(x)
        return tuple([(v + 1) % m for v in inv])

    def left_complement(self, x: Simple) -> Simple:
        # delta x^-1
        m = self.size
        inv = G.inverse_perm(x)
        return tuple([inv[(j + 1) % m] for j in range(m)])

    def meet(self, x: Simple, y: Simple) -> Simple:
        lx, ly = block_labels(x), block_labels(y)
        groups: dict[tuple[int, int], list[int]] = {}
        for i in range(self.size):
            groups.setdefault((lx[i], ly[i]), []).append(i)
        return perm_from_blocks(self.size, groups.values())

    def left_weight(self, a: Simple, b: Simple) -> tuple[Simple, Simple] | None:
        c = self.meet(self.right_complement(a), b)
        if c == self.identity:
            return None
        return self.mul(a, c), self.mul(G.inverse_perm(c), b)

    def atom(self, t: int, s: int) -> Simple:
        out = list(range(self.size))
        out[s - 1], out[t - 1] = t - 1, s - 1
        return tuple(out)

    def append_atom(self, x: Simple, t: int, s: int) -> Simple | None:
        lab = block_labels(self.right_complement(x))
        if lab[s - 1] != lab[t - 1]:
            return None
        return self.mul(x, self.atom(t, s))

    def prepend_atom(self, t: int, s: int, x: Simple) -> Simple | None:
        lab = block_labels(self.left_complement(x))
        if lab[s - 1] != lab[t - 1]:
            return None
        return self.mul(self.atom(t, s), x)

    def blocks(self, x: Simple) -> list[tuple[int, ...]]:
        """Non-singleton blocks, 1-indexed, sorted by minimum."""
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(block_labels(x)):
            groups.setdefault(lab, []).append(i + 1)
        return [tuple(g) for g in sorted(groups.values()) if len(g) > 1]

    def simple_letters(self, x: Simple) -> list[tuple[int, int]]:
        out = []
        for b in self.blocks(x):
            for k in range(len(b) - 1, 0, -1):
                out.append((b[k], b[k - 1]))
        return out


@lru_cache(maxsize=None)
def ops(m: int) -> BandOps:
    return BandOps(m)


@dataclass(frozen=True)
class NonCrossingPartition:
    m: int
    blocks: tuple[tuple[int, ...], ...] = ()  # non-singleton blocks, 1-indexed

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if list(b) != sorted(b) or len(b) < 2:
                raise ValueError(f"block {b} must be sorted with at least 2 points")
            if any(not 1 <= v <= self.m for v in b) or seen & set(b):
                raise ValueError(f"blocks {self.blocks} do not partition 1..{self.m}")
            seen |= set(b)
        if list(self.blocks) != sorted(self.blocks):
            raise ValueError("blocks must be listed by increasing minimum")
        if not is_noncrossing(self.blocks):
            raise ValueError(f"blocks {self.blocks} cross")

    @classmethod
    def from_perm(cls, m: int, x: Simple) -> NonCrossingPartition:
        return cls(m, tuple(ops(m).blocks(x)))

    @classmethod
    def from_blocks(cls, m: int, blocks) -> NonCrossingPartition:
        bs = sorted(tuple(sorted(b)) for b in blocks if len(b) > 1)
        return cls(m, tuple(bs))

    def perm(self) -> Simple:
        return perm_from_blocks(self.m, [[v - 1 for v in b] for b in self.blocks])

    def word(self) -> BandWord:
        return BandWord(self.m, tuple((t, s, 1) for t, s in ops(self.m).simple_letters(self.perm())))

    def render(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) or "{}"

    def __str__(self) -> str:
        return self.render()


def is_noncrossing(blocks) -> bool:
    owner = {}
    for k, b in enumerate(blocks):
        for v in b:
            owner[v] = k
    pts = sorted(owner)
    # a<b<c<d with a,c in one block and b,d in another
    for i, a in enumerate(pts):
        for j in range(i + 1, len(pts)):
            b = pts[j]
            if owner[b] == owner[a]:
                continue
            for k in range(j + 1, len(pts)):
                c = pts[k]
                if owner[c] != owner[a]:
                    continue
                for d in pts[k + 1:]:
                    if owner[d] == owner[b]:
                        return False
    return True


def is_ncp_perm(x: Simple) -> bool:
    """Whether a permutation is the cyclic-ascending permutation of a non-crossing partition."""
    m = len(x)
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(block_labels(x)):
        groups.setdefault(lab, []).append(i)
    if perm_from_blocks(m, groups.values()) != tuple(x):
        return False
    return is_noncrossing([tuple(g) for g in groups.values() if len(g) > 1])


@dataclass(frozen=True)
class NormalFormB:
    m: int
    inf: int
    factors: tuple[Simple, ...] = ()

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def raw(self) -> NF:
        return (self.inf, self.factors)

    def partitions(self) -> list[NonCrossingPartition]:
        return [NonCrossingPartition.from_perm(self.m, f) for f in self.factors]

    def word(self) -> BandWord:
        o = ops(self.m)
        d = [(t, s, 1) for t, s in o.simple_letters(o.delta)]
        letters: list[tuple[int, int, int]] = []
        if self.inf >= 0:
            letters.extend(d * self.inf)
        else:
            letters.extend([(t, s, -1) for t, s, _ in reversed(d)] * -self.inf)
        for f in self.factors:
            letters.extend((t, s, 1) for t, s in o.simple_letters(f))
        return BandWord(self.m, tuple(letters))

    def render(self) -> str:
        parts = [f"d^{self.inf}"] + [p.render() for p in self.partitions()]
        if len(parts) == 1:
            return parts[0] + " |"
        return " | ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _wrap(m: int, raw: NF) -> NormalFormB:
    return NormalFormB(m, raw[0], raw[1])


def band_tokens(w: BandWord) -> list[G.Token]:
    o = ops(w.m)
    tokens: list[G.Token] = []
    cur: Simple | None = None
    sign = 0
    for t, s, e in w.letters:
        if e > 0:
            if sign > 0:
                nxt = o.append_atom(cur, t, s)  # type: ignore[arg-type]
                if nxt is not None:
                    cur = nxt
                    continue
            if cur is not None:
                tokens.append((cur, sign))
            cur, sign = o.atom(t, s), 1
        else:
            if sign < 0:
                nxt = o.prepend_atom(t, s, cur)  # type: ignore[arg-type]
                if nxt is not None:
                    cur = nxt
                    continue
            if cur is not None:
                tokens.append((cur, sign))
            cur, sign = o.atom(t, s), -1
    if cur is not None:
        tokens.append((cur, sign))
    return tokens


def tokens_band_word(m: int, tokens: list[G.Token]) -> BandWord:
    o = ops(m)
    letters: list[tuple[int, int, int]] = []
    for x, e in tokens:
        ls = o.simple_letters(x)
        if e > 0:
            letters.extend((t, s, 1) for t, s in ls)
        else:
            letters.extend((t, s, -1) for t, s in reversed(ls))
    return BandWord(m, tuple(letters))


def band_delta(m: int) -> NonCrossingPartition:
    return NonCrossingPartition(m, (tuple(range(1, m + 1)),))


def normal_form_band(w: BandWord) -> NormalFormB:
    return _wrap(w.m, G.nf_from_tokens(ops(w.m), band_tokens(w)))


def ncp_meet(p: NonCrossingPartition, q: NonCrossingPartition) -> NonCrossingPartition:
    if p.m != q.m:
        raise ValueError(f"partitions on {p.m} and {q.m} points")
    return NonCrossingPartition.from_perm(p.m, ops(p.m).meet(p.perm(), q.perm()))


def tau_band(x: NonCrossingPartition, e: int = 1) -> NonCrossingPartition:
    """delta^-e x delta^e: indices rotated by +e."""
    return NonCrossingPartition.from_perm(x.m, ops(x.m).tau(x.perm(), e))


def cycling_band(nf: NormalFormB) -> tuple[NormalFormB, BandWord]:
    raw, tok = G.cycling(ops(nf.m), nf.raw)
    return _wrap(nf.m, raw), tokens_band_word(nf.m, [tok] if tok else [])


def decycling_band(nf: NormalFormB) -> tuple[NormalFormB, BandWord]:
    raw, tok = G.decycling(ops(nf.m), nf.raw)
    return _wrap(nf.m, raw), tokens_band_word(nf.m, [tok] if tok else [])


def is_left_weighted(nf: NormalFormB) -> bool:
    return G.is_left_weighted(ops(nf.m), nf.factors)


def phi_letter(t: int, s: int, e: int) -> list[int]:
    """Artin word of a_{ts}^e: (s_{t-1}..s_{s+1}) s_s (s_{s+1}^-1..s_{t-1}^-1)."""
    up = list(range(t - 1, s, -1))
    core = up + [s] + [-v for v in reversed(up)]
    if e > 0:
        return core
    return [-v for v in reversed(core)]


def phi_translate(w: BandWord) -> ArtinWord:
    letters: list[int] = []
    for t, s, e in w.letters:
        letters.extend(phi_letter(t, s, e))
    return ArtinWord(w.m, tuple(letters))


def phi_inverse(w: ArtinWord) -> BandWord:
    return BandWord(w.n, tuple((abs(x) + 1, abs(x), 1 if x > 0 else -1) for x in w.letters))
