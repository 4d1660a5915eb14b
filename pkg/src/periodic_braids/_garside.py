"""Structure-independent Garside machinery.

A *structure* object supplies the lattice of simple elements (stored as
0-indexed permutation tuples) and the few primitives the normal form
needs.  The algorithms here only ever talk to that interface, so the
classical and band structures share one implementation of
normalisation, inversion, cycling, decycling and the super summit
search.

Conjugator tokens are ``(simple, e)`` pairs with ``e = +1`` for the simple
element and ``e = -1`` for its inverse.  Every conjugator ``C`` returned
satisfies ``C^-1 X C = result``.
"""

from __future__ import annotations

from typing import Protocol, Sequence

Simple = tuple[int, ...]
Token = tuple[Simple, int]


class Structure(Protocol):
    size: int
    identity: Simple
    delta: Simple
    delta_length: int  # number of atoms in the Garside element

    def mul(self, x: Simple, y: Simple) -> Simple: ...
    def tau(self, x: Simple, e: int = 1) -> Simple: ...
    def right_complement(self, x: Simple) -> Simple: ...
    def left_complement(self, x: Simple) -> Simple: ...
    def left_weight(self, a: Simple, b: Simple) -> tuple[Simple, Simple] | None: ...


class BudgetExceeded(RuntimeError):
    pass


def inverse_perm(x: Simple) -> Simple:
    inv = [0] * len(x)
    for i, v in enumerate(x):
        inv[v] = i
    return tuple(inv)


def normalize(S: Structure, inf: int, factors: Sequence[Simple]) -> tuple[int, tuple[Simple, ...]]:
    """Left normal form of Delta^inf * f_1 ... f_k for simple f_i."""
    L: list[Simple] = []
    p = inf
    D, I = S.delta, S.identity
    for f in factors:
        if f == I:
            continue
        if f == D:
            p += 1
            L = [S.tau(x, 1) for x in L]
            continue
        L.append(f)
        j = len(L) - 1
        while j > 0:
            moved = S.left_weight(L[j - 1], L[j])
            if moved is None:
                break
            L[j - 1], L[j] = moved
            j -= 1
        k = 0
        while k < len(L) and L[k] == D:
            k += 1
        if k:
            p += k
            del L[:k]
        while L and L[-1] == I:
            L.pop()
    return p, tuple(L)


def tokens_to_factors(S: Structure, tokens: Sequence[Token]) -> tuple[int, list[Simple]]:
    """Rewrite a token product as Delta^-m times positive simple factors.

    Each inverse x^-1 becomes Delta^-1 lc(x); the Delta^-1 are then moved to
    the front, which twists every factor to their left by tau^-1.
    """
    after = 0
    out: list[Simple] = []
    for x, e in reversed(tokens):
        f = x if e > 0 else S.left_complement(x)
        out.append(S.tau(f, -after) if after else f)
        if e < 0:
            after += 1
    out.reverse()
    return -after, out


def nf_from_tokens(S: Structure, tokens: Sequence[Token]) -> tuple[int, tuple[Simple, ...]]:
    m, fs = tokens_to_factors(S, tokens)
    return normalize(S, m, fs)


def nf_mul(S: Structure, a: tuple[int, tuple], b: tuple[int, tuple]) -> tuple[int, tuple[Simple, ...]]:
    pa, fa = a
    pb, fb = b
    head = [S.tau(x, pb) for x in fa] if pb else list(fa)
    return normalize(S, pa + pb, head + list(fb))


def nf_inverse(S: Structure, a: tuple[int, tuple]) -> tuple[int, tuple[Simple, ...]]:
    p, fs = a
    r = len(fs)
    out = [S.tau(S.right_complement(fs[j - 1]), -(j + p)) for j in range(r, 0, -1)]
    return normalize(S, -(p + r), out)


def nf_power(S: Structure, a: tuple[int, tuple], e: int) -> tuple[int, tuple[Simple, ...]]:
    if e < 0:
        a, e = nf_inverse(S, a), -e
    result: tuple[int, tuple[Simple, ...]] = (0, ())
    base = a
    while e:
        if e & 1:
            result = nf_mul(S, result, base)
        e >>= 1
        if e:
            base = nf_mul(S, base, base)
    return result


def nf_tokens(a: tuple[int, tuple], delta: Simple) -> list[Token]:
    p, fs = a
    sign = 1 if p >= 0 else -1
    return [(delta, sign)] * abs(p) + [(x, 1) for x in fs]


def cycling(S: Structure, a: tuple[int, tuple]) -> tuple[tuple[int, tuple], Token | None]:
    p, fs = a
    if not fs:
        return a, None
    c = S.tau(fs[0], -p)
    return normalize(S, p, list(fs[1:]) + [c]), (c, 1)


def decycling(S: Structure, a: tuple[int, tuple]) -> tuple[tuple[int, tuple], Token | None]:
    p, fs = a
    if not fs:
        return a, None
    last = fs[-1]
    return normalize(S, p, [S.tau(last, p)] + list(fs[:-1])), (last, -1)


def super_summit(
    S: Structure, a: tuple[int, tuple], max_steps: int | None = None
) -> tuple[tuple[int, tuple], list[Token]]:
    """Cycle to maximise inf, then decycle to minimise sup.

    Each phase gives up after ``delta_length`` fruitless steps or as soon as
    the orbit repeats, which is the classical stopping rule.  ``max_steps``
    caps the total number of cyclings and decyclings.
    """
    conj: list[Token] = []
    steps = 0
    for op, better in ((cycling, lambda new, old: new[0] > old[0]),
                       (decycling, lambda new, old: new[0] + len(new[1]) < old[0] + len(old[1]))):
        while a[1]:
            cur = a
            trial: list[Token] = []
            seen = {cur}
            improved = False
            for _ in range(S.delta_length):
                steps += 1
                if max_steps is not None and steps > max_steps:
                    raise BudgetExceeded(f"more than {max_steps} cyclings/decyclings")
                cur, t = op(S, cur)
                trial.append(t)
                if better(cur, a):
                    improved = True
                    break
                if cur in seen:
                    break
                seen.add(cur)
            if not improved:
                break
            conj.extend(trial)
            a = cur
    return a, conj


def ultra_summit_entry(S: Structure, a: tuple[int, tuple]) -> tuple[tuple[int, tuple], list[Token]]:
    """From a super summit element, cycle until the orbit closes."""
    seen: dict[tuple, int] = {}
    path: list[Token] = []
    orbit = []
    cur = a
    while cur not in seen:
        seen[cur] = len(orbit)
        orbit.append(cur)
        nxt, t = cycling(S, cur)
        if t is None:
            return cur, path
        path.append(t)
        cur = nxt
    i = seen[cur]
    return orbit[i], path[:i]


def is_left_weighted(S: Structure, factors: Sequence[Simple]) -> bool:
    return all(S.left_weight(a, b) is None for a, b in zip(factors, factors[1:]))
