"""Periodicity detection.

A braid is periodic when some power is a power of the full twist.  Up to
conjugacy the periodic braids are the powers of

    delta   = s_{n-1} ... s_1        (delta^n = Delta^2)
    epsilon = s_1 delta              (epsilon^{n-1} = Delta^2)

and the power can be read off either from ``X^{n-1}``/``X^n`` or, when the
braid is already known to be periodic, from its exponent sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classical import NormalFormA, nf_mul, nf_power, normal_form_artin
from .words import ArtinWord, delta_word, epsilon_word, exponent_sum


@dataclass(frozen=True)
class PeriodicClass:
    kind: str  # "non-periodic" | "delta" | "epsilon"
    k: int = 0

    @property
    def periodic(self) -> bool:
        return self.kind != "non-periodic"

    def target_word(self, n: int) -> ArtinWord:
        if self.kind == "delta":
            return delta_word(n) ** self.k
        if self.kind == "epsilon":
            return epsilon_word(n) ** self.k
        raise ValueError("non-periodic class has no target")

    def render(self) -> str:
        return self.kind if not self.periodic else f"{self.kind}^{self.k}"

    def __str__(self) -> str:
        return self.render()


NON_PERIODIC = PeriodicClass("non-periodic")


def DeltaPower(k: int) -> PeriodicClass:
    return PeriodicClass("delta", k)


def EpsilonPower(k: int) -> PeriodicClass:
    return PeriodicClass("epsilon", k)


def parse_class(text: str) -> PeriodicClass:
    text = text.strip()
    if text == "non-periodic":
        return NON_PERIODIC
    kind, sep, k = text.partition("^")
    if kind not in ("delta", "epsilon") or not sep:
        raise ValueError(f"expected delta^k or epsilon^k, got {text!r}")
    try:
        return PeriodicClass(kind, int(k))
    except ValueError:
        raise ValueError(f"bad exponent in {text!r}") from None


def _twist_exponent(nf: NormalFormA) -> int | None:
    if nf.factors or nf.inf % 2:
        return None
    return nf.inf // 2


def classify(w: ArtinWord) -> PeriodicClass:
    """Test X^{n-1} first, then X^n, for being a power of Delta^2."""
    n = w.n
    x = normal_form_artin(w)
    p = nf_power(x, n - 1)
    k = _twist_exponent(p)
    if k is not None:
        return EpsilonPower(k)
    k = _twist_exponent(nf_mul(p, x))
    if k is not None:
        return DeltaPower(k)
    return NON_PERIODIC


def classify_by_exponent_sum(w: ArtinWord, known_periodic: bool = True) -> PeriodicClass:
    if not known_periodic:
        return classify(w)
    n = w.n
    e = exponent_sum(w)
    if e % n == 0:
        return EpsilonPower(e // n)
    if e % (n - 1) == 0:
        return DeltaPower(e // (n - 1))
    raise ValueError(f"exponent sum {e} is not a multiple of {n - 1} or {n}; braid is not periodic")


def is_twist_power(w: ArtinWord) -> bool:
    return _twist_exponent(normal_form_artin(w)) is not None
