"""Conjugacy search for periodic braids.

``algorithm_b`` handles conjugates of delta^k by cycling in the band
structure, ``algorithm_c`` handles conjugates of epsilon^k by moving the
fixed puncture to 2 and cycling the symmetric image in ``B_{2n-2}``, and
``algorithm_d`` decides conjugacy of two arbitrary braids by combining the
two.

All conjugators ``C`` satisfy ``C^-1 X C = target``.  Before translating,
the input is replaced by a conjugate of minimal canonical length with the
central Delta^2 powers stripped, which keeps the translated word within
about n^2 letters.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _garside as G
from . import band, classical
from .classical import NormalFormA, nf_inverse, nf_mul, nf_power, normal_form_artin
from .periodic import DeltaPower, EpsilonPower, PeriodicClass, classify
from .typeb import artin_to_sym, decompose_polygonal, fixed_puncture, sym_to_artin
from .words import ArtinWord, delta_word, epsilon_word, free_reduce, sigma_run


class SolverError(RuntimeError):
    """A precondition was violated or a certificate failed to verify."""


BudgetExceeded = G.BudgetExceeded


@dataclass(frozen=True)
class ConjugacyCertificate:
    target: PeriodicClass
    conjugator: ArtinWord
    verified: bool
    image: ArtinWord | None = None  # set when C^-1 X C should equal this word instead

    @property
    def n(self) -> int:
        return self.conjugator.n


@dataclass(frozen=True)
class Fail:
    reason: str = ""

    def __bool__(self) -> bool:
        return False


@dataclass
class SolveStats:
    band_steps: int = 0
    translated_length: int = 0


def target_normal_form(cls: PeriodicClass, n: int) -> NormalFormA:
    base = delta_word(n) if cls.kind == "delta" else epsilon_word(n)
    return nf_power(normal_form_artin(base), cls.k)


def conjugate_normal_form(x: NormalFormA, c: ArtinWord) -> NormalFormA:
    cn = normal_form_artin(c)
    return nf_mul(nf_mul(nf_inverse(cn), x), cn)


def verify_certificate(x: ArtinWord, cert: ConjugacyCertificate) -> bool:
    """Independent recheck: does C^-1 x C normalise to the target power?"""
    if not isinstance(cert, ConjugacyCertificate) or not cert.target.periodic:
        return False
    if cert.conjugator.n != x.n:
        return False
    got = conjugate_normal_form(normal_form_artin(x), cert.conjugator)
    if cert.image is not None:
        return got == normal_form_artin(cert.image)
    return got == target_normal_form(cert.target, x.n)


def _certify(w: ArtinWord, target: PeriodicClass, c: ArtinWord) -> ConjugacyCertificate:
    c = free_reduce(c)
    cert = ConjugacyCertificate(target, c, True)
    if not verify_certificate(w, cert):
        raise SolverError(f"certificate for {target} failed to verify")
    return cert


def prereduce(w: ArtinWord) -> tuple[ArtinWord, int, ArtinWord]:
    """Return (X', q, P) with P^-1 w P = Delta^(2q) X' and X' of length at most n(n-1)."""
    nf, toks = classical.min_length_tokens(normal_form_artin(w))
    q = nf.inf // 2
    reduced = NormalFormA(w.n, nf.inf - 2 * q, nf.factors)
    return reduced.word(), q, classical.tokens_word(w.n, toks)


def _band_search(word: band.BandWord, k: int, max_steps: int | None, stats: SolveStats | None) -> list[G.Token]:
    o = band.ops(word.m)
    start = G.nf_from_tokens(o, band.band_tokens(word))
    if max_steps is None:
        max_steps = 2 * o.delta_length * max(len(word), 1) + 2 * o.delta_length
    end, toks = G.super_summit(o, start, max_steps)
    if stats is not None:
        stats.band_steps += len(toks)
        stats.translated_length = len(word)
    if end != (k, ()):
        raise SolverError(f"band cycling stopped at a braid other than delta^{k}")
    return toks


def _trivial(w: ArtinWord, target: PeriodicClass) -> ConjugacyCertificate:
    if normal_form_artin(w).raw != (0, ()):
        raise SolverError("k = 0 but the braid is not trivial")
    return _certify(w, target, ArtinWord(w.n))


def algorithm_b(w: ArtinWord, k: int, *, prereduce_input: bool = True,
                max_steps: int | None = None, stats: SolveStats | None = None,
                verify: bool = True) -> ConjugacyCertificate:
    """Conjugator from a conjugate of delta^k to delta^k."""
    n = w.n
    target = DeltaPower(k)
    if k == 0:
        return _trivial(w, target)
    if prereduce_input:
        x, q, pre = prereduce(w)
        kk = k - q * n
    else:
        x, kk, pre = w, k, ArtinWord(n)
    if kk == 0:
        c = pre
    else:
        toks = _band_search(band.phi_inverse(x), kk, max_steps, stats)
        c = pre * band.phi_translate(band.tokens_band_word(n, toks))
    if not verify:
        return ConjugacyCertificate(target, free_reduce(c), False)
    return _certify(w, target, c)


def algorithm_c(w: ArtinWord, k: int, *, prereduce_input: bool = True,
                max_steps: int | None = None, stats: SolveStats | None = None,
                verify: bool = True) -> ConjugacyCertificate:
    """Conjugator from a conjugate of epsilon^k to epsilon^k."""
    n = w.n
    target = EpsilonPower(k)
    if k == 0:
        return _trivial(w, target)
    if k % (n - 1) == 0:
        c = ArtinWord(n)
    else:
        if prereduce_input:
            x, q, pre = prereduce(w)
            kk = k - q * (n - 1)
        else:
            x, kk, pre = w, k, ArtinWord(n)
        a = fixed_puncture(x)
        c1 = sigma_run(a, 2, n)
        y = c1.inverse() * x * c1
        z = artin_to_sym(y)
        toks = _band_search(z, kk, max_steps, stats)
        c0 = band.tokens_band_word(2 * n - 2, toks)
        c = pre * c1 * sym_to_artin(decompose_polygonal(c0))
    if not verify:
        return ConjugacyCertificate(target, free_reduce(c), False)
    return _certify(w, target, c)


def solve(w: ArtinWord, target: PeriodicClass, **kw) -> ConjugacyCertificate:
    if target.kind == "delta":
        return algorithm_b(w, target.k, **kw)
    if target.kind == "epsilon":
        return algorithm_c(w, target.k, **kw)
    raise SolverError("target must be a delta or epsilon power")


def algorithm_d(wx: ArtinWord, wy: ArtinWord) -> ConjugacyCertificate | Fail:
    """Conjugator C with C^-1 X C = Y for periodic X, Y, or Fail."""
    if wx.n != wy.n:
        return Fail("different numbers of strands")
    cx, cy = classify(wx), classify(wy)
    if not cx.periodic:
        return Fail("first braid is not periodic")
    if not cy.periodic:
        return Fail("second braid is not periodic")
    if cx != cy:
        return Fail(f"classes differ: {cx} vs {cy}")
    # only the composed conjugator is checked
    c1 = solve(wx, cx, verify=False).conjugator
    c2 = solve(wy, cy, verify=False).conjugator
    cert = ConjugacyCertificate(cx, free_reduce(c1 * c2.inverse()), True, image=wy)
    if not verify_certificate(wx, cert):
        raise SolverError("composed conjugator failed to verify")
    return cert
