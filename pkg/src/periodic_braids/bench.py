"""Random instances and the timing harness.

Instances are ``z^-1 T z`` with ``T`` a power of delta or epsilon and ``z``
a product of ``c`` random simple braids.  Each simple braid comes from
``random.Random(seed).shuffle`` of ``1..n`` (Mersenne Twister, stable across
platforms for a given seed), and instance ``i`` uses seed ``seed + i``.

Algorithm U is the generic baseline: reach the ultra summit set of both the
instance and the target, then walk the closure of the instance's ultra
summit set until it meets the target's entry point.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field

from . import _garside as G
from . import classical
from .classical import USSOverflow, USSTimeout, normal_form_artin
from .periodic import DeltaPower, EpsilonPower, PeriodicClass
from .solver import BudgetExceeded, ConjugacyCertificate, SolverError, algorithm_b, algorithm_c, verify_certificate
from .words import ArtinWord, free_reduce

CSV_HEADER = ["algo", "n", "k", "c", "samples", "ok", "timeout", "total_ms"]
ALGORITHMS = ("U-delta", "U-epsilon", "B", "C")


def random_simple(n: int, rng: random.Random) -> ArtinWord:
    images = list(range(n))
    rng.shuffle(images)
    o = classical.ops(n)
    return ArtinWord(n, tuple(o.simple_letters(tuple(images))))


def random_braid(n: int, c: int, seed: int) -> ArtinWord:
    rng = random.Random(seed)
    letters: list[int] = []
    for _ in range(c):
        letters.extend(random_simple(n, rng).letters)
    return ArtinWord(n, tuple(letters))


def instance(target: PeriodicClass, n: int, c: int, seed: int) -> ArtinWord:
    z = random_braid(n, c, seed)
    return z.inverse() * target.target_word(n) * z


@dataclass
class BenchConfig:
    n: int
    k: int = 1
    c: int = 10
    samples: int = 100
    seed: int = 0
    time_budget_ms: int = 10_000
    uss_cap: int = 100_000  # advisory memory cap: ultra summit set size
    algorithms: tuple[str, ...] = ALGORITHMS

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        bad = [a for a in self.algorithms if a not in ALGORITHMS]
        if bad:
            raise ValueError(f"unknown algorithms {bad}")


@dataclass
class BenchRecord:
    algo: str
    n: int
    k: int
    c: int
    total_ms: float = 0.0
    statuses: list[str] = field(default_factory=list)

    @property
    def samples(self) -> int:
        return len(self.statuses)

    @property
    def ok(self) -> int:
        return self.statuses.count("ok")

    @property
    def timeouts(self) -> int:
        return len(self.statuses) - self.ok

    def row(self, with_times: bool = True) -> list[str]:
        ms = f"{self.total_ms:.1f}" if with_times else "-"
        return [self.algo, str(self.n), str(self.k), str(self.c),
                str(self.samples), str(self.ok), str(self.timeouts), ms]


def algorithm_u(w: ArtinWord, target: PeriodicClass, deadline: float | None = None,
                cap: int = 100_000) -> ConjugacyCertificate:
    """Generic ultra summit set search; raises USSTimeout or USSOverflow."""
    n = w.n
    o = classical.ops(n)
    tnf = normal_form_artin(target.target_word(n))
    tsss, ttoks = G.super_summit(o, tnf.raw)
    tentry, tmore = G.ultra_summit_entry(o, tsss)
    found = classical.uss_closure(w, cap=cap, stop_at=tentry, deadline=deadline)
    if tentry not in found:
        raise SolverError("target is not in the ultra summit set of the input")
    c = classical.tokens_word(n, found[tentry]) * classical.tokens_word(n, ttoks + tmore).inverse()
    cert = ConjugacyCertificate(target, free_reduce(c), True)
    if not verify_certificate(w, cert):
        raise SolverError("baseline conjugator failed to verify")
    return cert


def _run_one(algo: str, w: ArtinWord, target: PeriodicClass, cfg: BenchConfig) -> tuple[str, float]:
    t0 = time.perf_counter()
    deadline = t0 + cfg.time_budget_ms / 1000
    try:
        if algo.startswith("U"):
            cert = algorithm_u(w, target, deadline, cfg.uss_cap)
        elif algo == "B":
            cert = algorithm_b(w, target.k, verify=False)
        else:
            cert = algorithm_c(w, target.k, verify=False)
    except USSTimeout:
        return "timeout", cfg.time_budget_ms
    except (USSOverflow, BudgetExceeded):
        return "budget", (time.perf_counter() - t0) * 1000
    ms = (time.perf_counter() - t0) * 1000
    if ms > cfg.time_budget_ms:
        return "timeout", ms
    # verification is not part of the timed step
    if not verify_certificate(w, cert):
        raise SolverError(f"{algo} produced an unverifiable conjugator")
    return "ok", ms


def bench_run(cfg: BenchConfig) -> list[BenchRecord]:
    targets = {"U-delta": DeltaPower(cfg.k), "U-epsilon": EpsilonPower(cfg.k),
               "B": DeltaPower(cfg.k), "C": EpsilonPower(cfg.k)}
    records = []
    for algo in cfg.algorithms:
        target = targets[algo]
        rec = BenchRecord(algo, cfg.n, cfg.k, cfg.c)
        for i in range(cfg.samples):
            w = instance(target, cfg.n, cfg.c, cfg.seed + i)
            status, ms = _run_one(algo, w, target, cfg)
            rec.statuses.append(status)
            rec.total_ms += ms
        records.append(rec)
    return records


def records_csv(records: list[BenchRecord], with_times: bool = True) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(CSV_HEADER)
    for r in records:
        out.writerow(r.row(with_times))
    return buf.getvalue()
