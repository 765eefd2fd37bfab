"""The eight acceptance checks, runnable from tests and from ``lvknot selftest``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .catalog import CLASSICAL, FLY, FLY_SADDLE, W_EXAMPLE
from .diagram import UNKNOT, LinkGaussDiagram, concatenate, random_diagram
from .equivalence import (
    all_config_cases,
    generate_band_pass_pair,
    ribbon_certificate,
    trivialize_inverse_pair,
    verify_certificate,
)
from .invariants import LaurentPoly, beta, degree_two_weights, report, v21, v22, w_polynomial
from .moves import R_MOVES, apply, enumerate_moves
from .oracles import naive_v21, naive_v22
from .skein import conway_c2, is_classical

__all__ = ["CriterionResult", "CRITERIA", "run_all", "format_table", "DEFAULT_SEED"]

DEFAULT_SEED = 20240


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


def band_pass_beta(seed: int = DEFAULT_SEED, per_case: int = 100, max_extra: int = 8) -> tuple[bool, str]:
    rng = random.Random(seed)
    pairs = bad = 0
    for case in all_config_cases():
        for _ in range(per_case):
            d1, d2, _site = generate_band_pass_pair(case, rng.randint(0, max_extra), rng.randrange(1 << 30))
            pairs += 1
            bad += beta(d1) != beta(d2)
    return bad == 0, f"{pairs} pairs, {bad} with beta changed"


def band_pass_witnesses(seed: int = DEFAULT_SEED, per_case: int = 100, max_extra: int = 8) -> tuple[bool, str]:
    rng = random.Random(seed)
    changed21 = changed22 = 0
    for case in all_config_cases():
        for _ in range(per_case):
            d1, d2, _site = generate_band_pass_pair(case, rng.randint(0, max_extra), rng.randrange(1 << 30))
            changed21 += v21(d1) % 2 != v21(d2) % 2
            changed22 += v22(d1) % 2 != v22(d2) % 2
    ok = changed21 > 0 and changed22 > 0
    return ok, f"v21 mod 2 changed in {changed21} pairs, v22 mod 2 in {changed22}"


def w_vector() -> tuple[bool, str]:
    k = W_EXAMPLE
    two_t = LaurentPoly({1: 2})
    ok = w_polynomial(k) == two_t
    power = UNKNOT
    for m in range(1, 6):
        power = concatenate(power, k)
        ok &= w_polynomial(power) == LaurentPoly({1: 2 * m})
    return ok, f"w(K) = {w_polynomial(k)}, w(K^5) = {w_polynomial(power)}"


def classical_calibration() -> tuple[bool, str]:
    bad = []
    for name, d in CLASSICAL.items():
        if not is_classical(d):
            bad.append(f"{name} not planar")
            continue
        r, c2 = report(d), conway_c2(d)
        if not (r.v21 == r.v22 == c2 and r.beta == 0):
            bad.append(f"{name}: v21={r.v21} v22={r.v22} c2={c2}")
    detail = "; ".join(bad) if bad else f"{len(CLASSICAL)} knots, v21 = v22 = c2 and beta = 0"
    return not bad, detail


def fly_example() -> tuple[bool, str]:
    cert = ribbon_certificate(FLY, [FLY_SADDLE])
    verdict = verify_certificate(cert, "ribbon")
    ok = beta(FLY) == 1 and cert.saddles == 1 and bool(verdict)
    return ok, f"beta(F) = {beta(FLY)}, saddles = {cert.saddles}, ribbon verdict: {verdict.reason}"


def inverse_pairs(seed: int = DEFAULT_SEED, count: int = 100, max_arrows: int = 8) -> tuple[bool, str]:
    rng = random.Random(seed)
    unknot = LinkGaussDiagram.from_long(UNKNOT)
    bad = 0
    for _ in range(count):
        k = random_diagram(rng.randint(0, max_arrows), rng.randrange(1 << 30))
        c = trivialize_inverse_pair(k)
        n = k.n_arrows
        good = (
            c.counts == (0, 2 * n, 2 * n)
            and c.end == unknot
            and bool(verify_certificate(c, "ribbon"))
        )
        bad += not good
    return bad == 0, f"{count} diagrams, {bad} rejected"


def reidemeister_invariance(seed: int = DEFAULT_SEED, count: int = 1000, max_arrows: int = 7) -> tuple[bool, str]:
    """Random (diagram, legal move) pairs, with the move kind drawn first.

    Diagrams come from short random move walks on random diagrams so that
    removal and R3 sites occur often enough to be sampled.
    """
    rng = random.Random(seed)
    kinds = sorted(R_MOVES)
    tested = {k: 0 for k in kinds}
    bad = 0
    d = random_diagram(rng.randint(0, max_arrows), rng.randrange(1 << 30))
    while sum(tested.values()) < count:
        moves = enumerate_moves(d, R_MOVES)
        available = sorted({m.kind for m in moves})
        kind = rng.choice(available)
        m = rng.choice([x for x in moves if x.kind is kind])
        d2 = apply(d, m)
        tested[kind] += 1
        bad += report(d).as_record() != report(d2).as_record()
        d = d2
        if d.n_arrows > max_arrows + 4 or rng.random() < 0.1:
            d = random_diagram(rng.randint(0, max_arrows), rng.randrange(1 << 30))
    per_kind = ", ".join(f"{k.value}={v}" for k, v in tested.items())
    return bad == 0, f"{count} moves ({per_kind}), {bad} changed an invariant"


def oracle_equivalence(seed: int = DEFAULT_SEED, count: int = 500, max_arrows: int = 8) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        d = random_diagram(rng.randint(0, max_arrows), rng.randrange(1 << 30))
        w = degree_two_weights(d)
        bad += (w["RL"], w["LR"]) != (naive_v21(d), naive_v22(d))
    return bad == 0, f"{count} diagrams, {bad} mismatches"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "band-pass invariance of beta", band_pass_beta),
    (2, "non-invariance witnesses for v21, v22 mod 2", band_pass_witnesses),
    (3, "w vector and additivity", w_vector),
    (4, "classical calibration", classical_calibration),
    (5, "fly example", fly_example),
    (6, "K # K^-1 certificates", inverse_pairs),
    (7, "Reidemeister invariance", reidemeister_invariance),
    (8, "pairing vs all-subsets oracle", oracle_equivalence),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as e:  # a crash is a failure, reported like one
                ok, detail = False, f"{type(e).__name__}: {e}"
            return CriterionResult(num, name, ok, detail, time.perf_counter() - t0)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(num) for num, _, _ in CRITERIA]


def format_table(results: list[CriterionResult], timings: bool = True) -> str:
    lines = []
    for r in results:
        line = r.line() if timings else r.line().rsplit(" (", 1)[0]
        lines.append(line)
    return "\n".join(lines)
