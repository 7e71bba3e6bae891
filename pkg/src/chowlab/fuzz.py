"""Property campaigns over random posets, with counterexample shrinking."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .chow import chow_chain_sum, chow_via_fy, enumerate_fy_monomials
from .families import gen_random_graded
from .poset import Poset, PosetError, induced_subposet, is_ranked, validate_weak_rank, write_poset
from .scd import check_monomial_scd, is_monomial_order_ideal, is_pure_ideal, scd_of_fy, sfy_generate
from .sequences import (
    delta,
    is_log_concave,
    is_nonnegative,
    is_palindromic,
    is_SI_sequence,
    is_unimodal,
    logconcavity_from_delta,
)

log = logging.getLogger(__name__)

CHECKS = (
    "oracle",
    "chow_shape",
    "si_sequence",
    "sfy_equals_delta",
    "sfy_order_ideal",
    "sfy_pure",
    "log_concave_rank6",
    "logdifference",
    "fy_decomposition",
)


@dataclass
class Violation:
    check: str
    detail: str


def _strip(seq):
    seq = list(seq)
    while len(seq) > 1 and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def check_poset(P: Poset, rank, checks=CHECKS, with_scd: bool = True) -> list[Violation]:
    """Run the invariant suite on one poset; returns the violations found."""
    out = []
    n = rank[P.top]

    def fail(name, detail):
        out.append(Violation(name, detail))

    h = chow_chain_sum(P, rank)
    if "oracle" in checks:
        g = chow_via_fy(P, rank)
        if g != h:
            fail("oracle", f"chain sum {h.coefficients} != FY count {g.coefficients}")
    c = h.coefficients
    if "chow_shape" in checks:
        for test in (is_nonnegative, is_palindromic, is_unimodal):
            v = test(c)
            if not v:
                fail("chow_shape", f"{test.__name__} {c}: {v.reason}")
    shape_ok = bool(is_palindromic(c)) and bool(is_unimodal(c))
    if "si_sequence" in checks:
        v = is_SI_sequence(c)
        if not v:
            fail("si_sequence", f"{c}: {v.reason}")
    sfy = None
    if {"sfy_equals_delta", "sfy_order_ideal", "sfy_pure", "fy_decomposition"} & set(checks):
        sfy = sfy_generate(P, rank)
    if "sfy_equals_delta" in checks and shape_ok:
        if _strip(sfy.h_vector) != _strip(delta(c)):
            fail("sfy_equals_delta", f"h(SFY)={sfy.h_vector} != delta={delta(c)}")
    if "sfy_order_ideal" in checks:
        v = is_monomial_order_ideal(sfy)
        if not v:
            fail("sfy_order_ideal", v.reason)
    if "sfy_pure" in checks and is_ranked(P, rank) and is_monomial_order_ideal(sfy):
        v = is_pure_ideal(sfy, (n - 1) // 2)
        if not v:
            fail("sfy_pure", f"rank {n}: {v.reason}")
    if "log_concave_rank6" in checks and n <= 6:
        v = is_log_concave(c)
        if not v:
            fail("log_concave_rank6", f"rank {n}, {c}: {v.reason}")
    if "logdifference" in checks and shape_ok:
        try:
            logconcavity_from_delta(c)
        except AssertionError as exc:
            fail("logdifference", str(exc))
    if "fy_decomposition" in checks and with_scd:
        try:
            dec = scd_of_fy(P, rank)
            bad = [k for k, ok in check_monomial_scd(dec, enumerate_fy_monomials(P, rank)).items() if not ok]
            if bad:
                fail("fy_decomposition", f"failed {bad}")
        except AssertionError as exc:
            fail("fy_decomposition", str(exc))
    return out


def shrink(P: Poset, rank, still_fails: Callable[[Poset, dict], bool]) -> tuple[Poset, dict]:
    """Greedy element deletion keeping ``still_fails`` true.

    Elements on the widest rank levels are tried first; the induced order on
    the survivors is re-reduced, and candidates whose rank stops being valid
    are skipped.
    """
    rank = dict(rank)
    progress = True
    while progress:
        progress = False
        width = Counter(rank[e] for e in P.elements)
        cands = sorted(
            (e for e in P.elements if e not in (P.bottom, P.top)),
            key=lambda e: (-width[rank[e]], P.index(e)),
        )
        for e in cands:
            keep = [x for x in P.elements if x != e]
            try:
                Q = induced_subposet(P, keep)
            except PosetError:
                continue
            rq = {x: rank[x] for x in keep}
            if not validate_weak_rank(Q, rq):
                continue
            if still_fails(Q, rq):
                P, rank = Q, rq
                progress = True
                break
    return P, rank


@dataclass
class CampaignReport:
    seed: int
    trials: int
    violations: Counter = field(default_factory=Counter)
    failures: list[dict] = field(default_factory=list)
    ranked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _trial(args):
    seed, i, max_rank, max_width, checks = args
    P, rank = gen_random_graded([seed, i], max_rank, max_width, weak=bool(i % 2))
    return i, is_ranked(P, rank), [(v.check, v.detail) for v in check_poset(P, rank, checks)]


def run_campaign(
    seed: int,
    trials: int,
    max_rank: int = 7,
    max_width: int = 4,
    jobs: int = 1,
    checks=CHECKS,
    out_dir: str | Path | None = None,
) -> CampaignReport:
    """Check ``trials`` random posets; odd trials use weak-rank inflation.

    Each trial is seeded by ``(seed, trial index)`` so results do not
    depend on ``jobs``.  Failing posets are shrunk and, if ``out_dir`` is
    given, written there as poset files.
    """
    report = CampaignReport(seed, trials)
    tasks = [(seed, i, max_rank, max_width, tuple(checks)) for i in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_trial, tasks, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = [_trial(t) for t in tasks]
    for i, ranked, viol in results:
        report.ranked += ranked
        if not viol:
            continue
        names = sorted({c for c, _ in viol})
        report.violations.update(names)
        P, rank = gen_random_graded([seed, i], max_rank, max_width, weak=bool(i % 2))
        P, rank = shrink(P, rank, lambda Q, rq: bool({v.check for v in check_poset(Q, rq, names)} & set(names)))
        entry = {"trial": i, "checks": names, "details": [d for _, d in viol], "size": len(P)}
        if out_dir is not None:
            path = Path(out_dir) / f"fail_seed{seed}_trial{i}.json"
            path.parent.mkdir(parents=True, exist_ok=True)
            write_poset(path, P, rank)
            entry["file"] = str(path)
        log.warning("trial %d violates %s", i, names)
        report.failures.append(entry)
    return report
