"""Command-line front end.

    chowlab chow   --family boolean(3)
    chowlab sfy    --family nonpure(5) --format structured
    chowlab scd    2 2 2
    chowlab seq    1,4,6,4,1
    chowlab fuzz   --seed 7 --trials 500 --max-rank 6
    chowlab export --family nonpure(2) --format dot
    chowlab sweep  --n 7

Exit status is 0 iff every verdict of the command passes, 1 if one fails
and 2 for usage or input errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from . import __version__
from .chow import chow_chain_sum, chow_via_fy
from .families import generate, sweep_log_concavity
from .fuzz import CHECKS, run_campaign
from .polynomial import count_real_roots, gamma_vector, parse_sequence
from .poset import PosetError, dumps_poset, is_ranked, read_poset, to_dot
from .scd import (
    grid_whitney,
    initial_elements_formula,
    is_monomial_order_ideal,
    is_pure_ideal,
    maximal_members,
    scd_product_of_chains,
    sfy_generate,
)
from .sequences import (
    delta,
    hibi_check,
    is_log_concave,
    is_O_sequence,
    is_palindromic,
    is_pure_O_len3,
    is_SI_sequence,
    is_unimodal,
)

log = logging.getLogger("chowlab")


class UsageError(Exception):
    pass


@dataclass
class Report:
    """Collects values and verdicts; rendered as text or JSON lines."""

    command: str
    values: list[tuple[str, object]] = field(default_factory=list)
    verdicts: list[tuple[str, bool, object]] = field(default_factory=list)

    def value(self, name, v):
        self.values.append((name, v))

    def verdict(self, name, ok, witness=None):
        self.verdicts.append((name, bool(ok), witness))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.verdicts)

    def render(self, fmt: str) -> str:
        if fmt == "structured":
            lines = [json.dumps({"command": self.command, "value": k, "data": _jsonable(v)}) for k, v in self.values]
            lines += [
                json.dumps({"command": self.command, "verdict": k, "ok": ok, "witness": _jsonable(w)})
                for k, ok, w in self.verdicts
            ]
            return "\n".join(lines) + "\n"
        out = []
        for k, v in self.values:
            if isinstance(v, list) and v and isinstance(v[0], str):
                out.append(f"{k}:")
                out.extend(f"  {s}" for s in v)
            else:
                out.append(f"{k}: {_fmt(v)}")
        for k, ok, w in self.verdicts:
            line = f"{k}: {'true' if ok else 'FALSE'}"
            if not ok and w is not None:
                line += f" (witness: {_fmt(w)})"
            out.append(line)
        return "\n".join(out) + "\n"


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


def _fmt(v):
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)


def _load(args):
    if bool(args.family) == bool(args.input):
        raise UsageError("give exactly one of --family or --input")
    try:
        if args.family:
            return generate(args.family)
        return read_poset(args.input)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None


def cmd_chow(args) -> Report:
    P, rank = _load(args)
    h = chow_chain_sum(P, rank)
    rep = Report("chow")
    rep.value("coefficients", list(h.coefficients))
    rep.value("H_P(t)", str(h))
    c = h.coefficients
    if not args.no_oracle:
        rep.verdict("oracle_agreement", chow_via_fy(P, rank) == h)
    for name, test in (("palindromic", is_palindromic), ("unimodal", is_unimodal), ("log_concave", is_log_concave)):
        v = test(c)
        rep.verdict(name, v, v.witness)
    try:
        g = gamma_vector(h)
        rep.value("gamma_vector", list(g))
        rep.value("gamma_positive", all(x >= 0 for x in g))
    except ValueError:
        rep.value("gamma_vector", "undefined")
    v = is_SI_sequence(c)
    rep.verdict("si_sequence", v, v.reason or None)
    rep.value("real_roots", f"{count_real_roots(h)} of {h.degree}")
    return rep


def cmd_sfy(args) -> Report:
    P, rank = _load(args)
    n = rank[P.top]
    sfy = sfy_generate(P, rank)
    h = chow_chain_sum(P, rank)
    rep = Report("sfy")
    rep.value("monomials", [str(m) for m in sfy])
    rep.value("h_vector", list(sfy.h_vector))
    rep.value("ranked", is_ranked(P, rank))
    v = is_monomial_order_ideal(sfy)
    rep.verdict("order_ideal", v, v.witness and [str(x) for x in v.witness])
    if v:
        expected = (n - 1) // 2 if is_ranked(P, rank) else None
        if expected is not None:
            rep.value("expected_degree", expected)
        p = is_pure_ideal(sfy, expected)
        rep.value("maximal", [str(m) for m in maximal_members(sfy)])
        rep.verdict("pure", p, p.witness and [str(m) for m in p.witness])
    g = list(delta(h.coefficients))
    while len(g) > 1 and g[-1] == 0:
        g.pop()
    rep.verdict("h_equals_delta_chow", list(sfy.h_vector) == g, g)
    return rep


def cmd_scd(args) -> Report:
    bounds = args.ranks
    if not bounds or any(r < 1 for r in bounds):
        raise UsageError("scd needs one or more chain ranks >= 1")
    dec = scd_product_of_chains(bounds)
    rep = Report("scd")
    rep.value("chains", dec.to_text().splitlines())
    rep.value("chain_count", len(dec))
    starts = dec.starts
    rep.value("initial_elements", [_fmt(s) for s in starts])
    for k, ok in dec.verdicts.items():
        rep.verdict(k, ok)
    rep.verdict("starts_equal_formula", set(starts) == initial_elements_formula(bounds))
    W = grid_whitney(bounds)
    R = len(W) - 1
    counts = [0] * (R // 2 + 1)
    for s in starts:
        counts[sum(s)] += 1
    rep.value("whitney_numbers", list(W))
    rep.value("whitney_of_starts", counts)
    rep.verdict("starts_whitney_is_delta", counts == list(delta(W)), list(delta(W)))
    return rep


def cmd_seq(args) -> Report:
    try:
        h = parse_sequence(args.sequence)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = Report("seq")
    rep.value("sequence", h)
    for name, test in (("palindromic", is_palindromic), ("unimodal", is_unimodal), ("log_concave", is_log_concave)):
        v = test(h)
        rep.verdict(name, v, v.witness)
    if h[0] == 1:
        v = is_O_sequence(h)
        rep.verdict("o_sequence", v, v.witness)
    v = is_SI_sequence(h)
    rep.verdict("si_sequence", v, v.reason or None)
    if len(h) == 3 and h[0] == 1 and h[1] >= 1:
        rep.verdict("pure_o_sequence", is_pure_O_len3(h))
    v = hibi_check(h)
    rep.verdict("hibi", v, v.witness)
    return rep


def cmd_fuzz(args) -> Report:
    if args.seed is None:
        raise UsageError("fuzz needs --seed")
    report = run_campaign(
        args.seed,
        args.trials,
        max_rank=args.max_rank,
        max_width=args.max_width,
        jobs=args.jobs,
        out_dir=args.out_dir,
    )
    rep = Report("fuzz")
    rep.value("seed", args.seed)
    rep.value("trials", args.trials)
    rep.value("ranked_trials", report.ranked)
    for check in CHECKS:
        rep.verdict(check, report.violations[check] == 0, report.violations[check] or None)
    for f in report.failures:
        rep.value(f"failure_trial_{f['trial']}", f.get("file") or f["details"])
    return rep


def cmd_export(args):
    P, rank = _load(args)
    if args.format == "dot":
        return to_dot(P, rank)
    if args.format == "csv":
        return chow_chain_sum(P, rank).to_csv() + "\n"
    if args.format in ("poset", "structured"):
        return dumps_poset(P, rank)
    raise UsageError(f"export has no format {args.format!r}")


def cmd_sweep(args) -> Report:
    rep = Report("sweep")
    if args.n < 7:
        raise UsageError("the counterexample family needs --n >= 7")
    found = sweep_log_concavity(args.n, args.m_max)
    if found is None:
        rep.verdict("found", False, f"no violation for m <= {args.m_max}")
        return rep
    rep.value("m_star", found[0])
    rep.value("coefficients", list(found[1]))
    rep.verdict("found", True)
    return rep


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chowlab", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p, formats=("text", "csv", "structured"), default="text"):
        p.add_argument("--family", help="family spec, e.g. boolean(3) or family:nonpure(m=5)")
        p.add_argument("--input", help="poset file (JSON with elements, covers, rank)")
        p.add_argument("--format", choices=formats, default=default)
        return p

    p = with_input(sub.add_parser("chow", help="Chow polynomial and its verdicts"))
    p.add_argument("--no-oracle", action="store_true", help="skip the FY-count cross-check")
    p.set_defaults(func=cmd_chow)
    with_input(sub.add_parser("sfy", help="SFY monomials, order-ideal and pureness")).set_defaults(func=cmd_sfy)

    p = sub.add_parser("scd", help="symmetric chain decomposition of a product of chains")
    p.add_argument("ranks", nargs="+", type=int)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_scd)

    p = sub.add_parser("seq", help="verdicts for a comma-separated sequence")
    p.add_argument("sequence")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("fuzz", help="invariant campaign over seeded random posets")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-rank", type=int, default=7)
    p.add_argument("--max-width", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", help="write shrunk failing posets here")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_fuzz)

    p = with_input(sub.add_parser("export", help="DOT, CSV h-vector or canonical poset file"), ("dot", "csv", "poset", "structured"), "poset")
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("sweep", help="smallest m breaking log-concavity at index 2")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--m-max", type=int, default=40)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"chowlab {args.command}: {exc}", file=sys.stderr)
        return 2
    except PosetError as exc:
        print(f"chowlab {args.command}: invalid poset: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(result)
        else:
            sys.stdout.write(result)
        return 0
    if args.format == "csv":
        coeffs = dict(result.values).get("coefficients", dict(result.values).get("h_vector"))
        sys.stdout.write(",".join(str(c) for c in coeffs) + "\n")
    else:
        sys.stdout.write(result.render(args.format))
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
