"""Command-line harness: verify catalog cases, compute skeleton files,
enumerate minimal supports and export cases to the skeleton file format.

Exit codes: 0 all reports match, 1 some mismatch, 2 usage or parse error,
3 skeleton invariant violation.  Reports go to stdout (text table or
newline-delimited JSON with exact fraction strings); diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from sphskel import catalog, mukai, skeleton as sk_mod
from sphskel.catalog import CaseInstance, SupportOption
from sphskel.skeleton import SkeletonInvariantError, SkeletonParseError

SWEEP_ENV = "SPHSKEL_SWEEPS"


def _frac_str(x: Fraction | None) -> str:
    if x is None:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class CaseReport:
    family: int
    sub_case: str
    params: dict[str, int]
    support: str
    complete: bool
    p_value: Fraction | None
    budget: int
    relation: str | None
    theta: tuple[Fraction, ...] | None
    theta_unique: bool | None
    expected_p: Fraction | None
    expected_relation: str
    expected_theta: tuple[Fraction, ...] | None
    match: bool
    typo_fixes: tuple[str, ...]
    pivots: int
    wall_ms: float

    def sort_key(self):
        return (self.family, self.sub_case, sorted(self.params.items()), self.support)

    def to_json(self) -> dict:
        return {
            "case": self.family,
            "sub_case": self.sub_case,
            "params": self.params,
            "support": self.support,
            "complete": self.complete,
            "p_value": None if self.p_value is None else _frac_str(self.p_value),
            "budget": self.budget,
            "relation": self.relation,
            "theta": None if self.theta is None else [_frac_str(t) for t in self.theta],
            "theta_unique": self.theta_unique,
            "expected_p": None if self.expected_p is None else _frac_str(self.expected_p),
            "expected_relation": self.expected_relation,
            "expected_theta": None
            if self.expected_theta is None
            else [_frac_str(t) for t in self.expected_theta],
            "match": self.match,
            "typo_fixes": list(self.typo_fixes),
            "solve_stats": {"pivots": self.pivots, "wall_ms": round(self.wall_ms, 3)},
        }


def evaluate_option(inst: CaseInstance, opt: SupportOption) -> CaseReport:
    skel = inst.support_skeleton(opt)
    start = time.perf_counter()
    verdict, stats = mukai.evaluate_with_stats(skel)
    wall_ms = (time.perf_counter() - start) * 1000.0
    match = (
        verdict.complete
        and verdict.relation == opt.expected_relation
        and (opt.expected_p is None or verdict.p_value == opt.expected_p)
        and (opt.expected_theta is None or verdict.theta == opt.expected_theta)
    )
    return CaseReport(
        family=inst.family,
        sub_case=inst.sub_case,
        params=dict(inst.params),
        support=opt.key,
        complete=verdict.complete,
        p_value=verdict.p_value,
        budget=verdict.budget,
        relation=verdict.relation,
        theta=verdict.theta,
        theta_unique=verdict.theta_unique,
        expected_p=opt.expected_p,
        expected_relation=opt.expected_relation,
        expected_theta=opt.expected_theta,
        match=match,
        typo_fixes=inst.typo_fixes,
        pivots=stats["pivots"],
        wall_ms=wall_ms,
    )


def _params_text(params: dict[str, int]) -> str:
    return ",".join(f"{k}={v}" for k, v in sorted(params.items())) or "-"


def _theta_text(theta) -> str:
    if theta is None:
        return "-"
    return "(" + ",".join(_frac_str(t) for t in theta) + ")"


def print_reports(reports: list[CaseReport], fmt: str, out=None) -> None:
    out = out or sys.stdout
    reports = sorted(reports, key=CaseReport.sort_key)
    if fmt == "json":
        for rep in reports:
            out.write(json.dumps(rep.to_json()) + "\n")
        return
    header = (
        f"{'case':<14} {'params':<14} {'support':<34} {'cmpl':<5} "
        f"{'P':>8} {'budget':>6} {'relation':<12} {'theta':<28} {'match':<5}"
    )
    out.write(header + "\n")
    out.write("-" * len(header) + "\n")
    notes = {}
    for rep in reports:
        case = f"{rep.family}" + (f"/{rep.sub_case}" if rep.sub_case else "")
        out.write(
            f"{case:<14} {_params_text(rep.params):<14} {rep.support:<34} "
            f"{str(rep.complete).lower():<5} {_frac_str(rep.p_value):>8} "
            f"{rep.budget:>6} {str(rep.relation):<12} "
            f"{_theta_text(rep.theta):<28} {'yes' if rep.match else 'NO':<5}\n"
        )
        for fix in rep.typo_fixes:
            notes.setdefault(case, set()).add(fix)
    for case in sorted(notes):
        for fix in sorted(notes[case]):
            out.write(f"note [{case}]: {fix}\n")


# ---------------------------------------------------------------------------
# selectors, params, sweep profiles


class UsageError(ValueError):
    pass


def _normalize_subcase(text: str) -> str:
    return text.replace("≠", "!=").replace("≥", ">=").replace(" ", "")


def parse_selector(text: str) -> tuple[int | None, str | None]:
    """'all' | '34' | '43/p,q!=0,r=0' -> (family, sub_case)."""
    text = text.strip()
    if text == "all":
        return None, None
    if "/" in text:
        fam_text, sub = text.split("/", 1)
        sub = _normalize_subcase(sub)
    else:
        fam_text, sub = text, None
    try:
        family = int(fam_text)
    except ValueError as exc:
        raise UsageError(f"bad case selector {text!r}") from exc
    known = {f for f, _ in catalog.FAMILIES}
    if family not in known:
        raise UsageError(f"unknown case {family}")
    if sub is not None and (family, sub) not in catalog.FAMILIES:
        subs = sorted(s for f, s in catalog.FAMILIES if f == family)
        raise UsageError(f"unknown sub-case {sub!r} for case {family}; known: {subs}")
    return family, sub


def parse_params(items) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"--param expects name=value, got {item!r}")
        name, _, value = item.partition("=")
        try:
            out[name.strip()] = int(value)
        except ValueError as exc:
            raise UsageError(f"--param {item!r}: value must be an integer") from exc
    return out


def load_sweep_profile(name: str, path: str | None = None) -> dict:
    """Named sweep profile from the config file (package default or env)."""
    if path is None:
        path = os.environ.get(SWEEP_ENV)
    if path is None:
        path = os.path.join(os.path.dirname(__file__), "sweeps.json")
    try:
        with open(path, "r", encoding="utf-8") as handle:
            profiles = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read sweep config {path}: {exc}") from exc
    if name not in profiles:
        raise UsageError(f"unknown sweep profile {name!r}; known: {sorted(profiles)}")
    return profiles[name]


def _select_instances(args) -> list[CaseInstance]:
    family, sub = parse_selector(args.case)
    overrides = parse_params(args.param)
    ranges = load_sweep_profile(args.sweep, getattr(args, "sweep_config", None))
    if overrides:
        bad = sorted(set(overrides) - {"p", "q", "r"})
        if bad:
            raise UsageError(f"unknown parameter {bad[0]!r}")
    instances = catalog.sweep_instances(
        family=family, sub_case=sub, overrides=overrides or None, ranges=ranges
    )
    if overrides and family is not None and instances:
        seen = {name for inst in instances for name, _ in inst.params}
        missing = sorted(set(overrides) - seen)
        if missing:
            raise UsageError(f"case {family} takes no parameter {missing[0]!r}")
    if not instances:
        raise UsageError("selection matches no catalog instance")
    return instances


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    instances = _select_instances(args)
    reports = [
        evaluate_option(inst, opt) for inst in instances for opt in inst.options
    ]
    print_reports(reports, args.format)
    mismatches = sum(1 for rep in reports if not rep.match)
    total = len(reports)
    print(
        f"checked {total} reports: {total - mismatches} match, {mismatches} mismatch",
        file=sys.stderr,
    )
    return 0 if mismatches == 0 else 1


def cmd_compute(args) -> int:
    skel = sk_mod.load(args.file)
    verdict, stats = mukai.evaluate_with_stats(skel)
    if args.format == "json":
        payload = {
            "complete": verdict.complete,
            "p_value": None if verdict.p_value is None else _frac_str(verdict.p_value),
            "budget": verdict.budget,
            "relation": verdict.relation,
            "theta": None
            if verdict.theta is None
            else [_frac_str(t) for t in verdict.theta],
            "theta_unique": verdict.theta_unique,
            "solve_stats": {"pivots": stats["pivots"]},
        }
        print(json.dumps(payload))
    else:
        print(
            f"complete: {str(verdict.complete).lower()}, P={_frac_str(verdict.p_value)}, "
            f"budget={verdict.budget}, {verdict.relation or 'Unbounded'}, "
            f"theta={_theta_text(verdict.theta)}"
        )
    return 0


def cmd_supports(args) -> int:
    instances = _select_instances(args)
    for inst in instances:
        found = mukai.enumerate_minimal_complete_supports(inst.system, args.max_card)
        if args.format == "json":
            payload = {
                "case": inst.family,
                "sub_case": inst.sub_case,
                "params": dict(inst.params),
                "minimal_supports": [
                    {
                        "support": inst.support_key(indices),
                        "p_value": None
                        if verdict.p_value is None
                        else _frac_str(verdict.p_value),
                        "budget": verdict.budget,
                        "relation": verdict.relation,
                    }
                    for indices, verdict in found
                ],
                "excluded_by_certificates": [
                    {
                        "sigma_prime": [inst.sigma_labels[j] for j in cert.sigma_prime],
                        "delta_prime": list(cert.delta_prime),
                    }
                    for cert in inst.certificates
                ],
            }
            print(json.dumps(payload))
            continue
        label = f"case {inst.family}" + (f"/{inst.sub_case}" if inst.sub_case else "")
        print(f"{label} params {_params_text(dict(inst.params))}:")
        for indices, verdict in found:
            key = inst.support_key(indices)
            print(
                f"  {{{key}}}: P={_frac_str(verdict.p_value)}, "
                f"budget={verdict.budget}, {verdict.relation}"
            )
        for cert in inst.certificates:
            labels = ",".join(inst.sigma_labels[j] for j in cert.sigma_prime)
            print(
                f"  note: supports inside {{{labels}}} are not complete "
                f"(distinguished subset {{{','.join(cert.delta_prime)}}})",
                file=sys.stderr,
            )
    return 0


def cmd_export(args) -> int:
    instances = _select_instances(args)
    if len(instances) != 1:
        raise UsageError(
            "export needs exactly one instance; pin the parameters with --param"
        )
    inst = instances[0]
    skel = inst.system
    if args.support is not None:
        skel = inst.support_skeleton(inst.option(args.support))
    sk_mod.save(skel, args.output)
    print(f"wrote {args.output}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphskel",
        description="exact verification of the generalized Mukai inequality "
        "for spherical skeletons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_selection(p):
        p.add_argument("--case", default="all", help="'all', '34' or '43/p,q!=0,r=0'")
        p.add_argument(
            "--param", action="append", metavar="NAME=VALUE",
            help="pin a sweep parameter (repeatable)",
        )
        p.add_argument("--sweep", default="default", help="sweep profile name")
        p.add_argument(
            "--sweep-config", dest="sweep_config", default=None,
            help=f"path to a sweep config (default: ${SWEEP_ENV} or the built-in)",
        )

    p_verify = sub.add_parser("verify", help="re-verify catalog cases")
    add_selection(p_verify)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_compute = sub.add_parser("compute", help="evaluate a skeleton file")
    p_compute.add_argument("file")
    p_compute.add_argument("--format", choices=("text", "json"), default="text")
    p_compute.set_defaults(func=cmd_compute)

    p_supports = sub.add_parser(
        "supports", help="enumerate minimal complete supports"
    )
    add_selection(p_supports)
    p_supports.add_argument("--max-card", type=int, default=3)
    p_supports.add_argument("--format", choices=("text", "json"), default="text")
    p_supports.set_defaults(func=cmd_supports)

    p_export = sub.add_parser("export", help="write a case to a skeleton file")
    add_selection(p_export)
    p_export.add_argument("--support", default=None, help="support key (else Gamma = {})")
    p_export.add_argument("-o", "--output", required=True)
    p_export.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SkeletonParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except SkeletonInvariantError as exc:
        print(f"invariant violation [{exc.invariant}]: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
