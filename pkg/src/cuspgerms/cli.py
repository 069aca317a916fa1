"""Command-line front end.

Every computation in the library is reachable here, reported either as a
human-readable block or, with --json, as a stable structured document
{command, inputs, results, findings}.  Output is deterministic: identical
invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable

from .curve import CuspCurve
from .errors import CuspGermsError, UndecidableAtTruncation
from .germ import Decision, LaurentGerm, parse_germ
from .nagata import LaurentObject, identity_section, nagata_pow
from .semigroup import NumericalSemigroup
from .surgery import (
    SurgeryCurve,
    check_section_power,
    make_global_rado,
    n_omega,
    no_global_power_witness,
)

_AXIS_NAME = {1: "z1", 2: "z2"}


def _jsonable(value: Any) -> Any:
    if isinstance(value, Decision):
        return str(value)
    if isinstance(value, LaurentGerm):
        return value.to_str()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _render_human(report: dict[str, Any]) -> str:
    lines = [f"== {report['command']} =="]
    lines.append("inputs:")
    _emit_block(lines, report["inputs"], indent=2)
    lines.append("results:")
    _emit_block(lines, report["results"], indent=2)
    lines.append("findings:")
    findings = report.get("findings") or []
    if findings:
        for entry in findings:
            lines.append(f"  - {entry}")
    else:
        lines.append("  (none)")
    return "\n".join(lines)


def _emit_block(lines: list[str], value: Any, indent: int) -> None:
    pad = " " * indent
    if isinstance(value, dict):
        width = max((len(str(k)) for k in value), default=0)
        for k, v in value.items():
            if isinstance(v, dict) or _is_container_list(v):
                lines.append(f"{pad}{k}:")
                _emit_block(lines, v, indent + 2)
            elif isinstance(v, (list, tuple)):
                joined = " ".join(_scalar(item) for item in v)
                lines.append(f"{pad}{str(k):<{width}} : {joined}")
            else:
                lines.append(f"{pad}{str(k):<{width}} : {_scalar(v)}")
    elif isinstance(value, (list, tuple)):
        for item in value:
            if isinstance(item, (dict, list, tuple)):
                lines.append(f"{pad}-")
                _emit_block(lines, item, indent + 2)
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")


def _is_container_list(value: Any) -> bool:
    return isinstance(value, (list, tuple)) and any(
        isinstance(item, (dict, list, tuple)) for item in value
    )


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, LaurentGerm):
        return value.to_str()
    return str(value)


def _attempt(fn: Callable[[], Any], findings: list[str], label: str) -> Any:
    try:
        return fn()
    except (ValueError, UndecidableAtTruncation) as exc:
        findings.append(f"{label}: {exc}")
        return None


# -- subcommand handlers -------------------------------------------------------


def _cmd_semigroup_info(args: argparse.Namespace) -> dict[str, Any]:
    s = NumericalSemigroup(args.p, args.q)
    bound = args.bound if args.bound is not None else s.conductor() + 1
    if bound < 0:
        raise ValueError(f"membership bound must be >= 0, got {bound}")
    members = [n for n in range(bound + 1) if s.contains(n)]
    gaps = [n for n in range(bound + 1) if not s.contains(n)]
    return {
        "command": "semigroup info",
        "inputs": {"p": args.p, "q": args.q, "bound": bound},
        "results": {
            "conductor": s.conductor(),
            "frobenius": s.frobenius(),
            "membersUpToBound": members,
            "gapsUpToBound": gaps,
        },
        "findings": [],
    }


def _cmd_curve_analyze(args: argparse.Namespace) -> dict[str, Any]:
    curve = CuspCurve(args.p, args.q)
    findings: list[str] = []
    rado = curve.rado_germ()
    germ = parse_germ(args.germ) if args.germ is not None else rado.pullback
    decision = curve.is_holomorphic_at_cusp(germ)
    witness = curve.holomorphy_witness(germ)
    cover = curve.covering_degree()
    results: dict[str, Any] = {
        "curve": curve.spec_str(),
        "germ": germ,
        "unitOrderGerm": {
            "m": rado.m,
            "n": rado.n,
            "monomial": f"z1^{rado.m}/z2^{rado.n}",
            "pullback": rado.pullback,
        },
        "weaklyHolomorphic": curve.is_weakly_holomorphic(germ),
        "decision": decision,
        "witnessExponent": witness,
        "minPower": _attempt(lambda: curve.min_power(germ), findings, "minPower"),
        "stablePower": _attempt(lambda: curve.stable_power(germ), findings, "stablePower"),
        "orderOfFlatness": _attempt(
            lambda: curve.order_of_flatness(germ), findings, "orderOfFlatness"
        ),
        "coveringDegree": cover.degree,
        "projectionAxis": _AXIS_NAME[cover.axis],
        "whitneyCone": _AXIS_NAME[curve.whitney_cone()],
    }
    exps = germ.exponents()
    if germ.is_exact() and len(exps) == 1 and exps[0] >= 1:
        poly = curve.weierstrass(exps[0])
        results["weierstrass"] = {
            "degree": poly.degree,
            "factored": poly.factored_str(),
            "annihilatesPullback": poly.annihilates_pullback(),
        }
    else:
        results["weierstrass"] = None
        findings.append(
            "weierstrass: closed form applies to single exact monomial germs only"
        )
    return {
        "command": "curve analyze",
        "inputs": {"p": args.p, "q": args.q, "germ": germ.to_str()},
        "results": results,
        "findings": findings,
    }


def _cmd_curve_multiplier(args: argparse.Namespace) -> dict[str, Any]:
    curve = CuspCurve(args.p, args.q)
    floor_ok = curve.floor_multiplier_check(args.a, args.b)
    exact_ok = curve.exact_multiplier_check(args.a, args.b)
    findings: list[str] = []
    if floor_ok and not exact_ok:
        findings.append(
            "floor condition claimed holomorphy but exact membership fails:"
            " soundness violation"
        )
    elif not floor_ok and exact_ok:
        findings.append(
            "exact membership holds although the floor condition fails:"
            " the floor condition is sufficient, not necessary"
        )
    rado = curve.rado_germ()
    return {
        "command": "curve multiplier",
        "inputs": {"p": args.p, "q": args.q, "a": args.a, "b": args.b},
        "results": {
            "curve": curve.spec_str(),
            "unitOrderGerm": {"m": rado.m, "n": rado.n},
            "monomialPullbackExponent": curve.pullback_monomial(args.a, args.b),
            "floorCheck": floor_ok,
            "exactCheck": exact_ok,
        },
        "findings": findings,
    }


def _cmd_rado_witness(args: argparse.Namespace) -> dict[str, Any]:
    glued = SurgeryCurve.build_standard(args.max_k)
    section = make_global_rado(glued)
    site_index = no_global_power_witness(glued, args.n, section)
    site = glued.site(site_index)
    germ = section.germ_at(site_index)
    power = germ ** args.n
    return {
        "command": "rado witness",
        "inputs": {"maxK": args.max_k, "n": args.n},
        "results": {
            "witnessSite": site_index,
            "curve": site.curve.spec_str(),
            "germ": germ,
            "powerGerm": power,
            "decision": site.curve.is_holomorphic_at_cusp(power),
            "witnessExponent": site.curve.holomorphy_witness(power),
        },
        "findings": [
            "every power has a refusing site, so no single power is"
            " holomorphic on the whole glued curve"
        ],
    }


def _cmd_theorem1_bound(args: argparse.Namespace) -> dict[str, Any]:
    glued = SurgeryCurve.build_standard(args.max_k)
    bound = n_omega(glued, args.region)
    power = args.n if args.n is not None else bound
    section = make_global_rado(glued)
    table = check_section_power(glued, section, power, args.region)
    sharp_site = glued.site(args.region)
    sharp_power = bound - 1
    sharp_decision = sharp_site.decision_for_power(LaurentGerm.monomial(1), sharp_power)
    return {
        "command": "theorem1 bound",
        "inputs": {"maxK": args.max_k, "region": args.region, "n": power},
        "results": {
            "nOmega": bound,
            "power": power,
            "perSite": {str(k): d for k, d in table.per_site.items()},
            "aggregate": table.aggregate,
            "sharpness": {
                "germ": "t",
                "power": sharp_power,
                "site": args.region,
                "decision": sharp_decision,
            },
        },
        "findings": [],
    }


def _cmd_nagata_demo(args: argparse.Namespace) -> dict[str, Any]:
    if args.g == "inv":
        g = LaurentObject.monomial(-1)
    else:
        g = LaurentObject.essential_unit()
    section = identity_section(g)
    powers = []
    extend_flags: list[bool] = []
    for k in range(1, args.max_pow + 1):
        power = nagata_pow(section, k)
        extends = power.extends_across_origin()
        extend_flags.append(extends)
        powers.append({"k": k, "section": power.to_str(), "extends": extends})
    findings = []
    if args.g == "inv":
        if all(extend_flags[1:]) and not extend_flags[0]:
            findings.append(
                "with nilpotent shift 1/z only the first power fails to extend;"
                " every power k >= 2 extends across the origin"
            )
    else:
        if not any(extend_flags):
            findings.append(
                "with an essentially singular shift no power extends:"
                " the essential factor survives multiplication by monomials"
            )
    return {
        "command": "nagata demo",
        "inputs": {"g": args.g, "maxPow": args.max_pow},
        "results": {
            "g": g.to_str(),
            "section": section.to_str(),
            "powers": powers,
        },
        "findings": findings,
    }


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2; keep message on stderr
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cuspgerms",
        description="Exact holomorphy arithmetic on monomial cusp curves.",
    )
    parser.add_argument("--json", action="store_true", help="emit a structured JSON report")
    groups = parser.add_subparsers(dest="group", required=True)

    sg = groups.add_parser("semigroup", help="numerical semigroup computations")
    sg_cmds = sg.add_subparsers(dest="cmd", required=True)
    sg_info = sg_cmds.add_parser("info", help="conductor, Frobenius number, membership table")
    sg_info.add_argument("--p", type=int, required=True)
    sg_info.add_argument("--q", type=int, required=True)
    sg_info.add_argument("--bound", type=int, default=None,
                         help="membership table bound (default: conductor + 1)")
    sg_info.set_defaults(handler=_cmd_semigroup_info)

    cv = groups.add_parser("curve", help="cusp curve invariants")
    cv_cmds = cv.add_subparsers(dest="cmd", required=True)
    cv_an = cv_cmds.add_parser("analyze", help="holomorphy, powers, flatness, cone")
    cv_an.add_argument("--p", type=int, required=True)
    cv_an.add_argument("--q", type=int, required=True)
    cv_an.add_argument("--germ", type=str, default=None,
                       help="germ spec, e.g. 't^2 + 1/2*t^3 + O(t^9)' (default: t)")
    cv_an.set_defaults(handler=_cmd_curve_analyze)
    cv_mul = cv_cmds.add_parser("multiplier", help="floor vs exact holomorphy condition")
    cv_mul.add_argument("--p", type=int, required=True)
    cv_mul.add_argument("--q", type=int, required=True)
    cv_mul.add_argument("--a", type=int, required=True)
    cv_mul.add_argument("--b", type=int, required=True)
    cv_mul.set_defaults(handler=_cmd_curve_multiplier)

    rado = groups.add_parser("rado", help="global sections of the glued curve")
    rado_cmds = rado.add_subparsers(dest="cmd", required=True)
    rado_wit = rado_cmds.add_parser("witness", help="site refusing a given power")
    rado_wit.add_argument("--max-k", type=int, required=True, dest="max_k")
    rado_wit.add_argument("--n", type=int, required=True)
    rado_wit.set_defaults(handler=_cmd_rado_witness)

    th1 = groups.add_parser("theorem1", help="uniform power bounds per region")
    th1_cmds = th1.add_subparsers(dest="cmd", required=True)
    th1_bound = th1_cmds.add_parser("bound", help="region power bound and decision table")
    th1_bound.add_argument("--max-k", type=int, required=True, dest="max_k")
    th1_bound.add_argument("--region", type=int, required=True)
    th1_bound.add_argument("--n", type=int, default=None)
    th1_bound.set_defaults(handler=_cmd_theorem1_bound)

    ng = groups.add_parser("nagata", help="dual-number sections over the punctured line")
    ng_cmds = ng.add_subparsers(dest="cmd", required=True)
    ng_demo = ng_cmds.add_parser("demo", help="extension table for powers of z + eps*g")
    ng_demo.add_argument("--g", choices=["inv", "expinv"], required=True)
    ng_demo.add_argument("--max-pow", type=int, required=True, dest="max_pow")
    ng_demo.set_defaults(handler=_cmd_nagata_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except CuspGermsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(_jsonable(report), indent=2))
    else:
        print(_render_human(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
