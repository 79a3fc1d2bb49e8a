"""Command-line front end.

Commands:
    finform group show <selector>       structure summary of one group
    finform residual <selector> --formation F
    finform hypercentre <selector> --formation F
    finform subnormal <selector> --gens 1,2 --formation F --kind kf
    finform verify <claim> [options]

Group selectors: ``cyclic:n``, ``dihedral:n`` (order 2n), ``sym:n``,
``alt:n``, ``quaternion:8``, ``elab:p^k``, ``prod(a,b)``, ``trivial``, or
``file:<path>``. Exit codes for verify: 0 pass, 1 conclusion failure,
2 budget exhaustion, 3 bad configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import construct
from .errors import GroupError, UnknownFormation
from .files import load_group_file
from .formations import (
    SigmaPartition,
    builtin_formations,
    f_hypercentre,
    formation_by_selector,
    is_nilpotent,
    is_soluble,
    is_supersoluble,
)
from .groups import DEFAULT_ORDER_CAP, Group, center, generated_subgroup
from .lattice import (
    DEFAULT_LATTICE_BUDGET,
    chief_series,
    frattini,
    normal_subgroups,
)
from .morphisms import DEFAULT_SEARCH_BUDGET
from .subnormal import (
    is_f_subnormal,
    is_k_f_subnormal,
    is_sigma_subnormal,
    is_subnormal,
)
from .verify import (
    DEFAULT_AUT_BUDGET,
    catalog_generate,
    run_all,
    verify_holomorph_bound,
    verify_lemma_suite,
    verify_schenkman_classic,
    verify_section3_corollaries,
    verify_theorem_a,
    verify_theorem_b,
)

CLAIMS = (
    "theorem-a",
    "theorem-b",
    "schenkman",
    "holomorph-bound",
    "section3",
    "lemmas",
    "all",
)


@dataclass
class Config:
    """Validated settings for a verification run."""

    claim: str = "all"
    formation: str | None = None
    sigma: SigmaPartition | None = None
    max_order: int = 24
    order_cap: int = DEFAULT_ORDER_CAP
    search_budget: int = DEFAULT_SEARCH_BUDGET
    lattice_budget: int = DEFAULT_LATTICE_BUDGET
    inputs: tuple[str, ...] = ()
    out_format: str = "text"

    def validate(self) -> None:
        if self.claim not in CLAIMS:
            raise ValueError(f"unknown claim {self.claim!r}")
        if self.max_order < 1 or self.order_cap < 1:
            raise ValueError("max-order and order-cap must be positive")
        if self.max_order > self.order_cap:
            raise ValueError("max-order cannot exceed order-cap")
        if self.search_budget < 1 or self.lattice_budget < 1:
            raise ValueError("budgets must be positive")
        if self.formation == "sigma-nilpotent" and self.sigma is None:
            raise ValueError("--formation sigma-nilpotent requires --sigma")
        if self.out_format not in ("text", "structured"):
            raise ValueError(f"unknown output format {self.out_format!r}")


def parse_selector(text: str, order_cap: int | None = DEFAULT_ORDER_CAP) -> Group:
    """Build a group from the selector mini-grammar."""
    sel = text.strip()
    if sel == "trivial":
        return construct.trivial()
    if sel.startswith("file:"):
        return load_group_file(sel[5:], order_cap=order_cap)
    if sel.startswith("prod(") and sel.endswith(")"):
        inner = sel[5:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                left, right = inner[:i], inner[i + 1 :]
                return construct.direct_product(
                    parse_selector(left, order_cap),
                    parse_selector(right, order_cap),
                    order_cap=order_cap,
                )
        raise ValueError(f"bad product selector {text!r}")
    if ":" not in sel:
        raise ValueError(f"bad selector {text!r}")
    kind, _, arg = sel.partition(":")
    kind = kind.strip().lower()
    if kind == "elab":
        if "^" not in arg:
            raise ValueError("elab selector looks like elab:p^k")
        p, _, k = arg.partition("^")
        return construct.elem_abelian(int(p), int(k), order_cap=order_cap)
    names = {
        "cyclic": "cyclic",
        "dihedral": "dihedral",
        "sym": "symmetric",
        "alt": "alternating",
        "quaternion": "quaternion",
    }
    if kind not in names:
        raise ValueError(f"unknown family {kind!r}")
    return construct.standard_family(names[kind], int(arg), order_cap=order_cap)


def _resolve_group(args) -> Group:
    if args.input:
        return load_group_file(args.input, order_cap=args.order_cap)
    return parse_selector(args.selector, order_cap=args.order_cap)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_group_show(args) -> int:
    G = _resolve_group(args)
    series = chief_series(G)
    payload = {
        "label": G.label,
        "order": G.order,
        "center_order": center(G).order,
        "abelian": G.is_abelian(),
        "nilpotent": is_nilpotent(G),
        "supersoluble": is_supersoluble(G),
        "soluble": is_soluble(G),
        "element_orders": {
            str(int(k)): int((G.element_orders == k).sum())
            for k in np.unique(G.element_orders)
        },
        "normal_subgroup_orders": [n.order for n in normal_subgroups(G)],
        "chief_series_orders": [t.order for t in series.terms],
        "chief_factor_orders": list(series.factor_orders()),
        "frattini_order": frattini(G, budget=args.lattice_budget).order,
    }
    if args.cayley:
        payload["cayley"] = G.table.tolist()
    _emit(payload, args.format)
    return 0


def _formation_from_args(args):
    sigma = SigmaPartition.parse(args.sigma) if args.sigma else None
    return formation_by_selector(args.formation, sigma), sigma


def cmd_residual(args) -> int:
    from .formations import residual

    G = _resolve_group(args)
    F, _ = _formation_from_args(args)
    R = residual(G, F)
    _emit(
        {
            "group": G.label,
            "formation": F.name,
            "residual_order": R.order,
            "residual_members": list(R.members_tuple),
        },
        args.format,
    )
    return 0


def cmd_hypercentre(args) -> int:
    G = _resolve_group(args)
    F, _ = _formation_from_args(args)
    Z = f_hypercentre(G, F)
    _emit(
        {
            "group": G.label,
            "formation": F.name,
            "hypercentre_order": Z.order,
            "hypercentre_members": list(Z.members_tuple),
        },
        args.format,
    )
    return 0


def cmd_subnormal(args) -> int:
    G = _resolve_group(args)
    try:
        gens = [int(tok) for tok in args.gens.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"bad generator list {args.gens!r}") from None
    for g in gens:
        if not (0 <= g < G.order):
            raise ValueError(f"generator index {g} out of range 0..{G.order - 1}")
    A = generated_subgroup(G, gens)
    sigma = SigmaPartition.parse(args.sigma) if args.sigma else None
    if args.kind == "plain":
        chain = is_subnormal(G, A)
    elif args.kind == "sigma":
        if sigma is None:
            raise ValueError("--kind sigma requires --sigma")
        chain = is_sigma_subnormal(G, A, sigma, args.lattice_budget)
    else:
        F = formation_by_selector(args.formation, sigma)
        if args.kind == "kf":
            chain = is_k_f_subnormal(G, A, F, args.lattice_budget)
        else:
            chain = is_f_subnormal(G, A, F, args.lattice_budget)
    payload = {
        "group": G.label,
        "subgroup_order": A.order,
        "kind": args.kind,
        "verdict": "POSITIVE" if chain is not None else "NEGATIVE",
    }
    if chain is not None:
        payload["chain"] = chain.describe()
        payload["chain_orders"] = list(chain.order_trail())
        payload["step_kinds"] = list(chain.step_kinds)
    _emit(payload, args.format)
    return 0


def _select_formations(config: Config):
    if config.formation:
        return [formation_by_selector(config.formation, config.sigma)]
    out = builtin_formations(config.sigma)
    return out


def cmd_verify(args) -> int:
    config = Config(
        claim=args.claim,
        formation=args.formation,
        sigma=SigmaPartition.parse(args.sigma) if args.sigma else None,
        max_order=args.max_order,
        order_cap=args.order_cap,
        search_budget=args.budget,
        lattice_budget=args.lattice_budget,
        inputs=tuple(args.input or ()),
        out_format=args.format,
    )
    config.validate()
    catalog = catalog_generate(
        config.max_order, files=config.inputs, order_cap=config.order_cap
    )
    formations = _select_formations(config)
    sigma = config.sigma
    reports = []
    if config.claim == "theorem-b":
        reports = [verify_theorem_b(catalog, F) for F in formations]
    elif config.claim == "theorem-a":
        reports = [
            verify_theorem_a(catalog, F, config.lattice_budget)
            for F in formations
            if F.hereditary and F.saturated
        ]
    elif config.claim == "schenkman":
        reports = [verify_schenkman_classic(catalog, config.lattice_budget)]
    elif config.claim == "holomorph-bound":
        reports = [
            verify_holomorph_bound(catalog, F, config.search_budget)
            for F in formations
        ]
    elif config.claim == "section3":
        reports = verify_section3_corollaries(
            catalog,
            sigma if sigma is not None else SigmaPartition.singletons(),
            config.lattice_budget,
        )
    elif config.claim == "lemmas":
        reports = [
            verify_lemma_suite(
                catalog,
                F,
                sigma=sigma if F.name.startswith("sigma-nilpotent") else None,
                lattice_budget=config.lattice_budget,
            )
            for F in formations
        ]
    else:
        reports = run_all(
            catalog,
            formations,
            sigma=sigma,
            lattice_budget=config.lattice_budget,
            aut_budget=config.search_budget,
        )

    if config.out_format == "structured":
        print(render_structured(reports, include_timing=args.timings))
    else:
        for r in reports:
            print(r.to_text())
        total_failures = sum(len(r.failures) for r in reports)
        print(
            f"== {len(reports)} report(s); "
            f"{sum(r.checked for r in reports)} checked; "
            f"{sum(r.asserted for r in reports)} asserted; "
            f"{total_failures} failure(s) =="
        )
    if any(r.failures for r in reports):
        return 1
    if any(r.budget_exhausted for r in reports):
        return 2
    return 0


def render_structured(reports, include_timing: bool = False) -> str:
    """Canonical JSON for a list of reports.

    Timing is excluded unless asked for, so identical runs serialize to
    identical bytes.
    """
    payload = {
        "reports": [r.to_dict(include_timing=include_timing) for r in reports],
        "verdict": "PASS" if all(r.passed for r in reports) else "FAIL",
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="finform", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, selector=True):
        if selector:
            p.add_argument("selector", nargs="?", default="trivial")
            p.add_argument("--input", help="group file (overrides the selector)")
        p.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
        p.add_argument("--lattice-budget", type=int, default=DEFAULT_LATTICE_BUDGET)
        p.add_argument(
            "--format", choices=("text", "structured"), default="text",
            help="text or json-like structured output",
        )

    grp = sub.add_parser("group", help="group inspection")
    gsub = grp.add_subparsers(dest="group_command", required=True)
    show = gsub.add_parser("show", help="order, series, and class flags")
    common(show)
    show.add_argument("--cayley", action="store_true", help="include the full table")
    show.set_defaults(func=cmd_group_show)

    res = sub.add_parser("residual", help="formation residual of a group")
    common(res)
    res.add_argument("--formation", required=True)
    res.add_argument("--sigma")
    res.set_defaults(func=cmd_residual)

    hyp = sub.add_parser("hypercentre", help="formation hypercentre of a group")
    common(hyp)
    hyp.add_argument("--formation", required=True)
    hyp.add_argument("--sigma")
    hyp.set_defaults(func=cmd_hypercentre)

    sn = sub.add_parser("subnormal", help="witness chains for subnormality notions")
    common(sn)
    sn.add_argument("--gens", required=True, help="comma-separated element indices")
    sn.add_argument(
        "--kind", choices=("plain", "kf", "f", "sigma"), default="kf",
        help="chain flavour",
    )
    sn.add_argument("--formation", default="nilpotent")
    sn.add_argument("--sigma")
    sn.set_defaults(func=cmd_subnormal)

    ver = sub.add_parser("verify", help="run verification sweeps over a catalog")
    ver.add_argument("claim", choices=CLAIMS)
    ver.add_argument("--formation")
    ver.add_argument("--sigma")
    ver.add_argument("--max-order", type=int, default=24)
    ver.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    ver.add_argument("--budget", type=int, default=DEFAULT_AUT_BUDGET,
                     help="search-node budget for isomorphism/automorphism work")
    ver.add_argument("--lattice-budget", type=int, default=DEFAULT_LATTICE_BUDGET)
    ver.add_argument("--input", action="append", help="extra group file (repeatable)")
    ver.add_argument(
        "--format", choices=("text", "structured"), default="text",
        help="text or json-like structured output",
    )
    ver.add_argument("--timings", action="store_true",
                     help="include elapsed_ms in structured output")
    ver.set_defaults(func=cmd_verify)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, UnknownFormation) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except GroupError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
