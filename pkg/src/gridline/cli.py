"""Command-line interface.

Commands: metrics | risk | resilience | faulttree | attack | roi | serve.
Every command accepts --network (a file path or "bundled:<name>"),
--format json|table, and --seed.  JSON output is produced by the shared
payload builders, so it is byte-identical to the HTTP service's responses
for the same inputs.

Exit codes: 0 success, 2 validation or usage error, 1 internal error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import attacks, faulttree, payloads
from .errors import ConvergenceError, GridlineError
from .network import TransitNetwork, load_bundled, parse

BUNDLED_PREFIX = "bundled:"
DEFAULT_NETWORK = "bundled:greenline17"
DEFAULT_TREE = "bundled:copley-kenmore"
DEFAULT_ROI_BUDGETS = "1,2,3,4,5,6,7,8,9,10"


def _load_network(ref: str) -> TransitNetwork:
    if ref.startswith(BUNDLED_PREFIX):
        return load_bundled(ref[len(BUNDLED_PREFIX):])
    path = Path(ref)
    if not path.exists():
        raise GridlineError(f"network file not found: {ref}")
    return parse(path.read_text("utf-8"))


def _load_tree(ref: str) -> tuple[faulttree.FaultTree, faulttree.ReductionCurve]:
    if ref.startswith(BUNDLED_PREFIX):
        return faulttree.load_bundled_tree(ref[len(BUNDLED_PREFIX):])
    path = Path(ref)
    if not path.exists():
        raise GridlineError(f"fault-tree file not found: {ref}")
    tree, curve = faulttree.parse_tree(path.read_text("utf-8"))
    if curve is None:
        raise GridlineError(
            f"fault-tree file {ref} carries no beta; add one or calibrate first")
    return tree, curve


def _parse_budgets(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise GridlineError(f"could not parse budget list {text!r}")


def _emit_json(payload) -> None:
    sys.stdout.buffer.write(payloads.dump_bytes(payload))
    sys.stdout.buffer.flush()


def _print_rows(rows: list[tuple[str, str]]) -> None:
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        print(f"{label.ljust(width)}  {value}")


# ---------------------------------------------------------------------------
# Table renderers

def _metrics_table(payload: dict) -> None:
    rows = [
        ("nodes", str(payload["node_count"])),
        ("links", str(payload["link_count"])),
        ("total degree", str(payload["total_degree"])),
        ("network degree", str(payload["network_degree"])),
        ("mean degree (per link)", f"{payload['mean_degree_paper']:.4f}"),
        ("mean degree (per node)", f"{payload['mean_degree_standard']:.4f}"),
        ("spectral radius", f"{payload['spectral_radius']:.4f}"),
        ("link robustness", f"{payload['link_robustness']:.4f}"),
        ("node robustness", f"{payload['node_robustness']:.4f}"),
        ("blocking fraction", f"{payload['blocking_fraction']:.4f}"),
        ("removable links", str(payload["removable_links"])),
        ("removable nodes", str(payload["removable_nodes"])),
        ("irremovable blocking nodes", str(payload["irremovable_blocking_nodes"])),
        ("blocking display set", ", ".join(payload["blocking_display_nodes"])),
    ]
    _print_rows(rows)
    degree_c = payload.get("degree_centrality")
    between_c = payload.get("betweenness_centrality")
    eigen_c = payload.get("eigenvector_centrality")
    if not (degree_c or between_c or eigen_c):
        return
    print()
    header = f"{'station':24}{'degree':>8}{'deg-c':>10}{'between':>10}{'eigen':>10}"
    print(header)
    print("-" * len(header))
    for node_id, degree in payload["per_node_degree"].items():
        line = f"{node_id:24}{degree:>8}"
        for table in (degree_c, between_c, eigen_c):
            line += f"{table[node_id]:>10.4f}" if table else f"{'-':>10}"
        print(line)


def _risk_table(payload: dict) -> None:
    header = f"{'asset':40}{'risk':>10}"
    print(header)
    print("-" * len(header))
    for asset, value in payload["ranking"]:
        print(f"{asset:40}{value:>10.2f}")
    print("-" * len(header))
    print(f"{'TOTAL':40}{payload['total_risk']:>10.2f}")


def _resilience_table(payload: dict) -> None:
    gamma_critical = payload["gamma_critical"]
    rows = [
        ("intercept b", f"{payload['b']:.5f}"),
        ("slope k", f"{payload['k']:.5f}"),
        ("spectral radius rho", f"{payload['rho']:.4f}"),
        ("critical vulnerability", "none" if gamma_critical is None
         else f"{gamma_critical:.4f} ({gamma_critical * 100:.1f}%)"),
    ]
    estimate = payload.get("estimated_q")
    if estimate is not None:
        rows.append(("estimated q", f"{estimate['q']:.4f} "
                     f"(gamma {estimate['gamma']}, {estimate['trials']} trials, "
                     f"seed {estimate['seed']})"))
    _print_rows(rows)


def _faulttree_table(payload: dict) -> None:
    rows = [
        ("budget", f"{payload['budget']:.2f}"),
        ("allocator", payload["allocator"]),
        ("beta", f"{payload['beta']:.4f}"),
        ("vulnerability", f"{payload['vulnerability'] * 100:.2f}%"),
        ("risk", f"{payload['risk']:.2f}"),
    ]
    for label, spend in payload["allocation"].items():
        rows.append((f"spend {label}", f"{spend:.2f}"))
    _print_rows(rows)


def _sweep_table(points: list) -> None:
    header = f"{'budget':>8}{'vulnerability':>16}{'risk':>10}"
    print(header)
    print("-" * len(header))
    for point in points:
        print(f"{point['budget']:>8.2f}{point['vulnerability'] * 100:>15.2f}%"
              f"{point['risk']:>10.2f}")


def _attack_table(payload: dict) -> None:
    rows = [
        ("components before", str(payload["components_before"])),
        ("components after", str(payload["components_after"])),
        ("largest component after", str(payload["largest_component_after"])),
        ("disconnected terminus pairs", str(payload["disconnected_terminus_pairs"])),
        ("risk before", f"{payload['risk_before']:.2f}"),
        ("risk after", f"{payload['risk_after']:.2f}"),
        ("spectral radius before", f"{payload['spectral_radius_before']:.4f}"),
        ("spectral radius after", f"{payload['spectral_radius_after']:.4f}"),
    ]
    _print_rows(rows)


def _roi_table(points: list) -> None:
    header = f"{'expenditure':>12}{'roi':>10}"
    print(header)
    print("-" * len(header))
    for point in points:
        print(f"{point['expenditure']:>12.2f}{point['roi']:>10.3f}")


def _roi_svg(points: list, path: str) -> None:
    """Two-axis line plot of ROI against expenditure, written as SVG."""
    width, height, margin = 640, 400, 50
    xs = [p["expenditure"] for p in points]
    ys = [p["roi"] for p in points]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0

    def sx(x: float) -> float:
        return margin + (x - x_lo) / x_span * (width - 2 * margin)

    def sy(y: float) -> float:
        return height - margin - (y - y_lo) / y_span * (height - 2 * margin)

    coords = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y in zip(xs, ys))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<polyline points="{coords}" fill="none" stroke="#2a6f97" stroke-width="2"/>',
        f'<text x="{width / 2:.0f}" y="{height - 12}" text-anchor="middle" '
        f'font-size="13">expenditure</text>',
        f'<text x="14" y="{height / 2:.0f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 14 {height / 2:.0f})">roi</text>',
        f'<text x="{margin}" y="{height - margin + 16}" font-size="11">{x_lo:g}</text>',
        f'<text x="{width - margin}" y="{height - margin + 16}" font-size="11" '
        f'text-anchor="end">{x_hi:g}</text>',
        f'<text x="{margin - 6}" y="{height - margin}" font-size="11" '
        f'text-anchor="end">{y_lo:.3f}</text>',
        f'<text x="{margin - 6}" y="{margin + 4}" font-size="11" '
        f'text-anchor="end">{y_hi:.3f}</text>',
        "</svg>",
    ]
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# Commands

def _cmd_metrics(args) -> int:
    payload = payloads.metrics_payload(_load_network(args.network))
    if args.format == "json":
        _emit_json(payload)
    else:
        _metrics_table(payload)
    return 0


def _cmd_risk(args) -> int:
    payload = payloads.risk_payload(_load_network(args.network))
    if args.format == "json":
        _emit_json(payload)
    else:
        _risk_table(payload)
    return 0


def _cmd_resilience(args) -> int:
    network = _load_network(args.network)
    estimate = None
    if args.gamma is not None:
        if args.seed is None:
            raise GridlineError("--gamma needs --seed for a reproducible estimate")
        estimate = payloads.estimate_payload(network, args.gamma, args.trials,
                                             args.seed)
    payload = payloads.resilience_payload(network, estimate)
    if args.format == "json":
        _emit_json(payload)
    else:
        _resilience_table(payload)
    return 0


def _cmd_faulttree(args) -> int:
    tree, curve = _load_tree(args.tree)
    if args.budgets is not None:
        payload = payloads.sweep_payload(tree, curve, _parse_budgets(args.budgets),
                                         args.allocator, args.step)
        if args.format == "json":
            _emit_json(payload)
        else:
            _sweep_table(payload)
    else:
        payload = payloads.faulttree_payload(tree, curve, args.budget,
                                             args.allocator, args.step)
        if args.format == "json":
            _emit_json(payload)
        else:
            _faulttree_table(payload)
    return 0


def _cmd_attack(args) -> int:
    network = _load_network(args.network)
    if args.preset is not None:
        scenario = attacks.preset(args.preset)
    else:
        path = Path(args.scenario)
        if not path.exists():
            raise GridlineError(f"scenario file not found: {args.scenario}")
        scenario = attacks.parse_scenario(path.read_text("utf-8"))
    after = attacks.apply_scenario(network, scenario, args.seed)
    payload = payloads.attack_payload(network, after)
    if args.format == "json":
        _emit_json(payload)
    else:
        _attack_table(payload)
    return 0


def _cmd_roi(args) -> int:
    tree, curve = _load_tree(args.tree)
    payload = payloads.roi_payload(tree, curve, _parse_budgets(args.budgets),
                                   args.allocator, args.step)
    if args.format == "json":
        _emit_json(payload)
    else:
        _roi_table(payload)
    if args.svg is not None:
        _roi_svg(payload, args.svg)
        print(f"wrote {args.svg}", file=sys.stderr)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    network = _load_network(args.network)
    tree, curve = _load_tree(args.tree)
    app = create_app(network=network, tree=tree, curve=curve)
    port = int(os.environ.get("GRIDLINE_PORT", args.port))
    uvicorn.run(app, host=args.host, port=port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--network", default=DEFAULT_NETWORK,
                        help="network file path or bundled:<name> "
                             f"(default {DEFAULT_NETWORK})")
    common.add_argument("--format", choices=("json", "table"), default="table",
                        help="output format (default table)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized operations")

    tree_arg = argparse.ArgumentParser(add_help=False)
    tree_arg.add_argument("--tree", default=DEFAULT_TREE,
                          help="fault-tree file path or bundled:<name> "
                               f"(default {DEFAULT_TREE})")
    tree_arg.add_argument("--allocator", choices=faulttree.ALLOCATORS,
                          default="proportional", help="budget allocator")
    tree_arg.add_argument("--step", type=float, default=faulttree.DEFAULT_STEP,
                          help="greedy allocator step size")

    parser = argparse.ArgumentParser(
        prog="gridline",
        description="Risk and resilience analysis for transit networks")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("metrics", parents=[common],
                        help="graph metrics and robustness figures") \
        .set_defaults(func=_cmd_metrics)
    commands.add_parser("risk", parents=[common],
                        help="per-asset and total risk") \
        .set_defaults(func=_cmd_risk)

    p = commands.add_parser("resilience", parents=[common],
                            help="resiliency line and critical vulnerability")
    p.add_argument("--gamma", type=float, default=None,
                   help="also estimate the cascade exponent q at this gamma")
    p.add_argument("--trials", type=int, default=10000,
                   help="Monte Carlo trials for the estimate (default 10000)")
    p.set_defaults(func=_cmd_resilience)

    p = commands.add_parser("faulttree", parents=[common, tree_arg],
                            help="fault-tree budget evaluation")
    p.add_argument("--budget", type=float, default=0.0,
                   help="budget to allocate (default 0)")
    p.add_argument("--budgets", default=None,
                   help="comma-separated budgets for a sweep instead")
    p.set_defaults(func=_cmd_faulttree)

    p = commands.add_parser("attack", parents=[common],
                            help="apply an attack scenario and report impact")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--preset", choices=sorted(attacks.PRESETS),
                       help="built-in scenario")
    which.add_argument("--scenario", help="scenario JSON file")
    p.set_defaults(func=_cmd_attack)

    p = commands.add_parser("roi", parents=[common, tree_arg],
                            help="ROI curve over fault-tree budgets")
    p.add_argument("--budgets", default=DEFAULT_ROI_BUDGETS,
                   help=f"comma-separated budgets (default {DEFAULT_ROI_BUDGETS})")
    p.add_argument("--svg", default=None, help="also write an SVG line plot here")
    p.set_defaults(func=_cmd_roi)

    p = commands.add_parser("serve", parents=[common, tree_arg],
                            help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000,
                   help="listen port (GRIDLINE_PORT overrides)")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except GridlineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
