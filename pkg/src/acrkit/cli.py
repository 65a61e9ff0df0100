"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from fractions import Fraction

from .decide import Status, decide
from .diagram import FORMATS, render_diagram
from .embedding import arrow_diagram, project
from .errors import AcrkitError, InvariantViolation, OperationError, UnclassifiedError
from .graph import linkage_report
from .network import enumerate_networks, parse_network, render_network
from .operations import OperationTrace, canonicalize, compose_rate_maps, op_from_json
from .oracle import MassActionSystem, empirical_acr_check, reduce_one_dimensional, reduced_terms
from .oracle.isolate import positive_roots

SCHEMA = "acrkit.report/1"

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_UNCLASSIFIED = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    return parse_network(_read(args.file), strict=args.strict)


def _default_seed() -> int:
    raw = os.environ.get("ACRKIT_SEED")
    return int(raw) if raw not in (None, "") else 0


def _species_index(net, name):
    if name is None:
        return None
    return net.index(name)


def _diagrams(net) -> dict:
    out = {}
    for i, lab in enumerate(net.species):
        emb = project(net, i).result
        out[lab] = arrow_diagram(emb).ascii() if emb.n_reactions else None
    return out


def _oracle_section(net, species, samples, seed) -> dict:
    try:
        report = empirical_acr_check(net, species, samples=samples, seed=seed)
    except AcrkitError as e:
        return {"declined": str(e)}
    return report.to_json(net)


# ---------------------------------------------------------------- subcommands

def cmd_analyze(args, out) -> int:
    net = _load(args)
    rep = linkage_report(net)
    verdict = decide(net)
    report = {
        "schema": SCHEMA,
        "network": render_network(net),
        "species": list(net.species),
        "linkage": rep.as_dict(net.species),
        "arrow_diagrams": _diagrams(net),
        "verdict": verdict.to_json(net),
    }
    if args.samples:
        report["oracle"] = _oracle_section(net, _species_index(net, args.species), args.samples, args.seed)
    if args.json:
        out.write(_dump(report))
    else:
        v = report["verdict"]
        out.write(report["network"])
        out.write(f"species: {' '.join(net.species)}\n")
        out.write(f"complexes: {rep.p}  linkage classes: {rep.l}  dimension: {rep.dim}  deficiency: {rep.delta}\n")
        for lab, d in report["arrow_diagrams"].items():
            out.write(f"arrow diagram {lab}: {d if d is not None else '(none)'}\n")
        out.write(f"status: {v['status']}\n")
        for key in ("witness", "acr_value", "family", "polynomial"):
            if v.get(key) is not None:
                out.write(f"{key.replace('_', ' ')}: {v[key]}\n")
        if "oracle" in report:
            o = report["oracle"]
            if "declined" in o:
                out.write(f"oracle: declined ({o['declined']})\n")
            else:
                counts = Counter(s["root_count"] for s in o["samples"])
                summary = ", ".join(f"{k if k is not None else 'continuum'}: {n}"
                                    for k, n in sorted(counts.items(), key=lambda kv: (kv[0] is None, kv[0] or 0)))
                out.write(f"oracle ({len(o['samples'])} samples, seed {o['seed']}): root counts {summary}; "
                          f"all samples ACR: {o['all_samples_acr']} (evidence, not proof)\n")
    if args.require_classification and verdict.status is Status.UNCLASSIFIED:
        return EXIT_UNCLASSIFIED
    return EXIT_OK


def cmd_canonicalize(args, out) -> int:
    net = _load(args)
    family, trace = canonicalize(net)
    if args.trace_out:
        with open(args.trace_out, "w", encoding="utf-8") as fh:
            fh.write(trace.dumps() + "\n")
    if args.json:
        out.write(_dump({"schema": SCHEMA, "family": str(family), "trace": trace.to_json()}))
    else:
        out.write(f"family: {family}\n")
        for i, op in enumerate(trace.steps):
            out.write(f"step {i}: {op.name} {json.dumps(op.params(), sort_keys=True)}\n")
        out.write("canonical network:\n")
        out.write(render_network(trace.target))
    return EXIT_OK


def cmd_diagram(args, out) -> int:
    net = _load(args)
    text = render_diagram(net, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _parse_steps(items) -> list:
    steps = []
    for i, d in enumerate(items):
        try:
            steps.append(op_from_json(d))
        except OperationError as e:
            raise e.at_step(i) from None
    return steps


def _load_trace(path: str, net) -> OperationTrace:
    data = json.loads(_read(path))
    if isinstance(data, list):
        return OperationTrace.build(net, _parse_steps(data))
    steps = _parse_steps(data["steps"])
    recorded = data.get("source")
    if recorded is not None and parse_network(recorded, strict=False) == net:
        return OperationTrace.from_json(data)
    return OperationTrace.build(net, steps)


def cmd_ops(args, out) -> int:
    net = _load(args)
    trace = _load_trace(args.trace, net)
    result = trace.target
    labels_old, labels_new = net.rate_labels(), result.rate_labels()
    rates = {
        labels_old[k]: " + ".join(
            (f"{labels_new[j]}'" if c == 1 else f"{c}*{labels_new[j]}'") for j, c in expr) or "0"
        for k, expr in enumerate(compose_rate_maps(net, trace.steps))
    }
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(render_network(result))
    if args.json:
        out.write(_dump({"schema": SCHEMA, "network": render_network(result), "rate_constants": rates,
                         "steps": len(trace.steps)}))
    else:
        if not args.output:
            out.write(render_network(result))
        out.write("# rate constants of the input in terms of the result:\n")
        for k, expr in rates.items():
            out.write(f"#   {k} = {expr}\n")
    return EXIT_OK


def _parse_kappa(text: str) -> list[Fraction]:
    vals = [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    if any(v <= 0 for v in vals):
        raise ValueError("rate constants must be positive")
    return vals


def cmd_oracle(args, out) -> int:
    net = _load(args)
    species = _species_index(net, args.species)
    if args.kappa:
        sys_ = MassActionSystem(net, _parse_kappa(args.kappa))
        poly = reduce_one_dimensional(sys_, species)
        report = positive_roots(poly)
        body = {
            "schema": SCHEMA,
            "species": net.species[poly.variable],
            "kappa": [str(v) for v in sys_.values],
            "polynomial": poly.describe(net),
            "roots": report.to_json(),
        }
        if args.json:
            out.write(_dump(body))
        else:
            out.write(f"polynomial in {body['species']}: {body['polynomial']}\n")
            out.write(f"positive roots: {report.positive_root_count}\n")
            for r in body["roots"]:
                where = r["exact"] if r["exact"] is not None else f"({r['interval'][0]}, {r['interval'][1]})"
                out.write(f"  {where}  multiplicity {r['multiplicity']}  derivative sign {r['derivative_sign']}\n")
        return EXIT_OK
    reduced_terms(net, species)  # fail early with the reason the oracle declines
    body = {"schema": SCHEMA, **_oracle_section(net, species, args.samples or 50, args.seed)}
    if args.json:
        out.write(_dump(body))
    else:
        counts = Counter(s["root_count"] for s in body["samples"])
        out.write(f"species: {body['species']}  samples: {len(body['samples'])}  seed: {body['seed']}\n")
        for k in sorted(counts, key=lambda v: (v is None, v or 0)):
            out.write(f"  {'continuum' if k is None else f'{k} positive root(s)'}: {counts[k]}\n")
        out.write(f"all samples ACR: {body['all_samples_acr']} (evidence, not proof)\n")
        if body["counterexample_kappa"] is not None:
            out.write(f"counterexample kappa: {', '.join(body['counterexample_kappa'])}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    counts: Counter = Counter()
    total = 0
    for net in enumerate_networks(args.species_count, args.reactions, args.max_coeff):
        counts[decide(net).status.value] += 1
        total += 1
        if args.limit and total >= args.limit:
            break
    body = {"schema": SCHEMA, "species": args.species_count, "reactions": args.reactions,
            "max_coeff": args.max_coeff, "networks": total, "statuses": dict(sorted(counts.items()))}
    if args.json:
        out.write(_dump(body))
    else:
        out.write(f"{total} networks\n")
        for k, n in sorted(counts.items()):
            out.write(f"  {k}: {n}\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default: $ACRKIT_SEED or 0)")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true", default=True,
                      help="integer stoichiometric coefficients only (default)")
    mode.add_argument("--generalized", dest="strict", action="store_false",
                      help="allow rational coefficients")

    p = argparse.ArgumentParser(prog="acrkit", description="Analyze mass-action reaction networks.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="structure and ACR verdict")
    a.add_argument("file")
    a.add_argument("--samples", "--oracle", dest="samples", type=int, default=0,
                   help="append N seeded oracle samples")
    a.add_argument("--species", default=None, help="species the oracle tracks")
    a.add_argument("--require-classification", action="store_true",
                   help="exit 3 when the network is outside the classified classes")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("canonicalize", parents=[common], help="reduce to a canonical ACR family")
    c.add_argument("file")
    c.add_argument("--trace-out", default=None, help="write the operation trace as JSON")
    c.set_defaults(func=cmd_canonicalize)

    d = sub.add_parser("diagram", parents=[common], help="emit a reaction-diagram figure")
    d.add_argument("file")
    d.add_argument("--format", choices=FORMATS, default="dot")
    d.add_argument("-o", "--output", default=None)
    d.set_defaults(func=cmd_diagram)

    o = sub.add_parser("ops", parents=[common], help="replay an operation trace")
    o.add_argument("file")
    o.add_argument("trace")
    o.add_argument("-o", "--output", default=None, help="write the resulting network here")
    o.set_defaults(func=cmd_ops)

    r = sub.add_parser("oracle", parents=[common], help="exact steady-state sampling")
    r.add_argument("file")
    r.add_argument("--samples", "--oracle", dest="samples", type=int, default=50)
    r.add_argument("--species", default=None)
    r.add_argument("--kappa", default=None, help="comma-separated rate constants, e.g. 3,1,1,1")
    r.set_defaults(func=cmd_oracle)

    e = sub.add_parser("enumerate", parents=[common], help="classify every small strict network")
    e.add_argument("--species", dest="species_count", type=int, default=1)
    e.add_argument("--reactions", type=int, default=2)
    e.add_argument("--max-coeff", type=int, default=2)
    e.add_argument("--limit", type=int, default=0)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.seed is None:
        args.seed = _default_seed()
    try:
        return args.func(args, out)
    except InvariantViolation as e:
        print(f"acrkit: invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except UnclassifiedError as e:
        print(f"acrkit: unclassified: {e}", file=sys.stderr)
        return EXIT_UNCLASSIFIED
    except (AcrkitError, OSError, ValueError, KeyError, json.JSONDecodeError) as e:
        print(f"acrkit: error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
