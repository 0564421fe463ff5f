"""Command-line front end: ``dedekind <command> [input]``.

Input is a JSON document (or an order-type expression for ``ordertype``)
given as an argument or on stdin. Exit codes: 0 success, 1 a verification
failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness, orders, ordertypes, topology, valuation
from .families import SetFamily, load_family


class InputError(ValueError):
    pass


def _read(arg: str | None) -> str:
    text = sys.stdin.read() if arg in (None, "-") else arg
    if not text.strip():
        raise InputError("empty input")
    return text


def _doc(arg: str | None) -> dict:
    try:
        doc = json.loads(_read(arg))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError("expected a JSON object")
    return doc


def _chain(arg: str | None) -> orders.Chain:
    obj = orders.load(_doc(arg))
    if not isinstance(obj, orders.Chain):
        raise InputError('expected {"chain": [...]}')
    return obj


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)


def cmd_cuts(ns) -> tuple[str, int]:
    chain = _chain(ns.input)
    ds = orders.cuts(chain)
    if ns.format == "dot":
        return orders.hasse_dot(orders.cut_poset(chain), "cuts", label=_cut_label), 0
    succ, pred = orders.is_pred_is_succ(orders.cut_poset(chain))
    rows = [{**c.to_json(), "IS": c in succ, "IP": c in pred} for c in ds]
    if ns.format == "text":
        return "\n".join(_cut_label(c) for c in ds), 0
    return _dump({"chain": list(chain.labels), "cuts": rows}), 0


def _cut_label(c: orders.Cut) -> str:
    return "({" + ",".join(c.left) + "}, {" + ",".join(c.right) + "})"


def cmd_spec(ns) -> tuple[str, int]:
    chain = _chain(ns.input)
    model, report = valuation.spectrum(chain, samples=ns.samples, seed=ns.seed)
    if ns.format == "dot":
        return topology.specialization_dot([p.name() for p in model.primes], "spec"), 0
    if ns.format == "text":
        lines = [
            f"{p.name():6} cut={p.cut.size} IS={p in model.succ_points} IP={p in model.pred_points}"
            for p in model.primes
        ]
        return "\n".join(lines), 0 if report.ok else 1
    out = model.to_json()
    out["verified"] = report.ok
    out["seed"] = ns.seed
    return _dump(out), 0 if report.ok else 1


def cmd_ordertype(ns) -> tuple[str, int]:
    text = _read(ns.expr)
    try:
        e = ordertypes.parse(text.strip())
    except ordertypes.OrderTypeSyntaxError as exc:
        raise InputError(str(exc)) from exc
    rec = ordertypes.evaluate(e)
    if ns.format == "text":
        a = rec["attributes"]
        return (
            f"{rec['input']} = {rec['normal_form']}  k1={a['k1']} k2={a['k2']} "
            f"D={rec['D']} IS={rec['IS']} IP={rec['IP']} dedekind={rec['dedekind']['dedekind']}"
        ), 0
    return _dump(rec), 0


def cmd_topology(ns) -> tuple[str, int]:
    pts = list(_chain(ns.input).labels)
    if ns.format == "dot":
        return topology.specialization_dot(pts), 0
    if not pts:
        raise InputError("the space needs at least one point")
    top = topology.zariski(pts)
    out = {
        "points": pts,
        "closed_sets": top.sorted_closed(),
        "prop-3.13": topology.final_subsets_check(pts).to_json(),
        "cor-3.14": topology.ip_closed_correspondence(pts).to_json(),
        "density": topology.density(pts).to_json() if len(pts) >= 2 else None,
        "cop": topology.cop_and_separation(pts).to_json(),
    }
    if ns.format == "text":
        return "\n".join(f"{k}: {json.dumps(v)}" for k, v in out.items()), 0
    return _dump(out), 0


def cmd_dot(ns) -> tuple[str, int]:
    doc = _doc(ns.input)
    if "family" in doc:
        fam = load_family(doc)
        return orders.hasse_dot(fam.poset(), "family", label=fam.fmt), 0
    obj = orders.load(doc)
    poset = obj.poset() if isinstance(obj, orders.Chain) else obj
    return orders.hasse_dot(poset, "hasse"), 0


def cmd_verify(ns) -> tuple[str, int]:
    try:
        bounds = harness.Bounds(
            max_chain=ns.max_chain,
            max_universe=ns.max_universe,
            samples=ns.samples,
            seed=ns.seed,
        )
    except harness.BoundsError as exc:
        raise InputError(str(exc)) from exc
    try:
        reports = harness.run_suite(ns.suite, bounds)
    except harness.UnknownSuite as exc:
        raise InputError(str(exc)) from exc
    status = harness.exit_status(reports)
    if ns.format == "text":
        return "\n".join(r.line() for r in reports), status
    doc = {"bounds": bounds.to_json(), "reports": [r.to_json(timing=ns.timing) for r in reports], "status": status}
    return _dump(doc), status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=200)

    p = argparse.ArgumentParser(prog="dedekind", description="Cut spaces, value groups and spectra.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("cuts", cmd_cuts, "list the cuts D(T) of a chain"),
        ("spec", cmd_spec, "prime spectrum of the valuation ring built on a chain"),
        ("topology", cmd_topology, "Zariski topology on a chain of points"),
        ("dot", cmd_dot, "Hasse diagram of a chain, poset or family as DOT"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("input", nargs="?", help="JSON document; stdin when omitted or '-'")
        sp.set_defaults(fn=fn)

    ot = sub.add_parser("ordertype", help="order-type expressions")
    ot_sub = ot.add_subparsers(dest="action", required=True)
    ev = ot_sub.add_parser("eval", parents=[common], help="normal form, attributes, D, IS, IP")
    ev.add_argument("expr", nargs="?", help="expression such as 'w*+3+w'; stdin when omitted")
    ev.set_defaults(fn=cmd_ordertype)

    vf = sub.add_parser("verify", parents=[common], help="run verification suites")
    vf.add_argument("--suite", default="all")
    vf.add_argument("--max-chain", type=int, default=8)
    vf.add_argument("--max-universe", type=int, default=3)
    vf.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")
    vf.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        text, status = ns.fn(ns)
    except (
        InputError,
        orders.ElementNotFound,
        orders.InvalidOrder,
        ordertypes.OrderTypeSyntaxError,
        ordertypes.UnsupportedExpression,
        topology.PreconditionError,
        KeyError,
        TypeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
