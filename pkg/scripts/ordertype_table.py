"""Tabulate D, IS, IP and the Dedekind verdict for order-type expressions.

    python3 scripts/ordertype_table.py "w" "z" "w+1+w*" "q+1"
    python3 scripts/ordertype_table.py --sweep 2
"""

import argparse

from dedekind.ordertypes import all_eta_free, evaluate, normalize, parse


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("exprs", nargs="*", default=["3", "w", "w*", "z", "w+1", "w+1+w*", "q", "1+q+1"])
    ap.add_argument("--sweep", type=int, metavar="K", help="every eta-free sum of at most K summands, Fin <= 2")
    args = ap.parse_args()
    if args.sweep:
        seen = {}
        for e in all_eta_free(args.sweep, 2):
            seen.setdefault(str(normalize(e)), e)
        exprs = [seen[k] for k in sorted(seen)]
    else:
        exprs = [parse(x) for x in args.exprs]
    print(f"{'expr':12} {'normal':10} {'k1':5} {'k2':5} {'D':14} {'IS':10} {'IP':10} dedekind")
    for e in exprs:
        r = evaluate(e)
        a = r["attributes"]
        print(
            f"{r['input']:12} {r['normal_form']:10} {str(a['k1']):5} {str(a['k2']):5} "
            f"{str(r['D']):14} {str(r['IS']):10} {str(r['IP']):10} {r['dedekind']['dedekind']}"
        )


if __name__ == "__main__":
    main()
