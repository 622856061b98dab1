"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (invalid characters,
unsupported types, failed checks), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import acceptance
from .borel import borel_factors, spectral_matrix, spectral_rank
from .charpoly import CharPoly, expand_small, factored_text, linearize, product_on_charpoly
from .errors import CapExceeded, LieCPError
from .oracle import det_pencil, random_unimodular, sl2_closed_form, sl2_matrices, verify_base_change
from .reconstruct import decompose
from .rootsys import build
from .sl2embed import audit_json, audit_markdown, embed_charpoly, embed_report
from .weights import WeightMultiset


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump(obj) -> None:
    print(json.dumps(obj, indent=1))


def _type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="family", required=True, help="family letter A..G")
    p.add_argument("--rank", type=int, required=True)


def _rs(args):
    return build(args.family.upper(), args.rank)


def _charpoly_from(args, rs, weights) -> CharPoly:
    for w in weights:
        if len(w) != rs.rank:
            raise LieCPError(f"weight {list(w)} has length {len(w)}, {rs.name} needs {rs.rank}")
    return CharPoly.of(rs, weights)


def cmd_rootsys(args) -> int:
    _dump(_rs(args).to_json())
    return 0


def cmd_charpoly(args) -> int:
    rs = _rs(args)
    f = _charpoly_from(args, rs, args.highest)
    out = {"type": rs.name, "dim": f.dim(rs), "charpoly": f.to_json()}
    lin = linearize(rs, f)
    out["linearization"] = factored_text(lin)
    if args.expand:
        out["expanded"] = str(expand_small(lin, args.degree_cap))
    _dump(out)
    return 0


def cmd_linearize(args) -> int:
    rs = _rs(args)
    _dump(linearize(rs, _charpoly_from(args, rs, args.highest)).to_json())
    return 0


def cmd_decompose(args) -> int:
    rs = _rs(args)
    if args.file == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.file) as fh:
            data = json.load(fh)
    gamma = WeightMultiset.from_json(data, rs.tag)
    _dump(decompose(rs, gamma).to_json())
    return 0


def cmd_product(args) -> int:
    rs = _rs(args)
    f = _charpoly_from(args, rs, args.left)
    g = _charpoly_from(args, rs, args.right)
    prod = product_on_charpoly(rs, f, g)
    if args.format == "list":
        _dump(prod.to_json())
    else:
        items = sorted(prod.decomposition.entries.items(), reverse=True)
        print(json.dumps({json.dumps(list(w), separators=(",", ":")): m for w, m in items},
                         separators=(",", ":")))
    return 0


def cmd_sl2_table(args) -> int:
    if args.markdown:
        sys.stdout.write(audit_markdown())
    else:
        _dump(audit_json())
    return 0


def cmd_sl2_embed(args) -> int:
    report = embed_report(_rs(args), args.root_class, a_reading=args.a_reading)
    if args.json:
        _dump(report.to_json())
        return 0
    k = report.k_roots
    print(f"type {report.name}, {report.root_class} root {[str(x) for x in report.root]}")
    print(f"k_roots: k0={k[0]} k1={k[1]} k2={k[2]} k3={k[3]}; k0 incl. Cartan = {report.k0_total}")
    print(f"dim L = {report.dim_L} = {report.k0_total} + 2*({k[1]}+{k[2]}+{k[3]}) : "
          f"{'PASS' if report.identity_holds() else 'FAIL'}")
    if report.table1_claimed is not None:
        c = report.table1_claimed
        flags = ", ".join(f"{key}={'ok' if v else 'MISMATCH'}"
                          for key, v in report.matches_table1.items())
        print(f"published row {report.table1_label}: k0..k3 = {c[0]}, {c[1]}, {c[2]}, {c[3]} ({flags})")
    print(embed_charpoly(report))
    return 0


def cmd_borel(args) -> int:
    rs = _rs(args)
    sm = spectral_matrix(rs)
    r = spectral_rank(rs, check=False)
    ok = r == rs.rank
    if args.dump_matrix:
        _dump({"type": rs.name, "n": rs.rank, "s": sm.num_positive,
               "factors": borel_factors(rs).to_json(), "matrix": sm.matrix.to_json()})
    print(f"s = {sm.num_positive}, n = {rs.rank}")
    print(f"rank(lambda_B) = {r} {'=' if ok else '!='} dim h : {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_verify_sl2(args) -> int:
    oracle = det_pencil(sl2_matrices(args.m))
    closed = sl2_closed_form(args.m)
    ok = oracle == closed
    print(f"oracle:      {oracle}")
    print(f"closed form: {closed}")
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_verify_basechange(args) -> int:
    rng = random.Random(args.seed)
    p = sl2_matrices(args.m)
    all_ok = True
    for t in range(args.trials):
        b = random_unimodular(3, rng)
        ok = verify_base_change(p, b)
        all_ok &= ok
        rows = ";".join(",".join(str(x) for x in b.row(i)) for i in range(b.rows))
        print(f"trial {t}: B = [{rows}] : {'PASS' if ok else 'FAIL'}")
    return 0 if all_ok else 1


def cmd_selftest(args) -> int:
    results = acceptance.run_all()
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed"
          + (f"; failed: {failed}" if failed else ""))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liecp", description=__doc__.splitlines()[0])
    parser.add_argument("--dim-cap", type=int, default=None,
                        help="refuse irreducibles above this dimension (default 10^6, env LIECP_DIM_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootsys", help="dump a root system as JSON")
    _type_args(p)
    p.set_defaults(func=cmd_rootsys)

    p = sub.add_parser("charpoly", help="canonical form of the characteristic polynomial of a direct sum")
    _type_args(p)
    p.add_argument("--highest", type=_weight, action="append", required=True,
                   help="highest weight, e.g. 1,0 (repeat for direct sums)")
    p.add_argument("--expand", action="store_true", help="also print the expanded linearization")
    p.add_argument("--degree-cap", type=int, default=64)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("linearize", help="linear factors (weights) of a representation")
    _type_args(p)
    p.add_argument("--highest", type=_weight, action="append", required=True)
    p.set_defaults(func=cmd_linearize)

    p = sub.add_parser("decompose", help="recover the decomposition from a linear-factor JSON file")
    _type_args(p)
    p.add_argument("file", help="LinearFactors JSON file, or - for stdin")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("product", help="resolution product of two representations")
    _type_args(p)
    p.add_argument("--left", type=_weight, action="append", required=True)
    p.add_argument("--right", type=_weight, action="append", required=True)
    p.add_argument("--format", choices=["map", "list"], default="map")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("sl2-table", help="audit the published k0..k3 table")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output (default)")
    g.add_argument("--markdown", action="store_true")
    p.set_defaults(func=cmd_sl2_table)

    p = sub.add_parser("sl2-embed", help="eigenvalue counts of ad H for one root")
    _type_args(p)
    p.add_argument("--class", dest="root_class", choices=["long", "short"], default="long")
    p.add_argument("--a-reading", choices=["sl_n", "rank"], default="sl_n",
                   help="how to read n in the published A_n row")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sl2_embed)

    p = sub.add_parser("borel", help="rank of the Borel spectral matrix")
    _type_args(p)
    p.add_argument("--dump-matrix", action="store_true")
    p.set_defaults(func=cmd_borel)

    p = sub.add_parser("verify-sl2", help="determinant oracle vs closed form for V(m)")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_verify_sl2)

    p = sub.add_parser("verify-basechange", help="randomized base-change check on V(m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.set_defaults(func=cmd_verify_basechange)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("LIECP_DIM_CAP")
    if args.dim_cap is not None:
        os.environ["LIECP_DIM_CAP"] = str(args.dim_cap)
    try:
        return args.func(args)
    except (LieCPError, CapExceeded) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if args.dim_cap is not None:
            if saved is None:
                os.environ.pop("LIECP_DIM_CAP", None)
            else:
                os.environ["LIECP_DIM_CAP"] = saved


if __name__ == "__main__":
    sys.exit(main())
