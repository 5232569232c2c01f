"""Command-line interface: every module behind one scriptable entry point.

Exit codes: 0 success, 1 usage error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .bitableau import Bitableau, enumerate_bitableaux, weights
from .completion import highest_weight_census, shape21_candidate_crystal, skeleton
from .crystal import count_d, full_crystal, monomial_expansion_sweep
from .graphs import export_crystal
from .insertion import Biword, brsk, jdt_product, rsk
from .kron_tableaux import kronecker_count_row
from .partitions import check_partition, enumerate_partitions
from .symfunc import kronecker_coefficient, monomial_coefficient_d
from .tableaux import SSYT, reading_word
from .words import bitableau_reading_word

USAGE_ERROR = 1
MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _partition(text: str) -> tuple[int, ...]:
    if not text or text == "-":
        return ()
    try:
        return check_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _load_json(text: str | None, path: str | None):
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    if text is None:
        return None
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(text)


def _bitableau_arg(args) -> Bitableau:
    data = _load_json(getattr(args, "tableau", None), getattr(args, "infile", None))
    if data is None:
        raise ValueError("need --tableau or --in")
    if isinstance(data, dict):
        return Bitableau.from_json(data)
    return Bitableau.from_rows(data, getattr(args, "n", None), getattr(args, "m", None))


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _print_word(word: Sequence[int]) -> None:
    if word and max(word) > 9:
        print(",".join(map(str, word)))
    else:
        print("".join(map(str, word)))


def _csv_out(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _fmt_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p)) if p else "-"


def build_parser() -> _Parser:
    parser = _Parser(prog="bitableaux", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="partitions, SSYT, or bitableaux")
    p.add_argument("--k", type=int, help="enumerate partitions of k")
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--shape", type=_partition)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("weights", help="a- and b-weight of a bitableau")
    p.add_argument("--tableau")
    p.add_argument("--in", dest="infile")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("word", help="reading word of a tableau or bitableau")
    p.add_argument("--method", default="w", choices=["row", "w", "w_prime", "u", "u_prime"])
    p.add_argument("--tableau")
    p.add_argument("--in", dest="infile")
    p.add_argument("--shape", type=_partition, help="optional; checked against the rows")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("rsk", help="RSK of a biword")
    p.add_argument("--tops", required=True)
    p.add_argument("--bottoms", required=True)
    p.add_argument("--flavor", default="lexicographic", choices=["lexicographic", "burge"])

    p = sub.add_parser("brsk", help="Burge insertion of a column bitableau")
    p.add_argument("--tableau")
    p.add_argument("--in", dest="infile")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("jdt", help="jeu de taquin product of two tableaux")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("crystal", help="crystal graph exports")
    p.add_argument("--shape", type=_partition)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--conv", default="w", choices=["w", "w_prime"])
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument(
        "--candidate-21",
        choices=["south", "east"],
        help="emit the fixed-reading-order gl_3 candidate on shape (2,1)",
    )

    p = sub.add_parser("g", help="Kronecker coefficient, or a CSV table of them")
    p.add_argument("--lam", type=_partition)
    p.add_argument("--mu", type=_partition)
    p.add_argument("--nu", type=_partition)
    p.add_argument("--sweep-k", type=int, help="emit (lam, mu, nu, g) for all triples of k")

    p = sub.add_parser("d", help="monomial-expansion coefficient")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--mode", default="both", choices=["both", "oracle", "crystal"])
    p.add_argument("--conv", default="w", choices=["w", "w_prime"])

    p = sub.add_parser("verify-thm2", help="crystal counts against the character oracle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--conv", default="w", choices=["w", "w_prime"])
    p.add_argument("--quiet", action="store_true", help="only print the summary line")

    p = sub.add_parser("kron-tableaux", help="Kronecker tableau count vs. coefficient")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--format", default="csv", choices=["csv", "json"])

    p = sub.add_parser("skeleton", help="forced part of the candidate top structure")
    p.add_argument("--shape", type=_partition, required=True)
    p.add_argument("--conv", default="w", choices=["w", "w_prime"])
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    p.add_argument("--cap", type=int, default=10**6)

    p = sub.add_parser("completions", help="all valid commuting totalizations")
    p.add_argument("--shape", type=_partition, required=True)
    p.add_argument("--conv", default="w", choices=["w", "w_prime"])
    p.add_argument("--cap", type=int, default=10**6)

    p = sub.add_parser("census", help="highest-weight census of a completion")
    p.add_argument("--shape", type=_partition, required=True)
    p.add_argument("--conv", default="w", choices=["w", "w_prime"])
    p.add_argument("--completion", type=int, default=0)
    p.add_argument("--cap", type=int, default=10**6)

    return parser


def _cmd_enumerate(args) -> int:
    if args.k is not None:
        parts = enumerate_partitions(args.k, args.max_length)
        print(_dump([list(p) for p in parts]))
        return 0
    if args.shape is None or args.n is None:
        print("error: need --k, or --shape with --n (and --m for bitableaux)", file=sys.stderr)
        return USAGE_ERROR
    if args.m is None:
        from .tableaux import enumerate_ssyt

        items = [t.to_json() for t in enumerate_ssyt(args.shape, args.n)]
    else:
        items = [t.to_json() for t in enumerate_bitableaux(args.shape, args.n, args.m)]
    if args.count_only:
        print(len(items))
    else:
        print(_dump(items))
    return 0


def _cmd_word(args) -> int:
    if args.method == "row":
        data = _load_json(args.tableau, args.infile)
        if data is None:
            print("error: need --tableau or --in", file=sys.stderr)
            return USAGE_ERROR
        t = SSYT.from_json(data) if isinstance(data, dict) else SSYT.from_rows(data)
        if args.shape and t.shape != args.shape:
            print("error: --shape does not match the rows", file=sys.stderr)
            return USAGE_ERROR
        _print_word(reading_word(t))
        return 0
    t = _bitableau_arg(args)
    if args.shape and t.shape != args.shape:
        print("error: --shape does not match the rows", file=sys.stderr)
        return USAGE_ERROR
    _print_word(bitableau_reading_word(t, args.method))
    return 0


def _cmd_d(args) -> int:
    oracle = crystal = None
    if args.mode in ("both", "oracle"):
        oracle = monomial_coefficient_d(args.lam, args.mu, args.nu)
    if args.mode in ("both", "crystal"):
        crystal = count_d(args.lam, args.mu, args.nu, args.conv)
    if args.mode == "oracle":
        print(oracle)
    elif args.mode == "crystal":
        print(crystal)
    else:
        print(crystal)
        if crystal != oracle:
            print(
                f"MISMATCH lam={_fmt_partition(args.lam)} crystal={crystal} oracle={oracle}",
                file=sys.stderr,
            )
            return MISMATCH
    return 0


def _cmd_verify_thm2(args) -> int:
    rows = monomial_expansion_sweep(args.k, args.conv)
    mismatches = [r for r in rows if r[3] != r[4]]
    if not args.quiet:
        _csv_out(
            ["lam", "mu", "nu", "crystal", "oracle"],
            [
                [_fmt_partition(lam), _fmt_partition(mu), _fmt_partition(nu), c, o]
                for lam, mu, nu, c, o in rows
            ],
        )
    if mismatches:
        lam, mu, nu, c, o = mismatches[0]
        print(
            f"MISMATCH k={args.k} lam={_fmt_partition(lam)} mu={_fmt_partition(mu)} "
            f"nu={_fmt_partition(nu)} crystal={c} oracle={o}"
        )
        return MISMATCH
    print(f"OK k={args.k} triples={len(rows)}")
    return 0


def _skeleton_dot(result) -> str:
    g = result.graph
    free = set(result.free_vertices)
    out = io.StringIO()
    out.write("digraph skeleton {\n")
    for v in g.vertices:
        label = _dump(v.payload["rows"])
        style = ' style=dashed' if v.id in free else ""
        out.write(
            f'  v{v.id} [label="{label}" weight_a="{",".join(map(str, v.weight_a))}"'
            f' weight_b="{",".join(map(str, v.weight_b))}"{style}];\n'
        )
    for src, dst in sorted(result.forced.images.items()):
        out.write(f"  v{src} -> v{dst} [label=\"1\"];\n")
    out.write("}\n")
    return out.getvalue()


def _cmd_skeleton(args) -> int:
    result = skeleton(args.shape, conv=args.conv, cap=args.cap)
    if args.format == "dot":
        sys.stdout.write(_skeleton_dot(result))
        return 0
    payload = {
        "forced": sorted([s, d] for s, d in result.forced.images.items()),
        "free_vertices": list(result.free_vertices),
        "free_slots": {
            f"a={_fmt_partition(a)};b={_fmt_partition(b)}": list(ids)
            for (a, b), ids in result.free_slots.items()
        },
        "completions": result.completion_count,
        "forced_vertex_count": result.forced_vertex_count,
    }
    print(_dump(payload))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "weights":
            a, b = weights(_bitableau_arg(args))
            print(_dump({"a": list(a), "b": list(b)}))
            return 0
        if args.command == "word":
            return _cmd_word(args)
        if args.command == "rsk":
            tops = tuple(int(x) for x in args.tops.split(","))
            bottoms = tuple(int(x) for x in args.bottoms.split(","))
            print(_dump(rsk(Biword(tops, bottoms, args.flavor)).to_json()))
            return 0
        if args.command == "brsk":
            print(_dump(brsk(_bitableau_arg(args)).to_json()))
            return 0
        if args.command == "jdt":
            left_data = _load_json(args.left, None)
            right_data = _load_json(args.right, None)
            left = SSYT.from_json(left_data) if isinstance(left_data, dict) else SSYT.from_rows(left_data)
            right = SSYT.from_json(right_data) if isinstance(right_data, dict) else SSYT.from_rows(right_data)
            print(_dump(jdt_product(left, right).to_json()))
            return 0
        if args.command == "crystal":
            if args.candidate_21:
                g = shape21_candidate_crystal(args.candidate_21)
            else:
                if args.shape is None or args.n is None or args.m is None:
                    print("error: crystal needs --shape, --n and --m", file=sys.stderr)
                    return USAGE_ERROR
                g = full_crystal(args.shape, args.n, args.m, args.conv, args.cap)
            sys.stdout.write(export_crystal(g, args.format))
            if args.format == "json":
                sys.stdout.write("\n")
            return 0
        if args.command == "g":
            if args.sweep_k is not None:
                import itertools

                parts = enumerate_partitions(args.sweep_k)
                _csv_out(
                    ["lam", "mu", "nu", "g"],
                    [
                        [
                            _fmt_partition(lam),
                            _fmt_partition(mu),
                            _fmt_partition(nu),
                            kronecker_coefficient(lam, mu, nu),
                        ]
                        for lam, mu, nu in itertools.product(parts, repeat=3)
                    ],
                )
                return 0
            if args.lam is None or args.mu is None or args.nu is None:
                print("error: need --lam, --mu and --nu (or --sweep-k)", file=sys.stderr)
                return USAGE_ERROR
            print(kronecker_coefficient(args.lam, args.mu, args.nu))
            return 0
        if args.command == "d":
            return _cmd_d(args)
        if args.command == "verify-thm2":
            return _cmd_verify_thm2(args)
        if args.command == "kron-tableaux":
            lam, p, nu, count, g, regime = kronecker_count_row(args.lam, args.p, args.nu)
            if args.format == "json":
                print(
                    _dump(
                        {
                            "lam": list(lam),
                            "p": p,
                            "nu": list(nu),
                            "count": count,
                            "g": g,
                            "regime": regime,
                        }
                    )
                )
            else:
                _csv_out(
                    ["lam", "p", "nu", "count", "g", "regime_flag"],
                    [[_fmt_partition(lam), p, _fmt_partition(nu), count, g, int(regime)]],
                )
            return 0
        if args.command == "skeleton":
            return _cmd_skeleton(args)
        if args.command == "completions":
            from .completion import enumerate_completions

            _, ops = enumerate_completions(args.shape, conv=args.conv, cap=args.cap)
            print(_dump([sorted([s, d] for s, d in op.images.items()) for op in ops]))
            return 0
        if args.command == "census":
            from .completion import enumerate_completions

            g, ops = enumerate_completions(args.shape, conv=args.conv, cap=args.cap)
            if not 0 <= args.completion < len(ops):
                print(f"error: completion index outside [0, {len(ops) - 1}]", file=sys.stderr)
                return USAGE_ERROR
            census = highest_weight_census(ops[args.completion], g)
            _csv_out(
                ["mu", "nu", "count"],
                [
                    [_fmt_partition(mu), _fmt_partition(nu), count]
                    for (mu, nu), count in sorted(census.items())
                ],
            )
            return 0
    except (ValueError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
