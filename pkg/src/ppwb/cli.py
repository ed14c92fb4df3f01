"""Batch command-line front end.

Exit codes: 0 success, 1 verification or conjecture failure, 2 usage
error, 3 internal cross-check failure.  All counts print as decimal
strings.  Brute-force commands refuse instances whose branched cell
count exceeds PPWB_MAX_CELLS (default 40).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dimer, gogmagog, lgv, qseries, schur, symmetry, trace
from .core import (
    BoxDims,
    enumerate_box,
    enumerate_by_size,
    parse_int_rows,
    parse_plane_partition,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class InternalError(Exception):
    pass


def _max_cells() -> int:
    raw = os.environ.get("PPWB_MAX_CELLS", "40")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"PPWB_MAX_CELLS must be an integer, got {raw!r}") from None


def _guard_cells(n: int, what: str) -> None:
    limit = _max_cells()
    if n > limit:
        raise UsageError(
            f"{what} needs {n} branched cells, over the PPWB_MAX_CELLS limit {limit}"
        )


def _parse_box(text: str) -> BoxDims:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--box wants a,b,c, got {text!r}")
    try:
        box = BoxDims(*(int(p) for p in parts))
    except ValueError:
        raise UsageError(f"--box wants integers, got {text!r}") from None
    try:
        return box.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _class_dims(args) -> tuple[int, ...]:
    cls = args.cls
    if cls in (1, 5):
        if args.box is None:
            raise UsageError(f"class {cls} needs --box a,b,c")
        return tuple(_parse_box(args.box))
    if cls == 7:
        if args.box is None:
            raise UsageError("class 7 needs --box s,s,h")
        box = _parse_box(args.box)
        if box.a != box.b:
            raise UsageError("class 7 needs a square base: --box s,s,h")
        return (box.a, box.c)
    if cls in (2, 6):
        if args.a is None or args.c is None:
            raise UsageError(f"class {cls} needs --a and --c")
        return (args.a, args.c)
    if cls in (3, 4, 8, 9, 10):
        if args.a is None:
            raise UsageError(f"class {cls} needs --a")
        return (args.a,)
    raise UsageError(f"--class must be 1..10, got {cls}")


def _enumeration_box(cls: int, dims: tuple[int, ...]) -> BoxDims:
    """The box in which class members are enumerated for given formula dims."""
    if cls in (1, 5):
        return BoxDims(*dims)
    if cls == 2:
        return BoxDims(dims[0], dims[0], dims[1])
    if cls in (3, 4):
        return BoxDims(dims[0], dims[0], dims[0])
    if cls == 6:
        return BoxDims(dims[0], dims[0], 2 * dims[1])
    if cls == 7:
        return BoxDims(dims[0], dims[0], dims[1])
    return BoxDims(2 * dims[0], 2 * dims[0], 2 * dims[0])


def cmd_count(args) -> int:
    cls = args.cls
    method = args.method
    if method in ("lgv", "kasteleyn") and cls != 1:
        raise UsageError(f"method {method} applies to class 1 only")
    dims = _class_dims(args)
    if method == "formula":
        value = qseries.class_formula(
            cls, dims, weight="half" if cls == 4 else "size"
        )
        count = value.at_one() if isinstance(value, qseries.QPolynomial) else value
    elif method == "lgv":
        count = lgv.box_det_count(BoxDims(*dims))
    elif method == "kasteleyn":
        count = dimer.kasteleyn_count(dimer.build_hex_graph(BoxDims(*dims)))
    else:  # brute
        box = _enumeration_box(cls, dims)
        _guard_cells(symmetry.branch_cell_estimate(cls, box), "class enumeration")
        count = sum(1 for _ in symmetry.enumerate_class(cls, box))
    print(count)
    return EXIT_OK


def cmd_gf(args) -> int:
    cls = args.cls
    weight = args.weight
    if cls not in (1, 2, 3, 4):
        raise UsageError("generating functions are available for classes 1-4")
    if cls in (1, 3) and weight != "size":
        raise UsageError(f"class {cls} is weighted by size")
    if cls == 4 and weight != "half":
        raise UsageError("class 4 uses --weight half")
    dims = _class_dims(args)
    poly = qseries.class_formula(cls, dims, weight=weight)
    if args.at_q is not None:
        print(poly(args.at_q))
    else:
        print(poly)
    return EXIT_OK


def _check(checks, cid: str, expected, actual) -> None:
    checks.append(
        {
            "id": cid,
            "status": "pass" if expected == actual else "fail",
            "expected": str(expected),
            "actual": str(actual),
        }
    )


def _suite_box(checks) -> None:
    boxes = [
        (a, b, c) for a in (1, 2, 3) for b in (1, 2, 3) for c in (1, 2, 3)
    ] + [(2, 3, 4)]
    for dims in boxes:
        box = BoxDims(*dims)
        brute = sum(1 for _ in enumerate_box(box))
        _check(checks, f"box-count-{dims}", brute, qseries.box_count(box))
        _check(checks, f"box-lgv-{dims}", brute, lgv.box_det_count(box))
        _check(
            checks,
            f"box-kasteleyn-{dims}",
            brute,
            dimer.kasteleyn_count(dimer.build_hex_graph(box)),
        )
    for dims in [(1, 1, 1), (2, 2, 2), (3, 3, 2), (3, 3, 3)]:
        box = BoxDims(*dims)
        brute = symmetry.class_gf(1, box, "size")
        _check(checks, f"box-gf-{dims}", brute, qseries.box_gf(box))
    hist = {}
    for pp in enumerate_by_size(6):
        hist[pp.size()] = hist.get(pp.size(), 0) + 1
    series = qseries.all_pp_series(6)
    _check(
        checks,
        "all-pp-series-6",
        [1] + [hist.get(d, 0) for d in range(1, 7)],
        list(series.coeffs),
    )


def _suite_classes(checks) -> None:
    for a in (1, 2, 3):
        for c in (1, 2):
            box = BoxDims(a, a, c)
            _check(
                checks,
                f"class2-size-{a}-{c}",
                symmetry.class_gf(2, box, "size"),
                qseries.symmetric_gf(a, c),
            )
            _check(
                checks,
                f"class2-half-{a}-{c}",
                symmetry.class_gf(2, box, "half"),
                qseries.symmetric_gf_half(a, c),
            )
    for a in (1, 2, 3):
        box = BoxDims(a, a, a)
        _check(
            checks, f"class3-{a}", symmetry.class_gf(3, box, "size"), qseries.cyclic_gf(a)
        )
        _check(
            checks,
            f"class4-{a}",
            symmetry.class_gf(4, box, "orbit"),
            qseries.totally_symmetric_gf(a),
        )
    for dims in [(2, 2, 2), (2, 4, 2), (3, 2, 2), (3, 3, 2), (4, 4, 4)]:
        box = BoxDims(*dims)
        _check(
            checks,
            f"class5-{dims}",
            sum(1 for _ in symmetry.enumerate_class(5, box)),
            qseries.self_complementary_count(*dims),
        )
    for a in (2, 3):
        for c in (1, 2):
            box = BoxDims(a, a, 2 * c)
            _check(
                checks,
                f"class6-{a}-{c}",
                sum(1 for _ in symmetry.enumerate_class(6, box)),
                qseries.transpose_complementary_count(a, c),
            )
    for side, height in [(2, 2), (3, 2), (4, 4), (4, 2)]:
        box = BoxDims(side, side, height)
        _check(
            checks,
            f"class7-{side}-{height}",
            sum(1 for _ in symmetry.enumerate_class(7, box)),
            qseries.symmetric_self_complementary_count(side, height),
        )
    for a in (1, 2):
        box = BoxDims(2 * a, 2 * a, 2 * a)
        _check(
            checks,
            f"class8-{a}",
            sum(1 for _ in symmetry.enumerate_class(8, box)),
            qseries.cyclic_transpose_complementary_count(a),
        )
        _check(
            checks,
            f"class9-{a}",
            sum(1 for _ in symmetry.enumerate_class(9, box)),
            qseries.cyclic_self_complementary_count(a),
        )
        _check(
            checks,
            f"class10-{a}",
            sum(1 for _ in symmetry.enumerate_class(10, box)),
            qseries.total_self_complementary_count(a),
        )
    for a in (1, 2, 3):
        _check(checks, f"c9-c10-square-{a}", True, qseries.verify_c9c10(a))


def _suite_trace(checks) -> None:
    _check(checks, "trace-product-6", trace.trace_gf_bruteforce(6), trace.trace_gf_product(6))
    ok = True
    seen = set()
    for pp in enumerate_by_size(6):
        m = trace.stanley_map(pp)
        if sum(m.values()) != pp.trace():
            ok = False
        if sum((i + j - 1) * v for (i, j), v in m.items()) != pp.size():
            ok = False
        key = tuple(sorted(m.items()))
        if key in seen:
            ok = False
        seen.add(key)
    _check(checks, "stanley-stats-6", True, ok)
    for shape in [(1,), (2,), (2, 1)]:
        _check(checks, f"gansner-{shape}", True, trace.gansner_check(shape, 4))


def _suite_schur(checks) -> None:
    for shape in [(1,), (2, 1), (2, 2)]:
        for n in (2, 3):
            _check(
                checks,
                f"bialternant-{shape}-{n}",
                schur.mv_substitute_q_powers(schur.schur_sum(shape, n)),
                schur.schur_principal_bialternant(shape, n),
            )
    for dims in [(1, 1, 1), (2, 2, 2), (2, 1, 2)]:
        _check(checks, f"mmschur-{dims}", True, schur.verify_mmschur(BoxDims(*dims)))
    for shape, n in [((2, 1), 3), ((2, 2), 3), ((3, 1), 4)]:
        _check(
            checks,
            f"ssyt-count-{shape}-{n}",
            sum(1 for _ in schur.enumerate_ssyt(shape, n)),
            schur.ssyt_count(shape, n),
        )
    for a1, b1, m in [(1, 1, 2), (1, 2, 3), (2, 1, 3)]:
        _check(checks, f"schur-square-{a1}-{b1}-{m}", True, schur.verify_s2(a1, b1, m))
    for a1, b1, c1 in [(1, 1, 1), (1, 1, 2), (2, 1, 1)]:
        _check(checks, f"sc-sum-{a1}-{b1}-{c1}", True, schur.verify_sc_sum(a1, b1, c1))


def _suite_dimer(checks) -> None:
    for dims in [(1, 1, 1), (2, 2, 2), (2, 2, 3)]:
        box = BoxDims(*dims)
        g = dimer.build_hex_graph(box)
        n = qseries.box_count(box)
        _check(checks, f"dimer-kasteleyn-{dims}", n, dimer.kasteleyn_count(g))
        _check(checks, f"dimer-enum-{dims}", n, sum(1 for _ in dimer.enumerate_matchings(g)))
        _check(
            checks,
            f"dimer-faces-{dims}",
            True,
            all(len(f) == 6 for f in dimer.bounded_faces(g)),
        )
    box = BoxDims(2, 2, 2)
    ok = True
    for pp in enumerate_box(box):
        t = dimer.pp_to_tiling(pp, box)
        if dimer.tiling_to_pp(t) != pp:
            ok = False
        if dimer.matching_to_tiling(dimer.tiling_to_matching(t), box) != t:
            ok = False
    _check(checks, "dimer-roundtrip-222", True, ok)


def _suite_gogmagog(checks) -> None:
    for n in (1, 2, 3, 4):
        _check(
            checks,
            f"asm-count-{n}",
            qseries.total_self_complementary_count(n),
            sum(1 for _ in gogmagog.enumerate_asm(n)),
        )
    for m in (0, 1):
        for n in (1, 2, 3):
            for k in range(1, n + 1):
                r = gogmagog.conjecture_tables(m, n, k)
                _check(checks, f"conjecture-{m}-{n}-{k}", True, r.equal)
    ok = True
    for m in (1, 2):
        for n in (1, 2, 3, 4):
            table = {}
            for g in gogmagog.enumerate_gog(m, n, 1):
                u, v = gogmagog.gog_stats(g)
                table[(u, v)] = table.get((u, v), 0) + 1
            for s in range(n + 2):
                for t in range(n + 2):
                    if table.get((t, s), 0) != gogmagog.k1_count(m, n, s, t):
                        ok = False
    _check(checks, "k1-formula", True, ok)
    for n in (1, 2, 3):
        _check(checks, f"tsscpp-magog-{n}", True, gogmagog.tsscpp_magog_check(n))


SUITES = {
    "box": _suite_box,
    "classes": _suite_classes,
    "trace": _suite_trace,
    "schur": _suite_schur,
    "dimer": _suite_dimer,
    "gogmagog": _suite_gogmagog,
}


def cmd_verify(args) -> int:
    name = args.suite
    if name != "all" and name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or all")
    checks: list[dict] = []
    if name == "all":
        for fn in SUITES.values():
            fn(checks)
    else:
        SUITES[name](checks)
    checks.sort(key=lambda c: c["id"])
    ok = all(c["status"] == "pass" for c in checks)
    if args.json:
        print(json.dumps({"suite": name, "checks": checks, "pass": ok}, sort_keys=True))
    else:
        for c in checks:
            if c["status"] == "pass":
                print(f"PASS {c['id']}")
            else:
                print(f"FAIL {c['id']} expected={c['expected']} actual={c['actual']}")
        print(f"suite {name}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_bijection(args) -> int:
    text = _read_input(args.input)
    name = args.name
    if name in ("pp-paths", "pp-tiling", "pp-ssyt"):
        if args.box is None:
            raise UsageError(f"{name} needs --box a,b,c")
        box = _parse_box(args.box)
        try:
            pp = parse_plane_partition(text)
        except ValueError as exc:
            raise UsageError(f"bad plane partition input: {exc}") from None
        if not pp.fits(box):
            raise UsageError(f"plane partition does not fit in {box}")
        if name == "pp-paths":
            paths = lgv.pp_to_paths(pp, box)
            for p in paths:
                print(f"{p.start[0]} {p.start[1]} {p.steps or '-'}")
            back = lgv.paths_to_pp(paths, box)
        elif name == "pp-tiling":
            tiling = dimer.pp_to_tiling(pp, box)
            print(dimer.format_tiling(tiling))
            back = dimer.tiling_to_pp(tiling)
        else:
            tab = schur.pp_box_to_ssyt(pp, box)
            for row in tab:
                print(" ".join(str(x) for x in row))
            back = schur.ssyt_to_pp_box(tab, box)
        if args.roundtrip:
            if back != pp:
                print("roundtrip mismatch", file=sys.stderr)
                return EXIT_FAIL
            print("roundtrip ok")
        return EXIT_OK
    if name == "stanley":
        try:
            pp = parse_plane_partition(text)
        except ValueError as exc:
            raise UsageError(f"bad plane partition input: {exc}") from None
        matrix = trace.stanley_map(pp)
        for (i, j), v in sorted(matrix.items()):
            print(f"{i} {j} {v}")
        if args.roundtrip:
            c1, c2 = trace.knuth_unmap(matrix)
            if (c1, c2) != trace.frobenius_split(trace.row_conjugate(pp)):
                print("roundtrip mismatch", file=sys.stderr)
                return EXIT_FAIL
            print("roundtrip ok")
        return EXIT_OK
    if name == "asm-mt":
        try:
            rows = parse_int_rows(text)
        except ValueError as exc:
            raise UsageError(f"bad matrix input: {exc}") from None
        if not gogmagog.validate_asm(rows):
            raise UsageError("input is not an alternating sign matrix")
        triangle = gogmagog.asm_to_mt(rows)
        for row in triangle:
            print(" ".join(str(x) for x in row))
        if args.roundtrip:
            if gogmagog.mt_to_asm(triangle) != tuple(tuple(r) for r in rows):
                print("roundtrip mismatch", file=sys.stderr)
                return EXIT_FAIL
            print("roundtrip ok")
        return EXIT_OK
    raise UsageError(f"unknown bijection {name!r}")


def cmd_conjecture(args) -> int:
    try:
        cells = sum(args.n - i for i in range(args.k))
    except TypeError:
        raise UsageError("conjecture needs integer --m --n --k") from None
    if args.m < 0 or args.n < 1 or not 1 <= args.k <= args.n:
        raise UsageError(f"need m >= 0 and 1 <= k <= n, got m={args.m} n={args.n} k={args.k}")
    _guard_cells(cells, "trapezoid enumeration")
    report = gogmagog.conjecture_tables(args.m, args.n, args.k, args.convention)
    if args.json:
        print(report.to_json())
    else:
        for (s, t), v in sorted(report.magog.items()):
            print(f"magog {s} {t} {v}")
        for (s, t), v in sorted(report.gog.items()):
            print(f"gog {s} {t} {v}")
        print("EQUAL" if report.equal else "NOT-EQUAL")
    return EXIT_OK if report.equal else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppwb", description="exact counting workbench for boxed plane partitions"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count a symmetry class in a box")
    p.add_argument("--class", dest="cls", type=int, required=True)
    p.add_argument("--box", help="a,b,c")
    p.add_argument("--a", type=int)
    p.add_argument("--c", type=int)
    p.add_argument(
        "--method", choices=("formula", "brute", "lgv", "kasteleyn"), default="formula"
    )
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("gf", help="print a generating function")
    p.add_argument("--class", dest="cls", type=int, required=True)
    p.add_argument("--box", help="a,b,c")
    p.add_argument("--a", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--weight", choices=("size", "half"), default="size")
    p.add_argument("--at-q", dest="at_q", type=int)
    p.set_defaults(fn=cmd_gf)

    p = sub.add_parser("verify", help="run a cross-verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bijection", help="apply a structural bijection to a file")
    p.add_argument(
        "--name",
        required=True,
        choices=("pp-paths", "pp-tiling", "pp-ssyt", "stanley", "asm-mt"),
    )
    p.add_argument("--input", required=True, help="input file, or - for stdin")
    p.add_argument("--box", help="a,b,c where required")
    p.add_argument("--roundtrip", action="store_true")
    p.set_defaults(fn=cmd_bijection)

    p = sub.add_parser("conjecture", help="refined trapezoid tables and verdict")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--convention", choices=gogmagog.CONVENTIONS, default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (qseries.NonPolynomialQuotient, dimer.NotSignable, AssertionError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (qseries.InvalidDims, gogmagog.InvalidParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
