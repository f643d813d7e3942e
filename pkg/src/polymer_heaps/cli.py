"""Command line front end: series tables, enumeration, verification, asymptotics.

Output is deterministic (no timestamps, fixed ordering), JSON by default
or CSV with --format csv.  Counts and coefficients are serialized as
decimal strings because they outgrow 64-bit integers quickly.  Exit
codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import asymptotics as asym
from . import bijections, gf_engine, lattice_animals

MAX_AREA_GUARD = 14
MAX_ORDER_GUARD = 5000

ANIMAL_CLASSES = ("all", "directed", "half", "multi")
HEAP_CLASSES = ("heaps", "connected-heaps")


class UsageError(Exception):
    pass


def _threads_from_env() -> int:
    """POLYMER_HEAPS_THREADS caps the worker count.  The implementation is
    single-threaded and deterministic, so any positive value is accepted
    and only validated."""
    raw = os.environ.get("POLYMER_HEAPS_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"POLYMER_HEAPS_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise UsageError(f"POLYMER_HEAPS_THREADS must be a positive integer, got {raw!r}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymer-heaps",
        description="heaps of polymers, lattice animals, and their generating functions",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", default=None, help="output path (default: stdout)")
    common.add_argument("--force", action="store_true", help="lift the resource guards")

    p = sub.add_parser("series", parents=[common], help="coefficient tables")
    p.add_argument("--which", required=True, choices=("S", "R", "Q", "D", "M", "B", "LW", "Dj"))
    p.add_argument("--order", type=int, default=gf_engine.DEFAULT_ORDER)
    p.add_argument("--j", type=int, default=None, help="half-width slice for Dj")

    p = sub.add_parser("enumerate", parents=[common], help="counts per area or length")
    p.add_argument("--class", dest="klass", required=True, choices=ANIMAL_CLASSES + HEAP_CLASSES)
    p.add_argument("--max-area", type=int, default=6)
    p.add_argument("--emit-objects", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="pass/fail verification suites")
    p.add_argument(
        "--suite",
        required=True,
        choices=("bijections", "nordic", "lemma-hd", "ak", "oracle"),
    )
    p.add_argument("--max-area", type=int, default=6)
    p.add_argument("--order", type=int, default=14)

    p = sub.add_parser("asymptotics", parents=[common], help="constants and convergence")
    p.add_argument("--which", required=True, choices=("constants", "directed", "multi"))
    p.add_argument("--n", type=int, default=None, help="series order / ratio point")
    return parser


def _check_guards(args: argparse.Namespace) -> None:
    max_area = getattr(args, "max_area", None)
    if max_area is not None and max_area > MAX_AREA_GUARD and not args.force:
        raise UsageError(
            f"--max-area {max_area} exceeds the guard {MAX_AREA_GUARD}; pass --force"
        )
    for attr in ("order", "n"):
        value = getattr(args, attr, None)
        if value is not None and value > MAX_ORDER_GUARD and not args.force:
            raise UsageError(f"--{attr} {value} exceeds the guard {MAX_ORDER_GUARD}; pass --force")


# ---------------------------------------------------------------------------
# subcommand payloads


def _run_series(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    if args.which == "Dj" and args.j is None:
        raise UsageError("series Dj needs --j")
    series = gf_engine.series_by_name(args.which, args.order, args.j)
    payload = series.to_json_dict(args.which if args.which != "Dj" else f"D_{args.j}")
    return payload, False


def _animal_objects(n: int, klass: str, force: bool) -> list:
    return [a.to_pairs() for a in lattice_animals.enumerate_animals(n, klass, force=force)]


def _heap_objects(n: int, kind: str, force: bool) -> list:
    return [h.to_triples() for h in bijections.enumerate_heaps(n, kind, force=force)]


def _run_enumerate(args: argparse.Namespace) -> tuple[dict, bool]:
    n = args.max_area
    if n < 1:
        raise UsageError("--max-area must be at least 1")
    counts: dict[str, list[int]] = {}
    if args.klass in ANIMAL_CLASSES:
        counts[args.klass] = lattice_animals.count_animals(n, args.klass, force=args.force)
        if args.klass == "multi":
            # byproducts that make the inclusion chain directed <= multi <= all visible
            counts["all"] = lattice_animals.count_animals(n, "all", force=args.force)
            counts["directed"] = lattice_animals.count_animals(n, "directed", force=args.force)
    else:
        kind = "all" if args.klass == "heaps" else "connected"
        per_n = [
            len(bijections.enumerate_heaps(m, kind, force=args.force))
            for m in range(1, n + 1)
        ]
        counts[args.klass.replace("-", "_")] = [0] + per_n
    rows = []
    names = sorted(counts)
    for m in range(1, n + 1):
        row: dict = {"area": m}
        for name in names:
            row[name] = str(counts[name][m])
        rows.append(row)
    payload: dict = {"max_area": n, "classes": names, "rows": rows}
    if args.emit_objects:
        objects = {}
        for m in range(1, n + 1):
            if args.klass in ANIMAL_CLASSES:
                objects[str(m)] = _animal_objects(m, args.klass, args.force)
            else:
                kind = "all" if args.klass == "heaps" else "connected"
                objects[str(m)] = _heap_objects(m, kind, args.force)
        payload["objects"] = objects
    return payload, False


def _row(check: str, ok: bool, detail: str = "") -> dict:
    return {"check": check, "pass": bool(ok), "detail": detail}


def _suite_bijections(max_area: int, force: bool) -> list[dict]:
    from .heap_core import is_connected, is_pyramid

    rows = []
    for n in range(1, max_area + 1):
        pyramids = bijections.enumerate_heaps(n, "pyramid", force=force)
        ok = all(bijections.project(bijections.animal_from_pyramid(p)) == p for p in pyramids)
        rows.append(_row(f"project(animal_from_pyramid) = id, n={n}", ok))
        directed = lattice_animals.enumerate_animals(n, "directed", force=force)
        ok = all(bijections.animal_from_pyramid(bijections.project(a)) == a for a in directed)
        rows.append(_row(f"animal_from_pyramid(project) = id, n={n}", ok))
        connected = bijections.enumerate_heaps(n, "connected", force=force)
        ok = all(
            bijections.project(bijections.animal_from_connected_heap(c)) == c
            for c in connected
        )
        rows.append(_row(f"project(animal_from_connected_heap) = id, n={n}", ok))
        multi = lattice_animals.enumerate_animals(n, "multi", force=force)
        ok = all(
            bijections.animal_from_connected_heap(bijections.project(a)) == a for a in multi
        )
        rows.append(_row(f"animal_from_connected_heap(project) = id, n={n}", ok))
        pick = bijections.random_beta_picker(seed=n)
        ok = all(
            bijections.animal_from_connected_heap(c, pick)
            == bijections.animal_from_connected_heap(c)
            for c in connected
        )
        rows.append(_row(f"reconstruction independent of peeled polymer, n={n}", ok))
        ok = all(is_connected(bijections.project(a)) for a in lattice_animals.enumerate_animals(n, "all", force=force))
        rows.append(_row(f"projections of animals are connected, n={n}", ok))
        ok = all(is_pyramid(bijections.project(a)) for a in directed)
        rows.append(_row(f"projections of directed animals are pyramids, n={n}", ok))
    return rows


def _suite_nordic(max_area: int, force: bool) -> list[dict]:
    from .heap_core import is_pyramid

    rows = []
    for n in range(1, max_area + 1):
        connected = bijections.enumerate_heaps(n, "connected", force=force)
        targets = [c for c in connected if not is_pyramid(c)]
        ok = True
        for c in targets:
            quad = bijections.nordic_decompose(c)  # construction validates invariants
            if bijections.nordic_compose(quad) != c:
                ok = False
                break
        rows.append(_row(f"nordic round-trip on {len(targets)} heaps, n={n}", ok))
    return rows


def _suite_lemma_hd(order: int, kmax: int = 4) -> list[dict]:
    rows = []
    for entry in gf_engine.check_lemma_HD(order, kmax):
        detail = "" if entry["pass"] else f"first failure at n={entry['first_failure']}"
        rows.append(_row(f"H_k * D_>k identity, k={entry['k']}, order {order}", entry["pass"], detail))
    return rows


def _suite_ak(max_area: int, order: int, force: bool, kmax: int = 4) -> list[dict]:
    rows = []
    s = gf_engine.series_S(order)
    one = gf_engine.TruncatedSeries([1], order)
    for k in range(kmax + 1):
        expected = (s * (one + s) ** k).integralized()
        counted = bijections.count_anchored_heaps(k, order)
        ok = all(counted[n] == expected[n] for n in range(order + 1))
        rows.append(_row(f"anchored-heap census = S(1+S)^{k}, order {order}", ok))
        limit = min(max_area, 8)
        ok = all(
            len(bijections.enumerate_anchored_heaps(k, n, force=force)) == expected[n]
            for n in range(1, limit + 1)
        )
        rows.append(_row(f"anchored-heap enumeration = S(1+S)^{k}, n<={limit}", ok))
    return rows


def _suite_oracle(max_area: int, order: int, force: bool) -> list[dict]:
    rows = []
    order = max(order, max_area)
    schroeder = [1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859]
    s = gf_engine.series_S(max(order, 10))
    rows.append(
        _row("S prefix = little Schroeder numbers", [s[n] for n in range(1, 11)] == schroeder)
    )
    d = gf_engine.series_D1(order)
    counts = lattice_animals.count_animals(max_area, "directed", force=force)
    rows.append(
        _row(
            f"directed counts = D coefficients, n<={max_area}",
            all(counts[n] == d[n] for n in range(1, max_area + 1)),
        )
    )
    counts = lattice_animals.count_animals(max_area, "half", force=force)
    rows.append(
        _row(
            f"half counts = S coefficients, n<={max_area}",
            all(counts[n] == s[n] for n in range(1, max_area + 1)),
        )
    )
    lw_limit = min(max_area, 8)
    hist = lattice_animals.directed_lw_counts(lw_limit, force=force)
    ok = True
    for j in range(lw_limit + 1):
        dj = gf_engine.series_Dj(lw_limit, j)
        if any(hist[n][j] != dj[n] for n in range(1, lw_limit + 1)):
            ok = False
    rows.append(_row(f"lw distribution = D_j coefficients, n<={lw_limit}", ok))
    multi_limit = min(max_area, 8)
    m = gf_engine.series_M(max(order, multi_limit))
    counts = lattice_animals.count_animals(multi_limit, "multi", force=force)
    heap_counts = [0] + [
        len(bijections.enumerate_heaps(n, "connected", force=force))
        for n in range(1, multi_limit + 1)
    ]
    rows.append(
        _row(
            f"multi counts = M coefficients, n<={multi_limit}",
            all(counts[n] == m[n] for n in range(1, multi_limit + 1)),
        )
    )
    rows.append(
        _row(
            f"connected-heap counts = M coefficients, n<={multi_limit}",
            all(heap_counts[n] == m[n] for n in range(1, multi_limit + 1)),
        )
    )
    return rows


def _run_verify(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.suite == "bijections":
        rows = _suite_bijections(args.max_area, args.force)
    elif args.suite == "nordic":
        rows = _suite_nordic(args.max_area, args.force)
    elif args.suite == "lemma-hd":
        rows = _suite_lemma_hd(args.order)
    elif args.suite == "ak":
        rows = _suite_ak(args.max_area, args.order, args.force)
    else:
        rows = _suite_oracle(args.max_area, args.order, args.force)
    ok = all(r["pass"] for r in rows)
    return {"suite": args.suite, "pass": ok, "rows": rows}, not ok


def _run_asymptotics(args: argparse.Namespace) -> tuple[dict, bool]:
    if args.which == "constants":
        constants = asym.find_constants()
        rows = asym.constants_rows(constants)
        ok = all(r["pass"] for r in rows)
        return {"which": "constants", "pass": ok, "rows": rows}, not ok
    if args.which == "directed":
        report = asym.check_directed_asymptotics(args.n or 1000)
        return {"which": "directed", **report}, not report["pass"]
    report = asym.check_multi_growth(args.n or 300)
    return {"which": "multi", **report}, not report["pass"]


# ---------------------------------------------------------------------------
# rendering


def _csv_text(payload: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "coefficients" in payload:
        writer.writerow(["n", "coefficient"])
        for n, c in enumerate(payload["coefficients"]):
            writer.writerow([n, c])
    elif "rows" in payload and payload.get("classes"):
        names = payload["classes"]
        writer.writerow(["area"] + names)
        for row in payload["rows"]:
            writer.writerow([row["area"]] + [row[name] for name in names])
    elif "rows" in payload:
        keys = sorted({key for row in payload["rows"] for key in row})
        writer.writerow(keys)
        for row in payload["rows"]:
            writer.writerow([row.get(key, "") for key in keys])
    else:
        writer.writerow(sorted(payload))
        writer.writerow([payload[key] for key in sorted(payload)])
    return buf.getvalue()


def _emit(payload: dict, args: argparse.Namespace) -> None:
    if args.format == "csv":
        text = _csv_text(payload)
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        _threads_from_env()
        _check_guards(args)
        if args.subcommand == "series":
            payload, failed = _run_series(args)
        elif args.subcommand == "enumerate":
            payload, failed = _run_enumerate(args)
        elif args.subcommand == "verify":
            payload, failed = _run_verify(args)
        else:
            payload, failed = _run_asymptotics(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
