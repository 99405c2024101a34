"""Command-line surface: parameter reports, tables, verification sweeps and
persisted parameter scans.

Configuration precedence is flags, then environment (WPT_BUDGET and
WPT_THREADS only), then defaults.  Sweeps fan out over a thread pool but
results are aggregated in input order, so the number of threads never
changes the output bytes.

Exit codes: 0 success, 2 usage or input error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone

from . import code as codes
from . import formulas, hilbert, ideal, torus, wps
from .errors import BudgetExceeded, EmptyCode, UnsupportedWeight, WptError

DEFAULT_WEIGHT_SETS = "1,1,1;1,1,2;1,1,3;1,2,3"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise WptError(f"{name} must be an integer, got {raw!r}")


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    return _env_int("WPT_BUDGET", codes.DEFAULT_BUDGET)


def _threads() -> int:
    return max(1, _env_int("WPT_THREADS", os.cpu_count() or 1))


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        ws = tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weights {text!r}, expected e.g. 1,1,2")
    if len(ws) < 2:
        raise argparse.ArgumentTypeError("need at least two weights")
    return ws


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}")


def _parse_weight_sets(text: str) -> list[tuple[int, ...]]:
    out = []
    for part in text.split(";"):
        if part.strip():
            out.append(_parse_weights(part))
    return out


def _pool_map(fn, items, threads: int) -> list:
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# params
# ---------------------------------------------------------------------------

def _delta_by_formula(space, alpha):
    """(value, method, exact) for the distance, or (None, ...) when only an
    exhaustive search could settle it."""
    if space.n == 2 and space.weights[1] == 1:
        return formulas.distance_p11a(formulas.p11a_context(space, alpha)), "formula", True
    if space.n == 2:
        res = formulas.distance_bounds_plane(formulas.plane_context(space, alpha))
        return res.value, ("formula" if res.exact else "bound_only"), res.exact
    if hilbert.in_regularity(space, alpha):
        return 1, "formula", True
    return None, "unknown", False


def cmd_params(args) -> int:
    budget = _budget(args)
    space = wps.make_space(args.q, args.weights)
    if space.weights[0] != 1:
        raise UnsupportedWeight("leading weight must be 1 for the formula paths")
    alpha = args.alpha
    n_len = formulas.code_length(space)
    k = formulas.dimension_nested_sum(space, alpha)
    delta, delta_method, exact = _delta_by_formula(space, alpha)
    if delta is None or not exact:
        try:
            pts = torus.enumerate_degenerate_torus(space)
            gm = codes.generator_matrix(space, alpha, pts)
            delta = codes.min_distance_exhaustive(gm, budget=budget, threads=_threads())
            delta_method = "exhaustive"
            exact = True
        except BudgetExceeded:
            pass

    lines = [f"q={space.q} weights={','.join(map(str, space.weights))} alpha={alpha}"]
    delta_str = str(delta) if delta is not None else "?"
    lines.append(f"[N,K,delta] = [{n_len},{k},{delta_str}]")
    lines.append("N: formula")
    lines.append("K: formula")
    lines.append(f"delta: {delta_method}" + ("" if exact else " (upper bound, not exact)"))

    failures = 0
    if args.verify:
        pts = torus.enumerate_degenerate_torus(space)
        gm = codes.generator_matrix(space, alpha, pts)
        r = codes.rank(gm)
        ok = r == k
        failures += not ok
        lines.append(f"verify K: rank {r} {'PASS' if ok else 'FAIL'}")
        try:
            measured = codes.min_distance_exhaustive(gm, budget=budget, threads=_threads())
            if delta is None:
                lines.append(f"verify delta: exhaustive {measured} PASS")
            elif exact:
                ok = measured == delta
                failures += not ok
                lines.append(f"verify delta: exhaustive {measured} {'PASS' if ok else 'FAIL'}")
            else:
                ok = measured <= delta
                failures += not ok
                lines.append(
                    f"verify delta: exhaustive {measured} <= bound {delta} "
                    f"{'PASS' if ok else 'FAIL'}"
                )
        except BudgetExceeded as exc:
            lines.append(f"verify delta: SKIPPED (needs {exc.required} > budget {exc.budget})")
        except EmptyCode:
            lines.append("verify delta: SKIPPED (dimension 0)")
        lines.append(f"verify: {'FAIL' if failures else 'PASS'}")

    _emit("\n".join(lines) + "\n", args.out)
    return 3 if failures else 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _table_rows(q: int, a: int, alpha_max: int) -> list[dict]:
    space = wps.make_space(q, (1, 1, a))
    a_inv = hilbert.a_invariant(space)
    rows = []
    for alpha in range(alpha_max + 1):
        ctx = formulas.p11a_context(space, alpha)
        rows.append(
            {
                "alpha": alpha,
                "N": ctx.length,
                "K": formulas.dimension_p11a(ctx),
                "delta": formulas.distance_p11a(ctx),
                "trivial": alpha > a_inv,
            }
        )
    return rows


def _render_table(rows: list[dict], fmt: str, q: int, a: int) -> str:
    cols = ["alpha", "N", "K", "delta", "trivial"]
    if fmt == "md":
        out = ["| " + " | ".join(cols) + " |", "| " + " | ".join("---" for _ in cols) + " |"]
        for r in rows:
            out.append("| " + " | ".join(str(r[c]).lower() if c == "trivial" else str(r[c]) for c in cols) + " |")
        return "\n".join(out) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in rows:
            writer.writerow([str(r[c]).lower() if c == "trivial" else r[c] for c in cols])
        return buf.getvalue()
    obj = {"schema": 1, "command": "table", "q": q, "weights": [1, 1, a], "rows": rows}
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_table(args) -> int:
    rows = _table_rows(args.q, args.a, args.alpha_max)
    _emit(_render_table(rows, args.format, args.q, args.a), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _verify_space(q: int, weights: tuple[int, ...], alpha_offset: int, budget: int) -> dict:
    entry: dict = {"q": q, "weights": list(weights), "checks": {}}
    try:
        space = wps.make_space(q, weights)
    except WptError as exc:
        entry["status"] = "INVALID"
        entry["error"] = str(exc)
        return entry
    if space.weights[0] != 1:
        entry["status"] = "UNSUPPORTED"
        return entry

    checks = entry["checks"]
    a_inv = hilbert.a_invariant(space)
    alphas = list(range(a_inv + alpha_offset + 1))
    pts = torus.enumerate_degenerate_torus(space)
    n_len = len(pts)

    kvals: dict[int, int] = {}
    matrices: dict[int, codes.GeneratorMatrix] = {}
    dim_ok = True
    for alpha in alphas:
        k1 = formulas.dimension_nested_sum(space, alpha)
        k2 = hilbert.hilbert_function(space, alpha)
        gm = codes.generator_matrix(space, alpha, pts)
        matrices[alpha] = gm
        k3 = codes.rank(gm)
        kvals[alpha] = k1
        if not k1 == k2 == k3:
            dim_ok = False
    checks["dimension_three_way"] = "PASS" if dim_ok else "FAIL"

    gens = ideal.vanishing_ideal_generators(space)
    checks["vanishing_ideal"] = "PASS" if ideal.verify_vanishing(gens, pts) else "FAIL"
    basis = ideal.lattice_basis(space)
    cert = ideal.is_mixed(basis) and ideal.is_dominating(basis)
    checks["mixed_dominating"] = "PASS" if cert else "FAIL"

    # formula (or bound) distance against exhaustive search where affordable
    deltas: dict[int, int] = {}
    checked = failed = 0
    for alpha in alphas:
        formula_val, _, exact = _delta_by_formula(space, alpha)
        if formula_val is None:
            continue
        try:
            measured = codes.min_distance_exhaustive(matrices[alpha], budget=budget)
        except BudgetExceeded:
            if exact:
                deltas[alpha] = formula_val
            continue
        except EmptyCode:
            continue
        checked += 1
        deltas[alpha] = measured
        if exact and measured != formula_val:
            failed += 1
        if not exact and measured > formula_val:
            failed += 1
    if failed:
        checks["distance_formula_vs_exhaustive"] = "FAIL"
    else:
        checks["distance_formula_vs_exhaustive"] = "PASS" if checked else "SKIPPED"

    mono_ok = all(kvals[a] <= kvals[a + 1] for a in alphas[:-1])
    dalphas = sorted(deltas)
    mono_ok = mono_ok and all(
        deltas[a1] >= deltas[a2] for a1, a2 in zip(dalphas, dalphas[1:])
    )
    checks["monotonicity"] = "PASS" if mono_ok else "FAIL"

    singleton_ok = all(kvals[a] + deltas[a] <= n_len + 1 for a in deltas)
    checks["singleton"] = "PASS" if singleton_ok else "FAIL"

    reg_ok = all((kvals[a] == n_len) == (a > a_inv) for a in alphas)
    checks["regularity"] = "PASS" if reg_ok else "FAIL"

    entry["status"] = "FAIL" if any(v == "FAIL" for v in checks.values()) else "PASS"
    return entry


def cmd_verify(args) -> int:
    budget = _budget(args)
    jobs = [(q, ws) for q in args.q for ws in args.weights_sets]
    results = _pool_map(
        lambda job: _verify_space(job[0], job[1], args.alpha_offset, budget),
        jobs,
        _threads(),
    )
    status = "FAIL" if any(r["status"] == "FAIL" for r in results) else "PASS"
    report = {
        "schema": 1,
        "command": "verify",
        "alpha_offset": args.alpha_offset,
        "budget": budget,
        "results": results,
        "status": status,
    }
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return 3 if status == "FAIL" else 0


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

SCAN_CSV_COLUMNS = ["q", "weights", "alpha", "N", "K", "delta", "delta_method", "defect"]


@dataclass(frozen=True)
class ScanRecord:
    q: int
    weights: tuple[int, ...]
    alpha: int
    n: int
    k: int
    delta: int
    delta_method: str
    defect: int
    timestamp: str | None = None

    @property
    def key(self) -> tuple:
        return (self.q, self.weights, self.alpha)

    def to_csv_row(self) -> list:
        return [
            self.q,
            ",".join(map(str, self.weights)),
            self.alpha,
            self.n,
            self.k,
            self.delta,
            self.delta_method,
            self.defect,
        ]

    @classmethod
    def from_csv_row(cls, row: list[str]) -> "ScanRecord":
        return cls(
            q=int(row[0]),
            weights=tuple(int(t) for t in row[1].split(",")),
            alpha=int(row[2]),
            n=int(row[3]),
            k=int(row[4]),
            delta=int(row[5]),
            delta_method=row[6],
            defect=int(row[7]),
        )

    def to_json_line(self) -> str:
        obj = {
            "schema": 1,
            "q": self.q,
            "weights": list(self.weights),
            "alpha": self.alpha,
            "N": self.n,
            "K": self.k,
            "delta": self.delta,
            "delta_method": self.delta_method,
            "defect": self.defect,
            "timestamp": self.timestamp,
        }
        return json.dumps(obj, sort_keys=True)

    @classmethod
    def from_json_line(cls, line: str) -> "ScanRecord":
        obj = json.loads(line)
        return cls(
            q=int(obj["q"]),
            weights=tuple(obj["weights"]),
            alpha=int(obj["alpha"]),
            n=int(obj["N"]),
            k=int(obj["K"]),
            delta=int(obj["delta"]),
            delta_method=obj["delta_method"],
            defect=int(obj["defect"]),
            timestamp=obj.get("timestamp"),
        )


def _scan_pair(job) -> list[ScanRecord]:
    q, a, max_defect, stamp = job
    space = wps.make_space(q, (1, 1, a))
    n_len = formulas.code_length(space)
    a_inv = hilbert.a_invariant(space)
    out = []
    for alpha in range(a_inv + 2):
        ctx = formulas.p11a_context(space, alpha)
        k = formulas.dimension_p11a(ctx)
        delta = formulas.distance_p11a(ctx)
        defect = n_len + 1 - k - delta
        if defect <= max_defect:
            out.append(
                ScanRecord(q, (1, 1, a), alpha, n_len, k, delta, "formula", defect, stamp)
            )
    return out


def _load_scan_keys(path: str, is_csv: bool) -> set[tuple]:
    keys: set[tuple] = set()
    if not os.path.exists(path):
        return keys
    with open(path, "r", encoding="utf-8", newline="") as fh:
        if is_csv:
            reader = csv.reader(fh)
            header = next(reader, None)
            for row in reader:
                if row:
                    keys.add(ScanRecord.from_csv_row(row).key)
        else:
            for line in fh:
                if line.strip():
                    keys.add(ScanRecord.from_json_line(line).key)
    return keys


def cmd_scan(args) -> int:
    is_csv = args.out.endswith(".csv")
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    jobs = [(q, a, args.max_defect, stamp) for q in args.q for a in args.a]
    batches = _pool_map(_scan_pair, jobs, _threads())
    records = [rec for batch in batches for rec in batch]

    existing = _load_scan_keys(args.out, is_csv)
    fresh = [r for r in records if r.key not in existing]

    file_exists = os.path.exists(args.out)
    with open(args.out, "a", encoding="utf-8", newline="") as fh:
        if is_csv:
            writer = csv.writer(fh, lineterminator="\n")
            if not file_exists:
                writer.writerow(SCAN_CSV_COLUMNS)
            for rec in fresh:
                writer.writerow(rec.to_csv_row())
        else:
            for rec in fresh:
                fh.write(rec.to_json_line() + "\n")
    print(f"scan: wrote {len(fresh)} new records ({len(records) - len(fresh)} duplicates) to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# matrix
# ---------------------------------------------------------------------------

def cmd_matrix(args) -> int:
    space = wps.make_space(args.q, args.weights)
    pts = torus.enumerate_degenerate_torus(space)
    gm = codes.generator_matrix(space, args.alpha, pts)
    text = codes.matrix_to_json(gm) + "\n" if args.format == "json" else codes.matrix_to_text(gm)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wptcodes",
        description="Codes on weighted projective tori: parameters, tables, verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("params", help="report [N,K,delta] for one code")
    sp.add_argument("--q", type=int, required=True, help="prime field size")
    sp.add_argument("--weights", type=_parse_weights, required=True, help="w0,w1,...")
    sp.add_argument("--alpha", type=int, required=True, help="weighted degree")
    sp.add_argument("--budget", type=int, default=None, help="max weight evaluations")
    sp.add_argument("--verify", action="store_true", help="cross-check via matrix rank and exhaustive search")
    sp.add_argument("--out", default=None, help="write the report to a file")
    sp.set_defaults(func=cmd_params)

    st = sub.add_parser("table", help="parameter table for weights (1,1,a)")
    st.add_argument("--q", type=int, required=True)
    st.add_argument("--a", type=int, required=True, help="third weight")
    st.add_argument("--alpha-max", type=int, required=True)
    st.add_argument("--format", choices=["md", "csv", "json"], default="md")
    st.add_argument("--out", default=None)
    st.set_defaults(func=cmd_table)

    sv = sub.add_parser("verify", help="cross-verification sweep, JSON report")
    sv.add_argument("--q", type=_parse_int_list, default=[3, 5], help="comma list of primes")
    sv.add_argument(
        "--weights-sets",
        type=_parse_weight_sets,
        default=_parse_weight_sets(DEFAULT_WEIGHT_SETS),
        help="semicolon-separated weight tuples, e.g. '1,1,1;1,1,2'",
    )
    sv.add_argument("--alpha-offset", type=int, default=2, help="sweep alpha up to a-invariant + offset")
    sv.add_argument("--budget", type=int, default=None)
    sv.add_argument("--out", default=None)
    sv.set_defaults(func=cmd_verify)

    ss = sub.add_parser("scan", help="persist parameter records with small Singleton defect")
    ss.add_argument("--q", type=_parse_int_list, required=True)
    ss.add_argument("--a", type=_parse_int_list, required=True)
    ss.add_argument("--out", required=True, help=".csv for CSV, anything else for JSON lines")
    ss.add_argument("--max-defect", type=int, default=1)
    ss.set_defaults(func=cmd_scan)

    sm = sub.add_parser("matrix", help="dump a generator matrix")
    sm.add_argument("--q", type=int, required=True)
    sm.add_argument("--weights", type=_parse_weights, required=True)
    sm.add_argument("--alpha", type=int, required=True)
    sm.add_argument("--format", choices=["text", "json"], default="text")
    sm.add_argument("--out", default=None)
    sm.set_defaults(func=cmd_matrix)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
