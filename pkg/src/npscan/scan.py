"""Prime scans: per-prime Newton polygon records and oscillation verdicts.

A scan walks the primes p <= p_max that are good places for a monic f in
Q[x] (p-integral coefficients, gcd(d, p) = 1), computes NP_p(f), and flags
each record: does NP equal the Hodge polygon, how large is the vertical
gap, is some slope repeated, and -- when a Dickson factor (n, a) drives
the scan -- is (p, a, n) admissible.  Two theorem-backed invariants are
enforced per record, and the scan verdict says "oscillates" exactly when
both an NP = HP prime and a gap >= 1/(2d) prime were seen: the polygons
then cannot converge.

Records serialize to a fixed CSV schema and to JSON with [num, den] pairs;
an append-only JSON-lines cache keyed by a content hash skips recomputation.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import IO, Sequence

from . import ratpoly
from .dickson import DicksonSpec, find_dickson_factor, is_admissible
from .errors import BudgetExceeded, InvariantViolation
from .lfunction import np_at_prime
from .polygons import (
    ConvexPolygon,
    hodge_polygon,
    lies_above,
    polygon_from_quads,
    polygon_to_quads,
    polygon_to_str,
    vertical_gap,
)

CACHE_VERSION = "npscan-cache-1"

VERDICT_OSCILLATES = "oscillates (limit cannot exist)"
VERDICT_NO_WITNESS = "no oscillation witnessed up to bound"

CSV_COLUMNS = (
    "p",
    "c",
    "d",
    "vertices",
    "slopes",
    "gap",
    "np_eq_hp",
    "p_mod_d",
    "admissible",
    "slope_mult_ge2",
    "v0",
    "ms",
)


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, b in enumerate(sieve) if b]


@dataclass(frozen=True)
class ScanOptions:
    """Dial settings for a prime scan."""

    p_max: int = 100
    char: int = 1
    budget: int | None = None
    jobs: int = 1
    hint: DicksonSpec | None = None
    auto_hint: bool = True
    cache_path: str | None = None
    timing: bool = True


@dataclass(frozen=True)
class ScanRecord:
    """One prime's worth of scan output; None fields mean "not computed"."""

    p: int
    c: int
    d: int
    polygon: ConvexPolygon | None
    gap: Fraction | None
    np_eq_hp: bool | None
    p_mod_d: int
    admissible: bool | None
    slope_mult_ge2: bool | None
    v0: Fraction | None
    ms: int | None
    error: str | None = None


@dataclass(frozen=True)
class ScanSummary:
    """Counts over all records plus the oscillation verdict."""

    f: str
    d: int
    p_max: int
    hint: DicksonSpec | None
    n_rows: int
    n_np_eq_hp: int
    n_gap_witness: int
    n_admissible: int
    n_slope_mult_ge2: int
    n_errors: int
    verdict: str


def good_places(f: Sequence[Fraction], p_max: int) -> list[int]:
    """Primes p <= p_max with p-integral coefficients and gcd(d, p) = 1."""
    fq = ratpoly.as_poly(f)
    d = ratpoly.degree(fq)
    out = []
    for p in primes_upto(p_max):
        if d % p == 0:
            continue
        if any(c.denominator % p == 0 for c in fq):
            continue
        out.append(p)
    return out


def scan_record(
    f: Sequence[Fraction],
    p: int,
    char: int = 1,
    budget: int | None = None,
    hint: DicksonSpec | None = None,
    timing: bool = True,
) -> ScanRecord:
    """Compute one record; budget blowups land in the error field."""
    fq = ratpoly.as_poly(f)
    d = ratpoly.degree(fq)
    admissible = None
    if hint is not None:
        admissible = is_admissible(p, hint.a, hint.n).admissible
    c_eff = char % p
    if c_eff == 0:
        return ScanRecord(
            p, char, d, None, None, None, p % d, admissible, None, None, None,
            error="character index divisible by p",
        )
    t0 = time.perf_counter()
    try:
        poly = np_at_prime(fq, p, c_eff, budget)
    except BudgetExceeded as exc:
        return ScanRecord(
            p, c_eff, d, None, None, None, p % d, admissible, None, None, None,
            error=f"budget-exceeded: {exc}",
        )
    ms = int((time.perf_counter() - t0) * 1000) if timing else None
    hp = hodge_polygon(d)
    gap = vertical_gap(poly, hp)
    multiset = poly.slope_multiset()
    v0 = next((s for s, length in multiset if length >= 2), None)
    return ScanRecord(
        p=p,
        c=c_eff,
        d=d,
        polygon=poly,
        gap=gap,
        np_eq_hp=poly == hp,
        p_mod_d=p % d,
        admissible=admissible,
        slope_mult_ge2=v0 is not None,
        v0=v0,
        ms=ms,
    )


def validate_record(rec: ScanRecord) -> None:
    """Hard, theorem-backed assertions; a failure is a build-failing event."""
    if rec.error is not None or rec.polygon is None:
        return
    d = rec.d
    hp = hodge_polygon(d)
    if not lies_above(rec.polygon, hp):
        raise InvariantViolation(f"p = {rec.p}: Newton polygon dips below Hodge")
    if rec.polygon.end != (Fraction(d - 1), Fraction(d - 1, 2)):
        raise InvariantViolation(f"p = {rec.p}: polygon does not end at (d-1, (d-1)/2)")
    if rec.p_mod_d == 1 and not rec.np_eq_hp:
        raise InvariantViolation(f"p = {rec.p} is 1 mod d but NP != HP")
    if rec.admissible and not (
        rec.slope_mult_ge2 and rec.gap is not None and rec.gap >= Fraction(1, 2 * d)
    ):
        raise InvariantViolation(
            f"p = {rec.p} is admissible but lacks the repeated slope or the 1/(2d) gap"
        )


def _scan_worker(args) -> ScanRecord:
    f_strs, p, char, budget, hint = args
    f = ratpoly.from_strings(f_strs)
    return scan_record(f, p, char, budget, hint, timing=True)


def run_scan(f, opts: ScanOptions) -> tuple[list[ScanRecord], ScanSummary]:
    """Scan all good places up to opts.p_max; returns (records, summary)."""
    fq = ratpoly.as_poly(f)
    d = ratpoly.degree(fq)
    if d < 1 or not ratpoly.is_monic(fq):
        raise ValueError("f must be monic of degree >= 1")
    hint = opts.hint
    if hint is None and opts.auto_hint and d >= 2:
        fact = find_dickson_factor(fq, require_gpp=True)
        if fact is not None:
            hint = fact.spec
    primes = good_places(fq, opts.p_max)

    records: dict[int, ScanRecord] = {}
    todo: list[int] = []
    for p in primes:
        if opts.cache_path is not None:
            cached = cache_get(opts.cache_path, cache_key(fq, p, opts.char))
            if cached is not None:
                records[p] = cached
                continue
        todo.append(p)

    if opts.jobs > 1 and len(todo) > 1:
        args = [(ratpoly.to_strings(fq), p, opts.char, opts.budget, hint) for p in todo]
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            for p, rec in zip(todo, pool.map(_scan_worker, args)):
                records[p] = rec
    else:
        for p in todo:
            records[p] = scan_record(fq, p, opts.char, opts.budget, hint, opts.timing)

    ordered = [records[p] for p in primes]
    for rec in ordered:
        validate_record(rec)
        if opts.cache_path is not None and rec.error is None and rec.p in set(todo):
            cache_put(opts.cache_path, cache_key(fq, rec.p, opts.char), rec)

    gap_bound = Fraction(1, 2 * d)
    n_np = sum(1 for r in ordered if r.np_eq_hp)
    n_gap = sum(1 for r in ordered if r.gap is not None and r.gap >= gap_bound)
    verdict = VERDICT_OSCILLATES if (n_np and n_gap) else VERDICT_NO_WITNESS
    summary = ScanSummary(
        f=ratpoly.format_poly(fq),
        d=d,
        p_max=opts.p_max,
        hint=hint,
        n_rows=len(ordered),
        n_np_eq_hp=n_np,
        n_gap_witness=n_gap,
        n_admissible=sum(1 for r in ordered if r.admissible),
        n_slope_mult_ge2=sum(1 for r in ordered if r.slope_mult_ge2),
        n_errors=sum(1 for r in ordered if r.error is not None),
        verdict=verdict,
    )
    return ordered, summary


# ---------------------------------------------------------------------------
# rendering: exact strings only, no floats


def _frac_str(x: Fraction | None) -> str:
    return "" if x is None else f"{x.numerator}/{x.denominator}"


def _frac_pair(x: Fraction | None) -> list[int] | None:
    return None if x is None else [x.numerator, x.denominator]


def _bool_str(b: bool | None) -> str:
    return "" if b is None else ("true" if b else "false")


def _slopes_str(poly: ConvexPolygon | None) -> str:
    if poly is None:
        return ""
    return ";".join(
        f"{s.numerator}/{s.denominator}:{l.numerator}/{l.denominator}"
        for s, l in poly.slope_multiset()
    )


def record_to_row(rec: ScanRecord, timing: bool = True) -> list[str]:
    return [
        str(rec.p),
        str(rec.c),
        str(rec.d),
        polygon_to_str(rec.polygon) if rec.polygon is not None else "",
        _slopes_str(rec.polygon),
        _frac_str(rec.gap),
        _bool_str(rec.np_eq_hp),
        str(rec.p_mod_d),
        _bool_str(rec.admissible),
        _bool_str(rec.slope_mult_ge2),
        _frac_str(rec.v0),
        str(rec.ms) if (timing and rec.ms is not None) else "",
    ]


def record_to_json(rec: ScanRecord, timing: bool = True) -> dict:
    return {
        "p": rec.p,
        "c": rec.c,
        "d": rec.d,
        "vertices": polygon_to_quads(rec.polygon) if rec.polygon is not None else None,
        "slopes": None
        if rec.polygon is None
        else [
            [s.numerator, s.denominator, l.numerator, l.denominator]
            for s, l in rec.polygon.slope_multiset()
        ],
        "gap": _frac_pair(rec.gap),
        "np_eq_hp": rec.np_eq_hp,
        "p_mod_d": rec.p_mod_d,
        "admissible": rec.admissible,
        "slope_mult_ge2": rec.slope_mult_ge2,
        "v0": _frac_pair(rec.v0),
        "ms": rec.ms if timing else None,
        "error": rec.error,
    }


def record_from_json(obj: dict) -> ScanRecord:
    poly = polygon_from_quads(obj["vertices"]) if obj.get("vertices") else None

    def frac(pair):
        return None if pair is None else Fraction(pair[0], pair[1])

    return ScanRecord(
        p=obj["p"],
        c=obj["c"],
        d=obj["d"],
        polygon=poly,
        gap=frac(obj.get("gap")),
        np_eq_hp=obj.get("np_eq_hp"),
        p_mod_d=obj["p_mod_d"],
        admissible=obj.get("admissible"),
        slope_mult_ge2=obj.get("slope_mult_ge2"),
        v0=frac(obj.get("v0")),
        ms=obj.get("ms"),
        error=obj.get("error"),
    )


def summary_to_json(s: ScanSummary) -> dict:
    return {
        "summary": {
            "f": s.f,
            "d": s.d,
            "p_max": s.p_max,
            "hint": None
            if s.hint is None
            else {"n": s.hint.n, "a": [s.hint.a.numerator, s.hint.a.denominator]},
            "rows": s.n_rows,
            "np_eq_hp": s.n_np_eq_hp,
            "gap_witness": s.n_gap_witness,
            "admissible": s.n_admissible,
            "slope_mult_ge2": s.n_slope_mult_ge2,
            "errors": s.n_errors,
            "verdict": s.verdict,
        }
    }


def write_csv(records: Sequence[ScanRecord], fp: IO[str], timing: bool = True) -> None:
    fp.write(",".join(CSV_COLUMNS) + "\n")
    for rec in records:
        fp.write(",".join('"' + cell + '"' if "," in cell else cell
                          for cell in record_to_row(rec, timing)) + "\n")


# ---------------------------------------------------------------------------
# append-only JSON-lines cache


def cache_key(f: Sequence[Fraction], p: int, c: int) -> str:
    payload = json.dumps(
        {"f": ratpoly.to_strings(ratpoly.as_poly(f)), "p": p, "c": c, "v": CACHE_VERSION},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def cache_get(path: str, key: str) -> ScanRecord | None:
    """Newest valid entry for key, or None; corrupt lines are skipped loudly."""
    found = None
    try:
        fh = open(path, encoding="utf-8")
    except FileNotFoundError:
        return None
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                print(f"cache: skipping corrupt line {lineno} of {path}", file=sys.stderr)
                continue
            if obj.get("key") != key or obj.get("version") != CACHE_VERSION:
                continue
            try:
                found = record_from_json(obj["record"])  # re-validates the polygon
            except Exception:
                print(f"cache: invalid record at line {lineno} of {path}", file=sys.stderr)
    return found


def cache_put(path: str, key: str, rec: ScanRecord) -> None:
    entry = {"key": key, "version": CACHE_VERSION, "record": record_to_json(rec)}
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(entry, sort_keys=True, separators=(",", ":")) + "\n")
