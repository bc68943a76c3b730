"""Vectorized whole-field enumeration: bulk evaluation and trace histograms.

All kernels do exact int64 arithmetic.  Values stay reduced below p between
Horner steps, so the worst intermediate is bounded by e*(p-1)^2 after a
coefficient convolution and by e*(e-1)*(p-1)^3 inside the modulus-reduction
step; the entry guard checks both against 2^62 and falls back to the plain
Python twin when a custom budget admits fields past the bound (the default
budget of 1e8 elements never does).

Element number k of F_{p^e} has the base-p digits of k as its coefficient
vector, least significant first, matching FiniteField.from_index.
"""

from __future__ import annotations

import functools
import math
from typing import Iterator

import numpy as np

from .fields import FieldPolynomial, FiniteField

_CHUNK = 1 << 16


def _int64_safe(field: FiniteField) -> bool:
    p, e = field.p, field.e
    conv_max = e * (p - 1) ** 2 + (p - 1)
    reduce_max = conv_max + (e - 1) * conv_max * (p - 1)
    return reduce_max < 2**62


def _reduction_rows(field: FiniteField) -> np.ndarray:
    """Row k is x^(e+k) mod modulus, k = 0..e-2, as vectors over F_p."""
    p, e, m = field.p, field.e, field.modulus
    rows = np.zeros((max(e - 1, 0), e), dtype=np.int64)
    cur = [(-m[i]) % p for i in range(e)]  # x^e mod m
    for k in range(e - 1):
        rows[k] = cur
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(e):
                cur[i] = (cur[i] + top * rows[0][i]) % p
    return rows


def _element_block(field: FiniteField, start: int, stop: int) -> np.ndarray:
    ks = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, field.e), dtype=np.int64)
    for i in range(field.e):
        out[:, i] = (ks // field.p**i) % field.p
    return out


def _mul_block(A: np.ndarray, B: np.ndarray, red: np.ndarray, p: int) -> np.ndarray:
    n, e = A.shape
    if e == 1:
        return A * B % p
    conv = np.zeros((n, 2 * e - 1), dtype=np.int64)
    for i in range(e):
        col = A[:, i]
        for j in range(e):
            conv[:, i + j] += col * B[:, j]
    low = conv[:, :e]
    low += conv[:, e:] @ red
    return low % p


def eval_blocks(fbar: FieldPolynomial, chunk: int = _CHUNK) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (start_index, values) with f evaluated at every field element.

    Values come out as (n, e) coefficient matrices in enumeration order.
    """
    field = fbar.field
    p, e, q = field.p, field.e, field.q
    if not _int64_safe(field):
        yield from _eval_blocks_naive(fbar, chunk)
        return
    red = _reduction_rows(field)
    rows = fbar.int_rows()
    coeffs = np.array(rows, dtype=np.int64) if rows else np.zeros((0, e), dtype=np.int64)
    d = len(rows) - 1
    for start in range(0, q, chunk):
        stop = min(start + chunk, q)
        E = _element_block(field, start, stop)
        n = stop - start
        if d < 0:
            yield start, np.zeros((n, e), dtype=np.int64)
            continue
        V = np.tile(coeffs[d], (n, 1))
        for k in range(d - 1, -1, -1):
            V = _mul_block(V, E, red, p)
            V += coeffs[k]
            V %= p
        yield start, V


def _eval_blocks_naive(fbar: FieldPolynomial, chunk: int) -> Iterator[tuple[int, np.ndarray]]:
    field = fbar.field
    buf, start = [], 0
    for k in range(field.q):
        buf.append(fbar(field.from_index(k)).coeffs)
        if len(buf) == chunk:
            yield start, np.array(buf, dtype=np.int64)
            start += len(buf)
            buf = []
    if buf:
        yield start, np.array(buf, dtype=np.int64)


def trace_histogram(fbar: FieldPolynomial, chunk: int = _CHUNK) -> list[int]:
    """Counts t_a = #{x in F_q : Tr(f(x)) = a}, indexed by a in 0..p-1."""
    field = fbar.field
    if ZECH_MIN_Q <= field.q <= ZECH_MAX_Q and _int64_safe(field):
        return _trace_histogram_zech(fbar)
    return _trace_histogram_horner(fbar, chunk)


def _trace_histogram_horner(fbar: FieldPolynomial, chunk: int = _CHUNK) -> list[int]:
    field = fbar.field
    p = field.p
    tvec = np.array(field.trace_vector(), dtype=np.int64)
    hist = np.zeros(p, dtype=np.int64)
    for _, V in eval_blocks(fbar, chunk):
        T = (V @ tvec) % p
        hist += np.bincount(T, minlength=p)
    return [int(v) for v in hist]


# ---------------------------------------------------------------------------
# Zech (index) tables: the fast path for large extensions.
#
# Fix a generator g of F_q^*.  Trace down to F_p is additive, so for
# f = sum c_k x^k and x = g^s,
#
#     Tr(f(g^s)) = Tr(c_0) + sum_{k >= 1, c_k != 0} T[(dlog(c_k) + k*s) mod (q-1)]
#
# where T[s] = Tr(g^s).  One table per field turns every histogram into a
# handful of fancy-indexing passes, independent of the extension degree.
# Element codes reuse the enumeration index: code(x) = sum_i x_i p^i.

ZECH_MIN_Q = 1 << 12
ZECH_MAX_Q = 1 << 25


class _ZechTables:
    __slots__ = ("trace_pow", "dlog")

    def __init__(self, trace_pow: np.ndarray, dlog: np.ndarray):
        self.trace_pow = trace_pow  # int16, length q-1; Tr(g^s)
        self.dlog = dlog  # int64, length q; dlog[code] = s, dlog[0] = -1


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _find_generator(field: FiniteField):
    """Smallest element (enumeration order) of multiplicative order q - 1."""
    q = field.q
    if q == 2:
        return field.one()
    factors = _prime_factors(q - 1)
    one = field.one()
    for k in range(2, q):
        g = field.from_index(k)
        if all(g ** ((q - 1) // ell) != one for ell in factors):
            return g
    raise AssertionError("no generator found")  # unreachable for a field


def _scale_block(rows: np.ndarray, srow, red: np.ndarray, p: int) -> np.ndarray:
    """Multiply every row (an element of F_{p^e}) by one fixed element."""
    n, e = rows.shape
    if e == 1:
        return rows * int(srow[0]) % p
    conv = np.zeros((n, 2 * e - 1), dtype=np.int64)
    for j in range(e):
        cj = int(srow[j])
        if cj:
            conv[:, j : j + e] += rows * cj
    low = conv[:, :e]
    low += conv[:, e:] @ red
    return low % p


def _powers_rows(field: FiniteField, g, count: int, red: np.ndarray) -> np.ndarray:
    """Digit rows of g^0 .. g^(count-1), built by block doubling."""
    p, e = field.p, field.e
    rows = np.zeros((1, e), dtype=np.int64)
    rows[0, 0] = 1
    while rows.shape[0] < count:
        have = rows.shape[0]
        take = min(have, count - have)
        step = (g ** have).coeffs
        rows = np.vstack([rows, _scale_block(rows[:take], step, red, p)])
    return rows


@functools.lru_cache(maxsize=6)
def _zech_tables(field: FiniteField) -> _ZechTables:
    p, e, q = field.p, field.e, field.q
    red = _reduction_rows(field)
    g = _find_generator(field)
    B = math.isqrt(q - 1) + 1
    baby = _powers_rows(field, g, B, red)
    giant = _powers_rows(field, g**B, (q - 2) // B + 1, red)
    weights = np.array([p**i for i in range(e)], dtype=np.int64)

    codes = np.empty(q - 1, dtype=np.int64)  # codes[s] = code of g^s
    for a in range(giant.shape[0]):
        lo = a * B
        hi = min(lo + B, q - 1)
        prod = _scale_block(baby[: hi - lo], giant[a], red, p)
        codes[lo:hi] = prod @ weights

    tvec = np.array(field.trace_vector(), dtype=np.int64)
    trace_by_code = np.empty(q, dtype=np.int16)
    for start in range(0, q, _CHUNK):
        E = _element_block(field, start, min(start + _CHUNK, q))
        trace_by_code[start : start + E.shape[0]] = (E @ tvec) % p

    dlog = np.full(q, -1, dtype=np.int64)
    dlog[codes] = np.arange(q - 1, dtype=np.int64)
    return _ZechTables(trace_by_code[codes], dlog)


def _trace_histogram_zech(fbar: FieldPolynomial) -> list[int]:
    field = fbar.field
    p, q = field.p, field.q
    tables = _zech_tables(field)
    weights = [p**i for i in range(field.e)]
    terms = []
    for k, c in enumerate(fbar.coeffs):
        if k == 0 or c.is_zero():
            continue
        code = sum(ci * w for ci, w in zip(c.coeffs, weights))
        terms.append((k, int(tables.dlog[code])))
    tr0 = field.trace(fbar.coeffs[0]) if fbar.coeffs else 0

    hist = np.zeros(p, dtype=np.int64)
    if not terms:
        hist[tr0] = q
        return [int(v) for v in hist]
    stripe = 1 << 20
    for start in range(0, q - 1, stripe):
        s = np.arange(start, min(start + stripe, q - 1), dtype=np.int64)
        acc = np.full(s.shape[0], tr0, dtype=np.int64)
        for k, dl in terms:
            acc += tables.trace_pow[(dl + k * s) % (q - 1)]
        hist += np.bincount(acc % p, minlength=p)
    hist[tr0] += 1  # x = 0 contributes Tr(c_0)
    return [int(v) for v in hist]


def value_codes(fbar: FieldPolynomial, chunk: int = _CHUNK) -> np.ndarray:
    """f(x) for every x, encoded as integers sum_i c_i p^i (fits in int64)."""
    field = fbar.field
    weights = np.array([field.p**i for i in range(field.e)], dtype=np.int64)
    out = np.empty(field.q, dtype=np.int64)
    for start, V in eval_blocks(fbar, chunk):
        out[start : start + V.shape[0]] = V @ weights
    return out


def distinct_value_count(fbar: FieldPolynomial, chunk: int = _CHUNK) -> int:
    """Size of the image of fbar on its whole field."""
    return int(np.unique(value_codes(fbar, chunk)).size)


def find_first_root(field: FiniteField, int_coeffs: tuple[int, ...], chunk: int = _CHUNK) -> int:
    """Index of the first element (in enumeration order) killing the polynomial
    with the given prime-subfield coefficients; raises if there is none."""
    fbar = field.poly(list(int_coeffs))
    for start, V in eval_blocks(fbar, chunk):
        zero_rows = np.nonzero(~V.any(axis=1))[0]
        if zero_rows.size:
            return start + int(zero_rows[0])
    raise ValueError("polynomial has no root in the field")


def naive_trace_histogram(fbar: FieldPolynomial) -> list[int]:
    """Pure-Python twin of trace_histogram, for oracle tests and tiny fields."""
    field = fbar.field
    hist = [0] * field.p
    for x in field.elements():
        hist[field.trace(fbar(x))] += 1
    return hist
