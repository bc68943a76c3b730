"""Exponential sums over finite fields and their L-polynomials.

For fbar over F_q (q = p^h) and a nontrivial additive character chi_c of
F_p, the sums S_m = sum over x in F_{q^m} of chi_c(Tr(fbar(x))) generate
L(fbar, chi, t) = exp(sum_m S_m t^m / m), which is a polynomial of degree
d - 1 over Z[zeta_p] whenever gcd(d, p) = 1.  Its coefficients come out of
the Newton-identity recurrence a_k = (1/k) sum_{j<=k} S_j a_{k-j}, with
every division exact.

The q-adic Newton polygon is the lower hull of (k, v_pi(a_k) / (h(p-1))).
It does not depend on the choice of c, and it equals the Hodge polygon
whenever p = 1 mod d.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels, ratpoly
from .cyclotomic import CycInt, exact_div_int, pi_valuation
from .errors import (
    BadPlace,
    CharacteristicMismatch,
    DegreeCharClash,
    InternalDivisibility,
    InvariantViolation,
    NotDivisible,
)
from .fields import FieldPolynomial, build_field, check_enum_budget, embed
from .polygons import ConvexPolygon, lower_hull


@dataclass(frozen=True)
class Character:
    """The additive character a -> zeta_p^(c a) of F_p; c = 1..p-1."""

    p: int
    c: int

    def __post_init__(self):
        if not 1 <= self.c <= self.p - 1:
            raise ValueError(f"character index must be in 1..{self.p - 1}, got {self.c}")


@dataclass(frozen=True)
class LPolynomial:
    """L(fbar, chi, t) = sum a_k t^k with a_k in Z[zeta_p]; a_0 = 1."""

    p: int
    h: int
    coeffs: tuple[CycInt, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != CycInt.one(self.p):
            raise ValueError("constant coefficient must be 1")

    @property
    def q(self) -> int:
        return self.p**self.h

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@functools.lru_cache(maxsize=512)
def _extension_histogram(fbar: FieldPolynomial, m: int) -> tuple[int, ...]:
    """Trace histogram of fbar pushed into F_{q^m}; cached per (fbar, m)."""
    base = fbar.field
    if m == 1:
        hist = kernels.trace_histogram(fbar)
    else:
        ext = build_field(base.p, base.e * m)
        fext = embed(base, ext).map_poly(fbar)
        hist = kernels.trace_histogram(fext)
    if sum(hist) != base.q**m:
        raise InvariantViolation("trace histogram does not sum to q^m")
    return tuple(hist)


def trace_counts(fbar: FieldPolynomial, m: int, budget: int | None = None) -> tuple[int, ...]:
    """t_a = #{x in F_{q^m} : Tr(fbar(x)) = a}, a = 0..p-1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    check_enum_budget(fbar.field.q**m, budget)
    return _extension_histogram(fbar, m)


def exp_sum(fbar: FieldPolynomial, m: int, chi: Character, budget: int | None = None) -> CycInt:
    """S_m(fbar, chi) = sum over x in F_{q^m} of chi(Tr(fbar(x)))."""
    p = fbar.field.p
    if chi.p != p:
        raise CharacteristicMismatch(f"character mod {chi.p} vs field of characteristic {p}")
    hist = trace_counts(fbar, m, budget)
    counts = [0] * p
    for a, t in enumerate(hist):
        counts[a * chi.c % p] += t
    return CycInt.from_root_counts(p, counts)


def l_polynomial(
    fbar: FieldPolynomial,
    chi: Character | None = None,
    budget: int | None = None,
    verify: bool = False,
) -> LPolynomial:
    """The degree-(d-1) polynomial L(fbar, chi, t) over Z[zeta_p].

    Requires gcd(d, p) = 1.  With verify=True, S_d is also computed and the
    recurrence is run one step further, which must give a_d = 0.
    """
    field = fbar.field
    p, d = field.p, fbar.degree
    if d < 1:
        raise ValueError("fbar must be nonconstant")
    if math.gcd(d, p) != 1:
        raise DegreeCharClash(f"gcd(d, p) = gcd({d}, {p}) != 1")
    if chi is None:
        chi = Character(p, 1)
    upto = d if verify else d - 1
    sums = [exp_sum(fbar, m, chi, budget) for m in range(1, upto + 1)]
    coeffs = [CycInt.one(p)]
    for k in range(1, d):
        acc = CycInt.zero(p)
        for j in range(1, k + 1):
            acc = acc + sums[j - 1] * coeffs[k - j]
        try:
            coeffs.append(exact_div_int(acc, k))
        except NotDivisible as exc:
            raise InternalDivisibility(f"coefficient a_{k} is not integral") from exc
    if coeffs[d - 1].is_zero() and d > 1:
        raise InvariantViolation("leading coefficient a_(d-1) vanished")
    if verify:
        acc = CycInt.zero(p)
        for j in range(1, d + 1):
            acc = acc + sums[j - 1] * coeffs[d - j]
        if not acc.is_zero():
            raise InvariantViolation("S_d is inconsistent with the L-coefficients")
    return LPolynomial(p, field.e, tuple(coeffs))


def newton_polygon(lpoly: LPolynomial) -> ConvexPolygon:
    """q-adic Newton polygon: lower hull of (k, v_pi(a_k) / (h(p-1)))."""
    denom = lpoly.h * (lpoly.p - 1)
    points = []
    for k, a in enumerate(lpoly.coeffs):
        v = pi_valuation(a)
        if v != math.inf:
            points.append((Fraction(k), Fraction(int(v), denom)))
    return lower_hull(points)


def reduce_mod_p(f: Sequence[Fraction], p: int) -> FieldPolynomial:
    """Reduction of f in Q[x] to F_p[x]; BadPlace if p divides a denominator."""
    field = build_field(p, 1)
    out = []
    for c in ratpoly.as_poly(f):
        if c.denominator % p == 0:
            raise BadPlace(p, "nonintegral", f"coefficient {c}")
        out.append(c.numerator * pow(c.denominator, -1, p) % p)
    return field.poly(out)


def np_at_prime(
    f: Sequence, p: int, chi_index: int = 1, budget: int | None = None
) -> ConvexPolygon:
    """Newton polygon NP_p(f) of a monic f in Q[x] at a good place p."""
    fq = ratpoly.as_poly(f)
    d = ratpoly.degree(fq)
    if d < 1 or not ratpoly.is_monic(fq):
        raise ValueError("f must be monic of degree >= 1")
    if math.gcd(d, p) != 1:
        raise BadPlace(p, "degree", f"p = {p} divides d = {d}")
    fbar = reduce_mod_p(fq, p)
    lp = l_polynomial(fbar, Character(p, chi_index), budget)
    return newton_polygon(lp)


def np_base_change_check(
    fbar: FieldPolynomial, n: int, chi: Character | None = None, budget: int | None = None
) -> bool:
    """NP over F_q equals NP over F_{q^n} (polygons compared vertex-wise)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return True
    base = fbar.field
    ext = build_field(base.p, base.e * n)
    fext = embed(base, ext).map_poly(fbar)
    np_base = newton_polygon(l_polynomial(fbar, chi, budget))
    np_ext = newton_polygon(l_polynomial(fext, chi, budget))
    return np_base == np_ext
