"""Closed-form dimension quantities, exact or as certified natural-log intervals.

Every quantity here is a nonnegative integer built from binomial
coefficients.  Instances whose decimal size stays within `DIGIT_LIMIT` are
evaluated exactly with big integers.  Larger instances switch to interval
mode: the natural log of the value is bracketed by an interval guaranteed
to contain it, built from the Stirling series for ln(x!) truncated with its
classical remainder bound (the error after any partial sum is at most the
first omitted term), plus rounding slack.  Comparisons driven by intervals
either resolve strictly or report "unknown" -- never a guess.  Asymptotic
ln-approximations are exposed only as the `log_estimate` diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from mpmath import mp, mpf

from .macaulay import comb0

#: Exact evaluation is used while results stay at or below this many digits.
DIGIT_LIMIT = 10 ** 6

#: Interval working precisions (bits): start, and the doubling cap.
PREC_START = 128
PREC_CAP = 4096

# Below this, ln(q!) comes straight from the exact integer factorial.
_EXACT_LN_LIMIT = 100_000
_LN10 = math.log(10)


def _slack(value, prec: int):
    """Rounding slack folded over a short computation at prec+48 bits."""
    return mp.ldexp(abs(value) + 1, -(prec + 8))


def _ln_factorial_iv(q: int, prec: int) -> tuple[Any, Any]:
    """Interval certainly containing ln(q!)."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    if q <= 1:
        return (mpf(0), mpf(0))
    with mp.workprec(prec + 48):
        if q < _EXACT_LN_LIMIT:
            v = mp.ln(mpf(math.factorial(q)))
            s = _slack(v, prec)
            return (v - s, v + s)
        x = mpf(q)
        total = (x + mpf(1) / 2) * mp.ln(x) - x + mp.ln(2 * mp.pi) / 2
        eps = mp.ldexp(1, -(prec + 16))
        j = 1
        while True:
            term = mp.bernoulli(2 * j) / ((2 * j) * (2 * j - 1) * x ** (2 * j - 1))
            if abs(term) < eps or j >= 256:
                remainder = abs(term)  # classical bound: error <= first omitted term
                break
            total += term
            j += 1
        s = _slack(total, prec) + remainder
        return (total - s, total + s)


def _ln_int_iv(x: int, prec: int) -> tuple[Any, Any]:
    """Interval certainly containing ln(x) for an exact positive integer."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0:
        return (mpf("-inf"), mpf("-inf"))
    if x == 1:
        return (mpf(0), mpf(0))
    with mp.workprec(prec + 48):
        v = mp.ln(mpf(x))
        s = _slack(v, prec)
        return (v - s, v + s)


def _ln_binom_iv(a: int, b: int, prec: int) -> tuple[Any, Any]:
    if b < 0 or a < 0 or b > a:
        return (mpf("-inf"), mpf("-inf"))
    if b == 0 or b == a:
        return (mpf(0), mpf(0))
    fa = _ln_factorial_iv(a, prec)
    fb = _ln_factorial_iv(b, prec)
    fc = _ln_factorial_iv(a - b, prec)
    return (fa[0] - fb[1] - fc[1], fa[1] - fb[0] - fc[0])


def _binom_digits(a: int, b: int) -> float:
    """Cheap decimal-digit estimate of C(a, b); 0 outside the support."""
    if b < 0 or a < 0 or b > a:
        return 0.0
    if b == 0 or b == a:
        return 1.0
    ln_value = math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)
    return ln_value / _LN10 + 1


@dataclass(frozen=True)
class BigQuantity:
    """A nonnegative integer quantity: exact value, or a certified ln-interval.

    `provenance` names which dimension count or bound the number realizes.
    """

    provenance: str
    value: int | None = None
    log_lo: Any = None
    log_hi: Any = None
    prec: int | None = None

    def __post_init__(self) -> None:
        if (self.value is None) == (self.log_lo is None):
            raise ValueError("exactly one of value / log interval must be set")
        if self.value is not None and self.value < 0:
            raise ValueError("quantities are nonnegative")

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def log_bounds(self, prec: int = PREC_START) -> tuple[Any, Any]:
        """An interval containing ln(value); -inf endpoints encode value 0."""
        if self.is_exact:
            return _ln_int_iv(self.value, prec)
        return (self.log_lo, self.log_hi)

    def to_json_dict(self) -> dict:
        if self.is_exact:
            return {"provenance": self.provenance, "value": self.value}
        return {
            "provenance": self.provenance,
            "log_interval": [mp.nstr(self.log_lo, 25), mp.nstr(self.log_hi, 25)],
            "prec": self.prec,
        }


def compare_quantities(lhs: BigQuantity, rhs: BigQuantity,
                       prec: int = PREC_START) -> str:
    """One of "<", ">", "=", "unknown"; interval overlap yields "unknown"."""
    if lhs.is_exact and rhs.is_exact:
        if lhs.value == rhs.value:
            return "="
        return "<" if lhs.value < rhs.value else ">"
    llo, lhi = lhs.log_bounds(prec)
    rlo, rhi = rhs.log_bounds(prec)
    if lhi < rlo:
        return "<"
    if llo > rhi:
        return ">"
    if lhi == rlo == mpf("-inf"):
        return "="  # both zero
    return "unknown"


def _want_exact(mode: str, digits: float) -> bool:
    if mode == "exact":
        return True
    if mode == "interval":
        return False
    if mode == "auto":
        return digits <= DIGIT_LIMIT
    raise ValueError(f"unknown mode {mode!r}; use exact, interval or auto")


def _binom_quantity(provenance: str, a: int, b: int, mode: str, prec: int) -> BigQuantity:
    if _want_exact(mode, _binom_digits(a, b)):
        return BigQuantity(provenance, value=comb0(a, b))
    lo, hi = _ln_binom_iv(a, b, prec)
    return BigQuantity(provenance, log_lo=lo, log_hi=hi, prec=prec)


def full_degree_component(N: int, d: int, *, mode: str = "auto",
                          prec: int = PREC_START) -> BigQuantity:
    """C(N+d-1, d): the dimension of the whole degree-d component in N variables."""
    if N < 1 or d < 0:
        raise ValueError("need N >= 1 and d >= 0")
    return _binom_quantity("full-degree-component", N + d - 1, d, mode, prec)


def padded_ideal_upper(n: int, m: int, k: int, tau: int, *, mode: str = "auto",
                       prec: int = PREC_START) -> BigQuantity:
    """C(n^2+m+tau-1, m+tau): cap on the shifted derivative span of a padded
    polynomial, via containment in the ideal of the bare padding power.

    Only valid while k < n - m (the padding power must survive k derivatives),
    so larger k is refused.
    """
    _validate(n=n, m=m, k=k, tau=tau)
    if k >= n - m:
        raise ValueError(f"padding bound needs k < n-m, got k={k}, n-m={n - m}")
    return _binom_quantity("padded-ideal-upper", n * n + m + tau - 1, m + tau, mode, prec)


def det_partials_count(n: int, k: int, *, mode: str = "auto",
                       prec: int = PREC_START) -> BigQuantity:
    """C(n,k)^2: the span of order-k determinant partials (the k-minors)."""
    _validate(n=n)
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    digits = 2 * _binom_digits(n, k)
    if _want_exact(mode, digits):
        return BigQuantity("det-partials-count", value=math.comb(n, k) ** 2)
    lo, hi = _ln_binom_iv(n, k, prec)
    return BigQuantity("det-partials-count", log_lo=2 * lo, log_hi=2 * hi, prec=prec)


def two_power_ideal_dim(n: int, k: int, tau: int, *, mode: str = "auto",
                        prec: int = PREC_START) -> BigQuantity:
    """2*C(n^2+tau-1, tau) - C(n^2+tau-(n-k)-1, tau-(n-k)).

    Exact component dimension for the ideal generated by two independent
    (n-k)-th powers of linear forms in an n^2-dim space: the two shifted
    copies overlap exactly in multiples of both powers (a complete
    intersection), whence the inclusion-exclusion with C(., negative) = 0.
    """
    _validate(n=n, tau=tau)
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    N = n * n
    d = n - k
    a_params = (N + tau - 1, tau)
    b_params = (N + tau - d - 1, tau - d)
    if _want_exact(mode, _binom_digits(*a_params) + 1):
        return BigQuantity("two-power-ideal-dim",
                           value=2 * comb0(*a_params) - comb0(*b_params))
    with mp.workprec(prec + 48):
        alo, ahi = _ln_binom_iv(*a_params, prec)
        ln2 = mp.ln(mpf(2))
        if b_params[1] < 0:
            return BigQuantity("two-power-ideal-dim", log_lo=alo + ln2,
                               log_hi=ahi + ln2, prec=prec)
        blo, bhi = _ln_binom_iv(*b_params, prec)
        # 2A - B = A * (2 - B/A); B <= A always, so [A, 2A] is a safe coarse
        # bracket, refined through the ratio when it certifies 2 - B/A > 0.
        r_hi = mp.exp(bhi - alo)
        r_lo = mp.exp(blo - ahi)
        lo = alo
        if r_hi < 2:
            lo = alo + mp.ln(2 - r_hi)
        hi = ahi + mp.ln(2 - r_lo) if r_lo < 2 else ahi + ln2
        s = _slack(hi, prec)
        return BigQuantity("two-power-ideal-dim", log_lo=lo - s, log_hi=hi + s,
                           prec=prec)


def det_shifted_lower(n: int, k: int, tau: int, *, mode: str = "auto",
                      prec: int = PREC_START) -> BigQuantity:
    """C(n+k, 2k) * C(n^2+tau-2k, tau): shifted-span floor for the determinant.

    The first factor counts degree-(n-k) minor leading monomials supported
    on the diagonal and superdiagonal; the second undercounts their distinct
    degree-(n-k+tau) multiples.  Sound as a lower bound for k >= 1 (at k = 0
    it is evaluated formally; the single-generator count is smaller).
    """
    _validate(n=n, tau=tau)
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    lead = comb0(n + k, 2 * k)
    shift_params = (n * n + tau - 2 * k, tau)
    if lead == 0:
        return BigQuantity("det-shifted-lower", value=0)
    if _want_exact(mode, _binom_digits(*shift_params) + _binom_digits(n + k, 2 * k)):
        return BigQuantity("det-shifted-lower", value=lead * comb0(*shift_params))
    llo, lhi = _ln_int_iv(lead, prec)
    slo, shi = _ln_binom_iv(*shift_params, prec)
    return BigQuantity("det-shifted-lower", log_lo=llo + slo, log_hi=lhi + shi,
                       prec=prec)


def perm_partials_upper(m: int, k: int) -> BigQuantity:
    """sum_{j<=k} C(m,j)^2: cap on the order-k partials of a padded permanent.

    Always exact; for k >= m the sum closes to the central binomial C(2m, m).
    """
    _validate(m=m)
    if k < 0:
        raise ValueError("need k >= 0")
    total = sum(math.comb(m, j) ** 2 for j in range(min(k, m) + 1))
    return BigQuantity("perm-partials-upper", value=total)


def perm_shifted_upper(n: int, m: int, k: int, tau: int, *, mode: str = "auto",
                       prec: int = PREC_START) -> BigQuantity:
    """Partial count times C(n^2+tau-1, tau): the syzygy-free shifted cap."""
    _validate(n=n, m=m, tau=tau)
    if k < 0:
        raise ValueError("need k >= 0")
    partials = perm_partials_upper(m, k).value
    shift_params = (n * n + tau - 1, tau)
    if _want_exact(mode, _binom_digits(*shift_params) + len(str(partials))):
        return BigQuantity("perm-shifted-upper", value=partials * comb0(*shift_params))
    plo, phi = _ln_int_iv(partials, prec)
    slo, shi = _ln_binom_iv(*shift_params, prec)
    return BigQuantity("perm-shifted-upper", log_lo=plo + slo, log_hi=phi + shi,
                       prec=prec)


@dataclass(frozen=True)
class IntervalEstimate:
    """A certified bracket [lo, hi] for a natural logarithm (diagnostic only)."""

    name: str
    lo: Any
    hi: Any
    prec: int

    @property
    def width(self) -> float:
        return float(self.hi - self.lo)

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi


def log_estimate(name: str, *, prec: int = PREC_START, **params: int) -> IntervalEstimate:
    """Named ln-diagnostics: "factorial" (q), "binom" (a, b), "central_binom" (m).

    Purely informative Stirling-style brackets; every verdict elsewhere in
    the package uses exact integers or the certified comparisons above.
    """
    if name == "factorial":
        lo, hi = _ln_factorial_iv(params["q"], prec)
    elif name == "binom":
        lo, hi = _ln_binom_iv(params["a"], params["b"], prec)
    elif name == "central_binom":
        m = params["m"]
        lo, hi = _ln_binom_iv(2 * m, m, prec)
    else:
        raise ValueError(f"unknown estimate {name!r}")
    return IntervalEstimate(name, lo, hi, prec)


def _validate(**kwargs: int) -> None:
    for key, val in kwargs.items():
        if key in ("n", "m") and val < 1:
            raise ValueError(f"need {key} >= 1")
        if key in ("tau", "k") and val < 0:
            raise ValueError(f"need {key} >= 0")
