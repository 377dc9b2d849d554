"""Graded components of higher-order derivative ideals and their exact ranks.

For a homogeneous P of degree n, the span of its order-k partial
derivatives sits in degree n-k; multiplying that span by all degree-tau
monomials of the ambient space gives the degree-(n-k+tau) component of the
ideal generated by the order-k partials.  The dimensions of these
components are the ranks computed here, exactly over the rationals or over
a large prime field.

Row generation is kept sane at desk scale: identical rows (up to scale) are
deduplicated, the order-k partials are reduced to a basis before shifting,
the column space is restricted to monomials actually occurring in some row
(the rank is unaffected), and a hard budget refuses instances that would
generate too many matrix entries rather than degrading silently.

Rank computation: integer-preserving sparse echelon reduction (rows are
cleared of denominators, combined without division, and renormalized by
content), or the same reduction modulo a prime exceeding 2^60.  All
functions are pure; concurrent use on shared immutable polynomials is safe.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence

from .poly import Monomial, ONE, SparsePolynomial, VariableTable

#: Default cap on generated matrix entries before an operation refuses.
DEFAULT_BUDGET = 5_000_000

#: Smallest admissible modulus for prime-field ranks.
MIN_PRIME = 1 << 60


class BudgetExceededError(RuntimeError):
    """Raised when an operation would generate more data than its budget allows."""


@dataclass(frozen=True)
class ShiftParams:
    """Derivative order k and shift degree tau; t(n) is the target degree."""

    k: int
    tau: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.tau < 0:
            raise ValueError("k and tau must be nonnegative")

    def t(self, n: int) -> int:
        return self.tau + n - self.k


@dataclass(frozen=True)
class GradedComponentBasis:
    """A spanning set for one graded component, with its computed rank.

    `rows` are the (deduplicated) generators, `columns` the occurring
    monomials in descending graded-lex order, `pivot_rows` indices of rows
    forming a basis of the span.  `mode` records how the rank was computed
    ("exact" or "prime", with the prime kept alongside).
    """

    degree: int | None
    table: VariableTable
    rows: tuple[SparsePolynomial, ...]
    columns: tuple[Monomial, ...]
    rank: int
    mode: str
    prime: int | None
    pivot_rows: tuple[int, ...]
    truncated: bool = False
    shift_indices: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.degree is not None:
            for row in self.rows:
                if row.homogeneous_degree() != self.degree:
                    raise ValueError("basis row is not homogeneous of the stated degree")
        if self.rank > min(len(self.rows), len(self.columns) or 0) and self.rows:
            raise ValueError("rank exceeds matrix dimensions")

    def basis_rows(self) -> tuple[SparsePolynomial, ...]:
        return tuple(self.rows[i] for i in self.pivot_rows)

    def coefficient_rows(self) -> list[dict[int, Fraction]]:
        """Sparse matrix view: per row, column index -> coefficient."""
        col_of = {mono: j for j, mono in enumerate(self.columns)}
        return [{col_of[m]: c for m, c in row.terms.items()} for row in self.rows]


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:  # deterministic for n < 3.3e24
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random | None = None) -> int:
    """A random prime strictly above 2^60 (61..62 bits)."""
    rng = rng or random.Random()
    candidate = rng.randrange(MIN_PRIME + 1, 1 << 62) | 1
    while not _is_probable_prime(candidate):
        candidate += 2
    return candidate


def _check_prime(prime: int | None, rng: random.Random | None = None) -> int:
    if prime is None:
        return random_prime(rng)
    if prime <= MIN_PRIME:
        raise ValueError(f"prime must exceed 2^60, got {prime}")
    if not _is_probable_prime(prime):
        raise ValueError(f"{prime} is not prime")
    return prime


def _monic_key(poly: SparsePolynomial) -> tuple:
    """Canonical key identifying rows up to a scalar factor."""
    lead = poly.leading_term()
    assert lead is not None
    inv = 1 / lead[1]
    return tuple(sorted((m.exps, c * inv) for m, c in poly.terms.items()))


def _dedupe_rows(rows: list[SparsePolynomial]) -> list[SparsePolynomial]:
    seen: set[tuple] = set()
    out = []
    for row in rows:
        if row.is_zero():
            continue
        key = _monic_key(row)
        if key not in seen:
            seen.add(key)
            out.append(row)
    return out


def _integer_rows(rows: Sequence[SparsePolynomial],
                  col_of: dict[Monomial, int]) -> list[dict[int, int]]:
    out = []
    for row in rows:
        denom = math.lcm(*(c.denominator for c in row.terms.values()))
        entries = {col_of[m]: int(c * denom) for m, c in row.terms.items()}
        g = math.gcd(*entries.values())
        if g > 1:
            entries = {j: v // g for j, v in entries.items()}
        out.append(entries)
    return out


def _content_reduce(row: dict[int, int]) -> None:
    g = math.gcd(*row.values())
    if g > 1:
        for j in row:
            row[j] //= g


def _echelon_rank_exact(rows: list[dict[int, int]]) -> tuple[int, list[int]]:
    """Incremental integer echelon; returns rank and indices of pivot rows."""
    pivots: dict[int, dict[int, int]] = {}
    pivot_ids: list[int] = []
    for ridx, row in enumerate(rows):
        row = dict(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                _content_reduce(row)
                pivots[lead] = row
                pivot_ids.append(ridx)
                break
            a, b = row[lead], piv[lead]
            g = math.gcd(a, b)
            a //= g
            b //= g
            new = {j: b * v for j, v in row.items()}
            for j, v in piv.items():
                s = new.get(j, 0) - a * v
                if s:
                    new[j] = s
                else:
                    new.pop(j, None)
            row = new
            if row:
                _content_reduce(row)
    return len(pivot_ids), pivot_ids


def _echelon_rank_modp(rows: list[dict[int, int]], p: int) -> tuple[int, list[int]]:
    pivots: dict[int, dict[int, int]] = {}
    pivot_ids: list[int] = []
    for ridx, row in enumerate(rows):
        row = {j: v % p for j, v in row.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {j: v * inv % p for j, v in row.items()}
                pivot_ids.append(ridx)
                break
            f = row[lead]
            for j, v in piv.items():
                s = (row.get(j, 0) - f * v) % p
                if s:
                    row[j] = s
                else:
                    row.pop(j, None)
    return len(pivot_ids), pivot_ids


def _sorted_for_elimination(rows: list[SparsePolynomial]) -> list[SparsePolynomial]:
    # Descending leading monomial, short rows first: keeps echelon fill low
    # for the structured (minor x monomial) matrices seen here.
    return sorted(rows, key=lambda r: (r.leading_monomial(), -len(r.terms)), reverse=True)


def _rank_with_columns(rows: list[SparsePolynomial], mode: str, prime: int | None,
                       rng: random.Random | None = None,
                       ) -> tuple[int, list[int], tuple[Monomial, ...], int | None]:
    if mode not in ("exact", "prime"):
        raise ValueError(f"unknown rank mode {mode!r}")
    columns = tuple(sorted({m for row in rows for m in row.terms}, reverse=True))
    col_of = {mono: j for j, mono in enumerate(columns)}
    int_rows = _integer_rows(rows, col_of)
    if mode == "exact":
        rank, pivot_ids = _echelon_rank_exact(int_rows)
        return rank, pivot_ids, columns, None
    p = _check_prime(prime, rng)
    for poly in rows:
        for c in poly.terms.values():
            if c.denominator % p == 0:
                raise ValueError("coefficient denominator divisible by the prime")
    rank, pivot_ids = _echelon_rank_modp(int_rows, p)
    return rank, pivot_ids, columns, p


def matrix_rank(rows: Sequence[SparsePolynomial], mode: str = "exact",
                prime: int | None = None) -> int:
    """Rank of the span of `rows`, exactly or modulo a recorded prime.

    The prime-field rank is always <= the exact rank and equals it unless
    the prime divides a nonzero minor, which a random 61-bit prime misses
    with overwhelming probability.
    """
    live = [r for r in rows if not r.is_zero()]
    if not live:
        return 0
    rank, _, _, _ = _rank_with_columns(live, mode, prime)
    return rank


def _degree_monomials(indices: Sequence[int], degree: int):
    for combo in itertools.combinations_with_replacement(indices, degree):
        counts: dict[int, int] = {}
        for i in combo:
            counts[i] = counts.get(i, 0) + 1
        yield Monomial(counts)


def _empty_basis(poly: SparsePolynomial, degree: int | None, mode: str,
                 prime: int | None, truncated: bool) -> GradedComponentBasis:
    return GradedComponentBasis(degree=degree, table=poly.table, rows=(),
                                columns=(), rank=0, mode=mode, prime=prime,
                                pivot_rows=(), truncated=truncated)


def partial_space(poly: SparsePolynomial, k: int, *, mode: str = "exact",
                  prime: int | None = None,
                  max_entries: int = DEFAULT_BUDGET) -> GradedComponentBasis:
    """Span of all order-k partial derivatives of `poly`.

    Differential monomials range over the variables actually occurring in
    the polynomial; absent variables would only contribute zero rows.
    Requesting k beyond the degree returns the zero space, flagged
    `truncated` rather than raising.
    """
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    deg = poly.degree()
    if deg is None or k > deg:
        return _empty_basis(poly, None, mode, prime, truncated=True)
    active = poly.active_variables()
    est = math.comb(len(active) + k - 1, k) * len(poly.terms)
    if est > max_entries:
        raise BudgetExceededError(
            f"partial_space would generate ~{est} entries (budget {max_entries}); "
            f"raise max_entries to override")
    rows = [poly.differentiate(op) for op in _degree_monomials(active, k)]
    rows = _dedupe_rows(rows)
    if not rows:
        return _empty_basis(poly, None, mode, prime, truncated=True)
    rows = _sorted_for_elimination(rows)
    rank, pivot_ids, columns, used_prime = _rank_with_columns(rows, mode, prime)
    hom = poly.homogeneous_degree()
    return GradedComponentBasis(
        degree=None if hom is None else hom - k,
        table=poly.table, rows=tuple(rows), columns=columns, rank=rank,
        mode=mode, prime=used_prime, pivot_rows=tuple(pivot_ids))


def shifted_space(poly: SparsePolynomial, k: int, tau: int, *, mode: str = "exact",
                  prime: int | None = None, shift_vars: str = "all",
                  max_entries: int = DEFAULT_BUDGET) -> GradedComponentBasis:
    """Degree-(deg(P)-k+tau) component of the ideal generated by order-k partials.

    The order-k partials are first reduced to a basis, then multiplied by
    every degree-tau monomial in the shifting variable set: ``"all"`` ranges
    over the whole ambient table (the default, matching the dimension-count
    conventions used by the growth bounds), ``"active"`` only over variables
    occurring in the polynomial.
    """
    if tau < 0:
        raise ValueError("shift degree must be nonnegative")
    base = partial_space(poly, k, mode=mode, prime=prime, max_entries=max_entries)
    if base.rank == 0:
        return base
    basis = base.basis_rows()
    if shift_vars == "all":
        indices = tuple(range(len(poly.table)))
    elif shift_vars == "active":
        indices = poly.active_variables()
    else:
        raise ValueError("shift_vars must be 'all' or 'active'")
    n_shift = math.comb(len(indices) + tau - 1, tau) if indices else (1 if tau == 0 else 0)
    est = sum(len(b.terms) for b in basis) * n_shift
    if est > max_entries:
        raise BudgetExceededError(
            f"shifted_space would generate ~{est} entries (budget {max_entries}); "
            f"raise max_entries to override")
    rows = [b.mul_monomial(shift) for shift in _degree_monomials(indices, tau)
            for b in basis]
    rows = _dedupe_rows(rows)
    rows = _sorted_for_elimination(rows)
    rank, pivot_ids, columns, used_prime = _rank_with_columns(rows, mode, prime)
    return GradedComponentBasis(
        degree=None if base.degree is None else base.degree + tau,
        table=poly.table, rows=tuple(rows), columns=columns, rank=rank,
        mode=mode, prime=used_prime, pivot_rows=tuple(pivot_ids),
        shift_indices=indices)
