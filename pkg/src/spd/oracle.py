"""Independent brute-force cross-checks.

Everything here favours directness over speed: dense fraction-free
elimination, full minor expansion, explicit divisibility enumeration.
Guardrails are hard errors, not truncations, so oracle answers are always
exact.  The engine under test (`spd.flatten`) shares no elimination code
with this module.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence

from .flatten import BudgetExceededError
from .poly import Monomial, SparsePolynomial, VariableTable, _permutation_sign

MAX_DENSE_COLUMNS = 10 ** 4
MAX_ENUMERATION = 10 ** 7


@dataclass(frozen=True)
class MonomialSet:
    """Monomials of one degree over a restricted variable set, no duplicates."""

    degree: int
    table: VariableTable
    monomials: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if len(set(self.monomials)) != len(self.monomials):
            raise ValueError("duplicate monomials")
        for mono in self.monomials:
            if mono.degree != self.degree:
                raise ValueError("member of the wrong degree")

    def __len__(self) -> int:
        return len(self.monomials)


def _bareiss_rank(matrix: list[list[int]]) -> int:
    """Dense fraction-free elimination; divisions are exact by construction."""
    if not matrix or not matrix[0]:
        return 0
    rows, cols = len(matrix), len(matrix[0])
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if matrix[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        for i in range(r + 1, rows):
            row_i, row_r = matrix[i], matrix[r]
            f = row_i[c]
            for j in range(c, cols):
                row_i[j] = (row_i[j] * row_r[c] - f * row_r[j]) // prev
        prev = matrix[r][c]
        r += 1
        if r == rows:
            break
    return r


def brute_rank(rows: Sequence[SparsePolynomial]) -> int:
    """Dense rank over the rationals; refuses more than 10^4 columns."""
    live = [row for row in rows if not row.is_zero()]
    if not live:
        return 0
    columns = sorted({m for row in live for m in row.terms}, reverse=True)
    if len(columns) > MAX_DENSE_COLUMNS:
        raise BudgetExceededError(
            f"dense oracle refuses {len(columns)} columns (cap {MAX_DENSE_COLUMNS})")
    col_of = {mono: j for j, mono in enumerate(columns)}
    dense = []
    for row in live:
        denom = math.lcm(*(c.denominator for c in row.terms.values()))
        entries = [0] * len(columns)
        for mono, c in row.terms.items():
            entries[col_of[mono]] = int(c * denom)
        dense.append(entries)
    return _bareiss_rank(dense)


def _minor(table: VariableTable, n: int, rows: Sequence[int],
           cols: Sequence[int]) -> SparsePolynomial:
    size = len(rows)
    terms = []
    for perm in itertools.permutations(range(size)):
        mono = Monomial(((rows[i] * n + cols[perm[i]], 1) for i in range(size)))
        terms.append((mono, _permutation_sign(perm)))
    return SparsePolynomial(table, terms)


def leading_monomials_of_minors(n: int, k: int) -> MonomialSet:
    """Graded-lex leading monomials of all (n-k)-minors, restricted to the
    diagonal/superdiagonal variables, deduplicated.

    Each minor is expanded symbolically and its leading term compared
    against its principal-diagonal product, so the diagonal convention is
    asserted rather than assumed.
    """
    if n > 7:
        raise BudgetExceededError(f"minor enumeration refuses n={n} (cap 7)")
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    table = VariableTable.matrix(n)
    size = n - k
    allowed = {s * n + s for s in range(n)} | {s * n + s + 1 for s in range(n - 1)}
    found: set[Monomial] = set()
    for rows in itertools.combinations(range(n), size):
        for cols in itertools.combinations(range(n), size):
            lead = _minor(table, n, rows, cols).leading_monomial()
            diagonal = Monomial(((rows[i] * n + cols[i], 1) for i in range(size)))
            if lead != diagonal:
                raise AssertionError("minor leading monomial is not its principal diagonal")
            if all(i in allowed for i, _ in lead.exps):
                found.add(lead)
    return MonomialSet(degree=size, table=table, monomials=tuple(sorted(found, reverse=True)))


def monomial_ideal_component(members: MonomialSet, tau: int, nvars: int) -> int:
    """Count degree-(d+tau) monomials over `nvars` variables divisible by at
    least one member; pure enumeration with divisibility tests."""
    if tau < 0 or nvars < 1:
        raise ValueError("need tau >= 0 and nvars >= 1")
    if not members.monomials:
        return 0
    degree = members.degree + tau
    total = math.comb(nvars + degree - 1, degree)
    if total > MAX_ENUMERATION:
        raise BudgetExceededError(
            f"enumeration of {total} monomials refused (cap {MAX_ENUMERATION})")
    top = max((i for m in members.monomials for i, _ in m.exps), default=-1)
    if top >= nvars:
        raise ValueError("member monomials exceed the given variable count")
    dense_members = [m.to_dense(nvars) for m in members.monomials]
    count = 0
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        if any(all(e >= g for e, g in zip(exps, member)) for member in dense_members):
            count += 1
    return count
