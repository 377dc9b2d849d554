"""Explicit linear specializations of the determinant used for rank experiments.

Two constructions are provided.  The block substitution tiles the matrix
diagonal with copies of a small y-grid followed by padding entries, so the
restricted determinant's derivative span swallows every polynomial of the
right degree in the y/l variables.  The two-powers substitution collapses
the determinant to a sum of two n-th powers of independent linear forms,
whose derivative ideal is a complete intersection with known component
dimensions.  Both land in an n^2-dimensional ambient table, so shifted
dimension counts match the full-space conventions of `spd.bounds`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import SparsePolynomial, Substitution, VariableTable, make_determinant


@dataclass(frozen=True)
class DegenerationSpec:
    """A named specialization: its parameters, the substitution realizing it,
    and bookkeeping about which parameter regime the instance sits in."""

    kind: str
    n: int
    m: int | None
    k: int | None
    substitution: Substitution
    regime: str | None = None
    sign_corrected: bool = False

    def image(self) -> SparsePolynomial:
        """The specialized determinant (recomputed; everything is pure)."""
        return self.substitution.apply(make_determinant(self.n))


def c1_block_substitution(n: int, m: int, k: int) -> DegenerationSpec:
    """Tile n-k diagonal m x m blocks with the y grid, pad the rest of the
    diagonal with l, zero elsewhere.

    Needs (m+1)(n-k) <= n so that at least n-k diagonal slots remain for l.
    The boundary case of equality is accepted and labelled; the strict case
    is the comfortable regime.  The restricted determinant's order-k partial
    span then contains every degree-(n-k) polynomial in the m^2+1 active
    variables.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    blocks = n - k
    used = (m + 1) * blocks
    if used > n:
        raise ValueError(
            f"block layout needs (m+1)*(n-k) <= n, got {m + 1}*{blocks} = {used} > {n}")
    source = VariableTable.matrix(n)
    target = VariableTable.padded(m, n)
    mapping: dict[str, str] = {}
    for b in range(blocks):
        base = b * m
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                mapping[f"x_{base + i}_{base + j}"] = f"y_{i}_{j}"
    for s in range(m * blocks + 1, n + 1):
        mapping[f"x_{s}_{s}"] = "l"
    sub = Substitution.from_map(source, target, mapping)
    return DegenerationSpec(kind="c1-block", n=n, m=m, k=k, substitution=sub,
                            regime="strict" if used < n else "boundary")


def c3_two_powers(n: int) -> DegenerationSpec:
    """Diagonal to l1, subdiagonal and the (1,n) corner to l2, zero elsewhere.

    Only the identity permutation and the full n-cycle survive, so the raw
    image is l1^n + (-1)^(n-1) l2^n; for even n one l2 entry is negated so
    the canonical output is exactly l1^n + l2^n.  Component dimensions are
    unaffected by the sign; the normalization is for test determinism.
    """
    if n < 2:
        raise ValueError("two-powers degeneration needs n >= 2")
    source = VariableTable.matrix(n)
    target = VariableTable.two_powers(n)
    l2 = SparsePolynomial.variable(target, "l2")
    corner = l2.scale(-1) if n % 2 == 0 else l2
    mapping: dict[str, SparsePolynomial | str] = {f"x_{s}_{s}": "l1" for s in range(1, n + 1)}
    for s in range(1, n):
        mapping[f"x_{s + 1}_{s}"] = "l2"
    mapping[f"x_1_{n}"] = corner
    sub = Substitution.from_map(source, target, mapping)
    return DegenerationSpec(kind="c3-two-powers", n=n, m=None, k=None,
                            substitution=sub, sign_corrected=(n % 2 == 0))
