"""Shared test helpers: random generators and small independent oracles."""

from __future__ import annotations

import random
from fractions import Fraction

from spd.poly import Monomial, SparsePolynomial, Substitution, VariableTable


def small_table(nvars: int) -> VariableTable:
    return VariableTable(tuple(f"z_{i}" for i in range(1, nvars + 1)))


def random_homogeneous(table: VariableTable, degree: int, nterms: int,
                       rng: random.Random) -> SparsePolynomial:
    nvars = len(table)
    terms = []
    for _ in range(nterms):
        counts: dict[int, int] = {}
        for _ in range(degree):
            i = rng.randrange(nvars)
            counts[i] = counts.get(i, 0) + 1
        terms.append((Monomial(counts), rng.randrange(-3, 4)))
    return SparsePolynomial(table, terms)


def random_endomorphism(table: VariableTable, rng: random.Random,
                        zero_weight: int = 3) -> Substitution:
    """A random (often singular) linear substitution of a table into itself."""
    nvars = len(table)
    choices = [0] * zero_weight + [1, -1, 2, -2]
    images = []
    for _ in range(nvars):
        terms = []
        for j in range(nvars):
            c = rng.choice(choices)
            if c:
                terms.append((Monomial.single(j), c))
        images.append(SparsePolynomial(table, terms))
    return Substitution(table, table, images)


def fraction_free_det(matrix: list[list[Fraction]]) -> Fraction:
    """Independent determinant: scale rows to integers, then Bareiss."""
    n = len(matrix)
    scale = Fraction(1)
    rows = []
    for row in matrix:
        denom = 1
        for value in row:
            denom = denom * value.denominator // __import__("math").gcd(denom, value.denominator)
        scale *= denom
        rows.append([int(v * denom) for v in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                rows[i][j] = (rows[i][j] * rows[c][c] - rows[i][c] * rows[c][j]) // prev
            rows[i][c] = 0
        prev = rows[c][c]
    return Fraction(sign * rows[n - 1][n - 1], 1) / scale


def naive_derivative(poly: SparsePolynomial, operator: Monomial) -> dict:
    """Term-by-term differentiation done independently of the engine."""
    out: dict[tuple, Fraction] = {}
    for mono, coeff in poly.terms.items():
        exps = dict(mono.exps)
        factor = 1
        dead = False
        for i, d in operator.exps:
            e = exps.get(i, 0)
            if e < d:
                dead = True
                break
            for step in range(d):
                factor *= e - step
            exps[i] = e - d
        if dead or factor == 0:
            continue
        key = tuple(sorted((i, e) for i, e in exps.items() if e))
        out[key] = out.get(key, Fraction(0)) + coeff * factor
    return {k: v for k, v in out.items() if v}
