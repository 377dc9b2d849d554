"""Exact sparse multivariate polynomials over named variable tables.

Coefficients are `fractions.Fraction` and monomials are sparse integer
exponent vectors, so every operation here is exact; no floating point
enters any code path.  Monomials are ordered graded-lexicographically with
the table's *first* variable ranked largest, which makes the main-diagonal
product the leading monomial of a determinant -- the convention the minor
enumeration in `spd.oracle` relies on.

A `VariableTable` fixes the ambient coordinate system.  A polynomial may
touch only a few of the table's variables (its *active* set).  Inert filler
variables (named ``z_i``) let a small polynomial family sit inside a larger
ambient space; they never carry exponents but count toward shifted
dimension enumeration, mirroring a low-rank specialization living inside
the full matrix space.

Polynomials, monomials, tables and substitutions are immutable values
after construction: all operations return fresh objects, so sharing them
across threads for concurrent reads is safe.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering


def _coeff(value: int | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class VariableTable:
    """Ordered set of ambient variables; earlier names rank higher."""

    names: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        if not names:
            raise ValueError("a variable table needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    @classmethod
    def matrix(cls, n: int) -> "VariableTable":
        """The n x n grid x_s_t in row-major order, x_1_1 ranked largest."""
        if n < 1:
            raise ValueError("matrix table needs n >= 1")
        return cls(tuple(f"x_{s}_{t}" for s in range(1, n + 1) for t in range(1, n + 1)))

    @classmethod
    def permanent(cls, m: int) -> "VariableTable":
        """The m x m grid y_i_j in row-major order."""
        if m < 1:
            raise ValueError("permanent table needs m >= 1")
        return cls(tuple(f"y_{i}_{j}" for i in range(1, m + 1) for j in range(1, m + 1)))

    @classmethod
    def padded(cls, m: int, n: int) -> "VariableTable":
        """y grid plus the padding variable l, filled out to an n^2-dim ambient space."""
        if not 1 <= m < n:
            raise ValueError("padded table needs 1 <= m < n")
        names = [f"y_{i}_{j}" for i in range(1, m + 1) for j in range(1, m + 1)]
        names.append("l")
        names.extend(f"z_{i}" for i in range(1, n * n - len(names) + 1))
        return cls(tuple(names))

    @classmethod
    def two_powers(cls, n: int) -> "VariableTable":
        """l1 and l2 plus inert fillers, an n^2-dim ambient space."""
        if n < 2:
            raise ValueError("two-powers table needs n >= 2")
        names = ["l1", "l2"]
        names.extend(f"z_{i}" for i in range(1, n * n - 1))
        return cls(tuple(names))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)


@total_ordering
class Monomial:
    """Sparse exponent vector, graded-lex ordered (lower variable index = larger).

    Exponents are stored as index-sorted ``(variable index, exponent)`` pairs
    with no zero entries, so equal monomials share one canonical form.
    """

    __slots__ = ("exps", "degree", "_hash")

    def __init__(self, exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        pairs = []
        for idx, e in items:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            if e:
                pairs.append((int(idx), int(e)))
        pairs.sort()
        for (i, _), (j, _) in zip(pairs, pairs[1:]):
            if i == j:
                raise ValueError(f"duplicate variable index {i}")
        object.__setattr__(self, "exps", tuple(pairs))
        object.__setattr__(self, "degree", sum(e for _, e in pairs))
        object.__setattr__(self, "_hash", hash(self.exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def single(cls, index: int, exponent: int = 1) -> "Monomial":
        return cls(((index, exponent),))

    def exponent(self, index: int) -> int:
        for i, e in self.exps:
            if i == index:
                return e
            if i > index:
                break
        return 0

    def variables(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exps)
        for i, e in other.exps:
            merged[i] = merged.get(i, 0) + e
        return Monomial(merged)

    def divides(self, other: "Monomial") -> bool:
        """True iff every exponent of self is <= the matching exponent of other."""
        it = iter(other.exps)
        for i, e in self.exps:
            for j, f in it:
                if j == i:
                    if f < e:
                        return False
                    break
                if j > i:
                    return False
            else:
                return False
        return True

    def to_dense(self, nvars: int) -> tuple[int, ...]:
        dense = [0] * nvars
        for i, e in self.exps:
            dense[i] = e
        return tuple(dense)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.degree != other.degree:
            return self.degree < other.degree
        # Equal degree: lexicographic, earlier index = bigger variable.
        for (i1, e1), (i2, e2) in zip(self.exps, other.exps):
            if i1 != i2:
                # Whoever has a positive exponent on the bigger variable wins.
                return i1 > i2
            if e1 != e2:
                return e1 < e2
        return False  # identical (equal degrees force equal lengths here)

    def __repr__(self) -> str:
        if not self.exps:
            return "Monomial(1)"
        body = " ".join(f"v{i}^{e}" if e > 1 else f"v{i}" for i, e in self.exps)
        return f"Monomial({body})"


#: The empty monomial (degree 0).
ONE = Monomial()


class SparsePolynomial:
    """Exact sparse polynomial over a fixed `VariableTable`.

    Stored as ``{Monomial: Fraction}`` with no zero coefficients; the zero
    polynomial is the empty map.  Instances are immutable by convention:
    nothing in this package mutates `terms` after construction.
    """

    __slots__ = ("table", "terms")
    __hash__ = None  # mutable dict inside; identity-hash would be a trap

    def __init__(self, table: VariableTable,
                 terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, int | Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        nvars = len(table)
        for mono, c in items:
            c = _coeff(c)
            if not c:
                continue
            if mono.exps and mono.exps[-1][0] >= nvars:
                raise ValueError(f"monomial {mono!r} exceeds table of size {nvars}")
            prev = clean.get(mono)
            c = c if prev is None else prev + c
            if c:
                clean[mono] = c
            elif prev is not None:
                del clean[mono]
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, table: VariableTable) -> "SparsePolynomial":
        return cls(table)

    @classmethod
    def constant(cls, table: VariableTable, value: int | Fraction) -> "SparsePolynomial":
        return cls(table, ((ONE, value),))

    @classmethod
    def variable(cls, table: VariableTable, name: str) -> "SparsePolynomial":
        return cls(table, ((Monomial.single(table.index(name)), 1),))

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(m.degree for m in self.terms)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if zero or inhomogeneous."""
        degs = {m.degree for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def active_variables(self) -> tuple[int, ...]:
        """Indices of variables that occur with positive exponent somewhere."""
        seen: set[int] = set()
        for mono in self.terms:
            seen.update(i for i, _ in mono.exps)
        return tuple(sorted(seen))

    def leading_term(self) -> tuple[Monomial, Fraction] | None:
        """Graded-lex largest term, or None for zero."""
        if not self.terms:
            return None
        mono = max(self.terms)
        return mono, self.terms[mono]

    def leading_monomial(self) -> Monomial | None:
        lt = self.leading_term()
        return None if lt is None else lt[0]

    # -- arithmetic ---------------------------------------------------

    def _require_same_table(self, other: "SparsePolynomial") -> None:
        if self.table.names != other.table.names:
            raise ValueError("polynomials live over incompatible variable tables")

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._require_same_table(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return SparsePolynomial(self.table, out)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def scale(self, value: int | Fraction) -> "SparsePolynomial":
        c = _coeff(value)
        if not c:
            return SparsePolynomial(self.table)
        return SparsePolynomial(self.table, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._require_same_table(other)
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = ma * mb
                s = out.get(mono, Fraction(0)) + ca * cb
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return SparsePolynomial(self.table, out)

    def mul_monomial(self, mono: Monomial, coeff: int | Fraction = 1) -> "SparsePolynomial":
        """Fast path for multiplying by a single term."""
        c = _coeff(coeff)
        if not c:
            return SparsePolynomial(self.table)
        return SparsePolynomial(self.table, {m * mono: v * c for m, v in self.terms.items()})

    def differentiate(self, operator: Monomial) -> "SparsePolynomial":
        """Apply the higher-order partial derivative with exponent pattern `operator`.

        Plain derivatives (falling-factorial multiplicities), so degree drops
        by exactly deg(operator) on every surviving term.  The zero polynomial
        is a valid result when every term is annihilated.
        """
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            factor = 1
            new = dict(mono.exps)
            for i, d in operator.exps:
                e = new.get(i, 0)
                if e < d:
                    factor = 0
                    break
                for step in range(d):
                    factor *= e - step
                if e == d:
                    del new[i]
                else:
                    new[i] = e - d
            if not factor:
                continue
            target = Monomial(new)
            s = out.get(target, Fraction(0)) + c * factor
            if s:
                out[target] = s
            else:
                del out[target]
        return SparsePolynomial(self.table, out)

    def evaluate(self, values: Sequence[int | Fraction]) -> Fraction:
        """Evaluate at a point given as one value per table variable."""
        if len(values) != len(self.table):
            raise ValueError("need exactly one value per variable")
        vals = [_coeff(v) for v in values]
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for i, e in mono.exps:
                term *= vals[i] ** e
            total += term
        return total

    def substitute(self, sub: "Substitution") -> "SparsePolynomial":
        return sub.apply(self)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparsePolynomial)
                and self.table.names == other.table.names
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"SparsePolynomial({len(self.terms)} terms, degree {self.degree()})"


class Substitution:
    """A linear specialization of variables: source variable -> degree <= 1 image.

    With source and target of equal dimension this realizes an endomorphism
    of the ambient space; applying it can only shrink derivative spans, which
    is what makes flattening ranks monotone under specialization.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source: VariableTable, target: VariableTable,
                 images: Sequence[SparsePolynomial]):
        if len(images) != len(source):
            raise ValueError("need exactly one image per source variable")
        for img in images:
            if img.table.names != target.names:
                raise ValueError("substitution image lives over the wrong table")
            d = img.degree()
            if d is not None and d > 1:
                raise ValueError("substitution image of inconsistent degree (> 1) rejected")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", tuple(images))

    def __setattr__(self, name, value):
        raise AttributeError("Substitution is immutable")

    @classmethod
    def identity(cls, table: VariableTable) -> "Substitution":
        return cls(table, table,
                   [SparsePolynomial.variable(table, name) for name in table.names])

    @classmethod
    def from_map(cls, source: VariableTable, target: VariableTable,
                 mapping: Mapping[str, SparsePolynomial | str | int]) -> "Substitution":
        """Build a substitution from a name->image map; unnamed variables go to zero.

        Images may be polynomials over the target table, target variable
        names, or integer constants (0 being the common case).
        """
        zero = SparsePolynomial.zero(target)
        images = []
        for name in source.names:
            img = mapping.get(name, 0)
            if isinstance(img, SparsePolynomial):
                pass
            elif isinstance(img, str):
                img = SparsePolynomial.variable(target, img)
            elif isinstance(img, int):
                img = zero if img == 0 else SparsePolynomial.constant(target, img)
            else:
                raise TypeError(f"unsupported image for {name!r}")
            images.append(img)
        return cls(source, target, images)

    def image_of(self, name: str) -> SparsePolynomial:
        return self.images[self.source.index(name)]

    def is_linear(self) -> bool:
        """True when every nonzero image is homogeneous of degree exactly 1."""
        return all(img.is_zero() or img.homogeneous_degree() == 1 for img in self.images)

    def apply(self, poly: SparsePolynomial) -> SparsePolynomial:
        """Substitute every variable of `poly`, expanding and collecting exactly."""
        if poly.table.names != self.source.names:
            raise ValueError("polynomial does not live over the substitution's source table")
        one = SparsePolynomial.constant(self.target, 1)
        powers: dict[tuple[int, int], SparsePolynomial] = {}

        def power(i: int, e: int) -> SparsePolynomial:
            key = (i, e)
            got = powers.get(key)
            if got is None:
                got = one
                for _ in range(e):
                    got = got * self.images[i]
                powers[key] = got
            return got

        total: dict[Monomial, Fraction] = {}
        for mono, c in poly.terms.items():
            piece = SparsePolynomial.constant(self.target, c)
            for i, e in mono.exps:
                if piece.is_zero():
                    break
                piece = piece * power(i, e)
            for m, v in piece.terms.items():
                s = total.get(m, Fraction(0)) + v
                if s:
                    total[m] = s
                else:
                    total.pop(m, None)
        return SparsePolynomial(self.target, total)

    def and_then(self, outer: "Substitution") -> "Substitution":
        """Composite substitution: apply self first, then `outer`."""
        if self.target.names != outer.source.names:
            raise ValueError("substitutions do not compose: table mismatch")
        return Substitution(self.source, outer.target,
                            [outer.apply(img) for img in self.images])

    def __repr__(self) -> str:
        return f"Substitution({len(self.source)} -> {len(self.target)} variables)"


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def make_determinant(n: int) -> SparsePolynomial:
    """det_n over the n x n matrix table: n! signed terms, homogeneous of degree n."""
    if n < 1:
        raise ValueError("determinant needs n >= 1")
    table = VariableTable.matrix(n)
    terms = []
    for perm in itertools.permutations(range(n)):
        mono = Monomial(((s * n + perm[s], 1) for s in range(n)))
        terms.append((mono, _permutation_sign(perm)))
    return SparsePolynomial(table, terms)


def make_permanent(m: int) -> SparsePolynomial:
    """perm_m over the m x m permanent table: m! terms, all coefficients +1."""
    if m < 1:
        raise ValueError("permanent needs m >= 1")
    table = VariableTable.permanent(m)
    terms = []
    for perm in itertools.permutations(range(m)):
        mono = Monomial(((i * m + perm[i], 1) for i in range(m)))
        terms.append((mono, 1))
    return SparsePolynomial(table, terms)


def make_padded_permanent(m: int, n: int) -> SparsePolynomial:
    """l^(n-m) * perm_m, degree n, living in an n^2-dimensional ambient table."""
    if n <= m:
        raise ValueError("padding needs n > m")
    table = VariableTable.padded(m, n)
    l_index = table.index("l")
    pad = ((l_index, n - m),)
    terms = []
    for perm in itertools.permutations(range(m)):
        mono = Monomial(tuple((i * m + perm[i], 1) for i in range(m)) + pad)
        terms.append((mono, 1))
    return SparsePolynomial(table, terms)
