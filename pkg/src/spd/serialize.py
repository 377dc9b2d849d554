"""Wire formats for polynomials and substitutions.

Two formats mirror each other:

* text -- one term per line, ``coeff * var^e [* var^e ...]``, terms in
  descending graded-lex order; the zero polynomial is the single line ``0``.
  Variables are named ``x_s_t``, ``y_i_j``, ``l``, ``l1``, ``l2`` (plus
  inert fillers ``z_i``).  Parsing without an explicit table infers the
  smallest table containing the names that occur, so inert ambient
  variables are not preserved; pass ``table=`` to round-trip exactly.
* JSON -- the same structure with an exponent map per term plus the full
  variable list, so ambient dimension round-trips exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Monomial, SparsePolynomial, Substitution, VariableTable

_VAR_RE = re.compile(r"^(x|y)_(\d+)_(\d+)$|^(l[12]?)$|^(z)_(\d+)$")


def format_term(table: VariableTable, mono: Monomial, coeff: Fraction) -> str:
    parts = [str(coeff)]
    parts.extend(f"{table.names[i]}^{e}" for i, e in mono.exps)
    return " * ".join(parts)


def poly_to_text(poly: SparsePolynomial) -> str:
    if poly.is_zero():
        return "0\n"
    lines = [format_term(poly.table, mono, poly.terms[mono])
             for mono in sorted(poly.terms, reverse=True)]
    return "\n".join(lines) + "\n"


def infer_table(names: set[str]) -> VariableTable:
    """Smallest constructor-style table covering the given variable names."""
    nx = my = nz = 0
    flags = {"l": False, "l1": False, "l2": False}
    for name in names:
        m = _VAR_RE.match(name)
        if not m:
            raise ValueError(f"unrecognized variable name {name!r}")
        if m.group(1) == "x":
            nx = max(nx, int(m.group(2)), int(m.group(3)))
        elif m.group(1) == "y":
            my = max(my, int(m.group(2)), int(m.group(3)))
        elif m.group(4):
            flags[m.group(4)] = True
        else:
            nz = max(nz, int(m.group(6)))
    ordered = [f"x_{s}_{t}" for s in range(1, nx + 1) for t in range(1, nx + 1)]
    ordered += [f"y_{i}_{j}" for i in range(1, my + 1) for j in range(1, my + 1)]
    ordered += [name for name in ("l", "l1", "l2") if flags[name]]
    ordered += [f"z_{i}" for i in range(1, nz + 1)]
    if not ordered:
        raise ValueError("cannot infer a variable table from an empty name set")
    return VariableTable(tuple(ordered))


def poly_from_text(text: str, table: VariableTable | None = None) -> SparsePolynomial:
    raw_terms: list[tuple[list[tuple[str, int]], Fraction]] = []
    names: set[str] = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line == "0":
            continue
        pieces = [p.strip() for p in line.split("*")]
        coeff = Fraction(pieces[0])
        exps: list[tuple[str, int]] = []
        for piece in pieces[1:]:
            if "^" in piece:
                name, _, e = piece.partition("^")
                exps.append((name.strip(), int(e)))
            else:
                exps.append((piece, 1))
        names.update(name for name, _ in exps)
        raw_terms.append((exps, coeff))
    if table is None:
        if not names:
            raise ValueError("cannot infer a table for the zero polynomial; pass table=")
        table = infer_table(names)
    terms = []
    for exps, coeff in raw_terms:
        counts: dict[int, int] = {}
        for name, e in exps:
            idx = table.index(name)
            counts[idx] = counts.get(idx, 0) + e
        terms.append((Monomial(counts), coeff))
    return SparsePolynomial(table, terms)


def poly_to_json_dict(poly: SparsePolynomial) -> dict:
    return {
        "variables": list(poly.table.names),
        "homogeneous_degree": poly.homogeneous_degree(),
        "terms": [
            {
                "coefficient": str(poly.terms[mono]),
                "exponents": {poly.table.names[i]: e for i, e in mono.exps},
            }
            for mono in sorted(poly.terms, reverse=True)
        ],
    }


def poly_from_json_dict(data: dict) -> SparsePolynomial:
    table = VariableTable(tuple(data["variables"]))
    terms = []
    for entry in data["terms"]:
        counts = {table.index(name): e for name, e in entry["exponents"].items()}
        terms.append((Monomial(counts), Fraction(entry["coefficient"])))
    return SparsePolynomial(table, terms)


def substitution_to_json_dict(sub: Substitution) -> dict:
    images = {}
    for name in sub.source.names:
        img = sub.image_of(name)
        images[name] = [format_term(sub.target, mono, img.terms[mono])
                        for mono in sorted(img.terms, reverse=True)]
    return {
        "source_variables": list(sub.source.names),
        "target_variables": list(sub.target.names),
        "images": images,
    }
