"""Four-regime classification and exact verdicts for flattening-dimension
comparisons between determinant degenerations and padded permanents.

An instance (m, n, k, tau) is classified into the overlapping regimes

* C1: k above n - n/(m+1) -- the block degeneration's partial span already
  contains every polynomial of the relevant degree in the active variables;
* C2: 2m <= k <= n - 2m -- the determinant's k-minor count beats the full
  degree-m component, and minimal-growth transfer carries the comparison to
  every shift;
* C3: k < 2m with large tau (boundary included) -- the two-powers ideal
  dimension beats the padded cap;
* C4: k < 2m with tau below 6n^3/m -- the minor-monomial floor beats the
  syzygy-free padded cap.

Each applicable regime's decisive comparison is evaluated exactly when the
numbers stay printable, otherwise with certified log intervals at doubling
precision; an overlap at the precision cap yields an honest "unresolved",
never a coerced boolean.  Reports serialize deterministically: identical
inputs give byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import bounds
from .bounds import BigQuantity, compare_quantities, PREC_CAP, PREC_START

CASE_IDS = ("C1", "C2", "C3", "C4")

VERDICT_CONFIRMED = "separation-fails-confirmed"
VERDICT_UNRESOLVED = "inequality-unresolved"
VERDICT_OUT_OF_REGIME = "out-of-regime"


def _validate_instance(m: int, n: int, k: int, tau: int) -> None:
    if m < 1:
        raise ValueError("need m >= 1")
    if n <= m:
        raise ValueError("need n > m (padding undefined otherwise)")
    if not 0 <= k < n:
        raise ValueError("need 0 <= k < n")
    if tau < 0:
        raise ValueError("need tau >= 0")


def classify(m: int, n: int, k: int, tau: int) -> list[str]:
    """All regimes whose defining parameter inequalities hold (they overlap).

    C3's threshold is taken boundary-inclusive (2*tau >= 3*n^2*m): the
    decisive inequality is evaluated anyway, and the published strict
    threshold would otherwise exclude the exact boundary instances.
    """
    _validate_instance(m, n, k, tau)
    cases = []
    if (m + 1) * k > n * m:
        cases.append("C1")
    if 2 * m <= k <= n - 2 * m:
        cases.append("C2")
    if k < 2 * m and 2 * tau >= 3 * n * n * m:
        cases.append("C3")
    if k < 2 * m and tau * m < 6 * n ** 3:
        cases.append("C4")
    return cases


@dataclass(frozen=True)
class CaseRecord:
    """Outcome of one regime's decisive comparison at one instance."""

    case_id: str
    lhs: BigQuantity
    rhs: BigQuantity
    relation: str
    holds: bool | None
    mode: str
    prec: int | None = None
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "id": self.case_id,
            "lhs": self.lhs.to_json_dict(),
            "rhs": self.rhs.to_json_dict(),
            "relation": self.relation,
            "holds": self.holds,
            "mode": self.mode,
            "prec": self.prec,
            "notes": list(self.notes),
        }


def _resolve(case_id: str, relation: str, lhs_fn, rhs_fn, mode: str,
             prec_cap: int, notes: tuple[str, ...]) -> CaseRecord:
    """Evaluate lhs vs rhs, escalating interval precision until it resolves."""
    if mode in ("auto", "exact"):
        lhs = lhs_fn(mode=mode, prec=PREC_START)
        rhs = rhs_fn(mode=mode, prec=PREC_START)
        if lhs.is_exact and rhs.is_exact:
            cmp = compare_quantities(lhs, rhs)
            holds = cmp == ">" if relation == ">" else cmp in (">", "=")
            return CaseRecord(case_id, lhs, rhs, relation, holds, "exact", None, notes)
    prec = PREC_START
    while prec <= prec_cap:
        lhs = lhs_fn(mode="interval", prec=prec)
        rhs = rhs_fn(mode="interval", prec=prec)
        cmp = compare_quantities(lhs, rhs, prec)
        if cmp != "unknown":
            holds = cmp == ">" if relation == ">" else cmp in (">", "=")
            return CaseRecord(case_id, lhs, rhs, relation, holds, "interval", prec, notes)
        prec *= 2
    return CaseRecord(case_id, lhs, rhs, relation, None, "interval", prec_cap,
                      notes + ("comparison unresolved at precision cap",))


def check_case(case_id: str, m: int, n: int, k: int, tau: int, *,
               mode: str = "auto", prec_cap: int = PREC_CAP) -> CaseRecord:
    """Evaluate one regime's decisive comparison; the regime must apply."""
    _validate_instance(m, n, k, tau)
    if case_id not in classify(m, n, k, tau):
        raise ValueError(f"{case_id} does not apply at (m={m}, n={n}, k={k}, tau={tau})")

    if case_id == "C1":
        ok = (m + 1) * (n - k) <= n
        dim = BigQuantity("full-active-component",
                          value=comb(m * m + n - k, n - k))
        regime = "strict" if (m + 1) * (n - k) < n else "boundary"
        notes = (
            f"structural containment: block layout admissible ((m+1)(n-k) <= n: {ok}, "
            f"{regime})",
            "degenerated determinant partials contain the full degree-(n-k) "
            "component of the active m^2+1 variables, which contains the padded side",
        )
        return CaseRecord("C1", dim, dim, relation="contains", holds=ok,
                          mode="structural", notes=notes)

    if case_id == "C2":
        notes = (
            f"minimal-growth transfer: det side >= C({n * n + tau + m - 1},{tau + m}) "
            f"at shift tau={tau}, the same count capping the padded side",
        )
        return _resolve(
            "C2", ">=",
            lambda mode, prec: bounds.det_partials_count(n, k, mode=mode, prec=prec),
            lambda mode, prec: bounds.full_degree_component(n * n, m, mode=mode, prec=prec),
            mode, prec_cap, notes)

    if case_id == "C3":
        if k >= n - m:
            return CaseRecord(
                "C3",
                bounds.two_power_ideal_dim(n, k, tau),
                BigQuantity("padded-ideal-upper", value=0),
                relation=">", holds=None, mode="invalid",
                notes=("padding cap needs k < n-m; instance outside its validity",))
        return _resolve(
            "C3", ">",
            lambda mode, prec: bounds.two_power_ideal_dim(n, k, tau, mode=mode, prec=prec),
            lambda mode, prec: bounds.padded_ideal_upper(n, m, k, tau, mode=mode, prec=prec),
            mode, prec_cap, _c3_notes(m, n, k, tau))

    if case_id == "C4":
        return _resolve(
            "C4", ">",
            lambda mode, prec: bounds.det_shifted_lower(n, k, tau, mode=mode, prec=prec),
            lambda mode, prec: bounds.perm_shifted_upper(n, m, k, tau, mode=mode, prec=prec),
            mode, prec_cap, _c4_notes(m, n, k, tau))

    raise ValueError(f"unknown case id {case_id!r}")


def _c3_notes(m: int, n: int, k: int, tau: int) -> tuple[str, ...]:
    delta = Fraction(tau, n * n * m)
    return (f"shift ratio delta = tau/(n^2 m) = {delta}",)


def _c4_notes(m: int, n: int, k: int, tau: int) -> tuple[str, ...]:
    notes = []
    if 2 * k >= m:
        notes.append("subcase k >= m/2 (partial sum capped by the central binomial)")
    else:
        sharp = bounds.perm_partials_upper(m, k).value < k * comb(m, k) ** 2
        notes.append(f"subcase k < m/2 (partial sum < k*C(m,k)^2: {sharp})")
    notes.append(f"published threshold tau < 6n^3/m: {tau * m < 6 * n ** 3}")
    notes.append(f"derivation threshold tau < n^3/(6m): {6 * m * tau < n ** 3}")
    if k == 0:
        notes.append("k = 0: both ideals are principal; the floor formula is "
                     "evaluated formally and is not a certified lower bound here")
    return tuple(notes)


@dataclass(frozen=True)
class CaseReport:
    """Verdict record for one instance: applicable cases and their outcomes."""

    m: int
    n: int
    k: int
    tau: int
    applicable: tuple[str, ...]
    records: tuple[CaseRecord, ...]
    verdict: str
    alarm: bool

    @property
    def t(self) -> int:
        return self.tau + self.n - self.k

    def record(self, case_id: str) -> CaseRecord | None:
        for rec in self.records:
            if rec.case_id == case_id:
                return rec
        return None

    def to_json_dict(self) -> dict:
        return {
            "inputs": {"m": self.m, "n": self.n, "k": self.k, "tau": self.tau},
            "derived": {
                "t": self.t,
                "epsilon": str(Fraction(self.k, self.m)),
                "delta": str(Fraction(self.tau, self.n * self.n * self.m)),
            },
            "applicable": list(self.applicable),
            "cases": [rec.to_json_dict() for rec in self.records],
            "verdict": self.verdict,
            "alarm": self.alarm,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def case_check(m: int, n: int, k: int, tau: int, *, mode: str = "auto",
               prec_cap: int = PREC_CAP) -> CaseReport:
    """Classify an instance and evaluate every applicable regime."""
    applicable = tuple(classify(m, n, k, tau))
    records = tuple(check_case(cid, m, n, k, tau, mode=mode, prec_cap=prec_cap)
                    for cid in applicable)
    if any(rec.holds for rec in records):
        verdict, alarm = VERDICT_CONFIRMED, False
    elif any(rec.holds is None for rec in records):
        verdict, alarm = VERDICT_UNRESOLVED, False
    else:
        # Applicable cases all resolved false (asymptotics not yet kicked
        # in), or nothing applies at all.
        verdict, alarm = VERDICT_OUT_OF_REGIME, bool(records)
    return CaseReport(m, n, k, tau, applicable, records, verdict, alarm)


@dataclass(frozen=True)
class CoverageResult:
    """Pure integer-inequality coverage of the (k, tau) parameter plane."""

    m: int
    n: int
    all_k_covered: bool
    uncovered_k: tuple[int, ...]
    tau_gap: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "all_k_covered": self.all_k_covered,
            "uncovered_k": list(self.uncovered_k),
            "tau_gap": list(self.tau_gap) if self.tau_gap else None,
        }


def coverage_check(m: int, n: int) -> CoverageResult:
    """Check that every k < n lands in C1 or C2, or (for k < 2m) that the
    C3/C4 tau ranges jointly cover every shift."""
    if m < 1 or n <= m:
        raise ValueError("need n > m >= 1")
    first_c3 = (6 * n ** 3 + m - 1) // m          # smallest tau outside C4
    last_not_c3 = (3 * n * n * m - 1) // 2        # largest tau below the C3 threshold
    tau_gap = (first_c3, last_not_c3) if first_c3 <= last_not_c3 else None
    uncovered = []
    for k in range(n):
        c1 = (m + 1) * k > n * m
        c2 = 2 * m <= k <= n - 2 * m
        low = k < 2 * m and tau_gap is None
        if not (c1 or c2 or low):
            uncovered.append(k)
    return CoverageResult(m, n, not uncovered, tuple(uncovered), tau_gap)


@dataclass(frozen=True)
class SweepResult:
    """Reports over a sampled (k, tau) grid plus alarm/coverage accounting."""

    m: int
    n: int
    in_regime: bool
    warning: str | None
    reports: tuple[CaseReport, ...]
    alarms: tuple[tuple[int, int], ...]
    unresolved: tuple[tuple[int, int], ...]
    uncovered: tuple[tuple[int, int], ...]

    @property
    def all_sampled_covered(self) -> bool:
        return not self.uncovered

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "in_regime": self.in_regime,
            "warning": self.warning,
            "reports": [r.to_json_dict() for r in self.reports],
            "alarms": [list(a) for a in self.alarms],
            "unresolved": [list(u) for u in self.unresolved],
            "uncovered": [list(u) for u in self.uncovered],
            "all_sampled_covered": self.all_sampled_covered,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def theorem_sweep(m: int, n: int, k_samples, tau_samples, *, mode: str = "auto",
                  prec_cap: int = PREC_CAP) -> SweepResult:
    """Classify and check every sampled (k, tau); flag any instance where no
    regime applies or every applicable comparison definitively fails."""
    in_regime = n > 2 * m * m + 2 * m
    warning = None if in_regime else (
        f"n={n} is not above 2m^2+2m={2 * m * m + 2 * m}; coverage of the "
        f"parameter plane is not guaranteed here")
    pairs = sorted({(int(k), int(tau)) for k in k_samples for tau in tau_samples})
    reports = []
    alarms = []
    unresolved = []
    uncovered = []
    for k, tau in pairs:
        report = case_check(m, n, k, tau, mode=mode, prec_cap=prec_cap)
        reports.append(report)
        if not report.applicable:
            uncovered.append((k, tau))
            if in_regime:
                alarms.append((k, tau))
        elif report.alarm:
            alarms.append((k, tau))
        elif report.verdict == VERDICT_UNRESOLVED:
            unresolved.append((k, tau))
    return SweepResult(m, n, in_regime, warning, tuple(reports), tuple(alarms),
                       tuple(unresolved), tuple(uncovered))
