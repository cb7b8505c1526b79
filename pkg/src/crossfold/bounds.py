"""Closed-form crossing-number bounds for Q_n and FQ_n.

Rational formulas are exact (``int`` / ``Fraction``).  The FQ_n lower bound
with the sqrt(2/pi) constant is irrational; it is evaluated at high
precision and returned as the largest double not above the true value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Context, Decimal
from fractions import Fraction

import mpmath

from .combinatorics import binomial
from .folded_upper import fq_upper_formula
from .routing import Inequality1Audit, audit_inequality_1, class_formula

__all__ = [
    "binomial", "audit_inequality_2", "kn_crossing_lower", "multigraph_factor",
    "leighton_bound", "fq_lower_paper", "fq_lower_assembled", "qn_upper_conjecture",
    "qn_lower_sv", "bipartite_euler_lb", "bound_report", "BoundReport",
]

INEQ2_RTOL = 1e-12


def central_binomial(n: int) -> int:
    return binomial(n, n // 2)


def central_binomial_lower(n: int) -> float:
    """sqrt(2/pi) 2^n / sqrt(2 floor(n/2) + 1), in double precision."""
    return math.sqrt(2 / math.pi) * 2.0 ** n / math.sqrt(2 * (n // 2) + 1)


@dataclass(frozen=True)
class Inequality2Audit:
    n: int
    holds: bool
    lhs: int
    rhs: float


def audit_inequality_2(n: int) -> Inequality2Audit:
    """C(n, floor(n/2)) against sqrt(2/pi) 2^n / sqrt(2 floor(n/2) + 1)."""
    if n < 1:
        raise ValueError(n)
    lhs = central_binomial(n)
    rhs = central_binomial_lower(n)
    return Inequality2Audit(n, lhs >= rhs * (1 - INEQ2_RTOL), lhs, rhs)


def kn_crossing_lower(m: int) -> Fraction:
    """m(m-1)(m-2)(m-3)/80, not floored."""
    if m < 1:
        raise ValueError(m)
    return Fraction(m * (m - 1) * (m - 2) * (m - 3), 80)


def multigraph_factor(x: Fraction | int) -> Fraction:
    """Doubling every edge multiplies crossings by four."""
    if x < 0:
        raise ValueError(x)
    return 4 * Fraction(x)


def leighton_bound(cr1: Fraction | int, cg: int, v2: int, delta: int) -> Fraction:
    """cr1 / cg^2 - (v2 / 2) delta^2."""
    if cg < 1:
        raise ValueError("congestion must be positive")
    if v2 < 1 or delta < 0:
        raise ValueError("need v2 >= 1 and delta >= 0")
    return Fraction(cr1) / (cg * cg) - Fraction(v2, 2) * delta * delta


def _round_down(x: mpmath.mpf) -> float:
    f = float(x)
    if mpmath.mpf(f) > x:
        f = math.nextafter(f, -math.inf)
    return f


def fq_lower_paper_mp(n: int, dps: int = 50) -> mpmath.mpf:
    """4^n / (20 (1 - sqrt(2/pi) / sqrt(2 floor(n/2) + 1))^2) - (n^2 + 2n + 4) 2^(n-1)."""
    if n < 1:
        raise ValueError(n)
    with mpmath.workdps(dps):
        shrink = 1 - mpmath.sqrt(2 / mpmath.pi) / mpmath.sqrt(2 * (n // 2) + 1)
        main = mpmath.mpf(4) ** n / (20 * shrink ** 2)
        return main - (n * n + 2 * n + 4) * mpmath.mpf(2) ** (n - 1)


def fq_lower_paper(n: int) -> float:
    """The closed-form lower bound on cr(FQ_n), rounded toward -inf; may be negative."""
    with mpmath.workdps(50):
        return _round_down(fq_lower_paper_mp(n))


def fq_lower_assembled(n: int, cg: int) -> Fraction:
    """Leighton's inequality for 2K_{2^n} -> FQ_n with congestion ``cg``, exactly."""
    if n < 2:
        raise ValueError(n)
    if cg <= 0:
        raise ValueError("congestion must be positive")
    cr1 = multigraph_factor(kn_crossing_lower(1 << n))
    return leighton_bound(cr1, cg, 1 << n, n + 1)


def qn_upper_conjecture(n: int) -> int:
    """(5/32) 4^n - floor((n^2 + 1)/2) 2^(n-2), integral for n >= 3."""
    if n < 3:
        raise ValueError(f"needs n >= 3, got {n}")
    value = Fraction(5 * 4 ** n, 32) - ((n * n + 1) // 2) * Fraction(2) ** (n - 2)
    assert value.denominator == 1
    return int(value)


def qn_lower_sv(n: int) -> Fraction:
    """4^n / 20 - (n^2 + 1) 2^(n-1)."""
    if n < 1:
        raise ValueError(n)
    return Fraction(4 ** n, 20) - (n * n + 1) * Fraction(2) ** (n - 1)


def bipartite_euler_lb(v: int, e: int) -> int:
    """Crossing lower bound for a triangle-free graph: max(0, e - 2v + 4)."""
    if v < 3:
        raise ValueError("needs v >= 3")
    return max(0, e - 2 * v + 4)


SMALL_CASE_EXACT = {2: 0, 3: 4}


@dataclass(frozen=True)
class BoundReport:
    n: int
    upper_fq: int | None
    lower_fq_paper: float
    lower_fq_assembled: Fraction
    congestion: int
    qn_upper_conj: int | None
    qn_lower_sv: Fraction
    inequality_1: Inequality1Audit
    inequality_2: Inequality2Audit
    small_case_exact: int | None

    @property
    def consistent(self) -> bool:
        """Every positive lower bound stays below the upper bound."""
        if self.upper_fq is None:
            return True
        return all(lo <= self.upper_fq for lo in (self.lower_fq_assembled, self.lower_fq_paper)
                   if lo > 0)

    def to_json(self) -> dict:
        def opt(x):
            return None if x is None else str(x)

        return {
            "n": self.n,
            "upper_fq": opt(self.upper_fq),
            "small_case_exact": opt(self.small_case_exact),
            "lower_fq_paper": real_json(self.lower_fq_paper),
            "lower_fq_assembled": rat_json(self.lower_fq_assembled),
            "congestion": str(self.congestion),
            "qn_upper_conj": opt(self.qn_upper_conj),
            "qn_lower_sv": rat_json(self.qn_lower_sv),
            "audits": {
                "inequality_1": {
                    "holds": self.inequality_1.holds,
                    "max_measured": str(self.inequality_1.max_measured),
                    "bound": str(self.inequality_1.bound),
                    "source": self.inequality_1.source,
                },
                "inequality_2": {
                    "holds": self.inequality_2.holds,
                    "lhs": str(self.inequality_2.lhs),
                    "rhs": real_json(self.inequality_2.rhs, rounding="nearest"),
                },
            },
        }


def rat_json(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def real_json(x: float, rounding: str = "floor") -> dict:
    """15 significant digits; ``floor`` rounds toward -inf so lower bounds stay valid."""
    ctx = Context(prec=15, rounding=ROUND_FLOOR) if rounding == "floor" else Context(prec=15)
    return {"value": str(ctx.plus(Decimal(x))), "rounding": rounding}


def bound_report(n: int) -> BoundReport:
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    cg = max(class_formula(n, "dim0"), class_formula(n, "dimt"))
    return BoundReport(
        n=n,
        upper_fq=fq_upper_formula(n) if n >= 3 else None,
        lower_fq_paper=fq_lower_paper(n),
        lower_fq_assembled=fq_lower_assembled(n, cg),
        congestion=cg,
        qn_upper_conj=qn_upper_conjecture(n) if n >= 3 else None,
        qn_lower_sv=qn_lower_sv(n),
        inequality_1=audit_inequality_1(n),
        inequality_2=audit_inequality_2(n),
        small_case_exact=SMALL_CASE_EXACT.get(n),
    )
