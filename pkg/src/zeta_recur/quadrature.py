"""Adaptive Gauss-Kronrod quadrature plus the integrands it serves.

The scheme is the nested (G7, K15) pair on each subinterval, with
deterministic refinement: always bisect the subinterval with the largest
error estimate, ties broken by the leftmost.  Per-interval errors use the
standard Kronrod estimator ((200 |K-G| / resasc)^1.5 scaling) with a
two-epsilon-of-resabs floor so the reported estimate never claims better
than roundoff.  Convergence means the summed estimates fell below the
requested tolerance; running out of budget is reported, never raised.

Semi-infinite integrals of the Bose/Fermi-weight integrands are truncated
at a point X chosen from the analytic tail bound

    integral_X^inf x^(s-1) e^-x / (1 - e^-X) dx
        = GammaUpper(s, X) / (1 - e^-X),

which majorizes both integrand families; the bound is added to the
reported error estimate.

All functions are pure.  The only module state is the default evaluation
budget, intended to be set once at process start (see set_eval_budget).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "QuadratureResult",
    "Segment",
    "DEFAULT_EVAL_BUDGET",
    "set_eval_budget",
    "get_eval_budget",
    "bose_integrand",
    "fermi_integrand",
    "cot_kernel",
    "integrate_finite",
    "truncation_point",
    "tail_bound",
    "integrate_semi_infinite",
    "integrate_segment",
]

DEFAULT_EVAL_BUDGET = 1_000_000
_eval_budget = DEFAULT_EVAL_BUDGET

_EPS = 2.220446049250313e-16


def set_eval_budget(budget: int) -> None:
    """Override the default per-integral evaluation budget."""
    global _eval_budget
    if not isinstance(budget, int) or budget < 100:
        raise ValueError("evaluation budget must be an integer >= 100")
    _eval_budget = budget


def get_eval_budget() -> int:
    return _eval_budget


@dataclass(frozen=True)
class QuadratureResult:
    value: float | complex
    error_estimate: float
    evaluations: int
    converged: bool

    def __post_init__(self) -> None:
        if self.evaluations <= 0:
            raise ValueError("evaluations must be positive")
        if self.error_estimate < 0:
            raise ValueError("error estimate must be nonnegative")


@dataclass(frozen=True)
class Segment:
    """Directed straight segment in the complex plane."""

    start: complex
    end: complex

    def __post_init__(self) -> None:
        if self.start == self.end:
            raise ValueError("segment endpoints must differ")

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)


# ---------------------------------------------------------------------------
# integrands

def bose_integrand(x: float, s: int) -> float:
    """x^(s-1) / (e^x - 1), stable over the whole positive axis.

    Below x = 1 the denominator comes from expm1 (no cancellation); above,
    the equivalent form x^(s-1) e^-x / (1 - e^-x) avoids overflow for any x.
    """
    if s < 2:
        raise ValueError("bose_integrand requires s >= 2")
    if x <= 0.0:
        raise ValueError("bose_integrand requires x > 0")
    if x <= 1.0:
        return x ** (s - 1) / math.expm1(x)
    t = math.exp(-x)
    return x ** (s - 1) * t / (1.0 - t)


def fermi_integrand(x: float, s: int) -> float:
    """x^(s-1) / (e^x + 1); at x = 0 this is 1/2 for s = 1 and 0 for s >= 2."""
    if s < 1:
        raise ValueError("fermi_integrand requires s >= 1")
    if x < 0.0:
        raise ValueError("fermi_integrand requires x >= 0")
    t = math.exp(-x)
    return x ** (s - 1) * t / (1.0 + t)


def cot_kernel(y: float, s: int) -> float:
    """y^(s-1) * cot(y/2) on [0, pi], with the removable limit at y = 0.

    Near zero the product is evaluated from the Laurent series of cot to
    sidestep the 0 * inf form: y^(s-1) cot(y/2) = 2 y^(s-2) - y^s/6 - y^(s+2)/360 - ...
    """
    if s < 2:
        raise ValueError("cot_kernel requires s >= 2")
    if not 0.0 <= y <= math.pi:
        raise ValueError("cot_kernel domain is [0, pi]")
    if y == 0.0:
        return 2.0 if s == 2 else 0.0
    if y < 1e-4:
        return 2.0 * y ** (s - 2) - y**s / 6.0 - y ** (s + 2) / 360.0
    return y ** (s - 1) * math.cos(0.5 * y) / math.sin(0.5 * y)


def _cexpm1(z: complex) -> complex:
    """exp(z) - 1 without cancellation near z = 0."""
    if abs(z) >= 0.5:
        return cmath.exp(z) - 1.0
    term = z
    total = z
    k = 2
    while abs(term) > 1e-20 * abs(total):
        term *= z / k
        total += term
        k += 1
    return total


def _pole_ratio_integrand(z: complex, s: int) -> complex:
    """z^(s-1) / (e^z - 1) with the removable value at z = 0 (s >= 2)."""
    if z == 0:
        return complex(1.0) if s == 2 else complex(0.0)
    return z ** (s - 1) / _cexpm1(z)


# ---------------------------------------------------------------------------
# (G7, K15) pair; standard node/weight table

_GK15 = (
    # (node, gauss weight, kronrod weight)
    (+0.991455371120812639206854697526329, 0.0, 0.022935322010529224963732008058970),
    (-0.991455371120812639206854697526329, 0.0, 0.022935322010529224963732008058970),
    (+0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204),
    (-0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204),
    (+0.864864423359769072789712788640926, 0.0, 0.104790010322250183839876322541518),
    (-0.864864423359769072789712788640926, 0.0, 0.104790010322250183839876322541518),
    (+0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238),
    (-0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238),
    (+0.586087235467691130294144838258730, 0.0, 0.169004726639267902826583426598550),
    (-0.586087235467691130294144838258730, 0.0, 0.169004726639267902826583426598550),
    (+0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014),
    (-0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014),
    (+0.207784955007898467600689403773245, 0.0, 0.204432940075298892414161999234649),
    (-0.207784955007898467600689403773245, 0.0, 0.204432940075298892414161999234649),
    (0.0, 0.417959183673469387755102040816327, 0.209482141084727828012999174891714),
)


def _gk15(f, a: float, b: float):
    """One (G7, K15) application on [a, b]: (value, error_estimate, at_floor)."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    resg = 0.0
    resk = 0.0
    resabs = 0.0
    values = []
    for node, wg, wk in _GK15:
        fx = f(center + half * node)
        values.append((fx, wk))
        if wg:
            resg += wg * fx
        resk += wk * fx
        resabs += wk * abs(fx)
    mean = resk / 2.0
    resasc = 0.0
    for fx, wk in values:
        resasc += wk * abs(fx - mean)
    value = resk * half
    err = abs(resk - resg) * half
    resasc *= half
    resabs *= half
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    floor = 2.0 * _EPS * resabs
    if err < floor:
        return value, floor, True
    return value, err, False


def integrate_finite(f, a: float, b: float, tol: float, budget: int | None = None) -> QuadratureResult:
    """Adaptive integral of f over [a, b] to absolute tolerance tol.

    f may return float or complex; only interior points are ever evaluated.
    On budget exhaustion the best estimate is returned with converged=False.
    """
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise ValueError("integration bounds must be finite with a < b")
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    if budget is None:
        budget = _eval_budget

    value, err, at_floor = _gk15(f, a, b)
    intervals = [(a, b, value, err, at_floor)]
    evaluations = 15
    converged = True
    while True:
        total_err = math.fsum(item[3] for item in intervals)
        if total_err <= tol:
            break
        if evaluations + 30 > budget:
            converged = False
            break
        worst = 0
        for i in range(1, len(intervals)):
            wa, werr = intervals[worst][0], intervals[worst][3]
            ia, ierr = intervals[i][0], intervals[i][3]
            if ierr > werr or (ierr == werr and ia < wa):
                worst = i
        wa, wb = intervals[worst][0], intervals[worst][1]
        if intervals[worst][4]:
            # worst interval already reports its roundoff floor; bisection
            # conserves the floor sum, so no further progress is possible
            converged = False
            break
        mid = 0.5 * (wa + wb)
        if not wa < mid < wb:
            converged = False  # float exhaustion; cannot refine further
            break
        left = _gk15(f, wa, mid)
        right = _gk15(f, mid, wb)
        intervals[worst] = (wa, mid, *left)
        intervals.append((mid, wb, *right))
        evaluations += 30

    intervals.sort(key=lambda item: item[0])
    if any(isinstance(item[2], complex) for item in intervals):
        total = complex(
            math.fsum(item[2].real for item in intervals),
            math.fsum(item[2].imag for item in intervals),
        )
    else:
        total = math.fsum(item[2] for item in intervals)
    return QuadratureResult(total, total_err, evaluations, converged and total_err <= tol)


# ---------------------------------------------------------------------------
# semi-infinite integrals with analytic tail bound

def tail_bound(s: int, x: float) -> float:
    """Upper bound for the discarded tail of either integrand family beyond x.

    GammaUpper(s, x) = (s-1)! e^-x sum_{k<s} x^k/k! for integer s; dividing by
    (1 - e^-x) majorizes 1/(e^t - 1) for t >= x, and a fortiori 1/(e^t + 1).
    """
    if s < 1:
        raise ValueError("tail_bound requires s >= 1")
    if x <= 0.0:
        raise ValueError("tail_bound requires x > 0")
    expmx = math.exp(-x)
    partial = 0.0
    term = 1.0
    for k in range(s):
        if k:
            term *= x / k
        partial += term
    return math.factorial(s - 1) * expmx * partial / (1.0 - expmx)


def truncation_point(s: int, tail_tol: float) -> float:
    """Smallest scanned truncation point whose tail bound is below tail_tol."""
    x = 10.0
    while tail_bound(s, x) > tail_tol and x < 750.0:
        x += 5.0
    return x


def integrate_semi_infinite(f, s: int, tol: float, upper: float | None = None,
                            budget: int | None = None) -> QuadratureResult:
    """Integral of f over [0, inf) for integrands decaying like x^(s-1) e^-x.

    Truncates at a point X with tail bound <= tol/2, integrates [0, X] to
    tol/2, and reports quadrature estimate plus tail bound as the error.
    """
    if s < 1:
        raise ValueError("integrate_semi_infinite requires s >= 1")
    if not tol > 0.0:
        raise ValueError("tolerance must be positive")
    x_max = truncation_point(s, 0.5 * tol) if upper is None else float(upper)
    tail = tail_bound(s, x_max)
    base = integrate_finite(f, 0.0, x_max, 0.5 * tol, budget)
    err = base.error_estimate + tail
    return QuadratureResult(base.value, err, base.evaluations, base.converged and err <= tol)


# ---------------------------------------------------------------------------
# complex line integrals

_POLE_SPACING = 2.0 * math.pi
_POLE_CLEARANCE = 1e-9


def _segment_pole_distance(seg: Segment) -> float:
    """Distance from the segment to the nearest nonzero pole 2*pi*i*k."""
    top = max(abs(seg.start.imag), abs(seg.end.imag))
    k_max = int(top / _POLE_SPACING) + 2
    delta = seg.end - seg.start
    norm2 = abs(delta) ** 2
    best = math.inf
    for k in range(-k_max, k_max + 1):
        if k == 0:
            continue
        pole = complex(0.0, _POLE_SPACING * k)
        t = ((pole - seg.start).real * delta.real + (pole - seg.start).imag * delta.imag) / norm2
        t = min(1.0, max(0.0, t))
        best = min(best, abs(seg.start + t * delta - pole))
    return best


def integrate_segment(s: int, seg: Segment, tol: float, budget: int | None = None) -> QuadratureResult:
    """Line integral of z^(s-1)/(e^z - 1) along a straight segment.

    The parameterized integrand f(z(t)) * (end - start) is integrated over
    t in [0, 1], real and imaginary parts separately.  Segments passing
    within 1e-9 of a pole 2*pi*i*k (k != 0) are rejected; z = 0 is removable
    for s >= 2 and handled by the integrand's analytic limit.
    """
    if s < 2:
        raise ValueError("integrate_segment requires s >= 2")
    if _segment_pole_distance(seg) < _POLE_CLEARANCE:
        raise ValueError("segment passes through a pole of the integrand")
    delta = seg.end - seg.start

    def directed(t: float) -> complex:
        return _pole_ratio_integrand(seg.start + t * delta, s) * delta

    re_part = integrate_finite(lambda t: directed(t).real, 0.0, 1.0, 0.5 * tol, budget)
    im_part = integrate_finite(lambda t: directed(t).imag, 0.0, 1.0, 0.5 * tol, budget)
    return QuadratureResult(
        complex(re_part.value, im_part.value),
        re_part.error_estimate + im_part.error_estimate,
        re_part.evaluations + im_part.evaluations,
        re_part.converged and im_part.converged,
    )
