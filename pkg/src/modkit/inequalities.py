"""Trace-inequality verifier kernel with an operator-monotone registry.

Implements numerical checks for the family of norm and trace inequalities
relating PSD matrices and positive functionals:

* the norm sandwich  ||X-Y||_HS^2 <= ||X^2-Y^2||_1 <= ||X-Y||_HS ||X+Y||_HS,
* Powers-Stormer     ||sqrt(A)-sqrt(B)||_2^2 <= ||A-B||_1,
* the s-family       2 Tr(B^s A^(1-s)) >= Tr(A + B - |A-B|), s in [0,1],
* its modular form   2 ||Delta^(s/2)_(phi2,phi1) Phi1||^2 >=
                     phi1(1) + phi2(1) - |phi1 - phi2|(1),
* the monotone form  2 Tr(sqrt(f(A)) g(B) sqrt(f(A))) >= Tr(A + B - |A-B|)
  for operator monotone f with g(t) = t/f(t), g(0) = 0,
* the Schatten form  ||A^(1/t) - B^(1/t)||_t^t <= ||A-B||_1 for A >= B >= 0,
  t >= 1.

Every check returns an :class:`InequalityReport`; pass/fail uses a relative
slack floor so trace-scale growth with dimension does not produce spurious
violations. The endpoint convention X^0 = support projection keeps the
s-family meaningful on singular inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BadExponent, NotPSD, OrderViolation, SingularState
from .linalg import (
    PSD_TOL,
    abs_hermitian,
    adjoint,
    as_matrix,
    check_psd,
    hs_norm,
    matrix_sqrt,
    psd_power,
    schatten_norm,
    spectral_decomposition,
    trace_norm,
)
from .modular import relative_modular_operator
from .sampling import random_psd
from .states import PositiveFunctional, functional_distance, is_faithful
from .vecops import vec

SLACK_RTOL = 1e-11
ROUTE_AGREEMENT_RTOL = 1e-10


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one inequality check.

    ``slack`` is signed so that the inequality holds iff slack >= 0 up to
    the relative floor: pass <=> slack >= -1e-11 * max(1, |lhs|, |rhs|).
    For the dual-route modular check, ``route_residual`` records the
    disagreement between the superoperator and trace evaluations of the
    left-hand side (None elsewhere).
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    passed: bool
    instance_seed: int | None = None
    route_residual: float | None = None


def _slack_floor(lhs: float, rhs: float) -> float:
    return SLACK_RTOL * max(1.0, abs(lhs), abs(rhs))


def _report(
    name: str,
    lhs: float,
    rhs: float,
    relation: str,
    seed: int | None = None,
    route_residual: float | None = None,
    extra_ok: bool = True,
) -> InequalityReport:
    slack = (lhs - rhs) if relation == "ge" else (rhs - lhs)
    passed = bool(slack >= -_slack_floor(lhs, rhs)) and extra_ok
    return InequalityReport(name, lhs, rhs, slack, passed, seed, route_residual)


def _require_psd(*mats: np.ndarray) -> list[np.ndarray]:
    out = []
    for m in mats:
        m = as_matrix(m)
        if not check_psd(m):
            raise NotPSD("inequality inputs must be PSD")
        out.append(m)
    return out


def norm_sandwich(
    x: np.ndarray, y: np.ndarray, seed: int | None = None
) -> tuple[InequalityReport, InequalityReport]:
    """Both halves of ||X-Y||_HS^2 <= ||X^2-Y^2||_1 <= ||X-Y||_HS ||X+Y||_HS."""
    x, y = _require_psd(x, y)
    diff_sq = hs_norm(x - y) ** 2
    middle = trace_norm(x @ x - y @ y)
    upper = hs_norm(x - y) * hs_norm(x + y)
    return (
        _report("norm_sandwich_lower", diff_sq, middle, "le", seed),
        _report("norm_sandwich_upper", middle, upper, "le", seed),
    )


def powers_stormer(
    a: np.ndarray, b: np.ndarray, seed: int | None = None
) -> InequalityReport:
    """||sqrt(A) - sqrt(B)||_2^2 <= ||A - B||_1."""
    a, b = _require_psd(a, b)
    lhs = hs_norm(matrix_sqrt(a) - matrix_sqrt(b)) ** 2
    rhs = trace_norm(a - b)
    return _report("powers_stormer", lhs, rhs, "le", seed)


def ozawa_s(
    a: np.ndarray, b: np.ndarray, s: float, seed: int | None = None
) -> InequalityReport:
    """2 Tr(B^s A^(1-s)) >= Tr(A + B - |A - B|) for s in [0, 1].

    At the endpoints the zeroth power is the support projection.
    """
    if not 0.0 <= s <= 1.0:
        raise BadExponent(f"s must lie in [0, 1], got {s}")
    a, b = _require_psd(a, b)
    lhs = 2.0 * float(np.real(np.trace(psd_power(b, s) @ psd_power(a, 1.0 - s))))
    rhs = float(np.real(np.trace(a + b - abs_hermitian(a - b))))
    return _report(f"ozawa_s[{s:g}]", lhs, rhs, "ge", seed)


def ogata_modular(
    phi1: PositiveFunctional,
    phi2: PositiveFunctional,
    s: float,
    seed: int | None = None,
) -> InequalityReport:
    """2 ||Delta^(s/2)_(phi2,phi1) Phi1||^2 >= phi1(1) + phi2(1) - |phi1-phi2|(1).

    The left-hand side is evaluated twice: (a) by applying the spectral
    power of the assembled relative modular superoperator to the cone
    representative vec(sqrt(D1)), and (b) through the finite-dimensional
    identity 2 Tr(D2^s D1^(1-s)). The report fails if the routes drift
    apart, independently of the inequality itself.
    """
    if not 0.0 <= s <= 1.0:
        raise BadExponent(f"s must lie in [0, 1], got {s}")
    if not is_faithful(phi1):
        raise SingularState("phi1 must be faithful (Delta needs D1^-1)")
    delta = relative_modular_operator(phi2, phi1)
    half_power = psd_power(delta.matrix, s / 2.0)
    image = half_power @ vec(phi1.sqrt()).amplitudes
    lhs_superop = 2.0 * float(np.real(np.vdot(image, image)))
    lhs_trace = 2.0 * float(
        np.real(np.trace(phi2.power(s) @ phi1.power(1.0 - s)))
    )
    rhs = phi1.total() + phi2.total() - functional_distance(phi1, phi2)
    residual = abs(lhs_superop - lhs_trace)
    routes_agree = residual <= ROUTE_AGREEMENT_RTOL * max(
        1.0, abs(lhs_superop), abs(lhs_trace)
    )
    return _report(
        f"ogata_modular[{s:g}]",
        lhs_superop,
        rhs,
        "ge",
        seed,
        route_residual=residual,
        extra_ok=routes_agree,
    )


@dataclass(frozen=True)
class MonotoneFunction:
    """Operator monotone function f > 0 on (0, inf) with g(t) = t/f(t), g(0)=0."""

    name: str
    f: Callable[[np.ndarray], np.ndarray]

    def apply_f(self, a: np.ndarray) -> np.ndarray:
        dec = spectral_decomposition(a)
        vals = np.maximum(dec.eigenvalues, 0.0)
        return (dec.eigenvectors * self.f(vals)) @ adjoint(dec.eigenvectors)

    def apply_sqrt_f(self, a: np.ndarray) -> np.ndarray:
        dec = spectral_decomposition(a)
        vals = np.maximum(dec.eigenvalues, 0.0)
        return (dec.eigenvectors * np.sqrt(self.f(vals))) @ adjoint(dec.eigenvectors)

    def apply_g(self, b: np.ndarray, zero_tol: float = PSD_TOL) -> np.ndarray:
        """g through the spectrum, with g = 0 on the (numerical) kernel."""
        dec = spectral_decomposition(b)
        vals = np.maximum(dec.eigenvalues, 0.0)
        top = float(vals[-1]) if vals.size else 0.0
        support = vals > zero_tol * max(1.0, top)
        g_vals = np.zeros_like(vals)
        g_vals[support] = vals[support] / self.f(vals[support])
        return (dec.eigenvectors * g_vals) @ adjoint(dec.eigenvectors)


def monotone_function(
    name: str,
    f: Callable[[np.ndarray], np.ndarray],
    spot_check: bool = True,
    check_seed: int = 2024,
) -> MonotoneFunction:
    """Register a scalar function as operator monotone.

    Positivity of f on (0, inf) is verified on a log-spaced grid, and
    operator monotonicity is spot-checked (not proven) on 20 seeded PSD
    pairs A <= B by testing that f(B) - f(A) is PSD within 1e-10.
    """
    grid = np.geomspace(1e-6, 1e3, 48)
    if np.any(np.asarray(f(grid)) <= 0.0):
        raise BadExponent(f"{name}: f must map (0, inf) into (0, inf)")
    mf = MonotoneFunction(name, f)
    if spot_check:
        rng = np.random.default_rng(check_seed)
        for _ in range(20):
            a = random_psd(rng, 4, trace_one=False)
            b = a + random_psd(rng, 4, trace_one=False)
            if not check_psd(mf.apply_f(b) - mf.apply_f(a), 1e-10):
                raise BadExponent(f"{name}: failed the operator monotonicity spot check")
    return mf


def power_monotone(s: float) -> MonotoneFunction:
    """t^s for s in [0, 1]."""
    if not 0.0 <= s <= 1.0:
        raise BadExponent(f"t^s is operator monotone only for s in [0, 1], got {s}")
    return monotone_function(f"t^{s:g}", lambda t: t**s)


def default_registry() -> dict[str, MonotoneFunction]:
    """The shipped operator monotone functions."""
    return {
        "t^0.5": power_monotone(0.5),
        "t/(1+t)": monotone_function("t/(1+t)", lambda t: t / (1.0 + t)),
        "log(1+t)": monotone_function("log(1+t)", np.log1p),
    }


def hoa_generalized(
    a: np.ndarray, b: np.ndarray, mf: MonotoneFunction, seed: int | None = None
) -> InequalityReport:
    """2 Tr(sqrt(f(A)) g(B) sqrt(f(A))) >= Tr(A + B - |A - B|)."""
    a, b = _require_psd(a, b)
    root = mf.apply_sqrt_f(a)
    lhs = 2.0 * float(np.real(np.trace(root @ mf.apply_g(b) @ root)))
    rhs = float(np.real(np.trace(a + b - abs_hermitian(a - b))))
    return _report(f"hoa[{mf.name}]", lhs, rhs, "ge", seed)


def phillips(
    a: np.ndarray, b: np.ndarray, t: float, seed: int | None = None
) -> InequalityReport:
    """||A^(1/t) - B^(1/t)||_t^t <= ||A - B||_1 for A >= B >= 0 and t >= 1."""
    if t < 1.0:
        raise BadExponent(f"t must be >= 1, got {t}")
    a, b = _require_psd(a, b)
    if not check_psd(a - b):
        raise OrderViolation("Phillips inequality requires A >= B")
    lhs = schatten_norm(psd_power(a, 1.0 / t) - psd_power(b, 1.0 / t), t) ** t
    rhs = trace_norm(a - b)
    return _report(f"phillips[{t:g}]", lhs, rhs, "le", seed)
