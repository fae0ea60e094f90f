"""Winding number of the oriented real locus, by two independent methods.

Orientation convention (calibrated on the counter-clockwise unit circle,
``w = +1``): the real parameter circle is traversed with increasing ``t``;
``t = infinity`` is crossed through the orientation-preserving chart
``s = -1/t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .curve import (RationalPlaneCurve, chart_velocity_numerators,
                    velocity_numerators)
from .errors import ConsistencyError, GenericityError, WindingError
from .poly import roots
from .tolerances import DEFAULT_TOL, TolProfile

INTEGRALITY_TOL = 1e-6
ROTATION_ATTEMPTS = 32


@dataclass(frozen=True)
class WindingResult:
    w: int
    raw_turn: float       # total turning / 2*pi before snapping
    samples_used: int


def gauss_winding(c: RationalPlaneCurve, initial_samples: int = 512,
                  max_evals: int = 400_000, max_depth: int = 48) -> WindingResult:
    """Degree of the Gauss map by accumulating velocity-angle increments.

    The parameter circle is traversed via ``u in [0, 2*pi)``, ``t = tan(u/2)``
    (monotone, one full traversal, orientation = increasing ``t``).  Any step
    with angle change >= pi/2 is bisected; for an immersion this terminates
    and makes the unwrapping unambiguous, so the total is an exact multiple
    of ``2*pi`` up to rounding.
    """
    a, b = velocity_numerators(c)
    sa, sb = chart_velocity_numerators(c)
    total, evals, ok = kernels.turning_sum(
        a.c, b.c, sa.c, sb.c, initial_samples, max_evals, max_depth)
    if not ok:
        raise WindingError("winding non-integral: refinement budget exhausted")
    raw = total / (2.0 * math.pi)
    w = round(raw)
    if abs(raw - w) >= INTEGRALITY_TOL:
        raise WindingError(f"winding non-integral: raw turn {raw!r}")
    return WindingResult(int(w), raw, evals)


def _rotated_numerators(c: RationalPlaneCurve, psi: float):
    """Velocity numerators of the curve rotated by ``psi`` (rotation acts
    linearly on the numerators)."""
    a, b = velocity_numerators(c)
    sa, sb = chart_velocity_numerators(c)
    cs, sn = math.cos(psi), math.sin(psi)
    return (cs * a - sn * b, sn * a + cs * b,
            cs * sa - sn * sb, sn * sa + cs * sb)


def regular_value_degree(c: RationalPlaneCurve, seed: int = 0,
                         tol: TolProfile = DEFAULT_TOL) -> int:
    """Gauss-map degree counted over a regular value.

    Rotates the plane by seeded angles until the vertical direction is a
    regular value of the Gauss map (all real roots of the rotated
    ``x'``-numerator simple, ``y' != 0`` there, ``t = infinity`` not a root),
    then sums ``-sign(x'')`` over the upward-pointing preimages.  The
    complementary downward count is computed as well and must agree.
    """
    rng = np.random.default_rng(seed)
    for attempt in range(ROTATION_ATTEMPTS):
        psi = 0.0 if attempt == 0 else float(rng.uniform(0.0, 2.0 * math.pi))
        a, b, sa, sb = _rotated_numerators(c, psi)
        picture = _regular_value_picture(a, b, sa, tol)
        if picture is None:
            continue
        up, down = 0, 0
        for t0 in picture:
            slope = a.deriv()(t0)  # sign of x'' at a root of x'
            if b(t0) > 0:
                up += -_sgn(slope)
            else:
                down += _sgn(slope)
        if up != down:
            raise ConsistencyError(
                f"internal mismatch: up-count {up} != down-count {down}")
        return up
    raise GenericityError("genericity not found after "
                          f"{ROTATION_ATTEMPTS} rotations")


def _sgn(v) -> int:
    return 1 if v > 0 else -1


def _regular_value_picture(a, b, sa, tol):
    """Real roots of the rotated x'-numerator when the rotation is generic,
    else None."""
    if a.is_zero or a.degree < 1:
        return None
    if abs(sa(0.0)) <= tol.sign * max(sa.scale, 1e-300):
        return None  # t = infinity is a critical point
    try:
        rset = roots(a, tol)
    except Exception:
        return None
    da = a.deriv()
    out = []
    for z, m in rset.pairs:
        if z.imag != 0:
            continue
        t0 = z.real
        if m > 1:
            return None
        if abs(da(t0)) <= tol.sign * max(da.coeff_bound(t0), 1e-300):
            return None  # inflection: not a simple fold
        if abs(b(t0)) <= tol.sign * max(b.coeff_bound(t0), 1e-300):
            return None  # velocity vanishes vertically: not generic
        out.append(t0)
    return out
