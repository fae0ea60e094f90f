"""Random compact rational curves from trigonometric loops.

A loop ``x(u) = sum_k a_k cos(ku) + b_k sin(ku)`` (and likewise ``y``)
converts to a rational parametrization through ``t = tan(u/2)``:

    cos u = (1 - t^2)/(1 + t^2),   sin u = 2t/(1 + t^2),

with the higher harmonics built by the angle-addition recurrences.  Every
coordinate then sits over ``(1 + t^2)**K``, so the real locus is
automatically compact.  Draws are seeded, validated, audited and redrawn on
rejection, recording the rejection reasons.
"""

from __future__ import annotations

import numpy as np

from .curve import RationalPlaneCurve, audit, make_curve
from .errors import (CurveValidationError, DegenerateInfinityError,
                     GenerationError, ToolkitError)
from .infinity import rhs_eq1
from .poly import Poly
from .tolerances import DEFAULT_TOL, TolProfile

MAX_REDRAWS = 64


def harmonic_basis(K: int):
    """Numerator polynomials ``C_k, S_k`` with ``cos ku = C_k/(1+t^2)**k``
    and ``sin ku = S_k/(1+t^2)**k`` for k = 0..K."""
    one = Poly([1.0])
    c1 = Poly([1.0, 0.0, -1.0])
    s1 = Poly([0.0, 2.0])
    cs, ss = [one], [Poly.zero()]
    for _ in range(K):
        ck, sk = cs[-1], ss[-1]
        cs.append(c1 * ck - s1 * sk)
        ss.append(s1 * ck + c1 * sk)
    return cs, ss


def curve_from_harmonics(x_cos, x_sin, y_cos, y_sin,
                         tol: TolProfile = DEFAULT_TOL) -> RationalPlaneCurve:
    """Build the rational curve of a trigonometric loop.

    ``x_cos[k]`` multiplies ``cos(ku)`` (``x_cos[0]`` is the constant term),
    ``x_sin[k]`` multiplies ``sin(ku)`` (index 0 ignored); same for ``y``.
    """
    x_cos = np.atleast_1d(np.asarray(x_cos, dtype=float))
    x_sin = np.atleast_1d(np.asarray(x_sin, dtype=float))
    y_cos = np.atleast_1d(np.asarray(y_cos, dtype=float))
    y_sin = np.atleast_1d(np.asarray(y_sin, dtype=float))
    K = max(a.size for a in (x_cos, x_sin, y_cos, y_sin)) - 1
    if K < 1:
        raise ValueError("need at least one harmonic")
    cs, ss = harmonic_basis(K)
    denom = Poly([1.0, 0.0, 1.0])
    lifts = [denom ** (K - k) for k in range(K + 1)]

    def assemble(cos_c, sin_c):
        acc = Poly.zero()
        for k in range(K + 1):
            term = Poly.zero()
            if k < cos_c.size and cos_c[k] != 0:
                term = term + cos_c[k] * cs[k]
            if 1 <= k < sin_c.size and sin_c[k] != 0:
                term = term + sin_c[k] * ss[k]
            if not term.is_zero:
                acc = acc + term * lifts[k]
        return acc

    p1 = assemble(x_cos, x_sin)
    p2 = assemble(y_cos, y_sin)
    return make_curve(p1, p2, denom ** K, tol)


def generate_curve_detailed(seed: int, K: int,
                            tol: TolProfile = DEFAULT_TOL,
                            max_redraws: int = MAX_REDRAWS):
    """Draw admissible curves until one passes; returns (curve, audit, log).

    The log lists one reason string per rejected draw.  Draws whose poles sit
    on the real circle of the infinity line are redrawn too, so every
    generated curve supports the full verification pipeline.
    """
    if K < 1:
        raise ValueError("harmonic bound must be >= 1")
    rng = np.random.default_rng(seed)
    log = []
    for _ in range(max_redraws):
        coeffs = rng.uniform(-1.0, 1.0, size=(4, K + 1))
        try:
            curve = curve_from_harmonics(*coeffs, tol=tol)
        except CurveValidationError as exc:
            log.append(f"validation: {exc}")
            continue
        try:
            rep = audit(curve, tol)
        except ToolkitError as exc:
            log.append(f"audit: {exc}")
            continue
        if not rep.admissible:
            log.append("audit: " + "; ".join(rep.reasons))
            continue
        try:
            rhs_eq1(curve, tol)
        except DegenerateInfinityError as exc:
            log.append(f"infinity: {exc}")
            continue
        return curve, rep, log
    raise GenerationError(
        f"generation exhausted after {max_redraws} redraws (seed {seed}, "
        f"K {K}); last reasons: {log[-3:]}")


def generate_curve(seed: int, K: int,
                   tol: TolProfile = DEFAULT_TOL) -> RationalPlaneCurve:
    """Seeded admissible random curve with harmonic bound ``K``."""
    curve, _, _ = generate_curve_detailed(seed, K, tol)
    return curve


def draw_harmonic_count(rng: np.random.Generator, K_max: int) -> int:
    """Harmonic count for batch campaigns, oversampling small K to keep
    degrees and runtimes modest."""
    ks = np.arange(1, K_max + 1)
    weights = 1.0 / (ks * ks)
    weights /= weights.sum()
    return int(rng.choice(ks, p=weights))
