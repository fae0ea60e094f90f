"""Hemisphere classification of the curve's points at infinity.

Each root ``t0`` of the denominator with ``Im t0 > 0`` is a pole of the
parametrization: the branch through it meets the line at infinity at
``(0 : p1(t0) : p2(t0))`` with intersection multiplicity equal to the root's
multiplicity.  In the slope coordinate ``zeta = z2/z1`` the real circle of
the infinity line is the real axis; the hemisphere convention is

    Plus  <=>  Im zeta > 0,

calibrated so the counter-clockwise unit circle (pole ``t0 = i``, image
``(0:1:i)``) lands on Plus, matching its winding number +1.  The signed,
multiplicity-weighted pole count is then the hemisphere-intersection
difference that the rest of the package checks against the winding number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import RationalPlaneCurve
from .errors import DegenerateInfinityError, RootFindingError, ToolkitError
from .poly import roots
from .tolerances import DEFAULT_TOL, TolProfile

PLUS = "plus"
MINUS = "minus"
REAL_DEGENERATE = "real_degenerate"


@dataclass(frozen=True)
class PoleRecord:
    t0: complex            # pole location, Im t0 > 0
    mult: int              # intersection multiplicity
    point: tuple           # (a, b): the infinity point (0 : a : b)
    side: str              # PLUS | MINUS | REAL_DEGENERATE


def upper_poles(c: RationalPlaneCurve, tol: TolProfile = DEFAULT_TOL):
    """Poles in the upper parameter half-plane as ``(t0, mult)`` pairs.

    Multiplicities sum to ``n/2`` exactly (the other half are the conjugate
    poles below the axis).
    """
    rset = roots(c.q, tol)
    ups = [(z, m) for z, m in rset.pairs if z.imag > 0]
    total = sum(m for _, m in ups)
    if 2 * total != c.n:
        raise RootFindingError(
            f"root-finding failure: upper pole multiplicities sum to {total}, "
            f"expected {c.n // 2}")
    return ups


def classify_at_infinity(c: RationalPlaneCurve, t0: complex, mult: int = 1,
                         tol: TolProfile = DEFAULT_TOL) -> PoleRecord:
    """Hemisphere membership of the infinity point over one upper pole.

    The sign of ``Im(b * conj(a))`` is scale-free and equals the sign of
    ``Im(b/a)`` without dividing near ``a = 0``; values within tolerance of
    zero (including ``a = 0`` or ``b = 0`` exactly) are a real point of the
    infinity line: ``REAL_DEGENERATE``.
    """
    a = complex(c.p1(t0))
    b = complex(c.p2(t0))
    ref = max(c.p1.coeff_bound(t0), c.p2.coeff_bound(t0), 1e-300)
    if abs(a) <= tol.pair * ref and abs(b) <= tol.pair * ref:
        raise ToolkitError("base point: p1 and p2 both vanish at a pole")
    disc = (b * a.conjugate()).imag
    gate = tol.sign * abs(a) * abs(b)
    if disc > gate:
        side = PLUS
    elif disc < -gate:
        side = MINUS
    else:
        side = REAL_DEGENERATE
    return PoleRecord(complex(t0), int(mult), (a, b), side)


def pole_table(c: RationalPlaneCurve, tol: TolProfile = DEFAULT_TOL):
    """Classified upper poles, sorted by location."""
    return [classify_at_infinity(c, t0, m, tol) for t0, m in upper_poles(c, tol)]


def rhs_eq1(c: RationalPlaneCurve, tol: TolProfile = DEFAULT_TOL) -> int:
    """Signed multiplicity-weighted hemisphere count over the upper poles.

    Raises :class:`DegenerateInfinityError` when any pole lands on the real
    circle of the infinity line; the identity's hypotheses are not met there
    and no real projective change of coordinates can repair it.
    """
    total = 0
    for rec in pole_table(c, tol):
        if rec.side == REAL_DEGENERATE:
            a, b = rec.point
            raise DegenerateInfinityError(
                "real point at infinity "
                f"(0 : {_fmt(a)} : {_fmt(b)}) at pole t0 = {rec.t0:.6g}; "
                "only a genuine perturbation of the curve can remove it",
                point=rec.point)
        total += rec.mult * (1 if rec.side == PLUS else -1)
    return total


def _fmt(z: complex) -> str:
    tiny = 1e-12 * max(1.0, abs(z))
    if abs(z.imag) < tiny:
        return f"{z.real:.6g}"
    if abs(z.real) < tiny:
        return f"{z.imag:.6g}i"
    return f"{z:.6g}"
