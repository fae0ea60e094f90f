"""Sweep-line verification engine.

A pencil of parallel oriented lines realizes a pencil through a point at
infinity: after rotating the plane by a generic angle ``phi``, the vertical
lines ``x = c`` are swept with increasing ``c`` and oriented upward (+y).

Tangency events are the real parameters where ``x'`` vanishes; they fall
into four classes by the signs of ``x''`` (Min/Max: intersections appear /
disappear as ``c`` grows) and ``y'`` (Plus/Minus: curve velocity agrees /
disagrees with the upward line orientation).  Two independent census
formulas recover the winding number from the class counts.

The jump ledger tracks, per gap between event abscissas, the signed count

    D(c) = #{t : x(t) = c, Im t > 0, Im y(t) > 0}
         - #{t : x(t) = c, Im t > 0, Im y(t) < 0}

(the imaginary intersections of the upper-parameter half of the curve with
the two halves of the complexified line).  The checks: D is constant inside
every gap; it jumps by +1 at (Max,Plus) and (Min,Minus) events and by -1 at
(Min,Plus) and (Max,Minus); exactly one of the two one-sided counts moves
per event; and the unbounded-gap values equal -/+ the signed pole count, so
the net change is twice the winding number.  Sign conventions are calibrated
on the counter-clockwise unit circle (w = +1); other texts may fix the
opposite global sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .curve import (RationalPlaneCurve, projective_distance, point_at,
                    velocity_numerators, chart_velocity_numerators)
from .errors import ConsistencyError, GenericityError, LedgerError
from .infinity import rhs_eq1
from .poly import Poly, roots
from .tolerances import DEFAULT_TOL, TolProfile

MIN = "min"
MAX = "max"
PLUS = "plus"
MINUS = "minus"

ROTATION_ATTEMPTS = 32
JUMP_SIGN = {(MAX, PLUS): +1, (MIN, MINUS): +1, (MIN, PLUS): -1, (MAX, MINUS): -1}


@dataclass(frozen=True)
class TangencyEvent:
    t: float        # tangency parameter
    c: float        # sweep abscissa (x-value in the rotated frame)
    kind: str       # MIN (x'' > 0) | MAX (x'' < 0)
    align: str      # PLUS (y' > 0) | MINUS (y' < 0)

    @property
    def jump(self) -> int:
        return JUMP_SIGN[(self.kind, self.align)]


@dataclass(frozen=True)
class SweepCensus:
    min_plus: int
    min_minus: int
    max_plus: int
    max_minus: int
    w_plus: int
    w_minus: int

    def as_dict(self):
        return {
            "min_plus": self.min_plus, "min_minus": self.min_minus,
            "max_plus": self.max_plus, "max_minus": self.max_minus,
            "w_plus": self.w_plus, "w_minus": self.w_minus,
        }


@dataclass
class JumpLedger:
    gaps: list                    # D value per gap (len = #groups + 1)
    side_counts: list             # (N+, N-) per gap
    jumps: list                   # observed jump per event group
    expected_jumps: list          # class-rule jump per event group
    group_sizes: list
    rhs: int
    net: int
    samples: list = field(default_factory=list)  # sampled c per gap

    @property
    def ok(self) -> bool:
        return (self.jumps == self.expected_jumps
                and self.gaps[0] == -self.rhs and self.gaps[-1] == self.rhs
                and self.net == self.gaps[-1] - self.gaps[0])


def _rotated_polys(c: RationalPlaneCurve, phi: float):
    cs, sn = math.cos(phi), math.sin(phi)
    p1r = cs * c.p1 - sn * c.p2
    p2r = sn * c.p1 + cs * c.p2
    a, b = velocity_numerators(c)
    sa, sb = chart_velocity_numerators(c)
    return p1r, p2r, cs * a - sn * b, sn * a + cs * b, cs * sa - sn * sb


def _rotated_curve(c: RationalPlaneCurve, phi: float) -> RationalPlaneCurve:
    # rotation preserves validity; bypass revalidation
    p1r, p2r, _, _, _ = _rotated_polys(c, phi)
    return RationalPlaneCurve(p1r, p2r, c.q, c.n)


def choose_direction(c: RationalPlaneCurve, seed: int = 0,
                     node_params=None, proper: bool = True,
                     tol: TolProfile = DEFAULT_TOL) -> float:
    """Pick a rotation angle ``phi`` making the vertical sweep generic.

    Genericity: every real root of the rotated ``x'``-numerator is simple
    with ``y' != 0`` there; ``t = infinity`` is not an event; no event sits
    at a node parameter; event abscissas are pairwise distinct.  For improper
    parametrizations coincident abscissas are allowed when the tangency
    points coincide too (the curve is traced multiple times).
    """
    node_params = list(node_params or [])
    rng = np.random.default_rng(seed)
    for attempt in range(ROTATION_ATTEMPTS):
        phi = 0.0 if attempt == 0 else float(rng.uniform(0.0, 2.0 * math.pi))
        if _events_or_none(c, phi, node_params, proper, tol) is not None:
            return phi
    raise GenericityError(
        f"genericity not found after {ROTATION_ATTEMPTS} sweep directions")


def detect_events(c: RationalPlaneCurve, phi: float,
                  tol: TolProfile = DEFAULT_TOL):
    """Tangency events of the vertical sweep in the ``phi``-rotated frame,
    sorted by abscissa."""
    events = _events_or_none(c, phi, [], True, tol, classify_only=True)
    if events is None:
        raise GenericityError("sweep direction is not generic")
    return events


def _events_or_none(c, phi, node_params, proper, tol, classify_only=False):
    p1r, _, a, b, sa = _rotated_polys(c, phi)
    if a.is_zero or a.degree < 1:
        return None
    if abs(sa(0.0)) <= tol.sign * max(sa.scale, 1e-300):
        return None  # infinity would be an event
    try:
        rset = roots(a, tol)
    except Exception:
        return None
    da = a.deriv()
    events = []
    for z, m in rset.pairs:
        if z.imag != 0:
            continue
        t0 = z.real
        if m > 1:
            return None
        slope = da(t0)
        if abs(slope) <= tol.sign * max(da.coeff_bound(t0), 1e-300):
            return None  # inflection with vertical tangent
        bv = b(t0)
        if abs(bv) <= tol.sign * max(b.coeff_bound(t0), 1e-300):
            return None  # tangency at a velocity-vertical point
        cval = p1r(t0) / c.q(t0)
        events.append(TangencyEvent(float(t0), float(cval),
                                    MIN if slope > 0 else MAX,
                                    PLUS if bv > 0 else MINUS))
    if not events:
        return None  # a compact immersed curve always has extremes
    if not classify_only:
        for ev in events:
            for npar in node_params:
                if not isinstance(npar, complex) or npar.imag != 0:
                    continue
                if math.isinf(npar.real):
                    continue  # infinity covered by the sa(0) check
                if abs(ev.t - npar.real) <= 1e-6 * (1.0 + abs(ev.t)):
                    return None  # tangency at a singular point
        span = max(ev.c for ev in events) - min(ev.c for ev in events)
        gate = max(tol.pair * (1.0 + span), 1e-9)
        for i in range(len(events)):
            for j in range(i + 1, len(events)):
                if abs(events[i].c - events[j].c) <= gate:
                    if not proper and _same_image(c, events[i], events[j]):
                        continue  # multiple cover of one tangency point
                    return None  # a genuine double tangent line
    return sorted(events, key=lambda ev: (ev.c, ev.t))


def _same_image(c, ev1, ev2) -> bool:
    return projective_distance(point_at(c, ev1.t), point_at(c, ev2.t)) < 1e-6


def census(events) -> SweepCensus:
    """Class counts and the two winding formulas; they must agree."""
    counts = {k: 0 for k in JUMP_SIGN}
    for ev in events:
        counts[(ev.kind, ev.align)] += 1
    w_plus = counts[(MAX, PLUS)] - counts[(MIN, PLUS)]
    w_minus = counts[(MIN, MINUS)] - counts[(MAX, MINUS)]
    if w_plus != w_minus:
        raise ConsistencyError(
            f"census mismatch: w_plus {w_plus} != w_minus {w_minus}")
    return SweepCensus(counts[(MIN, PLUS)], counts[(MIN, MINUS)],
                       counts[(MAX, PLUS)], counts[(MAX, MINUS)],
                       w_plus, w_minus)


def jump_ledger(c: RationalPlaneCurve, phi: float, events,
                tol: TolProfile = DEFAULT_TOL) -> JumpLedger:
    """Evaluate the half-plane intersection count per gap and check every
    jump against the class rule, the one-sided decomposition, and the
    endpoint identity."""
    if not events:
        raise LedgerError("ledger violation: no events to sweep")
    rot = _rotated_curve(c, phi)
    rhs = rhs_eq1(rot, tol)

    groups = _group_events(events, tol)
    cs = [grp[0].c for grp in groups]
    span = max(cs[-1] - cs[0], 1.0)
    margin = 0.5 * span

    sample_sets = []
    lo = [cs[0] - margin * f for f in (2.0, 1.5, 1.0)]
    sample_sets.append(lo)
    for k in range(len(groups) - 1):
        a, b = cs[k], cs[k + 1]
        sample_sets.append([a + (b - a) * f for f in (0.25, 0.5, 0.75)])
    sample_sets.append([cs[-1] + margin * f for f in (1.0, 1.5, 2.0)])

    gaps, side_counts, samples = [], [], []
    for k, cvals in enumerate(sample_sets):
        counts = []
        for cv in cvals:
            got = _halves_at(rot, cv, tol)
            if got is None:
                # resample once, nudged into the same gap
                width = (cvals[-1] - cvals[0]) or margin
                got = _halves_at(rot, cv + 0.37 * 0.25 * width, tol)
            if got is None:
                raise LedgerError(
                    f"degenerate sample: gap {k} near c = {cv:.6g}")
            counts.append(got)
        if len(set(counts)) != 1:
            raise LedgerError(
                f"ledger violation: gap {k} is not constant: {counts} "
                f"at c = {[round(v, 6) for v in cvals]}")
        np_, nm = counts[0]
        gaps.append(np_ - nm)
        side_counts.append((np_, nm))
        samples.append(list(cvals))

    jumps, expected, sizes = [], [], []
    for k, grp in enumerate(groups):
        obs = gaps[k + 1] - gaps[k]
        exp = sum(ev.jump for ev in grp)
        jumps.append(obs)
        expected.append(exp)
        sizes.append(len(grp))
        if obs != exp:
            raise LedgerError(
                f"ledger violation: event group {k} at c = {grp[0].c:.6g} "
                f"jumped {obs}, class rule says {exp}")
        dplus = side_counts[k + 1][0] - side_counts[k][0]
        dminus = side_counts[k + 1][1] - side_counts[k][1]
        if abs(dplus) + abs(dminus) != len(grp):
            raise LedgerError(
                f"ledger violation: event group {k} moved both one-sided "
                f"counts ({dplus:+d}, {dminus:+d}) for {len(grp)} event(s)")

    if gaps[0] != -rhs or gaps[-1] != rhs:
        raise LedgerError(
            f"ledger violation: endpoint values ({gaps[0]}, {gaps[-1]}) "
            f"differ from -/+ pole count {rhs}")
    net = gaps[-1] - gaps[0]
    return JumpLedger(gaps, side_counts, jumps, expected, sizes, rhs, net,
                      samples)


def _group_events(events, tol):
    """Coincident-abscissa groups (multiple covers of one tangency)."""
    span = max(ev.c for ev in events) - min(ev.c for ev in events)
    gate = max(tol.pair * (1.0 + span), 1e-9)
    groups = []
    for ev in sorted(events, key=lambda e: (e.c, e.t)):
        if groups and abs(ev.c - groups[-1][0].c) <= gate:
            groups[-1].append(ev)
        else:
            groups.append([ev])
    return groups


def _halves_at(rot: RationalPlaneCurve, cval: float, tol: TolProfile):
    """One-sided imaginary intersection counts (N+, N-) of the line
    ``x = cval``; None when a sample is numerically degenerate."""
    pc = rot.p1 - cval * rot.q
    pc = pc.trim_small(1e-13)
    if pc.is_zero or pc.degree < 1:
        return None
    try:
        rset = roots(pc, tol)
    except Exception:
        return None
    nplus = nminus = 0
    for z, m in rset.pairs:
        if z.imag == 0:
            continue
        if z.imag < 0:
            continue  # conjugate branch: counted via the upper mirror
        if z.imag <= 10.0 * tol.reality * (1.0 + abs(z)):
            return None  # ambiguously close to the real axis
        qv = rot.q(z)
        if abs(qv) < 1e-14 * max(rot.q.coeff_bound(z), 1e-300):
            return None
        y = rot.p2(z) / qv
        if abs(y.imag) <= tol.sign * (1.0 + abs(y)):
            return None  # the intersection point is on a real line
        if y.imag > 0:
            nplus += m
        else:
            nminus += m
    return (nplus, nminus)


def sweep_winding(c: RationalPlaneCurve, seed: int = 0, node_params=None,
                  proper: bool = True, tol: TolProfile = DEFAULT_TOL):
    """Convenience wrapper: choose a direction, detect events, run the census
    and the ledger.  Returns (phi, events, census, ledger)."""
    phi = choose_direction(c, seed, node_params, proper, tol)
    events = detect_events(c, phi, tol)
    cen = census(events)
    ledger = jump_ledger(c, phi, events, tol)
    return phi, events, cen, ledger
