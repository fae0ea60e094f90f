"""Validated rational parametrizations of compact real plane curves.

A curve is a triple of real polynomials ``(p1, p2, q)`` with ``x = p1/q``,
``y = p2/q``.  Validation enforces:

* base-point freedom (no common factor of the homogeneous map ``(q:p1:p2)``),
* compactness (``q`` monic, positive on the real line, even degree, and
  ``deg p_i <= deg q`` so the parameter-infinity point is a finite real
  point),
* immersion (nonvanishing velocity on the whole real parameter circle,
  including ``t = infinity`` via the chart ``s = -1/t``).

The audit enumerates self-intersections at the parametrization level by
solving the divided-difference system and classifies them into real,
solitary and imaginary double points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import numpy.polynomial.polynomial as npp

from .errors import AuditError, CurveValidationError
from .poly import (BivarPoly, Poly, cross_difference, gcd_clear,
                   resultant_root_seeds, resultant_t, roots)
from .tolerances import DEFAULT_TOL, TolProfile

#: Marker for the parameter-circle point t = infinity.
PARAM_INF = complex(math.inf, 0.0)


def is_inf_param(t) -> bool:
    return isinstance(t, complex) and math.isinf(t.real) or t is PARAM_INF or \
        (isinstance(t, float) and math.isinf(t))


@dataclass(frozen=True)
class RationalPlaneCurve:
    """Validated curve; construct through :func:`make_curve` only."""

    p1: Poly
    p2: Poly
    q: Poly
    n: int  # degree = deg q after normalization

    def x(self, t):
        return self.p1(t) / self.q(t)

    def y(self, t):
        return self.p2(t) / self.q(t)

    # chart at parameter infinity: s = -1/t, all three lifted to degree n
    def chart_triple(self):
        return (self.p1.chart(self.n), self.p2.chart(self.n), self.q.chart(self.n))

    def coeff_dict(self):
        return {
            "p1": [float(v) for v in self.p1.c],
            "p2": [float(v) for v in self.p2.c],
            "q": [float(v) for v in self.q.c],
        }


def velocity_numerators(c: RationalPlaneCurve):
    """Polynomials ``A = p1' q - p1 q'`` and ``B`` likewise; the velocity is
    ``(A, B)/q**2`` and shares its direction with ``(A, B)`` since q > 0."""
    a = c.p1.deriv() * c.q - c.p1 * c.q.deriv()
    b = c.p2.deriv() * c.q - c.p2 * c.q.deriv()
    return a, b


def chart_velocity_numerators(c: RationalPlaneCurve):
    p1s, p2s, qs = c.chart_triple()
    a = p1s.deriv() * qs - p1s * qs.deriv()
    b = p2s.deriv() * qs - p2s * qs.deriv()
    return a, b


def make_curve(p1, p2, q, tol: TolProfile = DEFAULT_TOL) -> RationalPlaneCurve:
    """Validate and normalize a parametrization ``(p1, p2, q)``.

    Raises :class:`CurveValidationError` when the real locus is noncompact
    (real pole, or degree escape at parameter infinity) or not immersed
    (vanishing velocity at some real parameter).
    """
    p1 = p1 if isinstance(p1, Poly) else Poly(p1)
    p2 = p2 if isinstance(p2, Poly) else Poly(p2)
    q = q if isinstance(q, Poly) else Poly(q)
    if not (p1.is_real and p2.is_real and q.is_real):
        raise CurveValidationError("coefficients must be real")
    if q.is_zero:
        raise CurveValidationError("denominator is identically zero")

    (p1, p2, q), _ = gcd_clear([p1, p2, q], tol)

    if q.degree < 2:
        if p1.degree <= 0 and p2.degree <= 0:
            raise CurveValidationError(
                "degenerate: constant parametrization", reason="degenerate")
        raise CurveValidationError(
            "noncompact at parameter ∞: denominator degree too small",
            reason="noncompact_infinity")
    n = int(q.degree)
    if p1.degree > n or p2.degree > n:
        raise CurveValidationError(
            "noncompact at parameter ∞: numerator degree exceeds "
            "denominator degree", reason="noncompact_infinity")
    if n % 2 == 1:
        raise CurveValidationError(
            "noncompact: real pole (odd denominator degree forces one)",
            reason="real_pole")
    qroots = roots(q, tol)
    for z, _ in qroots.pairs:
        if z.imag == 0:
            raise CurveValidationError(
                f"noncompact: real pole at t = {z.real:.6g}", reason="real_pole")

    lead = float(q.c[-1])
    p1, p2, q = Poly(p1.c / lead), Poly(p2.c / lead), Poly(q.c / lead)
    if q(0.0) <= 0:
        raise CurveValidationError(
            "noncompact: denominator changes sign", reason="real_pole")

    curve = RationalPlaneCurve(p1, p2, q, n)
    a, b = velocity_numerators(curve)
    if a.is_zero and b.is_zero:
        raise CurveValidationError(
            "degenerate: constant parametrization", reason="degenerate")
    _check_immersion(curve, a, b, tol)
    return curve


def _check_immersion(curve, a, b, tol):
    def rel_small(p, t):
        return abs(p(t)) <= tol.sign * max(p.coeff_bound(t), 1e-300)

    for poly, other in ((a, b), (b, a)):
        if poly.is_zero:
            # a vanishing component: cusps wherever the other one turns
            if other.degree >= 1:
                for z, _ in roots(other, tol, strict=False).pairs:
                    if z.imag == 0:
                        raise CurveValidationError(
                            f"cusp on real locus at t = {z.real:.6g}",
                            reason="cusp")
            continue
        if poly.degree < 1:
            continue
        for z, _ in roots(poly, tol, strict=False).pairs:
            if z.imag == 0 and rel_small(other, z.real):
                raise CurveValidationError(
                    f"cusp on real locus at t = {z.real:.6g}", reason="cusp")
        break  # checking common real roots once suffices
    sa, sb = chart_velocity_numerators(curve)
    if (abs(sa(0.0)) <= tol.sign * max(sa.scale, 1e-300)
            and abs(sb(0.0)) <= tol.sign * max(sb.scale, 1e-300)):
        raise CurveValidationError("cusp on real locus at t = ∞",
                                   reason="cusp")


def point_at(c: RationalPlaneCurve, t):
    """Projective image ``(z0 : z1 : z2)`` of a parameter, infinity included.

    Scaled so the largest component has modulus 1; real parameters give real
    triples.
    """
    if is_inf_param(t):
        p1s, p2s, qs = c.chart_triple()
        vec = np.array([qs(0.0), p1s(0.0), p2s(0.0)])
    else:
        vec = np.array([c.q(t), c.p1(t), c.p2(t)])
    m = np.abs(vec).max()
    if m == 0:
        raise AuditError("audit failure: base point of the homogeneous map")
    return vec / m


def affine_point(c: RationalPlaneCurve, t):
    """Affine image (x, y); requires a non-pole parameter."""
    v = point_at(c, t)
    if abs(v[0]) < 1e-14:
        raise ValueError(f"parameter {t} is a pole; image lies at infinity")
    return (v[1] / v[0], v[2] / v[0])


def projective_distance(u, v) -> float:
    """Sin of the angle between projective points (0 iff equal)."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    cross = np.array([
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ])
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    return float(np.linalg.norm(cross) / max(nu * nv, 1e-300))


def velocity(c: RationalPlaneCurve, t):
    """Velocity ``(x'(t), y'(t))`` at a real parameter.

    At ``t = infinity`` the derivative is taken in the orientation-preserving
    chart ``s = -1/t``, so the returned direction is the Gauss-map value for
    increasing ``t``.
    """
    if is_inf_param(t):
        sa, sb = chart_velocity_numerators(c)
        _, _, qs = c.chart_triple()
        qq = qs(0.0) ** 2
        return (sa(0.0) / qq, sb(0.0) / qq)
    a, b = velocity_numerators(c)
    qq = c.q(t) ** 2
    return (a(t) / qq, b(t) / qq)


def direction_at(c: RationalPlaneCurve, t):
    """Unit velocity direction; uses the chart for |t| > 1 for stability."""
    if is_inf_param(t) or abs(t) > 1:
        sa, sb = chart_velocity_numerators(c)
        s = 0.0 if is_inf_param(t) else -1.0 / t
        v = np.array([sa(s), sb(s)])
    else:
        a, b = velocity_numerators(c)
        v = np.array([a(t), b(t)])
    nrm = np.linalg.norm(v)
    if nrm == 0:
        raise AuditError("audit failure: zero velocity on a validated curve")
    return v / nrm


# ---------------------------------------------------------------------------
# transforms (used by the invariance checks and the CLI)
# ---------------------------------------------------------------------------

def affine_image(c: RationalPlaneCurve, m00, m01, m10, m11, t0=0.0, t1=0.0,
                 tol: TolProfile = DEFAULT_TOL) -> RationalPlaneCurve:
    """Apply the plane affine map ``(x, y) -> M (x, y) + t`` to the curve."""
    if abs(m00 * m11 - m01 * m10) < 1e-12:
        raise ValueError("affine map must be invertible")
    p1 = m00 * c.p1 + m01 * c.p2 + t0 * c.q
    p2 = m10 * c.p1 + m11 * c.p2 + t1 * c.q
    return make_curve(p1, p2, c.q, tol)


def rotate_plane(c: RationalPlaneCurve, phi: float,
                 tol: TolProfile = DEFAULT_TOL) -> RationalPlaneCurve:
    return affine_image(c, math.cos(phi), -math.sin(phi),
                        math.sin(phi), math.cos(phi), tol=tol)


def reparam_negate(c: RationalPlaneCurve,
                   tol: TolProfile = DEFAULT_TOL) -> RationalPlaneCurve:
    """Reparametrize by ``t -> -t`` (swaps the parameter half-planes)."""
    return make_curve(c.p1.compose_negate(), c.p2.compose_negate(),
                      c.q.compose_negate(), tol)


# ---------------------------------------------------------------------------
# self-intersection audit
# ---------------------------------------------------------------------------

REAL_NODE = "real"
SOLITARY_NODE = "solitary"
IMAGINARY_NODE = "imaginary"


@dataclass(frozen=True)
class NodeRecord:
    """One unordered parameter pair mapping to the same image point."""

    params: tuple  # (complex, complex); PARAM_INF allowed
    point: tuple   # affine (x, y), complex entries for imaginary nodes
    kind: str      # REAL_NODE | SOLITARY_NODE | IMAGINARY_NODE
    transversal: bool | None = None  # meaningful for real nodes only


@dataclass
class AuditReport:
    """Classified self-intersections plus properness and cusp findings."""

    nodes: list = field(default_factory=list)
    cusp_params: list = field(default_factory=list)
    proper: bool = True
    reasons: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.reasons

    @property
    def verdict(self) -> str:
        return "admissible" if self.admissible else "rejected"

    def of_kind(self, kind: str):
        return [nd for nd in self.nodes if nd.kind == kind]

    @property
    def real_node_params(self):
        out = []
        for nd in self.of_kind(REAL_NODE):
            out.extend(nd.params)
        return out


class _SystemEval:
    """Stacked evaluator for (h1, h2) and their four partials.

    One outer-product contraction per point evaluates all six polynomials
    plus the local absolute-value scales ``sum |c_jk| |s|^j |t|^k`` that make
    residual gates meaningful at any magnitude of (s, t).
    """

    def __init__(self, h1: BivarPoly, h2: BivarPoly):
        mats = [h1.c, h2.c, h1.deriv_s().c, h1.deriv_t().c,
                h2.deriv_s().c, h2.deriv_t().c]
        rows = max(m.shape[0] for m in mats)
        cols = max(m.shape[1] for m in mats)
        stack = np.zeros((6, rows, cols), dtype=complex)
        for i, m in enumerate(mats):
            stack[i, : m.shape[0], : m.shape[1]] = m
        self.stack = stack
        self.absstack = np.abs(stack[:2])
        self.rows = rows
        self.cols = cols

    def __call__(self, s, t):
        sp = np.power(s, np.arange(self.rows))
        tp = np.power(t, np.arange(self.cols))
        outer = np.outer(sp, tp)
        vals = np.einsum("ijk,jk->i", self.stack, outer)
        scales = np.einsum("ijk,jk->i", self.absstack, np.abs(outer))
        return vals, np.maximum(scales, 1e-300)

    def residual(self, s, t):
        vals, scales = self(s, t)
        return max(abs(vals[0]) / scales[0], abs(vals[1]) / scales[1])


def _pair_newton(sys_eval: _SystemEval, s, t, iters=30):
    """2-D Newton on (h1, h2); returns (s, t, best relative residual)."""
    best = (s, t, sys_eval.residual(s, t))
    for _ in range(iters):
        vals, scales = sys_eval(s, t)
        det = vals[2] * vals[5] - vals[3] * vals[4]
        if det == 0 or not np.isfinite(det):
            break
        ds = (-vals[0] * vals[5] + vals[1] * vals[3]) / det
        dt = (-vals[2] * vals[1] + vals[4] * vals[0]) / det
        s = s + ds
        t = t + dt
        if not (np.isfinite(s) and np.isfinite(t)) or max(abs(s), abs(t)) > 1e9:
            break
        res = sys_eval.residual(s, t)
        if res < best[2]:
            best = (s, t, res)
        if res < 1e-14:
            break
        if abs(ds) <= 1e-14 * (1.0 + abs(s)) and abs(dt) <= 1e-14 * (1.0 + abs(t)):
            break
    return best


def _local_scale(p: Poly, z) -> float:
    """Absolute-value evaluation scale ``sum |c_k| |z|^k``."""
    return float(max(npp.polyval(abs(z), np.abs(p.c)), 1e-300))


def audit(c: RationalPlaneCurve, tol: TolProfile = DEFAULT_TOL) -> AuditReport:
    """Enumerate and classify the self-intersections of the parametrization.

    Builds the divided-difference system, solves it by a resultant in ``t``
    plus root matching, Newton-polishes candidate pairs, discards pole-pair
    artifacts, detects partners of the parameter-infinity point separately,
    and classifies the survivors.  An identically vanishing resultant marks
    the parametrization as improper (warning-grade).
    """
    report = AuditReport()
    h1 = cross_difference(c.p1, c.q)
    h2 = cross_difference(c.p2, c.q)
    if h1.is_zero or h2.is_zero:
        raise AuditError("audit failure: degenerate divided-difference system")

    res = resultant_t(h1, h2, tol)
    if res.is_zero:
        report.proper = False
        report.warnings.append(
            "improper parametrization: the curve is traced multiple times; "
            "self-intersections are not enumerable at this level and all "
            "derived quantities are parametrization-level")
        return report

    pairs = _collect_pairs(c, h1, h2, res, tol, report)
    pairs = _snap_pairs(pairs, tol)
    pairs = _dedupe_pairs(pairs, tol)
    pairs = _symmetrize_pairs(pairs, tol)
    _classify_pairs(c, pairs, tol, report)

    genus_bound = (c.n - 1) * (c.n - 2) // 2
    weight = len([nd for nd in report.nodes]) + len(report.cusp_params)
    if weight > genus_bound:
        report.warnings.append(
            f"audit counted {weight} double points, above the rational-curve "
            f"bound {genus_bound}; results may be unreliable")
    return report


def _collect_pairs(c, h1, h2, res, tol, report):
    pairs = []
    if res.degree >= 1:
        try:
            seeds = resultant_root_seeds(h1, h2, tol)
        except Exception as exc:  # pragma: no cover - defensive
            raise AuditError(f"audit failure: resultant roots: {exc}")
    else:
        seeds = []

    def q_small(z):
        return abs(c.q(z)) <= tol.pair * _local_scale(c.q, z)

    sys_eval = _SystemEval(h1, h2)
    cands = _candidate_pairs(h1, h2, seeds, tol)

    for s0, z in cands:
        s1, t1, rres = _pair_newton(sys_eval, s0, z)
        if rres > tol.pair:
            continue
        if abs(t1 - s1) <= max(tol.cluster, 1e-9) * (1.0 + abs(s1)):
            # diagonal solution: vanishing velocity numerators
            mid = 0.5 * (s1 + t1)
            if abs(mid.imag) <= tol.reality * (1.0 + abs(mid)):
                report.cusp_params.append(float(mid.real))
            continue
        if q_small(s1) or q_small(t1):
            continue  # pole-pair artifact (or adrift near a pole): not affine
        pairs.append((s1, t1))

    # partners of the parameter-infinity point
    a_inf = float(c.p1.c[c.n]) if c.p1.c.size > c.n else 0.0
    b_inf = float(c.p2.c[c.n]) if c.p2.c.size > c.n else 0.0
    g1 = (c.p1 - a_inf * c.q).trim_small(1e-12)
    g2 = (c.p2 - b_inf * c.q).trim_small(1e-12)
    if g1.is_zero or g2.is_zero:
        raise AuditError("audit failure: coordinate function is constant")
    if g1.degree >= 1 and g2.degree >= 1:
        for z, _ in roots(g1, tol, strict=False).pairs:
            if abs(g2(z)) > 1e-3 * _local_scale(g2, z):
                continue
            z = _newton_1d(g1, z)
            if abs(g2(z)) > tol.pair * _local_scale(g2, z):
                continue
            pairs.append((z, PARAM_INF))
    return pairs


def _candidate_pairs(h1, h2, seeds, tol):
    """Candidate (s, t) pairs: partners are batch companion eigenvalues of
    ``h1(s0, .)`` over all seeds at once, gated by a vectorized ``h2``
    evaluation against its local absolute scale, then deduplicated."""
    if not seeds:
        return []
    seeds_arr = np.asarray(seeds, dtype=complex)

    # deduplicate seeds (broadcasted distances; keep first representative)
    dist = np.abs(seeds_arr[:, None] - seeds_arr[None, :])
    gate = 1e-6 * (1.0 + np.abs(seeds_arr))
    keep = []
    for i in range(seeds_arr.size):
        if not any(dist[i, j] <= gate[j] for j in keep):
            keep.append(i)
    seeds_arr = seeds_arr[keep]

    coefs = np.atleast_2d(npp.polyval(seeds_arr, h1.c))  # (d1+1, S)
    d1 = coefs.shape[0] - 1
    if d1 < 1:
        return []
    rowmax = np.abs(coefs).max(axis=0)
    live = rowmax > 0
    lead_ok = live & (np.abs(coefs[-1]) > 1e-9 * rowmax)

    pair_s, pair_t = [], []
    if lead_ok.any():
        monic = coefs[:, lead_ok] / coefs[-1, lead_ok]
        comp = np.zeros((int(lead_ok.sum()), d1, d1), dtype=complex)
        comp[:, 1:, :-1] = np.eye(d1 - 1)
        comp[:, :, -1] = -monic[:-1].T
        zs = np.linalg.eigvals(comp)  # (S_ok, d1)
        s_rep = np.repeat(seeds_arr[lead_ok], d1)
        pair_s.append(s_rep)
        pair_t.append(zs.ravel())
    for idx in np.nonzero(live & ~lead_ok)[0]:
        ht = Poly(coefs[:, idx]).trim_small(1e-12)
        if ht.is_zero or ht.degree < 1:
            continue
        zt = np.atleast_1d(npp.polyroots(ht.c))
        pair_s.append(np.full(zt.size, seeds_arr[idx]))
        pair_t.append(zt)
    if not pair_s:
        return []
    ss = np.concatenate(pair_s)
    tt = np.concatenate(pair_t)

    vals = npp.polyval2d(ss, tt, h2.c)
    scales = np.maximum(npp.polyval2d(np.abs(ss), np.abs(tt), np.abs(h2.c)),
                        1e-300)
    mask = np.abs(vals) <= 1e-3 * scales
    ss, tt = ss[mask], tt[mask]

    # bucket dedupe on relatively-normalized coordinates; stragglers across
    # bucket boundaries are merged later by the pair-level dedupe
    def bucket(z):
        w = z / (1.0 + abs(z))
        return (round(w.real, 4), round(w.imag, 4))

    cands, seen = [], set()
    for s0, z in zip(ss, tt):
        key = (bucket(s0), bucket(z))
        if key not in seen:
            seen.add(key)
            cands.append((complex(s0), complex(z)))
    return cands


def _newton_1d(p: Poly, z, iters=12):
    dp = p.deriv()
    for _ in range(iters):
        d = dp(z)
        if abs(d) < 1e-300:
            break
        step = p(z) / d
        z = z - step
        if abs(step) < 1e-15 * (1.0 + abs(z)):
            break
    return z


def _canon_pair(s, t):
    def key(z):
        if is_inf_param(z):
            return (math.inf, 0.0)
        return (z.real, z.imag)

    return (s, t) if key(s) <= key(t) else (t, s)


def _pair_close(a, b, tol):
    def close(u, v):
        if is_inf_param(u) or is_inf_param(v):
            return is_inf_param(u) and is_inf_param(v)
        return abs(u - v) <= max(1e-6, 10 * tol.cluster) * (1.0 + abs(u))

    # unordered comparison: canonical ordering can flip under jitter
    return (close(a[0], b[0]) and close(a[1], b[1])) or \
           (close(a[0], b[1]) and close(a[1], b[0]))


def _dedupe_pairs(pairs, tol):
    out = []
    for s, t in pairs:
        cand = _canon_pair(complex(s) if not is_inf_param(s) else PARAM_INF,
                           complex(t) if not is_inf_param(t) else PARAM_INF)
        if not any(_pair_close(cand, known, tol) for known in out):
            out.append(cand)
    return out


def _snap_pairs(pairs, tol):
    """Snap near-real parameters onto the axis and near-conjugate pairs into
    exact conjugacy."""

    def snap_real(z):
        if is_inf_param(z):
            return z
        if abs(z.imag) <= tol.reality * (1.0 + abs(z)):
            return complex(z.real, 0.0)
        return z

    snapped = []
    for s, t in pairs:
        s = snap_real(PARAM_INF if is_inf_param(s) else complex(s))
        t = snap_real(PARAM_INF if is_inf_param(t) else complex(t))
        if (not is_inf_param(s) and not is_inf_param(t)
                and s.imag != 0 and abs(t - s.conjugate()) <=
                max(1e-6, 10 * tol.cluster) * (1.0 + abs(s))):
            t = s.conjugate()
        snapped.append(_canon_pair(s, t))
    return snapped


def _symmetrize_pairs(pairs, tol):
    """Close the pair set under conjugation (exact for real curves)."""

    def conj(z):
        return z if is_inf_param(z) else z.conjugate()

    out = list(pairs)
    for s, t in pairs:
        mate = _canon_pair(conj(s), conj(t))
        if not any(_pair_close(mate, known, tol) for known in out):
            out.append(mate)
    return out


def _classify_pairs(c, pairs, tol, report):
    av, bv = velocity_numerators(c)
    sav, sbv = chart_velocity_numerators(c)

    def direc(t):
        if is_inf_param(t) or abs(t) > 1:
            s = 0.0 if is_inf_param(t) else -1.0 / t
            v = np.array([sav(s), sbv(s)])
        else:
            v = np.array([av(t), bv(t)])
        nrm = np.linalg.norm(v)
        if nrm == 0:
            raise AuditError("audit failure: zero velocity on a validated curve")
        return v / nrm

    records = []
    for s, t in pairs:
        s_real = is_inf_param(s) or s.imag == 0
        t_real = is_inf_param(t) or t.imag == 0
        if s_real and t_real:
            v1 = direc(PARAM_INF if is_inf_param(s) else s.real)
            v2 = direc(PARAM_INF if is_inf_param(t) else t.real)
            cross = abs(v1[0] * v2[1] - v1[1] * v2[0])
            transversal = cross > tol.sign
            pt = affine_point(c, PARAM_INF if is_inf_param(s) else s.real)
            records.append(NodeRecord((s, t), (float(pt[0].real), float(pt[1].real)),
                                      REAL_NODE, transversal))
            if not transversal:
                report.reasons.append(
                    "non-transversal real double point at "
                    f"({pt[0].real:.6g}, {pt[1].real:.6g})")
        elif (not is_inf_param(s) and not is_inf_param(t)
              and t == s.conjugate() and s.imag != 0):
            x, y = affine_point(c, s)
            if max(abs(x.imag), abs(y.imag)) > 1e-4 * (1.0 + abs(x) + abs(y)):
                raise AuditError("audit failure: conjugate pair with non-real "
                                 "image")
            pt = (float(x.real), float(y.real))
            records.append(NodeRecord((s, t), pt, SOLITARY_NODE, None))
            report.reasons.append(
                f"solitary real double point at ({pt[0]:.6g}, {pt[1]:.6g})")
        else:
            x, y = affine_point(c, s if not is_inf_param(s) else t)
            records.append(NodeRecord((s, t), (complex(x), complex(y)),
                                      IMAGINARY_NODE, None))

    if report.cusp_params:
        for cp in report.cusp_params:
            report.reasons.append(f"cusp on real locus at t = {cp:.6g}")

    _reject_high_multiplicity(c, records, tol, report)
    report.nodes = records


def _reject_high_multiplicity(c, records, tol, report):
    """A parameter appearing in two pairs means three branches meet."""
    seen = []

    def match(z, w):
        if is_inf_param(z) or is_inf_param(w):
            return is_inf_param(z) and is_inf_param(w)
        return abs(z - w) <= max(1e-6, 10 * tol.cluster) * (1.0 + abs(z))

    flat = [p for nd in records for p in nd.params]
    for z in flat:
        if any(match(z, w) for w in seen):
            label = "∞" if is_inf_param(z) else f"{z:.6g}"
            msg = f"parameter multiplicity > 2 at t = {label}"
            if msg not in report.reasons:
                report.reasons.append(msg)
        else:
            seen.append(z)
