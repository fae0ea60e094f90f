"""Hot numeric kernels with a numba lane and a pure-numpy lane.

Two interchangeable implementations back each kernel: a ``@njit``-compiled
lane and a vectorized numpy lane.  The lane is chosen once at import time from
the ``POLEWIND_BACKEND`` environment variable:

* unset or ``auto`` -- numba when importable, numpy otherwise;
* ``numba``         -- force numba (warns and falls back if unavailable);
* ``numpy``         -- force the pure-numpy lane.

``benchmarks/bench_kernels.py`` times the two lanes against each other.  Both
lanes implement identical arithmetic; results agree to rounding.

Kernels
-------
turning_sum
    Total turning angle of the velocity field of a closed rational curve,
    accumulated over an adaptively bisected parameter grid.
sylvester_dets
    Batch of Sylvester-matrix determinants for two coefficient columns
    evaluated at many sample points (the evaluation stage of a resultant).
"""

from __future__ import annotations

import os
import warnings

import numpy as np
import numpy.polynomial.polynomial as npp

_HALF_PI = 0.5 * np.pi
_TWO_PI = 2.0 * np.pi

_requested = os.environ.get("POLEWIND_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"POLEWIND_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

_numba_ok = False
if _requested in ("auto", "numba"):
    try:
        from numba import njit as _njit

        _numba_ok = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        if _requested == "numba":
            warnings.warn("POLEWIND_BACKEND=numba but numba is not importable; "
                          "using the numpy lane")

BACKEND = "numba" if _numba_ok else "numpy"


# ---------------------------------------------------------------------------
# numpy lane
# ---------------------------------------------------------------------------

def _angles_numpy(u, ca, cb, csa, csb):
    """Velocity direction angle at parameter-circle positions ``u``.

    ``t = tan(u/2)`` covers the real parameter line; near ``u = pi`` the
    orientation-preserving chart ``s = -1/t = -cot(u/2)`` is used instead, so
    every evaluation point stays in ``[-1, 1]`` of its chart.
    """
    half = 0.5 * u
    out = np.empty_like(u)
    m = np.abs(u - np.pi) <= _HALF_PI
    if m.any():
        s = -np.cos(half[m]) / np.sin(half[m])
        out[m] = np.arctan2(npp.polyval(s, csb), npp.polyval(s, csa))
    mm = ~m
    if mm.any():
        t = np.tan(half[mm])
        out[mm] = np.arctan2(npp.polyval(t, cb), npp.polyval(t, ca))
    return out


def _turning_numpy(ca, cb, csa, csb, n0, max_evals, max_depth):
    u = np.linspace(0.0, _TWO_PI, n0 + 1)
    ang = _angles_numpy(u, ca, cb, csa, csb)
    ang[-1] = ang[0]
    evals = n0
    for _ in range(max_depth + 1):
        d = np.diff(ang)
        d = (d + np.pi) % _TWO_PI - np.pi
        bad = np.abs(d) >= _HALF_PI
        if not bad.any():
            return float(d.sum()), evals, True
        if evals + int(bad.sum()) > max_evals:
            return 0.0, evals, False
        pos = np.nonzero(bad)[0]
        mids = 0.5 * (u[pos] + u[pos + 1])
        mang = _angles_numpy(mids, ca, cb, csa, csb)
        evals += mids.size
        u = np.insert(u, pos + 1, mids)
        ang = np.insert(ang, pos + 1, mang)
    return 0.0, evals, False


def _sylvester_numpy(c1, c2):
    d1 = c1.shape[0] - 1
    d2 = c2.shape[0] - 1
    m = d1 + d2
    npts = c1.shape[1]
    if m == 0:
        return np.ones(npts, dtype=np.complex128)
    S = np.zeros((npts, m, m), dtype=np.complex128)
    r1 = c1[::-1].T  # (npts, d1+1), descending in t
    r2 = c2[::-1].T
    for r in range(d2):
        S[:, r, r : r + d1 + 1] = r1
    for r in range(d1):
        S[:, d2 + r, r : r + d2 + 1] = r2
    return np.linalg.det(S)


# ---------------------------------------------------------------------------
# numba lane
# ---------------------------------------------------------------------------

if _numba_ok:

    @_njit(cache=True)
    def _nb_horner(c, x):
        acc = 0.0
        for i in range(c.shape[0] - 1, -1, -1):
            acc = acc * x + c[i]
        return acc

    @_njit(cache=True)
    def _nb_angle(u, ca, cb, csa, csb):
        half = 0.5 * u
        if abs(u - np.pi) <= _HALF_PI:
            s = -np.cos(half) / np.sin(half)
            return np.arctan2(_nb_horner(csb, s), _nb_horner(csa, s))
        t = np.tan(half)
        return np.arctan2(_nb_horner(cb, t), _nb_horner(ca, t))

    @_njit(cache=True)
    def _turning_numba(ca, cb, csa, csb, n0, max_evals, max_depth):
        us = np.linspace(0.0, _TWO_PI, n0 + 1)
        ang = np.empty(n0 + 1)
        for i in range(n0):
            ang[i] = _nb_angle(us[i], ca, cb, csa, csb)
        ang[n0] = ang[0]
        evals = n0
        total = 0.0
        cap = max_depth + 2
        su0 = np.empty(cap)
        sa0 = np.empty(cap)
        su1 = np.empty(cap)
        sa1 = np.empty(cap)
        sd = np.empty(cap, dtype=np.int64)
        for k in range(n0):
            su0[0] = us[k]
            sa0[0] = ang[k]
            su1[0] = us[k + 1]
            sa1[0] = ang[k + 1]
            sd[0] = 0
            sp = 1
            while sp > 0:
                sp -= 1
                u0 = su0[sp]
                a0 = sa0[sp]
                u1 = su1[sp]
                a1 = sa1[sp]
                depth = sd[sp]
                diff = a1 - a0
                while diff > np.pi:
                    diff -= _TWO_PI
                while diff <= -np.pi:
                    diff += _TWO_PI
                if abs(diff) < _HALF_PI:
                    total += diff
                    continue
                if depth >= max_depth or evals >= max_evals:
                    return 0.0, evals, False
                um = 0.5 * (u0 + u1)
                am = _nb_angle(um, ca, cb, csa, csb)
                evals += 1
                su0[sp] = um
                sa0[sp] = am
                su1[sp] = u1
                sa1[sp] = a1
                sd[sp] = depth + 1
                sp += 1
                su0[sp] = u0
                sa0[sp] = a0
                su1[sp] = um
                sa1[sp] = am
                sd[sp] = depth + 1
                sp += 1
        return total, evals, True

    @_njit(cache=True)
    def _sylvester_numba(c1, c2):
        d1 = c1.shape[0] - 1
        d2 = c2.shape[0] - 1
        m = d1 + d2
        npts = c1.shape[1]
        out = np.empty(npts, dtype=np.complex128)
        if m == 0:
            for j in range(npts):
                out[j] = 1.0 + 0.0j
            return out
        for j in range(npts):
            S = np.zeros((m, m), dtype=np.complex128)
            for r in range(d2):
                for k in range(d1 + 1):
                    S[r, r + k] = c1[d1 - k, j]
            for r in range(d1):
                for k in range(d2 + 1):
                    S[d2 + r, r + k] = c2[d2 - k, j]
            out[j] = np.linalg.det(S)
        return out


# ---------------------------------------------------------------------------
# public dispatch
# ---------------------------------------------------------------------------

def turning_sum(ca, cb, csa, csb, n0=512, max_evals=400_000, max_depth=48):
    """Accumulated turning angle of ``atan2(B, A)`` around the parameter circle.

    ``ca``/``cb`` are the velocity numerator coefficients in the finite chart,
    ``csa``/``csb`` the same in the chart at infinity (all ascending float
    arrays).  Intervals whose wrapped angle step is >= pi/2 are bisected until
    resolved.  Returns ``(total, evaluations, ok)``; ``ok`` is False when the
    refinement budget was exhausted.
    """
    ca = np.ascontiguousarray(ca, dtype=np.float64)
    cb = np.ascontiguousarray(cb, dtype=np.float64)
    csa = np.ascontiguousarray(csa, dtype=np.float64)
    csb = np.ascontiguousarray(csb, dtype=np.float64)
    if BACKEND == "numba":
        total, evals, ok = _turning_numba(ca, cb, csa, csb, n0, max_evals, max_depth)
    else:
        total, evals, ok = _turning_numpy(ca, cb, csa, csb, n0, max_evals, max_depth)
    return float(total), int(evals), bool(ok)


def sylvester_dets(c1, c2):
    """Determinant of the Sylvester matrix per sample column.

    ``c1``/``c2`` have shape ``(d+1, npts)``: ascending coefficient columns of
    two univariate polynomials evaluated at ``npts`` sample points.  Returns a
    complex array of ``npts`` determinants.
    """
    c1 = np.ascontiguousarray(c1, dtype=np.complex128)
    c2 = np.ascontiguousarray(c2, dtype=np.complex128)
    if c1.ndim != 2 or c2.ndim != 2 or c1.shape[1] != c2.shape[1]:
        raise ValueError("coefficient columns must be 2-D with matching widths")
    if BACKEND == "numba":
        return _sylvester_numba(c1, c2)
    return _sylvester_numpy(c1, c2)


def warmup():
    """Force compilation/caching of the active lane on tiny inputs."""
    turning_sum(np.array([0.0, -4.0]), np.array([2.0, 0.0, -2.0]),
                np.array([0.0, 4.0]), np.array([-2.0, 0.0, 2.0]), n0=16)
    ones = np.ones((2, 3))
    sylvester_dets(ones, ones)
