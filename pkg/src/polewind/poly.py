"""Dense polynomial arithmetic over real and complex floats.

Provides the computational substrate for the whole package: univariate
polynomials with ascending coefficients, complex root finding with
multiplicity clustering, approximate common-divisor removal, bivariate
polynomials and resultants by evaluation/interpolation.

Conventions
-----------
* Coefficients ascend: ``c[k]`` multiplies ``t**k``.
* The zero polynomial is explicit; its degree is ``-inf``.
* A "real" polynomial stores a float64 array; everything else complex128.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.polynomial.polynomial as npp

from .errors import GcdError, ResultantError, RootFindingError
from .kernels import sylvester_dets
from .tolerances import DEFAULT_TOL, TolProfile

NEG_INF = float("-inf")


def _as_coeff_array(coeffs) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs))
    if c.ndim != 1 or c.size == 0:
        raise ValueError("coefficients must be a nonempty 1-D sequence")
    c = c.astype(np.complex128) if np.iscomplexobj(c) else c.astype(np.float64)
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients must be finite")
    nz = np.nonzero(c)[0]
    return c[: nz[-1] + 1] if nz.size else c[:1] * 0


class Poly:
    """Immutable dense polynomial, real (float64) or complex (complex128)."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = _as_coeff_array(coeffs)
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.c.size == 1 and self.c[0] == 0

    @property
    def degree(self):
        """Integer degree, or -inf for the zero polynomial."""
        return NEG_INF if self.is_zero else self.c.size - 1

    @property
    def is_real(self) -> bool:
        return self.c.dtype.kind == "f"

    @property
    def scale(self) -> float:
        """Max absolute coefficient (0 for the zero polynomial)."""
        return float(np.abs(self.c).max())

    def coeff_bound(self, z) -> float:
        """Crude evaluation bound ``max|c| * (1+|z|)**deg`` used for gates."""
        if self.is_zero:
            return 0.0
        return self.scale * (1.0 + abs(z)) ** (self.c.size - 1)

    # -- evaluation and calculus --------------------------------------------

    def __call__(self, x):
        return npp.polyval(x, self.c)

    def deriv(self, m: int = 1) -> "Poly":
        if self.is_zero:
            return self
        if m >= self.c.size:
            return Poly(self.c[:1] * 0)
        return Poly(npp.polyder(self.c, m))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        return Poly(npp.polyadd(self.c, other.c))

    __radd__ = __add__

    def __sub__(self, other):
        other = other if isinstance(other, Poly) else Poly([other])
        return Poly(npp.polysub(self.c, other.c))

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly([0.0])
            return Poly(npp.polymul(self.c, other.c))
        return Poly(self.c * other)

    __rmul__ = __mul__

    def __neg__(self):
        return Poly(-self.c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        return Poly(npp.polypow(self.c, k)) if k else Poly([1.0])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        return Poly(self.c / self.c[-1])

    # -- transforms ----------------------------------------------------------

    def compose_negate(self) -> "Poly":
        """p(-t)."""
        signs = np.where(np.arange(self.c.size) % 2 == 0, 1.0, -1.0)
        return Poly(self.c * signs)

    def chart(self, n: int) -> "Poly":
        """``s**n * p(-1/s)`` -- the degree-``n`` chart at parameter infinity.

        The substitution ``s = -1/t`` preserves orientation (``ds/dt > 0``).
        """
        if self.is_zero:
            return self
        d = self.c.size - 1
        if n < d:
            raise ValueError("chart degree below polynomial degree")
        out = np.zeros(n + 1, dtype=self.c.dtype)
        for k in range(d + 1):
            out[n - k] = self.c[k] * (-1.0) ** k
        return Poly(out)

    def trim_small(self, rel: float) -> "Poly":
        """Drop leading coefficients at or below ``rel * scale``."""
        if self.is_zero:
            return self
        gate = rel * self.scale
        c = self.c
        k = c.size - 1
        while k > 0 and abs(c[k]) <= gate:
            k -= 1
        if abs(c[k]) <= gate:
            return Poly([0.0])
        return Poly(c[: k + 1])

    def as_real(self, rel: float = 1e-9) -> "Poly":
        """Cast to a real polynomial, requiring tiny imaginary content."""
        if self.is_real:
            return self
        im = float(np.abs(self.c.imag).max())
        if im > rel * max(self.scale, 1.0):
            raise ValueError(f"imaginary content {im:g} too large for real cast")
        return Poly(self.c.real)

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly([0.0])

    @staticmethod
    def one() -> "Poly":
        return Poly([1.0])

    @staticmethod
    def x() -> "Poly":
        return Poly([0.0, 1.0])

    @staticmethod
    def from_roots(roots_) -> "Poly":
        return Poly(npp.polyfromroots(np.asarray(roots_)))

    def __repr__(self):
        return f"Poly({np.array2string(self.c, precision=6, suppress_small=False)})"


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicities; sum of multiplicities equals the degree."""

    pairs: tuple  # of (complex location, int multiplicity)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    def locations(self):
        return [z for z, _ in self.pairs]

    def upper(self):
        return [(z, m) for z, m in self.pairs if z.imag > 0]

    def reals(self):
        return [(z.real, m) for z, m in self.pairs if z.imag == 0]


class _LazyDerivs:
    """Derivative chain p, p', p'', ... materialized on demand."""

    def __init__(self, p: Poly):
        self.chain = [p]

    def __getitem__(self, j: int) -> Poly:
        while len(self.chain) <= j:
            self.chain.append(self.chain[-1].deriv())
        return self.chain[j]


def _newton_polish(derivs, z, bound_fn, iters=12):
    """Newton-polish ``z`` on derivs[0]; returns the best-residual iterate."""
    p, dp = derivs[0], derivs[1]
    best, best_res = z, abs(p(z)) / max(bound_fn(p, z), 1e-300)
    for _ in range(iters):
        dv = dp(z)
        if abs(dv) < 1e-300:
            break
        step = p(z) / dv
        z = z - step
        res = abs(p(z)) / max(bound_fn(p, z), 1e-300)
        if res < best_res:
            best, best_res = z, res
        if res < 1e-16 or abs(step) < 1e-16 * (1.0 + abs(z)):
            break
    return best


def _polish_vec(p: Poly, dp: Poly, zs: np.ndarray, iters=12) -> np.ndarray:
    """Vectorized Newton polish of all raw roots, keeping best residuals."""
    deg = p.c.size - 1

    def relres(z):
        return np.abs(p(z)) / np.maximum((1.0 + np.abs(z)) ** deg, 1e-300)

    z = zs.astype(complex)
    best = z.copy()
    best_res = relres(z)
    for _ in range(iters):
        dv = dp(z)
        ok = np.abs(dv) > 1e-300
        step = np.where(ok, p(z) / np.where(ok, dv, 1.0), 0.0)
        z = z - step
        res = relres(z)
        better = res < best_res
        best[better] = z[better]
        best_res[better] = res[better]
        if (best_res < 1e-16).all():
            break
    return best


def _bound(p: Poly, z) -> float:
    return p.coeff_bound(z)


def _single_linkage(items, radius_fn):
    """Greedy single-linkage clustering of (location, count) items."""
    n = len(items)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        zi = items[i][0]
        for j in range(i + 1, n):
            zj = items[j][0]
            if abs(zi - zj) <= min(radius_fn(zi), radius_fn(zj)):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(items[i])
    return list(groups.values())


def _verify_multiple(derivs, z, m, tol: TolProfile):
    """Polish ``z`` as a multiplicity-``m`` root and verify derivative decay.

    A root of multiplicity m is a simple root of the (m-1)-th derivative;
    polish there, then require |p^(j)(z)| small for all j < m.
    """
    deg = derivs[0].c.size - 1
    if m > deg:
        return None
    z = _newton_polish((derivs[m - 1], derivs[m]), z, _bound, iters=24)
    for j in range(m):
        pj = derivs[j]
        if abs(pj(z)) > tol.multiplicity * max(_bound(pj, z), 1e-300):
            return None
    return z


def _merge_verified(derivs, items, radius, tol: TolProfile):
    """Recursive verified merging of root clusters at shrinking radii."""
    if len(items) <= 1 or radius < tol.cluster:
        return items
    out = []
    for group in _single_linkage(items, lambda z: radius * (1.0 + abs(z))):
        if len(group) == 1:
            out.append(group[0])
            continue
        m = sum(cnt for _, cnt in group)
        center = sum(z * cnt for z, cnt in group) / m
        polished = _verify_multiple(derivs, center, m, tol)
        if polished is not None:
            out.append((polished, m))
        else:
            out.extend(_merge_verified(derivs, group, radius / 4.0, tol))
    return out


def roots(p: Poly, tol: TolProfile = DEFAULT_TOL, strict: bool = True) -> RootSet:
    """All complex roots of ``p`` with multiplicities.

    Companion-matrix eigenvalues seed the roots; simple roots are Newton
    polished.  Clusters tighter than ``tol.cluster`` merge unconditionally;
    wider clusters (up to ``tol.multi_radius``) merge only when the merged
    point verifiably annihilates the first ``m-1`` derivatives, which recovers
    multiple roots despite the ``eps**(1/m)`` eigenvalue scatter.  For real
    input the result is conjugation-closed bit-exactly, and roots within
    ``tol.reality * (1+|z|)`` of the real axis are snapped onto it.

    With ``strict=False`` the residual/pairing contract failures are not
    raised; callers that only need root locations as seeds use this.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("roots() needs a nonzero polynomial of degree >= 1")
    work = Poly(p.c / p.scale)
    deg = work.c.size - 1
    derivs = _LazyDerivs(work)

    raw = np.atleast_1d(npp.polyroots(work.c))
    polished = [complex(z) for z in _polish_vec(work, derivs[1], raw)]

    # Reality snap before clustering so conjugate mates collapse symmetrically.
    def snap(z):
        if p.is_real and abs(z.imag) <= tol.reality * (1.0 + abs(z)):
            return complex(z.real, 0.0)
        return z

    items = [(snap(z), 1) for z in polished]

    # Unconditional tight clustering, then verified wider merging.
    merged = []
    for group in _single_linkage(items, lambda z: tol.cluster * (1.0 + abs(z))):
        m = sum(cnt for _, cnt in group)
        if m == 1:
            merged.append(group[0])
            continue
        center = sum(z * cnt for z, cnt in group) / m
        polished_c = _verify_multiple(derivs, center, m, tol)
        merged.append((polished_c if polished_c is not None else center, m))
    merged = _merge_verified(derivs, merged, tol.multi_radius, tol)
    merged = [(snap(z), m) for z, m in merged]

    if p.is_real:
        merged = _conjugate_close(merged, tol, strict)

    if strict:
        for z, m in merged:
            res = abs(work(z))
            if res > tol.residual * max(_bound(work, z), 1e-300):
                raise RootFindingError(
                    f"root-finding failure: residual {res:.3e} at {z:.6g} "
                    f"exceeds contract")

    merged.sort(key=lambda zm: (zm[0].real, zm[0].imag))
    out = RootSet(tuple((complex(z), int(m)) for z, m in merged))
    assert out.total == deg
    return out


def _conjugate_close(items, tol: TolProfile, strict: bool):
    """Force bit-exact conjugate pairing for roots of a real polynomial."""
    reals = [(z, m) for z, m in items if z.imag == 0]
    uppers = [(z, m) for z, m in items if z.imag > 0]
    lowers = [(z, m) for z, m in items if z.imag < 0]
    out = list(reals)
    used = [False] * len(lowers)
    for z, m in uppers:
        best, best_d = -1, math.inf
        for j, (w, mw) in enumerate(lowers):
            if used[j] or mw != m:
                continue
            d = abs(w - z.conjugate())
            if d < best_d:
                best, best_d = j, d
        if best < 0 or best_d > max(tol.multi_radius, 10 * tol.cluster) * (1.0 + abs(z)):
            if strict:
                raise RootFindingError(
                    "root-finding failure: conjugate closure could not be "
                    f"enforced near {z:.6g}")
            out.append((z, m))
            continue
        used[best] = True
        out.append((z, m))
        out.append((z.conjugate(), m))
    for j, (w, m) in enumerate(lowers):
        if not used[j]:
            if strict:
                raise RootFindingError(
                    "root-finding failure: unpaired lower-half root "
                    f"{w:.6g}")
            out.append((w, m))
    return out


def root_multiplicity(p: Poly, z, tol: TolProfile = DEFAULT_TOL,
                      gate: float | None = None) -> int:
    """Numeric multiplicity of ``z`` as a root of ``p`` (0 when not a root)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    gate = tol.pair if gate is None else gate
    m = 0
    d = p
    while m <= p.degree:
        if abs(d(z)) > gate * max(_bound(d, z), 1e-300):
            break
        m += 1
        d = d.deriv()
    return m


# ---------------------------------------------------------------------------
# approximate gcd clearing
# ---------------------------------------------------------------------------

def gcd_clear(ps, tol: TolProfile = DEFAULT_TOL):
    """Divide out the approximate common divisor of a family of polynomials.

    Returns ``(cleared, divisor)`` where ``cleared[i] * divisor ~= ps[i]`` and
    the cleared family has no common root within tolerance.  The divisor is
    monic.  Root-matching approach: roots of the lowest-degree member are
    tested against every other member with derivative counting for shared
    multiplicity.
    """
    polys = [q if isinstance(q, Poly) else Poly(q) for q in ps]
    nonzero = [q for q in polys if not q.is_zero]
    if not nonzero:
        raise ValueError("gcd_clear needs at least one nonzero polynomial")
    if any(q.degree == 0 for q in nonzero):
        return list(polys), Poly.one()

    ref = min(nonzero, key=lambda q: q.degree)
    others = [q for q in nonzero if q is not ref]
    common = []
    for z, m in roots(ref, tol, strict=False).pairs:
        mc = m
        for q in others:
            mc = min(mc, root_multiplicity(q, z, tol))
            if mc == 0:
                break
        if mc > 0:
            common.append((z, mc))
    if not common:
        return list(polys), Poly.one()

    all_real = all(q.is_real for q in polys)
    divisor = _poly_from_clustered_roots(common, real=all_real)

    cleared = []
    for q in polys:
        if q.is_zero:
            cleared.append(q)
            continue
        quo, rem = npp.polydiv(q.c, divisor.c)
        if np.abs(rem).max() > tol.division * max(q.scale, 1e-300) * max(divisor.scale, 1.0):
            raise GcdError(
                f"gcd failure: division remainder {np.abs(rem).max():.3e} too "
                "large")
        cleared.append(Poly(quo))
    return cleared, divisor


def _poly_from_clustered_roots(pairs, real: bool) -> Poly:
    """Monic polynomial from (root, multiplicity) pairs; real output when the
    set is conjugation-closed and ``real`` is requested."""
    if not real:
        rts = []
        for z, m in pairs:
            rts.extend([z] * m)
        return Poly(npp.polyfromroots(np.asarray(rts, dtype=complex)))
    c = np.array([1.0])
    done = set()
    for i, (z, m) in enumerate(pairs):
        if i in done:
            continue
        if z.imag == 0:
            factor = np.array([-z.real, 1.0])
            for _ in range(m):
                c = npp.polymul(c, factor)
            done.add(i)
            continue
        # find the conjugate mate and emit a real quadratic factor
        mate = None
        for j, (w, mw) in enumerate(pairs):
            if j != i and j not in done and mw == m and w == z.conjugate():
                mate = j
                break
        if mate is None:
            raise GcdError("gcd failure: common roots not conjugation-closed")
        quad = np.array([abs(z) ** 2, -2.0 * z.real, 1.0])
        for _ in range(m):
            c = npp.polymul(c, quad)
        done.add(i)
        done.add(mate)
    return Poly(c)


# ---------------------------------------------------------------------------
# bivariate polynomials and resultants
# ---------------------------------------------------------------------------

class BivarPoly:
    """Dense bivariate polynomial; ``c[j, k]`` multiplies ``s**j * t**k``."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = np.atleast_2d(np.asarray(coeffs))
        if c.ndim != 2 or c.size == 0:
            raise ValueError("coefficient matrix must be 2-D and nonempty")
        c = c.astype(np.complex128) if np.iscomplexobj(c) else c.astype(np.float64)
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        nzr = np.nonzero(np.any(c != 0, axis=1))[0]
        nzc = np.nonzero(np.any(c != 0, axis=0))[0]
        if nzr.size == 0:
            c = c[:1, :1] * 0
        else:
            c = c[: nzr[-1] + 1, : nzc[-1] + 1]
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    @property
    def is_zero(self) -> bool:
        return self.c.shape == (1, 1) and self.c[0, 0] == 0

    @property
    def deg_s(self):
        return NEG_INF if self.is_zero else self.c.shape[0] - 1

    @property
    def deg_t(self):
        return NEG_INF if self.is_zero else self.c.shape[1] - 1

    @property
    def scale(self) -> float:
        return float(np.abs(self.c).max())

    def __call__(self, s, t):
        return npp.polyval2d(s, t, self.c)

    def eval_s(self, s0) -> Poly:
        """Freeze ``s = s0``; returns the resulting polynomial in ``t``."""
        return Poly(npp.polyval(s0, self.c))

    def deriv_s(self) -> "BivarPoly":
        if self.c.shape[0] == 1:
            return BivarPoly(self.c[:1] * 0)
        return BivarPoly(npp.polyder(self.c, axis=0))

    def deriv_t(self) -> "BivarPoly":
        if self.c.shape[1] == 1:
            return BivarPoly(self.c[:, :1] * 0)
        return BivarPoly(npp.polyder(self.c, axis=1))

    def __repr__(self):
        return f"BivarPoly(deg_s={self.deg_s}, deg_t={self.deg_t})"


def cross_difference(p: Poly, q: Poly) -> BivarPoly:
    """``(p(s) q(t) - p(t) q(s)) / (t - s)`` as a bivariate polynomial.

    The numerator is antisymmetric, so the division is exact; it is carried
    out by synthetic division in ``t``.  Shared roots of the result (in both
    variables) locate parameter pairs with proportional homogeneous images.
    """
    pc, qc = p.c, q.c
    d = max(pc.size, qc.size) - 1
    if d < 1:
        return BivarPoly([[0.0]])
    dtype = np.result_type(pc, qc)
    pc = np.pad(pc.astype(dtype), (0, d + 1 - pc.size))
    qc = np.pad(qc.astype(dtype), (0, d + 1 - qc.size))
    # F as a polynomial in t with coefficient polys in s:
    #   coeff of t**k is q_k * p(s) - p_k * q(s)
    f = [qc[k] * pc - pc[k] * qc for k in range(d + 1)]

    def add_shifted(base, acc):
        # base + s * acc
        out = np.zeros(max(base.size, acc.size + 1), dtype=dtype)
        out[: base.size] += base
        out[1 : acc.size + 1] += acc
        return out

    # divide by (t - s): Q_{d-1} = f_d; Q_{k-1} = f_k + s * Q_k
    cols = [None] * d
    acc = f[d]
    cols[d - 1] = acc
    for k in range(d - 1, 0, -1):
        acc = add_shifted(f[k], acc)
        cols[k - 1] = acc
    rem = add_shifted(f[0], cols[0])
    scale = max(max(np.abs(v).max() for v in f), 1e-300)
    if np.abs(rem).max() > 1e-9 * scale:
        raise ValueError("cross difference division left a remainder")
    rows = max(col.size for col in cols)
    mat = np.zeros((rows, d), dtype=dtype)
    for k, col in enumerate(cols):
        mat[: col.size, k] = col
    peak = np.abs(mat).max()
    if peak > 0:
        mat[np.abs(mat) <= 1e-13 * peak] = 0.0
    return BivarPoly(mat)


# Fixed generic sample points for the structural vanishing test; any points
# off the finitely many exceptional parameters work, so arbitrary irrational
# constants do.
_GENERIC_S = (0.73913015 + 0.38834887j, -1.2024131 + 0.90443451j,
              0.31272458 - 1.67114309j, 2.03918342 + 0.51423521j)


def _shares_t_root(h1: BivarPoly, h2: BivarPoly, s0, tol: TolProfile):
    """Whether h1(s0, .) and h2(s0, .) have a common t-root.

    Returns None when the sample is degenerate (a coefficient collapse).
    """
    pt1 = h1.eval_s(s0).trim_small(1e-12)
    pt2 = h2.eval_s(s0).trim_small(1e-12)
    if pt1.degree < 1 or pt2.degree < 1:
        return None
    for z in roots(pt1, tol, strict=False).locations():
        z = _newton_root(pt1, z)
        if abs(pt2(z)) <= 1e-8 * max(pt2.coeff_bound(z), 1e-300):
            return True
    return False


def _newton_root(p: Poly, z, iters=10):
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


def _vanishes_structurally(h1, h2, tol) -> bool:
    """True when the two polynomials share a factor of positive t-degree,
    i.e. when they share a t-root at every generic s."""
    votes = 0
    for s0 in _GENERIC_S:
        got = _shares_t_root(h1, h2, s0, tol)
        if got is None:
            continue
        if not got:
            return False
        votes += 1
        if votes == 3:
            return True
    return votes > 0


def resultant_t(h1: BivarPoly, h2: BivarPoly,
                tol: TolProfile = DEFAULT_TOL) -> Poly:
    """Resultant of ``h1`` and ``h2`` with respect to ``t``.

    Evaluation/interpolation: the Sylvester determinant (at the nominal
    ``t``-degrees) is sampled at roots of unity and inverted by FFT, which
    keeps the power-basis interpolation perfectly conditioned at any degree.
    An identically vanishing resultant is reported as the zero polynomial,
    the distinguished "vanishing resultant" value; the decision is made
    structurally (a shared ``t``-root at generic ``s``), since determinant
    magnitudes of genuinely nonzero resultants can sit below any worst-case
    rounding bound.
    """
    if h1.is_zero or h2.is_zero:
        raise ValueError("resultant of a zero polynomial")
    d1, e1 = h1.c.shape[1] - 1, h1.c.shape[0] - 1
    d2, e2 = h2.c.shape[1] - 1, h2.c.shape[0] - 1
    if d1 == 0 and d2 == 0:
        return Poly([1.0])
    if d1 == 0:
        base = Poly(h1.c[:, 0])
        return base ** d2
    if d2 == 0:
        base = Poly(h2.c[:, 0])
        return base ** d1

    if _vanishes_structurally(h1, h2, tol):
        return Poly.zero()

    n_bound = d1 * e2 + d2 * e1
    npts = n_bound + 1
    # forward-DFT nodes, so np.fft.ifft of the sampled values is exactly the
    # coefficient vector
    nodes = np.exp(-2j * np.pi * np.arange(npts) / npts)
    c1 = np.atleast_2d(npp.polyval(nodes, h1.c))  # (d1+1, npts)
    c2 = np.atleast_2d(npp.polyval(nodes, h2.c))
    dets = sylvester_dets(c1, c2)
    peak = float(np.abs(dets).max())
    if peak == 0.0:
        return Poly.zero()

    coeffs = np.fft.ifft(dets)
    real_inputs = h1.c.dtype.kind == "f" and h2.c.dtype.kind == "f"
    if real_inputs:
        im = float(np.abs(coeffs.imag).max())
        if im > 1e-7 * max(np.abs(coeffs).max(), 1e-300):
            raise ResultantError("resultant failure: non-real interpolation "
                                 f"residue {im:.3e}")
        coeffs = coeffs.real

    res = Poly(coeffs).trim_small(1e-11)
    check = npp.polyval(nodes, res.c) if not res.is_zero else np.zeros(npts)
    err = float(np.abs(check - dets).max())
    if err > 1e-7 * max(peak, 1e-300):
        raise ResultantError(f"resultant failure: interpolation error {err:.3e}")
    return res


SEED_RADII = (0.25, 1.0, 4.0, 16.0, 64.0)


def _radius_scaled(c: np.ndarray, rho: float) -> np.ndarray:
    """Coefficient matrix of ``h(rho*s, rho*t)``, normalized to unit peak."""
    j = np.arange(c.shape[0])[:, None]
    k = np.arange(c.shape[1])[None, :]
    out = c * rho ** (j + k)
    return out / np.abs(out).max()


def resultant_root_seeds(h1: BivarPoly, h2: BivarPoly,
                         tol: TolProfile = DEFAULT_TOL,
                         radii=SEED_RADII):
    """Root locations of ``Res_t(h1, h2)`` for use as solver seeds.

    A single interpolation radius only resolves resultant roots in an annulus
    around it: a high-degree resultant's coefficients span too many orders of
    magnitude for one scale to see everything.  Sampling at several radii
    (with the variables rescaled to keep determinants in floating range)
    covers the whole root range; callers polish the returned locations on
    their own system, so seed quality suffices.
    """
    if h1.is_zero or h2.is_zero:
        raise ValueError("resultant of a zero polynomial")
    d1, e1 = h1.c.shape[1] - 1, h1.c.shape[0] - 1
    d2, e2 = h2.c.shape[1] - 1, h2.c.shape[0] - 1
    if d1 == 0 or d2 == 0:
        base = Poly(h1.c[:, 0]) if d1 == 0 else Poly(h2.c[:, 0])
        if base.degree < 1:
            return []
        return roots(base, tol, strict=False).locations()
    n_bound = d1 * e2 + d2 * e1
    npts = n_bound + 1
    nodes = np.exp(-2j * np.pi * np.arange(npts) / npts)
    seeds = []
    for idx, rho in enumerate(radii):
        a = _radius_scaled(h1.c, rho)
        b = _radius_scaled(h2.c, rho)
        c1 = np.atleast_2d(npp.polyval(nodes, a))
        c2 = np.atleast_2d(npp.polyval(nodes, b))
        dets = sylvester_dets(c1, c2)
        peak = float(np.abs(dets).max())
        if peak == 0.0 or not np.isfinite(peak):
            continue
        coeffs = np.fft.ifft(dets / peak)
        if h1.c.dtype.kind == "f" and h2.c.dtype.kind == "f":
            coeffs = coeffs.real
        scaled = Poly(coeffs).trim_small(1e-12)
        if scaled.is_zero or scaled.degree < 1:
            continue
        # each radius is trusted on an annulus; with radii 4x apart the
        # windows [0.2, 5] tile the plane (end radii extend outward/inward)
        lo = 0.0 if idx == 0 else 0.2
        hi = math.inf if idx == len(radii) - 1 else 5.0
        for z in np.atleast_1d(npp.polyroots(scaled.c)):
            if lo <= abs(z) <= hi:
                seeds.append(rho * complex(z))
    out = []
    for z in seeds:
        if not any(abs(z - w) <= 1e-6 * (1.0 + abs(w)) for w in out):
            out.append(z)
    return out
