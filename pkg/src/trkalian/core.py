"""Geometry, quadrature, special functions and finite-difference oracles.

Everything downstream (frames, fields, transforms) builds on the helpers
here: unit directions on S^2, product quadratures on the sphere and on
truncated planes, integer-order Bessel functions, and high-order central
difference oracles for curl / divergence / gradient / Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special

DIRECTION_TOL = 1e-12


def unit(v: np.ndarray) -> np.ndarray:
    """Normalize vector(s) along the last axis."""
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def as_direction(v, tol: float = DIRECTION_TOL) -> np.ndarray:
    """Validate that ``v`` is a unit 3-vector (or batch thereof) and return it.

    Raises ValueError if any norm deviates from 1 by more than ``tol``.
    """
    v = np.asarray(v, dtype=float)
    if v.shape[-1] != 3:
        raise ValueError(f"direction must have 3 components, got shape {v.shape}")
    n = np.linalg.norm(v, axis=-1)
    if np.any(np.abs(n - 1.0) > tol):
        raise ValueError(f"direction not unit: |norm - 1| = {np.max(np.abs(n - 1.0)):.3e}")
    return v


# ---------------------------------------------------------------------------
# sphere quadrature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphereQuadrature:
    """Nodes and weights on the unit sphere.

    ``nodes`` has shape (n, 3), ``weights`` shape (n,) in steradians and sums
    to 4 pi.  When ``antipodal`` is set the node set is closed under
    kappa -> -kappa exactly (bitwise) and ``antipode_index[i]`` gives the
    partner of node i.
    """

    nodes: np.ndarray
    weights: np.ndarray
    antipodal: bool = False
    antipode_index: np.ndarray | None = None

    @property
    def n(self) -> int:
        return self.nodes.shape[0]

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """Sum values (n, ...) against the weights (deterministic pairwise sum)."""
        values = np.asarray(values)
        w = self.weights.reshape((-1,) + (1,) * (values.ndim - 1))
        return np.sum(w * values, axis=0)


def sphere_quadrature(n_polar: int, n_azimuth: int, antipodal: bool = False) -> SphereQuadrature:
    """Product Gauss-Legendre (in cos(theta)) x uniform azimuth rule on S^2.

    The uniform azimuth grid is spectrally accurate for periodic integrands.
    With ``antipodal`` the azimuth count must be even and nodes are mirrored
    exactly so each node has a bitwise negated partner.
    """
    if n_polar < 2 or n_azimuth < 4:
        raise ValueError("need n_polar >= 2 and n_azimuth >= 4")
    if antipodal and n_azimuth % 2 != 0:
        raise ValueError("antipodal closure requires an even azimuth count")

    u, wu = np.polynomial.legendre.leggauss(n_polar)
    # enforce exact +/- symmetry of the Legendre nodes
    u = 0.5 * (u - u[::-1])
    wu = 0.5 * (wu + wu[::-1])
    phi = 2.0 * np.pi * np.arange(n_azimuth) / n_azimuth

    st = np.sqrt(np.clip(1.0 - u * u, 0.0, None))
    nodes = np.empty((n_polar, n_azimuth, 3))
    nodes[:, :, 0] = st[:, None] * np.cos(phi)[None, :]
    nodes[:, :, 1] = st[:, None] * np.sin(phi)[None, :]
    nodes[:, :, 2] = u[:, None]
    weights = np.broadcast_to(wu[:, None] * (2.0 * np.pi / n_azimuth), (n_polar, n_azimuth)).copy()

    antipode_index = None
    if antipodal:
        idx = np.arange(n_polar * n_azimuth).reshape(n_polar, n_azimuth)
        partner = np.empty_like(idx)
        half = n_azimuth // 2
        for iu in range(n_polar):
            ju = n_polar - 1 - iu
            for ip in range(n_azimuth):
                jp = (ip + half) % n_azimuth
                partner[iu, ip] = idx[ju, jp]
                # overwrite the partner node with the exact negation so the
                # pairing is bitwise, not just within rounding
                if (ju, jp) > (iu, ip):
                    nodes[ju, jp] = -nodes[iu, ip]
        antipode_index = partner.reshape(-1)

    return SphereQuadrature(
        nodes=nodes.reshape(-1, 3),
        weights=weights.reshape(-1),
        antipodal=antipodal,
        antipode_index=antipode_index,
    )


# ---------------------------------------------------------------------------
# plane basis and plane quadrature
# ---------------------------------------------------------------------------

def plane_basis(kappa: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic right-handed orthonormal basis (e1, e2) of the plane normal to kappa.

    Seed axis is the coordinate axis with the smallest |kappa component|
    (first index on ties), orthogonalized against kappa; e2 = kappa x e1.
    """
    k = as_direction(kappa)
    seed = np.zeros(3)
    seed[int(np.argmin(np.abs(k)))] = 1.0
    e1 = seed - np.dot(seed, k) * k
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(k, e1)
    return e1, e2


@dataclass(frozen=True)
class PlaneQuadrature:
    """Tensor quadrature over the square [-half_width, half_width]^2."""

    half_width: float
    n_per_axis: int
    rule: str = "gauss-legendre"

    def __post_init__(self):
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.n_per_axis < 2:
            raise ValueError("need at least 2 nodes per axis")
        if self.rule not in ("gauss-legendre", "trapezoid"):
            raise ValueError(f"unknown rule {self.rule!r}")

    def nodes_1d(self) -> tuple[np.ndarray, np.ndarray]:
        if self.rule == "gauss-legendre":
            x, w = np.polynomial.legendre.leggauss(self.n_per_axis)
            return self.half_width * x, self.half_width * w
        x = np.linspace(-self.half_width, self.half_width, self.n_per_axis)
        w = np.full(self.n_per_axis, x[1] - x[0])
        w[0] *= 0.5
        w[-1] *= 0.5
        return x, w


# ---------------------------------------------------------------------------
# Bessel functions
# ---------------------------------------------------------------------------

def bessel_j(m: int, x) -> np.ndarray | float:
    """Bessel function of the first kind J_m for integer order m >= 0, x >= 0."""
    if m < 0 or int(m) != m:
        raise ValueError("order must be a non-negative integer")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("bessel_j requires x >= 0")
    out = special.jv(int(m), x)
    return float(out) if out.ndim == 0 else out


def bessel_j1_first_zero() -> float:
    """First positive zero of J_1, by bisection bracketed in (3, 4)."""
    lo, hi = 3.0, 4.0
    flo = bessel_j(1, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = bessel_j(1, mid)
        if flo * fm <= 0:
            hi = mid
        else:
            lo, flo = mid, fm
        if hi - lo < 1e-14:
            break
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# finite-difference oracles
# ---------------------------------------------------------------------------

FD_DEFAULT_STEP = 1e-3

_D1_OFFSETS = np.array([-2.0, -1.0, 1.0, 2.0])
_D1_WEIGHTS = np.array([1.0, -8.0, 8.0, -1.0]) / 12.0
_D2_OFFSETS = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
_D2_WEIGHTS = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0


def _fd_first_derivatives(fn, x: np.ndarray, h: float) -> np.ndarray:
    """All first partials by 4th-order central differences.

    Returns d[i] = dF/dx_i, each entry shaped like fn's output.
    """
    x = np.asarray(x, dtype=float)
    pts = x[None, None, :] + h * _D1_OFFSETS[:, None, None] * np.eye(3)[None, :, :]
    vals = np.asarray(fn(pts.reshape(-1, 3)))
    vals = vals.reshape((4, 3) + vals.shape[1:])
    return np.tensordot(_D1_WEIGHTS, vals, axes=(0, 0)) / h


def fd_derivative_oracle(fn, x, kind: str, h: float = FD_DEFAULT_STEP):
    """4th-order central-difference derivative of a smooth field at a point.

    ``fn`` must accept a batch of positions (n, 3).  ``kind`` is one of
    "curl" / "divergence" (vector fields), "gradient" (scalar fields) or
    "laplacian" (either; acts componentwise).  Error is O(h^4).
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    x = np.asarray(x, dtype=float)

    if kind in ("curl", "divergence", "gradient"):
        d = _fd_first_derivatives(fn, x, h)
        if kind == "gradient":
            return d
        if d.ndim != 2 or d.shape[1] != 3:
            raise ValueError("curl/divergence need a 3-vector field")
        if kind == "divergence":
            return d[0, 0] + d[1, 1] + d[2, 2]
        return np.array([
            d[1, 2] - d[2, 1],
            d[2, 0] - d[0, 2],
            d[0, 1] - d[1, 0],
        ])

    if kind == "laplacian":
        pts = x[None, None, :] + h * _D2_OFFSETS[:, None, None] * np.eye(3)[None, :, :]
        vals = np.asarray(fn(pts.reshape(-1, 3)))
        vals = vals.reshape((5, 3) + vals.shape[1:])
        second = np.tensordot(_D2_WEIGHTS, vals, axes=(0, 0)) / h**2
        return second[0] + second[1] + second[2]

    raise ValueError(f"unknown derivative kind {kind!r}")


def fd_field(fn, kind: str, h: float = FD_DEFAULT_STEP):
    """Vectorized field of finite-difference derivatives of ``fn``.

    Returns a callable accepting positions (..., 3); all stencil evaluations
    for a batch are fused into a single call of ``fn``.
    """
    if kind not in ("curl", "divergence", "gradient", "laplacian"):
        raise ValueError(f"unknown derivative kind {kind!r}")

    def derived(x):
        x = np.asarray(x, dtype=float)
        flat = x.reshape(-1, 3)
        if kind == "laplacian":
            offsets, weights, denom = _D2_OFFSETS, _D2_WEIGHTS, h**2
        else:
            offsets, weights, denom = _D1_OFFSETS, _D1_WEIGHTS, h
        pts = (flat[:, None, None, :]
               + h * offsets[None, :, None, None] * np.eye(3)[None, None, :, :])
        vals = np.asarray(fn(pts.reshape(-1, 3)))
        vals = vals.reshape((flat.shape[0], offsets.size, 3) + vals.shape[1:])
        d = np.tensordot(vals, weights, axes=(1, 0)) / denom  # (n, 3[, comps])
        if kind == "laplacian":
            out = d[:, 0] + d[:, 1] + d[:, 2]
            return out.reshape(x.shape[:-1] + out.shape[1:])
        if kind == "gradient":
            return d.reshape(x.shape[:-1] + (3,))
        if kind == "divergence":
            out = d[:, 0, 0] + d[:, 1, 1] + d[:, 2, 2]
            return out.reshape(x.shape[:-1])
        out = np.stack([
            d[:, 1, 2] - d[:, 2, 1],
            d[:, 2, 0] - d[:, 0, 2],
            d[:, 0, 1] - d[:, 1, 0],
        ], axis=-1)
        return out.reshape(x.shape[:-1] + (3,))

    return derived
