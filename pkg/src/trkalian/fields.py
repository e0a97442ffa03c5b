"""Catalog of analytic Trkalian and probe fields in physical space.

All evaluators take Cartesian positions of shape (..., 3) and return complex
values of shape (..., 3) (or (...,) for scalars).  Cylindrical formulas are
converted to Cartesian inside the evaluators so that every public surface
speaks one coordinate convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import as_direction, bessel_j, fd_derivative_oracle, FD_DEFAULT_STEP
from .moses import frame_index_of, moses_frame

_INV_TWO_PI_32 = (2.0 * np.pi) ** -1.5


@dataclass(frozen=True)
class SampledField:
    """A complex 3-vector field evaluated on demand.

    ``eigenvalue`` is the curl eigenvalue mu*nu when the field is Trkalian
    (certified by the finite-difference oracle in the test suite), else None.
    """

    name: str
    evaluator: object
    params: dict = field(default_factory=dict)
    eigenvalue: float | None = None
    mu: int | None = None
    helicity: int | None = None

    def __call__(self, x) -> np.ndarray:
        return self.evaluator(np.asarray(x, dtype=float))

    @property
    def is_trkalian(self) -> bool:
        return self.eigenvalue is not None


@dataclass(frozen=True)
class ScalarField:
    """A complex scalar field, optionally with analytic first/second derivatives."""

    name: str
    evaluator: object
    gradient: object = None
    hessian: object = None
    params: dict = field(default_factory=dict)

    def __call__(self, x) -> np.ndarray:
        return self.evaluator(np.asarray(x, dtype=float))


# ---------------------------------------------------------------------------
# helicity modes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HelicityMode:
    """One atomic spherical curl-transform contribution.

    The duality sign mu selects the self-dual (+1) or anti-self-dual (-1)
    sector; admissible modes satisfy mu*lam*nu > 0, so the carrier wave is
    always exp(i |nu| kappa0 . x).
    """

    lam: int
    nu: float
    kappa0: np.ndarray
    amplitude: complex
    mu: int = 1
    g: float = 1.0

    def __post_init__(self):
        if self.lam not in (1, -1):
            raise ValueError("helicity lam must be +1 or -1")
        if self.mu not in (1, -1):
            raise ValueError("duality sign mu must be +1 or -1")
        if self.nu == 0.0:
            raise ValueError("eigenvalue nu must be nonzero")
        if self.g <= 0.0:
            raise ValueError("coupling g must be positive")
        if self.mu * self.lam * self.nu <= 0.0:
            raise ValueError("support condition mu*lam*nu > 0 violated")
        object.__setattr__(self, "kappa0", as_direction(self.kappa0))
        object.__setattr__(self, "amplitude", complex(self.amplitude))


@dataclass(frozen=True)
class ModeField:
    """Finite sum of helicity modes sharing (nu, mu, g)."""

    modes: tuple

    def __post_init__(self):
        modes = tuple(self.modes)
        if not modes:
            raise ValueError("need at least one mode")
        m0 = modes[0]
        for m in modes[1:]:
            if (m.nu, m.mu, m.g) != (m0.nu, m0.mu, m0.g):
                raise ValueError("all modes must share (nu, mu, g)")
        object.__setattr__(self, "modes", modes)

    @property
    def nu(self) -> float:
        return self.modes[0].nu

    @property
    def mu(self) -> int:
        return self.modes[0].mu

    @property
    def g(self) -> float:
        return self.modes[0].g


def eval_mode_field(f: ModeField, x) -> np.ndarray:
    """Evaluate the mode sum (2 pi)^{-3/2} (1/g) sum_j s_j e^{i mu lam nu k_j . x} Q_lam(k_j)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape[:-1] + (3,), dtype=complex)
    for m in f.modes:
        q = moses_frame(m.kappa0, frame_index_of(m.lam))
        phase = np.exp(1j * m.mu * m.lam * m.nu * (x @ m.kappa0))
        out += m.amplitude * phase[..., None] * q
    return _INV_TWO_PI_32 / f.g * out


def mode_sampled_field(f: ModeField, name: str = "modes") -> SampledField:
    """Wrap a ModeField as a SampledField with its curl eigenvalue recorded."""
    return SampledField(
        name=name,
        evaluator=lambda x: eval_mode_field(f, x),
        params={"n_modes": len(f.modes), "nu": f.nu, "mu": f.mu, "g": f.g},
        eigenvalue=f.mu * f.nu,
        mu=f.mu,
    )


# ---------------------------------------------------------------------------
# Lundquist field and potential
# ---------------------------------------------------------------------------

def _j1_over_x(x: np.ndarray) -> np.ndarray:
    """J_1(x)/x (an even function), stable at x = 0 where it tends to 1/2."""
    x = np.abs(np.asarray(x, dtype=float))
    small = x < 1e-8
    safe = np.where(small, 1.0, x)
    return np.where(small, 0.5 - x * x / 16.0, bessel_j(1, safe) / safe)


def lundquist(f0: float, nu: float) -> SampledField:
    """Axisymmetric cylindrical field F0 [J_1(nu r) e_theta + J_0(nu r) e_z].

    Curl eigenvalue nu (helicity +1); the on-axis value is F0 e_z.
    """
    if nu == 0.0:
        raise ValueError("nu must be nonzero")

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        px, py = x[..., 0], x[..., 1]
        r = np.hypot(px, py)
        # J_1(nu r) e_theta = nu * J_1(nu r)/(nu r) * (-y, x, 0)
        ratio = _j1_over_x(nu * r)
        out = np.empty(x.shape, dtype=complex)
        out[..., 0] = -f0 * nu * ratio * py
        out[..., 1] = f0 * nu * ratio * px
        out[..., 2] = f0 * bessel_j(0, np.abs(nu) * r)
        return out

    return SampledField(
        name="lundquist",
        evaluator=evaluator,
        params={"f0": f0, "nu": nu},
        eigenvalue=nu,
        mu=1,
        helicity=1,
    )


def lundquist_potential(f0: float, nu: float) -> tuple[SampledField, np.ndarray]:
    """Vector potential A = (1/nu) F_L - (1/nu) F0 e_z and its curl defect.

    A satisfies curl A - nu A = F0 e_z; the constant defect F0 e_z is the
    second return value.  The gauge shift by (nu/g) e_z (from U = e^{i nu z},
    F0 = nu^2/g) removes it, restoring F = nu A'.
    """
    base = lundquist(f0, nu)
    shift = np.array([0.0, 0.0, f0 / nu], dtype=complex)

    def evaluator(x):
        return base(x) / nu - shift

    a = SampledField(
        name="lundquist_potential",
        evaluator=evaluator,
        params={"f0": f0, "nu": nu},
    )
    return a, np.array([0.0, 0.0, f0], dtype=complex)


# ---------------------------------------------------------------------------
# abc field
# ---------------------------------------------------------------------------

def abc_field(a: float, b: float, c: float, nu: float = 1.0) -> SampledField:
    """Three-mode axis-aligned Trkalian field (ABC type), curl eigenvalue nu."""
    if nu == 0.0:
        raise ValueError("nu must be nonzero")

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        sx, cx = np.sin(nu * x[..., 0]), np.cos(nu * x[..., 0])
        sy, cy = np.sin(nu * x[..., 1]), np.cos(nu * x[..., 1])
        sz, cz = np.sin(nu * x[..., 2]), np.cos(nu * x[..., 2])
        out = np.empty(x.shape, dtype=complex)
        out[..., 0] = a * sz + c * cy
        out[..., 1] = b * sx + a * cz
        out[..., 2] = c * sy + b * cx
        return out

    return SampledField(
        name="abc",
        evaluator=evaluator,
        params={"a": a, "b": b, "c": c, "nu": nu},
        eigenvalue=nu,
        mu=1,
    )


# ---------------------------------------------------------------------------
# Chandrasekhar-Kendall constructions
# ---------------------------------------------------------------------------

def _scalar_gradient(psi: ScalarField, x: np.ndarray, h: float) -> np.ndarray:
    if psi.gradient is not None:
        return np.asarray(psi.gradient(x))
    flat = x.reshape(-1, 3)
    grads = np.stack([fd_derivative_oracle(psi.evaluator, p, "gradient", h) for p in flat])
    return grads.reshape(x.shape[:-1] + (3,))


def ck_field(psi: ScalarField, omega, nu: float, h: float = FD_DEFAULT_STEP,
             certify: bool = True) -> SampledField:
    """Debye construction F = curl(psi w) + (1/nu) curl curl(psi w).

    ``psi`` must solve the scalar Helmholtz equation with constant nu^2
    (checked at sample points by the finite-difference Laplacian oracle
    unless ``certify`` is disabled); ``omega`` is a fixed 3-vector.  The
    result satisfies curl F = nu F.  Analytic derivatives of psi are used
    when provided, otherwise the finite-difference oracle.
    """
    if nu == 0.0:
        raise ValueError("nu must be nonzero")
    w = np.asarray(omega, dtype=float)

    if certify:
        rng = np.random.default_rng(1742)
        pts = rng.uniform(-1.0, 1.0, size=(6, 3))
        for p in pts:
            lap = fd_derivative_oracle(psi.evaluator, p, "laplacian", h)
            val = psi(p)
            if abs(lap + nu**2 * val) > 1e-6 * max(1.0, abs(val)):
                raise ValueError("psi does not satisfy the Helmholtz equation with this nu")

    use_analytic = psi.gradient is not None and psi.hessian is not None

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        grad = _scalar_gradient(psi, x, h)
        toroidal = np.cross(grad, w)
        if use_analytic:
            hess = np.asarray(psi.hessian(x))
            poloidal = (hess @ w + nu**2 * psi(x)[..., None] * w) / nu
        else:
            # curl of the toroidal part, one stencil per point
            flat = x.reshape(-1, 3)
            def toroidal_fn(y):
                return np.cross(_scalar_gradient(psi, y, h), w)
            curls = np.stack([fd_derivative_oracle(toroidal_fn, p, "curl", h) for p in flat])
            poloidal = curls.reshape(x.shape[:-1] + (3,)) / nu
        return toroidal + poloidal

    return SampledField(
        name="ck",
        evaluator=evaluator,
        params={"nu": nu, "omega": tuple(w)},
        eigenvalue=nu,
        mu=1,
    )


def ck_toroidal(psi: ScalarField, omega, h: float = FD_DEFAULT_STEP) -> SampledField:
    """Toroidal part curl(psi w) alone; divergence-free by construction."""
    w = np.asarray(omega, dtype=float)

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        return np.cross(_scalar_gradient(psi, x, h), w)

    return SampledField(name="ck_toroidal", evaluator=evaluator, params={"omega": tuple(w)})


@dataclass(frozen=True)
class CKCircularParams:
    """Parameters of the circular cylindrical Debye solution.

    The Debye scalar is amplitude * J_m(nu r) e^{i(m theta - k z)}; the field
    eigenvalue is sigma = sigma_sign * sqrt(nu^2 + k^2).
    """

    m: int
    k: float
    nu: float
    amplitude: float = 1.0
    sigma_sign: int = 1

    def __post_init__(self):
        if self.m < 0 or int(self.m) != self.m:
            raise ValueError("m must be a non-negative integer")
        if self.nu <= 0.0:
            raise ValueError("radial wavenumber nu must be positive (sigma^2 - k^2 > 0)")
        if self.sigma_sign not in (1, -1):
            raise ValueError("sigma_sign must be +1 or -1")

    @property
    def sigma(self) -> float:
        return self.sigma_sign * float(np.hypot(self.nu, self.k))


def _jm_over_x(m: int, x: np.ndarray) -> np.ndarray:
    """J_m(x)/x for m >= 1, stable at x = 0."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-8
    safe = np.where(small, 1.0, x)
    limit = 0.5 if m == 1 else 0.0
    return np.where(small, limit, bessel_j(m, np.abs(safe)) / safe)


def ck_circular(params: CKCircularParams) -> SampledField:
    """Circular cylindrical Debye field with curl eigenvalue sigma.

    Built from F = -[sigma curl(psi e_z) + curl curl(psi e_z)] with
    psi = J_m(nu r) e^{i(m theta - k z)}; derivatives taken analytically via
    Bessel recurrences.  For m = 0, k = 0 this is the F0 = -nu^2 Lundquist
    field.
    """
    m, k, nu, amp, sigma = params.m, params.k, params.nu, params.amplitude, params.sigma
    if sigma == 0.0:
        raise ValueError("sigma must be nonzero")

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        px, py = x[..., 0], x[..., 1]
        r = np.hypot(px, py)
        theta = np.arctan2(py, px)
        z = x[..., 2]
        xr = nu * r
        jm = bessel_j(m, xr)
        if m == 0:
            dj = -bessel_j(1, xr)
        else:
            dj = 0.5 * (bessel_j(m - 1, xr) - bessel_j(m + 1, xr))
        psi = amp * jm
        dpsi = amp * nu * dj
        # psi(r) m/r, finite at the axis
        m_over_r = m * amp * nu * _jm_over_x(m, xr) if m > 0 else 0.0
        # cylindrical components, common factor e^{i(m theta - k z)}
        f_r = 1j * (k * dpsi - sigma * m_over_r)
        f_th = sigma * dpsi - k * m_over_r
        f_z = -nu**2 * psi
        phase = np.exp(1j * (m * theta - k * z))
        ct, st = np.cos(theta), np.sin(theta)
        out = np.empty(x.shape, dtype=complex)
        out[..., 0] = (f_r * ct - f_th * st) * phase
        out[..., 1] = (f_r * st + f_th * ct) * phase
        out[..., 2] = f_z * phase
        return out

    return SampledField(
        name="ck_circular",
        evaluator=evaluator,
        params={"m": m, "k": k, "nu": nu, "amplitude": amp, "sigma": sigma},
        eigenvalue=sigma,
        mu=1,
    )


# ---------------------------------------------------------------------------
# gauge gradients and probe fields
# ---------------------------------------------------------------------------

def gauge_gradient_field(u: ScalarField, h: float = FD_DEFAULT_STEP) -> SampledField:
    """Curl-free field grad U (analytic when U carries a gradient, else fd)."""

    def evaluator(x):
        return _scalar_gradient(u, np.asarray(x, dtype=float), h).astype(complex)

    return SampledField(name=f"grad_{u.name}", evaluator=evaluator, params=dict(u.params))


def gaussian_test_field(center, width: float, polarization) -> SampledField:
    """Schwartz-class probe P exp(-|x - c|^2 / width^2)."""
    if width <= 0:
        raise ValueError("width must be positive")
    c = np.asarray(center, dtype=float)
    pol = np.asarray(polarization, dtype=complex)

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        d = x - c
        envelope = np.exp(-np.sum(d * d, axis=-1) / width**2)
        return envelope[..., None] * pol

    return SampledField(
        name="gaussian",
        evaluator=evaluator,
        params={"center": tuple(c), "width": width, "polarization": tuple(pol.tolist())},
    )


def gaussian_scalar(center=(0.0, 0.0, 0.0), width: float = 1.0) -> ScalarField:
    """Scalar Gaussian exp(-|x - c|^2 / width^2) with analytic derivatives."""
    if width <= 0:
        raise ValueError("width must be positive")
    c = np.asarray(center, dtype=float)

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        d = x - c
        return np.exp(-np.sum(d * d, axis=-1) / width**2)

    def gradient(x):
        x = np.asarray(x, dtype=float)
        d = x - c
        return (-2.0 / width**2) * d * evaluator(x)[..., None]

    return ScalarField(
        name="gaussian_scalar",
        evaluator=evaluator,
        gradient=gradient,
        params={"center": tuple(c), "width": width},
    )


def plane_wave_scalar(wavevector) -> ScalarField:
    """Scalar e^{i q . x} with analytic gradient and Hessian."""
    q = np.asarray(wavevector, dtype=float)

    def evaluator(x):
        return np.exp(1j * (np.asarray(x, float) @ q))

    def gradient(x):
        return 1j * q * evaluator(x)[..., None]

    def hessian(x):
        return -np.multiply.outer(evaluator(x), np.outer(q, q))

    return ScalarField(
        name="plane_wave",
        evaluator=evaluator,
        gradient=gradient,
        hessian=hessian,
        params={"wavevector": tuple(q)},
    )


def bessel_j0_scalar(nu: float, amplitude: complex = 1.0) -> ScalarField:
    """Scalar amplitude * J_0(nu r), a Helmholtz solution with constant nu^2."""

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        r = np.hypot(x[..., 0], x[..., 1])
        return amplitude * bessel_j(0, np.abs(nu) * r)

    def gradient(x):
        x = np.asarray(x, dtype=float)
        r = np.hypot(x[..., 0], x[..., 1])
        # psi'(r)/r = -nu^2 J_1(nu r)/(nu r)
        coeff = -amplitude * nu**2 * _j1_over_x(nu * r)
        out = np.zeros(x.shape, dtype=complex)
        out[..., 0] = coeff * x[..., 0]
        out[..., 1] = coeff * x[..., 1]
        return out

    return ScalarField(
        name="bessel_j0",
        evaluator=evaluator,
        gradient=gradient,
        params={"nu": nu, "amplitude": amplitude},
    )


def certify_trkalian(f: SampledField, n_points: int = 10, rtol: float = 1e-6,
                     seed: int = 20260810, box: float = 1.5,
                     h: float = FD_DEFAULT_STEP) -> float:
    """Max relative curl-eigenvalue defect of a catalog field at random points."""
    if f.eigenvalue is None:
        raise ValueError("field carries no eigenvalue to certify")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n_points):
        x = rng.uniform(-box, box, size=3)
        curl = fd_derivative_oracle(f.evaluator, x, "curl", h)
        val = f(x)
        defect = np.linalg.norm(curl - f.eigenvalue * val) / max(np.linalg.norm(val), 1e-300)
        worst = max(worst, float(defect))
    if worst > rtol:
        raise AssertionError(f"Trkalian certification failed: defect {worst:.3e} > {rtol:.1e}")
    return worst
