"""Cohen kernels: the time-frequency filter bank in the ambiguity domain.

Every kernel is represented by its ambiguity-domain multiplier, the
symplectic transform of the phase-space kernel evaluated at (z1, z2):

* delta (Wigner)      -> 1
* Born-Jordan         -> sinc(z1 z2), real, |.| <= 1, equal to 1 on both axes
* tau family          -> e^{+pi i (2 tau - 1) z1 z2}, unimodular
* custom              -> any callable (z1, z2) -> complex

The Born-Jordan phase-space kernel itself is -2 Ci(4 pi |z1 z2|) in
dimension one: logarithmically singular along the axes, slowly decaying off
them.  ``theta_sigma_cell_averages`` integrates it exactly over grid cells
(closed-form antiderivative), which is what the direct convolution route
needs to coexist with the spectral multiplier route.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum, log
from typing import Callable, Optional

import numpy as np

from .errors import AccuracyError, DomainError, SingularPointError
from .special import cosine_integral, gauss_legendre, sine_integral

DELTA = "delta"
BORN_JORDAN = "born_jordan"
TAU = "tau"
CUSTOM = "custom"


@dataclass(frozen=True)
class CohenKernel:
    kind: str
    tau: Optional[float] = None
    multiplier_fn: Optional[Callable] = None

    def __post_init__(self):
        if self.kind not in (DELTA, BORN_JORDAN, TAU, CUSTOM):
            raise DomainError(f"unknown kernel kind {self.kind!r}")
        if self.kind == TAU:
            if self.tau is None or not 0.0 <= self.tau <= 1.0:
                raise DomainError("tau must lie in [0, 1]")
        if self.kind == CUSTOM and self.multiplier_fn is None:
            raise DomainError("custom kernel needs a multiplier callable")

    @property
    def label(self) -> str:
        if self.kind == TAU:
            return f"tau({self.tau:g})"
        return self.kind


def delta_kernel() -> CohenKernel:
    return CohenKernel(DELTA)


def born_jordan_kernel() -> CohenKernel:
    return CohenKernel(BORN_JORDAN)


def tau_kernel(tau: float) -> CohenKernel:
    return CohenKernel(TAU, tau=float(tau))


def custom_kernel(fn: Callable) -> CohenKernel:
    return CohenKernel(CUSTOM, multiplier_fn=fn)


def ambiguity_multiplier(kernel: CohenKernel, z1, z2):
    """Evaluate the kernel's ambiguity-domain multiplier at (z1, z2).

    Works pointwise on scalars or broadcast arrays.  The tau multiplier is
    e^{+pi i (2 tau - 1) z1 z2}: the symplectic transform of the tau
    kernel's plain transform e^{-pi i (2 tau - 1) z1 z2}, the sign being
    pinned by the requirement that tau = 1/2 reproduce the Wigner case and
    confirmed against direct fractional-shift evaluation.
    """
    z1 = np.asarray(z1, dtype=float)
    z2 = np.asarray(z2, dtype=float)
    if kernel.kind == DELTA:
        return np.ones(np.broadcast(z1, z2).shape, dtype=complex)
    if kernel.kind == BORN_JORDAN:
        return np.sinc(z1 * z2).astype(complex)
    if kernel.kind == TAU:
        return np.exp(1j * np.pi * (2.0 * kernel.tau - 1.0) * z1 * z2)
    return np.asarray(kernel.multiplier_fn(z1, z2), dtype=complex)


# ---------------------------------------------------------------------------
# Born-Jordan phase-space kernel (dimension one)

def theta_sigma_d1(z1, z2):
    """-2 Ci(4 pi |z1 z2|); singular on the axes z1 z2 = 0.

    Raises:
        SingularPointError: if any requested point has z1 z2 = 0.  Callers
            integrating across the axes should use the cell averages below.
    """
    p = np.abs(np.asarray(z1, dtype=float) * np.asarray(z2, dtype=float))
    if np.any(p == 0.0):
        raise SingularPointError(
            "the Born-Jordan kernel is unbounded on the axes z1 z2 = 0"
        )
    return -2.0 * cosine_integral(4.0 * np.pi * p)


def _corner_antiderivative(x, y):
    # int_0^x int_0^y Ci(4 pi u v) dv du for x, y >= 0
    c = 4.0 * np.pi * x * y
    out = np.zeros_like(c)
    nz = c > 0
    cz = c[nz]
    out[nz] = (x * y)[nz] * cosine_integral(cz) - (
        np.sin(cz) + sine_integral(cz)
    ) / (4.0 * np.pi)
    return out


def _signed_corner(u, v):
    return np.sign(u) * np.sign(v) * _corner_antiderivative(np.abs(u), np.abs(v))


def theta_sigma_cell_averages(x_offsets, w_offsets, dx: float, dw: float):
    """Exact cell averages of -2 Ci(4 pi |u v|) over dx-by-dw cells.

    The rectangle integral of Ci(4 pi |u v|) has the closed antiderivative
    H(x, y) = x y Ci(c) - (sin c + Si c)/(4 pi), c = 4 pi x y, extended to
    all quadrants by oddness in each corner coordinate; cells crossing the
    axes are handled by the same corner combination, with no singular
    evaluations.
    """
    u = np.asarray(x_offsets, dtype=float)
    v = np.asarray(w_offsets, dtype=float)
    u1, u2 = u - dx / 2.0, u + dx / 2.0
    v1, v2 = v - dw / 2.0, v + dw / 2.0
    rect = (
        _signed_corner(u2[:, None], v2[None, :])
        - _signed_corner(u1[:, None], v2[None, :])
        - _signed_corner(u2[:, None], v1[None, :])
        + _signed_corner(u1[:, None], v1[None, :])
    )
    return -2.0 * rect / (dx * dw)


# ---------------------------------------------------------------------------
# growth of |Theta|^p over expanding boxes

def theta_growth_integral(p: float, R: float, u_exact: float = 16384.0) -> float:
    """I_p(R) = iint_{[-R,R]^2} |sinc(x w)|^p dx dw.

    Along hyperbolic bands u = x w the box measure is exactly
    meas{x w <= u, 0 < x, w < R} = u (1 + log(R^2/u)), so

        I_p(R) = 4 int_0^{R^2} |sinc u|^p log(R^2/u) du.

    The u integral uses unit panels aligned with the sinc zeros (dyadically
    refined toward the logarithmic endpoint u = 0); beyond ``u_exact`` the
    per-period average of |sin|^p turns the tail into a closed form.
    Relative error is well below 1e-4 across the admissible range.
    """
    if not 1.0 <= p <= 8.0:
        raise DomainError("exponent must lie in [1, 8]")
    if not 1.0 <= R <= 1.0e4:
        raise DomainError("box half-width must lie in [1, 1e4]")
    R2 = R * R
    u_hi = min(R2, float(u_exact))
    glx, glw = gauss_legendre(12)

    head_end = min(1.0, u_hi)
    head = head_end * 2.0 ** (-np.arange(44, -1, -1, dtype=float))
    unit = np.arange(1.0, np.floor(u_hi) + 1.0)
    edges = np.unique(np.concatenate([head, unit, [u_hi]]))
    edges = edges[edges <= u_hi]
    a, b = edges[:-1], edges[1:]
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    u = mid[:, None] + half[:, None] * glx
    vals = np.abs(np.sinc(u)) ** p * np.log(R2 / u)
    main = fsum(((vals @ glw) * half).tolist())
    eps = head_end * 2.0**-44
    main += eps * (1.0 + log(R2 / eps))  # leftover [0, eps], integrand ~ log

    tail = 0.0
    if R2 > u_hi:
        gx64, gw64 = gauss_legendre(64)
        tt = 0.5 + 0.5 * gx64
        period_avg = float(((np.abs(np.sin(np.pi * tt)) ** p) @ gw64) * 0.5)
        if abs(p - 1.0) < 1e-12:
            iv = (log(R2) ** 2 / 2.0) - (log(R2) * log(u_hi) - log(u_hi) ** 2 / 2.0)
        else:
            q = 1.0 - p

            def prim(uv: float) -> float:
                return (uv**q / q) * (log(R2) - log(uv)) + uv**q / (q * q)

            iv = prim(R2) - prim(u_hi)
        tail = period_avg * iv / np.pi**p
    return 4.0 * (main + tail)


# ---------------------------------------------------------------------------
# STFT of the sinc kernel against the standard Gaussian window

def _vg_integrand(t, z1, z2, zeta1, zeta2):
    # one-dimensional reduction of the defining double integral; the
    # apparent 1/t chirp of the two half-kernels cancels in the sum, leaving
    # an analytic phase (verified against direct 2D quadrature)
    t2p1 = t * t + 1.0
    phase = (t * (zeta1 * zeta2 - z1 * z2) + z1 * zeta1 + z2 * zeta2) / t2p1
    amp = (
        np.exp(-np.pi * ((t * z1 - zeta2) ** 2 + (t * z2 - zeta1) ** 2) / t2p1)
        / np.sqrt(t2p1)
    )
    return amp * np.exp(-2j * np.pi * phase)


def vg_theta(
    z1: float,
    z2: float,
    zeta1: float,
    zeta2: float,
    tol: float = 1e-6,
) -> complex:
    """STFT of the sinc kernel against g(x, w) = e^{-pi(x^2 + w^2)}.

    Evaluates the one-dimensional t-integral over [-1/2, 1/2] on dyadic
    panels refined toward t = 0, each panel split further so that no chunk
    holds more than a few phase cycles; the error estimate is the
    difference between 32- and 20-node Gauss rules.

    Raises:
        AccuracyError: when the estimated error exceeds ``tol``.
    """
    z1, z2, zeta1, zeta2 = map(float, (z1, z2, zeta1, zeta2))
    x32, w32 = gauss_legendre(32)
    x20, w20 = gauss_legendre(20)
    rate = abs(zeta1 * zeta2 - z1 * z2) + abs(z1 * zeta1 + z2 * zeta2)
    total = 0.0 + 0.0j
    err = 0.0
    for sgn in (1.0, -1.0):
        for k in range(12):
            hi = sgn * 2.0 ** -(k + 1)
            lo = hi / 2.0 if k < 11 else 0.0
            a, b = (lo, hi) if sgn > 0 else (hi, lo)
            cycles = rate * abs(b - a)
            nsub = max(1, int(np.ceil(cycles / 4.0)))
            e = np.linspace(a, b, nsub + 1)
            mid = 0.5 * (e[:-1] + e[1:])
            half = 0.5 * (e[1:] - e[:-1])
            t = mid[:, None] + half[:, None] * x32
            v32 = ((_vg_integrand(t, z1, z2, zeta1, zeta2)) @ w32 * half).sum()
            t = mid[:, None] + half[:, None] * x20
            v20 = ((_vg_integrand(t, z1, z2, zeta1, zeta2)) @ w20 * half).sum()
            total += v32
            err += abs(v32 - v20)
    if err > tol:
        raise AccuracyError(
            f"vg_theta reached only {err:.3e} (target {tol:.3e})", achieved=err
        )
    return complex(total)


def vg_theta_grid(z1, z2, zeta1_axis, zeta2_axis, tol: float = 1e-6):
    """|vg_theta| could be needed over many (zeta1, zeta2) pairs; this
    evaluates the full outer grid for one window position z in a single
    vectorised pass (fixed panel layout, 32-node rule, 20-node estimate).

    Returns (values, error_estimate) where values has shape
    (len(zeta1_axis), len(zeta2_axis)).
    """
    zeta1_axis = np.asarray(zeta1_axis, dtype=float)
    zeta2_axis = np.asarray(zeta2_axis, dtype=float)
    Z1 = zeta1_axis[:, None]
    Z2 = zeta2_axis[None, :]
    rate = float(np.max(np.abs(Z1 * Z2 - z1 * z2) + np.abs(z1 * Z1 + z2 * Z2)))
    x32, w32 = gauss_legendre(32)
    x20, w20 = gauss_legendre(20)
    total = np.zeros((len(zeta1_axis), len(zeta2_axis)), dtype=complex)
    err = 0.0
    for sgn in (1.0, -1.0):
        for k in range(12):
            hi = sgn * 2.0 ** -(k + 1)
            lo = hi / 2.0 if k < 11 else 0.0
            a, b = (lo, hi) if sgn > 0 else (hi, lo)
            nsub = max(1, int(np.ceil(rate * abs(b - a) / 4.0)))
            e = np.linspace(a, b, nsub + 1)
            mid = 0.5 * (e[:-1] + e[1:])
            half = 0.5 * (e[1:] - e[:-1])
            v32 = np.zeros_like(total)
            v20 = np.zeros_like(total)
            for m, h in zip(mid, half):
                t32 = (m + h * x32)[:, None, None]
                vals = _vg_integrand(t32, z1, z2, Z1[None, :, :], Z2[None, :, :])
                v32 += np.tensordot(w32, vals, axes=(0, 0)) * h
                t20 = (m + h * x20)[:, None, None]
                vals = _vg_integrand(t20, z1, z2, Z1[None, :, :], Z2[None, :, :])
                v20 += np.tensordot(w20, vals, axes=(0, 0)) * h
            total += v32
            err += float(np.max(np.abs(v32 - v20)))
    if err > tol:
        raise AccuracyError(
            f"vg_theta_grid reached only {err:.3e} (target {tol:.3e})", achieved=err
        )
    return total, err
