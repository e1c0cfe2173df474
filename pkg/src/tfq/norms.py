"""Mixed-norm functionals and the dilation scaling experiments.

The two nestings of the grid L^{p,q} norm:

* ``position_inner``  (sum over w of (sum over x |M|^p dx)^{q/p} dw)^{1/q}
  -- the joint time-frequency norm with the inner integral over position;
* ``frequency_inner`` the same with the roles of the axes swapped -- the
  amalgam-style nesting.

Infinite exponents replace the corresponding power sum with a maximum (no
measure factor).  The dilation experiments fit log-norm against
log-dilation over a sweep and report the least-squares slope with its
standard error.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ResolutionError
from .gaussians import gaussian
from .grid import SampledSignal, TFMatrix, dft, signal_from_function
from .distributions import StftSpec, cohen, stft, wigner
from .kernels import CohenKernel, delta_kernel

POSITION_INNER = "position_inner"
FREQUENCY_INNER = "frequency_inner"


def conjugate_exponent(p: float) -> float:
    """p' with 1/p + 1/p' = 1; the pair (1, inf) maps to each other."""
    if p == 1.0:
        return np.inf
    if np.isinf(p):
        return 1.0
    if p < 1.0:
        raise DomainError("exponents must lie in [1, inf]")
    return p / (p - 1.0)


@dataclass(frozen=True)
class MixedNormSpec:
    p: float
    q: float
    order: str = POSITION_INNER

    def __post_init__(self):
        for e in (self.p, self.q):
            if not (e >= 1.0):
                raise DomainError("exponents must lie in [1, inf]")
        if self.order not in (POSITION_INNER, FREQUENCY_INNER):
            raise DomainError(f"unknown nesting {self.order!r}")

    @property
    def p_prime(self) -> float:
        return conjugate_exponent(self.p)

    @property
    def q_prime(self) -> float:
        return conjugate_exponent(self.q)


def mixed_norm(m: TFMatrix, spec: MixedNormSpec) -> float:
    """Grid L^{p,q} norm of a matrix with the nesting chosen by the spec."""
    mags = np.abs(m.values)
    if spec.order == POSITION_INNER:
        inner_axis, d_in, d_out = 0, m.grid.dx, m.grid.dw
    else:
        inner_axis, d_in, d_out = 1, m.grid.dw, m.grid.dx
    if np.isinf(spec.p):
        inner = mags.max(axis=inner_axis)
    else:
        inner = (np.sum(mags**spec.p, axis=inner_axis) * d_in) ** (1.0 / spec.p)
    if np.isinf(spec.q):
        return float(inner.max())
    return float((np.sum(inner**spec.q) * d_out) ** (1.0 / spec.q))


def canonical_window(f: SampledSignal) -> SampledSignal:
    """Unit Gaussian window on the signal's own grid."""
    return f.with_samples(gaussian(f.axis))


def modulation_norm(f: SampledSignal, spec: MixedNormSpec) -> float:
    """Joint norm of the Gaussian-window STFT, position-inner nesting."""
    v = stft(f, StftSpec(window=canonical_window(f)))
    return mixed_norm(v, MixedNormSpec(spec.p, spec.q, POSITION_INNER))


def amalgam_norm(f: SampledSignal, spec: MixedNormSpec) -> float:
    """Amalgam-style norm: same transform, frequency-inner nesting.

    Related to the joint norm through the transform side:
    modulation_norm(f) == amalgam_norm(dft(f)) up to grid rounding.
    """
    v = stft(f, StftSpec(window=canonical_window(f)))
    return mixed_norm(v, MixedNormSpec(spec.p, spec.q, FREQUENCY_INNER))


# ---------------------------------------------------------------------------
# dilation sweeps

@dataclass(frozen=True)
class ScalingFit:
    exponent: float
    stderr: float
    lam_range: tuple[float, float]
    points: int


def fit_loglog(lams: Sequence[float], norms: Sequence[float]) -> ScalingFit:
    """Ordinary least squares of log-norm against log-dilation."""
    lams = np.asarray(lams, dtype=float)
    norms = np.asarray(norms, dtype=float)
    if len(lams) < 6:
        raise DomainError("a sweep needs at least six points")
    lx = np.log(lams)
    ly = np.log(norms)
    design = np.vstack([lx, np.ones_like(lx)]).T
    coef, *_ = np.linalg.lstsq(design, ly, rcond=None)
    resid = ly - design @ coef
    dof = len(lams) - 2
    scale = np.sum(resid**2) / dof if dof > 0 else 0.0
    stderr = float(np.sqrt(scale / np.sum((lx - lx.mean()) ** 2)))
    return ScalingFit(
        exponent=float(coef[0]),
        stderr=stderr,
        lam_range=(float(lams.min()), float(lams.max())),
        points=len(lams),
    )


_GAUSS_RADIUS = 2.96  # e^{-pi r^2} ~ 1e-12
_MAX_SWEEP_N = 4096


def _bump(x):
    out = np.zeros_like(x)
    m = np.abs(x) < 1.0
    out[m] = np.exp(-1.0 / (1.0 - x[m] ** 2))
    return out


def _sweep_signal(family: str, lam: float) -> SampledSignal:
    """Signal for one sweep point, on a grid resolving signal and window.

    The spacing follows dx = lam^{-1/2}/16, capped at 1/16 so the unit
    analysis window never drops below sixteen samples; the window length is
    1.15 x the combined supports (the circular-shift wrap condition).
    """
    if lam <= 0:
        raise DomainError("dilation must be positive")
    if family in ("gaussian_mod", "gaussian_amalgam"):
        half_f = _GAUSS_RADIUS / np.sqrt(lam)
        dx = min(1.0, lam**-0.5) / 16.0
        fn = lambda x: gaussian(x, lam)
    elif family == "bump_amalgam":
        half_f = lam**-0.5
        dx = min(1.0, lam**-0.5) / 16.0
        fn = lambda x: _bump(np.sqrt(lam) * x)
    else:
        raise DomainError(f"unknown family {family!r}")
    span = 1.15 * 2.0 * (half_f + _GAUSS_RADIUS)
    n = 1 << int(np.ceil(np.log2(span / dx)))
    n = max(n, 16)
    if n > _MAX_SWEEP_N:
        raise ResolutionError(
            f"dilation {lam:g} needs {n} samples (cap {_MAX_SWEEP_N})", lam=lam
        )
    sig = signal_from_function(fn, n, dx)
    if sig.energy() == 0.0:
        raise ResolutionError(f"dilation {lam:g} under-resolved", lam=lam)
    return sig


def scaling_norm(family: str, spec: MixedNormSpec, lam: float) -> float:
    f = _sweep_signal(family, lam)
    if family == "gaussian_mod":
        return modulation_norm(f, spec)
    return amalgam_norm(f, spec)


def scaling_table(
    family: str, spec: MixedNormSpec, lam_grid: Iterable[float]
) -> list[tuple[float, float]]:
    lams = [float(l) for l in lam_grid]
    workers = int(os.environ.get("TFQ_THREADS", "1"))
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            norms = list(pool.map(lambda l: scaling_norm(family, spec, l), lams))
    else:
        norms = [scaling_norm(family, spec, l) for l in lams]
    return list(zip(lams, norms))


def scaling_experiment(
    family: str, spec: MixedNormSpec, lam_grid: Iterable[float]
) -> ScalingFit:
    """Fit the dilation exponent of a norm family over a lambda sweep.

    Large-lambda targets: -1/(2q') for the joint Gaussian norm and
    -1/(2p') for the amalgam families; small-lambda targets -1/(2p) and
    -1/(2q) respectively (dimension one).
    """
    table = scaling_table(family, spec, lam_grid)
    return fit_loglog([t[0] for t in table], [t[1] for t in table])


# ---------------------------------------------------------------------------
# interference-region energies

@dataclass(frozen=True)
class Rect:
    x_lo: float
    x_hi: float
    w_lo: float
    w_hi: float


@dataclass(frozen=True)
class GhostReport:
    kernel_label: str
    energy: float
    ratio_vs_wigner: float


def interference_region(
    center_x: float, center_w: float, grid, half_cells: int = 2
) -> Rect:
    """Rectangle of +- ``half_cells`` grid cells around a midpoint."""
    eps = 1e-9
    return Rect(
        x_lo=center_x - (half_cells + eps) * grid.dx,
        x_hi=center_x + (half_cells + eps) * grid.dx,
        w_lo=center_w - (half_cells + eps) * grid.dw,
        w_hi=center_w + (half_cells + eps) * grid.dw,
    )


def ghost_energy_report(
    f: SampledSignal, kernels: Sequence[CohenKernel], region: Rect
) -> list[GhostReport]:
    """|M(f, f)|^2 integrated over the declared region, per kernel,
    with the ratio against the plain (delta-kernel) distribution."""
    base = wigner(f, f)
    g = base.grid
    in_x = (g.x_axis >= region.x_lo) & (g.x_axis <= region.x_hi)
    in_w = (g.w_axis >= region.w_lo) & (g.w_axis <= region.w_hi)
    if not in_x.any() or not in_w.any():
        raise DomainError("interference region lies outside the grid")

    def region_energy(m: TFMatrix) -> float:
        block = m.values[np.ix_(in_x, in_w)]
        return float(np.sum(np.abs(block) ** 2) * g.cell_measure)

    e_wigner = region_energy(base)
    if e_wigner == 0.0:
        raise DomainError("reference distribution carries no region energy")
    rows = [GhostReport(delta_kernel().label, e_wigner, 1.0)]
    for k in kernels:
        if k.kind == "delta":
            continue
        e = region_energy(cohen(f, f, k))
        rows.append(GhostReport(k.label, e, e / e_wigner))
    return rows
