"""Sampled signals, phase-space grids, and the discrete Fourier transforms.

Conventions: the forward transform approximates F f(w) = int e^{-2pi i x w}
f(x) dx with the Riemann factor dx, so a unit Gaussian maps to itself.  The
symplectic transform of a matrix F(x, w) is

    Fs F(z1, z2) = int int F(x, w) e^{-2pi i (z2 x - z1 w)} dx dw,

i.e. the plain 2D transform composed with the rotation J(z1, z2) = (z2, -z1).
Both transforms keep explicit track of axis origins, and output axes are
always centered; applying the symplectic transform twice returns the input
exactly (up to FFT rounding).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import fsum

import numpy as np

from .errors import AliasingError, GridError, SizeError

PHASE_SPACE = "phase_space"
AMBIGUITY = "ambiguity"

_ORIGIN_RTOL = 1e-9


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly sampled complex signal on x_j = x0 + j dx."""

    samples: np.ndarray
    x0: float
    dx: float

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        if self.dx <= 0:
            raise GridError("dx must be positive")
        if samples.ndim != 1:
            raise SizeError("samples must be one-dimensional")
        if len(samples) < 8 or not _is_power_of_two(len(samples)):
            raise SizeError(
                f"sample count must be a power of two >= 8, got {len(samples)}"
            )

    @property
    def n(self) -> int:
        return len(self.samples)

    @property
    def axis(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n)

    def energy(self) -> float:
        """sum |f|^2 dx, accumulated with compensated summation."""
        mags = np.abs(self.samples) ** 2
        return fsum(mags.tolist()) * self.dx

    def inner(self, other: "SampledSignal") -> complex:
        """<f, g> = sum f conj(g) dx; antilinear in the second argument."""
        if not self.same_grid(other):
            raise GridError("inner product requires a common grid")
        return complex(np.sum(self.samples * np.conj(other.samples)) * self.dx)

    def same_grid(self, other: "SampledSignal") -> bool:
        return (
            self.n == other.n
            and np.isclose(self.dx, other.dx, rtol=_ORIGIN_RTOL, atol=0)
            and np.isclose(self.x0, other.x0, rtol=0, atol=_ORIGIN_RTOL * self.dx)
        )

    def with_samples(self, samples) -> "SampledSignal":
        return replace(self, samples=np.asarray(samples, dtype=complex))


def centered_signal_axis(n: int, dx: float) -> np.ndarray:
    return -n * dx / 2.0 + dx * np.arange(n)


def signal_from_function(fn, n: int, dx: float) -> SampledSignal:
    x = centered_signal_axis(n, dx)
    return SampledSignal(np.asarray(fn(x), dtype=complex), x0=float(x[0]), dx=dx)


def assert_central_support(sig: SampledSignal, rel_floor: float = 1e-13) -> None:
    """Reject signals whose support leaks out of the central half-window."""
    mags = np.abs(sig.samples)
    peak = mags.max()
    if peak == 0.0:
        return
    idx = np.nonzero(mags > rel_floor * peak)[0]
    lo, hi = idx.min(), idx.max()
    n = sig.n
    if lo < n // 4 or hi >= 3 * n // 4:
        raise AliasingError(
            "signal support touches the outer half of the window "
            f"(nonzero cells span [{lo}, {hi}] of {n}); add padding"
        )


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """Rectangular grid in (x, w): nx x nw cells with explicit origins."""

    nx: int
    x0: float
    dx: float
    nw: int
    w0: float
    dw: float

    def __post_init__(self):
        if self.dx <= 0 or self.dw <= 0:
            raise GridError("grid spacings must be positive")
        if self.nx < 1 or self.nw < 1:
            raise GridError("grid counts must be positive")

    @classmethod
    def centered(cls, nx: int, dx: float, nw: int, dw: float) -> "PhaseSpaceGrid":
        return cls(nx=nx, x0=-nx * dx / 2.0, dx=dx, nw=nw, w0=-nw * dw / 2.0, dw=dw)

    @classmethod
    def dft_compatible(cls, n: int, dx: float) -> "PhaseSpaceGrid":
        """Square grid with dw = 1/(n dx), so dx dw n = 1 exactly."""
        return cls.centered(n, dx, n, 1.0 / (n * dx))

    @property
    def x_axis(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.nx)

    @property
    def w_axis(self) -> np.ndarray:
        return self.w0 + self.dw * np.arange(self.nw)

    @property
    def cell_measure(self) -> float:
        return self.dx * self.dw

    def is_centered(self) -> bool:
        return np.isclose(
            self.x0, -self.nx * self.dx / 2.0, rtol=0, atol=_ORIGIN_RTOL * self.dx
        ) and np.isclose(
            self.w0, -self.nw * self.dw / 2.0, rtol=0, atol=_ORIGIN_RTOL * self.dw
        )

    def is_dft_compatible(self) -> bool:
        return self.nx == self.nw and abs(self.dx * self.dw * self.nx - 1.0) < 1e-12

    def is_j_closed(self) -> bool:
        """True when the two axes coincide, so J acts by index permutation."""
        return (
            self.nx == self.nw
            and np.isclose(self.dx, self.dw, rtol=_ORIGIN_RTOL, atol=0)
            and np.isclose(self.x0, self.w0, rtol=0, atol=_ORIGIN_RTOL * self.dx)
        )

    def dual(self) -> "PhaseSpaceGrid":
        """Grid carrying the symplectic transform: (z1, z2) dual to (w, x)."""
        dz1 = 1.0 / (self.nw * self.dw)
        dz2 = 1.0 / (self.nx * self.dx)
        return PhaseSpaceGrid.centered(self.nw, dz1, self.nx, dz2)

    def close_to(self, other: "PhaseSpaceGrid") -> bool:
        return (
            self.nx == other.nx
            and self.nw == other.nw
            and np.isclose(self.dx, other.dx, rtol=_ORIGIN_RTOL, atol=0)
            and np.isclose(self.dw, other.dw, rtol=_ORIGIN_RTOL, atol=0)
            and np.isclose(self.x0, other.x0, rtol=0, atol=_ORIGIN_RTOL * self.dx)
            and np.isclose(self.w0, other.w0, rtol=0, atol=_ORIGIN_RTOL * self.dw)
        )


@dataclass(frozen=True)
class TFMatrix:
    """Complex matrix sampled on a phase-space (or ambiguity) grid.

    ``values[i, j]`` sits at (x_i, w_j) in phase space, or at (z1_i, z2_j)
    in the ambiguity domain.
    """

    values: np.ndarray
    grid: PhaseSpaceGrid
    domain_tag: str = PHASE_SPACE

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if values.shape != (self.grid.nx, self.grid.nw):
            raise GridError(
                f"matrix shape {values.shape} does not match grid "
                f"({self.grid.nx}, {self.grid.nw})"
            )
        if self.domain_tag not in (PHASE_SPACE, AMBIGUITY):
            raise GridError(f"unknown domain tag {self.domain_tag!r}")

    def l2_norm(self) -> float:
        return float(
            np.sqrt(np.sum(np.abs(self.values) ** 2) * self.grid.cell_measure)
        )

    def inner(self, other: "TFMatrix") -> complex:
        """<A, B> = sum A conj(B) dx dw; antilinear in the second argument."""
        if not self.grid.close_to(other.grid):
            raise GridError("inner product requires matching grids")
        return complex(
            np.sum(self.values * np.conj(other.values)) * self.grid.cell_measure
        )

    def with_values(self, values) -> "TFMatrix":
        return replace(self, values=np.asarray(values, dtype=complex))


# ---------------------------------------------------------------------------
# one-dimensional transform

def dft(signal: SampledSignal, direction: str = "forward") -> SampledSignal:
    """Unitary-convention discrete Fourier transform of a sampled signal.

    Forward output lives on the centered frequency axis with spacing
    1/(n dx) and carries the Riemann factor dx; the inverse undoes it, so
    dft(dft(f), "inverse") == f up to rounding.
    """
    n = signal.n
    if not _is_power_of_two(n):
        raise SizeError("dft requires a power-of-two length")
    if direction not in ("forward", "inverse"):
        raise GridError(f"unknown dft direction {direction!r}")
    dx = signal.dx
    do = 1.0 / (n * dx)
    o0 = -n * do / 2.0
    j = np.arange(n)
    if direction == "forward":
        pre = np.exp(-2j * np.pi * (j * dx) * o0)
        spec = np.fft.fft(signal.samples * pre)
        post = dx * np.exp(-2j * np.pi * signal.x0 * (o0 + j * do))
    else:
        pre = np.exp(2j * np.pi * (j * dx) * o0)
        spec = np.fft.ifft(signal.samples * pre) * n
        post = dx * np.exp(2j * np.pi * signal.x0 * (o0 + j * do))
    return SampledSignal(spec * post, x0=o0, dx=do)


# ---------------------------------------------------------------------------
# symplectic transform on grids

def symplectic_fourier(m: TFMatrix) -> TFMatrix:
    """Symplectic Fourier transform of a matrix on a centered square grid.

    The x axis pairs with z2 through e^{-2pi i x z2} and the w axis with z1
    through e^{+2pi i w z1}; the final transpose realises the rotation J by
    index permutation.  The output grid is the centered dual grid and the
    domain tag flips; a second application restores matrix, grid, and tag.
    """
    g = m.grid
    if g.nx != g.nw:
        raise GridError("symplectic_fourier requires a square grid")
    if not g.is_centered():
        raise GridError("symplectic_fourier requires centered axes")
    dual = g.dual()
    n = g.nx
    i = np.arange(n)
    # x axis -> z2 (forward kernel); after the FFT, axis 0 indexes z2
    a = np.fft.fft(m.values * np.exp(-2j * np.pi * (i * g.dx) * dual.w0)[:, None], axis=0)
    a *= np.exp(-2j * np.pi * g.x0 * dual.w_axis)[:, None]
    # w axis -> z1 (conjugate kernel); after this, axis 1 indexes z1
    b = np.fft.ifft(a * np.exp(2j * np.pi * (i * g.dw) * dual.x0)[None, :], axis=1) * n
    b *= np.exp(2j * np.pi * g.w0 * dual.x_axis)[None, :]
    out = g.cell_measure * b.T
    tag = AMBIGUITY if m.domain_tag == PHASE_SPACE else PHASE_SPACE
    return TFMatrix(out, dual, tag)


def circular_convolve(a: TFMatrix, b: TFMatrix) -> TFMatrix:
    """Grid convolution (a * b)[u] = sum_v a[v] b[u - v] dx dw, circular.

    Satisfies Fs[a * b] = Fs a . Fs b exactly on matching grids.
    """
    if not a.grid.close_to(b.grid):
        raise GridError("convolution requires matching grids")
    n = a.grid.nx
    # index the second factor relative to the (centered) origin cell
    fa = np.fft.fft2(np.fft.ifftshift(a.values))
    fb = np.fft.fft2(np.fft.ifftshift(b.values))
    out = np.fft.fftshift(np.fft.ifft2(fa * fb)) * a.grid.cell_measure
    return TFMatrix(out, a.grid, a.domain_tag)


def compose_j(m: TFMatrix) -> TFMatrix:
    """Sample of F(J z) = F(w, -x) on a J-closed grid, by index permutation."""
    if not m.grid.is_j_closed():
        raise GridError("composition with J needs identical centered axes")
    n = m.grid.nx
    neg = (-np.arange(n)) % n  # index of -x_i on the centered axis
    out = m.values[:, neg].T  # out[i, j] = values[j, index(-x_i)]
    return TFMatrix(out, m.grid, m.domain_tag)
