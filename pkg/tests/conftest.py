import numpy as np
import pytest

from tfq import SampledSignal, centered_signal_axis


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def band_limited_signal(rng, n=512, dx=1 / 16, band_fraction=0.25, width=None):
    """Random smooth signal: band-limited noise under a Gaussian envelope,
    unit energy, supported in the central half of the window."""
    x = centered_signal_axis(n, dx)
    if width is None:
        # envelope drops below the support threshold inside the central half
        width = (n * dx / 4.0) / 3.4
    spec = np.zeros(n, dtype=complex)
    k = np.fft.fftfreq(n, dx)
    band = np.abs(k) < band_fraction / (2 * dx)
    spec[band] = rng.normal(size=band.sum()) + 1j * rng.normal(size=band.sum())
    samples = np.fft.ifft(spec) * np.exp(-np.pi * (x / width) ** 2)
    sig = SampledSignal(samples, x0=float(x[0]), dx=dx)
    return sig.with_samples(sig.samples / np.sqrt(sig.energy()))


def gaussian_signal(lam=1.0, n=512, dx=1 / 16):
    x = centered_signal_axis(n, dx)
    return SampledSignal(np.exp(-np.pi * lam * x**2), x0=float(x[0]), dx=dx)


def sup_rel_error(got, ref, region=None):
    """Sup error normalised by the reference's sup over the region."""
    got = np.asarray(got)
    ref = np.asarray(ref)
    if region is not None:
        got = got[region]
        ref = ref[region]
    return float(np.abs(got - ref).max() / np.abs(ref).max())
