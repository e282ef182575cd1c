"""Concrete frame families: cyclic Gabor systems and sampled wavelet systems.

The Gabor family lives on the cyclic group Z_d: all d^2 modulated translates
of a window, each carrying quadrature weight 1/d.  With that weight the frame
operator is exactly ||g||^2 times the identity, so tightness is an identity
to rounding, not an approximation.

The wavelet family is sampled from a scale/shift grid carrying the weight
da db / a^2.  Columns are built in the frequency domain from an analytic
profile psi_hat evaluated at integer frequencies of the d-point signal space
(period 1), then mapped back by the unitary inverse DFT.  With a full uniform
shift grid the frame operator is diagonal in the frequency basis, with
diagonal close to the positive-axis admissibility constant on the covered
band; reconstruction divided by that constant is the sampled reproducing
identity.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    InvalidDomainError,
    InvalidParameterError,
    ShapeMismatchError,
)
from .frame import SampledFrame, analysis, synthesis
from .hilbert import inner
from .measure import MeasureSpace, Symbol

WINDOW_KINDS = ("gaussian", "given-samples")
WAVELET_KINDS = ("mexican-hat-fourier", "given-fourier")


def translate(x, a: int) -> np.ndarray:
    """Cyclic shift (T_a x)_t = x_{(t - a) mod d}."""
    return np.roll(np.asarray(x, dtype=complex).ravel(), int(a))


def modulate(x, b: int) -> np.ndarray:
    """Pointwise phase ramp (M_b x)_t = exp(2 pi i b t / d) x_t."""
    x = np.asarray(x, dtype=complex).ravel()
    d = x.shape[0]
    return np.exp(2j * np.pi * int(b) * np.arange(d) / d) * x


def gaussian_window(d: int) -> np.ndarray:
    """Periodized Gaussian on Z_d, the default Gabor window."""
    if d < 1:
        raise InvalidParameterError(f"need d >= 1, got {d}")
    t = np.arange(d, dtype=float)
    g = np.zeros(d)
    for k in range(-4, 5):
        g += np.exp(-np.pi * (t + k * d) ** 2 / d)
    return g.astype(complex)


@dataclass(frozen=True)
class WindowSpec:
    """Gabor window: the built-in Gaussian or explicitly given samples."""

    kind: str = "gaussian"
    samples: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in WINDOW_KINDS:
            raise InvalidParameterError(f"unknown window kind {self.kind!r}")
        if self.kind == "given-samples":
            if self.samples is None:
                raise InvalidParameterError("given-samples window needs samples")
            samples = np.asarray(self.samples, dtype=complex).ravel()
            if float(np.linalg.norm(samples)) == 0.0:
                raise InvalidParameterError("window must be nonzero")
            object.__setattr__(self, "samples", samples)

    def build(self, d: int) -> np.ndarray:
        if self.kind == "gaussian":
            return gaussian_window(d)
        if self.samples.shape[0] != d:
            raise ShapeMismatchError(
                f"window has {self.samples.shape[0]} samples, signal space has {d}"
            )
        return self.samples


def _as_window(window, d: int) -> np.ndarray:
    if isinstance(window, WindowSpec):
        return window.build(d)
    g = np.asarray(window, dtype=complex).ravel()
    if g.shape[0] != d:
        raise ShapeMismatchError(f"window of length {g.shape[0]} for d={d}")
    if float(np.linalg.norm(g)) == 0.0:
        raise InvalidParameterError("window must be nonzero")
    return g


def gabor_space(d: int) -> MeasureSpace:
    """All d^2 time/frequency shifts (a, b), each of mass 1/d."""
    a = np.repeat(np.arange(d, dtype=float), d)
    b = np.tile(np.arange(d, dtype=float), d)
    return MeasureSpace(np.column_stack([a, b]), np.full(d * d, 1.0 / d))


def gabor_frame(window, d: int) -> SampledFrame:
    """Frame of all modulated translates M_b T_a g over Z_d x Z_d.

    The 1/d point mass makes sum over (a, b) of the rank-one projections
    exactly ||g||^2 I.
    """
    g = _as_window(window, d)
    phases = np.exp(2j * np.pi * np.outer(np.arange(d), np.arange(d)) / d)
    cols = np.empty((d, d * d), dtype=complex)
    for a in range(d):
        shifted = np.roll(g, a)
        cols[:, a * d:(a + 1) * d] = shifted[:, None] * phases
    return SampledFrame(gabor_space(d), cols)


def stft(f, window) -> Symbol:
    """Coefficient function <f, M_b T_a g> as a symbol on the Gabor space."""
    f = np.asarray(f, dtype=complex).ravel()
    frame = gabor_frame(window, f.shape[0])
    return Symbol(analysis(frame, f), frame.space)


def stft_orthogonality_residual(f1, f2, g1, g2) -> float:
    """Deviation of the weighted coefficient pairing from <f1,f2><g2,g1>.

    On the full cyclic Gabor system the pairing identity is exact, so the
    residual is rounding noise.
    """
    f1, f2, g1, g2 = (np.asarray(v, dtype=complex).ravel() for v in (f1, f2, g1, g2))
    if not (f1.shape == f2.shape == g1.shape == g2.shape):
        raise ShapeMismatchError("all four vectors must share one dimension")
    d = f1.shape[0]
    c1 = analysis(gabor_frame(g1, d), f1)
    c2 = analysis(gabor_frame(g2, d), f2)
    lhs = np.sum(c1 * c2.conj()) / d
    rhs = inner(f1, f2) * inner(g2, g1)
    return float(abs(lhs - rhs))


def mexican_hat_fourier(gamma) -> np.ndarray:
    """Default admissible profile gamma^2 exp(-gamma^2); its admissibility
    constant over the full line is exactly 1/4."""
    gamma = np.asarray(gamma, dtype=float)
    return gamma**2 * np.exp(-(gamma**2))


@dataclass(frozen=True)
class WaveletSpec:
    """Wavelet described by its frequency-domain profile.

    The profile is either the built-in mexican-hat shape or a user-supplied
    callable (or sampled values aligned with one particular quadrature grid,
    usable for admissibility integrals only).  Callable profiles must vanish
    at frequency zero.
    """

    kind: str = "mexican-hat-fourier"
    fourier_profile: Callable | np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in WAVELET_KINDS:
            raise InvalidParameterError(f"unknown wavelet kind {self.kind!r}")
        if self.kind == "given-fourier":
            if self.fourier_profile is None:
                raise InvalidParameterError("given-fourier wavelet needs a profile")
            if callable(self.fourier_profile):
                if abs(complex(np.asarray(self.fourier_profile(0.0)).ravel()[0])) > 1e-12:
                    raise InvalidParameterError("profile must vanish at frequency 0")
            else:
                samples = np.asarray(self.fourier_profile, dtype=complex).ravel()
                object.__setattr__(self, "fourier_profile", samples)

    @property
    def is_callable(self) -> bool:
        return self.kind == "mexican-hat-fourier" or callable(self.fourier_profile)

    def evaluate(self, gamma) -> np.ndarray:
        if self.kind == "mexican-hat-fourier":
            return mexican_hat_fourier(gamma)
        if not callable(self.fourier_profile):
            raise InvalidParameterError(
                "sampled profiles cannot be evaluated off their quadrature grid"
            )
        return np.asarray(self.fourier_profile(np.asarray(gamma, dtype=float)),
                          dtype=complex)


def log_freq_grid(gamma_min: float, gamma_max: float, n: int,
                  two_sided: bool = False) -> MeasureSpace:
    """Geometric-midpoint frequency grid on [gamma_min, gamma_max].

    With two_sided=True the grid is mirrored to negative frequencies so that
    quadratures over it approximate full-line integrals of even integrands.
    """
    if gamma_min <= 0.0:
        raise InvalidDomainError(f"need gamma_min > 0, got {gamma_min}")
    if not (gamma_min < gamma_max) or n < 1:
        raise InvalidDomainError("degenerate frequency range")
    edges = gamma_min * (gamma_max / gamma_min) ** (np.arange(n + 1) / n)
    mids = np.sqrt(edges[:-1] * edges[1:])
    widths = np.diff(edges)
    if two_sided:
        points = np.concatenate([mids, -mids])
        weights = np.concatenate([widths, widths])
    else:
        points, weights = mids, widths
    return MeasureSpace(points[:, None], weights)


def admissibility_constant(wavelet: WaveletSpec, freq_quadrature: MeasureSpace) -> float:
    """Quadrature of |psi_hat(gamma)|^2 / |gamma| over the given grid.

    The wavelet is admissible when the value is finite and positive.  The
    grid must avoid gamma = 0.
    """
    gamma = freq_quadrature.points[:, 0]
    if np.any(gamma == 0.0):
        raise InvalidDomainError("frequency quadrature must avoid gamma = 0")
    if wavelet.is_callable:
        values = wavelet.evaluate(gamma)
    else:
        values = np.asarray(wavelet.fourier_profile, dtype=complex).ravel()
        if values.shape[0] != freq_quadrature.n_points:
            raise ShapeMismatchError(
                "sampled profile length does not match the quadrature grid"
            )
    integrand = np.abs(values) ** 2 / np.abs(gamma)
    return float(np.sum(freq_quadrature.weights * integrand))


def positive_axis_constant(wavelet: WaveletSpec,
                           gamma_min: float = 1e-4, gamma_max: float = 50.0,
                           n: int = 4000) -> float:
    """Admissibility integral over positive frequencies on a fine log grid."""
    return admissibility_constant(wavelet, log_freq_grid(gamma_min, gamma_max, n))


def dft_frequencies(d: int) -> np.ndarray:
    """Integer frequencies of the d-point period-1 signal space, DFT order."""
    return np.fft.fftfreq(d, 1.0 / d)


def wavelet_frame(wavelet: WaveletSpec, grid: MeasureSpace, d: int) -> SampledFrame:
    """Sampled dilated/shifted wavelet family over a scale/shift grid.

    Column (a, b) has frequency content sqrt(a) psi_hat(a gamma_k)
    exp(-2 pi i b gamma_k) on the d integer frequencies and is mapped to the
    time domain by the unitary inverse DFT.
    """
    if grid.points.shape[1] != 2:
        raise ShapeMismatchError("scale/shift grid must have 2-coordinate points")
    if not wavelet.is_callable:
        raise InvalidParameterError("frame construction needs an evaluable profile")
    c_plus = positive_axis_constant(wavelet)
    if not (c_plus > 0.0 and math.isfinite(c_plus)):
        raise InvalidParameterError(
            f"profile is not admissible (positive-axis constant {c_plus})"
        )
    a = grid.points[:, 0]
    b = grid.points[:, 1]
    if np.any(a <= 0.0):
        raise InvalidDomainError("scale coordinates must be positive")
    gamma = dft_frequencies(d)
    freq_cols = (np.sqrt(a)[:, None] * wavelet.evaluate(a[:, None] * gamma[None, :])
                 * np.exp(-2j * np.pi * b[:, None] * gamma[None, :]))
    time_cols = np.fft.ifft(freq_cols, axis=1) * np.sqrt(d)
    return SampledFrame(grid, np.ascontiguousarray(time_cols.T))


def scale_profile(wavelet: WaveletSpec, grid: MeasureSpace, d: int) -> np.ndarray:
    """Per-frequency quadrature sum_j w_j a_j |psi_hat(a_j gamma_k)|^2.

    This is the frequency-basis diagonal the frame operator must match when
    the shift grid covers the full period uniformly; well inside the covered
    band it approaches the positive-axis admissibility constant.
    """
    a = grid.points[:, 0]
    gamma = dft_frequencies(d)
    values = np.abs(wavelet.evaluate(a[:, None] * gamma[None, :])) ** 2
    return (grid.weights * a) @ values


def bandlimited_bump(d: int, band: tuple[float, float], taper: float = 1.0) -> np.ndarray:
    """Unit-norm real signal whose spectrum is a flat-top bump on |gamma| in band.

    The profile is 1 on [lo + taper, hi - taper] with raised-cosine edges,
    applied symmetrically to positive and negative frequencies.
    """
    lo, hi = band
    if not (0.0 < lo < hi) or taper < 0.0 or 2 * taper > (hi - lo):
        raise InvalidParameterError(f"bad band {band} / taper {taper}")
    gamma = np.abs(dft_frequencies(d))
    profile = np.zeros(d)
    flat = (gamma >= lo + taper) & (gamma <= hi - taper)
    profile[flat] = 1.0
    if taper > 0.0:
        rising = (gamma >= lo) & (gamma < lo + taper)
        profile[rising] = 0.5 * (1 - np.cos(np.pi * (gamma[rising] - lo) / taper))
        falling = (gamma > hi - taper) & (gamma <= hi)
        profile[falling] = 0.5 * (1 - np.cos(np.pi * (hi - gamma[falling]) / taper))
    total = float(np.linalg.norm(profile))
    if total == 0.0:
        raise InvalidParameterError(f"band {band} contains no integer frequency")
    f = np.fft.ifft(profile / total) * np.sqrt(d)
    return f.real.astype(complex)


def coverage_deviation(wavelet: WaveletSpec, grid: MeasureSpace, d: int) -> np.ndarray:
    """Relative deviation of the scale quadrature from the reproducing constant
    at every frequency; small entries mark well-covered frequencies."""
    c_plus = positive_axis_constant(wavelet)
    return np.abs(scale_profile(wavelet, grid, d) / c_plus - 1.0)


def calderon_residual(wavelet: WaveletSpec, grid: MeasureSpace, f,
                      c_plus: float | None = None) -> float:
    """Relative error of reconstruction through the sampled wavelet family.

    Computes || synthesis(W, analysis(W, f)) / c_plus - f || / ||f|| with
    c_plus the positive-axis admissibility constant.  Signals with spectral
    energy at badly covered frequencies are reported with a warning; the
    residual is returned regardless.
    """
    f = np.asarray(f, dtype=complex).ravel()
    scale = float(np.linalg.norm(f))
    if scale == 0.0:
        return 0.0
    d = f.shape[0]
    if c_plus is None:
        c_plus = positive_axis_constant(wavelet)

    deviation = coverage_deviation(wavelet, grid, d)
    spectrum = np.abs(np.fft.fft(f)) ** 2
    uncovered = float(np.sum(spectrum[deviation > 0.1]) / np.sum(spectrum))
    if uncovered > 1e-8:
        warnings.warn(
            f"{uncovered:.2e} of the signal energy sits at frequencies the "
            "scale grid does not cover; the residual reflects that truncation",
            stacklevel=2,
        )
    frame = wavelet_frame(wavelet, grid, d)
    reconstructed = synthesis(frame, analysis(frame, f)) / c_plus
    return float(np.linalg.norm(reconstructed - f) / scale)
