"""Seeded verification suites over randomized frame/multiplier instances.

Each check draws deterministic random instances from the configured seed,
measures the worst deviation of an identity or the worst violation of a
bound, and records the verdict against its tolerance.  All randomness flows
through per-check, per-instance seed derivation, so a report for a given
configuration is reproducible bit-for-bit (timestamps aside).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import controlled as ctrl
from . import frame as fr
from . import hilbert as hb
from . import tf_frames as tf
from .multiplier import (
    bound_budget,
    convergence_experiment,
    dual_from_multiplier,
    lower_bound_certificates,
    multiplier,
    truncate_symbol,
)
from .errors import InvalidParameterError
from .measure import MeasureSpace, Symbol, counting_space, uniform_grid_1d
from .reporting import Check, Report

SUITES = ("identities", "bounds", "convergence", "gabor", "wavelet",
          "controlled", "weighted", "all")

DEFAULT_TOLERANCES = {
    "frame_factorization": 1e-12,
    "reconstruction": 1e-10,
    "reconstruction_swapped": 1e-10,
    "multiplier_adjoint": 1e-12,
    "difference_symbol": 1e-12,
    "difference_analysis": 1e-12,
    "difference_synthesis": 1e-12,
    "weighted_identity": 1e-12,
    "canonical_dual_pair": 1e-10,
    "dual_bounds_inverse": 1e-10,
    "frame_iff_invertible": 0.0,
    "bessel_inequality": 1e-10,
    "bessel_sharpness": 1e-10,
    "op_norm_budget": 1e-10,
    "trace_budget": 1e-10,
    "schatten_budget_p15": 1e-10,
    "schatten_budget_p2": 1e-10,
    "schatten_budget_p3": 1e-10,
    "schatten_monotonicity": 1e-10,
    "perturb_upper": 1e-10,
    "perturb_lower": 1e-10,
    "discrete_bessel_norm_bound": 1e-10,
    "unbounded_norm_growth": 1.5,
    "unbounded_bessel_cap": 1e-10,
    "truncation_budget": 1e-10,
    "truncation_monotone": 1e-10,
    "symbol_convergence_p1": 1e-10,
    "symbol_convergence_p2": 1e-10,
    "symbol_convergence_pinf": 1e-10,
    "frame_uniform_l2": 1e-10,
    "frame_uniform_l1": 1e-10,
    "gabor_tightness": 1e-10,
    "stft_matches_analysis": 1e-12,
    "stft_energy": 1e-10,
    "stft_orthogonality": 1e-10,
    "tf_shift_unitarity": 1e-12,
    "admissibility_oracle": 1e-4,
    "admissibility_scaling": 1e-12,
    "admissibility_phase_invariance": 1e-12,
    "wavelet_diagonality": 1e-10,
    "wavelet_diagonal_oracle": 1e-10,
    "wavelet_band_constant": 0.02,
    "wavelet_shift_commutation": 1e-10,
    "wavelet_column_norms": 1e-10,
    "calderon_default": 0.02,
    "calderon_refinement": 3.0,
    "controlled_factorization": 1e-12,
    "controlled_bounds_map": 1e-10,
    "controlled_spectral_mapping": 1e-9,
    "controlled_positivity": 1e-10,
    "controlled_implies_frame": 0.0,
    "precondition_identity": 1e-10,
    "weighted_scaling": 1e-12,
    "certificates": 1e-10,
    "multiplier_dual": 1e-9,
    "positive_symbol_coercivity": 1e-10,
}

# default grid for the heavyweight reconstruction study
CALDERON_DEFAULTS = {
    "d": 512,
    "a_min": 2.0**-6,
    "a_max": 4.0,
    "n_a": 64,
    "n_b": 512,
    "band": (2.0, 8.0),
    "taper": 1.0,
}


@dataclass
class SuiteConfig:
    suite: str = "all"
    seed: int = 0
    trials: int = 200
    d: int = 8
    n_points: int = 64
    tolerances: dict = field(default_factory=dict)
    output: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.suite not in SUITES:
            raise InvalidParameterError(f"unknown suite {self.suite!r}")
        if self.trials < 1 or self.d < 1 or self.n_points < 1:
            raise InvalidParameterError("trials, d and n must all be >= 1")
        if self.format not in ("json", "csv"):
            raise InvalidParameterError(f"unknown format {self.format!r}")

    def tol(self, check_id: str) -> float:
        return float(self.tolerances.get(check_id, DEFAULT_TOLERANCES[check_id]))


# ---------------------------------------------------------------------------
# deterministic random instances
# ---------------------------------------------------------------------------

def _rng(seed: int, *branch: int) -> np.random.Generator:
    return np.random.default_rng([int(seed)] + [int(b) for b in branch])


def random_space(rng, n: int) -> MeasureSpace:
    return MeasureSpace(np.arange(n, dtype=float)[:, None],
                        rng.uniform(0.2, 2.0, size=n))


def random_frame(rng, d: int, n: int, space: MeasureSpace | None = None) -> fr.SampledFrame:
    if space is None:
        space = random_space(rng, n)
    vectors = rng.standard_normal((d, n)) + 1j * rng.standard_normal((d, n))
    return fr.SampledFrame(space, vectors)


def random_symbol(rng, space: MeasureSpace) -> Symbol:
    n = space.n_points
    return Symbol(rng.standard_normal(n) + 1j * rng.standard_normal(n), space)


def random_vector(rng, d: int) -> np.ndarray:
    return rng.standard_normal(d) + 1j * rng.standard_normal(d)


def random_instance(seed: int, branch: int, idx: int, d: int, n: int):
    """(symbol, analysis frame, synthesis frame) on one random space."""
    rng = _rng(seed, branch, idx)
    F = random_frame(rng, d, n)
    G = random_frame(rng, d, n, space=F.space)
    m = random_symbol(rng, F.space)
    return m, F, G


def random_invertible_instance(seed: int, branch: int, idx: int, d: int, n: int):
    """Random instance whose multiplier is comfortably invertible."""
    for attempt in range(64):
        rng = _rng(seed, branch, idx, attempt)
        F = random_frame(rng, d, n)
        G = random_frame(rng, d, n, space=F.space)
        m = random_symbol(rng, F.space)
        sigma = hb.singular_values(multiplier(m, F, G))
        if sigma[-1] > 1e-6 * sigma[0]:
            return m, F, G
    raise InvalidParameterError("could not draw an invertible instance")  # pragma: no cover


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def _check(cfg: SuiteConfig, check_id: str, claim: str, measured: float,
           budget: float, passed: bool, detail: str = "") -> Check:
    return Check(check_id, claim, float(measured), float(budget),
                 cfg.tol(check_id), bool(passed), detail)


def check_frame_factorization(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(cfg.trials):
        _, F, _ = random_instance(cfg.seed, 101, i, cfg.d, cfg.n_points)
        S = fr.frame_operator(F)
        composed = np.column_stack(
            [fr.synthesis(F, fr.analysis(F, e)) for e in np.eye(cfg.d)]
        )
        worst = max(worst, float(np.linalg.norm(S - composed, 2)
                                 / np.linalg.norm(S, 2)))
    tol = cfg.tol("frame_factorization")
    return _check(cfg, "frame_factorization",
                  "frame operator equals synthesis composed with analysis",
                  worst, tol, worst <= tol)


def _reconstruction_worst(cfg: SuiteConfig, branch: int, swapped: bool) -> float:
    worst = 0.0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, branch, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        dual = fr.canonical_dual(F)
        analysis_frame, synthesis_frame = (dual, F) if swapped else (F, dual)
        for _ in range(20):
            f = random_vector(rng, cfg.d)
            rec = fr.synthesis(synthesis_frame, fr.analysis(analysis_frame, f))
            worst = max(worst, float(np.linalg.norm(rec - f) / np.linalg.norm(f)))
    return worst


def check_reconstruction(cfg: SuiteConfig) -> Check:
    worst = _reconstruction_worst(cfg, 102, swapped=False)
    tol = cfg.tol("reconstruction")
    return _check(cfg, "reconstruction",
                  "canonical dual reconstructs every vector from analysis by F",
                  worst, tol, worst <= tol)


def check_reconstruction_swapped(cfg: SuiteConfig) -> Check:
    worst = _reconstruction_worst(cfg, 103, swapped=True)
    tol = cfg.tol("reconstruction_swapped")
    return _check(cfg, "reconstruction_swapped",
                  "F reconstructs every vector from analysis by the canonical dual",
                  worst, tol, worst <= tol)


def check_multiplier_adjoint(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(cfg.trials):
        m, F, G = random_instance(cfg.seed, 104, i, cfg.d, cfg.n_points)
        M = multiplier(m, F, G)
        other = multiplier(m.values.conj(), G, F)
        worst = max(worst, float(np.linalg.norm(M.conj().T - other, 2)
                                 / max(np.linalg.norm(M, 2), 1e-300)))
    tol = cfg.tol("multiplier_adjoint")
    return _check(cfg, "multiplier_adjoint",
                  "adjoint of the multiplier is the conjugate-symbol multiplier "
                  "with frames swapped", worst, tol, worst <= tol)


def _difference_worst(cfg: SuiteConfig, branch: int, which: str) -> float:
    worst = 0.0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, branch, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        G = random_frame(rng, cfg.d, cfg.n_points, space=F.space)
        m = random_symbol(rng, F.space)
        m2 = random_symbol(rng, F.space)
        F2 = random_frame(rng, cfg.d, cfg.n_points, space=F.space)
        G2 = random_frame(rng, cfg.d, cfg.n_points, space=F.space)
        if which == "symbol":
            lhs = multiplier(m, F, G) - multiplier(m2, F, G)
            rhs = multiplier(m.values - m2.values, F, G)
        elif which == "analysis":
            lhs = multiplier(m, F, G) - multiplier(m, F2, G)
            rhs = multiplier(m, fr.SampledFrame(F.space, F.vectors - F2.vectors), G)
        else:
            lhs = multiplier(m, F, G) - multiplier(m, F, G2)
            rhs = multiplier(m, F, fr.SampledFrame(F.space, G.vectors - G2.vectors))
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def check_difference_symbol(cfg: SuiteConfig) -> Check:
    worst = _difference_worst(cfg, 105, "symbol")
    tol = cfg.tol("difference_symbol")
    return _check(cfg, "difference_symbol",
                  "difference of multipliers equals the multiplier of the "
                  "symbol difference", worst, tol, worst <= tol)


def check_difference_analysis(cfg: SuiteConfig) -> Check:
    worst = _difference_worst(cfg, 106, "analysis")
    tol = cfg.tol("difference_analysis")
    return _check(cfg, "difference_analysis",
                  "difference over analysis frames equals the multiplier of "
                  "the frame difference", worst, tol, worst <= tol)


def check_difference_synthesis(cfg: SuiteConfig) -> Check:
    worst = _difference_worst(cfg, 107, "synthesis")
    tol = cfg.tol("difference_synthesis")
    return _check(cfg, "difference_synthesis",
                  "difference over synthesis frames equals the multiplier of "
                  "the frame difference", worst, tol, worst <= tol)


def check_weighted_identity(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 108, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        m = Symbol(rng.uniform(0.0, 3.0, size=cfg.n_points).astype(complex), F.space)
        M = multiplier(m, F, F)
        S = fr.frame_operator(fr.weighted(F, m))
        worst = max(worst, float(np.linalg.norm(M - S, 2)
                                 / max(np.linalg.norm(S, 2), 1.0)))
    tol = cfg.tol("weighted_identity")
    return _check(cfg, "weighted_identity",
                  "multiplier with a nonnegative symbol is the frame operator "
                  "of the reweighted frame", worst, tol, worst <= tol)


def check_canonical_dual_pair(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 109, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        worst = max(worst, fr.duality_defect(F, fr.canonical_dual(F)))
    tol = cfg.tol("canonical_dual_pair")
    return _check(cfg, "canonical_dual_pair",
                  "frame and its canonical dual synthesize the identity",
                  worst, tol, worst <= tol)


def check_dual_bounds_inverse(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 110, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        bounds = fr.frame_bounds(F)
        dual_bounds = fr.frame_bounds(fr.canonical_dual(F))
        worst = max(
            worst,
            abs(dual_bounds.lower - 1.0 / bounds.upper) * bounds.upper,
            abs(dual_bounds.upper - 1.0 / bounds.lower) * bounds.lower,
        )
    tol = cfg.tol("dual_bounds_inverse")
    return _check(cfg, "dual_bounds_inverse",
                  "canonical dual bounds are the reciprocals (1/B, 1/A)",
                  worst, tol, worst <= tol)


def check_frame_iff_invertible(cfg: SuiteConfig) -> Check:
    bad = 0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 111, i)
        deficient = bool(i % 2)
        if deficient:
            # columns confined to a proper subspace, so no frame
            space = random_space(rng, cfg.n_points)
            basis = rng.standard_normal((cfg.d, cfg.d - 1)) \
                + 1j * rng.standard_normal((cfg.d, cfg.d - 1))
            coeff = rng.standard_normal((cfg.d - 1, cfg.n_points))
            F = fr.SampledFrame(space, basis @ coeff)
        else:
            F = random_frame(rng, cfg.d, cfg.n_points)
        is_frame = fr.frame_bounds(F).is_frame
        try:
            hb.invert(fr.frame_operator(F))
            invertible = True
        except Exception:
            invertible = False
        if is_frame != invertible:
            bad += 1
    return _check(cfg, "frame_iff_invertible",
                  "frame property coincides with invertibility of the frame "
                  "operator", bad, cfg.tol("frame_iff_invertible"), bad == 0)


def check_bessel_inequality(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 112, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        bounds = fr.frame_bounds(F)
        for _ in range(10):
            f = random_vector(rng, cfg.d)
            energy = float(np.sum(F.space.weights
                                  * np.abs(fr.analysis(F, f)) ** 2))
            nsq = float(np.linalg.norm(f) ** 2)
            worst = max(worst,
                        (bounds.lower * nsq - energy) / nsq,
                        (energy - bounds.upper * nsq) / nsq)
    tol = cfg.tol("bessel_inequality")
    return _check(cfg, "bessel_inequality",
                  "weighted coefficient energy lies between the optimal bounds "
                  "times ||f||^2", worst, tol, worst <= tol)


def check_bessel_sharpness(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 113, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        S = fr.frame_operator(F)
        bounds = fr.frame_bounds(F)
        _, vecs = np.linalg.eigh(0.5 * (S + S.conj().T))
        top = vecs[:, -1]
        energy = float(np.sum(F.space.weights * np.abs(fr.analysis(F, top)) ** 2))
        worst = max(worst, abs(energy - bounds.upper) / bounds.upper)
    tol = cfg.tol("bessel_sharpness")
    return _check(cfg, "bessel_sharpness",
                  "the top eigenvector attains the upper bound with equality",
                  worst, tol, worst <= tol)


def _budget_violation(cfg: SuiteConfig, branch: int, p: float) -> float:
    worst = -math.inf
    for i in range(cfg.trials):
        m, F, G = random_instance(cfg.seed, branch, i, cfg.d, cfg.n_points)
        report = bound_budget(m, F, G, ps=(p,))
        worst = max(worst, report.actuals[p] - report.schatten_budgets[p])
    return worst


def check_op_norm_budget(cfg: SuiteConfig) -> Check:
    worst = _budget_violation(cfg, 114, math.inf)
    tol = cfg.tol("op_norm_budget")
    return _check(cfg, "op_norm_budget",
                  "operator norm is at most sup|m| sqrt(B_F B_G)",
                  worst, tol, worst <= tol)


def check_trace_budget(cfg: SuiteConfig) -> Check:
    worst = _budget_violation(cfg, 115, 1.0)
    tol = cfg.tol("trace_budget")
    return _check(cfg, "trace_budget",
                  "trace norm is at most ||m||_1 L_F L_G", worst, tol, worst <= tol)


def check_schatten_budget_p15(cfg: SuiteConfig) -> Check:
    worst = _budget_violation(cfg, 116, 1.5)
    tol = cfg.tol("schatten_budget_p15")
    return _check(cfg, "schatten_budget_p15",
                  "Schatten 1.5-norm stays under its interpolation budget",
                  worst, tol, worst <= tol)


def check_schatten_budget_p2(cfg: SuiteConfig) -> Check:
    worst = _budget_violation(cfg, 117, 2.0)
    tol = cfg.tol("schatten_budget_p2")
    return _check(cfg, "schatten_budget_p2",
                  "Hilbert-Schmidt norm stays under its interpolation budget",
                  worst, tol, worst <= tol)


def check_schatten_budget_p3(cfg: SuiteConfig) -> Check:
    worst = _budget_violation(cfg, 118, 3.0)
    tol = cfg.tol("schatten_budget_p3")
    return _check(cfg, "schatten_budget_p3",
                  "Schatten 3-norm stays under its interpolation budget",
                  worst, tol, worst <= tol)


def check_schatten_monotonicity(cfg: SuiteConfig) -> Check:
    worst = 0.0
    ps = (1.0, 1.5, 2.0, 3.0, math.inf)
    for i in range(cfg.trials):
        m, F, G = random_instance(cfg.seed, 119, i, cfg.d, cfg.n_points)
        M = multiplier(m, F, G)
        norms = [hb.schatten_norm(M, p) for p in ps]
        worst = max(worst, max(b - a for a, b in zip(norms, norms[1:])))
    tol = cfg.tol("schatten_monotonicity")
    return _check(cfg, "schatten_monotonicity",
                  "Schatten norms are nonincreasing in p", worst, tol, worst <= tol)


def check_perturb_upper(cfg: SuiteConfig) -> Check:
    worst = -math.inf
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 120, i)
        G = random_frame(rng, cfg.d, cfg.n_points)
        F = random_frame(rng, cfg.d, cfg.n_points, space=G.space)
        eps = float(rng.uniform(0.05, 1.0))
        upper = fr.frame_bounds(fr.perturb(G, F, eps)).upper
        cap = 2.0 * (fr.frame_bounds(G).upper + eps**2 * fr.frame_bounds(F).upper)
        worst = max(worst, upper - cap)
    tol = cfg.tol("perturb_upper")
    return _check(cfg, "perturb_upper",
                  "upper bound of G + eps F is at most 2 (B_G + eps^2 B_F)",
                  worst, tol, worst <= tol)


def check_perturb_lower(cfg: SuiteConfig) -> Check:
    worst = -math.inf
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 121, i)
        G = random_frame(rng, cfg.d, cfg.n_points)
        F = random_frame(rng, cfg.d, cfg.n_points, space=G.space)
        ag = fr.frame_bounds(G).lower
        bf = fr.frame_bounds(F).upper
        eps = 0.5 * math.sqrt(ag / bf)
        lower = fr.frame_bounds(fr.perturb(G, F, eps)).lower
        floor = (math.sqrt(ag) - eps * math.sqrt(bf)) ** 2
        worst = max(worst, floor - lower)
    tol = cfg.tol("perturb_lower")
    return _check(cfg, "perturb_lower",
                  "lower bound of G + eps F is at least "
                  "(sqrt(A_G) - eps sqrt(B_F))^2 for small eps",
                  worst, tol, worst <= tol)


def check_discrete_bessel_norm_bound(cfg: SuiteConfig) -> Check:
    worst = -math.inf
    for i in range(cfg.trials):
        rng = _rng(cfg.seed, 122, i)
        F = random_frame(rng, cfg.d, cfg.n_points,
                         space=counting_space(cfg.n_points))
        cap = math.sqrt(fr.frame_bounds(F).upper)
        worst = max(worst, fr.norm_bound(F) - cap)
    tol = cfg.tol("discrete_bessel_norm_bound")
    return _check(cfg, "discrete_bessel_norm_bound",
                  "with unit weights every frame vector norm is at most sqrt(B)",
                  worst, tol, worst <= tol)


def check_unbounded_norm_growth(cfg: SuiteConfig) -> Check:
    rng = _rng(cfg.seed, 123)
    h = random_vector(rng, cfg.d)
    norms = [fr.norm_bound(fr.scaled_singleton(uniform_grid_1d(0.0, 1.0, n), h))
             for n in (100, 1000, 10000)]
    ratios = [b / a for a, b in zip(norms, norms[1:])]
    floor = cfg.tol("unbounded_norm_growth")
    measured = min(ratios)
    return _check(cfg, "unbounded_norm_growth",
                  "largest vector norm grows by at least 1.5x per grid decade",
                  measured, floor, measured >= floor,
                  detail=f"norms {['%.4g' % v for v in norms]}")


def check_unbounded_bessel_cap(cfg: SuiteConfig) -> Check:
    rng = _rng(cfg.seed, 124)
    h = random_vector(rng, cfg.d)
    hsq = float(np.linalg.norm(h) ** 2)
    worst = -math.inf
    for n in (100, 1000, 10000):
        grid = uniform_grid_1d(0.0, 1.0, n)
        S = fr.scaled_singleton(grid, h)
        quad = float(np.sum(grid.weights
                            * fr.unbounded_amplitude(grid.points[:, 0]) ** 2))
        worst = max(worst, fr.frame_bounds(S).upper - hsq * quad)
    tol = cfg.tol("unbounded_bessel_cap")
    return _check(cfg, "unbounded_bessel_cap",
                  "Bessel bound stays below ||h||^2 times the amplitude "
                  "quadrature on every refinement", worst, tol, worst <= tol)


def _truncation_schedule(m: Symbol) -> list:
    order = np.argsort(np.abs(m.values))[::-1]
    cuts = [max(1, m.space.n_points // 8), m.space.n_points // 4,
            m.space.n_points // 2, m.space.n_points]
    return [truncate_symbol(m, order[:c]) for c in cuts]


def _truncation_instance(seed: int, branch: int, idx: int, d: int, n: int):
    # nonnegative symbol against a single frame: the cut remainder is then a
    # sum of positive rank-one terms, so its norm shrinks monotonically as
    # the kept set grows
    rng = _rng(seed, branch, idx)
    F = random_frame(rng, d, n)
    m = Symbol(rng.uniform(0.0, 3.0, size=n).astype(complex), F.space)
    return m, F


def check_truncation_budget(cfg: SuiteConfig) -> Check:
    worst = -math.inf
    trials = min(cfg.trials, 50)
    for i in range(trials):
        m, F = _truncation_instance(cfg.seed, 125, i, cfg.d, cfg.n_points)
        report = convergence_experiment("symbol_p", m, F, F,
                                        _truncation_schedule(m), p=math.inf)
        worst = max(worst, max(s.measured - s.budget for s in report.steps))
    tol = cfg.tol("truncation_budget")
    return _check(cfg, "truncation_budget",
                  "truncated-symbol deviation stays under "
                  "sup|m - m_n| sqrt(B_F B_G)", worst, tol, worst <= tol)


def check_truncation_monotone(cfg: SuiteConfig) -> Check:
    worst = -math.inf
    trials = min(cfg.trials, 50)
    for i in range(trials):
        m, F = _truncation_instance(cfg.seed, 125, i, cfg.d, cfg.n_points)
        report = convergence_experiment("symbol_p", m, F, F,
                                        _truncation_schedule(m), p=math.inf)
        measured = [s.measured for s in report.steps]
        rise = max(b - a for a, b in zip(measured, measured[1:]))
        worst = max(worst, rise, measured[-1])
    tol = cfg.tol("truncation_monotone")
    return _check(cfg, "truncation_monotone",
                  "nested truncations decrease the deviation monotonically "
                  "to zero", worst, tol, worst <= tol)


def _symbol_convergence(cfg: SuiteConfig, branch: int, p: float) -> float:
    worst = -math.inf
    schedules = min(cfg.trials, 20)
    for i in range(schedules):
        rng = _rng(cfg.seed, branch, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        G = random_frame(rng, cfg.d, cfg.n_points, space=F.space)
        m = random_symbol(rng, F.space)
        bump = random_symbol(rng, F.space)
        schedule = [Symbol(m.values + bump.values / n, F.space)
                    for n in (1, 2, 4, 8, 16)]
        report = convergence_experiment("symbol_p", m, F, G, schedule, p=p)
        worst = max(worst, max(s.measured - s.budget for s in report.steps))
    return worst


def check_symbol_convergence_p1(cfg: SuiteConfig) -> Check:
    worst = _symbol_convergence(cfg, 126, 1.0)
    tol = cfg.tol("symbol_convergence_p1")
    return _check(cfg, "symbol_convergence_p1",
                  "trace-norm deviation tracks the L1 distance of the symbols",
                  worst, tol, worst <= tol)


def check_symbol_convergence_p2(cfg: SuiteConfig) -> Check:
    worst = _symbol_convergence(cfg, 127, 2.0)
    tol = cfg.tol("symbol_convergence_p2")
    return _check(cfg, "symbol_convergence_p2",
                  "Hilbert-Schmidt deviation tracks the L2 distance of the symbols",
                  worst, tol, worst <= tol)


def check_symbol_convergence_pinf(cfg: SuiteConfig) -> Check:
    worst = _symbol_convergence(cfg, 128, math.inf)
    tol = cfg.tol("symbol_convergence_pinf")
    return _check(cfg, "symbol_convergence_pinf",
                  "operator-norm deviation tracks the sup distance of the symbols",
                  worst, tol, worst <= tol)


def _frame_convergence(cfg: SuiteConfig, branch: int, kind: str) -> float:
    worst = -math.inf
    schedules = min(cfg.trials, 20)
    for i in range(schedules):
        rng = _rng(cfg.seed, branch, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        G = random_frame(rng, cfg.d, cfg.n_points, space=F.space)
        m = random_symbol(rng, F.space)
        bump = random_frame(rng, cfg.d, cfg.n_points, space=F.space)
        schedule = [fr.SampledFrame(F.space, F.vectors + bump.vectors / n)
                    for n in (1, 2, 4, 8, 16)]
        report = convergence_experiment(kind, m, F, G, schedule)
        worst = max(worst, max(s.measured - s.budget for s in report.steps))
    return worst


def check_frame_uniform_l2(cfg: SuiteConfig) -> Check:
    worst = _frame_convergence(cfg, 129, "frame_uniform_L2")
    tol = cfg.tol("frame_uniform_l2")
    return _check(cfg, "frame_uniform_l2",
                  "uniform frame perturbation is dominated by "
                  "eps ||m||_2 sqrt(B_G)", worst, tol, worst <= tol)


def check_frame_uniform_l1(cfg: SuiteConfig) -> Check:
    worst = _frame_convergence(cfg, 130, "frame_uniform_L1")
    tol = cfg.tol("frame_uniform_l1")
    return _check(cfg, "frame_uniform_l1",
                  "uniform frame perturbation is dominated by eps ||m||_1 L_G",
                  worst, tol, worst <= tol)


def check_gabor_tightness(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for d in (4, 8, 16, 64):
        for i in range(20):
            rng = _rng(cfg.seed, 131, d, i)
            g = random_vector(rng, d)
            S = fr.frame_operator(tf.gabor_frame(g, d))
            gsq = float(np.linalg.norm(g) ** 2)
            worst = max(worst,
                        float(np.linalg.norm(S - gsq * np.eye(d), 2)) / gsq)
    tol = cfg.tol("gabor_tightness")
    return _check(cfg, "gabor_tightness",
                  "cyclic Gabor frame operator is exactly ||g||^2 times the "
                  "identity", worst, tol, worst <= tol)


def check_stft_matches_analysis(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(20):
        rng = _rng(cfg.seed, 132, i)
        d = int(rng.choice([4, 8, 16]))
        g = random_vector(rng, d)
        f = random_vector(rng, d)
        coeffs = tf.stft(f, g)
        direct = fr.analysis(tf.gabor_frame(g, d), f)
        worst = max(worst, float(np.max(np.abs(coeffs.values - direct))))
    tol = cfg.tol("stft_matches_analysis")
    return _check(cfg, "stft_matches_analysis",
                  "transform coefficients equal frame analysis entrywise",
                  worst, tol, worst <= tol)


def check_stft_energy(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(50):
        rng = _rng(cfg.seed, 133, i)
        d = int(rng.choice([4, 8, 16]))
        g = random_vector(rng, d)
        f = random_vector(rng, d)
        coeffs = tf.stft(f, g)
        energy = float(np.sum(coeffs.space.weights * np.abs(coeffs.values) ** 2))
        expected = float(np.linalg.norm(g) ** 2 * np.linalg.norm(f) ** 2)
        worst = max(worst, abs(energy - expected) / expected)
    tol = cfg.tol("stft_energy")
    return _check(cfg, "stft_energy",
                  "weighted coefficient energy equals ||g||^2 ||f||^2",
                  worst, tol, worst <= tol)


def check_stft_orthogonality(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(100):
        rng = _rng(cfg.seed, 134, i)
        d = int(rng.choice([4, 8, 16]))
        vecs = [random_vector(rng, d) for _ in range(4)]
        vecs = [v / np.linalg.norm(v) for v in vecs]
        worst = max(worst, tf.stft_orthogonality_residual(*vecs))
    tol = cfg.tol("stft_orthogonality")
    return _check(cfg, "stft_orthogonality",
                  "coefficient pairing of two windows factors into the two "
                  "inner products", worst, tol, worst <= tol)


def check_tf_shift_unitarity(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(100):
        rng = _rng(cfg.seed, 135, i)
        d = int(rng.choice([4, 8, 16, 32]))
        x = random_vector(rng, d)
        a, b = int(rng.integers(0, d)), int(rng.integers(0, d))
        shifted = tf.modulate(tf.translate(x, a), b)
        worst = max(worst, abs(float(np.linalg.norm(shifted) - np.linalg.norm(x))))
    tol = cfg.tol("tf_shift_unitarity")
    return _check(cfg, "tf_shift_unitarity",
                  "time and frequency shifts preserve norms", worst, tol,
                  worst <= tol)


def check_admissibility_oracle(cfg: SuiteConfig) -> Check:
    grid = tf.log_freq_grid(1e-3, 10.0, 2000, two_sided=True)
    value = tf.admissibility_constant(tf.WaveletSpec(), grid)
    measured = abs(value - 0.25)
    tol = cfg.tol("admissibility_oracle")
    return _check(cfg, "admissibility_oracle",
                  "quadrature admissibility constant matches the closed form 1/4",
                  measured, tol, measured <= tol,
                  detail=f"value {value!r}")


def check_admissibility_scaling(cfg: SuiteConfig) -> Check:
    grid = tf.log_freq_grid(1e-3, 10.0, 2000, two_sided=True)
    base = tf.admissibility_constant(tf.WaveletSpec(), grid)
    worst = 0.0
    for c in (0.5, 2.0, 3.0 + 4.0j):
        scaled = tf.WaveletSpec("given-fourier",
                                lambda g, c=c: c * tf.mexican_hat_fourier(g))
        value = tf.admissibility_constant(scaled, grid)
        worst = max(worst, abs(value - abs(c) ** 2 * base) / (abs(c) ** 2 * base))
    tol = cfg.tol("admissibility_scaling")
    return _check(cfg, "admissibility_scaling",
                  "scaling the profile by c scales the constant by |c|^2",
                  worst, tol, worst <= tol)


def check_admissibility_phase_invariance(cfg: SuiteConfig) -> Check:
    grid = tf.log_freq_grid(1e-3, 10.0, 2000, two_sided=True)
    base = tf.admissibility_constant(tf.WaveletSpec(), grid)
    phased = tf.WaveletSpec(
        "given-fourier",
        lambda g: tf.mexican_hat_fourier(g) * np.exp(1j * np.sign(g) * 0.7),
    )
    value = tf.admissibility_constant(phased, grid)
    measured = abs(value - base) / base
    tol = cfg.tol("admissibility_phase_invariance")
    return _check(cfg, "admissibility_phase_invariance",
                  "the constant depends on the profile modulus only",
                  measured, tol, measured <= tol)


@functools.lru_cache(maxsize=1)
def _small_wavelet_setup():
    from .measure import wavelet_grid
    d = 64
    grid = wavelet_grid(2.0**-6, 4.0, 48, 0.0, 1.0, d)
    wavelet = tf.WaveletSpec()
    S = fr.frame_operator(tf.wavelet_frame(wavelet, grid, d))
    dft = np.fft.fft(np.eye(d)) / math.sqrt(d)
    S_freq = dft @ S @ dft.conj().T
    return d, grid, wavelet, S, S_freq


def check_wavelet_diagonality(cfg: SuiteConfig) -> Check:
    _, _, _, _, S_freq = _small_wavelet_setup()
    diag_scale = float(np.max(np.abs(np.diagonal(S_freq))))
    off = S_freq - np.diag(np.diagonal(S_freq))
    measured = float(np.max(np.abs(off))) / diag_scale
    tol = cfg.tol("wavelet_diagonality")
    return _check(cfg, "wavelet_diagonality",
                  "frame operator is diagonal in the frequency basis under a "
                  "full uniform shift grid", measured, tol, measured <= tol)


def check_wavelet_diagonal_oracle(cfg: SuiteConfig) -> Check:
    d, grid, wavelet, _, S_freq = _small_wavelet_setup()
    oracle = tf.scale_profile(wavelet, grid, d)
    diag = np.real(np.diagonal(S_freq))
    measured = float(np.max(np.abs(diag - oracle)) / np.max(oracle))
    tol = cfg.tol("wavelet_diagonal_oracle")
    return _check(cfg, "wavelet_diagonal_oracle",
                  "frequency-basis diagonal matches the per-frequency scale "
                  "quadrature", measured, tol, measured <= tol)


def check_wavelet_band_constant(cfg: SuiteConfig) -> Check:
    d, grid, wavelet, _, S_freq = _small_wavelet_setup()
    c_plus = tf.positive_axis_constant(wavelet)
    freqs = tf.dft_frequencies(d)
    band = (np.abs(freqs) >= 1.0) & (np.abs(freqs) <= 9.0)
    diag = np.real(np.diagonal(S_freq))
    measured = float(np.max(np.abs(diag[band] / c_plus - 1.0)))
    tol = cfg.tol("wavelet_band_constant")
    return _check(cfg, "wavelet_band_constant",
                  "well-covered diagonal entries match the positive-axis "
                  "admissibility constant", measured, tol, measured <= tol)


def check_wavelet_shift_commutation(cfg: SuiteConfig) -> Check:
    d, _, _, S, _ = _small_wavelet_setup()
    shift = np.roll(np.eye(d), 1, axis=0)
    measured = float(np.linalg.norm(S @ shift - shift @ S, 2)
                     / np.linalg.norm(S, 2))
    tol = cfg.tol("wavelet_shift_commutation")
    return _check(cfg, "wavelet_shift_commutation",
                  "frame operator commutes with the one-step cyclic shift",
                  measured, tol, measured <= tol)


def check_wavelet_column_norms(cfg: SuiteConfig) -> Check:
    from .measure import wavelet_grid
    d = 32
    n_a, n_b = 8, 16
    grid = wavelet_grid(0.25, 2.0, n_a, 0.0, 1.0, n_b)
    W = tf.wavelet_frame(tf.WaveletSpec(), grid, d)
    norms = np.linalg.norm(W.vectors, axis=0).reshape(n_a, n_b)
    measured = float(np.max(np.ptp(norms, axis=1) / np.max(norms, axis=1)))
    tol = cfg.tol("wavelet_column_norms")
    return _check(cfg, "wavelet_column_norms",
                  "column norms do not depend on the shift coordinate",
                  measured, tol, measured <= tol)


@functools.lru_cache(maxsize=1)
def _calderon_pair() -> tuple[float, float]:
    from .measure import wavelet_grid
    p = CALDERON_DEFAULTS
    wavelet = tf.WaveletSpec()
    c_plus = tf.positive_axis_constant(wavelet)
    f = tf.bandlimited_bump(p["d"], p["band"], p["taper"])
    residuals = []
    for n_a in (p["n_a"], 2 * p["n_a"]):
        grid = wavelet_grid(p["a_min"], p["a_max"], n_a, 0.0, 1.0, p["n_b"])
        residuals.append(tf.calderon_residual(wavelet, grid, f, c_plus=c_plus))
    return residuals[0], residuals[1]


def check_calderon_default(cfg: SuiteConfig) -> Check:
    residual, _ = _calderon_pair()
    tol = cfg.tol("calderon_default")
    return _check(cfg, "calderon_default",
                  "reconstruction residual at the default grid stays under 2%",
                  residual, tol, residual <= tol)


def check_calderon_refinement(cfg: SuiteConfig) -> Check:
    coarse, fine = _calderon_pair()
    ratio = coarse / fine
    upper = cfg.tol("calderon_refinement")
    return _check(cfg, "calderon_refinement",
                  "doubling the scale count shrinks the residual by a factor "
                  "in [1.5, 3]", ratio, upper, 1.5 <= ratio <= upper,
                  detail=f"residuals {coarse!r} -> {fine!r}")


def _control_specs(rng) -> ctrl.ControlSpec:
    kind = rng.choice(["identity", "inverse", "sqrt", "power", "affine"])
    if kind == "power":
        return ctrl.ControlSpec("power", t=float(rng.uniform(-1.0, 1.5)))
    if kind == "affine":
        return ctrl.ControlSpec("affine", alpha=float(rng.uniform(0.5, 2.0)),
                                beta=float(rng.uniform(0.1, 1.0)))
    return ctrl.ControlSpec(str(kind))


def check_controlled_factorization(cfg: SuiteConfig) -> Check:
    worst = 0.0
    trials = min(cfg.trials, 100)
    for i in range(trials):
        rng = _rng(cfg.seed, 136, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        C = ctrl.make_control(_control_specs(rng), F)
        S = fr.frame_operator(F)
        L = ctrl.controlled_frame_operator(C, F)
        scale = max(float(np.linalg.norm(L, 2)), 1.0)
        worst = max(worst,
                    float(np.linalg.norm(L - C @ S, 2)) / scale,
                    float(np.linalg.norm(L - S @ C.conj().T, 2)) / scale)
    tol = cfg.tol("controlled_factorization")
    return _check(cfg, "controlled_factorization",
                  "mixed operator equals C S and S C* for self-adjoint "
                  "commuting controls", worst, tol, worst <= tol)


def check_controlled_bounds_map(cfg: SuiteConfig) -> Check:
    worst = 0.0
    trials = min(cfg.trials, 100)
    for i in range(trials):
        rng = _rng(cfg.seed, 137, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        spec = _control_specs(rng)
        C = ctrl.make_control(spec, F)
        low, high = ctrl.controlled_bounds(C, F)
        lam = np.linalg.eigvalsh(fr.frame_operator(F))
        mapped = spec.spectral_map(lam) * lam
        scale = max(float(np.max(np.abs(mapped))), 1.0)
        worst = max(worst, abs(low - float(np.min(mapped))) / scale,
                    abs(high - float(np.max(mapped))) / scale)
    tol = cfg.tol("controlled_bounds_map")
    return _check(cfg, "controlled_bounds_map",
                  "controlled bounds are the extremes of phi(lambda) lambda "
                  "over the frame spectrum", worst, tol, worst <= tol)


def check_controlled_spectral_mapping(cfg: SuiteConfig) -> Check:
    worst = 0.0
    trials = min(cfg.trials, 100)
    for i in range(trials):
        rng = _rng(cfg.seed, 138, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        spec = _control_specs(rng)
        C = ctrl.make_control(spec, F)
        L = ctrl.controlled_frame_operator(C, F)
        lam = np.linalg.eigvalsh(fr.frame_operator(F))
        mapped = np.sort(spec.spectral_map(lam) * lam)
        spectrum = np.sort(np.linalg.eigvalsh(0.5 * (L + L.conj().T)))
        worst = max(worst, float(np.max(np.abs(spectrum - mapped))))
    tol = cfg.tol("controlled_spectral_mapping")
    return _check(cfg, "controlled_spectral_mapping",
                  "spectrum of the mixed operator is the mapped frame spectrum",
                  worst, tol, worst <= tol)


def check_controlled_positivity(cfg: SuiteConfig) -> Check:
    bad = 0
    trials = min(cfg.trials, 100)
    for i in range(trials):
        rng = _rng(cfg.seed, 139, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        spec = _control_specs(rng)
        C = ctrl.make_control(spec, F)
        if not hb.is_positive(ctrl.controlled_frame_operator(C, F), 1e-10):
            bad += 1
    return _check(cfg, "controlled_positivity",
                  "mixed operator of a positive commuting control is positive",
                  bad, cfg.tol("controlled_positivity"), bad == 0)


def check_controlled_implies_frame(cfg: SuiteConfig) -> Check:
    bad = 0
    trials = min(cfg.trials, 100)
    for i in range(trials):
        rng = _rng(cfg.seed, 140, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        C = ctrl.make_control(_control_specs(rng), F)
        low, _ = ctrl.controlled_bounds(C, F)
        if low > 0.0 and not fr.frame_bounds(F).is_frame:
            bad += 1
    return _check(cfg, "controlled_implies_frame",
                  "a positive controlled lower bound certifies the frame "
                  "property", bad, cfg.tol("controlled_implies_frame"), bad == 0)


def check_precondition_identity(cfg: SuiteConfig) -> Check:
    worst = 0.0
    trials = min(cfg.trials, 100)
    for i in range(trials):
        rng = _rng(cfg.seed, 141, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        G = random_frame(rng, cfg.d, cfg.n_points, space=F.space)
        m = random_symbol(rng, F.space)
        worst = max(worst, ctrl.precondition_identity_residual(
            _control_specs(rng), _control_specs(rng), m, F, G))
    tol = cfg.tol("precondition_identity")
    return _check(cfg, "precondition_identity",
                  "undoing the controls recovers the plain multiplier",
                  worst, tol, worst <= tol)


def check_weighted_scaling(cfg: SuiteConfig) -> Check:
    worst = 0.0
    for i in range(min(cfg.trials, 100)):
        rng = _rng(cfg.seed, 142, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        bounds = fr.frame_bounds(F)
        scaled = fr.frame_bounds(fr.weighted(F, np.full(cfg.n_points, 4.0)))
        worst = max(worst,
                    abs(scaled.lower - 4.0 * bounds.lower) / (4.0 * bounds.upper),
                    abs(scaled.upper - 4.0 * bounds.upper) / (4.0 * bounds.upper))
    tol = cfg.tol("weighted_scaling")
    return _check(cfg, "weighted_scaling",
                  "a constant weight scales both frame bounds by that constant",
                  worst, tol, worst <= tol)


def check_certificates(cfg: SuiteConfig) -> Check:
    worst = -math.inf
    failed = 0
    trials = min(cfg.trials, 100)
    for i in range(trials):
        m, F, G = random_invertible_instance(cfg.seed, 143, i, cfg.d, cfg.n_points)
        report = lower_bound_certificates(m, F, G)
        if not report.all_passed:
            failed += 1
        part1 = report.parts[0]
        worst = max(worst, part1.floor - part1.measured)
    tol = cfg.tol("certificates")
    return _check(cfg, "certificates",
                  "all five lower-bound certificates hold on invertible "
                  "instances", worst, tol, failed == 0 and worst <= tol,
                  detail=f"{failed} failing instance(s)")


def check_multiplier_dual(cfg: SuiteConfig) -> Check:
    worst = 0.0
    trials = min(cfg.trials, 50)
    for i in range(trials):
        m, F, G = random_invertible_instance(cfg.seed, 144, i, cfg.d, cfg.n_points)
        H = dual_from_multiplier(m, F, G)
        worst = max(worst, fr.duality_defect(H, G))
    tol = cfg.tol("multiplier_dual")
    return _check(cfg, "multiplier_dual",
                  "the frame built from the inverse multiplier is a dual of G",
                  worst, tol, worst <= tol)


def check_positive_symbol_coercivity(cfg: SuiteConfig) -> Check:
    worst = -math.inf
    bad = 0
    for i in range(min(cfg.trials, 100)):
        rng = _rng(cfg.seed, 145, i)
        F = random_frame(rng, cfg.d, cfg.n_points)
        delta = float(rng.uniform(0.1, 1.0))
        m = Symbol(rng.uniform(delta, delta + 2.0,
                               size=cfg.n_points).astype(complex), F.space)
        M = multiplier(m, F, F)
        if not hb.is_positive(M, 1e-10):
            bad += 1
        lam_min = hb.hermitian_bounds(0.5 * (M + M.conj().T))[0]
        floor = delta * fr.frame_bounds(F).lower
        worst = max(worst, floor - lam_min)
    tol = cfg.tol("positive_symbol_coercivity")
    return _check(cfg, "positive_symbol_coercivity",
                  "a symbol bounded below by delta makes the multiplier "
                  "positive with lower bound delta A_F", worst, tol,
                  bad == 0 and worst <= tol)


SUITE_CHECKS = {
    "identities": [
        check_frame_factorization,
        check_reconstruction,
        check_reconstruction_swapped,
        check_multiplier_adjoint,
        check_difference_symbol,
        check_difference_analysis,
        check_difference_synthesis,
        check_weighted_identity,
        check_canonical_dual_pair,
        check_dual_bounds_inverse,
        check_frame_iff_invertible,
    ],
    "bounds": [
        check_bessel_inequality,
        check_bessel_sharpness,
        check_op_norm_budget,
        check_trace_budget,
        check_schatten_budget_p15,
        check_schatten_budget_p2,
        check_schatten_budget_p3,
        check_schatten_monotonicity,
        check_perturb_upper,
        check_perturb_lower,
        check_discrete_bessel_norm_bound,
        check_unbounded_norm_growth,
        check_unbounded_bessel_cap,
    ],
    "convergence": [
        check_truncation_budget,
        check_truncation_monotone,
        check_symbol_convergence_p1,
        check_symbol_convergence_p2,
        check_symbol_convergence_pinf,
        check_frame_uniform_l2,
        check_frame_uniform_l1,
    ],
    "gabor": [
        check_gabor_tightness,
        check_stft_matches_analysis,
        check_stft_energy,
        check_stft_orthogonality,
        check_tf_shift_unitarity,
    ],
    "wavelet": [
        check_admissibility_oracle,
        check_admissibility_scaling,
        check_admissibility_phase_invariance,
        check_wavelet_diagonality,
        check_wavelet_diagonal_oracle,
        check_wavelet_band_constant,
        check_wavelet_shift_commutation,
        check_wavelet_column_norms,
        check_calderon_default,
        check_calderon_refinement,
    ],
    "controlled": [
        check_controlled_factorization,
        check_controlled_bounds_map,
        check_controlled_spectral_mapping,
        check_controlled_positivity,
        check_controlled_implies_frame,
        check_precondition_identity,
    ],
    "weighted": [
        check_weighted_scaling,
        check_certificates,
        check_multiplier_dual,
        check_positive_symbol_coercivity,
    ],
}


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


def run_suite(config: SuiteConfig) -> Report:
    """Run every check of the configured suite and collect a report.

    A check that raises is recorded as failed with the exception in its
    detail field; the run continues.
    """
    if config.suite == "all":
        fns = [fn for suite in SUITES[:-1] for fn in SUITE_CHECKS[suite]]
    else:
        fns = SUITE_CHECKS[config.suite]
    report = Report(suite=config.suite, seed=config.seed, started=_timestamp())
    for fn in fns:
        try:
            report.checks.append(fn(config))
        except Exception as exc:  # keep going; the report carries the failure
            check_id = fn.__name__.removeprefix("check_")
            tol = float(config.tolerances.get(
                check_id, DEFAULT_TOLERANCES.get(check_id, math.nan)))
            report.checks.append(Check(
                check_id, "check aborted with an exception", math.nan, math.nan,
                tol, False, detail=f"{type(exc).__name__}: {exc}",
            ))
    report.finished = _timestamp()
    return report


def run_gabor(d: int, window="gaussian", seed: int = 0) -> Report:
    """Tightness report for one cyclic Gabor system."""
    if isinstance(window, str):
        window = tf.WindowSpec(kind=window)
    g = window.build(d) if isinstance(window, tf.WindowSpec) else np.asarray(window)
    report = Report(suite="gabor-run", seed=seed, started=_timestamp())
    frame = tf.gabor_frame(g, d)
    bounds = fr.frame_bounds(frame)
    gsq = float(np.linalg.norm(g) ** 2)
    S = fr.frame_operator(frame)
    residual = float(np.linalg.norm(S - gsq * np.eye(d), 2)) / gsq
    tol = 1e-10
    report.checks.extend([
        Check("gabor_lower_bound", "optimal lower bound equals ||g||^2",
              bounds.lower, gsq, tol, abs(bounds.lower - gsq) <= tol * gsq),
        Check("gabor_upper_bound", "optimal upper bound equals ||g||^2",
              bounds.upper, gsq, tol, abs(bounds.upper - gsq) <= tol * gsq),
        Check("gabor_tightness_residual",
              "frame operator equals ||g||^2 times the identity",
              residual, tol, tol, residual <= tol),
    ])
    report.finished = _timestamp()
    return report


def run_wavelet(d: int = CALDERON_DEFAULTS["d"],
                wavelet: tf.WaveletSpec | None = None,
                a_min: float = CALDERON_DEFAULTS["a_min"],
                a_max: float = CALDERON_DEFAULTS["a_max"],
                n_a: int = CALDERON_DEFAULTS["n_a"],
                n_b: int | None = None,
                band: tuple[float, float] = CALDERON_DEFAULTS["band"],
                taper: float = CALDERON_DEFAULTS["taper"],
                seed: int = 0) -> Report:
    """Admissibility, reconstruction and refinement report for one wavelet."""
    from .measure import wavelet_grid
    wavelet = wavelet or tf.WaveletSpec()
    n_b = d if n_b is None else n_b
    report = Report(suite="wavelet-run", seed=seed, started=_timestamp())

    oracle_grid = tf.log_freq_grid(1e-3, 10.0, 2000, two_sided=True)
    c_full = tf.admissibility_constant(wavelet, oracle_grid)
    c_plus = tf.positive_axis_constant(wavelet)
    if not (c_plus > 0.0 and math.isfinite(c_plus)):
        raise InvalidParameterError("wavelet profile is not admissible")

    f = tf.bandlimited_bump(d, band, taper)
    residuals = []
    for cells in (n_a, 2 * n_a):
        grid = wavelet_grid(a_min, a_max, cells, 0.0, 1.0, n_b)
        residuals.append(tf.calderon_residual(wavelet, grid, f, c_plus=c_plus))
    ratio = residuals[0] / residuals[1]

    grid_desc = (f"d={d} a=[{a_min:g},{a_max:g}] n_a={n_a} n_b={n_b} "
                 f"band={tuple(band)} taper={taper:g}")
    checks = [
        Check("admissibility_constant",
              "two-sided admissibility quadrature (default profile: 1/4)",
              c_full, 0.25, 1e-4, True,
              detail=f"positive-axis constant {c_plus!r}"),
        Check("calderon_residual",
              "reconstruction residual within tolerance on the configured grid",
              residuals[0], 0.02, 0.02, residuals[0] <= 0.02,
              detail=f"{grid_desc}, C_plus={c_plus!r}"),
        Check("calderon_refinement",
              "residual drops by a factor in [1.5, 3] when scales double",
              ratio, 3.0, 3.0, 1.5 <= ratio <= 3.0,
              detail=f"residuals {residuals[0]!r} -> {residuals[1]!r}"),
    ]
    report.checks.extend(checks)
    report.finished = _timestamp()
    return report


def run_multiplier(config: dict, seed: int = 0) -> tuple[Report, str]:
    """Budget report plus singular-value CSV for one configured multiplier.

    The configuration carries an analysis frame, a synthesis frame and a
    symbol in their JSON forms.
    """
    F = fr.SampledFrame.from_dict(config["analysis_frame"])
    G = fr.SampledFrame.from_dict(config["synthesis_frame"])
    m = Symbol.from_dict(config["symbol"], F.space)
    tolerance = float(config.get("tolerance", 1e-10))

    report = Report(suite="multiplier-run", seed=seed, started=_timestamp())
    M = multiplier(m, F, G)
    budget = bound_budget(m, F, G, tolerance=tolerance)
    for p in sorted(budget.actuals, key=lambda q: (math.isinf(q), q)):
        tag = "inf" if p == math.inf else f"{p:g}"
        report.checks.append(Check(
            f"budget_p{tag}", f"Schatten {tag}-norm within its budget",
            budget.actuals[p], budget.schatten_budgets[p], tolerance,
            budget.actuals[p] <= budget.schatten_budgets[p] + tolerance))

    adjoint_defect = float(np.linalg.norm(
        M.conj().T - multiplier(m.values.conj(), G, F), 2))
    scale = max(float(np.linalg.norm(M, 2)), 1e-300)
    report.checks.append(Check(
        "adjoint_identity",
        "adjoint equals the conjugate-symbol multiplier with frames swapped",
        adjoint_defect / scale, 1e-12, 1e-12, adjoint_defect / scale <= 1e-12))

    if np.allclose(m.values, 1.0) and np.array_equal(F.vectors, G.vectors):
        s_defect = float(np.linalg.norm(M - fr.frame_operator(F), 2)) / scale
        report.checks.append(Check(
            "equals_frame_operator",
            "unit symbol with equal frames reproduces the frame operator",
            s_defect, 1e-12, 1e-12, s_defect <= 1e-12))

    csv_text = hb.spectrum_to_csv(hb.singular_values(M))
    report.finished = _timestamp()
    return report, csv_text
