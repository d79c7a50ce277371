"""
Characteristic roots of Theta(s) = s^2 + (eta s + lambda) e^{-tau s}.

Used as an independent oracle for the plant-stability region: the spectral
abscissa (largest real part of a root inside a search window) is negative
exactly inside G(tau).

Roots are seeded from local minima of |Theta| on a rectangular grid and then
refined with Newton's method on the analytic function.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.ndimage import minimum_filter
from scipy.optimize import newton

from platoon_v2i.core.types import LambdaEta
from platoon_v2i.exceptions import ValidationError

logger = logging.getLogger(__name__)

ROOT_RESIDUAL_TOL = 1e-8


def characteristic(s: complex | np.ndarray, le: LambdaEta, tau: float) -> complex | np.ndarray:
    """Theta(s); vectorised over s."""
    return s * s + (le.eta * s + le.lam) * np.exp(-tau * s)


def characteristic_derivative(s: complex | np.ndarray, le: LambdaEta, tau: float) -> complex | np.ndarray:
    """d Theta / d s."""
    delay = np.exp(-tau * s)
    return 2.0 * s + le.eta * delay - tau * (le.eta * s + le.lam) * delay


@dataclass(frozen=True)
class RootSearchConfig:
    """Search window Re in [re_min, re_max], Im in [0, im_max] and its grid.

    im_max defaults to 4 pi / tau when left as None.
    """

    re_min: float = -5.0
    re_max: float = 1.0
    im_max: float | None = None
    n_re: int = 400
    n_im: int = 400
    n_seeds: int = 24
    newton_tol: float = 1e-12
    newton_maxiter: int = 100

    def __post_init__(self) -> None:
        if not self.re_max > self.re_min:
            raise ValidationError(f"re_max must exceed re_min, got [{self.re_min}, {self.re_max}]")
        if self.im_max is not None and not self.im_max > 0:
            raise ValidationError(f"im_max must be positive, got {self.im_max}")
        if self.n_re < 3 or self.n_im < 3 or self.n_seeds < 1:
            raise ValidationError("Grid needs at least 3x3 points and one seed")

    def imag_extent(self, tau: float) -> float:
        return self.im_max if self.im_max is not None else 4.0 * math.pi / tau


DEFAULT_SEARCH = RootSearchConfig()


@dataclass(frozen=True)
class SpectralAbscissa:
    """Largest real part found and the roots that produced it.

    Attributes:
        value: max Re(s0) over refined roots (or over grid seeds if coarse)
        coarse: True when no seed refined to a root and value is a grid estimate
        roots: Refined roots with Im >= 0, sorted by decreasing real part
    """

    value: float
    coarse: bool = False
    roots: tuple[complex, ...] = field(default_factory=tuple)


def _seeds(le: LambdaEta, tau: float, search: RootSearchConfig) -> list[complex]:
    re = np.linspace(search.re_min, search.re_max, search.n_re)
    im = np.linspace(0.0, search.imag_extent(tau), search.n_im)
    grid = re[np.newaxis, :] + 1j * im[:, np.newaxis]
    modulus = np.abs(characteristic(grid, le, tau))
    is_min = modulus == minimum_filter(modulus, size=3, mode="nearest")
    rows, cols = np.nonzero(is_min)
    order = np.argsort(modulus[rows, cols])[: search.n_seeds]
    return [complex(grid[rows[k], cols[k]]) for k in order]


def spectral_abscissa(
    le: LambdaEta,
    tau: float,
    search: RootSearchConfig = DEFAULT_SEARCH,
) -> SpectralAbscissa:
    """
    Estimate max Re(s0) over roots of Theta inside the search window.

    Refined roots slightly outside the window are kept as long as they are
    genuine roots. If no seed refines, the largest real part among the seeds
    is returned with ``coarse=True``.
    """
    if not tau > 0:
        raise ValidationError(f"tau must be positive, got {tau}")

    seeds = _seeds(le, tau, search)
    im_extent = search.imag_extent(tau)
    slack = 0.5 * (search.re_max - search.re_min)
    roots: list[complex] = []
    for seed in seeds:
        try:
            root = complex(
                newton(
                    lambda s: characteristic(s, le, tau),
                    seed,
                    fprime=lambda s: characteristic_derivative(s, le, tau),
                    tol=search.newton_tol,
                    maxiter=search.newton_maxiter,
                )
            )
        except (RuntimeError, ZeroDivisionError, OverflowError) as e:
            logger.debug(f"Newton refinement from {seed:.4g} failed: {e}")
            continue
        if not np.isfinite(root) or abs(characteristic(root, le, tau)) > ROOT_RESIDUAL_TOL:
            continue
        root = complex(root.real, abs(root.imag))
        inside = (
            search.re_min - slack <= root.real <= search.re_max + slack
            and root.imag <= im_extent + slack
        )
        if inside and not any(abs(root - r) < 1e-7 for r in roots):
            roots.append(root)

    if not roots:
        estimate = max(s.real for s in seeds)
        logger.warning(f"No seed refined for lambda={le.lam}, eta={le.eta}, tau={tau}; grid estimate {estimate:.4g}")
        return SpectralAbscissa(value=estimate, coarse=True)

    roots.sort(key=lambda r: r.real, reverse=True)
    return SpectralAbscissa(value=roots[0].real, roots=tuple(roots))
