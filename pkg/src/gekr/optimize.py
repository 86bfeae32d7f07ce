"""Density tuning: which alpha maximizes the guaranteed row count.

Maximizing the row bound means minimizing the deficiency probability
(independent model) or the decay base mu (fixed-weight asymptotics).
Both objectives are smooth with a single interior minimum, so a coarse
grid scan followed by golden-section refinement is reliable and fast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .bounds import asymptotic_profile, p_independent
from .core import LogMagnitude

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(
    f: Callable[[float], float], a: float, b: float, tol: float = 1e-6
) -> float:
    """Minimize a unimodal f on [a, b] to within tol; returns the
    midpoint of the final bracket."""
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return (a + b) / 2.0


def _grid(a: float, b: float, step: float) -> list[float]:
    """Inclusive float grid without cumulative drift."""
    count = int(round((b - a) / step))
    return [round(a + k * step, 12) for k in range(count + 1)]


def _refine(
    f: Callable[[float], float],
    grid: list[float],
    lo_clip: float,
    hi_clip: float,
    tol: float,
) -> float:
    """Grid argmin, then golden-section on the bracketing neighbours."""
    values = [f(x) for x in grid]
    k = min(range(len(grid)), key=values.__getitem__)
    lo = grid[k - 1] if k > 0 else max(lo_clip, grid[0] - (grid[1] - grid[0]))
    hi = grid[k + 1] if k + 1 < len(grid) else hi_clip
    lo, hi = max(lo, lo_clip), min(hi, hi_clip)
    return golden_section(f, lo, hi, tol=tol)


def argmin_independent(n: int, tol: float = 1e-6) -> tuple[float, LogMagnitude]:
    """Density minimizing the independent-model deficiency probability
    at the given column count, with the probability at the optimum.
    The minimizer tends to 2/3 as n grows.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")

    def objective(alpha: float) -> float:
        return p_independent(alpha, n).log10

    grid = _grid(0.001, 0.999, 0.001)
    alpha_star = _refine(objective, grid, 1e-9, 1.0 - 1e-9, tol)
    return alpha_star, p_independent(alpha_star, n)


def argmin_mu(tol: float = 1e-6, grid_step: float = 1e-4) -> tuple[float, float]:
    """Density minimizing the fixed-weight decay base mu, with the
    minimal mu.  Scans the branch where the pairwise sum dominates
    (alpha > 1/2) on a grid_step grid and checks the other branch's
    best against it before refining the winner.
    """
    if not 0 < grid_step <= 0.01:
        raise ValueError(f"grid_step must be in (0, 0.01], got {grid_step}")

    def mu_of(alpha: float) -> float:
        return asymptotic_profile(alpha).mu

    theta_grid = _grid(0.5 + grid_step, 1.0 - grid_step, grid_step)
    xi_grid = _grid(grid_step, 0.5, grid_step)

    theta_vals = [mu_of(x) for x in theta_grid]
    xi_vals = [mu_of(x) for x in xi_grid]
    k_theta = min(range(len(theta_grid)), key=theta_vals.__getitem__)
    k_xi = min(range(len(xi_grid)), key=xi_vals.__getitem__)

    if theta_vals[k_theta] <= xi_vals[k_xi]:
        grid, k = theta_grid, k_theta
        lo_clip, hi_clip = 0.5 + 1e-9, 1.0
    else:
        grid, k = xi_grid, k_xi
        lo_clip, hi_clip = 1e-9, 0.5

    lo = grid[k - 1] if k > 0 else lo_clip
    hi = grid[k + 1] if k + 1 < len(grid) else hi_clip
    alpha_star = golden_section(mu_of, max(lo, lo_clip), min(hi, hi_clip), tol=tol)
    return alpha_star, mu_of(alpha_star)


@dataclass(frozen=True)
class FigureTable:
    """Columnar data behind one of the four reference plots; cells are
    floats or None where a quantity is undefined."""

    columns: tuple[str, ...]
    rows: tuple[tuple[float | None, ...], ...]


def _term_range_fractions(alpha: float) -> tuple[float, float]:
    """Admissible-u endpoints of the triple-intersection sum, as
    fractions of n: max(0, 2 alpha - 1) and min(alpha, 1 - alpha)."""
    return max(0.0, 2.0 * alpha - 1.0), min(alpha, 1.0 - alpha)


def figure_data(figure: int, grid_step: float = 0.005) -> FigureTable:
    """Data for reference figure 1, 2, 3, or 4.

    1: admissible range and dominant-term location of the
       triple-intersection sum, against alpha in [0, 1).
    2: dominant-term location and upper ratio root of the pairwise
       sum, with the lines alpha and 2 alpha - 1, on (0, 1].
    3: both decay bases xi and theta on [0, 1].
    4: theta near its minimum, on [0.70, 0.78].
    """
    if not 0.0 < grid_step <= 0.1:
        raise ValueError(f"grid_step must be in (0, 0.1], got {grid_step}")

    if figure == 1:
        columns = ("alpha", "lower_limit", "upper_limit", "u1_over_n", "u2_over_n")
        rows = []
        for alpha in _grid(0.0, 1.0 - grid_step, grid_step):
            lo, hi = _term_range_fractions(alpha)
            # Leading discriminant coefficient factors as (1-a)^3 (1+3a),
            # non-negative on all of [0, 1), so both curves exist here.
            e = (1.0 - alpha) ** 3 * (1.0 + 3.0 * alpha)
            root = math.sqrt(e)
            u1 = (1.0 - alpha * alpha - root) / (2.0 - 2.0 * alpha)
            u2 = (1.0 - alpha * alpha + root) / (2.0 - 2.0 * alpha)
            rows.append((alpha, lo, hi, u1, u2))
        return FigureTable(columns=columns, rows=tuple(rows))

    if figure == 2:
        columns = ("alpha", "v1_over_n", "v2_over_n", "alpha_line", "two_alpha_minus_1")
        rows = []
        for alpha in _grid(grid_step, 1.0, grid_step):
            prof = asymptotic_profile(alpha)
            radicand = (
                5.0 * alpha**4 - 12.0 * alpha**3 + 10.0 * alpha**2 - 4.0 * alpha + 1.0
            )
            root = math.sqrt(max(radicand, 0.0))
            v2 = (3.0 * alpha * alpha + 1.0 - 2.0 * alpha + root) / (2.0 * alpha)
            rows.append((alpha, prof.kappa, v2, alpha, 2.0 * alpha - 1.0))
        return FigureTable(columns=columns, rows=tuple(rows))

    if figure == 3:
        columns = ("alpha", "xi", "theta")
        rows = []
        for alpha in _grid(0.0, 1.0, grid_step):
            if alpha == 0.0:
                rows.append((alpha, 1.0, None))
                continue
            prof = asymptotic_profile(alpha)
            rows.append((alpha, prof.xi, prof.theta))
        return FigureTable(columns=columns, rows=tuple(rows))

    if figure == 4:
        columns = ("alpha", "theta")
        rows = []
        for alpha in _grid(0.70, 0.78, grid_step):
            prof = asymptotic_profile(alpha)
            rows.append((alpha, prof.theta))
        return FigureTable(columns=columns, rows=tuple(rows))

    raise ValueError(f"figure must be 1, 2, 3, or 4, got {figure}")
