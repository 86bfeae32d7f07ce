"""Deficiency probabilities and the row-count bounds they imply.

For a random m-row array, let a "deficient" triple be one missing at
least one of the four GEKR patterns.  If a single triple is deficient
with probability p, the local lemma guarantees a deficiency-free array
exists whenever e * p * (d + 1) <= 1, where d < 3 m^2 / 2 bounds the
number of triples sharing a row with a given one.  Solving gives

    m >= sqrt(2 / (3 e p)) ** 1    (rows guaranteed to exist)

so every routine here reduces to computing p, exactly or in log space,
under one of two row models:

  independent:  each entry is 1 with probability alpha, independently;
  fixed-weight: each row is uniform over weight-r subsets of n columns.

Probabilities small beyond float range are carried as LogMagnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

import numpy as np
from scipy.special import gammaln, logsumexp

from .core import LogMagnitude, Model, ModelParams

#: Euler's number in the local-lemma condition e * p * (d + 1) <= 1.
E_EULER = math.e

#: log10 of sqrt(2 / (3 e)), the constant factor of every row bound.
LOG10_LLL_CONST = 0.5 * math.log10(2.0 / (3.0 * E_EULER))

_LN10 = math.log(10.0)

#: Column count up to which the fixed-weight probability is summed in
#: exact rational arithmetic; beyond it we switch to log-space floats.
EXACT_N_LIMIT = 500


def _log10_sum(terms: list[float]) -> float:
    """log10 of a sum of magnitudes given by their log10s."""
    finite = [t for t in terms if t != -math.inf]
    if not finite:
        return -math.inf
    top = max(finite)
    return top + math.log10(math.fsum(10.0 ** (t - top) for t in finite))


# ---------------------------------------------------------------------------
# Independent model


def p_independent(alpha: float, n: int) -> LogMagnitude:
    """Union bound on the probability that a triple of independent-entry
    rows is deficient:

        p = (1 - alpha^3)^n + 3 (1 - alpha^2 (1 - alpha))^n

    The first term bounds the chance that no column shows 1s in all
    three rows; each of the other three patterns fails with the second
    term's base, and the three cases are symmetric.
    """
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a = float(alpha)
    # log1p keeps precision when alpha is small and alpha^3 is tiny.
    log10_all_ones = n * math.log1p(-(a**3)) / _LN10 if a < 1 else -math.inf
    log10_pair = math.log10(3.0) + n * math.log1p(-(a**2) * (1.0 - a)) / _LN10
    return LogMagnitude.from_log10(_log10_sum([log10_all_ones, log10_pair]))


def lll_max_rows(p: LogMagnitude) -> LogMagnitude:
    """Rows guaranteed by the local lemma at per-triple probability p:
    the largest m with (3 e / 2) m^2 p <= 1, i.e. sqrt(2 / (3 e p)).
    Values below 1 mean no nontrivial guarantee (callers floor to an
    integer row count when they need one).
    """
    if p.is_zero:
        raise ValueError("zero deficiency probability gives an unbounded m")
    return LogMagnitude.from_log10(LOG10_LLL_CONST - 0.5 * p.log10)


def zeta(alpha: float, n: int) -> LogMagnitude:
    """Independent-model row bound sqrt(2 / (3 e)) * p^(-1/2) with
    p = p_independent(alpha, n)."""
    return lll_max_rows(p_independent(alpha, n))


def floor_rows(bound: LogMagnitude) -> int:
    """Largest integer row count not exceeding the bound.  Only valid
    when the bound fits comfortably in an int via float; constructive
    use never needs more."""
    if bound.is_zero:
        return 0
    if bound.log10 >= 18:
        raise OverflowError(f"10^{bound.log10:.1f} rows is not materializable")
    return int(10.0 ** bound.log10)


# ---------------------------------------------------------------------------
# Fixed-weight model, exact rational sums


def phi_term(n: int, r: int, u: int) -> Fraction:
    """Probability weight that rows B, C (uniform weight-r subsets) meet
    a fixed weight-r row A in exactly u common columns while A, B, C
    have no column common to all three:

        phi(u) = C(r,u) C(n-r,r-u) C(n-u,r) / C(n,r)^2

    Admissible u runs from max(0, 2r-n) to min(r, n-r); outside that
    range the configuration is impossible and u is rejected.
    """
    lo, hi = max(0, 2 * r - n), min(r, n - r)
    if not lo <= u <= hi:
        raise ValueError(f"u={u} outside admissible range [{lo}, {hi}]")
    denom = comb(n, r) ** 2
    return Fraction(comb(r, u) * comb(n - r, r - u) * comb(n - u, r), denom)


def psi_term(n: int, r: int, u: int) -> Fraction:
    """Probability weight that row B meets row A in u columns while no
    column shows 1 in A and B but 0 in C:

        psi(u) = C(r,u) C(n-r,r-u) C(n-u,n-r) / C(n,r)^2

    Admissible u runs from max(0, 2r-n) to r.
    """
    lo, hi = max(0, 2 * r - n), r
    if not lo <= u <= hi:
        raise ValueError(f"u={u} outside admissible range [{lo}, {hi}]")
    denom = comb(n, r) ** 2
    return Fraction(comb(r, u) * comb(n - r, r - u) * comb(n - u, n - r), denom)


def sigma1(n: int, r: int) -> Fraction:
    """Exact probability that three uniform weight-r rows share no
    common 1-column: the sum of phi_term over its admissible range.
    Empty range (r > n - r and 2r - n > n - r, i.e. r > 2n/3) gives 0:
    rows that big always intersect pairwise in more than half their
    columns, forcing a triple intersection.
    """
    lo, hi = max(0, 2 * r - n), min(r, n - r)
    return sum(
        (phi_term(n, r, u) for u in range(lo, hi + 1)), start=Fraction(0)
    )


def sigma2(n: int, r: int) -> Fraction:
    """Exact probability that no column reads (1, 1, 0) across three
    uniform weight-r rows: the sum of psi_term over its range."""
    lo, hi = max(0, 2 * r - n), r
    return sum(
        (psi_term(n, r, u) for u in range(lo, hi + 1)), start=Fraction(0)
    )


def p_fixed_exact(n: int, r: int) -> Fraction:
    """Union bound on the deficiency probability of three uniform
    weight-r rows: sigma1 + 3 sigma2.  As a union bound it can exceed 1
    for small or extreme parameters; callers clamp where needed.
    """
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return sigma1(n, r) + 3 * sigma2(n, r)


def _log_comb(a: np.ndarray | float, b: np.ndarray | float) -> np.ndarray:
    """Natural log of C(a, b) for non-negative b <= a, vectorized."""
    return gammaln(a + 1.0) - gammaln(b + 1.0) - gammaln(a - b + 1.0)


def p_fixed_log10(n: int, r: int) -> LogMagnitude:
    """Same union bound as p_fixed_exact but summed in log space with
    log-gamma binomials, for column counts where exact rationals are
    impractically slow."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    log_denom = 2.0 * _log_comb(float(n), float(r))

    lo = max(0, 2 * r - n)
    hi1 = min(r, n - r)
    if lo <= hi1:
        u = np.arange(lo, hi1 + 1, dtype=float)
        log_phi = (
            _log_comb(float(r), u)
            + _log_comb(float(n - r), r - u)
            + _log_comb(n - u, float(r))
            - log_denom
        )
        log_s1 = float(logsumexp(log_phi))
    else:
        log_s1 = -math.inf

    u = np.arange(lo, r + 1, dtype=float)
    log_psi = (
        _log_comb(float(r), u)
        + _log_comb(float(n - r), r - u)
        + _log_comb(n - u, float(n - r))
        - log_denom
    )
    log_s2 = float(logsumexp(log_psi))

    log10_p = _log10_sum([log_s1 / _LN10, math.log10(3.0) + log_s2 / _LN10])
    return LogMagnitude.from_log10(log10_p)


def fixed_deficiency_prob(n: int, r: int) -> LogMagnitude:
    """Union bound for the fixed-weight model, choosing exact rational
    summation up to EXACT_N_LIMIT columns and log space beyond."""
    if n <= EXACT_N_LIMIT:
        return LogMagnitude.from_fraction(p_fixed_exact(n, r))
    return p_fixed_log10(n, r)


# ---------------------------------------------------------------------------
# Ratio-test quadratics locating the dominant terms of the two sums


@dataclass(frozen=True)
class QuadraticRoots:
    """Real roots of an integer-coefficient quadratic a u^2 + b u + c,
    computed from the exact discriminant so that huge coefficients do
    not lose the leading digits.  lower <= upper.
    """

    lower: float
    upper: float
    coefficients: tuple[int, int, int]

    @classmethod
    def solve(cls, a: int, b: int, c: int) -> "QuadraticRoots":
        if a == 0:
            raise ValueError("leading coefficient must be non-zero")
        disc = b * b - 4 * a * c
        if disc < 0:
            raise ValueError(
                f"negative discriminant {disc}: no real extremum crossing"
            )
        # Integer square root of the discriminant scaled by 10^40 gives
        # sqrt(disc) with 20 guaranteed decimals at any coefficient size.
        sqrt_disc = Fraction(isqrt(disc * 10**40), 10**20)
        r1 = (-b - sqrt_disc) / (2 * a)
        r2 = (-b + sqrt_disc) / (2 * a)
        return cls(lower=float(r1), upper=float(r2), coefficients=(a, b, c))


def phi_ratio_roots(n: int, r: int) -> QuadraticRoots:
    """Roots of the quadratic governing phi_term(u+1)/phi_term(u) = 1.

    Between the roots consecutive terms grow, so the largest phi term
    sits near the upper root; the discriminant is the quartic
    gamma(n, r) = b^2 - 4 a c with

        a = n - r + 2
        b = r^2 - 2r - n^2 - n + 1
        c = n r^2 - r^3 - n^2 + 2 n r - n
    """
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    a = n - r + 2
    b = r * r - 2 * r - n * n - n + 1
    c = n * r * r - r**3 - n * n + 2 * n * r - n
    return QuadraticRoots.solve(a, b, c)


def psi_ratio_roots(n: int, r: int) -> QuadraticRoots:
    """Roots of the quadratic governing psi_term(u+1)/psi_term(u) = 1,
    with coefficients

        a = r + 2
        b = -3 r^2 - n^2 + 2 r n - n - 2 r + 1
        c = r^3 - n^2 + 2 r n - n
    """
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    a = r + 2
    b = -3 * r * r - n * n + 2 * r * n - n - 2 * r + 1
    c = r**3 - n * n + 2 * r * n - n
    return QuadraticRoots.solve(a, b, c)


# ---------------------------------------------------------------------------
# Asymptotic profile of the fixed-weight sums at density alpha = r / n


def _pow_self(x: float) -> float:
    """x^x with the 0^0 = 1 convention.  Tiny negative x (rounding noise
    from subtractive cancellation at domain boundaries) is clamped to 0;
    genuinely negative x is a caller bug.
    """
    if x < 0.0:
        if x > -1e-12:
            return 1.0
        raise ValueError(f"negative base {x} in x^x")
    if x == 0.0:
        return 1.0
    return x**x


def _log_pow_self(x: float) -> float:
    """ln(x^x) = x ln x with the same clamping as _pow_self."""
    if x < 0.0:
        if x > -1e-12:
            return 0.0
        raise ValueError(f"negative base {x} in x ln x")
    if x == 0.0:
        return 0.0
    return x * math.log(x)


@dataclass(frozen=True)
class AsymptoticProfile:
    """Large-n behaviour of the fixed-weight sums at density alpha.

    e_coeff and f_coeff are the leading (n^4 and n^3) coefficients of
    the phi discriminant at r = alpha n; beta and kappa locate (as
    fractions of n) the dominant terms of the two sums; xi and theta
    are the per-column decay bases of those sums, so sigma1 ~ xi^n and
    sigma2 ~ theta^n up to polynomial factors; mu is the base of the
    larger sum, the one that controls the row bound.  beta and xi only
    exist for alpha <= 2/3 (sigma1 is exactly zero beyond), so above
    that they are None and mu = theta.
    """

    alpha: float
    e_coeff: float
    f_coeff: float
    beta: float | None
    kappa: float
    xi: float | None
    theta: float
    mu: float


def asymptotic_profile(alpha: float) -> AsymptoticProfile:
    """Evaluate the profile at a density alpha in (0, 1]."""
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha}")
    a = float(alpha)

    # The quartic 1 - 3a^4 + 8a^3 - 6a^2 factors as (1-a)^3 (1+3a);
    # the factored form avoids catastrophic cancellation near a = 1.
    e_coeff = (1.0 - a) ** 3 * (1.0 + 3.0 * a)
    f_coeff = -2.0 * a**2 + 4.0 * a**3 + 6.0 - 8.0 * a

    beta: float | None = None
    xi: float | None = None
    if a <= 2.0 / 3.0:
        sqrt_e = (1.0 - a) * math.sqrt((1.0 - a) * (1.0 + 3.0 * a))
        beta = (1.0 - a * a - sqrt_e) / (2.0 - 2.0 * a)
        # ln xi as a compensated sum of x ln x terms; exponentiating a
        # well-conditioned log is far more accurate than multiplying
        # seven powers directly.
        log_xi = math.fsum(
            [
                (3.0 - 3.0 * a) * math.log(1.0 - a),
                _log_pow_self(1.0 - beta),
                2.0 * a * math.log(a),
                -_log_pow_self(beta),
                -2.0 * _log_pow_self(a - beta),
                -_log_pow_self(1.0 - 2.0 * a + beta),
                -_log_pow_self(1.0 - a - beta),
            ]
        )
        xi = math.exp(log_xi)

    # 5a^4 - 12a^3 + 10a^2 - 4a + 1 = (1-a)^2 (5a^2 - 2a + 1), again
    # factored so the square root stays exact as a approaches 1.
    sqrt_rad = (1.0 - a) * math.sqrt(5.0 * a * a - 2.0 * a + 1.0)
    kappa = (3.0 * a * a + 1.0 - 2.0 * a - sqrt_rad) / (2.0 * a)
    log_theta = math.fsum(
        [
            3.0 * a * math.log(a),
            (2.0 - 2.0 * a) * math.log(1.0 - a) if a < 1.0 else 0.0,
            _log_pow_self(1.0 - kappa),
            -_log_pow_self(kappa),
            -3.0 * _log_pow_self(a - kappa),
            -_log_pow_self(1.0 - 2.0 * a + kappa),
        ]
    )
    theta = math.exp(log_theta)

    mu = xi if (a <= 0.5 and xi is not None) else theta
    return AsymptoticProfile(
        alpha=a,
        e_coeff=e_coeff,
        f_coeff=f_coeff,
        beta=beta,
        kappa=kappa,
        xi=xi,
        theta=theta,
        mu=mu,
    )


def nu(alpha: Fraction | float, n: int, mode: str = "asymptotic") -> LogMagnitude:
    """Fixed-weight row bound at density alpha.

    mode "asymptotic": n^(-1/4) * mu(alpha)^(-n/2), the closed form with
    the dominant-sum decay base and unit leading constant; valid for
    large n and the form used for the reference tables.

    mode "exact-sum": sqrt(2 / (3 e)) * p^(-1/2) with p the exact union
    bound (clamped at 1), requiring alpha * n to be an integer weight.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if mode == "asymptotic":
        a = float(alpha)
        profile = asymptotic_profile(a)
        log10_m = -0.25 * math.log10(n) - 0.5 * n * math.log10(profile.mu)
        return LogMagnitude.from_log10(log10_m)
    if mode == "exact-sum":
        frac = Fraction(alpha) if not isinstance(alpha, Fraction) else alpha
        r_exact = frac * n
        if r_exact.denominator != 1:
            raise ValueError(
                f"alpha={alpha} times n={n} is not an integer row weight"
            )
        p = fixed_deficiency_prob(n, int(r_exact))
        if p.log10 > 0.0:
            # Union bound above 1 carries no information; clamping keeps
            # the inverted bound non-trivial-free (floors to zero rows).
            p = LogMagnitude.from_log10(0.0)
        return lll_max_rows(p)
    raise ValueError(f"unknown mode {mode!r}")


def bound_for_params(params: ModelParams, mode: str = "asymptotic") -> LogMagnitude:
    """Dispatch to the row bound matching the model of params."""
    if params.model is Model.INDEPENDENT:
        return zeta(float(params.alpha), params.n)
    return nu(params.alpha, params.n, mode=mode)
