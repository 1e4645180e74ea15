"""Correlated normal and gamma pairs: samplers, exact moments and Monte Carlo checks.

Floating point lives only here.  Exact moments are computed symbolically
(Fractions and :class:`MultiPoly`) and converted to float only when compared
with an estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

import numpy as np

from .exactnum import rising_factorial
from .orthopoly import GAMMA, NORMAL, eta_conditional, mixed_moment_term
from .polyalg import MultiPoly, rising, var

Z_GATE = 5.0
DEFAULT_CHUNK = 1 << 18


def _rng(seed: int, *keys: int) -> np.random.Generator:
    # (seed, stream) keyed through SeedSequence so that distinct streams never
    # collide the way plain seed ^ stream does across neighbouring seeds
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), *keys]))


# -- samplers ---------------------------------------------------------------

@dataclass(frozen=True)
class GaussianPairSampler:
    rho: float
    rng_seed: int = 0

    def __post_init__(self):
        if not -1 < self.rho < 1:
            raise ValueError("normal pair requires rho in (-1,1)")

    case = NORMAL

    def draw(self, size: int, stream: int = 0) -> tuple[np.ndarray, np.ndarray]:
        rng = _rng(self.rng_seed, stream)
        z1 = rng.standard_normal(size)
        z2 = rng.standard_normal(size)
        return z1, self.rho * z1 + math.sqrt(1 - self.rho**2) * z2


@dataclass(frozen=True)
class GammaPairSampler:
    """Kibble bivariate gamma via its Poisson mixture.

    ``cond_scale`` overrides the scale (1 - rho) of Y given the mixing count;
    any other value breaks the conditional mean and exists for negative tests.
    """

    beta: float
    rho: float
    rng_seed: int = 0
    cond_scale: float | None = None

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError("gamma requires beta > 0")
        if not 0 <= self.rho < 1:
            raise ValueError("gamma requires rho in [0,1)")

    case = GAMMA

    def draw(self, size: int, stream: int = 0) -> tuple[np.ndarray, np.ndarray]:
        rng = _rng(self.rng_seed, stream)
        x = rng.gamma(self.beta, 1.0, size)
        scale = 1 - self.rho if self.cond_scale is None else self.cond_scale
        if self.rho == 0:
            counts = np.zeros(size)
        else:
            counts = rng.poisson(self.rho * x / (1 - self.rho))
        y = scale * rng.gamma(self.beta + counts, 1.0)
        return x, y


Sampler = GaussianPairSampler | GammaPairSampler


def sample_normal_pair(s: GaussianPairSampler, size: int | None = None, stream: int = 0):
    """One (X, Y) pair, or two arrays of length ``size``."""
    x, y = s.draw(1 if size is None else size, stream)
    return (float(x[0]), float(y[0])) if size is None else (x, y)


def sample_gamma_pair(s: GammaPairSampler, size: int | None = None, stream: int = 0):
    x, y = s.draw(1 if size is None else size, stream)
    return (float(x[0]), float(y[0])) if size is None else (x, y)


# -- statistics -------------------------------------------------------------

@dataclass(frozen=True)
class Statistic:
    """(X - Y)^n when ``kind == "diff"``, X^m Y^l when ``kind == "mixed"``."""

    kind: str
    n: int = 0
    m: int = 0
    l: int = 0

    @classmethod
    def diff(cls, n: int) -> Statistic:
        return cls("diff", n=n)

    @classmethod
    def mixed(cls, m: int, l: int) -> Statistic:
        return cls("mixed", m=m, l=l)

    @property
    def label(self) -> str:
        if self.kind == "diff":
            return f"(X-Y)^{self.n}"
        if (self.m, self.l) == (1, 1):
            return "XY"
        return f"X^{self.m}Y^{self.l}"

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.kind == "diff":
            return (x - y) ** self.n
        return x**self.m * y**self.l

    def exact(self, case: str, rho, beta=None) -> Fraction:
        if self.kind == "diff":
            if case == NORMAL:
                return Fraction(closed_moment_normal(self.n, rho))
            return Fraction(closed_moment_gamma(self.n, beta, rho))
        return Fraction(mixed_moment(case, self.m, self.l, rho, beta))


# -- estimates --------------------------------------------------------------

@dataclass(frozen=True)
class MomentEstimate:
    mean: float
    std_error: float
    n_samples: int

    def __post_init__(self):
        if self.n_samples < 2:
            raise ValueError("an estimate needs at least two samples")

    @property
    def _m2(self) -> float:
        # sum of squared deviations, recovered from the standard error
        return self.std_error**2 * self.n_samples * (self.n_samples - 1)

    @classmethod
    def from_chunk(cls, values: np.ndarray) -> MomentEstimate:
        n = values.size
        return cls(float(values.mean()), float(values.std(ddof=1) / math.sqrt(n)), n)

    def merge(self, other: MomentEstimate) -> MomentEstimate:
        """Count-weighted pooling of two independent estimates."""
        n = self.n_samples + other.n_samples
        delta = other.mean - self.mean
        mean = self.mean + delta * other.n_samples / n
        m2 = self._m2 + other._m2 + delta**2 * self.n_samples * other.n_samples / n
        return MomentEstimate(mean, math.sqrt(m2 / (n - 1) / n), n)


def _chunks(n_samples: int, chunk: int) -> list[int]:
    sizes = [chunk] * (n_samples // chunk)
    if n_samples % chunk:
        sizes.append(n_samples % chunk)
    # a trailing single sample cannot carry a variance; fold it into its neighbour
    if len(sizes) > 1 and sizes[-1] < 2:
        sizes[-2] += sizes.pop()
    return sizes


def estimate_moments(sampler: Sampler, statistics: Sequence[Statistic], n_samples: int,
                     chunk: int = DEFAULT_CHUNK) -> list[MomentEstimate]:
    """Estimate several statistics from the same stream of draws.

    Chunk ``i`` is drawn from stream ``i`` of the sampler seed, so the result
    depends only on (sampler, n_samples, chunk).
    """
    if n_samples < 1000:
        raise ValueError("n_samples must be at least 1000")
    pooled: list[MomentEstimate | None] = [None] * len(statistics)
    for stream, size in enumerate(_chunks(n_samples, chunk)):
        x, y = sampler.draw(size, stream)
        for i, stat in enumerate(statistics):
            est = MomentEstimate.from_chunk(stat(x, y))
            pooled[i] = est if pooled[i] is None else pooled[i].merge(est)
    return pooled


def estimate_moment(sampler: Sampler, statistic: Statistic, n_samples: int,
                    chunk: int = DEFAULT_CHUNK) -> MomentEstimate:
    return estimate_moments(sampler, [statistic], n_samples, chunk)[0]


def z_compare(est: MomentEstimate, exact) -> float:
    if not est.std_error > 0:
        raise ValueError("z-score needs a positive standard error")
    return (est.mean - float(exact)) / est.std_error


# -- exact moments ----------------------------------------------------------

def _half_factor(n: int) -> int:
    return factorial(n) // factorial(n // 2)


def closed_moment_normal(n: int, rho=None):
    """E(X-Y)^n for the standard normal pair; a polynomial in rho when rho is None."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2:
        return MultiPoly() if rho is None else Fraction(0)
    if rho is None:
        return (1 - var("rho")) ** (n // 2) * _half_factor(n)
    return _half_factor(n) * (1 - Fraction(rho)) ** (n // 2)


def closed_moment_gamma(n: int, beta=None, rho=None):
    """E(X-Y)^n for the bivariate gamma pair; symbolic in any argument left as None."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    h = n // 2
    poly = MultiPoly() if n % 2 else rising("beta", h) * (1 - var("rho")) ** h * _half_factor(n)
    return _maybe_evaluate(poly, rho=rho, beta=beta)


def gamma_raw_moment(n: int, beta=None):
    """E X^n = (beta)^(n) for X ~ Gamma(beta)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if beta is None:
        return rising("beta", n)
    return rising_factorial(Fraction(beta), n)


def _maybe_evaluate(poly: MultiPoly, **point):
    point = {k: Fraction(v) for k, v in point.items() if v is not None}
    if not point:
        return poly
    out = poly.substitute({k: MultiPoly.const(v) for k, v in point.items()})
    return Fraction(out.constant_term()) if not any(out.degrees()) else out


def mixed_moment(case: str, m: int, l: int, rho=None, beta=None):
    """E X^m Y^l = sum_j rho^j H_{m,j} H_{l,j}, symbolic in arguments left as None."""
    if m < 0 or l < 0:
        raise ValueError("exponents must be nonnegative")
    terms = []
    for j in range(min(m, l) + 1):
        t = mixed_moment_term(case, m, l, j)
        if not isinstance(t, MultiPoly):
            t = MultiPoly.const(t)
        terms.append(t * var("rho", j))
    return _maybe_evaluate(MultiPoly.sum_of(terms), rho=rho, beta=beta)


def diff_moment_via_mixed(case: str, n: int) -> MultiPoly:
    """sum_m (-1)^m C(n,m) E X^(n-m) Y^m, the binomial expansion of E(X-Y)^n."""
    return MultiPoly.sum_of(
        mixed_moment(case, n - m, m).scale((-1) ** m * comb(n, m)) for m in range(n + 1)
    )


def isserlis_moment(m: int, l: int) -> MultiPoly:
    """E X^m Y^l for a standard normal pair by brute force over perfect matchings.

    Each matching of the m copies of X and l copies of Y contributes rho to the
    power of the number of X-Y edges.
    """
    labels = (0,) * m + (1,) * l
    counts: dict[int, int] = {}

    def walk(rest: tuple[int, ...], cross: int):
        if not rest:
            counts[cross] = counts.get(cross, 0) + 1
            return
        first, tail = rest[0], rest[1:]
        for i, other in enumerate(tail):
            walk(tail[:i] + tail[i + 1:], cross + (first != other))

    if (m + l) % 2 == 0:
        walk(labels, 0)
    return MultiPoly.sum_of(var("rho", c).scale(n) for c, n in counts.items())


def integrate_gamma(poly: MultiPoly, name: str = "y") -> MultiPoly:
    """Replace each power y^k by E Y^k = (beta)^(k) for Y ~ Gamma(beta)."""
    out = []
    for k in range(poly.degree(name) + 1):
        c = poly.coefficient_of(name, k)
        if not c.is_zero():
            out.append(c * rising("beta", k))
    return MultiPoly.sum_of(out)


def conditional_bridge(j: int) -> bool:
    """Averaging E(X^j | Y) over the gamma marginal of Y returns (beta)^(j)."""
    return integrate_gamma(eta_conditional(j)) == rising("beta", j)


# -- conditional mean trend ---------------------------------------------------

@dataclass(frozen=True)
class TrendBin:
    x_mid: float
    mean_residual: float
    std_error: float
    z: float


@dataclass(frozen=True)
class TrendCheck:
    bins: tuple[TrendBin, ...]
    z_gate: float

    @property
    def max_abs_z(self) -> float:
        return max(abs(b.z) for b in self.bins)

    @property
    def passed(self) -> bool:
        return self.max_abs_z <= self.z_gate


def conditional_mean_trend(sampler: GammaPairSampler, n_samples: int = 10**6, n_bins: int = 20,
                           z_gate: float = Z_GATE) -> TrendCheck:
    """Bin on X and test E(Y | X) = beta(1-rho) + rho X in every bin."""
    x, y = sampler.draw(n_samples)
    resid = y - (sampler.beta * (1 - sampler.rho) + sampler.rho * x)
    edges = np.quantile(x, np.linspace(0, 1, n_bins + 1))
    idx = np.clip(np.searchsorted(edges, x, side="right") - 1, 0, n_bins - 1)
    bins = []
    for b in range(n_bins):
        r = resid[idx == b]
        if r.size < 2:
            continue
        se = float(r.std(ddof=1) / math.sqrt(r.size))
        mean = float(r.mean())
        bins.append(TrendBin(float(np.median(x[idx == b])), mean, se, mean / se if se > 0 else 0.0))
    return TrendCheck(tuple(bins), z_gate)


# -- Monte Carlo cross-validation ----------------------------------------------

DEFAULT_STATISTICS = (Statistic.diff(2), Statistic.diff(4), Statistic.diff(6), Statistic.mixed(1, 1))
NORMAL_RHOS = (-0.5, 0.0, 0.3, 0.9)
GAMMA_RHOS = (0.0, 0.3, 0.7)
GAMMA_BETAS = (0.5, 1.0, 2.5)


@dataclass
class MCCell:
    case: str
    statistic: str
    rho: float
    beta: float | None
    estimate: MomentEstimate
    exact: Fraction
    z: float
    attempts: int
    z_gate: float = Z_GATE

    @property
    def passed(self) -> bool:
        return abs(self.z) <= self.z_gate

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "statistic": self.statistic,
            "params": {"rho": self.rho} if self.beta is None else {"rho": self.rho, "beta": self.beta},
            "estimate": self.estimate.mean,
            "std_error": self.estimate.std_error,
            "n_samples": self.estimate.n_samples,
            "exact": str(self.exact),
            "z": self.z,
            "attempts": self.attempts,
            "status": "pass" if self.passed else "fail",
        }


def retry_seed(seed: int, attempt: int) -> int:
    if attempt == 0:
        return seed
    return int(np.random.SeedSequence([seed & (2**64 - 1), 0x5EED, attempt]).generate_state(1, np.uint64)[0])


def make_sampler(case: str, rho: float, beta: float | None = None, seed: int = 0) -> Sampler:
    if case == NORMAL:
        return GaussianPairSampler(rho, seed)
    if case == GAMMA:
        if beta is None:
            raise ValueError("gamma case needs beta")
        return GammaPairSampler(beta, rho, seed)
    raise ValueError(f"unknown case {case!r}")


def _exact_point(x: float) -> Fraction:
    # the decimal the user typed, not its binary float expansion
    return Fraction(repr(x))


def mc_point(case: str, rho: float, beta: float | None, statistics: Sequence[Statistic],
             n_samples: int, seed: int, retries: int = 1, z_gate: float = Z_GATE,
             chunk: int = DEFAULT_CHUNK) -> list[MCCell]:
    """All statistics at one parameter point; failing cells are redrawn under a fresh seed."""
    sampler = make_sampler(case, rho, beta, seed)
    r_exact = _exact_point(rho)
    b_exact = None if beta is None else _exact_point(beta)
    exact = [s.exact(case, r_exact, b_exact) for s in statistics]
    ests = estimate_moments(sampler, statistics, n_samples, chunk)
    cells = [MCCell(case, s.label, rho, beta, e, x, z_compare(e, x), 1, z_gate)
             for s, e, x in zip(statistics, ests, exact)]
    for attempt in range(1, retries + 1):
        bad = [i for i, c in enumerate(cells) if not c.passed]
        if not bad:
            break
        redo = replace(sampler, rng_seed=retry_seed(seed, attempt))
        fresh = estimate_moments(redo, [statistics[i] for i in bad], n_samples, chunk)
        for i, e in zip(bad, fresh):
            c = cells[i]
            cells[i] = replace(c, estimate=e, z=z_compare(e, c.exact), attempts=attempt + 1)
    return cells


def default_points(case: str | None = None) -> list[tuple[str, float, float | None]]:
    pts: list[tuple[str, float, float | None]] = []
    if case in (None, NORMAL):
        pts += [(NORMAL, r, None) for r in NORMAL_RHOS]
    if case in (None, GAMMA):
        pts += [(GAMMA, r, b) for r in GAMMA_RHOS for b in GAMMA_BETAS]
    return pts


def mc_check(points: Iterable[tuple[str, float, float | None]], n_samples: int, seed: int,
             statistics: Sequence[Statistic] = DEFAULT_STATISTICS, retries: int = 1,
             z_gate: float = Z_GATE) -> list[MCCell]:
    out: list[MCCell] = []
    for i, (case, rho, beta) in enumerate(points):
        # each parameter point gets its own seed so points are independent
        point_seed = int(np.random.SeedSequence([seed & (2**64 - 1), i]).generate_state(1, np.uint64)[0])
        out += mc_point(case, rho, beta, statistics, n_samples, point_seed, retries, z_gate)
    return out
