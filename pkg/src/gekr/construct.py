"""Randomized construction of GEKR arrays.

Reproducibility rule: every row draw comes from its own PCG64 stream,
keyed as SeedSequence(seed, spawn_key=(row_index, epoch)).  A row's
epoch starts at 0 and increments each time that row is resampled (or,
for rejection sampling, each time the whole array is redrawn; greedy
extension uses the attempt number).  Identical (seed, n, weight,
strategy) therefore reproduce identical arrays bit for bit, regardless
of how many triples the verifier inspected along the way.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import ArrayMatrix, Model, ModelParams
from .verify import first_deficient_triple

#: Progress lines go to stderr every this many resampling steps.
PROGRESS_EVERY = 10_000


class Strategy(Enum):
    REJECTION = "rejection"
    MOSER_TARDOS = "moser-tardos"
    GREEDY = "greedy"


@dataclass(frozen=True)
class ConstructionConfig:
    params: ModelParams
    m: int
    seed: int
    strategy: Strategy = Strategy.MOSER_TARDOS
    max_resamples: int = 1_000_000
    attempts_per_row: int = 1_000

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"row count must be non-negative, got {self.m}")
        if self.max_resamples < 1:
            raise ValueError("max_resamples must be positive")
        if self.attempts_per_row < 1:
            raise ValueError("attempts_per_row must be positive")


@dataclass(frozen=True)
class ConstructionResult:
    """array is None exactly when the strategy gave up; resamples_used
    counts resampling steps (deficient triples fixed, full redraws, or
    rejected greedy candidates, depending on the strategy)."""

    array: ArrayMatrix | None
    resamples_used: int

    @property
    def success(self) -> bool:
        return self.array is not None


def _row_rng(seed: int, row_index: int, epoch: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(row_index, epoch))
    return np.random.Generator(np.random.PCG64(ss))


def _sample_row(params: ModelParams, rng: np.random.Generator) -> int:
    """One packed row from the model distribution."""
    n = params.n
    if params.model is Model.FIXED_WEIGHT:
        # Partial Fisher-Yates: after r swaps the prefix idx[:r] is a
        # uniform r-subset, using exactly r bounded integer draws.
        r = params.r
        assert r is not None
        idx = list(range(n))
        row = 0
        for j in range(r):
            t = int(rng.integers(j, n))
            idx[j], idx[t] = idx[t], idx[j]
            row |= 1 << idx[j]
        return row
    u = rng.random(n)
    row = 0
    threshold = float(params.alpha)
    for j in range(n):
        if u[j] < threshold:
            row |= 1 << j
    return row


def _declared_weight(params: ModelParams) -> int | None:
    return params.r if params.model is Model.FIXED_WEIGHT else None


def sample_rows(params: ModelParams, m: int, seed: int, epoch: int = 0) -> ArrayMatrix:
    """Draw m rows at the given epoch (fresh arrays use epoch 0)."""
    rows = tuple(
        _sample_row(params, _row_rng(seed, i, epoch)) for i in range(m)
    )
    return ArrayMatrix(n=params.n, rows=rows, declared_weight=_declared_weight(params))


def _progress(step: int) -> None:
    if step and step % PROGRESS_EVERY == 0:
        print(f"resamples: {step}", file=sys.stderr, flush=True)


def moser_tardos(config: ConstructionConfig) -> ConstructionResult:
    """Resample the three rows of the first deficient triple until no
    triple is deficient or the step budget runs out.  The local lemma's
    constructive form guarantees fast convergence whenever m is at or
    below the lll_max_rows bound for the model.
    """
    params = config.params
    rows = [
        _sample_row(params, _row_rng(config.seed, i, 0)) for i in range(config.m)
    ]
    epochs = [0] * config.m
    steps = 0
    while True:
        bad = first_deficient_triple(rows, params.n)
        if bad is None:
            array = ArrayMatrix(
                n=params.n, rows=tuple(rows), declared_weight=_declared_weight(params)
            )
            return ConstructionResult(array=array, resamples_used=steps)
        if steps >= config.max_resamples:
            return ConstructionResult(array=None, resamples_used=steps)
        for idx in bad:
            epochs[idx] += 1
            rows[idx] = _sample_row(params, _row_rng(config.seed, idx, epochs[idx]))
        steps += 1
        _progress(steps)


def rejection(config: ConstructionConfig) -> ConstructionResult:
    """Redraw the whole array until deficiency-free.  resamples_used is
    the number of full redraws after the initial draw."""
    params = config.params
    for attempt in range(config.max_resamples + 1):
        array = sample_rows(params, config.m, config.seed, epoch=attempt)
        if first_deficient_triple(array.rows, params.n) is None:
            return ConstructionResult(array=array, resamples_used=attempt)
        _progress(attempt + 1)
    return ConstructionResult(array=None, resamples_used=config.max_resamples)


def greedy_extend(
    params: ModelParams,
    seed: int,
    attempts_per_row: int = 1_000,
    max_rows: int | None = None,
) -> ArrayMatrix:
    """Grow an array row by row, keeping a candidate only if it creates
    no GEKR-deficient triple with any existing pair.  Stops after
    attempts_per_row consecutive rejections (or at max_rows).  The
    result always passes is_gekr by construction.
    """
    n = params.n
    full = (1 << n) - 1
    rows: list[int] = []
    # For each accepted pair (a, b): masks of columns reading 11, 10, 01.
    pair_masks: list[tuple[int, int, int]] = []

    while max_rows is None or len(rows) < max_rows:
        t = len(rows)
        accepted = None
        for attempt in range(attempts_per_row):
            cand = _sample_row(params, _row_rng(seed, t, attempt))
            not_c = cand ^ full
            ok = True
            for both, only_a, only_b in pair_masks:
                if (
                    not both & cand
                    or not both & not_c
                    or not only_a & cand
                    or not only_b & cand
                ):
                    ok = False
                    break
            if ok:
                accepted = cand
                break
        if accepted is None:
            break
        for prev in rows:
            pair_masks.append(
                (prev & accepted, prev & (accepted ^ full), (prev ^ full) & accepted)
            )
        rows.append(accepted)

    return ArrayMatrix(
        n=n, rows=tuple(rows), declared_weight=_declared_weight(params)
    )


def run(config: ConstructionConfig) -> ConstructionResult:
    """Dispatch on strategy.  Greedy always succeeds (possibly with few
    rows), ignores max_resamples, and reports zero resampling steps."""
    if config.strategy is Strategy.MOSER_TARDOS:
        return moser_tardos(config)
    if config.strategy is Strategy.REJECTION:
        return rejection(config)
    array = greedy_extend(
        config.params,
        config.seed,
        attempts_per_row=config.attempts_per_row,
        max_rows=config.m if config.m > 0 else None,
    )
    return ConstructionResult(array=array, resamples_used=0)
