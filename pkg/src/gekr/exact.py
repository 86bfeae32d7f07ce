"""Small-case ground truth: brute-force enumeration and exhaustive
search.  Everything here is exponential in n and exists to validate the
formula-based modules on instances small enough to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import ArrayMatrix, Pattern

#: Column-count ceiling for the enumeration oracles.
MAX_ENUM_N = 8

#: Candidate-count ceiling for the exhaustive family search.
MAX_FAMILY_CANDIDATES = 4096


def _subset_masks(n: int, r: int) -> list[int]:
    """All weight-r rows over n columns, as packed ints in increasing
    numeric order.  Numeric order on masks is colexicographic order on
    the underlying column subsets."""
    masks = []
    for cols in combinations(range(n), r):
        mask = 0
        for c in cols:
            mask |= 1 << c
        masks.append(mask)
    masks.sort()
    return masks


def enumerate_missing_prob(n: int, r: int, pattern: Pattern) -> Fraction:
    """Exact probability that three independent uniform weight-r rows
    miss the given pattern, by enumerating ordered pairs (B, C) against
    a fixed first row A.

    Fixing A is sound because relabeling columns is a bijection of the
    sample space that maps any first row to any other while preserving
    which patterns a triple realizes.
    """
    if not 1 <= r <= n <= MAX_ENUM_N:
        raise ValueError(
            f"enumeration limited to 1 <= r <= n <= {MAX_ENUM_N}, got r={r}, n={n}"
        )
    if len(pattern) != 3 or any(b not in (0, 1) for b in pattern):
        raise ValueError(f"bad pattern {pattern!r}")
    full = (1 << n) - 1
    masks = _subset_masks(n, r)
    a = masks[0]
    sel_a = a if pattern[0] else a ^ full
    count = 0
    for b in masks:
        sel_b = b if pattern[1] else b ^ full
        ab = sel_a & sel_b
        for c in masks:
            sel_c = c if pattern[2] else c ^ full
            if not ab & sel_c:
                count += 1
    return Fraction(count, len(masks) ** 2)


def _triple_ok(a: int, b: int, c: int, full: int) -> bool:
    """True iff rows a, b, c realize all four GEKR patterns."""
    return bool(
        a & b & c
        and a & b & (c ^ full)
        and a & (b ^ full) & c
        and (a ^ full) & b & c
    )


@dataclass(frozen=True)
class MaxFamilyResult:
    """size and a witness family of that size; optimal is False when the
    search hit its node budget and the size is only a lower bound."""

    size: int
    witness: tuple[tuple[int, ...], ...]
    optimal: bool


def witness_matrix(n: int, witness: tuple[tuple[int, ...], ...]) -> ArrayMatrix:
    """Render a witness family as a binary array for re-verification."""
    rows = []
    for cols in witness:
        row = 0
        for c in cols:
            row |= 1 << c
        rows.append(row)
    weights = {len(cols) for cols in witness}
    declared = weights.pop() if len(weights) == 1 else None
    return ArrayMatrix(n=n, rows=tuple(rows), declared_weight=declared)


def max_family(n: int, k: int, node_limit: int = 5_000_000) -> MaxFamilyResult:
    """Largest family of weight-k rows over n columns in which every
    row triple realizes all four GEKR patterns, by depth-first
    branch and bound over candidates in colexicographic order.

    At each node the candidate list holds exactly the rows compatible
    with every pair already chosen, so the bound len(chosen) +
    len(candidates) is valid and filtering is incremental: extending by
    row S only needs the new pairs (A, S) re-checked.  Search order is
    deterministic, so results are reproducible run to run.

    Families of size <= 2 are vacuously valid (no triples), so the
    answer is at least min(2, C(n, k)).
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if comb(n, k) > MAX_FAMILY_CANDIDATES:
        raise ValueError(
            f"C({n}, {k}) = {comb(n, k)} candidates exceed the "
            f"{MAX_FAMILY_CANDIDATES} search ceiling"
        )
    if node_limit < 1:
        raise ValueError("node_limit must be positive")
    full = (1 << n) - 1
    masks = _subset_masks(n, k)

    best_size = min(2, len(masks))
    best_witness = masks[: best_size]
    nodes = 0
    budget_hit = False

    def dfs(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best_size, best_witness, nodes, budget_hit
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_witness = list(chosen)
        for pos, cand in enumerate(candidates):
            if len(chosen) + len(candidates) - pos <= best_size:
                return  # even taking every remaining candidate cannot win
            nodes += 1
            if nodes > node_limit:
                budget_hit = True
                return
            if len(chosen) >= 1:
                narrowed = [
                    c
                    for c in candidates[pos + 1 :]
                    if all(_triple_ok(prev, cand, c, full) for prev in chosen)
                ]
            else:
                narrowed = candidates[pos + 1 :]
            chosen.append(cand)
            dfs(chosen, narrowed)
            chosen.pop()
            if budget_hit:
                return

    dfs([], masks)

    witness = tuple(
        tuple(j for j in range(n) if (mask >> j) & 1) for mask in best_witness
    )
    return MaxFamilyResult(size=best_size, witness=witness, optimal=not budget_hit)
