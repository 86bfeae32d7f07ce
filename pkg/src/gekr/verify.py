"""Deficiency scanning: which row triples miss a required pattern.

The fast path works on packed row integers.  For a triple (x, y, z) and
pattern (a, b, c), the columns realizing the pattern are exactly the set
bits of  sel(x,a) & sel(y,b) & sel(z,c)  where sel(row, 1) = row and
sel(row, 0) = ~row masked to n columns.  A pattern is missing iff that
AND is zero, so one triple costs a handful of word operations instead
of a column loop.  Pair masks are hoisted out of the innermost loop.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Sequence

from .core import GEKR, ArrayMatrix, DeficiencyReport, Pattern, PatternSet, pack_row

_GEKR_KEY = tuple(sorted(GEKR.members))


def _as_packed(row: int | str | Sequence[int], n: int | None) -> tuple[int, int]:
    """Coerce a row given as packed int, bit string, or 0/1 sequence."""
    if isinstance(row, int):
        if n is None:
            raise ValueError("packed integer rows need an explicit column count")
        return row, n
    packed = pack_row(row)
    return packed, len(row)


def triple_coverage(
    row_a: int | str | Sequence[int],
    row_b: int | str | Sequence[int],
    row_c: int | str | Sequence[int],
    patterns: PatternSet = GEKR,
    n: int | None = None,
) -> frozenset[Pattern]:
    """Patterns of the set that the ordered triple fails to realize."""
    a, na = _as_packed(row_a, n)
    b, nb = _as_packed(row_b, n)
    c, nc = _as_packed(row_c, n)
    if not na == nb == nc:
        raise ValueError(f"row lengths differ: {na}, {nb}, {nc}")
    full = (1 << na) - 1
    missing = set()
    for pat in patterns:
        x = a if pat[0] else a ^ full
        y = b if pat[1] else b ^ full
        z = c if pat[2] else c ^ full
        if not x & y & z:
            missing.add(pat)
    return frozenset(missing)


def _triple_rank(m: int, i: int, j: int, l: int) -> int:
    """Zero-based position of (i, j, l) in the lexicographic listing of
    the increasing triples from range(m).  Used so that total_checked is
    identical whether the scan ran on one worker or many."""
    return comb(m, 3) - comb(m - i, 3) + comb(m - i - 1, 2) - comb(m - j, 2) + (l - j - 1)


def _scan_gekr(
    rows: Sequence[int],
    full: int,
    i_start: int,
    i_stop: int,
    stop_early: bool,
) -> list[tuple[int, int, int, frozenset[Pattern]]]:
    """GEKR-specialized scan of triples with first index in [i_start, i_stop)."""
    m = len(rows)
    negs = [row ^ full for row in rows]
    hits: list[tuple[int, int, int, frozenset[Pattern]]] = []
    for i in range(i_start, i_stop):
        a, not_a = rows[i], negs[i]
        for j in range(i + 1, m - 1):
            b, not_b = rows[j], negs[j]
            both = a & b
            only_a = a & not_b
            only_b = not_a & b
            for l in range(j + 1, m):
                c = rows[l]
                missing = []
                if not both & c:
                    missing.append((1, 1, 1))
                if not both & negs[l]:
                    missing.append((1, 1, 0))
                if not only_a & c:
                    missing.append((1, 0, 1))
                if not only_b & c:
                    missing.append((0, 1, 1))
                if missing:
                    hits.append((i, j, l, frozenset(missing)))
                    if stop_early:
                        return hits
    return hits


def _scan_general(
    rows: Sequence[int],
    full: int,
    patterns_key: tuple[Pattern, ...],
    i_start: int,
    i_stop: int,
    stop_early: bool,
) -> list[tuple[int, int, int, frozenset[Pattern]]]:
    """Pattern-set-agnostic scan; same structure, masks built per pattern."""
    m = len(rows)
    negs = [row ^ full for row in rows]
    hits: list[tuple[int, int, int, frozenset[Pattern]]] = []
    for i in range(i_start, i_stop):
        sel_a = (negs[i], rows[i])
        for j in range(i + 1, m - 1):
            sel_b = (negs[j], rows[j])
            pair_masks = [(sel_a[p[0]] & sel_b[p[1]], p) for p in patterns_key]
            for l in range(j + 1, m):
                sel_c = (negs[l], rows[l])
                missing = [p for mask, p in pair_masks if not mask & sel_c[p[2]]]
                if missing:
                    hits.append((i, j, l, frozenset(missing)))
                    if stop_early:
                        return hits
    return hits


def _scan(
    rows: Sequence[int],
    full: int,
    patterns_key: tuple[Pattern, ...],
    i_start: int,
    i_stop: int,
    stop_early: bool,
) -> list[tuple[int, int, int, frozenset[Pattern]]]:
    if patterns_key == _GEKR_KEY:
        return _scan_gekr(rows, full, i_start, i_stop, stop_early)
    return _scan_general(rows, full, patterns_key, i_start, i_stop, stop_early)


def _balanced_splits(m: int, workers: int) -> list[tuple[int, int]]:
    """Partition the first-index range so chunks hold similar numbers of
    triples; index i owns comb(m - i - 1, 2) of them."""
    total = comb(m, 3)
    target = total / workers
    splits: list[tuple[int, int]] = []
    start, acc = 0, 0.0
    for i in range(m - 2):
        acc += comb(m - i - 1, 2)
        if acc >= target and len(splits) < workers - 1:
            splits.append((start, i + 1))
            start, acc = i + 1, 0.0
    splits.append((start, max(m - 2, 0)))
    return [s for s in splits if s[0] < s[1]]


def find_deficient(
    array: ArrayMatrix,
    patterns: PatternSet = GEKR,
    stop_early: bool = False,
    workers: int | None = None,
) -> DeficiencyReport:
    """Scan all increasing row triples of the array for deficiency.

    Results are in lexicographic (i, j, l) order regardless of worker
    count.  With stop_early the scan returns after the first deficient
    triple; total_checked is then the number of triples at or before it
    in lexicographic order, computed by rank so it does not depend on
    how the work was split.
    """
    m = array.m
    full = (1 << array.n) - 1
    patterns_key = tuple(sorted(patterns.members))
    total = comb(m, 3)

    if workers is not None and workers > 1 and m >= 3:
        chunks = _balanced_splits(m, workers)
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            futures = [
                pool.submit(_scan, array.rows, full, patterns_key, a, b, stop_early)
                for a, b in chunks
            ]
            results = [f.result() for f in futures]
        if stop_early:
            hits = next((r[:1] for r in results if r), [])
        else:
            hits = list(itertools.chain.from_iterable(results))
    else:
        hits = _scan(array.rows, full, patterns_key, 0, max(m - 2, 0), stop_early)

    if stop_early and hits:
        i, j, l, _ = hits[0]
        checked = _triple_rank(m, i, j, l) + 1
    else:
        checked = total
    return DeficiencyReport(
        deficient=tuple((i, j, l) for i, j, l, _ in hits),
        missing=tuple(miss for _, _, _, miss in hits),
        total_checked=checked,
    )


def find_deficient_naive(
    array: ArrayMatrix, patterns: PatternSet = GEKR
) -> DeficiencyReport:
    """Reference implementation: expand rows to 0/1 tuples and collect
    the realized pattern of every column of every triple.  No bitwise
    shortcuts; exists to cross-check the fast scan.
    """
    bits = [array.row_bits(i) for i in range(array.m)]
    wanted = set(patterns.members)
    deficient = []
    missing = []
    for i, j, l in itertools.combinations(range(array.m), 3):
        seen = {(bits[i][col], bits[j][col], bits[l][col]) for col in range(array.n)}
        gap = wanted - seen
        if gap:
            deficient.append((i, j, l))
            missing.append(frozenset(gap))
    return DeficiencyReport(
        deficient=tuple(deficient),
        missing=tuple(missing),
        total_checked=comb(array.m, 3),
    )


def first_deficient_triple(
    rows: Sequence[int], n: int, patterns: PatternSet = GEKR
) -> tuple[int, int, int] | None:
    """Lexicographically first deficient triple of packed rows, or None.
    Low-overhead entry point for resampling loops that keep plain lists.
    """
    full = (1 << n) - 1
    hits = _scan(rows, full, tuple(sorted(patterns.members)), 0, max(len(rows) - 2, 0), True)
    return hits[0][:3] if hits else None


def is_gekr(array: ArrayMatrix) -> bool:
    """True iff no row triple of the array is GEKR-deficient."""
    return first_deficient_triple(array.rows, array.n) is None
