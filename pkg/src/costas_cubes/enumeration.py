"""Exhaustive generation of Costas arrays and Costas cubes.

Arrays are generated by column-by-column backtracking with incremental
difference-vector pruning.  Cubes of order n are generated by the
pair-join: for every ordered pair (A, B) of Costas arrays of order n,
build the unique permutation cube with those projections and retain it
when Projection C is again a Costas array; class counts come from
canonical forms of the retained cubes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import CostasCube, Permutation, is_costas
from .symmetry import PLANAR_SYMMETRIES, apply_planar, canonical_array, canonical_cube, projection_set

DEFAULT_ORDER_LIMIT = 13

# Fixed weights make the membership prefilter deterministic; exactness
# comes from the byte-level verification of every candidate hit.
_WEIGHT_SEED = 0xC057A5


class EnumerationLimitError(ValueError):
    """Raised when an order exceeds the in-process enumeration limit."""

    def __init__(self, order: int, limit: int):
        super().__init__(
            f"order {order} exceeds the in-process enumeration limit {limit}; "
            "supply a complete Costas array database for this order instead"
        )
        self.order = order
        self.limit = limit


def enumerate_costas_arrays(n: int, limit: int = DEFAULT_ORDER_LIMIT) -> list[Permutation]:
    """All Costas permutations of order n, in lexicographic order."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > limit:
        raise EnumerationLimitError(n, limit)
    out: list[Permutation] = []
    values = [0] * n
    # masks[d] has bit (diff + n) set when value difference diff has been
    # seen between columns at distance d
    masks = [0] * n

    def extend(col: int, free: int) -> None:
        if col == n:
            out.append(Permutation(tuple(values)))
            return
        avail = free
        while avail:
            bit = avail & -avail
            avail ^= bit
            v = bit.bit_length() - 1
            shifts = []
            ok = True
            for d in range(1, col + 1):
                s = values[col - d] - v + n
                if (masks[d] >> s) & 1:
                    ok = False
                    break
                shifts.append((d, 1 << s))
            if not ok:
                continue
            for d, b in shifts:
                masks[d] |= b
            values[col] = v
            extend(col + 1, free ^ bit)
            for d, b in shifts:
                masks[d] ^= b

    extend(0, (1 << (n + 1)) - 2)
    return out


def array_classes(arrays: Iterable[Permutation]) -> list[Permutation]:
    """One canonical representative per D4 class, sorted."""
    return [Permutation(v) for v in sorted({canonical_array(p).values for p in arrays})]


def enumerate_costas_classes(n: int, limit: int = DEFAULT_ORDER_LIMIT) -> list[Permutation]:
    """Canonical representatives of the D4 classes of order-n Costas arrays."""
    return array_classes(enumerate_costas_arrays(n, limit))


def _check_complete(arrays: Sequence[Permutation], n: int) -> set[tuple[int, ...]]:
    """Sanity checks for a claimed-complete list of order-n Costas arrays."""
    if not arrays:
        raise ValueError("empty array list")
    seen = {p.values for p in arrays}
    if len(seen) != len(arrays):
        raise ValueError("array list contains duplicates")
    for p in arrays:
        if p.order != n:
            raise ValueError(f"array {p} has order {p.order}, expected {n}")
        if not is_costas(p):
            raise ValueError(f"array {p} is not a Costas array")
    for p in arrays:
        for s in PLANAR_SYMMETRIES:
            if apply_planar(s, p).values not in seen:
                raise ValueError(
                    f"array list is not closed under the square symmetries "
                    f"(image of {p} missing); it cannot be complete"
                )
    return seen


def _scan_chunk(args) -> set[tuple[tuple[int, int], ...]]:
    """Pair-join scan over a range of first-array indices.

    Returns canonical row lists of the Costas cubes found.  Candidate
    Projection C matches come from a hashed membership prefilter and are
    confirmed byte-for-byte against the array list.
    """
    matrix, idx, inverses, keys_sorted, row_bytes, weights, a_indices = args
    n = matrix.shape[1]
    found: set[tuple[tuple[int, int], ...]] = set()
    last = len(keys_sorted) - 1
    for a in a_indices:
        inv_a = inverses[a]
        c_all = inv_a[idx]
        keys = weights[0][c_all[:, 0]].copy()
        for pos in range(1, n):
            keys += weights[pos][c_all[:, pos]]
        loc = np.minimum(np.searchsorted(keys_sorted, keys), last)
        candidates = np.nonzero(keys_sorted[loc] == keys)[0]
        if candidates.size == 0:
            continue
        ja = inv_a.tolist()
        for b in candidates.tolist():
            if c_all[b].tobytes() not in row_bytes:
                continue
            rows = tuple(zip(ja, inverses[b].tolist()))
            found.add(canonical_cube(CostasCube(rows)).rows)
    return found


def _chunks(indices: list[int], parts: int) -> list[list[int]]:
    size = (len(indices) + parts - 1) // parts
    return [indices[t : t + size] for t in range(0, len(indices), size)]


def enumerate_costas_cubes(
    n: int,
    arrays: Sequence[Permutation],
    *,
    threads: int = 1,
    mode: str = "literal",
) -> list[CostasCube]:
    """One canonical representative per equivalence class of order-n
    Costas cubes, from the pair-join over the given complete array list.

    mode "literal" scans every ordered pair; mode "reduced" restricts the
    first array to canonical class representatives, which reaches the
    same classes because cube equivalence absorbs the square symmetries
    acting on Projection A.
    """
    seen = _check_complete(arrays, n)
    matrix = np.array([p.values for p in arrays], dtype=np.uint8)
    idx = (matrix - 1).astype(np.intp)
    inverses = np.array([p.inverse().values for p in arrays], dtype=np.uint8)
    rng = np.random.default_rng(_WEIGHT_SEED)
    weights = rng.integers(0, 1 << 64, size=(n, n + 1), dtype=np.uint64)
    keys = weights[0][matrix[:, 0]].copy()
    for pos in range(1, n):
        keys += weights[pos][matrix[:, pos]]
    order_of = np.argsort(keys, kind="stable")
    keys_sorted = keys[order_of]
    row_bytes = {matrix[r].tobytes() for r in range(len(arrays))}

    if mode == "literal":
        a_indices = list(range(len(arrays)))
    elif mode == "reduced":
        a_indices = [
            r for r, p in enumerate(arrays) if canonical_array(p).values == p.values
        ]
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if threads <= 1:
        found = _scan_chunk(
            (matrix, idx, inverses, keys_sorted, row_bytes, weights, a_indices)
        )
    else:
        from multiprocessing import get_context

        chunks = _chunks(a_indices, threads * 4)
        payload = [
            (matrix, idx, inverses, keys_sorted, row_bytes, weights, chunk)
            for chunk in chunks
        ]
        found = set()
        with get_context("fork").Pool(threads) as pool:
            for part in pool.map(_scan_chunk, payload):
                found |= part
    del seen
    return [CostasCube(rows) for rows in sorted(found)]


def projection_class_count(cubes: Iterable[CostasCube]) -> int:
    """Number of D4 classes of Costas arrays that occur as a projection
    of at least one of the given cubes (via their full orbits)."""
    classes: set[tuple[int, ...]] = set()
    for cube in cubes:
        for p in projection_set(cube):
            classes.add(canonical_array(p).values)
    return len(classes)


@dataclass(frozen=True)
class ClassReport:
    """Class counts for one order: cubes, projection arrays, all arrays."""

    order: int
    cube_classes: int
    projection_array_classes: int
    total_array_classes: int
    representatives: tuple[CostasCube, ...] | None = None

    def __post_init__(self) -> None:
        if min(self.cube_classes, self.projection_array_classes, self.total_array_classes) < 0:
            raise ValueError("counts must be non-negative")
        if self.projection_array_classes > self.total_array_classes:
            raise ValueError("projection classes cannot exceed total classes")


def table1(
    max_n: int,
    *,
    limit: int = DEFAULT_ORDER_LIMIT,
    arrays_by_order: Mapping[int, Sequence[Permutation]] | None = None,
    threads: int = 1,
    with_representatives: bool = False,
) -> list[ClassReport]:
    """Class reports for orders 2..max_n.

    Orders present in arrays_by_order use the supplied complete array
    list (e.g. an ingested database); all others are enumerated
    in-process, subject to the order limit.
    """
    reports = []
    for n in range(2, max_n + 1):
        if arrays_by_order is not None and n in arrays_by_order:
            arrays = list(arrays_by_order[n])
        else:
            arrays = enumerate_costas_arrays(n, limit)
        cubes = enumerate_costas_cubes(n, arrays, threads=threads)
        reports.append(
            ClassReport(
                order=n,
                cube_classes=len(cubes),
                projection_array_classes=projection_class_count(cubes),
                total_array_classes=len(array_classes(arrays)),
                representatives=tuple(cubes) if with_representatives else None,
            )
        )
    return reports
