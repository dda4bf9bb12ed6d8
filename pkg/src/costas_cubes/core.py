"""Permutations, permutation cubes, and the Costas property.

Index conventions used throughout the package (all 1-based):

* A permutation sigma on {1..n} is stored as its value sequence
  (sigma(1), ..., sigma(n)) and encodes the n x n 0/1 array with a 1 in
  row i, column j exactly when sigma(j) = i.

* A permutation cube is an n x n x n 0/1 array with exactly one 1 in
  every axis-aligned plane.  It is stored sparsely: for each i there is
  a unique pair (j_i, k_i) carrying the 1, and the cube is the row list
  ((j_1, k_1), ..., (j_n, k_n)).

* The three projections of a cube collapse one axis by summation:
  A over k, B over j, C over i.  Read as permutations:
  sigma_A(j_i) = i, sigma_B(k_i) = i, sigma_C(k_i) = j_i.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Literal


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}, stored as its 1-based value sequence."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise ValueError("permutation must have order >= 1")
        if sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"{self.values!r} is not a bijection on 1..{n}")

    @property
    def order(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        """sigma(j) for a 1-based argument j."""
        return self.values[j - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.values)
        for j, i in enumerate(self.values, start=1):
            inv[i - 1] = j
        return Permutation(tuple(inv))

    def cells(self) -> tuple[tuple[int, int], ...]:
        """Coordinates (i, j) of the 1 entries of the array form."""
        return tuple((i, j) for j, i in enumerate(self.values, start=1))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


@dataclass(frozen=True)
class CostasCube:
    """A permutation cube, stored as rows (j_i, k_i) for i = 1..n.

    The type stores any permutation cube; the Costas property is decided
    by is_costas_cube, never assumed.
    """

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("cube must have order >= 1")
        expected = list(range(1, n + 1))
        if sorted(j for j, _ in self.rows) != expected:
            raise ValueError(f"j coordinates {[j for j, _ in self.rows]!r} are not a bijection on 1..{n}")
        if sorted(k for _, k in self.rows) != expected:
            raise ValueError(f"k coordinates {[k for _, k in self.rows]!r} are not a bijection on 1..{n}")

    @property
    def order(self) -> int:
        return len(self.rows)

    def triples(self) -> tuple[tuple[int, int, int], ...]:
        """The 1-entry coordinates (i, j_i, k_i), sorted by i."""
        return tuple((i, j, k) for i, (j, k) in enumerate(self.rows, start=1))

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[int, int, int]]) -> CostasCube:
        """Build a cube from (i, j, k) triples in any order.

        Raises ValueError on duplicate or missing i coordinates.
        """
        items = sorted(triples)
        n = len(items)
        if [i for i, _, _ in items] != list(range(1, n + 1)):
            raise ValueError("i coordinates must cover 1..n exactly once")
        return cls(tuple((j, k) for _, j, k in items))

    def __str__(self) -> str:
        return " ".join(f"({i},{j},{k})" for i, j, k in self.triples())


@dataclass(frozen=True)
class ProjectionTriple:
    """The three projections of a permutation cube, as permutations."""

    a: Permutation
    b: Permutation
    c: Permutation

    def __post_init__(self) -> None:
        if not (self.a.order == self.b.order == self.c.order):
            raise ValueError("projections must have equal order")


def max_offphase_autocorrelation(perm: Permutation) -> int:
    """Largest out-of-phase aperiodic autocorrelation of the array form.

    This is the maximum, over nonzero shifts (u, v), of the number of
    coincidences between the array and its translate; equivalently the
    largest multiplicity among vectors joining ordered pairs of distinct
    1 entries.  0 occurs only at order 1; the permutation is Costas
    exactly when the result is at most 1.
    """
    pts = perm.cells()
    counts = Counter(
        (p2[0] - p1[0], p2[1] - p1[1]) for p1 in pts for p2 in pts if p1 != p2
    )
    return max(counts.values(), default=0)


def is_costas(perm: Permutation) -> bool:
    """True iff all difference vectors between pairs of 1 entries are distinct."""
    vals = perm.values
    n = len(vals)
    for d in range(1, n):
        seen = set()
        for j in range(n - d):
            diff = vals[j + d] - vals[j]
            if diff in seen:
                return False
            seen.add(diff)
    return True


def costas_violation(perm: Permutation) -> tuple[int, int] | None:
    """A repeated difference vector (column shift, value shift), or None.

    Returns the first repeat found scanning column shifts in increasing
    order; None exactly when the permutation is Costas.
    """
    vals = perm.values
    n = len(vals)
    for d in range(1, n):
        seen = set()
        for j in range(n - d):
            diff = vals[j + d] - vals[j]
            if diff in seen:
                return (d, diff)
            seen.add(diff)
    return None


def projections(cube: CostasCube) -> ProjectionTriple:
    """The projections A, B, C of a permutation cube, as permutations."""
    n = cube.order
    a = [0] * n
    b = [0] * n
    c = [0] * n
    for i, (j, k) in enumerate(cube.rows, start=1):
        a[j - 1] = i
        b[k - 1] = i
        c[k - 1] = j
    return ProjectionTriple(Permutation(tuple(a)), Permutation(tuple(b)), Permutation(tuple(c)))


def cube_from_projections(a: Permutation, b: Permutation) -> CostasCube:
    """The unique permutation cube with Projection A = a and Projection B = b.

    Row i carries its 1 at j_i = sigma_A^{-1}(i), k_i = sigma_B^{-1}(i).
    """
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    ja = a.inverse().values
    kb = b.inverse().values
    return CostasCube(tuple(zip(ja, kb)))


PairName = Literal["AB", "AC", "BC"]


def cube_from_pair(which: PairName, x: Permutation, y: Permutation) -> CostasCube:
    """Reconstruct the cube whose named projection pair is (x, y).

    Any two projections determine a permutation cube; the AB case
    coincides with cube_from_projections.
    """
    if x.order != y.order:
        raise ValueError(f"order mismatch: {x.order} vs {y.order}")
    if which == "AB":
        return cube_from_projections(x, y)
    if which == "AC":
        ja = x.inverse().values
        cinv = y.inverse().values
        return CostasCube(tuple((j, cinv[j - 1]) for j in ja))
    if which == "BC":
        kb = x.inverse().values
        return CostasCube(tuple((y.values[k - 1], k) for k in kb))
    raise ValueError(f"unknown projection pair {which!r}")


def is_costas_cube(cube: CostasCube) -> bool:
    """True iff all three projections of the cube are Costas arrays."""
    t = projections(cube)
    return is_costas(t.a) and is_costas(t.b) and is_costas(t.c)
