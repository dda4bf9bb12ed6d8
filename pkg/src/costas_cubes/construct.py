"""Finite-field constructions of Costas arrays and Costas cubes.

Array families (names follow the classical literature):

* W1(p, phi, c): order p-1, sigma(j) = phi^(j+c) over GF(p).
* G2(q, phi, rho): order q-2, 1 entries where phi^i + rho^j = 1.
* W2(p, phi): order p-2, sigma(j) = phi^j - 1.
* G3(q, phi): order q-3, 1 entries where phi^(i+1) + (1-phi)^(j+1) = 1,
  requiring 1-phi primitive as well.

Cube families, each of whose three projections lands in one of the
array families above:

* cube_g2x3: order q-2, rows phi^i + rho^(-j) = 1 = phi^(-i) + psi^k
  (the third condition rho^j + psi^(-k) = 1 then holds automatically).
* cube_w2w2g2: order p-2, rows i = phi^j - 1 = -psi^k.
* cube_g3_variant_i / _ii: order q-3, requiring phi, 1-phi and
  1-phi^(-1) all primitive; the two variants share Projection A and are
  exchanged by k_reversal.

sweep enumerates all admissible parameter tuples per family and counts
equivalence classes per order; catalog labels canonical arrays of one
order by the families able to produce them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import CostasCube, Permutation, is_costas_cube
from .reference import CUBE_CLASS_COUNTS
from .gf import (
    FieldElement,
    FieldSpec,
    LogTable,
    field_new,
    format_element,
    g3_admissible,
    g3_cube_admissible,
    is_prime,
    is_primitive,
    prime_power,
    primitive_elements,
)
from .symmetry import canonical_array, canonical_cube

# One fixed representation per non-prime field order used by sweeps and
# the catalog; different moduli give isomorphic fields and identical
# canonical class sets, so ranging over them would only duplicate work.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 0, 1, 1),
    9: (1, 0, 1),
    16: (1, 0, 0, 1, 1),
    25: (1, 1, 1),
    27: (1, 0, 2, 1),
    32: (1, 0, 1, 0, 0, 1),
}

SWEEP_ORDER_GUARD = 29


class Family(str, Enum):
    W1 = "W1"
    G2 = "G2"
    W2 = "W2"
    G3 = "G3"
    CUBE_G2X3 = "CUBE_G2x3"
    CUBE_W2W2G2 = "CUBE_W2W2G2"
    CUBE_G3_I = "CUBE_G3_I"
    CUBE_G3_II = "CUBE_G3_II"
    CUBE_G3 = "CUBE_G3"  # variants (i) and (ii) pooled


@dataclass(frozen=True)
class ConstructionId:
    """A construction family together with the parameters that ran it."""

    family: Family
    field: FieldSpec
    elements: tuple[FieldElement, ...]
    shift: int | None = None

    def describe(self) -> str:
        parts = [format_element(self.field, e) for e in self.elements]
        if self.shift is not None:
            parts.append(f"c={self.shift}")
        return f"{self.family.value}(q={self.field.q}; {'; '.join(parts)})"


def _require_primitive(field: FieldSpec, e: FieldElement, name: str) -> None:
    if e == 0 or not is_primitive(field, e):
        raise ValueError(
            f"{name}={format_element(field, e)} is not primitive in GF({field.q})"
        )


def default_field(q: int, moduli: dict[int, tuple[int, ...]] | None = None) -> FieldSpec:
    """The configured GF(q) for sweeps and the catalog."""
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    p, m = pm
    if m == 1:
        return field_new(p, 1)
    table = DEFAULT_MODULI if moduli is None else moduli
    if q not in table:
        raise ValueError(f"no modulus configured for GF({q})")
    return field_new(p, m, table[q])


# -- array constructions -----------------------------------------------


def w1(p: int, phi: FieldElement, c: int = 0) -> Permutation:
    """Order p-1 array with sigma(j) = phi^(j+c) over GF(p), p > 2 prime."""
    field = field_new(p, 1)
    if p <= 2:
        raise ValueError("W1 requires p > 2")
    _require_primitive(field, phi, "phi")
    if not 0 <= c < p:
        raise ValueError(f"shift c={c} must lie in GF({p})")
    table = LogTable(field, phi)
    return Permutation(tuple(table.power(j + c) for j in range(1, p)))


def g2(field: FieldSpec, phi: FieldElement, rho: FieldElement) -> Permutation:
    """Order q-2 array with 1 entries where phi^i + rho^j = 1, q > 3."""
    if field.q <= 3:
        raise ValueError("G2 requires q > 3")
    _require_primitive(field, phi, "phi")
    _require_primitive(field, rho, "rho")
    tp = LogTable(field, phi)
    tr = LogTable(field, rho)
    return Permutation(
        tuple(tp.dlog(field.sub(1, tr.power(j))) for j in range(1, field.q - 1))
    )


def w2(p: int, phi: FieldElement) -> Permutation:
    """Order p-2 array with sigma(j) = phi^j - 1 over GF(p), p > 3 prime."""
    field = field_new(p, 1)
    if p <= 3:
        raise ValueError("W2 requires p > 3")
    _require_primitive(field, phi, "phi")
    table = LogTable(field, phi)
    return Permutation(tuple(table.power(j) - 1 for j in range(1, p - 1)))


def g3(field: FieldSpec, phi: FieldElement) -> Permutation:
    """Order q-3 array with 1 entries where phi^(i+1) + (1-phi)^(j+1) = 1.

    Requires phi and 1-phi both primitive.  Equals the G2(q, phi, 1-phi)
    array with the row and column through its 1 entry at (1, 1) removed.
    """
    if field.q <= 3:
        raise ValueError("G3 requires q > 3")
    one_minus = field.sub(1, phi)
    _require_primitive(field, phi, "phi")
    _require_primitive(field, one_minus, "1-phi")
    tp = LogTable(field, phi)
    tm = LogTable(field, one_minus)
    values = []
    for j in range(1, field.q - 2):
        i = tp.dlog(field.sub(1, tm.power(j + 1))) - 1
        assert 1 <= i <= field.q - 3
        values.append(i)
    return Permutation(tuple(values))


# -- cube constructions ------------------------------------------------


def cube_g2x3(
    field: FieldSpec, phi: FieldElement, rho: FieldElement, psi: FieldElement
) -> CostasCube:
    """Order q-2 cube whose projections are all G2 arrays.

    Row i has j = -dlog_rho(1 - phi^i) mod (q-1) and k = dlog_psi(1 - phi^(-i));
    the remaining condition rho^j + psi^(-k) = 1 is implied.  Projections:
    A = G2(q, phi, rho^(-1)), B = G2(q, phi^(-1), psi), C = G2(q, rho, psi^(-1)).
    """
    if field.q <= 3:
        raise ValueError("this construction requires q > 3")
    _require_primitive(field, phi, "phi")
    _require_primitive(field, rho, "rho")
    _require_primitive(field, psi, "psi")
    q = field.q
    tp = LogTable(field, phi)
    tr = LogTable(field, rho)
    ts = LogTable(field, psi)
    rows = []
    for i in range(1, q - 1):
        j = (-tr.dlog(field.sub(1, tp.power(i)))) % (q - 1)
        k = ts.dlog(field.sub(1, tp.power(-i)))
        assert 1 <= j <= q - 2 and 1 <= k <= q - 2
        rows.append((j, k))
    return CostasCube(tuple(rows))


def cube_w2w2g2(p: int, phi: FieldElement, psi: FieldElement) -> CostasCube:
    """Order p-2 cube with rows i = phi^j - 1 = -psi^k over GF(p), p > 3.

    Projection A = W2(p, phi); Projection B is the vertical-axis
    reflection of W2(p, psi); Projection C = G2(p, phi, psi).
    """
    field = field_new(p, 1)
    if p <= 3:
        raise ValueError("this construction requires p > 3")
    _require_primitive(field, phi, "phi")
    _require_primitive(field, psi, "psi")
    tp = LogTable(field, phi)
    ts = LogTable(field, psi)
    rows = []
    for i in range(1, p - 1):
        j = tp.dlog(i + 1)
        k = ts.dlog(p - i)
        assert 1 <= j <= p - 2 and 1 <= k <= p - 2
        rows.append((j, k))
    return CostasCube(tuple(rows))


def _require_g3_cube_admissible(field: FieldSpec, phi: FieldElement) -> None:
    _require_primitive(field, phi, "phi")
    if not is_primitive(field, field.sub(1, phi)):
        raise ValueError(f"1-phi is not primitive in GF({field.q})")
    if not is_primitive(field, field.sub(1, field.inv(phi))):
        raise ValueError(f"1-phi^(-1) is not primitive in GF({field.q})")


def cube_g3_variant_i(field: FieldSpec, phi: FieldElement) -> CostasCube:
    """Order q-3 cube whose projections are all G3 arrays.

    Requires phi, 1-phi and 1-phi^(-1) all primitive.  Projections:
    A = G3(q, phi), B = G3(q, phi^(-1)), C = G3(q, (1-phi)^(-1)).
    Equals cube_g2x3(field, phi, (1-phi)^(-1), 1-phi^(-1)) with the
    three planes through its 1 entry at (1,1,1) removed.
    """
    if field.q <= 3:
        raise ValueError("this construction requires q > 3")
    _require_g3_cube_admissible(field, phi)
    q = field.q
    tp = LogTable(field, phi)
    tm = LogTable(field, field.sub(1, phi))
    tmi = LogTable(field, field.sub(1, field.inv(phi)))
    rows = []
    for i in range(1, q - 2):
        j = tm.dlog(field.sub(1, tp.power(i + 1))) - 1
        k = tmi.dlog(field.sub(1, tp.power(-(i + 1)))) - 1
        assert 1 <= j <= q - 3 and 1 <= k <= q - 3
        rows.append((j, k))
    return CostasCube(tuple(rows))


def cube_g3_variant_ii(field: FieldSpec, phi: FieldElement) -> CostasCube:
    """Companion of cube_g3_variant_i with the k coordinates re-read.

    Row i has the same j and k = dlog_(1-phi^(-1))(1 - phi^i) - 1.
    Projection A is unchanged; Projection B is the vertical-axis
    reflection of G3(q, phi^(-1)); Projection C is the 180-degree
    rotation of G3(q, (1-phi)^(-1)).
    """
    if field.q <= 3:
        raise ValueError("this construction requires q > 3")
    _require_g3_cube_admissible(field, phi)
    q = field.q
    tp = LogTable(field, phi)
    tm = LogTable(field, field.sub(1, phi))
    tmi = LogTable(field, field.sub(1, field.inv(phi)))
    rows = []
    for i in range(1, q - 2):
        j = tm.dlog(field.sub(1, tp.power(i + 1))) - 1
        k = tmi.dlog(field.sub(1, tp.power(i))) - 1
        assert 1 <= j <= q - 3 and 1 <= k <= q - 3
        rows.append((j, k))
    return CostasCube(tuple(rows))


def k_reversal(cube: CostasCube) -> tuple[CostasCube, bool]:
    """Re-read each row's k coordinate from the row n+1-i.

    Returns the transformed permutation cube and whether it is a Costas
    cube; the transformation is an involution but does not preserve the
    Costas property in general.
    """
    n = cube.order
    rows = tuple(
        (cube.rows[i][0], cube.rows[n - 1 - i][1]) for i in range(n)
    )
    out = CostasCube(rows)
    return out, is_costas_cube(out)


# -- parameter sweeps and the catalog ----------------------------------


@dataclass(frozen=True)
class SweepReport:
    """Canonical cube classes found per order, with one witness each."""

    family: Family
    classes: dict[int, dict[CostasCube, ConstructionId]]

    def count(self, order: int) -> int:
        return len(self.classes.get(order, {}))

    def orders(self) -> list[int]:
        return sorted(self.classes)


def _sweep_tuples(family: Family, max_order: int, moduli):
    """Yield (order, constructor, field, elements) over admissible tuples."""
    if family in (Family.CUBE_G2X3, Family.CUBE_G3, Family.CUBE_G3_I, Family.CUBE_G3_II):
        shift = 2 if family is Family.CUBE_G2X3 else 3
        for q in range(4, max_order + shift + 1):
            if prime_power(q) is None or q - shift < 2 or q - shift > max_order:
                continue
            field = default_field(q, moduli)
            if family is Family.CUBE_G2X3:
                prims = primitive_elements(field)
                for phi in prims:
                    for rho in prims:
                        for psi in prims:
                            yield q - 2, cube_g2x3, field, (phi, rho, psi)
            else:
                for phi in g3_cube_admissible(field):
                    if family in (Family.CUBE_G3, Family.CUBE_G3_I):
                        yield q - 3, cube_g3_variant_i, field, (phi,)
                    if family in (Family.CUBE_G3, Family.CUBE_G3_II):
                        yield q - 3, cube_g3_variant_ii, field, (phi,)
    elif family is Family.CUBE_W2W2G2:
        for p in range(5, max_order + 3):
            if not is_prime(p) or p - 2 < 2 or p - 2 > max_order:
                continue
            field = field_new(p, 1)
            prims = primitive_elements(field)
            for phi in prims:
                for psi in prims:
                    yield p - 2, cube_w2w2g2, field, (phi, psi)
    else:
        raise ValueError(f"sweep is defined for cube families, not {family}")


_VARIANT_OF = {cube_g3_variant_i: Family.CUBE_G3_I, cube_g3_variant_ii: Family.CUBE_G3_II}


def sweep(
    family: Family,
    max_order: int = SWEEP_ORDER_GUARD,
    *,
    guard: int = SWEEP_ORDER_GUARD,
    moduli: dict[int, tuple[int, ...]] | None = None,
) -> SweepReport:
    """All inequivalent cubes of orders 2..max_order from one family.

    Every admissible parameter tuple over the configured fields is
    constructed, canonicalized, and deduplicated; the witness recorded
    for a class is the first tuple that produced it.
    """
    if max_order > guard:
        raise ValueError(f"max_order {max_order} exceeds the guard {guard}")
    classes: dict[int, dict[CostasCube, ConstructionId]] = {}
    for order, constructor, field, elements in _sweep_tuples(family, max_order, moduli):
        if family is Family.CUBE_W2W2G2:
            cube = constructor(field.p, *elements)
        else:
            cube = constructor(field, *elements)
        rep = canonical_cube(cube)
        witness_family = _VARIANT_OF.get(constructor, family)
        classes.setdefault(order, {}).setdefault(
            rep, ConstructionId(witness_family, field, elements)
        )
    return SweepReport(family, classes)


def catalog(
    order: int, moduli: dict[int, tuple[int, ...]] | None = None
) -> dict[tuple[int, ...], set[str]]:
    """Canonical Costas arrays of one order, labelled by the array
    families able to produce them over every parameter choice.

    Orders out of reach of every family map to an empty dict.
    """
    labels: dict[tuple[int, ...], set[str]] = {}

    def add(perm: Permutation, label: str) -> None:
        labels.setdefault(canonical_array(perm).values, set()).add(label)

    p = order + 1
    if p > 2 and is_prime(p):
        field = field_new(p, 1)
        for phi in primitive_elements(field):
            for c in range(p):
                add(w1(p, phi, c), Family.W1.value)
    q = order + 2
    if q > 3 and prime_power(q) is not None:
        field = default_field(q, moduli)
        prims = primitive_elements(field)
        for phi in prims:
            for rho in prims:
                add(g2(field, phi, rho), Family.G2.value)
        if field.m == 1:
            for phi in prims:
                add(w2(field.p, phi), Family.W2.value)
    q = order + 3
    if q > 3 and prime_power(q) is not None:
        field = default_field(q, moduli)
        for phi in g3_admissible(field):
            add(g3(field, phi), Family.G3.value)
    return labels


@dataclass(frozen=True)
class Table2Row:
    """Constructed cube classes of one order, per family, with the known
    total count of cube classes alongside (None outside 2..29)."""

    order: int
    g2x3: int
    w2w2g2: int
    g3: int
    g3_variant_i: int
    g3_variant_ii: int
    total_known: int | None

    @property
    def constructed(self) -> int:
        return self.g2x3 + self.w2w2g2 + self.g3


def table2(
    max_order: int = SWEEP_ORDER_GUARD,
    *,
    guard: int = SWEEP_ORDER_GUARD,
    moduli: dict[int, tuple[int, ...]] | None = None,
) -> list[Table2Row]:
    """Constructed-class counts per order over all four cube families.

    The two G3 variants are pooled into one column (their class sets can
    overlap) and also reported separately.
    """
    s_ggg = sweep(Family.CUBE_G2X3, max_order, guard=guard, moduli=moduli)
    s_www = sweep(Family.CUBE_W2W2G2, max_order, guard=guard, moduli=moduli)
    s_i = sweep(Family.CUBE_G3_I, max_order, guard=guard, moduli=moduli)
    s_ii = sweep(Family.CUBE_G3_II, max_order, guard=guard, moduli=moduli)
    rows = []
    for order in range(2, max_order + 1):
        pooled = set(s_i.classes.get(order, {})) | set(s_ii.classes.get(order, {}))
        rows.append(
            Table2Row(
                order=order,
                g2x3=s_ggg.count(order),
                w2w2g2=s_www.count(order),
                g3=len(pooled),
                g3_variant_i=s_i.count(order),
                g3_variant_ii=s_ii.count(order),
                total_known=CUBE_CLASS_COUNTS.get(order),
            )
        )
    return rows
