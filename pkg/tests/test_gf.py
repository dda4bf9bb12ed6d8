import math

import pytest
from hypothesis import given, settings, strategies as st

from costas_cubes.gf import (
    LogTable,
    dlog,
    factorize,
    field_new,
    format_element,
    format_field_spec,
    g3_admissible,
    g3_cube_admissible,
    is_primitive,
    parse_element,
    parse_field_spec,
    prime_power,
    primitive_elements,
)

from conftest import EXTENSION_MODULI, instantiated_fields

GF13 = field_new(13, 1)
GF16 = field_new(2, 4, (1, 0, 0, 1, 1))
GF27 = field_new(3, 3, (1, 0, 2, 1))


def test_field_new_examples():
    assert GF16.q == 16
    assert GF27.q == 27
    with pytest.raises(ValueError, match="reducible"):
        field_new(2, 2, (1, 0, 1))  # (1+x)^2 over GF(2)
    with pytest.raises(ValueError, match="not prime"):
        field_new(6, 1)
    with pytest.raises(ValueError, match="degree"):
        field_new(2, 3, (1, 1, 1))


def test_field_new_normalizes_leading_coefficient():
    f = field_new(5, 2, (2, 2, 2))  # 2(1 + x + x^2)
    assert f.modulus == (1, 1, 1)


def test_arithmetic_examples():
    assert GF13.mul(11, 6) == 1
    assert GF16.mul(2, 8) == 9  # x * x^3 = 1 + x^3
    for f in (GF13, GF16, GF27):
        for e in f.elements():
            assert f.add(e, 0) == e
            assert f.mul(e, 1) == e


def _naive_mul(field, a, b):
    """Schoolbook polynomial product reduced by long division."""
    p, m = field.p, field.m
    da, db = field.digits(a), field.digits(b)
    prod = [0] * (2 * m)
    for s, ca in enumerate(da):
        for t, cb in enumerate(db):
            prod[s + t] = (prod[s + t] + ca * cb) % p
    for top in range(2 * m - 1, m - 1, -1):
        c = prod[top]
        if c:
            for t, cm in enumerate(field.modulus):
                prod[top - m + t] = (prod[top - m + t] - c * cm) % p
    return field.encode(prod[:m])


def test_mul_matches_naive_oracle():
    for f in (GF16, GF27, field_new(5, 2, (1, 1, 1))):
        for a in f.elements():
            for b in f.elements():
                assert f.mul(a, b) == _naive_mul(f, a, b)


def test_field_axioms_exhaustive_small():
    for f in instantiated_fields():
        if f.q > 64:
            continue
        elems = list(f.elements())
        for a in elems:
            for b in elems:
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
                for c in elems:
                    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
        for a in f.nonzero_elements():
            assert f.mul(a, f.inv(a)) == 1
            assert f.add(a, f.neg(a)) == 0


GF2187 = field_new(*EXTENSION_MODULI[2187])


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_field_axioms_random_large(data):
    f = GF2187
    a = data.draw(st.integers(0, f.q - 1))
    b = data.draw(st.integers(0, f.q - 1))
    c = data.draw(st.integers(0, f.q - 1))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
    if a:
        assert f.mul(a, f.inv(a)) == 1


def test_pow_handles_negative_exponents():
    assert GF13.pow(11, -1) == 6
    assert GF16.pow(2, -1) == GF16.inv(2)
    assert GF27.pow(8, 0) == 1
    with pytest.raises(ZeroDivisionError):
        GF13.inv(0)
    with pytest.raises(ZeroDivisionError):
        GF13.pow(0, -2)


def test_is_primitive_examples():
    assert is_primitive(GF16, 2)  # x
    for text in ("2+2x", "2+x", "x+x^2"):
        assert is_primitive(GF27, parse_element(GF27, text))
    for f in (GF13, GF16, GF27):
        assert not is_primitive(f, 1)
    with pytest.raises(ValueError):
        is_primitive(GF13, 0)


def test_primitive_elements_examples():
    assert primitive_elements(field_new(5, 1)) == [2, 3]
    thirteens = primitive_elements(GF13)
    assert 11 in thirteens and 6 in thirteens
    assert len(primitive_elements(field_new(2, 2, (1, 1, 1)))) == 2


def test_primitive_element_count_is_totient():
    def totient(n):
        out = n
        for r in factorize(n):
            out -= out // r
        return out

    for f in instantiated_fields():
        if f.q <= 128:
            assert len(primitive_elements(f)) == totient(f.q - 1)


def test_dlog_examples():
    t = LogTable(GF13, 11)
    assert dlog(t, 11) == 1
    assert dlog(t, 1) == 12
    assert t.power(1) - 1 == 10  # matches the first W2(13, 11) value
    with pytest.raises(ValueError):
        t.dlog(0)
    with pytest.raises(ValueError, match="not primitive"):
        LogTable(GF13, 1)


def test_exp_log_round_trip():
    for f in (GF13, GF16, GF27):
        g = primitive_elements(f)[0]
        t = LogTable(f, g)
        for i in range(1, f.q):
            assert t.dlog(t.power(i)) == i


def test_g3_admissible_examples():
    assert parse_element(GF27, "2+2x") in g3_admissible(GF27)
    gf5 = field_new(5, 1)
    assert set(g3_admissible(gf5)) <= {2, 3}
    for f in (gf5, GF16, GF27):
        for e in g3_admissible(f):
            assert is_primitive(f, e) and is_primitive(f, f.sub(1, e))


def test_g3_admissible_nonempty_for_every_field():
    for f in instantiated_fields():
        if 3 < f.q <= 256:
            assert g3_admissible(f), f"no admissible element found in GF({f.q})"


def test_g3_cube_admissible_examples():
    assert g3_cube_admissible(GF16) == []
    assert parse_element(GF27, "2+2x") in g3_cube_admissible(GF27)
    for f in (GF16, GF27, field_new(7, 1)):
        assert set(g3_cube_admissible(f)) <= set(g3_admissible(f))


def test_reciprocal_identity_and_power_coverage():
    # (1-y)^(-1) + (1-y^(-1))^(-1) = 1 for y outside {0, 1}, and the powers
    # phi^1..phi^(q-2) of a primitive phi cover exactly the same set.
    for f in instantiated_fields():
        if f.q < 4 or f.q > 1024:
            continue
        for y in range(2, f.q):
            assert f.add(f.inv(f.sub(1, y)), f.inv(f.sub(1, f.inv(y)))) == 1
        phi = primitive_elements(f)[0]
        t = LogTable(f, phi)
        assert {t.power(i) for i in range(1, f.q - 1)} == set(range(2, f.q))


def test_field_spec_string_round_trip():
    assert parse_field_spec("13") == GF13
    assert parse_field_spec("2^4:1,0,0,1,1") == GF16
    assert parse_field_spec(format_field_spec(GF27)) == GF27
    with pytest.raises(ValueError):
        parse_field_spec("2^4")


def test_element_text_forms():
    assert parse_element(GF27, "2+2x") == 8
    assert parse_element(GF27, "8") == 8
    assert parse_element(GF16, "x+x^2+x^3") == 14
    assert parse_element(GF13, "11") == 11
    assert format_element(GF27, 8) == "2+2x"
    assert format_element(GF16, 0) == "0"
    assert parse_element(GF27, format_element(GF27, 17)) == 17
    with pytest.raises(ValueError):
        parse_element(GF13, "15")
    with pytest.raises(ValueError):
        parse_element(GF16, "x^9")


def test_prime_power_detection():
    assert prime_power(27) == (3, 3)
    assert prime_power(13) == (13, 1)
    assert prime_power(24) is None
    assert math.prod(r**e for r, e in factorize(360).items()) == 360
