from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regfact.cardinals import ALEPH_0
from regfact.errors import EncodingError, IndexOutOfRange, ParseError
from regfact.groups import (
    DirectProduct,
    FiniteCyclic,
    FreeGroup,
    InfiniteDihedral,
    Integers,
    coset_key,
    direct_product,
    integer_multiples,
    parse_elements_csv,
    parse_group_spec,
    parse_subgroup_spec,
    trivial_subgroup,
)

Z = Integers()
C2 = FiniteCyclic(2)
DINF = InfiniteDihedral()
F2 = FreeGroup(2)
ZxC2 = DirectProduct(Z, C2)
ZxZ = DirectProduct(Z, Z)

ALL_FAMILIES = [Z, FiniteCyclic(4), DINF, F2, ZxC2, ZxZ, parse_group_spec("(Z x C2) x C3")]


def test_integers_zigzag_enumeration():
    assert [Z.enumerate(i) for i in range(7)] == [0, 1, -1, 2, -2, 3, -3]
    assert Z.enumerate(4) == -2
    assert Z.op(2, -5) == -3
    assert not Z.is_involution(0)
    assert not Z.is_involution(5)


def test_identity_is_index_zero_everywhere():
    for g in ALL_FAMILIES:
        assert g.enumerate(0) == g.identity


@pytest.mark.parametrize("g", ALL_FAMILIES, ids=lambda g: g.name)
def test_enumeration_round_trip(g):
    n = 200 if not g.is_finite else g.order
    for i in range(n):
        assert g.index_of(g.enumerate(i)) == i


@pytest.mark.parametrize("g", ALL_FAMILIES, ids=lambda g: g.name)
def test_group_laws_on_samples(g):
    n = 8 if not g.is_finite else min(8, g.order)
    sample = g.elements(n)
    ident = g.identity
    for a in sample:
        assert g.op(a, ident) == a
        assert g.op(ident, a) == a
        assert g.op(a, g.inv(a)) == ident
        assert g.op(g.inv(a), a) == ident
        for b in sample:
            for c in sample:
                assert g.op(g.op(a, b), c) == g.op(a, g.op(b, c))


@given(st.integers(min_value=-300, max_value=300))
def test_integers_round_trip_property(k):
    assert Z.enumerate(Z.index_of(k)) == k


def _dihedral_affine(el):
    # (k, e) acts on Z as x -> k + (-1)^e x; composition is an independent oracle
    k, e = el
    return lambda x: k + (-1) ** e * x


@given(
    st.tuples(st.integers(-20, 20), st.integers(0, 1)),
    st.tuples(st.integers(-20, 20), st.integers(0, 1)),
)
def test_dihedral_op_matches_affine_composition(a, b):
    composed = DINF.op(a, b)
    fa, fb, fc = _dihedral_affine(a), _dihedral_affine(b), _dihedral_affine(composed)
    for x in (-3, 0, 1, 7):
        assert fc(x) == fa(fb(x))


def test_dihedral_normal_form_and_involutions():
    assert DINF.op((1, 1), (2, 0)) == (-1, 1)
    for k in range(-5, 6):
        assert DINF.is_involution((k, 1))
        if k != 0:
            assert not DINF.is_involution((k, 0))
    assert not DINF.is_involution((0, 0))


def test_involution_definition():
    for g in ALL_FAMILIES:
        for a in g.elements(20):
            if g.is_involution(a):
                assert a != g.identity
                assert g.op(a, a) == g.identity


def test_product_componentwise_op():
    assert ZxC2.op((3, 1), (4, 1)) == (7, 0)
    assert ZxC2.inv((3, 1)) == (-3, 1)


def test_product_block_enumeration():
    assert [ZxC2.enumerate(i) for i in range(5)] == [
        (0, 0),
        (0, 1),
        (1, 0),
        (1, 1),
        (-1, 0),
    ]


def test_product_diagonal_round_trip():
    assert ZxZ.index_of(ZxZ.enumerate(7)) == 7
    for i in range(300):
        assert ZxZ.index_of(ZxZ.enumerate(i)) == i


def test_product_order_and_embeddings():
    zc3 = direct_product(Z, FiniteCyclic(3))
    assert zc3.order is ALEPH_0
    assert zc3.in_right_copy((0, 2))
    assert not zc3.in_right_copy((1, 2))
    assert zc3.embed_right(2) == (0, 2)


def test_free_group_enumeration_order():
    assert F2.enumerate(1) == "a"
    assert [F2.encode(F2.enumerate(i)) for i in range(5)] == ["e", "a", "A", "b", "B"]
    # length-2 block in lexicographic order over a < A < b < B, no cancellations
    words = [F2.enumerate(i) for i in range(5, 17)]
    assert words[:3] == ["aa", "ab", "aB"]
    assert "aA" not in words and "Aa" not in words


def test_free_group_reduction():
    assert F2.op("ab", "B") == "a"
    assert F2.op("a", "A") == ""
    assert F2.inv("aB") == "bA"
    assert not F2.is_involution("a")
    with pytest.raises(EncodingError):
        F2.validate("aA")


def test_finite_cyclic_bounds():
    c4 = FiniteCyclic(4)
    assert c4.op(3, 2) == 1
    with pytest.raises(EncodingError):
        c4.op(7, 1)
    with pytest.raises(IndexOutOfRange):
        c4.enumerate(4)


def test_malformed_encodings_rejected():
    with pytest.raises(EncodingError):
        Z.op("x", 1)
    with pytest.raises(EncodingError):
        ZxC2.validate((1, 2, 3))
    with pytest.raises(EncodingError):
        DINF.validate((1, 2))


def test_coset_key_integers():
    h = integer_multiples(Z, 3)
    assert coset_key(h, 7) == 1
    assert coset_key(h, 0) == 0
    assert coset_key(h, -3) == 0
    # constant on cosets, distinct across cosets
    for x in range(-6, 7):
        assert h.coset_key(x) == h.coset_key(x + 3)
    keys = {h.coset_key(x) for x in range(3)}
    assert len(keys) == 3


def test_coset_key_product():
    h = parse_subgroup_spec(ZxC2, "{0} x C2")
    assert h.coset_key((5, 1)) == (5, 0)
    assert h.coset_key(ZxC2.identity) == (0, 0)
    for v in [ZxC2.enumerate(i) for i in range(12)]:
        for m in h.enumerate_members(4):
            assert h.coset_key(v) == h.coset_key(ZxC2.op(m, v))


def test_subgroup_orders_and_indices():
    h = parse_subgroup_spec(Z, "3Z")
    assert h.order is ALEPH_0 and h.index == 3
    t = trivial_subgroup(Z)
    assert t.order == 1 and t.index is ALEPH_0
    hp = parse_subgroup_spec(ZxC2, "{0} x C2")
    assert hp.order == 2 and hp.index is ALEPH_0
    h2 = parse_subgroup_spec(parse_group_spec("Z x C4"), "2Z x C4")
    assert h2.order is ALEPH_0 and h2.index == 2
    c4 = FiniteCyclic(4)
    sub = parse_subgroup_spec(c4, "C2")
    assert sub.order == 2 and sub.index == 2
    assert sorted(sub.enumerate_members(4)) == [0, 2]


def test_subgroup_index_times_order_is_parent_order():
    from regfact.cardinals import card_mul

    cases = [
        (Z, "3Z"),
        (Z, "{0}"),
        (ZxC2, "{0} x C2"),
        (FiniteCyclic(4), "C2"),
        (parse_group_spec("Z x C4"), "2Z x C4"),
    ]
    for parent, spec in cases:
        h = parse_subgroup_spec(parent, spec)
        assert card_mul(h.index, h.order) == parent.order


def test_subgroup_closure_on_samples():
    for parent, spec in [(Z, "3Z"), (ZxC2, "{0} x C2"), (ZxC2, "2Z x C2")]:
        h = parse_subgroup_spec(parent, spec)
        members = list(h.enumerate_members(40))
        assert h.contains(parent.identity)
        for a in members[:8]:
            assert h.contains(parent.inv(a))
            for b in members[:8]:
                assert h.contains(parent.op(a, b))


def test_parse_group_specs():
    assert parse_group_spec("Z") == Z
    assert parse_group_spec("Z x C2") == ZxC2
    assert parse_group_spec("Z^2") == ZxZ
    assert parse_group_spec("(Z x C2) x C3").name == "(Z x C2) x C3"
    assert parse_group_spec("Dinf") == DINF
    assert parse_group_spec("F2") == F2
    assert parse_group_spec("C4") == FiniteCyclic(4)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_group_spec("Z x Q3")
    assert exc.value.position == 4
    with pytest.raises(ParseError):
        parse_group_spec("Z x")
    with pytest.raises(ParseError) as exc:
        parse_subgroup_spec(Z, "C2")
    assert exc.value.position == 0
    with pytest.raises(ParseError):
        parse_subgroup_spec(ZxC2, "3Z")


def test_parse_elements():
    assert ZxC2.parse("(-3, 1)") == (-3, 1)
    assert parse_elements_csv(ZxC2, "(3,0),(3,1)") == [(3, 0), (3, 1)]
    assert parse_elements_csv(Z, "5,6") == [5, 6]
    assert F2.parse("aB") == "aB"
    assert F2.parse("e") == ""
    with pytest.raises(EncodingError):
        Z.parse("1,2")
