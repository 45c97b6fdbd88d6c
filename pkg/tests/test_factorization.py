from __future__ import annotations

import json

import pytest

from regfact.connsets import all_nonzero, explicit_set, predicate_set
from regfact.errors import (
    InvalidFactorId,
    NotAnEdge,
    UnsupportedByTheorem,
)
from regfact.export import render_dot, render_json
from regfact.factorization import build, complete_equipartite, inv_factor, trans_factor
from regfact.groups import (
    Integers,
    parse_group_spec,
    parse_subgroup_spec,
    trivial_subgroup,
)
from regfact.verify import window_elements

Z = Integers()
ZxC2 = parse_group_spec("Z x C2")
DINF = parse_group_spec("Dinf")


@pytest.fixture
def kz():
    return build(Z, all_nonzero(Z))


def test_complete_graph_over_z_has_no_involution_factors(kz):
    assert list(kz.split.s_inv.enumerate_members(64)) == []
    assert kz.base is not None


def test_factor_of_edge_translate(kz):
    assert kz.factor_of_edge(5, 6) == trans_factor(5)
    assert kz.factor_of_edge(6, 5) == trans_factor(5)


def test_partner_translate(kz):
    assert kz.partner(trans_factor(5), 2) == 11
    for v in range(-6, 7):
        for g in (-2, 0, 3):
            fid = trans_factor(g)
            p = kz.partner(fid, v)
            assert p != v
            assert kz.partner(fid, p) == v


def test_involution_factor_queries():
    f = build(ZxC2, all_nonzero(ZxC2))
    fid = f.factor_of_edge((3, 0), (3, 1))
    assert fid == inv_factor((0, 1))
    assert f.partner(fid, (7, 0)) == (7, 1)
    assert f.partner(fid, f.partner(fid, (7, 0))) == (7, 0)
    with pytest.raises(InvalidFactorId):
        f.partner(inv_factor((1, 0)), (0, 0))


def test_exactly_one_involution_id_over_z_c2():
    f = build(ZxC2, all_nonzero(ZxC2))
    window = window_elements(ZxC2, 20)
    ids = set()
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            ids.add(f.factor_of_edge(x, y))
    inv_ids = {fid for fid in ids if fid.kind == "inv"}
    assert inv_ids == {inv_factor((0, 1))}


def test_finite_free_part_rejected():
    s = predicate_set(
        Z, lambda x: x in (1, -1), symmetry_asserted=True, spec_text="pair"
    )
    with pytest.raises(UnsupportedByTheorem):
        build(Z, s)
    with pytest.raises(UnsupportedByTheorem):
        build(Z, explicit_set(Z, [1, -1]))


def test_all_involution_factorization_without_base():
    f = build(ZxC2, explicit_set(ZxC2, [(0, 1)]))
    assert f.base is None
    assert f.factor_of_edge((4, 0), (4, 1)) == inv_factor((0, 1))
    with pytest.raises(NotAnEdge):
        f.factor_of_edge((0, 0), (1, 0))
    with pytest.raises(InvalidFactorId):
        f.partner(trans_factor((0, 0)), (0, 0))


def test_equipartite_same_coset_not_an_edge():
    f = complete_equipartite(Z, parse_subgroup_spec(Z, "3Z"))
    with pytest.raises(NotAnEdge):
        f.factor_of_edge(0, 3)
    assert f.parts.coset_key(7) == 1
    f2 = complete_equipartite(ZxC2, parse_subgroup_spec(ZxC2, "{0} x C2"))
    with pytest.raises(NotAnEdge):
        f2.factor_of_edge((0, 0), (0, 1))


def test_equipartite_trivial_subgroup_is_complete_graph(kz):
    f = complete_equipartite(Z, trivial_subgroup(Z))
    window = window_elements(Z, 10)
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            assert f.factor_of_edge(x, y) == kz.factor_of_edge(x, y)


def test_equipartite_rejects_whole_group():
    from regfact.groups import whole_subgroup

    with pytest.raises(ValueError):
        complete_equipartite(Z, whole_subgroup(Z))


def test_orientation_agreement_on_window():
    for f, n in [
        (build(Z, all_nonzero(Z)), 14),
        (build(ZxC2, all_nonzero(ZxC2)), 12),
        (build(DINF, all_nonzero(DINF)), 12),
    ]:
        g = f.group
        window = window_elements(g, n)
        for i, x in enumerate(window):
            for y in window[i + 1 :]:
                if f.connection_membership(g.difference(y, x)):
                    assert f.factor_of_edge(x, y) == f.factor_of_edge(y, x)


def test_equivariance_samples(kz):
    window = window_elements(Z, 12)
    for x, y in [(0, 1), (2, -1), (-3, 5)]:
        fid = kz.factor_of_edge(x, y)
        for t in window:
            assert kz.factor_of_edge(x + t, y + t) == kz.translate_id(fid, t)


def test_translate_id_laws(kz):
    assert kz.translate_id(trans_factor(3), 4) == trans_factor(7)
    f = build(ZxC2, all_nonzero(ZxC2))
    assert f.translate_id(inv_factor((0, 1)), (5, 1)) == inv_factor((0, 1))


def test_trans_labels_have_distinct_partner_maps(kz):
    window = window_elements(Z, 24)
    seen = {}
    for g in window[:12]:
        vec = tuple(kz.partner(trans_factor(g), v) for v in window)
        assert vec not in seen.values()
        seen[g] = vec


def test_dihedral_mixed_families():
    f = build(DINF, all_nonzero(DINF))
    fid = f.factor_of_edge((2, 0), (2, 1))
    assert fid.kind == "inv"
    assert f.partner(fid, (0, 0)) == (4, 1)
    fid2 = f.factor_of_edge((1, 0), (3, 0))
    assert fid2.kind == "trans"
    assert f.partner(fid2, (1, 0)) == (3, 0)


def test_factor_table_schema_and_determinism():
    f1 = build(Z, all_nonzero(Z))
    f2 = build(Z, all_nonzero(Z))
    t1 = render_json(f1, 10)
    t2 = render_json(f2, 10)
    assert t1 == t2
    data = json.loads(t1)
    assert data["group"] == "Z"
    assert data["connection_set"] == "all-nonzero"
    assert data["window"] == 10
    row = data["edges"][0]
    assert set(row) == {"u", "v", "factor"}
    assert set(row["factor"]) == {"kind", "label"}


def test_dot_export_is_stable():
    f = build(ZxC2, all_nonzero(ZxC2))
    d1 = render_dot(f, 8)
    d2 = render_dot(build(ZxC2, all_nonzero(ZxC2)), 8)
    assert d1 == d2
    assert d1.startswith("graph factorization {")
    assert 'tooltip="inv:(0,1)"' in d1


def test_render_and_parse_ids_round_trip(kz):
    fid = kz.factor_of_edge(5, 6)
    assert kz.parse_id(kz.render_id(fid)) == fid
    f = build(ZxC2, all_nonzero(ZxC2))
    fid = f.factor_of_edge((3, 0), (3, 1))
    assert f.render_id(fid) == "inv:(0,1)"
    assert f.parse_id("inv:(0,1)") == fid


def test_fresh_copy_preserves_configuration():
    f = complete_equipartite(Z, parse_subgroup_spec(Z, "3Z"))
    f.factor_of_edge(0, 1)
    g = f.fresh_copy()
    assert g.parts.name == "3Z"
    assert g.base.cursor == 0
    assert g.factor_of_edge(0, 1) == f.factor_of_edge(0, 1)
