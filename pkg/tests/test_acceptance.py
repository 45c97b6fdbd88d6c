"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside the pytest verdicts.
"""

from __future__ import annotations

import time
from pathlib import Path

import pytest

from regfact.cardinals import ALEPH_0, card_div
from regfact.cli import main
from regfact.connsets import all_nonzero, predicate_set, split_involutions
from regfact.errors import (
    DivisibilityViolation,
    InvolutionInU,
    NotAnEdge,
    UnsupportedByTheorem,
)
from regfact.factorization import build, complete_equipartite, trans_factor
from regfact.greedy import new_builder
from regfact.groups import (
    FiniteCyclic,
    InfiniteDihedral,
    Integers,
    parse_group_spec,
    parse_subgroup_spec,
    trivial_subgroup,
)
from regfact.subfact import nested
from regfact.verify import (
    check_part_closed,
    oracle_partition,
    verify_window,
    window_elements,
)

DATA = Path(__file__).parent / "data"

Z = Integers()
ZxC2 = parse_group_spec("Z x C2")
DINF = InfiniteDihedral()


def _report_line(number: int, passed: bool, text: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] criterion {number}: {text}")


def _window_ids(handle, n):
    g = handle.group
    window = window_elements(g, n)
    table = {}
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            if handle.connection_membership(g.difference(y, x)):
                table[(x, y)] = handle.factor_of_edge(x, y)
    return window, table


def test_criterion_1_complete_graph_over_z():
    passed = False
    try:
        start = time.perf_counter()
        code = main(
            ["verify", "--group", "Z", "--set", "all-nonzero", "--window", "64"]
        )
        elapsed = time.perf_counter() - start
        assert code == 0
        assert elapsed < 5.0, f"verification took {elapsed:.2f}s"
        report = verify_window(build(Z, all_nonzero(Z)), 64)
        assert report.passed and len(report.checks) == 5

        builder = new_builder(Z, split_involutions(all_nonzero(Z)).s_free)
        for _ in range(12):
            builder.step()
        golden = (DATA / "z_allnonzero_trace12.txt").read_text()
        assert "\n".join(builder.trace_lines()) + "\n" == golden
        head = [frozenset(e) for e in builder.freeze().edges[:5]]
        assert head == [
            frozenset({0, 1}),
            frozenset({2, -1}),
            frozenset({3, 5}),
            frozenset({-2, 4}),
            frozenset({-3, 6}),
        ]
        passed = True
    finally:
        _report_line(1, passed, "complete graph over Z, window 64 + golden trace")


def test_criterion_2_equipartite_k3_aleph0():
    passed = False
    try:
        handle = complete_equipartite(Z, parse_subgroup_spec(Z, "3Z"))
        report = verify_window(handle, 48)
        assert report.passed, report.format_table()
        assert check_part_closed(Z, lambda x: x % 3 == 0, 48)
        window = window_elements(Z, 48)
        for i, x in enumerate(window):
            for y in window[i + 1 :]:
                if (x - y) % 3 == 0:
                    with pytest.raises(NotAnEdge):
                        handle.factor_of_edge(x, y)
        passed = True
    finally:
        _report_line(2, passed, "K_3[aleph0] over (Z, 3Z), window 48")


def test_criterion_3_equipartite_k_aleph0_2():
    passed = False
    try:
        h = parse_subgroup_spec(ZxC2, "{0} x C2")
        assert h.contains((0, 1))
        handle = complete_equipartite(ZxC2, h)
        report = verify_window(handle, 40)
        assert report.passed, report.format_table()
        assert list(handle.split.s_inv.enumerate_members(200)) == []
        _, table = _window_ids(handle, 40)
        assert table and all(fid.kind == "trans" for fid in table.values())
        passed = True
    finally:
        _report_line(3, passed, "K_aleph0[2] over (Z x C2, {0} x C2): all trans ids")


def test_criterion_4_mixed_involution_case():
    passed = False
    try:
        handle = build(ZxC2, all_nonzero(ZxC2))
        report = verify_window(handle, 40)
        assert report.passed, report.format_table()
        equivariance = [c for c in report.checks if c.name == "check4_translation_equivariance"]
        assert equivariance and equivariance[0].passed
        _, table = _window_ids(handle, 40)
        inv_ids = {fid for fid in table.values() if fid.kind == "inv"}
        assert len(inv_ids) == 1
        passed = True
    finally:
        _report_line(4, passed, "mixed case over Z x C2: exactly one involution factor")


def test_criterion_5_infinite_involution_family():
    passed = False
    try:
        handle = build(DINF, all_nonzero(DINF))
        report = verify_window(handle, 40)
        assert report.passed, report.format_table()
        _, table = _window_ids(handle, 40)
        inv_ids = {fid for fid in table.values() if fid.kind == "inv"}
        trans_ids = {fid for fid in table.values() if fid.kind == "trans"}
        assert len(inv_ids) >= 10
        assert len(trans_ids) >= 10
        passed = True
    finally:
        _report_line(5, passed, "Dinf: >= 10 involution and >= 10 translate factors")


def test_criterion_6_subfactorization():
    passed = False
    try:
        c2 = FiniteCyclic(2)
        inner = complete_equipartite(c2, trivial_subgroup(c2))
        handle = nested(inner, ALEPH_0, 1)
        report = verify_window(handle, 32)
        assert report.passed, report.format_table()
        containment = [c for c in report.checks if c.name == "check7_subfactor_containment"]
        assert containment and containment[0].passed
        # every window translate of the inner edge lies in the one lifted factor
        window, table = _window_ids(handle, 32)
        lifted = {e: fid for e, fid in table.items() if fid.kind == "lifted"}
        assert lifted
        assert len(set(lifted.values())) == 1
        for (x, y), fid in lifted.items():
            assert x[0] == y[0]
        passed = True
    finally:
        _report_line(6, passed, "K_2 factorization embedded by nested(m=aleph0, n=1)")


def test_criterion_7_determinism_oracle():
    passed = False
    try:
        assert oracle_partition(build(Z, all_nonzero(Z)), 16)
        assert oracle_partition(build(ZxC2, all_nonzero(ZxC2)), 16)
        passed = True
    finally:
        _report_line(7, passed, "independent rebuilds produce identical factor tables")


def test_criterion_8_negative_paths():
    passed = False
    try:
        pair = predicate_set(
            Z, lambda x: x in (1, -1), symmetry_asserted=True, spec_text="pair"
        )
        with pytest.raises(UnsupportedByTheorem):
            build(Z, pair)
        code = main(["construct", "--group", "Z", "--set", "list[1,-1]"])
        assert code == 3

        with pytest.raises(DivisibilityViolation):
            card_div(4, 3)  # m' = 3 does not divide m = 4
        c2 = FiniteCyclic(2)
        inner = complete_equipartite(c2, trivial_subgroup(c2))
        with pytest.raises(DivisibilityViolation):
            nested(inner, 5, ALEPH_0)

        with pytest.raises(InvolutionInU) as exc:
            new_builder(ZxC2, all_nonzero(ZxC2)).step()
        assert exc.value.witness == (0, 1)
        passed = True
    finally:
        _report_line(8, passed, "unsupported sets, bad divisibility, involution in U")


def test_criterion_9_translate_labels_unique():
    passed = False
    try:
        handle = build(Z, all_nonzero(Z))
        window = window_elements(Z, 32)
        maps = []
        for g in window_elements(Z, 16):
            maps.append(tuple(handle.partner(trans_factor(g), v) for v in window))
        assert len(set(maps)) == 16
        passed = True
    finally:
        _report_line(9, passed, "16 translate factors have pairwise distinct partner maps")
