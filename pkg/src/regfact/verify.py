"""Brute-force verification of factorization handles on finite windows.

A window is the set of the first N enumerated group elements. Verification
re-derives every claimed property from scratch on the window, independently of
the internal bookkeeping of the handle under test:

1. edge coverage: every window pair whose difference lies in the connection
   set receives a factor id, identical from both orientations, and every
   other pair raises NotAnEdge;
2. per-factor matchings: within each factor id that occurred, the partner map
   restricted to the window is a fixed-point-free partial involution and no
   vertex is matched twice;
3. uniqueness: each edge's id is recomputed through an independent
   re-derivation (a linear scan of a frozen base snapshot for the realizing
   difference, or first-principles involution and lift rules), and must agree;
4. equivariance: translating an edge by any window element transforms its id
   by the stated label law (trans labels shift, involution labels are fixed,
   lifted labels translate in the inner factorization);
5. the base factor's difference multiset has every multiplicity equal to one
   and is contained in the involution-free part of the connection set.

Nested handles additionally get:

6. the two connection parts are disjoint and their union is exactly the
   stated complement, checked exhaustively on window differences;
7. containment: window translates of inner edges all land in the lifted
   factor of their inner id, one factor per inner id, and nothing else
   receives a lifted id.

Failures never raise; they become report entries carrying a concrete
counterexample. Checks read frozen snapshots only after all driving queries
have run, and the report lists checks sorted by name so repeated runs are
byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import NotAnEdge, RegfactError
from .factorization import FactorId
from .groups import Element, GroupOracle


def window_elements(group: GroupOracle, n: int) -> list[Element]:
    if n < 0:
        raise ValueError("window size must be nonnegative")
    if group.is_finite:
        n = min(n, group.order)
    return [group.enumerate(i) for i in range(n)]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: Optional[str] = None


@dataclass
class WindowReport:
    subject: str
    window: int
    checks: list[CheckResult] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "subject": self.subject,
            "window": self.window,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "counterexample": c.counterexample}
                for c in self.checks
            ],
            "stats": self.stats,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    def format_table(self) -> str:
        lines = [f"window verification: {self.subject}  N={self.window}"]
        lines.append(
            "note: edges are pairs of window elements; partners may exit the window"
        )
        width = max(len(c.name) for c in self.checks) if self.checks else 4
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            line = f"  {c.name.ljust(width)}  {status}"
            if c.counterexample:
                line += f"  [{c.counterexample}]"
            lines.append(line)
        stats = "  ".join(f"{k}={v}" for k, v in sorted(self.stats.items()))
        lines.append(f"stats: {stats}")
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _edge_str(g: GroupOracle, x: Element, y: Element) -> str:
    return f"({g.encode(x)},{g.encode(y)})"


def _check_edge_coverage(handle, window, table) -> CheckResult:
    g = handle.group
    name = "check1_edge_coverage_orientation"
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            d = g.difference(y, x)
            try:
                member = handle.connection_membership(d)
            except RegfactError as exc:
                return CheckResult(name, False, f"{_edge_str(g, x, y)}: {exc}")
            if member:
                try:
                    id1 = handle.factor_of_edge(x, y)
                    id2 = handle.factor_of_edge(y, x)
                except RegfactError as exc:
                    return CheckResult(
                        name, False, f"{_edge_str(g, x, y)}: expected a factor id, got {exc}"
                    )
                if id1 != id2:
                    return CheckResult(
                        name,
                        False,
                        f"{_edge_str(g, x, y)}: orientations disagree, {id1} vs {id2}",
                    )
                table[(x, y)] = id1
            else:
                try:
                    unexpected = handle.factor_of_edge(x, y)
                except NotAnEdge:
                    continue
                except RegfactError as exc:
                    return CheckResult(
                        name, False, f"{_edge_str(g, x, y)}: expected NotAnEdge, got {exc}"
                    )
                return CheckResult(
                    name,
                    False,
                    f"{_edge_str(g, x, y)}: non-edge received factor id {unexpected}",
                )
    return CheckResult(name, True)


def _check_partner_involution(handle, window, table) -> CheckResult:
    g = handle.group
    name = "check2_partner_involution"
    in_window = set(window)
    touched = sorted(set(table.values()), key=lambda f: (f.kind, str(f.label)))
    for fid in touched:
        partner_of: dict = {}
        for v in window:
            try:
                p = handle.partner(fid, v)
            except RegfactError as exc:
                return CheckResult(name, False, f"partner({fid}, {g.encode(v)}): {exc}")
            if p == v:
                return CheckResult(
                    name, False, f"factor {fid}: fixed point at {g.encode(v)}"
                )
            # the involution condition is checked on the window: partners that
            # exit it are only held to fixed-point-freeness and injectivity
            if p in in_window and handle.partner(fid, p) != v:
                return CheckResult(
                    name,
                    False,
                    f"factor {fid}: partner not involutory at {g.encode(v)} "
                    f"(goes to {g.encode(p)}, which does not return)",
                )
            if p in partner_of and partner_of[p] != v:
                return CheckResult(
                    name,
                    False,
                    f"factor {fid}: vertex {g.encode(p)} matched twice "
                    f"({g.encode(partner_of[p])} and {g.encode(v)})",
                )
            partner_of[p] = v
    return CheckResult(name, True)


def _rederive_id(handle, x: Element, y: Element, snapshots: dict) -> FactorId | str:
    """Recompute the factor id of an edge from structure, not from the handle's
    dispatch tables. Returns a string describing the failure when the structure
    itself is inconsistent (missing or duplicated realizing edge)."""
    g = handle.group
    tag = handle.kind_tag
    if tag == "regular":
        d = g.difference(y, x)
        if g.is_involution(d):
            return FactorId("inv", d)
        key = id(handle)
        if key not in snapshots:
            # index the frozen edge list once, recomputing every difference
            snap = handle.freeze_base()
            index = None
            if snap is not None:
                index = {}
                for a, b in snap.edges:
                    for u, w in ((a, b), (b, a)):
                        index.setdefault(g.difference(w, u), []).append((u, w))
            snapshots[key] = index
        index = snapshots[key]
        if index is None:
            return "no base snapshot for a non-involution difference"
        hits = index.get(d, [])
        if len(hits) != 1:
            return f"difference {g.encode(d)} realized by {len(hits)} base edges"
        a, b = hits[0]
        return FactorId("trans", g.op(g.inv(a), x))
    if tag == "lifted":
        if x[0] != y[0]:
            return "lifted edge with unequal first components"
        inner = _rederive_id(handle.inner, x[1], y[1], snapshots)
        if isinstance(inner, str):
            return inner
        return FactorId("lifted", inner)
    if tag == "nested":
        d = g.difference(y, x)
        if handle.lifted.connection_membership(d):
            return _rederive_id(handle.lifted, x, y, snapshots)
        return _rederive_id(handle.ambient, x, y, snapshots)
    if tag == "table":
        hits = [
            label
            for label, edges in handle.edges_by_label.items()
            if frozenset((x, y)) in edges
        ]
        if len(hits) != 1:
            return f"table edge covered {len(hits)} times"
        return FactorId("table", hits[0])
    return f"cannot re-derive ids for handle kind {tag!r}"


def _check_unique_rederivation(handle, window, table) -> CheckResult:
    g = handle.group
    name = "check3_unique_id_rederivation"
    snapshots: dict = {}
    for (x, y), fid in table.items():
        derived = _rederive_id(handle, x, y, snapshots)
        if isinstance(derived, str):
            return CheckResult(name, False, f"{_edge_str(g, x, y)}: {derived}")
        if derived != fid:
            return CheckResult(
                name,
                False,
                f"{_edge_str(g, x, y)}: handle says {fid}, re-derivation says {derived}",
            )
    return CheckResult(name, True)


def _check_equivariance(handle, window, table) -> CheckResult:
    g = handle.group
    name = "check4_translation_equivariance"
    for (x, y), fid in table.items():
        for t in window:
            try:
                expected = handle.translate_id(fid, t)
                actual = handle.factor_of_edge(g.op(x, t), g.op(y, t))
            except RegfactError as exc:
                return CheckResult(
                    name, False, f"{_edge_str(g, x, y)} + {g.encode(t)}: {exc}"
                )
            if actual != expected:
                return CheckResult(
                    name,
                    False,
                    f"{_edge_str(g, x, y)} + {g.encode(t)}: expected {expected}, got {actual}",
                )
    return CheckResult(name, True)


def _check_base_differences(handle) -> CheckResult:
    name = "check5_base_difference_multiset"
    for label, snap, free_set in handle.base_views():
        g = free_set.group
        counts: dict = {}
        for a, b in snap.edges:
            for u, w in ((a, b), (b, a)):
                d = g.difference(w, u)
                counts[d] = counts.get(d, 0) + 1
        for d, c in counts.items():
            if c != 1:
                return CheckResult(
                    name, False, f"{label}: difference {g.encode(d)} has multiplicity {c}"
                )
            if not free_set.contains(d):
                return CheckResult(
                    name,
                    False,
                    f"{label}: difference {g.encode(d)} outside {free_set.spec_text}",
                )
    return CheckResult(name, True)


def _check_connection_partition(handle, window) -> CheckResult:
    g = handle.group
    name = "check6_connection_partition"
    (amb_text, amb), (lif_text, lif), (tot_text, tot) = handle.partition_views()
    ident = g.identity
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            d = g.difference(y, x)
            if d == ident:
                continue
            in_amb = amb(d)
            in_lif = lif(d)
            in_tot = tot(d)
            if in_amb and in_lif:
                return CheckResult(
                    name,
                    False,
                    f"difference {g.encode(d)} claimed by both {amb_text} and {lif_text}",
                )
            if (in_amb or in_lif) != in_tot:
                return CheckResult(
                    name,
                    False,
                    f"difference {g.encode(d)}: parts say {in_amb or in_lif}, "
                    f"{tot_text} says {in_tot}",
                )
    return CheckResult(name, True)


def _check_subfactor_containment(handle, window, table) -> CheckResult:
    g = handle.group
    name = "check7_subfactor_containment"
    lifted_member, inner_key = handle.containment_views()
    outer_of_inner: dict = {}
    for (x, y), fid in table.items():
        d = g.difference(y, x)
        if lifted_member(d):
            if fid.kind != "lifted":
                return CheckResult(
                    name,
                    False,
                    f"inner-translate edge {_edge_str(g, x, y)} got non-lifted id {fid}",
                )
            try:
                key = inner_key(x, y)
            except RegfactError as exc:
                return CheckResult(name, False, f"{_edge_str(g, x, y)}: {exc}")
            prev = outer_of_inner.get(key)
            if prev is not None and prev != fid:
                return CheckResult(
                    name,
                    False,
                    f"inner factor {key} split across outer factors {prev} and {fid}",
                )
            outer_of_inner[key] = fid
        else:
            if fid.kind == "lifted":
                return CheckResult(
                    name,
                    False,
                    f"ambient edge {_edge_str(g, x, y)} got lifted id {fid}",
                )
    # distinct inner factors must not share an outer factor
    seen_outer: dict = {}
    for inner_id, outer_id in outer_of_inner.items():
        if outer_id in seen_outer and seen_outer[outer_id] != inner_id:
            return CheckResult(
                name,
                False,
                f"outer factor {outer_id} contains both {seen_outer[outer_id]} and {inner_id}",
            )
        seen_outer[outer_id] = inner_id
    return CheckResult(name, True)


def verify_window(handle, n: int) -> WindowReport:
    """Run every applicable check on the first n enumerated vertices."""
    if n < 2:
        raise ValueError("window verification needs N >= 2")
    g = handle.group
    window = window_elements(g, n)
    table: dict = {}

    checks = [_check_edge_coverage(handle, window, table)]
    checks.append(_check_partner_involution(handle, window, table))
    checks.append(_check_equivariance(handle, window, table))
    # freeze only after all driving queries above
    checks.append(_check_unique_rederivation(handle, window, table))
    checks.append(_check_base_differences(handle))
    if handle.kind_tag == "nested":
        checks.append(_check_connection_partition(handle, window))
        checks.append(_check_subfactor_containment(handle, window, table))

    checks.sort(key=lambda c: c.name)
    stats = {
        "edges_examined": len(table),
        "factors_touched": len(set(table.values())),
        "max_builder_cursor": max(
            (snap.cursor for _, snap, _ in handle.base_views()), default=0
        ),
    }
    return WindowReport(handle.describe(), len(window), checks, stats)


def check_part_closed(group: GroupOracle, part: Callable[[Element], bool], n: int) -> bool:
    """Window form of part-closure: differences of part members stay in the part."""
    if not part(group.identity):
        raise ValueError("the part membership must contain the identity")
    members = [x for x in window_elements(group, n) if part(x)]
    for x in members:
        for y in members:
            if not part(group.difference(y, x)):
                return False
    return True


def oracle_partition(handle, n: int) -> bool:
    """Determinism oracle: a freshly built identical handle labels every window
    edge identically."""
    first = _full_table(handle, n)
    second = _full_table(handle.fresh_copy(), n)
    return first == second


def _full_table(handle, n: int) -> dict:
    g = handle.group
    window = window_elements(g, n)
    table = {}
    for i, x in enumerate(window):
        for y in window[i + 1 :]:
            if handle.connection_membership(g.difference(y, x)):
                table[(x, y)] = handle.factor_of_edge(x, y)
    return table
