"""Streaming construction of a 1-factor whose difference set is exactly U.

The builder processes group elements in enumeration order and keeps an
ascending chain of finite partial matchings. After processing element g the
following hold, and they are what every downstream query relies on:

* g is matched;
* if g is in U, both g and -g are realized as differences of the matching;
* every realized difference lies in U and is realized by exactly one edge.

Each step runs up to two greedy scans. Phase A matches g itself: take the
least-enumeration-index z that is unmatched and whose difference z - g lies
in U and is still unused (the mirrored difference g - z is then automatically
admissible because U and the used set are symmetric). Phase B realizes g as a
difference: take the least-index y with both y and g + y unmatched and add the
edge {y, g + y}.

The choice of the least-index candidate is a fixed determinism rule; any
candidate would do mathematically. When U has the full cardinality of the
group the excluded sets are finite, so both scans provably terminate; the
scan limit turns that cardinality argument into a budgeted search with a hard
error for sets that are too sparse in practice.

Builders are single-owner mutable state. ``freeze`` produces an immutable
snapshot that can be shared across concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .connsets import ConnectionSet
from .errors import (
    DifferenceAbsent,
    GroupFinite,
    InvolutionInU,
    NotInU,
    SearchBudgetExceeded,
)
from .groups import Element, GroupOracle

DEFAULT_SCAN_LIMIT = 100_000


@dataclass(frozen=True)
class StepRecord:
    """What one step did: the processed element and the two optional scans."""

    index: int
    g: Element
    phase_a: Optional[tuple[Element, int]]  # (z, candidates scanned)
    phase_b: Optional[tuple[Element, int]]  # (y, candidates scanned)
    edges: tuple[tuple[Element, Element], ...]


@dataclass(frozen=True)
class FrozenBase:
    """Immutable snapshot of a builder: edges in creation order, used differences, cursor."""

    edges: tuple[tuple[Element, Element], ...]
    used_diffs: frozenset
    cursor: int


class BaseFactorBuilder:
    def __init__(self, group: GroupOracle, u: ConnectionSet, scan_limit: int = DEFAULT_SCAN_LIMIT):
        if group.is_finite:
            raise GroupFinite(
                f"base-factor construction needs an infinite group, got {group.name}"
            )
        if u.group != group:
            raise ValueError("difference pool belongs to a different group")
        if u.contains(group.identity):
            raise ValueError("difference pool must not contain the identity")
        if scan_limit < 1:
            raise ValueError("scan limit must be positive")
        self.group = group
        self.u = u
        self.scan_limit = scan_limit
        self.matching: dict = {}
        self.used_diffs: set = set()
        self.cursor = 0
        self.trace: list[StepRecord] = []
        self._edges: list[tuple[Element, Element]] = []
        self._pair_for: dict = {}
        self._elements: list[Element] = []  # cached enumeration prefix
        self._floor = 0  # every index below this is already matched

    # membership in U with the lazy involution and symmetry checks

    def _in_u(self, x: Element) -> bool:
        if not self.u.checked_contains(x):
            return False
        if self.group.is_involution(x):
            raise InvolutionInU(x, self.group.encode(x))
        return True

    def _element_at(self, i: int) -> Element:
        cache = self._elements
        while len(cache) <= i:
            cache.append(self.group.enumerate(len(cache)))
        return cache[i]

    def _scan_start(self) -> int:
        # indices below the floor are all matched, so the least-index rule may
        # begin there; the floor only ever advances
        while self._element_at(self._floor) in self.matching:
            self._floor += 1
        return self._floor

    def _add_edge(self, a: Element, b: Element) -> None:
        d = self.group.difference(b, a)
        nd = self.group.inv(d)
        self.matching[a] = b
        self.matching[b] = a
        self.used_diffs.add(d)
        self.used_diffs.add(nd)
        self._pair_for[d] = (a, b)
        self._pair_for[nd] = (b, a)
        self._edges.append((a, b))

    def _scan_phase_a(self, gel: Element) -> tuple[Element, int]:
        g = self.group
        neg = g.inv(gel)
        start = self._scan_start()
        for scanned, i in enumerate(range(start, start + self.scan_limit), 1):
            z = self._element_at(i)
            if z in self.matching:
                continue
            d = g.op(z, neg)  # z - gel
            if d in self.used_diffs:
                continue
            if not self._in_u(d):
                continue
            return z, scanned
        raise SearchBudgetExceeded(
            self.scan_limit, "phase A", f"no partner for {g.encode(gel)}"
        )

    def _scan_phase_b(self, gel: Element) -> tuple[Element, int]:
        g = self.group
        start = self._scan_start()
        for scanned, i in enumerate(range(start, start + self.scan_limit), 1):
            y = self._element_at(i)
            if y in self.matching:
                continue
            if g.op(gel, y) in self.matching:
                continue
            return y, scanned
        raise SearchBudgetExceeded(
            self.scan_limit, "phase B", f"no fresh pair for difference {g.encode(gel)}"
        )

    def step(self) -> StepRecord:
        """Process the element at the cursor and advance."""
        g = self.group
        gel = g.enumerate(self.cursor)
        edges = []
        phase_a = None
        if gel not in self.matching:
            z, scanned = self._scan_phase_a(gel)
            self._add_edge(gel, z)
            edges.append((gel, z))
            phase_a = (z, scanned)
        phase_b = None
        if gel not in self.used_diffs and self._in_u(gel):
            y, scanned = self._scan_phase_b(gel)
            self._add_edge(y, g.op(gel, y))
            edges.append((y, g.op(gel, y)))
            phase_b = (y, scanned)
        record = StepRecord(self.cursor, gel, phase_a, phase_b, tuple(edges))
        self.trace.append(record)
        self.cursor += 1
        return record

    def ensure_vertex(self, v: Element) -> None:
        """Step until v is matched; a no-op when it already is."""
        g = self.group
        g.validate(v)
        if v in self.matching:
            return
        stop = g.index_of(v)
        while v not in self.matching and self.cursor <= stop:
            self.step()
        if v not in self.matching:
            raise AssertionError(f"internal: {g.encode(v)} unmatched after its own step")

    def ensure_difference(self, d: Element) -> None:
        """Step until +/-d is a used difference; requires d in U."""
        g = self.group
        g.validate(d)
        if not self._in_u(d):
            raise NotInU(f"{g.encode(d)} is not in the difference pool {self.u.spec_text}")
        if d in self.used_diffs:
            return
        stop = g.index_of(d)
        while d not in self.used_diffs and self.cursor <= stop:
            self.step()
        if d not in self.used_diffs:
            raise AssertionError(f"internal: {g.encode(d)} unused after its own step")

    def edge_with_difference(self, d: Element) -> tuple[Element, Element]:
        """The unique matched pair (a, b) with b - a = d; call ensure_difference first."""
        self.group.validate(d)
        pair = self._pair_for.get(d)
        if pair is None:
            raise DifferenceAbsent(f"difference {self.group.encode(d)} not realized yet")
        return pair

    def partner(self, v: Element) -> Element:
        self.ensure_vertex(v)
        return self.matching[v]

    def is_matched(self, v: Element) -> bool:
        return v in self.matching

    def freeze(self) -> FrozenBase:
        return FrozenBase(tuple(self._edges), frozenset(self.used_diffs), self.cursor)

    def trace_lines(self) -> list[str]:
        return [format_step(self.group, rec) for rec in self.trace]


def new_builder(
    group: GroupOracle, u: ConnectionSet, scan_limit: int = DEFAULT_SCAN_LIMIT
) -> BaseFactorBuilder:
    return BaseFactorBuilder(group, u, scan_limit)


def format_step(group: GroupOracle, rec: StepRecord) -> str:
    line = f"step {rec.index}: g={group.encode(rec.g)}"
    if rec.phase_a is not None:
        line += f" phaseA z={group.encode(rec.phase_a[0])}"
    if rec.phase_b is not None:
        line += f" phaseB y={group.encode(rec.phase_b[0])}"
    return line
