"""Vertex-regular 1-factorizations of Cayley graphs, assembled lazily.

A factorization handle answers two queries without ever materializing a
factor: ``factor_of_edge`` labels any edge of the graph, and ``partner``
evaluates the perfect matching of a given factor at a vertex. Factors come in
two families:

* ``inv:s`` for each involution s in the connection set: the edge set
  {x, s + x}, which is a single translation-invariant 1-factor;
* ``trans:g`` for each group element g: the right translate by g of one base
  1-factor whose difference list realizes every non-involution of S exactly
  once. Uniqueness of the realizing edge is what makes edge labeling
  well-defined, and it also forces distinct g to give distinct factors.

The base factor is grown on demand by the greedy builder; a query drives
construction no further than the enumeration index of the element or
difference it needs. All queries serialize through one lock so that handles
can be shared between threads; frozen snapshots of the base support lock-free
readers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any, Optional

from .connsets import (
    ConnectionSet,
    FreePartClass,
    SplitSets,
    VERDICT_INFINITE_FREE,
    VERDICT_UNKNOWN,
    classify,
    complement_of_subgroup,
    split_involutions,
)
from .errors import InvalidFactorId, NotAnEdge, UnsupportedByTheorem
from .greedy import DEFAULT_SCAN_LIMIT, BaseFactorBuilder, FrozenBase
from .groups import Element, GroupOracle, SubgroupSpec


@dataclass(frozen=True)
class FactorId:
    """Label of one 1-factor.

    kind "inv" or "trans" labels carry a group element; kind "lifted" carries
    the FactorId of an inner factorization; kind "table" carries an opaque
    string from an imported factor table.
    """

    kind: str
    label: Any

    def __repr__(self) -> str:
        return f"FactorId({self.kind}, {self.label!r})"


def inv_factor(s: Element) -> FactorId:
    return FactorId("inv", s)


def trans_factor(g: Element) -> FactorId:
    return FactorId("trans", g)


def lifted_factor(inner: FactorId) -> FactorId:
    return FactorId("lifted", inner)


class RegularFactorization:
    """Lazy handle for the 1-factorization of Cay[group : conn]."""

    kind_tag = "regular"

    def __init__(
        self,
        group: GroupOracle,
        conn: ConnectionSet,
        split: SplitSets,
        classification: FreePartClass,
        base: Optional[BaseFactorBuilder],
        provenance: str,
        parts: Optional[SubgroupSpec] = None,
        scan_limit: int = DEFAULT_SCAN_LIMIT,
        classify_budget: Optional[int] = None,
    ):
        self.group = group
        self.conn = conn
        self.split = split
        self.classification = classification
        self.base = base
        self.provenance = provenance
        self.parts = parts
        self.scan_limit = scan_limit
        self.classify_budget = classify_budget
        self._gate = threading.Lock()
        self._translate_queries = 0

    # -- queries ------------------------------------------------------------

    def connection_membership(self, d: Element) -> bool:
        return self.conn.checked_contains(d)

    def factor_of_edge(self, x: Element, y: Element) -> FactorId:
        g = self.group
        g.validate(x)
        g.validate(y)
        if x == y:
            raise NotAnEdge("a vertex is never adjacent to itself")
        d = g.difference(y, x)
        if not self.conn.checked_contains(d):
            raise NotAnEdge(
                f"difference {g.encode(d)} of ({g.encode(x)},{g.encode(y)}) "
                f"is outside {self.conn.spec_text}"
            )
        if g.is_involution(d):
            return inv_factor(d)
        base = self._require_base()
        with self._gate:
            base.ensure_difference(d)
            a, b = base.edge_with_difference(d)
            self._translate_queries += 1
            audit = __debug__ or self._translate_queries % 64 == 1
        t = g.op(g.inv(a), x)
        # the base edge (a, b) translated by t must land on (x, y);
        # checked on every query normally, sampled under -O
        if audit and g.op(b, t) != y:
            raise AssertionError(
                f"translate postcondition violated for ({g.encode(x)},{g.encode(y)})"
            )
        return trans_factor(t)

    def partner(self, fid: FactorId, v: Element) -> Element:
        g = self.group
        g.validate(v)
        if fid.kind == "inv":
            s = fid.label
            g.validate(s)
            if not (g.is_involution(s) and self.conn.contains(s)):
                raise InvalidFactorId(
                    f"{g.encode(s)} is not an involution of {self.conn.spec_text}"
                )
            return g.op(s, v)
        if fid.kind == "trans":
            t = fid.label
            g.validate(t)
            base = self._require_base()
            with self._gate:
                p = base.partner(g.difference(v, t))
            return g.op(p, t)
        raise InvalidFactorId(f"unsupported factor kind {fid.kind!r} for this handle")

    def translate_id(self, fid: FactorId, t: Element) -> FactorId:
        """How factor labels transform under right translation by t."""
        g = self.group
        g.validate(t)
        if fid.kind == "inv":
            return fid
        if fid.kind == "trans":
            return trans_factor(g.op(fid.label, t))
        raise InvalidFactorId(f"unsupported factor kind {fid.kind!r} for this handle")

    # -- plumbing -----------------------------------------------------------

    def _require_base(self) -> BaseFactorBuilder:
        if self.base is None:
            raise InvalidFactorId(
                "this factorization has no translate factors: the connection set "
                "has no non-involution part"
            )
        return self.base

    def freeze_base(self) -> Optional[FrozenBase]:
        if self.base is None:
            return None
        with self._gate:
            return self.base.freeze()

    def base_views(self) -> list[tuple[str, FrozenBase, ConnectionSet]]:
        snap = self.freeze_base()
        if snap is None:
            return []
        return [("base", snap, self.split.s_free)]

    @property
    def connection_text(self) -> str:
        return self.conn.spec_text

    def describe(self) -> str:
        return f"Cay[{self.group.name} : {self.connection_text}]"

    def render_id(self, fid: FactorId) -> str:
        if fid.kind in ("inv", "trans"):
            return f"{fid.kind}:{self.group.encode(fid.label)}"
        raise InvalidFactorId(f"cannot render factor kind {fid.kind!r} here")

    def id_to_json(self, fid: FactorId) -> dict:
        if fid.kind in ("inv", "trans"):
            return {"kind": fid.kind, "label": self.group.encode(fid.label)}
        raise InvalidFactorId(f"cannot render factor kind {fid.kind!r} here")

    def parse_id(self, text: str) -> FactorId:
        kind, sep, rest = text.partition(":")
        if not sep or kind not in ("inv", "trans"):
            raise InvalidFactorId(f"expected 'inv:<element>' or 'trans:<element>', got {text!r}")
        return FactorId(kind, self.group.parse(rest))

    def fresh_copy(self) -> "RegularFactorization":
        out = build(
            self.group,
            self.conn,
            scan_limit=self.scan_limit,
            classify_budget=self.classify_budget,
        )
        out.parts = self.parts
        return out

    def __repr__(self) -> str:
        return f"<1-factorization of {self.describe()}>"


def build(
    group: GroupOracle,
    s: ConnectionSet,
    *,
    scan_limit: int = DEFAULT_SCAN_LIMIT,
    classify_budget: Optional[int] = None,
) -> RegularFactorization:
    """Construct the regular 1-factorization handle for Cay[group : s].

    The connection set must classify as empty, all-involutions, or as having a
    non-involution part of full group cardinality; anything else (in
    particular a finite nonzero non-involution part) raises
    UnsupportedByTheorem.
    """
    if s.group != group:
        raise ValueError("connection set belongs to a different group")
    cls = classify(s, classify_budget)
    if cls.verdict == VERDICT_UNKNOWN:
        raise UnsupportedByTheorem(
            f"cannot factorize Cay[{group.name} : {s.spec_text}]: {cls.note}"
        )
    split = split_involutions(s)
    base = None
    if cls.verdict == VERDICT_INFINITE_FREE:
        base = BaseFactorBuilder(group, split.s_free, scan_limit)
        provenance = (
            "involution factors plus right translates of a difference-injective "
            f"base factor ({cls.note})"
        )
    else:
        provenance = f"single-involution factor family ({cls.note})"
    return RegularFactorization(
        group,
        s,
        split,
        cls,
        base,
        provenance,
        scan_limit=scan_limit,
        classify_budget=classify_budget,
    )


def complete_equipartite(
    group: GroupOracle,
    h: SubgroupSpec,
    *,
    scan_limit: int = DEFAULT_SCAN_LIMIT,
    classify_budget: Optional[int] = None,
) -> RegularFactorization:
    """Regular 1-factorization of the complete equipartite graph Cay[G : G \\ H].

    Parts are the right cosets of h, exposed through ``h.coset_key``; pairs
    inside one part are non-edges. The part count is h.index and the part size
    h.order.
    """
    if h.parent != group:
        raise ValueError("subgroup does not live in the given group")
    if h.index == 1:
        raise ValueError("a proper subgroup is required: the complement would be empty")
    s = complement_of_subgroup(h)
    f = build(group, s, scan_limit=scan_limit, classify_budget=classify_budget)
    f.parts = h
    return f
