"""Embedding a given regular 1-factorization inside a larger one.

``lift`` stretches an inner factorization over H across a direct product
P x H: each inner factor F becomes the union of its translates by the P
coordinate, so the lifted factor matches (p, h) with (p, partner_F(h)). The
result is vertex-regular under the whole product and contains the inner
factorization as a subfactorization.

``nested`` composes that lift with a fresh ambient factorization to turn an
inner factorization of a complete equipartite graph with parameters (m', n')
into one of K_m[n], for any cardinals with m' | m, n' | n and m * n infinite.
The divisibility convention is the countable one: every finite or countable
cardinal divides aleph0, and quotients by it are aleph0 again. Writing
P = A x B with |A| = m/m' and |B| = n/n', the ambient group is G = P x H
and the new part stabilizer is L = B x K, which has size (n/n') * n' = n and
index (m/m') * m' = m. The edge sets split as

    (G minus (H union L))  and  (H minus K)  partition  G minus L,

with the first factorized from scratch and the second covered by the lift.
The product coordinate guarantees a full-cardinality supply of
non-involutions for the ambient construction, so it is certified when built.

``TableFactorization`` adapts an explicit factor table over a finite group to
the same handle interface, so externally supplied factorizations can be
embedded too.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .cardinals import (
    Cardinal,
    card_div,
    card_mul,
    card_str,
    is_finite_card,
    require_divides,
)
from .connsets import explicit_set, predicate_set
from .errors import (
    FinitenessViolation,
    InvalidFactorId,
    NotAnEdge,
    ShapeMismatch,
)
from .factorization import (
    DEFAULT_SCAN_LIMIT,
    FactorId,
    RegularFactorization,
    build,
    lifted_factor,
)
from .groups import (
    DirectProduct,
    Element,
    FiniteCyclic,
    GroupOracle,
    Integers,
    SubgroupSpec,
)


class LiftedFactorization:
    """A factorization of Cay[P x H : embedded S_H] lifted from one over H."""

    kind_tag = "lifted"

    def __init__(self, h_fact, complement_group: GroupOracle, ambient: Optional[DirectProduct] = None):
        if ambient is None:
            ambient = DirectProduct(complement_group, h_fact.group)
        else:
            if not isinstance(ambient, DirectProduct) or ambient.right != h_fact.group:
                raise ShapeMismatch(
                    "the inner factorization's group must be the right component "
                    f"of the ambient product, got {ambient!r}"
                )
            if ambient.left != complement_group:
                raise ShapeMismatch(
                    "the complement group must be the left component of the ambient product"
                )
        self.group = ambient
        self.complement_group = complement_group
        self.inner = h_fact

    def connection_membership(self, d: Element) -> bool:
        self.group.validate(d)
        if d[0] != self.complement_group.identity:
            return False
        return self.inner.connection_membership(d[1])

    def factor_of_edge(self, x: Element, y: Element) -> FactorId:
        g = self.group
        g.validate(x)
        g.validate(y)
        if x[0] != y[0]:
            raise NotAnEdge(
                "lifted factors only join vertices with equal first components"
            )
        return lifted_factor(self.inner.factor_of_edge(x[1], y[1]))

    def partner(self, fid: FactorId, v: Element) -> Element:
        self.group.validate(v)
        if fid.kind != "lifted":
            raise InvalidFactorId(f"expected a lifted factor id, got kind {fid.kind!r}")
        return (v[0], self.inner.partner(fid.label, v[1]))

    def translate_id(self, fid: FactorId, t: Element) -> FactorId:
        self.group.validate(t)
        if fid.kind != "lifted":
            raise InvalidFactorId(f"expected a lifted factor id, got kind {fid.kind!r}")
        return lifted_factor(self.inner.translate_id(fid.label, t[1]))

    def base_views(self):
        return self.inner.base_views()

    @property
    def connection_text(self) -> str:
        return f"lifted({self.inner.connection_text})"

    def describe(self) -> str:
        return f"Cay[{self.group.name} : {self.connection_text}]"

    def render_id(self, fid: FactorId) -> str:
        if fid.kind != "lifted":
            raise InvalidFactorId(f"cannot render factor kind {fid.kind!r} here")
        return "lifted:" + self.inner.render_id(fid.label)

    def id_to_json(self, fid: FactorId) -> dict:
        return {"kind": "lifted", "label": self.inner.render_id(fid.label)}

    def parse_id(self, text: str) -> FactorId:
        kind, sep, rest = text.partition(":")
        if not sep or kind != "lifted":
            raise InvalidFactorId(f"expected 'lifted:<inner id>', got {text!r}")
        return lifted_factor(self.inner.parse_id(rest))

    def fresh_copy(self) -> "LiftedFactorization":
        return LiftedFactorization(self.inner.fresh_copy(), self.complement_group, self.group)

    def __repr__(self) -> str:
        return f"<lifted 1-factorization of {self.describe()}>"


def lift(h_fact, g1: GroupOracle, ambient: Optional[DirectProduct] = None) -> LiftedFactorization:
    """Lift an H-regular factorization to (g1 x H)-regularity.

    When ``ambient`` is given it must be the direct product g1 x H; otherwise
    the product is constructed here.
    """
    return LiftedFactorization(h_fact, g1, ambient)


class NestedFactorization:
    """An ambient factorization plus a lifted inner one, partitioning G \\ L."""

    kind_tag = "nested"

    def __init__(
        self,
        group: DirectProduct,
        ambient: RegularFactorization,
        lifted: LiftedFactorization,
        l_subgroup: SubgroupSpec,
        params: dict,
    ):
        self.group = group
        self.ambient = ambient
        self.lifted = lifted
        self.l_subgroup = l_subgroup
        self.params = params

    @property
    def inner(self):
        return self.lifted.inner

    def connection_membership(self, d: Element) -> bool:
        return self.lifted.connection_membership(d) or self.ambient.connection_membership(d)

    def factor_of_edge(self, x: Element, y: Element) -> FactorId:
        g = self.group
        g.validate(x)
        g.validate(y)
        if x == y:
            raise NotAnEdge("a vertex is never adjacent to itself")
        d = g.difference(y, x)
        if self.lifted.connection_membership(d):
            return self.lifted.factor_of_edge(x, y)
        if self.ambient.connection_membership(d):
            return self.ambient.factor_of_edge(x, y)
        raise NotAnEdge(
            f"difference {g.encode(d)} lies in the part stabilizer {self.l_subgroup.name}"
        )

    def partner(self, fid: FactorId, v: Element) -> Element:
        if fid.kind == "lifted":
            return self.lifted.partner(fid, v)
        return self.ambient.partner(fid, v)

    def translate_id(self, fid: FactorId, t: Element) -> FactorId:
        if fid.kind == "lifted":
            return self.lifted.translate_id(fid, t)
        return self.ambient.translate_id(fid, t)

    def partition_views(self):
        """The two connection parts and their intended union, for auditing."""
        l_spec = self.l_subgroup

        def total(d: Element) -> bool:
            return not l_spec.membership(d)

        return (
            (self.ambient.connection_text, self.ambient.connection_membership),
            (self.lifted.connection_text, self.lifted.connection_membership),
            (f"complement({l_spec.name})", total),
        )

    def containment_views(self):
        """Inner-translate detection and inner labeling, for the containment audit."""
        inner = self.inner

        def inner_key(x: Element, y: Element) -> FactorId:
            return inner.factor_of_edge(x[1], y[1])

        return self.lifted.connection_membership, inner_key

    def base_views(self):
        return self.ambient.base_views() + self.lifted.base_views()

    @property
    def connection_text(self) -> str:
        return f"complement({self.l_subgroup.name})"

    def describe(self) -> str:
        return f"Cay[{self.group.name} : {self.connection_text}] with embedded {self.inner.describe()}"

    def render_id(self, fid: FactorId) -> str:
        if fid.kind == "lifted":
            return self.lifted.render_id(fid)
        return self.ambient.render_id(fid)

    def id_to_json(self, fid: FactorId) -> dict:
        if fid.kind == "lifted":
            return self.lifted.id_to_json(fid)
        return self.ambient.id_to_json(fid)

    def parse_id(self, text: str) -> FactorId:
        if text.startswith("lifted:"):
            return self.lifted.parse_id(text)
        return self.ambient.parse_id(text)

    def fresh_copy(self) -> "NestedFactorization":
        p = self.params
        return nested(
            self.inner.fresh_copy(),
            p["m"],
            p["n"],
            g1=p["g1"],
            l1=p["l1"],
            scan_limit=p["scan_limit"],
            classify_budget=p["classify_budget"],
        )

    def __repr__(self) -> str:
        return f"<nested 1-factorization of {self.describe()}>"


def default_group_of_order(c: Cardinal) -> GroupOracle:
    """Canonical group choice for a cardinal: Z when infinite, cyclic when finite."""
    if not is_finite_card(c):
        return Integers()
    return FiniteCyclic(c)


def _inner_parts(h_fact) -> SubgroupSpec:
    parts = getattr(h_fact, "parts", None)
    if parts is None and getattr(h_fact, "conn", None) is not None:
        if h_fact.conn.kind == "complement":
            parts = h_fact.conn.subgroup
    if parts is None:
        raise ShapeMismatch(
            "the inner factorization must be over the complement of a known subgroup "
            "(its parts) to be embedded"
        )
    return parts


def nested(
    h_fact,
    m: Cardinal,
    n: Cardinal,
    *,
    g1: Optional[GroupOracle] = None,
    l1: Optional[GroupOracle] = None,
    scan_limit: int = DEFAULT_SCAN_LIMIT,
    classify_budget: Optional[int] = None,
) -> NestedFactorization:
    """Embed an inner equipartite factorization into one of K_m[n]."""
    k_spec = _inner_parts(h_fact)
    h_group = h_fact.group
    m_inner: Cardinal = k_spec.index
    n_inner: Cardinal = k_spec.order
    require_divides(m_inner, m, "part count")
    require_divides(n_inner, n, "part size")
    if is_finite_card(card_mul(m, n)):
        raise FinitenessViolation(
            f"m * n = {card_str(card_mul(m, n))} is finite; the target graph must be infinite"
        )
    if m_inner == 1:
        raise ShapeMismatch("the inner factorization has no edges to embed (one part)")

    n_quot = card_div(n, n_inner)
    m_quot = card_div(m, m_inner)
    g1 = g1 if g1 is not None else default_group_of_order(n_quot)
    l1 = l1 if l1 is not None else default_group_of_order(m_quot)
    if g1.order != n_quot:
        raise ValueError(f"g1 must have order {card_str(n_quot)}, got {card_str(g1.order)}")
    if l1.order != m_quot:
        raise ValueError(f"l1 must have order {card_str(m_quot)}, got {card_str(l1.order)}")

    # The part stabilizer of K_m[n] must have size n = (n/n') * n' and index
    # m = (m/m') * m', so the order-(n/n') factor g1 joins K inside it while
    # the order-(m/m') factor l1 multiplies the part count.
    p = DirectProduct(l1, g1)
    lifted = lift(h_fact, p)
    group = lifted.group  # (l1 x g1) x H

    l1_id = l1.identity
    p_id = p.identity

    def l_membership(x: Element) -> bool:
        return x[0][0] == l1_id and k_spec.membership(x[1])

    l_subgroup = SubgroupSpec(
        parent=group,
        name=f"{{0}} x {g1.name} x {k_spec.name}",
        membership=l_membership,
        order=card_mul(g1.order, n_inner),
        index=card_mul(l1.order, m_inner),
    )

    def ambient_membership(x: Element) -> bool:
        in_h = x[0] == p_id
        return not in_h and not l_membership(x)

    ambient_cs = predicate_set(
        group,
        ambient_membership,
        symmetry_asserted=True,
        full_free_asserted=True,
        theorem_certified=True,
        note=(
            "complement of a union of two subgroups; the product coordinate "
            "supplies non-involutions of full cardinality"
        ),
        spec_text=f"complement({{0}} x {{0}} x {h_group.name} union {l_subgroup.name})",
    )
    ambient = build(group, ambient_cs, scan_limit=scan_limit, classify_budget=classify_budget)

    params = {
        "m": m,
        "n": n,
        "m_inner": m_inner,
        "n_inner": n_inner,
        "g1": g1,
        "l1": l1,
        "scan_limit": scan_limit,
        "classify_budget": classify_budget,
    }
    return NestedFactorization(group, ambient, lifted, l_subgroup, params)


class TableFactorization:
    """A finite factorization given by an explicit factor table.

    The table must describe a full 1-factorization of Cay[H : S] for a finite
    group H: every factor a perfect matching covering all of H, the factors
    partitioning all edges, and the family closed under right translation
    (which yields the translation action on labels). The complement of S must
    be a subgroup; it becomes the parts subgroup.
    """

    kind_tag = "table"

    def __init__(self, group: GroupOracle, edges_by_label: dict[str, set]):
        if not group.is_finite:
            raise ShapeMismatch("factor tables are only supported over finite groups")
        self.group = group
        self.edges_by_label = {
            label: frozenset(frozenset(e) for e in edges)
            for label, edges in edges_by_label.items()
        }
        self._validate_and_index()

    # -- construction-time validation ----------------------------------------

    def _validate_and_index(self) -> None:
        g = self.group
        everyone = g.elements(g.order)
        diffs = set()
        self._partner_maps: dict[str, dict] = {}
        self._edge_to_label: dict[frozenset, str] = {}
        for label, edges in self.edges_by_label.items():
            pmap: dict = {}
            for e in edges:
                pair = list(e)
                if len(pair) != 2:
                    raise ShapeMismatch(f"factor {label!r} has a non-edge entry {pair!r}")
                a, b = pair
                g.validate(a)
                g.validate(b)
                if a in pmap or b in pmap:
                    raise ShapeMismatch(f"factor {label!r} covers a vertex twice")
                pmap[a] = b
                pmap[b] = a
                d = g.difference(b, a)
                diffs.add(d)
                diffs.add(g.inv(d))
                key = frozenset(e)
                if key in self._edge_to_label:
                    raise ShapeMismatch(f"edge {sorted(map(g.encode, e))} appears in two factors")
                self._edge_to_label[key] = label
            if set(pmap) != set(everyone):
                raise ShapeMismatch(f"factor {label!r} is not a perfect matching of the group")
            self._partner_maps[label] = pmap

        self.conn = explicit_set(
            g, diffs, spec_text="table-differences"
        ) if diffs else None
        if self.conn is None:
            raise ShapeMismatch("the factor table has no edges")

        # every edge of Cay[H : S] must be covered
        for i, a in enumerate(everyone):
            for b in everyone[i + 1 :]:
                d = g.difference(b, a)
                covered = frozenset((a, b)) in self._edge_to_label
                if self.conn.contains(d) != covered:
                    raise ShapeMismatch(
                        f"edge ({g.encode(a)},{g.encode(b)}) breaks the partition of the table"
                    )

        # complement of S must be a subgroup: the parts
        k_members = frozenset(x for x in everyone if not self.conn.contains(x))
        for a in k_members:
            for b in k_members:
                if g.difference(a, b) not in k_members:
                    raise ShapeMismatch("the non-edge differences of the table are not a subgroup")
        self.parts = SubgroupSpec(
            parent=g,
            name="table-parts",
            membership=lambda x, members=k_members: x in members,
            order=len(k_members),
            index=g.order // len(k_members),
        )

        # right translation must permute the factors; record the label action
        self._translate_map: dict[tuple[str, Element], str] = {}
        by_edgeset = {edges: label for label, edges in self.edges_by_label.items()}
        for label, edges in self.edges_by_label.items():
            for t in everyone:
                shifted = frozenset(
                    frozenset((g.op(a, t), g.op(b, t))) for a, b in (tuple(e) for e in edges)
                )
                target = by_edgeset.get(shifted)
                if target is None:
                    raise ShapeMismatch(
                        f"translating factor {label!r} by {g.encode(t)} leaves the table: "
                        "the factorization is not vertex-regular"
                    )
                self._translate_map[(label, t)] = target

    # -- handle interface -----------------------------------------------------

    def connection_membership(self, d: Element) -> bool:
        return self.conn.checked_contains(d)

    def factor_of_edge(self, x: Element, y: Element) -> FactorId:
        g = self.group
        g.validate(x)
        g.validate(y)
        label = self._edge_to_label.get(frozenset((x, y)))
        if label is None:
            raise NotAnEdge(
                f"({g.encode(x)},{g.encode(y)}) is not an edge of the table factorization"
            )
        return FactorId("table", label)

    def partner(self, fid: FactorId, v: Element) -> Element:
        self.group.validate(v)
        if fid.kind != "table" or fid.label not in self._partner_maps:
            raise InvalidFactorId(f"unknown table factor {fid!r}")
        return self._partner_maps[fid.label][v]

    def translate_id(self, fid: FactorId, t: Element) -> FactorId:
        self.group.validate(t)
        if fid.kind != "table":
            raise InvalidFactorId(f"unknown table factor {fid!r}")
        return FactorId("table", self._translate_map[(fid.label, t)])

    def base_views(self):
        return []

    @property
    def connection_text(self) -> str:
        return self.conn.spec_text

    def describe(self) -> str:
        return f"Cay[{self.group.name} : {self.connection_text}] (table)"

    def render_id(self, fid: FactorId) -> str:
        return f"table:{fid.label}"

    def id_to_json(self, fid: FactorId) -> dict:
        return {"kind": "table", "label": str(fid.label)}

    def parse_id(self, text: str) -> FactorId:
        kind, sep, rest = text.partition(":")
        if not sep or kind != "table":
            raise InvalidFactorId(f"expected 'table:<label>', got {text!r}")
        return FactorId("table", rest)

    def fresh_copy(self) -> "TableFactorization":
        return self  # immutable

    def __repr__(self) -> str:
        return f"<table 1-factorization of {self.describe()}>"


def table_from_json(group: GroupOracle, data: Any) -> TableFactorization:
    """Build a TableFactorization from the factor-table JSON schema."""
    if isinstance(data, str):
        data = json.loads(data)
    edges_by_label: dict[str, set] = {}
    try:
        rows = data["edges"]
    except (TypeError, KeyError):
        raise ShapeMismatch("factor-table JSON needs an 'edges' array") from None
    for row in rows:
        u = group.parse(row["u"])
        v = group.parse(row["v"])
        factor = row["factor"]
        label = f"{factor['kind']}:{factor['label']}"
        edges_by_label.setdefault(label, set()).add(frozenset((u, v)))
    return TableFactorization(group, edges_by_label)
