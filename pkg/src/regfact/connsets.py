"""Connection sets: symmetric, identity-free subsets of a group.

A connection set is given in one of three ways: as the complement of a
subgroup, as an explicit finite list, or as a raw membership predicate
carrying construction-time assertions. Symmetry is checked exhaustively for
explicit sets, structurally for complements, and by sampling for predicates;
violations discovered later surface as SymmetryViolation from any operation
that touches the offending element.

Classification decides whether the non-involution part of a set is empty,
everything, or of full group cardinality, which is the hypothesis gate for
the base-factor construction:

* complement of a subgroup: a single non-involution witness outside the
  subgroup already implies the non-involution part has the full cardinality
  of the group (complement-of-subgroup rule), so the verdict is theorem
  backed;
* predicate sets: a witness alone proves nothing about cardinality, so the
  verdict is only accepted when the constructor asserted fullness;
* explicit finite sets are classified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import SymmetryViolation
from .groups import Element, GroupOracle, SubgroupSpec

DEFAULT_CLASSIFY_BUDGET = 1024
_CONSTRUCTION_SAMPLE = 64


@dataclass(eq=False)
class ConnectionSet:
    group: GroupOracle
    kind: str  # "complement" | "explicit" | "predicate"
    spec_text: str
    subgroup: Optional[SubgroupSpec] = None
    members: Optional[frozenset] = None
    predicate: Optional[Callable[[Element], bool]] = None
    symmetry_asserted: bool = False
    full_free_asserted: bool = False
    theorem_certified: bool = False
    note: str = ""

    def contains(self, x: Element) -> bool:
        self.group.validate(x)
        if self.kind == "complement":
            return not self.subgroup.membership(x)
        if self.kind == "explicit":
            return x in self.members
        return bool(self.predicate(x))

    def checked_contains(self, x: Element) -> bool:
        """Membership plus the sampled symmetry check at the point of use."""
        r = self.contains(x)
        if r and not self.contains(self.group.inv(x)):
            raise SymmetryViolation(
                f"{self.group.encode(x)} is in {self.spec_text} but its inverse is not"
            )
        return r

    def enumerate_members(self, raw_limit: int) -> Iterator[Element]:
        """Members among the first raw_limit group elements, in group order."""
        g = self.group
        if g.is_finite:
            raw_limit = min(raw_limit, g.order)
        for i in range(raw_limit):
            x = g.enumerate(i)
            if self.contains(x):
                yield x

    def __repr__(self) -> str:
        return f"<connection set {self.spec_text} in {self.group.name}>"


def _sample_checks(cs: ConnectionSet) -> None:
    g = cs.group
    if cs.contains(g.identity):
        raise ValueError(f"connection set {cs.spec_text} contains the identity")
    limit = _CONSTRUCTION_SAMPLE
    if g.is_finite:
        limit = min(limit, g.order)
    for i in range(limit):
        cs.checked_contains(g.enumerate(i))


def complement_of_subgroup(h: SubgroupSpec, spec_text: str | None = None) -> ConnectionSet:
    return ConnectionSet(
        group=h.parent,
        kind="complement",
        spec_text=spec_text or f"complement({h.name})",
        subgroup=h,
        symmetry_asserted=True,
    )


def all_nonzero(g: GroupOracle) -> ConnectionSet:
    from .groups import trivial_subgroup

    return complement_of_subgroup(trivial_subgroup(g), spec_text="all-nonzero")


def explicit_set(g: GroupOracle, elements, spec_text: str | None = None) -> ConnectionSet:
    members = frozenset(elements)
    for x in members:
        g.validate(x)
        if x == g.identity:
            raise ValueError("connection sets must not contain the identity")
        if g.inv(x) not in members:
            raise SymmetryViolation(
                f"explicit set is not symmetric: {g.encode(x)} lacks its inverse"
            )
    text = spec_text or "list[" + ",".join(sorted(g.encode(x) for x in members)) + "]"
    return ConnectionSet(group=g, kind="explicit", spec_text=text, members=members)


def predicate_set(
    g: GroupOracle,
    fn: Callable[[Element], bool],
    *,
    symmetry_asserted: bool,
    full_free_asserted: bool = False,
    theorem_certified: bool = False,
    note: str = "",
    spec_text: str = "predicate",
) -> ConnectionSet:
    if not symmetry_asserted:
        raise ValueError("predicate connection sets require an explicit symmetry assertion")
    cs = ConnectionSet(
        group=g,
        kind="predicate",
        spec_text=spec_text,
        predicate=fn,
        symmetry_asserted=True,
        full_free_asserted=full_free_asserted,
        theorem_certified=theorem_certified,
        note=note,
    )
    _sample_checks(cs)
    return cs


@dataclass(eq=False)
class SplitSets:
    """A connection set split into its involution and involution-free parts."""

    source: ConnectionSet
    s_inv: ConnectionSet
    s_free: ConnectionSet


def split_involutions(s: ConnectionSet) -> SplitSets:
    g = s.group
    _sample_checks(s)
    s_inv = ConnectionSet(
        group=g,
        kind="predicate",
        spec_text=f"({s.spec_text}) involutions",
        predicate=lambda x: s.contains(x) and g.is_involution(x),
        symmetry_asserted=True,
    )
    s_free = ConnectionSet(
        group=g,
        kind="predicate",
        spec_text=f"({s.spec_text}) minus involutions",
        predicate=lambda x: x != g.identity and s.contains(x) and not g.is_involution(x),
        symmetry_asserted=True,
    )
    return SplitSets(source=s, s_inv=s_inv, s_free=s_free)


VERDICT_EMPTY = "empty"
VERDICT_ALL_INVOLUTIONS = "all_involutions"
VERDICT_INFINITE_FREE = "infinite_free"
VERDICT_UNKNOWN = "unknown"


@dataclass(frozen=True)
class FreePartClass:
    """Outcome of classifying the non-involution part of a connection set."""

    verdict: str
    witness: Optional[Element] = None
    theorem_backed: bool = False
    note: str = ""

    @property
    def supported(self) -> bool:
        return self.verdict != VERDICT_UNKNOWN

    def to_json(self, group: GroupOracle) -> dict:
        return {
            "verdict": self.verdict,
            "witness": None if self.witness is None else group.encode(self.witness),
            "theorem_backed": self.theorem_backed,
            "note": self.note,
        }


def classify(s: ConnectionSet, budget: int | None = None) -> FreePartClass:
    """Decide whether |S minus involutions| is 0, all of S, or full cardinality.

    Scans up to ``budget`` elements in enumeration order. For finite groups and
    explicit sets the scan is exhaustive, so the verdict is exact; otherwise a
    budget exhausted without a decisive witness yields the unknown verdict.
    """
    g = s.group
    if budget is None:
        budget = DEFAULT_CLASSIFY_BUDGET

    if s.kind == "explicit":
        if not s.members:
            return FreePartClass(VERDICT_EMPTY, note="explicit set is empty")
        free = sorted(
            (x for x in s.members if not g.is_involution(x)), key=g.index_of
        )
        if not free:
            return FreePartClass(
                VERDICT_ALL_INVOLUTIONS,
                theorem_backed=True,
                note="explicit set contains only involutions",
            )
        return FreePartClass(
            VERDICT_UNKNOWN,
            witness=free[0],
            note=(
                f"non-involution part is finite ({len(free)} elements); "
                "it must be empty or have the full cardinality of the group"
            ),
        )

    if s.kind == "complement" and s.subgroup.index == 1:
        return FreePartClass(VERDICT_EMPTY, note="complement of the whole group")

    scan = budget
    exhaustive = False
    if g.is_finite and g.order <= budget:
        scan = g.order
        exhaustive = True

    members_seen = 0
    first_witness = None
    for i in range(scan):
        x = g.enumerate(i)
        if not s.checked_contains(x):
            continue
        members_seen += 1
        if g.is_involution(x):
            continue
        first_witness = x
        break

    if first_witness is not None:
        if s.kind == "complement":
            if g.is_finite:
                return FreePartClass(
                    VERDICT_UNKNOWN,
                    witness=first_witness,
                    note="finite group with a nonempty non-involution part",
                )
            return FreePartClass(
                VERDICT_INFINITE_FREE,
                witness=first_witness,
                theorem_backed=True,
                note=(
                    "complement-of-subgroup rule: one non-involution outside the "
                    "subgroup implies the non-involution part has full cardinality"
                ),
            )
        # predicate kind
        if g.is_finite:
            return FreePartClass(
                VERDICT_UNKNOWN,
                witness=first_witness,
                note="finite group with a nonempty non-involution part",
            )
        if s.full_free_asserted:
            return FreePartClass(
                VERDICT_INFINITE_FREE,
                witness=first_witness,
                theorem_backed=s.theorem_certified,
                note=(
                    "witness found; full cardinality asserted by the set's constructor"
                    + (f" ({s.note})" if s.note else "")
                ),
            )
        return FreePartClass(
            VERDICT_UNKNOWN,
            witness=first_witness,
            note=(
                "witness found but the non-involution part is not certified to have "
                "full cardinality"
            ),
        )

    if exhaustive:
        if members_seen == 0:
            return FreePartClass(VERDICT_EMPTY, note="set is empty (exhaustive scan)")
        return FreePartClass(
            VERDICT_ALL_INVOLUTIONS,
            theorem_backed=True,
            note="every member is an involution (exhaustive scan)",
        )
    return FreePartClass(
        VERDICT_UNKNOWN,
        note=f"no non-involution member among the first {scan} group elements",
    )


def parse_connection_spec(group: GroupOracle, text: str) -> ConnectionSet:
    """Parse the connection-set mini-language.

    Accepted forms: ``all-nonzero``, ``complement(<subgroup>)``,
    ``list[<elements>]`` and the named builtin ``pred:odd`` (Z only).
    """
    from .errors import ParseError
    from .groups import Integers, parse_elements_csv, parse_subgroup_spec

    t = text.strip()
    if t == "all-nonzero":
        return all_nonzero(group)
    if t.startswith("complement(") and t.endswith(")"):
        sub = parse_subgroup_spec(group, t[len("complement(") : -1])
        return complement_of_subgroup(sub)
    if t.startswith("list[") and t.endswith("]"):
        try:
            elements = parse_elements_csv(group, t[len("list[") : -1])
        except Exception as exc:
            raise ParseError(text, len("list["), f"bad element list: {exc}") from None
        return explicit_set(group, elements, spec_text=t)
    if t == "pred:odd":
        if not isinstance(group, Integers):
            raise ParseError(text, 0, "pred:odd is only defined over Z")
        return predicate_set(
            group,
            lambda x: x % 2 == 1,
            symmetry_asserted=True,
            full_free_asserted=True,
            note="odd integers form an infinite involution-free set",
            spec_text="pred:odd",
        )
    raise ParseError(text, 0, f"unknown connection-set spec {t!r}")
