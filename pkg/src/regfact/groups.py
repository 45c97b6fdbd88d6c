"""Computable countable groups with canonical encodings and fixed enumerations.

Elements are plain hashable Python values in a family-specific normal form
(ints for Z and cyclic groups, pairs for products and the infinite dihedral
group, reduced-word strings for free groups). Two elements are equal iff their
values, and hence their string encodings, are equal.

Every oracle fixes one enumeration: a bijection between the group and an
initial segment of the naturals with the identity at index 0. The conventions
(zig-zag for Z, length-then-lex for free groups, diagonal or block pairing for
products) are deterministic so that every construction built on top of them is
reproducible run to run.

Groups are written additively throughout, including the nonabelian families.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Optional

from .cardinals import ALEPH_0, Cardinal, card_mul, is_finite_card
from .errors import EncodingError, IndexOutOfRange, ParseError

Element = Any


def _zig(k: int) -> int:
    # 0, 1, -1, 2, -2, ...  ->  0, 1, 2, 3, 4, ...
    return 2 * k - 1 if k > 0 else -2 * k


def _unzig(n: int) -> int:
    return (n + 1) // 2 if n % 2 else -(n // 2)


def _cantor_pair(i: int, j: int) -> int:
    return (i + j) * (i + j + 1) // 2 + j


def _cantor_unpair(n: int) -> tuple[int, int]:
    w = (math.isqrt(8 * n + 1) - 1) // 2
    j = n - w * (w + 1) // 2
    return w - j, j


class GroupOracle:
    """A group with decidable equality and a fixed total enumeration.

    Oracles are immutable after construction and safe to share across
    concurrent readers; no operation mutates them.
    """

    name: str = "?"
    order: Cardinal = ALEPH_0

    # family-specific core

    def op(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inv(self, a: Element) -> Element:
        raise NotImplementedError

    @property
    def identity(self) -> Element:
        raise NotImplementedError

    def enumerate(self, i: int) -> Element:
        raise NotImplementedError

    def index_of(self, x: Element) -> int:
        raise NotImplementedError

    def validate(self, x: Element) -> None:
        """Raise EncodingError unless x is a canonical element value."""
        raise NotImplementedError

    def encode(self, x: Element) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Element:
        el, rest = self._parse_prefix(text.strip())
        if rest.strip():
            raise EncodingError(f"trailing input {rest!r} after element in {text!r}")
        self.validate(el)
        return el

    def _parse_prefix(self, text: str) -> tuple[Element, str]:
        raise NotImplementedError

    @property
    def descriptor(self) -> tuple:
        """Structural identity of the family; equal descriptors mean equal groups."""
        raise NotImplementedError

    # derived helpers

    def difference(self, x: Element, y: Element) -> Element:
        """x - y, i.e. x + (-y)."""
        return self.op(x, self.inv(y))

    def is_involution(self, a: Element) -> bool:
        self.validate(a)
        return a != self.identity and self.op(a, a) == self.identity

    @property
    def is_finite(self) -> bool:
        return is_finite_card(self.order)

    def elements(self, n: int) -> list[Element]:
        """The first n enumerated elements (clamped for finite groups)."""
        if self.is_finite:
            n = min(n, self.order)
        return [self.enumerate(i) for i in range(n)]

    def _check_index(self, i: int) -> None:
        if not isinstance(i, int) or isinstance(i, bool) or i < 0:
            raise IndexOutOfRange(f"enumeration index must be a natural number, got {i!r}")
        if self.is_finite and i >= self.order:
            raise IndexOutOfRange(f"index {i} out of range for group of order {self.order}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupOracle) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"<group {self.name}>"


def _require_int(x: Element, what: str) -> None:
    if not isinstance(x, int) or isinstance(x, bool):
        raise EncodingError(f"{what} expects an integer value, got {x!r}")


_INT_PREFIX = re.compile(r"[+-]?\d+")


def _parse_int_prefix(text: str, what: str) -> tuple[int, str]:
    m = _INT_PREFIX.match(text)
    if not m:
        raise EncodingError(f"expected an integer for {what}, got {text!r}")
    return int(m.group(0)), text[m.end():]


class Integers(GroupOracle):
    """(Z, +) enumerated 0, 1, -1, 2, -2, ..."""

    name = "Z"
    order = ALEPH_0

    def op(self, a, b):
        self.validate(a)
        self.validate(b)
        return a + b

    def inv(self, a):
        self.validate(a)
        return -a

    @property
    def identity(self):
        return 0

    def enumerate(self, i):
        self._check_index(i)
        return _unzig(i)

    def index_of(self, x):
        self.validate(x)
        return _zig(x)

    def validate(self, x):
        _require_int(x, "Z")

    def encode(self, x):
        self.validate(x)
        return str(x)

    def _parse_prefix(self, text):
        return _parse_int_prefix(text, "Z")

    @property
    def descriptor(self):
        return ("Z",)


class FiniteCyclic(GroupOracle):
    """Z/kZ with elements 0..k-1."""

    def __init__(self, k: int):
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"cyclic group order must be a positive integer, got {k!r}")
        self.k = k
        self.name = f"C{k}"
        self.order = k

    def op(self, a, b):
        self.validate(a)
        self.validate(b)
        return (a + b) % self.k

    def inv(self, a):
        self.validate(a)
        return (-a) % self.k

    @property
    def identity(self):
        return 0

    def enumerate(self, i):
        self._check_index(i)
        return i

    def index_of(self, x):
        self.validate(x)
        return x

    def validate(self, x):
        _require_int(x, self.name)
        if not 0 <= x < self.k:
            raise EncodingError(f"{self.name} elements lie in 0..{self.k - 1}, got {x}")

    def encode(self, x):
        self.validate(x)
        return str(x)

    def _parse_prefix(self, text):
        value, rest = _parse_int_prefix(text, self.name)
        return value % self.k, rest

    @property
    def descriptor(self):
        return ("C", self.k)


class InfiniteDihedral(GroupOracle):
    """The infinite dihedral group in the normal form (k, e), e in {0, 1}.

    (k, 0) is the k-th rotation and (k, 1) the reflection r^k s. Composition
    follows s r s = r^(-1), so every (k, 1) is an involution: the family with
    infinitely many involutions.
    """

    name = "Dinf"
    order = ALEPH_0

    def op(self, a, b):
        self.validate(a)
        self.validate(b)
        k1, e1 = a
        k2, e2 = b
        return (k1 + (k2 if e1 == 0 else -k2), (e1 + e2) % 2)

    def inv(self, a):
        self.validate(a)
        k, e = a
        return (-k, 0) if e == 0 else a

    @property
    def identity(self):
        return (0, 0)

    def enumerate(self, i):
        self._check_index(i)
        return (_unzig(i // 2), i % 2)

    def index_of(self, x):
        self.validate(x)
        return 2 * _zig(x[0]) + x[1]

    def validate(self, x):
        if (
            not isinstance(x, tuple)
            or len(x) != 2
            or not isinstance(x[0], int)
            or isinstance(x[0], bool)
            or x[1] not in (0, 1)
        ):
            raise EncodingError(f"Dinf elements are pairs (k, e) with e in {{0,1}}, got {x!r}")

    def encode(self, x):
        self.validate(x)
        return f"({x[0]},{x[1]})"

    def _parse_prefix(self, text):
        if not text.startswith("("):
            raise EncodingError(f"expected '(' for a Dinf element, got {text!r}")
        k, rest = _parse_int_prefix(text[1:].lstrip(), "Dinf rotation part")
        rest = rest.lstrip()
        if not rest.startswith(","):
            raise EncodingError(f"expected ',' in Dinf element near {rest!r}")
        e, rest = _parse_int_prefix(rest[1:].lstrip(), "Dinf reflection flag")
        rest = rest.lstrip()
        if not rest.startswith(")"):
            raise EncodingError(f"expected ')' in Dinf element near {rest!r}")
        return (k, e), rest[1:]

    @property
    def descriptor(self):
        return ("Dinf",)


_GENS = "abcdefghijklmnopqrstuvwxyz"


class FreeGroup(GroupOracle):
    """Free group of finite rank; elements are reduced words.

    Generators are the letters a, b, c, ...; an uppercase letter is the
    inverse of its lowercase partner. The identity is the empty word, encoded
    "e". Words are enumerated by length, then lexicographically in the
    alphabet order a < a^-1 < b < b^-1 < ...
    """

    def __init__(self, rank: int):
        if not isinstance(rank, int) or not 1 <= rank <= 26:
            raise ValueError(f"free group rank must be in 1..26, got {rank!r}")
        self.rank = rank
        self.name = f"F{rank}"
        self.order = ALEPH_0
        self.alphabet = []
        for g in _GENS[:rank]:
            self.alphabet.append(g)
            self.alphabet.append(g.upper())

    def op(self, a, b):
        self.validate(a)
        self.validate(b)
        out = list(a)
        for ch in b:
            if out and out[-1] == ch.swapcase():
                out.pop()
            else:
                out.append(ch)
        return "".join(out)

    def inv(self, a):
        self.validate(a)
        return a[::-1].swapcase()

    @property
    def identity(self):
        return ""

    def _words_of_length(self, length: int) -> int:
        if length == 0:
            return 1
        return 2 * self.rank * (2 * self.rank - 1) ** (length - 1)

    def enumerate(self, i):
        self._check_index(i)
        if i == 0:
            return ""
        length = 1
        start = 1
        while i >= start + self._words_of_length(length):
            start += self._words_of_length(length)
            length += 1
        rank_in_block = i - start
        fanout = 2 * self.rank - 1
        block = fanout ** (length - 1)
        q, rem = divmod(rank_in_block, block)
        word = [self.alphabet[q]]
        for pos in range(1, length):
            allowed = [c for c in self.alphabet if c != word[-1].swapcase()]
            block //= fanout
            q, rem = divmod(rem, block)
            word.append(allowed[q])
        return "".join(word)

    def index_of(self, x):
        self.validate(x)
        if x == "":
            return 0
        length = len(x)
        start = sum(self._words_of_length(l) for l in range(length))
        fanout = 2 * self.rank - 1
        block = fanout ** (length - 1)
        idx = self.alphabet.index(x[0]) * block
        for pos in range(1, length):
            allowed = [c for c in self.alphabet if c != x[pos - 1].swapcase()]
            block //= fanout
            idx += allowed.index(x[pos]) * block
        return start + idx

    def validate(self, x):
        if not isinstance(x, str):
            raise EncodingError(f"{self.name} elements are reduced-word strings, got {x!r}")
        for pos, ch in enumerate(x):
            if ch not in self.alphabet:
                raise EncodingError(f"letter {ch!r} not in the {self.name} alphabet")
            if pos > 0 and x[pos - 1] == ch.swapcase():
                raise EncodingError(f"word {x!r} is not reduced at position {pos}")

    def encode(self, x):
        self.validate(x)
        return x if x else "e"

    def _parse_prefix(self, text):
        if text.startswith("e") and (len(text) == 1 or text[1] not in self.alphabet):
            return "", text[1:]
        out = []
        pos = 0
        while pos < len(text) and text[pos] in self.alphabet:
            out.append(text[pos])
            pos += 1
        if not out:
            raise EncodingError(f"expected a {self.name} word, got {text!r}")
        return "".join(out), text[pos:]

    @property
    def descriptor(self):
        return ("F", self.rank)


class DirectProduct(GroupOracle):
    """Componentwise product of two oracles; elements are pairs.

    Enumeration pairs the component enumerations: Cantor diagonal when both
    factors are infinite, otherwise blocks of the finite factor (the finite
    index varies fastest). Either way index 0 is the identity pair.
    """

    def __init__(self, left: GroupOracle, right: GroupOracle):
        self.left = left
        self.right = right
        self.order = card_mul(left.order, right.order)
        self.name = f"{self._part_name(left)} x {self._part_name(right)}"

    @staticmethod
    def _part_name(g: GroupOracle) -> str:
        return f"({g.name})" if isinstance(g, DirectProduct) else g.name

    def op(self, a, b):
        self.validate(a)
        self.validate(b)
        return (self.left.op(a[0], b[0]), self.right.op(a[1], b[1]))

    def inv(self, a):
        self.validate(a)
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    @property
    def identity(self):
        return (self.left.identity, self.right.identity)

    def enumerate(self, i):
        self._check_index(i)
        if self.right.is_finite:
            il, ir = divmod(i, self.right.order)
        elif self.left.is_finite:
            ir, il = divmod(i, self.left.order)
        else:
            il, ir = _cantor_unpair(i)
        return (self.left.enumerate(il), self.right.enumerate(ir))

    def index_of(self, x):
        self.validate(x)
        il = self.left.index_of(x[0])
        ir = self.right.index_of(x[1])
        if self.right.is_finite:
            return il * self.right.order + ir
        if self.left.is_finite:
            return ir * self.left.order + il
        return _cantor_pair(il, ir)

    def validate(self, x):
        if not isinstance(x, tuple) or len(x) != 2:
            raise EncodingError(f"{self.name} elements are pairs, got {x!r}")
        self.left.validate(x[0])
        self.right.validate(x[1])

    def encode(self, x):
        self.validate(x)
        return f"({self.left.encode(x[0])},{self.right.encode(x[1])})"

    def _parse_prefix(self, text):
        if not text.startswith("("):
            raise EncodingError(f"expected '(' for a {self.name} element, got {text!r}")
        a, rest = self.left._parse_prefix(text[1:].lstrip())
        rest = rest.lstrip()
        if not rest.startswith(","):
            raise EncodingError(f"expected ',' in {self.name} element near {rest!r}")
        b, rest = self.right._parse_prefix(rest[1:].lstrip())
        rest = rest.lstrip()
        if not rest.startswith(")"):
            raise EncodingError(f"expected ')' in {self.name} element near {rest!r}")
        return (a, b), rest[1:]

    @property
    def descriptor(self):
        return ("x", self.left.descriptor, self.right.descriptor)

    # canonical embedded copies of the two components

    def embed_left(self, a: Element) -> Element:
        self.left.validate(a)
        return (a, self.right.identity)

    def embed_right(self, b: Element) -> Element:
        self.right.validate(b)
        return (self.left.identity, b)

    def in_left_copy(self, x: Element) -> bool:
        self.validate(x)
        return x[1] == self.right.identity

    def in_right_copy(self, x: Element) -> bool:
        self.validate(x)
        return x[0] == self.left.identity


def direct_product(g1: GroupOracle, g2: GroupOracle) -> DirectProduct:
    return DirectProduct(g1, g2)


@dataclass(eq=False)
class SubgroupSpec:
    """Subgroup of a parent oracle given by a membership predicate.

    Order and index are cardinals satisfying index * order = parent order
    under the countable convention. The subgroup's own enumeration filters
    the parent's.
    """

    parent: GroupOracle
    name: str
    membership: Callable[[Element], bool]
    order: Cardinal
    index: Cardinal

    def contains(self, x: Element) -> bool:
        self.parent.validate(x)
        return bool(self.membership(x))

    def enumerate_members(self, raw_limit: int) -> Iterator[Element]:
        """Members among the first raw_limit parent elements, in parent order."""
        if self.parent.is_finite:
            raw_limit = min(raw_limit, self.parent.order)
        for i in range(raw_limit):
            x = self.parent.enumerate(i)
            if self.membership(x):
                yield x

    def coset_key(self, x: Element) -> Element:
        """Canonical representative of the right coset H + x.

        Defined as the least-enumeration-index y with y - x in H. The scan
        terminates because x itself qualifies at index_of(x).
        """
        g = self.parent
        g.validate(x)
        if not self.membership(g.identity):
            raise ValueError(f"membership of {self.name} rejects the identity")
        i = 0
        while True:
            y = g.enumerate(i)
            if self.membership(g.difference(y, x)):
                return y
            i += 1

    def __repr__(self) -> str:
        return f"<subgroup {self.name} <= {self.parent.name}>"


def coset_key(h: SubgroupSpec, x: Element) -> Element:
    return h.coset_key(x)


def trivial_subgroup(g: GroupOracle) -> SubgroupSpec:
    ident = g.identity
    return SubgroupSpec(g, "{0}", lambda x: x == ident, 1, g.order)


def whole_subgroup(g: GroupOracle) -> SubgroupSpec:
    return SubgroupSpec(g, g.name, lambda x: True, g.order, 1)


def integer_multiples(g: Integers, k: int) -> SubgroupSpec:
    """kZ inside Z; k = 1 gives the whole group."""
    if not isinstance(g, Integers):
        raise ValueError("integer_multiples needs the Z oracle as parent")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"multiplier must be a positive integer, got {k!r}")
    return SubgroupSpec(g, f"{k}Z", lambda x: x % k == 0, ALEPH_0, k)


def cyclic_subgroup(g: FiniteCyclic, d: int) -> SubgroupSpec:
    """The unique subgroup of order d of a cyclic group of order k (d | k)."""
    if not isinstance(g, FiniteCyclic):
        raise ValueError("cyclic_subgroup needs a finite cyclic parent")
    if not isinstance(d, int) or d < 1 or g.k % d != 0:
        raise ValueError(f"order {d!r} does not divide {g.k}")
    step = g.k // d
    return SubgroupSpec(g, f"C{d}", lambda x: x % step == 0, d, step)


def product_subgroup(g: DirectProduct, sl: SubgroupSpec, sr: SubgroupSpec) -> SubgroupSpec:
    if not isinstance(g, DirectProduct):
        raise ValueError("product_subgroup needs a direct product parent")
    if sl.parent != g.left or sr.parent != g.right:
        raise ValueError("component subgroups do not match the product components")
    return SubgroupSpec(
        g,
        f"{sl.name} x {sr.name}",
        lambda x: sl.membership(x[0]) and sr.membership(x[1]),
        card_mul(sl.order, sr.order),
        card_mul(sl.index, sr.index),
    )


# ---------------------------------------------------------------------------
# spec mini-language
#
#   group    :=  term ('x' term)*          (left associative)
#   term     :=  '(' group ')' | ATOM
#   ATOM     :=  Z | Z^k | Ck | Dinf | Fk
#
# Subgroup specs mirror the product structure of the parent; '{0}' matches any
# component (the trivial subgroup), 'kZ' matches a Z component, 'Cd' a cyclic
# component of order divisible by d, and a family token names the whole
# component.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # "atom" | "sep" | "lparen" | "rparen"
    text: str
    pos: int


def _tokenize_spec(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "(":
            tokens.append(_Token("lparen", ch, pos))
            pos += 1
            continue
        if ch == ")":
            tokens.append(_Token("rparen", ch, pos))
            pos += 1
            continue
        start = pos
        while pos < len(text) and not text[pos].isspace() and text[pos] not in "()":
            pos += 1
        word = text[start:pos]
        if word in ("x", "×"):
            tokens.append(_Token("sep", word, start))
        else:
            tokens.append(_Token("atom", word, start))
    return tokens


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize_spec(text)
        self.pos = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError(self.text, len(self.text), "unexpected end of input")
        self.pos += 1
        return tok

    def expect_end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(self.text, tok.pos, f"unexpected token {tok.text!r}")

    # tree of ("atom", token) / ("prod", [children]) nodes

    def parse_tree(self):
        node = self.parse_term()
        children = [node]
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "sep":
                break
            self.take()
            children.append(self.parse_term())
        if len(children) == 1:
            return children[0]
        return ("prod", children)

    def parse_term(self):
        tok = self.take()
        if tok.kind == "lparen":
            inner = self.parse_tree()
            closing = self.take()
            if closing.kind != "rparen":
                raise ParseError(self.text, closing.pos, f"expected ')', got {closing.text!r}")
            return inner
        if tok.kind == "atom":
            return ("atom", tok)
        raise ParseError(self.text, tok.pos, f"expected a group token, got {tok.text!r}")


_ATOM_CYCLIC = re.compile(r"^C(\d+)$")
_ATOM_FREE = re.compile(r"^F(\d+)$")
_ATOM_LATTICE = re.compile(r"^Z\^(\d+)$")
_ATOM_MULTIPLES = re.compile(r"^(\d+)Z$")


def _group_from_atom(text: str, tok: _Token) -> GroupOracle:
    word = tok.text
    if word == "Z":
        return Integers()
    if word == "Dinf":
        return InfiniteDihedral()
    m = _ATOM_CYCLIC.match(word)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise ParseError(text, tok.pos, "cyclic order must be >= 1")
        return FiniteCyclic(k)
    m = _ATOM_FREE.match(word)
    if m:
        r = int(m.group(1))
        if not 1 <= r <= 26:
            raise ParseError(text, tok.pos, "free rank must be in 1..26")
        return FreeGroup(r)
    m = _ATOM_LATTICE.match(word)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise ParseError(text, tok.pos, "lattice dimension must be >= 1")
        group: GroupOracle = Integers()
        for _ in range(k - 1):
            group = DirectProduct(group, Integers())
        return group
    raise ParseError(text, tok.pos, f"unknown group token {word!r}")


def _group_from_tree(text: str, node) -> GroupOracle:
    if node[0] == "atom":
        return _group_from_atom(text, node[1])
    group = _group_from_tree(text, node[1][0])
    for child in node[1][1:]:
        group = DirectProduct(group, _group_from_tree(text, child))
    return group


def parse_group_spec(text: str) -> GroupOracle:
    parser = _SpecParser(text)
    tree = parser.parse_tree()
    parser.expect_end()
    return _group_from_tree(text, tree)


def _subgroup_from_atom(text: str, tok: _Token, parent: GroupOracle) -> SubgroupSpec:
    word = tok.text
    if word == "{0}":
        return trivial_subgroup(parent)
    if word == "Z":
        if isinstance(parent, Integers):
            return whole_subgroup(parent)
        raise ParseError(text, tok.pos, f"'Z' does not name a subgroup of {parent.name}")
    m = _ATOM_MULTIPLES.match(word)
    if m:
        if not isinstance(parent, Integers):
            raise ParseError(text, tok.pos, f"{word!r} needs a Z component, found {parent.name}")
        k = int(m.group(1))
        if k < 1:
            raise ParseError(text, tok.pos, "multiplier must be >= 1")
        return integer_multiples(parent, k)
    m = _ATOM_CYCLIC.match(word)
    if m:
        if not isinstance(parent, FiniteCyclic):
            raise ParseError(text, tok.pos, f"{word!r} needs a cyclic component, found {parent.name}")
        d = int(m.group(1))
        if d < 1 or parent.k % d != 0:
            raise ParseError(text, tok.pos, f"order {d} does not divide {parent.k}")
        return cyclic_subgroup(parent, d)
    if word in ("Dinf",) or _ATOM_FREE.match(word):
        probe = _group_from_atom(text, tok)
        if probe == parent:
            return whole_subgroup(parent)
        raise ParseError(text, tok.pos, f"{word!r} does not match component {parent.name}")
    raise ParseError(text, tok.pos, f"unknown subgroup token {word!r}")


def _subgroup_from_tree(text: str, node, parent: GroupOracle) -> SubgroupSpec:
    if node[0] == "atom":
        return _subgroup_from_atom(text, node[1], parent)
    children = node[1]
    # zip a left-associative product spec against a left-associative parent
    if not isinstance(parent, DirectProduct):
        raise ParseError(
            text, _first_pos(node), f"product subgroup spec does not match {parent.name}"
        )
    right = children[-1]
    left = children[0] if len(children) == 2 else ("prod", children[:-1])
    return product_subgroup(
        parent,
        _subgroup_from_tree(text, left, parent.left),
        _subgroup_from_tree(text, right, parent.right),
    )


def _first_pos(node) -> int:
    return node[1].pos if node[0] == "atom" else _first_pos(node[1][0])


def parse_subgroup_spec(parent: GroupOracle, text: str) -> SubgroupSpec:
    parser = _SpecParser(text)
    tree = parser.parse_tree()
    parser.expect_end()
    return _subgroup_from_tree(text, tree, parent)


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested inside parentheses or brackets."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append("".join(current).strip())
    return [p for p in parts if p != ""]


def parse_elements_csv(group: GroupOracle, text: str) -> list[Element]:
    return [group.parse(part) for part in split_top_level(text)]
