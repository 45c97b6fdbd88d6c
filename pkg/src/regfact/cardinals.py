"""Cardinal arithmetic for countable structures.

Orders and indices in this package are either positive integers or the single
infinite cardinal ``ALEPH_0``. Division follows the convention used for part
counts of equipartite graphs: when ``m`` is infinite, ``m' | m`` means
``m' <= m`` (always true here) and the quotient ``m / m'`` is ``m`` itself.
"""

from __future__ import annotations

from typing import Union

from .errors import DivisibilityViolation, ParseError


class _Aleph0:
    """Singleton for the countably infinite cardinal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "aleph0"


ALEPH_0 = _Aleph0()

Cardinal = Union[int, _Aleph0]


def is_finite_card(c: Cardinal) -> bool:
    return isinstance(c, int)


def card_mul(a: Cardinal, b: Cardinal) -> Cardinal:
    if is_finite_card(a) and is_finite_card(b):
        return a * b
    return ALEPH_0


def card_divides(d: Cardinal, m: Cardinal) -> bool:
    """Whether d | m under the countable-cardinal convention."""
    if not is_finite_card(m):
        return True
    if not is_finite_card(d):
        return False
    return d >= 1 and m % d == 0


def card_div(m: Cardinal, d: Cardinal) -> Cardinal:
    """Quotient m / d; defined to be m whenever m is infinite."""
    if not is_finite_card(m):
        return ALEPH_0
    if not card_divides(d, m):
        raise DivisibilityViolation(f"{card_str(d)} does not divide {card_str(m)}")
    return m // d


def require_divides(d: Cardinal, m: Cardinal, what: str) -> None:
    if not card_divides(d, m):
        raise DivisibilityViolation(
            f"{what}: {card_str(d)} does not divide {card_str(m)}"
        )


def card_str(c: Cardinal) -> str:
    return "aleph0" if not is_finite_card(c) else str(c)


def parse_cardinal(text: str) -> Cardinal:
    t = text.strip().lower()
    if t in ("aleph0", "inf", "infinite", "countable"):
        return ALEPH_0
    try:
        value = int(t)
    except ValueError:
        raise ParseError(text, 0, "expected a positive integer or 'aleph0'") from None
    if value < 1:
        raise ParseError(text, 0, "cardinal parameters must be >= 1")
    return value
