"""Ordinals below epsilon_0 in hereditary Cantor normal form."""

from __future__ import annotations

from functools import total_ordering
from typing import Iterator, Union

IntOrOrdinal = Union[int, "Ordinal"]


class OrdinalError(ValueError):
    pass


@total_ordering
class Ordinal:
    """An ordinal ``w^e1*c1 + w^e2*c2 + ...`` with ``e1 > e2 > ...``.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs; the empty tuple
    is zero.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: tuple[tuple["Ordinal", int], ...] = ()):
        terms = tuple(terms)
        for i, (exp, coeff) in enumerate(terms):
            if not isinstance(exp, Ordinal):
                raise OrdinalError(f"exponent must be an Ordinal, got {exp!r}")
            if not isinstance(coeff, int) or coeff < 1:
                raise OrdinalError(f"coefficient must be a positive int, got {coeff!r}")
            if i and not exp < terms[i - 1][0]:
                raise OrdinalError("exponents must be strictly decreasing")
        self._terms = terms
        self._hash = hash(terms)

    @classmethod
    def of(cls, value: IntOrOrdinal) -> "Ordinal":
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot convert {value!r} to Ordinal")
        if value < 0:
            raise OrdinalError("ordinals are non-negative")
        return cls(((ZERO, value),)) if value else ZERO

    @classmethod
    def omega_power(cls, exponent: IntOrOrdinal, coeff: int = 1) -> "Ordinal":
        return cls(((cls.of(exponent), coeff),))

    @property
    def terms(self) -> tuple[tuple["Ordinal", int], ...]:
        return self._terms

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_finite(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0].is_zero())

    def is_successor(self) -> bool:
        return bool(self._terms) and self._terms[-1][0].is_zero()

    def is_limit(self) -> bool:
        return bool(self._terms) and not self._terms[-1][0].is_zero()

    def to_int(self) -> int:
        if not self.is_finite():
            raise OrdinalError(f"{self} is infinite")
        return self._terms[0][1] if self._terms else 0

    def leading_exponent(self) -> "Ordinal":
        if not self._terms:
            raise OrdinalError("zero has no leading exponent")
        return self._terms[0][0]

    # -- comparison ---------------------------------------------------------

    def _key(self) -> tuple:
        return tuple((exp._key(), coeff) for exp, coeff in self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.of(other) if other >= 0 else None
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: IntOrOrdinal) -> bool:
        other = Ordinal.of(other)
        for (ea, ca), (eb, cb) in zip(self._terms, other._terms):
            if ea != eb:
                return ea < eb
            if ca != cb:
                return ca < cb
        return len(self._terms) < len(other._terms)

    def sort_key(self) -> tuple:
        """Nested tuple whose lexicographic order agrees with ordinal order."""
        return self._key()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: IntOrOrdinal) -> "Ordinal":
        other = Ordinal.of(other)
        if not other._terms:
            return self
        lead = other._terms[0][0]
        kept = [t for t in self._terms if not t[0] < lead]
        if kept and kept[-1][0] == lead:
            merged = (lead, kept[-1][1] + other._terms[0][1])
            return Ordinal(tuple(kept[:-1]) + (merged,) + other._terms[1:])
        return Ordinal(tuple(kept) + other._terms)

    def __radd__(self, other: int) -> "Ordinal":
        return Ordinal.of(other) + self

    def times(self, n: int) -> "Ordinal":
        """Right multiplication by a natural number."""
        if n < 0:
            raise OrdinalError("negative multiplier")
        if n == 0 or not self._terms:
            return ZERO
        (exp, coeff), rest = self._terms[0], self._terms[1:]
        return Ordinal(((exp, coeff * n),) + rest)

    def times_omega(self) -> "Ordinal":
        """Right multiplication by omega."""
        if not self._terms:
            return ZERO
        return Ordinal.omega_power(self._terms[0][0] + 1)

    def successor(self) -> "Ordinal":
        return self + 1

    def predecessor(self) -> "Ordinal":
        if not self.is_successor():
            raise OrdinalError(f"{self} has no predecessor")
        *head, (exp, coeff) = self._terms
        if coeff == 1:
            return Ordinal(tuple(head))
        return Ordinal(tuple(head) + ((exp, coeff - 1),))

    def fundamental_sequence(self) -> Iterator["Ordinal"]:
        """A strictly increasing sequence cofinal in a limit ordinal."""
        if not self.is_limit():
            raise OrdinalError(f"{self} is not a limit ordinal")
        *head, (exp, coeff) = self._terms
        base = Ordinal(tuple(head) + (((exp, coeff - 1),) if coeff > 1 else ()))
        if exp.is_successor():
            lower = exp.predecessor()
            k = 1
            while True:
                yield base + Ordinal.omega_power(lower, k)
                k += 1
        else:
            for e in exp.fundamental_sequence():
                yield base + Ordinal.omega_power(e)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self._terms:
            if exp.is_zero():
                parts.append(str(coeff))
                continue
            if exp == 1:
                text = "w"
            elif exp.is_finite() or (len(exp._terms) == 1 and exp._terms[0][1] == 1):
                text = f"w^{exp}"
            else:
                text = f"w^({exp})"
            parts.append(text if coeff == 1 else f"{text}*{coeff}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal({self})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def parse_ordinal(text: str) -> Ordinal:
    """Parse ``int | w | w^x | x*int | x+x`` (with parentheses) into CNF."""
    parser = _OrdinalParser(text)
    value = parser.sum()
    parser.skip_ws()
    if parser.pos != len(text):
        raise OrdinalError(f"unexpected {text[parser.pos:]!r} at position {parser.pos}")
    return value


class _OrdinalParser:
    def __init__(self, text: str, pos: int = 0):
        self.text = text
        self.pos = pos

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def sum(self) -> Ordinal:
        value = self.product()
        while self.peek() == "+":
            self.pos += 1
            value = value + self.product()
        return value

    def product(self) -> Ordinal:
        value = self.power()
        while self.peek() == "*":
            self.pos += 1
            value = value.times(self.integer())
        return value

    def power(self) -> Ordinal:
        ch = self.peek()
        if ch == "w":
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                return Ordinal.omega_power(self.power())
            return OMEGA
        if ch == "(":
            self.pos += 1
            value = self.sum()
            if self.peek() != ")":
                raise OrdinalError(f"expected ')' at position {self.pos}")
            self.pos += 1
            return value
        return Ordinal.of(self.integer())

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise OrdinalError(f"expected an integer at position {start}")
        return int(self.text[start:self.pos])
