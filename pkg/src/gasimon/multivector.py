"""Sparse multivectors with exact integer coefficients."""

from __future__ import annotations

import json
import re
from collections.abc import Iterable, Mapping

from .blade import BitString, blade_product, reverse_sign
from .errors import WidthError

_TERM = re.compile(r"([+-]\d+)\*e\[([01]+)\]")


class Multivector:
    """Immutable map from blade index to nonzero integer coefficient.

    Arithmetic operators are provided: ``a + b``, ``a - b``, ``-a``,
    ``c * a`` for an integer ``c``, and ``a * b`` for the geometric product.
    """

    __slots__ = ("width", "_terms", "_hash")

    def __init__(self, width: int, terms: Mapping[BitString, int] | Iterable[tuple[BitString, int]] = ()):
        if not 1 <= width <= 63:
            raise WidthError(f"width must be in 1..63, got {width}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BitString, int] = {}
        for key, coeff in items:
            if key.width != width:
                raise WidthError(f"blade {key} does not have width {width}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be integers, got {type(coeff).__name__}")
            acc[key] = acc.get(key, 0) + coeff
        self.width = width
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def blade(cls, index: BitString | str, coeff: int = 1) -> Multivector:
        if isinstance(index, str):
            index = BitString.parse(index)
        return cls(index.width, {index: coeff})

    @classmethod
    def scalar(cls, width: int, coeff: int = 1) -> Multivector:
        return cls(width, {BitString.zeros(width): coeff})

    @classmethod
    def zero(cls, width: int) -> Multivector:
        return cls(width)

    @property
    def terms(self) -> dict[BitString, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[BitString, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].value)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.width == other.width and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.width, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Multivector({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return NotImplemented

    def coefficient(self, index: BitString | str) -> int:
        return coefficient(self, index)

    def reverse(self) -> Multivector:
        return reverse(self)

    def norm_sq(self) -> int:
        return norm_sq(self)

    def to_text(self) -> str:
        """Canonical form, e.g. ``+1*e[0000] -1*e[1000]``; ``0`` when empty."""
        if not self._terms:
            return "0"
        return " ".join(f"{c:+d}*e[{k}]" for k, c in self.sorted_items())

    @classmethod
    def from_text(cls, text: str, width: int | None = None) -> Multivector:
        text = text.strip()
        if text == "0":
            if width is None:
                raise ValueError("width is required to parse the zero multivector")
            return cls(width)
        terms = []
        pos = 0
        for match in _TERM.finditer(text):
            if text[pos:match.start()].strip():
                raise ValueError(f"unexpected text at offset {pos}: {text[pos:match.start()]!r}")
            terms.append((BitString.parse(match.group(2)), int(match.group(1))))
            pos = match.end()
        if not terms or text[pos:].strip():
            raise ValueError(f"malformed multivector text: {text!r}")
        w = terms[0][0].width if width is None else width
        return cls(w, terms)

    def to_json_obj(self) -> list[dict[str, str]]:
        return [{"blade": str(k), "coeff": str(c)} for k, c in self.sorted_items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj, width: int | None = None) -> Multivector:
        terms = [(BitString.parse(t["blade"]), int(t["coeff"])) for t in obj]
        if width is None:
            if not terms:
                raise ValueError("width is required to parse the zero multivector")
            width = terms[0][0].width
        return cls(width, terms)

    @classmethod
    def from_json(cls, text: str, width: int | None = None) -> Multivector:
        return cls.from_json_obj(json.loads(text), width)


def _same_width(a: Multivector, b: Multivector):
    if a.width != b.width:
        raise WidthError(f"width mismatch: {a.width} vs {b.width}")


def add(a: Multivector, b: Multivector) -> Multivector:
    _same_width(a, b)
    return Multivector(a.width, list(a.items()) + list(b.items()))


def scale(a: Multivector, c: int) -> Multivector:
    return Multivector(a.width, [(k, v * c) for k, v in a.items()])


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of the blade product; cost is ``len(a) * len(b)``."""
    _same_width(a, b)
    acc: dict[BitString, int] = {}
    for x, cx in a.items():
        for y, cy in b.items():
            p = blade_product(x, y)
            acc[p.index] = acc.get(p.index, 0) + p.sign * cx * cy
    return Multivector(a.width, acc)


def reverse(a: Multivector) -> Multivector:
    return Multivector(a.width, [(k, reverse_sign(k) * c) for k, c in a.items()])


def coefficient(a: Multivector, index: BitString | str) -> int:
    if isinstance(index, str):
        index = BitString.parse(index)
    if index.width != a.width:
        raise WidthError(f"blade {index} does not have width {a.width}")
    return a._terms.get(index, 0)


def norm_sq(a: Multivector) -> int:
    return sum(c * c for c in a._terms.values())
