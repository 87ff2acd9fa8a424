"""Binary-parametrized basis blades.

A blade ``e_{A_1...A_N}`` is identified with the bit string ``A_1...A_N``.
Position 1 is the leftmost character of the textual form and the most
significant bit of the packed integer, so ``BitString.parse("100").value``
is 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WidthError

MAX_WIDTH = 63


@dataclass(frozen=True, slots=True, order=True)
class BitString:
    """Fixed-width binary word, bit 1 leftmost."""

    width: int
    value: int

    def __post_init__(self):
        if not 1 <= self.width <= MAX_WIDTH:
            raise WidthError(f"width must be in 1..{MAX_WIDTH}, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise WidthError(f"value {self.value} does not fit in {self.width} bits")

    @classmethod
    def parse(cls, text: str) -> BitString:
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zeros(cls, width: int) -> BitString:
        return cls(width, 0)

    @classmethod
    def from_bits(cls, bits) -> BitString:
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    def __str__(self) -> str:
        return format(self.value, f"0{self.width}b")

    def __repr__(self) -> str:
        return f"BitString('{self}')"

    def __len__(self) -> int:
        return self.width

    def __getitem__(self, i: int) -> int:
        """Bit at 1-based position ``i`` (1 = leftmost)."""
        if not 1 <= i <= self.width:
            raise IndexError(f"bit index {i} outside 1..{self.width}")
        return (self.value >> (self.width - i)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self[i] for i in range(1, self.width + 1))

    def is_zero(self) -> bool:
        return self.value == 0

    def concat(self, other: BitString) -> BitString:
        """``self || other``: self supplies the leading bits."""
        return BitString(self.width + other.width, (self.value << other.width) | other.value)

    def split(self, head: int) -> tuple[BitString, BitString]:
        """Inverse of :meth:`concat` for a head of ``head`` bits."""
        tail = self.width - head
        if not 1 <= head < self.width:
            raise WidthError(f"cannot split width {self.width} at {head}")
        return (BitString(head, self.value >> tail),
                BitString(tail, self.value & ((1 << tail) - 1)))

    def __xor__(self, other: BitString) -> BitString:
        return xor(self, other)


@dataclass(frozen=True, slots=True)
class SignedBlade:
    sign: int
    index: BitString

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")


def _check(a: BitString, b: BitString):
    if a.width != b.width:
        raise WidthError(f"width mismatch: {a.width} vs {b.width}")


def xor(a: BitString, b: BitString) -> BitString:
    _check(a, b)
    return BitString(a.width, a.value ^ b.value)


def dot_mod2(i: BitString, j: BitString) -> int:
    _check(i, j)
    return (i.value & j.value).bit_count() & 1


def grade(x: BitString) -> int:
    return x.value.bit_count()


def _ordered_pair_parity(low: int, high: int) -> int:
    """Parity of #{(i, j): i < j, bit i of ``low`` set, bit j of ``high`` set}.

    Positions are 1-based from the left, so "j after i" means a less
    significant bit of the packed word.
    """
    parity = 0
    rest = low
    while rest:
        top = rest & -rest
        rest ^= top
        parity ^= (high & (top - 1)).bit_count() & 1
    return parity


def product_sign(x: BitString, y: BitString) -> int:
    """Sign of ``e_X e_Y``: (-1) ** sum_{i<j} Y_i X_j."""
    _check(x, y)
    return -1 if _ordered_pair_parity(y.value, x.value) else 1


def blade_product(x: BitString, y: BitString) -> SignedBlade:
    return SignedBlade(product_sign(x, y), xor(x, y))


def reverse_sign(x: BitString) -> int:
    """Sign picked up by ``e_X`` under reversal: (-1) ** sum_{i<j} X_i X_j."""
    return -1 if _ordered_pair_parity(x.value, x.value) else 1
