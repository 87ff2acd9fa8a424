"""Promise functions ``f: {0,1}^n -> {0,1}^m`` as explicit tables."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import combinations

from .blade import BitString
from .errors import ArityError, CapacityError, TableSyntaxError, WidthError, ZeroMaskError
from .rng import SplitMix64, sample_distinct

MAX_INPUT_BITS = 16


@dataclass(frozen=True)
class FunctionTable:
    """``values[x]`` is ``f(x)``, where ``x`` is read with bit 1 most significant."""

    n: int
    m: int
    values: tuple[BitString, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_INPUT_BITS:
            raise WidthError(f"n must be in 1..{MAX_INPUT_BITS}, got {self.n}")
        if self.m < 1 or self.n + self.m > 63:
            raise WidthError(f"m must be >= 1 with n + m <= 63, got n={self.n}, m={self.m}")
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != 1 << self.n:
            raise ArityError(f"expected {1 << self.n} entries for n={self.n}, got {len(self.values)}")
        for x, v in enumerate(self.values):
            if v.width != self.m:
                raise WidthError(f"f({BitString(self.n, x)}) has width {v.width}, expected {self.m}")

    @classmethod
    def from_ints(cls, n: int, m: int, values) -> FunctionTable:
        return cls(n, m, tuple(BitString(m, v) for v in values))

    def __call__(self, x: BitString) -> BitString:
        if x.width != self.n:
            raise WidthError(f"argument width {x.width} != n={self.n}")
        return self.values[x.value]

    def inputs(self):
        for x in range(1 << self.n):
            yield BitString(self.n, x)

    def image(self) -> set[BitString]:
        return set(self.values)

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def to_text(self) -> str:
        lines = [f"n={self.n} m={self.m}"]
        lines += [f"{x} -> {self(x)}" for x in self.inputs()]
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "m": self.m, "values": [str(v) for v in self.values]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


@dataclass(frozen=True)
class MaskSpec:
    s: BitString

    def __post_init__(self):
        if self.s.is_zero():
            raise ZeroMaskError(f"mask must be nonzero, got {self.s}")

    @classmethod
    def parse(cls, text: str) -> MaskSpec:
        return cls(BitString.parse(text))

    @property
    def width(self) -> int:
        return self.s.width

    def __str__(self):
        return str(self.s)


class OutcomeKind(enum.Enum):
    ONE_TO_ONE = "OneToOne"
    MASKED = "Masked"
    PROMISE_VIOLATED = "PromiseViolated"


@dataclass(frozen=True)
class SimonOutcome:
    kind: OutcomeKind
    mask: MaskSpec | None = None
    evidence: tuple[tuple[BitString, int], ...] = field(default=())

    def __post_init__(self):
        if (self.mask is not None) != (self.kind is OutcomeKind.MASKED):
            raise ValueError("mask must be present exactly when kind is Masked")
        object.__setattr__(self, "evidence", tuple(self.evidence))

    @classmethod
    def one_to_one(cls, evidence=()) -> SimonOutcome:
        return cls(OutcomeKind.ONE_TO_ONE, None, evidence)

    @classmethod
    def masked(cls, mask: MaskSpec | BitString | str, evidence=()) -> SimonOutcome:
        if isinstance(mask, str):
            mask = BitString.parse(mask)
        if isinstance(mask, BitString):
            mask = MaskSpec(mask)
        return cls(OutcomeKind.MASKED, mask, evidence)

    @classmethod
    def violated(cls, evidence=()) -> SimonOutcome:
        return cls(OutcomeKind.PROMISE_VIOLATED, None, evidence)

    def same_answer(self, other: SimonOutcome) -> bool:
        """Kind and mask agree; evidence is backend-specific and ignored."""
        return self.kind is other.kind and self.mask == other.mask

    def __str__(self):
        if self.kind is OutcomeKind.MASKED:
            return f"{self.kind.value} {self.mask}"
        return self.kind.value

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind.value,
            "mask": None if self.mask is None else str(self.mask),
            "probes": [{"blade": str(b), "coeff": str(c)} for b, c in self.evidence],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> SimonOutcome:
        mask = obj.get("mask")
        return cls(
            OutcomeKind(obj["kind"]),
            None if mask is None else MaskSpec.parse(mask),
            tuple((BitString.parse(p["blade"]), int(p["coeff"])) for p in obj.get("probes", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> SimonOutcome:
        return cls.from_json_obj(json.loads(text))


def _bits_token(token: str, line: int, column: int) -> BitString:
    if not token or any(c not in "01" for c in token):
        raise TableSyntaxError(f"expected a bit string, got {token!r}", line, column)
    return BitString.parse(token)


def _parse_header(body: str, line: int, column: int) -> tuple[int, int]:
    fields = {}
    offset = 0
    for part in body.split():
        col = column + body.index(part, offset)
        offset = body.index(part, offset) + len(part)
        key, sep, val = part.partition("=")
        if not sep or key not in ("n", "m") or not val.isdigit() or key in fields:
            raise TableSyntaxError(f"bad header field {part!r}", line, col)
        fields[key] = int(val)
    if set(fields) != {"n", "m"}:
        raise TableSyntaxError("header must be 'n=<int> m=<int>'", line, column)
    return fields["n"], fields["m"]


def parse_table(text: str) -> FunctionTable:
    """Parse the line-oriented table format.

    ``#`` starts a comment (whole-line or trailing). The first content line
    is ``n=<int> m=<int>``; it is followed by exactly ``2**n`` lines
    ``<input> -> <output>`` with inputs in ascending order.
    """
    header = None
    values: list[BitString] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        if header is None:
            header = _parse_header(body.strip(), lineno, indent + 1)
            n, m = header
            if not 1 <= n <= MAX_INPUT_BITS or m < 1 or n + m > 63:
                raise WidthError(f"unsupported sizes n={n}, m={m}")
            continue
        lhs, arrow, rhs = body.partition("->")
        if not arrow:
            raise TableSyntaxError("expected '<input> -> <output>'", lineno, indent + 1)
        x = _bits_token(lhs.strip(), lineno, indent + 1)
        y_col = len(lhs) + 2 + (len(rhs) - len(rhs.lstrip())) + 1
        y = _bits_token(rhs.strip(), lineno, y_col)
        if x.width != n:
            raise WidthError(f"line {lineno}: input {x} has width {x.width}, expected {n}")
        if y.width != m:
            raise WidthError(f"line {lineno}: output {y} has width {y.width}, expected {m}")
        if len(values) >= 1 << n:
            raise ArityError(f"line {lineno}: more than {1 << n} mapping lines")
        if x.value != len(values):
            raise TableSyntaxError(
                f"inputs must be ascending; expected {BitString(n, len(values))}, got {x}",
                lineno, indent + 1)
        values.append(y)
    if header is None:
        raise TableSyntaxError("missing 'n=<int> m=<int>' header")
    if len(values) != 1 << header[0]:
        raise ArityError(f"expected {1 << header[0]} mapping lines, got {len(values)}")
    return FunctionTable(header[0], header[1], tuple(values))


def parse_table_json(text: str) -> FunctionTable:
    obj = json.loads(text)
    try:
        n, m, raw = int(obj["n"]), int(obj["m"]), obj["values"]
    except (KeyError, TypeError, ValueError) as exc:
        raise TableSyntaxError(f"bad JSON function table: {exc}") from exc
    if len(raw) != 1 << n:
        raise ArityError(f"expected {1 << n} values for n={n}, got {len(raw)}")
    return FunctionTable(n, m, tuple(BitString.parse(v) for v in raw))


def load_table(text: str) -> FunctionTable:
    """Dispatch on content: JSON objects start with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_table_json(text)
    return parse_table(text)


def has_mask_property(f: FunctionTable, s: MaskSpec | BitString) -> bool:
    """True iff for all x != y: f(x) == f(y) exactly when x == y ^ s."""
    s = s.s if isinstance(s, MaskSpec) else s
    if s.width != f.n:
        raise WidthError(f"mask width {s.width} != n={f.n}")
    if s.is_zero():
        return False
    vals = f.values
    sv = s.value
    if any(vals[x] != vals[x ^ sv] for x in range(len(vals))):
        return False
    # Distinct cosets must have distinct images.
    reps = [vals[x] for x in range(len(vals)) if x < x ^ sv]
    return len(set(reps)) == len(reps)


def brute_force_solve(f: FunctionTable) -> SimonOutcome:
    """Classical oracle: collect every colliding input pair and its XOR offset."""
    preimages: dict[BitString, list[int]] = {}
    for x, y in enumerate(f.values):
        preimages.setdefault(y, []).append(x)
    offsets = set()
    for xs in preimages.values():
        for a, b in combinations(xs, 2):
            offsets.add(a ^ b)
            if len(offsets) > 1:
                return SimonOutcome.violated()
    if not offsets:
        return SimonOutcome.one_to_one()
    s = BitString(f.n, offsets.pop())
    if has_mask_property(f, s):
        return SimonOutcome.masked(s)
    return SimonOutcome.violated()


def generate_one_to_one(n: int, m: int, seed: int) -> FunctionTable:
    """Seeded injective table: ``2**n`` distinct draws from ``{0,1}^m``."""
    if m < n:
        raise CapacityError(f"an injective f needs m >= n (2^{m} < 2^{n})")
    rng = SplitMix64(seed)
    return FunctionTable.from_ints(n, m, sample_distinct(rng, 1 << m, 1 << n))


def generate_masked(n: int, m: int, s: MaskSpec | BitString | str, seed: int) -> FunctionTable:
    """Seeded table with hidden mask ``s``.

    Coset representatives (the smaller element of each ``{x, x ^ s}``) are
    taken in ascending order and given distinct seeded values, which are then
    copied to their partners.
    """
    if isinstance(s, str):
        s = BitString.parse(s)
    if isinstance(s, BitString):
        s = MaskSpec(s)
    if s.width != n:
        raise WidthError(f"mask width {s.width} != n={n}")
    if m < n - 1:
        raise CapacityError(f"a masked f needs m >= n - 1, got n={n}, m={m}")
    sv = s.s.value
    reps = [x for x in range(1 << n) if x < x ^ sv]
    rng = SplitMix64(seed)
    draws = sample_distinct(rng, 1 << m, len(reps))
    values = [0] * (1 << n)
    for x, v in zip(reps, draws):
        values[x] = values[x ^ sv] = v
    return FunctionTable.from_ints(n, m, values)
