"""Reference state-vector treatment of the three-gate Simon circuit.

Amplitudes are kept as integers scaled by ``2**n``: after the final
Hadamard layer the amplitude of ``|i, y>`` is ``a(i, y) / 2**n`` with
``a(i, y) = sum_{k: f(k) = y} (-1)**(i . k)``.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field
from functools import cached_property

from .blade import BitString
from .errors import RoundLimitError
from .function_model import FunctionTable, SimonOutcome, has_mask_property
from .rng import SplitMix64


@dataclass(frozen=True)
class AmplitudeTable:
    n: int
    m: int
    scaled: dict[tuple[BitString, BitString], int] = field(repr=False)

    def amplitude(self, i: BitString, y: BitString) -> int:
        return self.scaled.get((i, y), 0)

    def norm_sq(self) -> int:
        return sum(a * a for a in self.scaled.values())

    @cached_property
    def first_register_weights(self) -> list[int]:
        """``4**n`` times the probability of measuring each ``i`` (ascending)."""
        w = [0] * (1 << self.n)
        for (i, _), a in self.scaled.items():
            w[i.value] += a * a
        return w

    @cached_property
    def _cumulative(self) -> list[int]:
        out, acc = [], 0
        for w in self.first_register_weights:
            acc += w
            out.append(acc)
        return out


def hadamard_input_register(f: FunctionTable) -> dict[BitString, int]:
    """|phi_2> at scale ``sqrt(2**n)``: each ``|k, f(k)>`` with amplitude 1."""
    return {x.concat(f(x)): 1 for x in f.inputs()}


def final_amplitudes(f: FunctionTable) -> AmplitudeTable:
    n, m = f.n, f.m
    acc: dict[tuple[int, int], int] = {}
    for ky, amp in hadamard_input_register(f).items():
        k, y = ky.value >> m, ky.value & ((1 << m) - 1)
        for i in range(1 << n):
            sign = -1 if (i & k).bit_count() & 1 else 1
            acc[i, y] = acc.get((i, y), 0) + amp * sign
    scaled = {(BitString(n, i), BitString(m, y)): a for (i, y), a in acc.items() if a}
    return AmplitudeTable(n, m, scaled)


def measure_first_register(table: AmplitudeTable, rng: SplitMix64 | int) -> BitString:
    """Sample ``i`` with probability ``sum_y a(i, y)**2 / 4**n``.

    An integer seeds a fresh generator; pass a :class:`SplitMix64` to draw
    a sequence.
    """
    if isinstance(rng, int):
        rng = SplitMix64(rng)
    cum = table._cumulative
    r = rng.below(cum[-1])
    return BitString(table.n, bisect.bisect_right(cum, r))


class NullspaceKind(enum.Enum):
    UNIQUE_ZERO = "Unique0"
    PAIR = "Pair"
    INSUFFICIENT_RANK = "InsufficientRank"


@dataclass(frozen=True)
class Gf2Solution:
    kind: NullspaceKind
    s: BitString | None = None


@dataclass
class Gf2System:
    """Homogeneous system ``i . s = 0 (mod 2)``; only rank-increasing rows are kept."""

    n: int
    rows: list[BitString] = field(default_factory=list)

    def rank(self) -> int:
        return len(_reduce(self.rows, self.n)[0])

    def add(self, row: BitString) -> bool:
        """Append ``row`` if it is independent of the current rows."""
        if row.is_zero():
            return False
        if len(_reduce(self.rows + [row], self.n)[0]) > len(self.rows):
            self.rows.append(row)
            return True
        return False


def _reduce(rows: list[BitString], n: int) -> tuple[list[int], dict[int, int]]:
    """Reduced row echelon form over GF(2), pivoting on the lowest column index.

    Column ``c`` (1-based, leftmost first) is bit ``n - c`` of the packed row.
    Returns the pivot columns and a map pivot column -> reduced row.
    """
    work = [r.value for r in rows]
    pivots: dict[int, int] = {}
    order: list[int] = []
    for col in range(1, n + 1):
        bit = 1 << (n - col)
        idx = next((k for k, r in enumerate(work) if r & bit), None)
        if idx is None:
            continue
        prow = work.pop(idx)
        work = [r ^ prow if r & bit else r for r in work]
        for c in order:
            if pivots[c] & bit:
                pivots[c] ^= prow
        pivots[col] = prow
        order.append(col)
    return order, pivots


def gf2_solve(system: Gf2System | list[BitString], n: int | None = None) -> Gf2Solution:
    if isinstance(system, Gf2System):
        rows, n = system.rows, system.n
    else:
        rows = list(system)
        if n is None:
            raise ValueError("n is required when passing bare rows")
    order, pivots = _reduce(rows, n)
    rank = len(order)
    if rank == n:
        return Gf2Solution(NullspaceKind.UNIQUE_ZERO)
    if rank < n - 1:
        return Gf2Solution(NullspaceKind.INSUFFICIENT_RANK)
    free = next(c for c in range(1, n + 1) if c not in pivots)
    s = 1 << (n - free)
    for col, row in pivots.items():
        # Pivot variable equals the free variable when the free column is set.
        if row & (1 << (n - free)):
            s |= 1 << (n - col)
    return Gf2Solution(NullspaceKind.PAIR, BitString(n, s))


def quantum_solve(f: FunctionTable, seed: int, max_rounds: int) -> SimonOutcome:
    """Sample until ``n - 1`` independent rows are held, then verify on the table.

    Evidence pairs each kept row with its weight ``4**n * P(i)``.
    """
    n = f.n
    table = final_amplitudes(f)
    rng = SplitMix64(seed)
    system = Gf2System(n)
    rounds = 0
    while system.rank() < n - 1:
        if rounds >= max_rounds:
            raise RoundLimitError(f"rank {system.rank()} < {n - 1} after {rounds} rounds")
        system.add(measure_first_register(table, rng))
        rounds += 1
    sol = gf2_solve(system)
    weights = table.first_register_weights
    evidence = tuple((row, weights[row.value]) for row in system.rows)
    if sol.kind is NullspaceKind.PAIR and has_mask_property(f, sol.s):
        return SimonOutcome.masked(sol.s, evidence)
    if f.is_injective():
        return SimonOutcome.one_to_one(evidence)
    return SimonOutcome.violated(evidence)
