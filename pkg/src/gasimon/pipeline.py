"""Simon's hidden-mask problem solved in geometric algebra.

The state starts as the scalar blade ``e_{0...0}`` on ``n + m`` bits, is
multiplied on the left by ``E_n`` (sum of all blades supported on the input
register), relabeled by the oracle ``U_f`` and multiplied on the left by
``F_n``, the reverse of ``E_n``. Nothing is sampled: every coefficient of the
final multivector can be read directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blade import BitString, reverse_sign
from .errors import OracleDomainError, ReadoutError, WidthError
from .function_model import FunctionTable, MaskSpec, OutcomeKind, SimonOutcome, has_mask_property
from .multivector import Multivector, geometric_product


@dataclass(frozen=True)
class PipelineTrace:
    initial: Multivector
    after_En: Multivector
    after_Uf: Multivector
    final: Multivector

    def stages(self) -> list[tuple[str, Multivector]]:
        return [("initial", self.initial), ("after_En", self.after_En),
                ("after_Uf", self.after_Uf), ("final", self.final)]


def _check_sizes(n: int, m: int):
    if n < 1 or m < 0 or n + m > 63:
        raise WidthError(f"need n >= 1, m >= 0, n + m <= 63; got n={n}, m={m}")


def _input_blades(n: int, m: int):
    for a in range(1 << n):
        yield BitString(n + m, a << m)


def build_En(n: int, m: int) -> Multivector:
    _check_sizes(n, m)
    return Multivector(n + m, [(b, 1) for b in _input_blades(n, m)])


def build_Fn(n: int, m: int) -> Multivector:
    _check_sizes(n, m)
    return Multivector(n + m, [(b, reverse_sign(b)) for b in _input_blades(n, m)])


def apply_Uf(f: FunctionTable, state: Multivector) -> Multivector:
    """Relabel each ``e_{A || 0^m}`` to ``e_{A || f(A)}``, keeping coefficients.

    The oracle is not a multivector, so this is a map on indices rather than
    a product.
    """
    n, m = f.n, f.m
    if state.width != n + m:
        raise WidthError(f"state width {state.width} != n + m = {n + m}")
    low = (1 << m) - 1
    out = []
    for blade, coeff in state.items():
        if blade.value & low:
            raise OracleDomainError(f"blade {blade} has a nonzero output register")
        a = blade.value >> m
        out.append((BitString(n + m, (a << m) | f.values[a].value), coeff))
    return Multivector(n + m, out)


def run_pipeline(f: FunctionTable) -> PipelineTrace:
    n, m = f.n, f.m
    initial = Multivector.scalar(n + m)
    after_En = geometric_product(build_En(n, m), initial)
    after_Uf = apply_Uf(f, after_En)
    final = geometric_product(build_Fn(n, m), after_Uf)
    return PipelineTrace(initial, after_En, after_Uf, final)


def analytic_amplitude(x: BitString, a: BitString, s: MaskSpec | BitString) -> int:
    """Closed-form coefficient of ``e_{X || f(A)}`` for a masked ``f``.

    With ``B = X ^ A`` the value is
    ``(-1)**sum_{i<j}(B_i + A_i) B_j * (1 + (-1)**sum_{i<j}(B_i + A_i) S_j)``.
    """
    s = s.s if isinstance(s, MaskSpec) else s
    if not x.width == a.width == s.width:
        raise WidthError(f"widths differ: X={x.width}, A={a.width}, s={s.width}")
    b = x ^ a
    lead = 0
    tail = 0
    for i in range(1, x.width + 1):
        w = b[i] + a[i]
        for j in range(i + 1, x.width + 1):
            lead += w * b[j]
            tail += w * s[j]
    return (-1) ** lead * (1 + (-1) ** tail)


def classify(final: Multivector) -> OutcomeKind:
    mags = {abs(c) for _, c in final.items()}
    if mags == {1}:
        return OutcomeKind.ONE_TO_ONE
    if mags == {2}:
        return OutcomeKind.MASKED
    return OutcomeKind.PROMISE_VIOLATED


def readout_probes(final: Multivector, f: FunctionTable) -> list[tuple[BitString, int]]:
    """Coefficients of the adjacent-ones blades used to read the mask.

    Probe ``k`` (0-based) has ones at input positions ``k+1, k+2`` and the
    output register set to ``f(0^n)``, which is always in the image, so a
    zero coefficient can only come from cancellation.
    """
    n, m = f.n, f.m
    tail = f.values[0].value
    probes = []
    for k in range(n - 1):
        x = 0b11 << (n - k - 2)
        blade = BitString(n + m, (x << m) | tail)
        probes.append((blade, final.coefficient(blade)))
    return probes


def recover_mask(final: Multivector, f: FunctionTable,
                 probes: list[tuple[BitString, int]] | None = None) -> MaskSpec:
    """Read ``S_2..S_n`` from zero/nonzero probes, then settle ``S_1`` on the table."""
    n = f.n
    if n == 1:
        if f.values[0] == f.values[1]:
            return MaskSpec(BitString(1, 1))
        raise ReadoutError("f(0) != f(1): no mask for n = 1")
    if probes is None:
        probes = readout_probes(final, f)
    rest = 0
    for _, coeff in probes:
        rest = (rest << 1) | (1 if coeff == 0 else 0)
    for lead in (0, 1):
        cand = BitString(n, (lead << (n - 1)) | rest)
        if not cand.is_zero() and has_mask_property(f, cand):
            return MaskSpec(cand)
    raise ReadoutError(f"neither (0|1){BitString(n - 1, rest)} satisfies the mask property")


def decide(final: Multivector, f: FunctionTable) -> SimonOutcome:
    """Classify a final state and, when masked, read out and verify the mask."""
    kind = classify(final)
    if kind is OutcomeKind.ONE_TO_ONE:
        return SimonOutcome.one_to_one()
    if kind is OutcomeKind.PROMISE_VIOLATED:
        return SimonOutcome.violated()
    probes = readout_probes(final, f) if f.n > 1 else []
    try:
        mask = recover_mask(final, f, probes)
    except ReadoutError:
        return SimonOutcome.violated(probes)
    if not has_mask_property(f, mask):
        return SimonOutcome.violated(probes)
    return SimonOutcome.masked(mask, probes)


def solve(f: FunctionTable) -> SimonOutcome:
    return decide(run_pipeline(f).final, f)
