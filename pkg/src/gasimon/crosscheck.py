"""Seeded instance streams and the four-way backend comparison."""

from __future__ import annotations

from dataclasses import dataclass

from .blade import BitString
from .cartan import DEFAULT_CARTAN_LIMIT, check_width, run_pipeline_matrix
from .errors import RoundLimitError
from .fixtures import fixtures_for
from .function_model import (FunctionTable, SimonOutcome, brute_force_solve,
                             generate_masked, generate_one_to_one)
from .multivector import Multivector
from .pipeline import decide, run_pipeline
from .quantum import quantum_solve
from .rng import SplitMix64


@dataclass(frozen=True)
class Instance:
    source: str
    f: FunctionTable
    seed: int


def seeded_instances(n: int, m: int, count: int, seed: int) -> list[Instance]:
    """Promise-satisfying tables; 1-to-1 ones only appear when ``m >= n``."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        inst_seed = rng.next_u64()
        if m < n or rng.below(2) == 0:
            s = BitString(n, 1 + rng.below((1 << n) - 1))
            f = generate_masked(n, m, s, inst_seed)
        else:
            f = generate_one_to_one(n, m, inst_seed)
        out.append(Instance(f"seed:{inst_seed}", f, inst_seed))
    return out


def trial_instances(n: int, m: int, trials: int, seed: int) -> list[Instance]:
    """Shipped reference tables of matching shape first, then seeded ones."""
    fixed = [Instance(name, f, seed) for name, f in fixtures_for(n, m)][:trials]
    return fixed + seeded_instances(n, m, trials - len(fixed), seed)


@dataclass
class TrialResult:
    instance: Instance
    blade_final: Multivector
    cartan_final: Multivector
    outcomes: dict[str, SimonOutcome | None]
    error: str | None = None

    @property
    def ok(self) -> bool:
        if self.error is not None or self.blade_final != self.cartan_final:
            return False
        ref = self.outcomes["brute"]
        return all(o is not None and o.same_answer(ref) for o in self.outcomes.values())

    def diff(self) -> list[tuple[BitString, int, int]]:
        keys = sorted(set(self.blade_final) | set(self.cartan_final), key=lambda b: b.value)
        return [(k, self.blade_final.coefficient(k), self.cartan_final.coefficient(k))
                for k in keys if self.blade_final.coefficient(k) != self.cartan_final.coefficient(k)]


def run_trial(inst: Instance, limit: int = DEFAULT_CARTAN_LIMIT, max_rounds: int = 1000) -> TrialResult:
    f = inst.f
    blade_final = run_pipeline(f).final
    cartan_final = run_pipeline_matrix(f, limit)
    outcomes: dict[str, SimonOutcome | None] = {
        "blade": decide(blade_final, f),
        "cartan": decide(cartan_final, f),
        "brute": brute_force_solve(f),
    }
    error = None
    try:
        outcomes["quantum"] = quantum_solve(f, inst.seed, max_rounds)
    except RoundLimitError as exc:
        outcomes["quantum"] = None
        error = f"quantum: {exc}"
    return TrialResult(inst, blade_final, cartan_final, outcomes, error)


def crosscheck(n: int, m: int, trials: int, seed: int, limit: int = DEFAULT_CARTAN_LIMIT,
               max_rounds: int = 1000) -> list[TrialResult]:
    check_width(n + m, limit)
    return [run_trial(inst, limit, max_rounds) for inst in trial_instances(n, m, trials, seed)]
