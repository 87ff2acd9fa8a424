import pytest

from gasimon.blade import BitString
from gasimon.cartan import multivector_to_matrix
from gasimon.errors import OracleDomainError, ReadoutError, WidthError
from gasimon.function_model import (FunctionTable, MaskSpec, OutcomeKind, SimonOutcome,
                                    brute_force_solve, generate_masked, generate_one_to_one)
from gasimon.multivector import Multivector
from gasimon.pipeline import (analytic_amplitude, apply_Uf, build_En, build_Fn, classify, recover_mask,
                              run_pipeline, solve)
from gasimon.crosscheck import seeded_instances

from conftest import bs, load_matrix, mv

TABLE2_FINAL = mv(*[(2, f"00{v:03b}") for v in range(8)],
                  (-2, "01000"), (-2, "01001"), (2, "01010"), (2, "01011"),
                  (2, "01100"), (2, "01101"), (-2, "01110"), (-2, "01111"))
TABLE4_FINAL = mv((2, "0001"), (2, "0010"), (2, "0101"), (2, "0110"),
                  (-2, "1001"), (2, "1010"), (2, "1101"), (-2, "1110"))


def all_bits(width):
    return [BitString(width, v) for v in range(1 << width)]


def test_build_En_examples():
    assert build_En(2, 2) == mv((1, "0000"), (1, "0100"), (1, "1000"), (1, "1100"))
    assert build_En(1, 0) == mv((1, "0"), (1, "1"))
    assert build_En(3, 2) == mv(*[(1, f"{a:03b}00") for a in range(8)])


def test_build_En_bad_sizes():
    with pytest.raises(WidthError):
        build_En(0, 3)
    with pytest.raises(WidthError):
        build_En(40, 30)


def test_build_Fn_examples():
    assert build_Fn(1, 0) == mv((1, "0"), (1, "1"))
    assert build_Fn(2, 0) == mv((1, "00"), (1, "01"), (1, "10"), (-1, "11"))
    assert multivector_to_matrix(build_Fn(2, 2)) == load_matrix("Fn_2_2")
    for n, m in [(3, 1), (4, 0), (5, 2)]:
        assert build_Fn(n, m) == build_En(n, m).reverse()


def test_apply_Uf_examples(table1, table2):
    assert apply_Uf(table1, build_En(2, 2)) == mv((1, "0010"), (1, "0100"), (1, "1011"), (1, "1101"))
    assert apply_Uf(table1, Multivector.zero(4)) == Multivector.zero(4)
    got = apply_Uf(table2, build_En(3, 2))
    # e[01100] where the printed example shows a four-bit subscript; the
    # printed e[11100] disagrees with f(111) = 01.
    assert got == mv((1, "00011"), (1, "00100"), (1, "01011"), (1, "01100"),
                     (1, "10010"), (1, "10101"), (1, "11010"), (1, "11101"))


def test_apply_Uf_keeps_coefficients(table1):
    assert apply_Uf(table1, mv((3, "0100"), (-2, "1100"))) == mv((3, "0100"), (-2, "1101"))


def test_apply_Uf_domain(table1):
    with pytest.raises(OracleDomainError):
        apply_Uf(table1, mv((1, "0001")))


def test_run_pipeline_examples(table1, table2, table4):
    tr = run_pipeline(table1)
    assert tr.initial == mv((1, "0000"))
    assert tr.after_En == build_En(2, 2)
    assert tr.final == mv(*[(1, f"{v:04b}") for v in range(8)],
                          (-1, "1000"), (-1, "1001"), (1, "1010"), (1, "1011"),
                          (1, "1100"), (1, "1101"), (-1, "1110"), (-1, "1111"))
    assert run_pipeline(table2).final == TABLE2_FINAL
    assert run_pipeline(table4).final == TABLE4_FINAL


def test_analytic_amplitude_examples():
    s = MaskSpec(bs("010"))
    assert analytic_amplitude(bs("010"), bs("000"), s) == 2
    assert analytic_amplitude(bs("110"), bs("000"), s) == 0
    for a in all_bits(3):
        # B = 0 fixes the leading sign at +1; the bracket depends on A and s.
        tail = sum(a[i] * s.s[j] for i in range(1, 4) for j in range(i + 1, 4))
        assert analytic_amplitude(a, a, s) == (2 if tail % 2 == 0 else 0)
    with pytest.raises(WidthError):
        analytic_amplitude(bs("01"), bs("000"), s)


def test_analytic_amplitude_matches_table2(table2):
    final = run_pipeline(table2).final
    assert final.coefficient("01011") == analytic_amplitude(bs("010"), bs("000"), bs("010"))


def test_classify_examples(table1, table2):
    assert classify(run_pipeline(table1).final) is OutcomeKind.ONE_TO_ONE
    assert classify(TABLE2_FINAL) is OutcomeKind.MASKED
    assert classify(mv((1, "00"), (2, "01"))) is OutcomeKind.PROMISE_VIOLATED


def test_recover_mask_examples(table2, table4):
    assert recover_mask(TABLE2_FINAL, table2) == MaskSpec(bs("010"))
    assert recover_mask(TABLE4_FINAL, table4) == MaskSpec(bs("10"))
    f = generate_masked(2, 2, "11", seed=3)
    assert recover_mask(run_pipeline(f).final, f) == MaskSpec(bs("11"))


def test_recover_mask_n1():
    f = FunctionTable.from_ints(1, 1, [1, 1])
    assert solve(f) == SimonOutcome.masked("1", ())
    g = FunctionTable.from_ints(1, 1, [0, 1])
    assert solve(g).kind is OutcomeKind.ONE_TO_ONE
    with pytest.raises(ReadoutError):
        recover_mask(run_pipeline(g).final, g)


def test_solve_examples(table1, table2):
    assert solve(table1) == SimonOutcome.one_to_one()
    out = solve(table2)
    assert out.kind is OutcomeKind.MASKED and str(out.mask) == "010"
    assert [(str(b), c) for b, c in out.evidence] == [("11011", 0), ("01111", -2)]


def test_solve_agrees_with_brute_force_on_seeded_instances():
    for n in range(1, 7):
        for inst in seeded_instances(n, n, 100 // 6 + 1, seed=n):
            assert solve(inst.f).same_answer(brute_force_solve(inst.f))


def test_two_to_one_with_mixed_offsets_is_violated():
    # Every image has two preimages, so magnitudes are uniform; readout catches it.
    f = FunctionTable.from_ints(3, 2, [0, 0, 1, 1, 2, 3, 2, 3])
    final = run_pipeline(f).final
    assert classify(final) is OutcomeKind.MASKED
    assert solve(f).kind is OutcomeKind.PROMISE_VIOLATED


def test_constant_function_is_violated():
    f = FunctionTable.from_ints(2, 1, [1, 1, 1, 1])
    assert solve(f).kind is OutcomeKind.PROMISE_VIOLATED


def _masked_instances(max_n=5):
    for n in range(2, max_n + 1):
        for s in range(1, 1 << n):
            yield generate_masked(n, n, BitString(n, s), seed=s * 31 + n)


def test_closed_form_matches_pipeline():
    for f in _masked_instances():
        s = brute_force_solve(f).mask.s
        final = run_pipeline(f).final
        for a in f.inputs():
            partner = a ^ s
            for x in all_bits(f.n):
                blade = x.concat(f(a))
                want = analytic_amplitude(x, a, s)
                assert final.coefficient(blade) == want
                assert analytic_amplitude(x, partner, s) == want


def test_zero_pattern_law():
    for f in _masked_instances():
        s = brute_force_solve(f).mask.s
        final = run_pipeline(f).final
        for x in all_bits(f.n):
            odd = sum(x[i] * s[j] for i in range(1, f.n + 1) for j in range(i + 1, f.n + 1)) % 2
            for y in f.image():
                assert (final.coefficient(x.concat(y)) == 0) == bool(odd)


@pytest.mark.parametrize("n", range(1, 6))
def test_one_to_one_law(n):
    for seed in range(10):
        f = generate_one_to_one(n, n + seed % 2, seed)
        final = run_pipeline(f).final
        assert len(final) == 4 ** n
        assert all(abs(c) == 1 for _, c in final.items())


def expected_norm(f):
    """4**n, doubled when the mask is 10...0 (every blade then survives)."""
    out = brute_force_solve(f)
    if out.kind is OutcomeKind.MASKED and out.mask.s.value == 1 << (f.n - 1):
        return 2 * 4 ** f.n
    return 4 ** f.n


def test_norm_law():
    for n in range(1, 6):
        for inst in seeded_instances(n, n, 12, seed=77):
            assert run_pipeline(inst.f).final.norm_sq() == expected_norm(inst.f)
    for f in _masked_instances():
        assert run_pipeline(f).final.norm_sq() == expected_norm(f)


def test_norm_is_not_always_four_to_the_n(table2, table4):
    assert run_pipeline(table2).final.norm_sq() == 4 ** 3
    # Mask 10: the zero pattern is empty, so the final state has 8 terms of size 2.
    assert run_pipeline(table4).final.norm_sq() == 32


def test_solve_is_pure(table2):
    assert solve(table2) == solve(table2)
    assert run_pipeline(table2) == run_pipeline(table2)
