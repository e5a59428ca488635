import math
import random

import pytest

from z2ucodes.gf2poly import ZERO, BinPoly, parse_poly
from z2ucodes.ringr import (
    AmbientElement,
    RPoly,
    R_ONE,
    R_ONE_U,
    R_U,
    R_ZERO,
)
from z2ucodes.codewords import (
    BudgetExceededError,
    CodeSet,
    CodeSpec,
    Codeword,
    SpecParseError,
    SpecValidationError,
    cardinality_formula,
    closure_of_spec,
    contains,
    enumerate_closure,
    is_constacyclic,
    iter_valid_specs,
    parse_spec_text,
    shift,
    shift_packed,
    spanning_set,
    spanning_span,
    star_mul,
    umul_packed,
    validate_spec,
)


def P(text):
    return parse_poly(text)


WORKED = CodeSpec(2, 3, 1, P("1+x^2"), P("1+x"), P("1+x"))


class TestShift:
    def test_worked_examples(self):
        assert shift(Codeword((1, 0), (R_ONE, R_U))) == Codeword((0, 1), (R_U, R_ONE))
        assert shift(Codeword((1,), (R_ONE_U,))) == Codeword((1,), (R_ONE,))
        z = Codeword.zero(2, 2)
        assert shift(z) == z

    def test_matches_packed_shift(self):
        rng = random.Random(3)
        for _ in range(400):
            alpha, beta = rng.randint(1, 5), rng.randint(1, 5)
            w = rng.getrandbits(alpha + 2 * beta)
            c = Codeword.from_packed(w, alpha, beta)
            assert shift(c).to_packed() == shift_packed(w, alpha, beta)

    def test_period_divides_two_lcm(self):
        rng = random.Random(4)
        for _ in range(100):
            alpha, beta = rng.randint(1, 4), rng.randint(1, 4)
            c = Codeword.from_packed(rng.getrandbits(alpha + 2 * beta), alpha, beta)
            bound = 2 * math.lcm(alpha, beta)
            cur = c
            for _ in range(bound):
                cur = shift(cur)
            assert cur == c


class TestStarMul:
    def test_identity_and_u_annihilation(self):
        amb = AmbientElement(P("1+x"), RPoly(ZERO, P("1+x")), 2, 3)
        assert star_mul(RPoly(BinPoly(1)), amb) == amb
        assert star_mul(RPoly(ZERO, BinPoly(1)), amb).is_zero()

    def test_x_star_is_shift(self):
        rng = random.Random(5)
        for _ in range(200):
            alpha, beta = rng.randint(1, 4), rng.randint(1, 4)
            c = Codeword.from_packed(rng.getrandbits(alpha + 2 * beta), alpha, beta)
            xs = star_mul(RPoly(BinPoly(2)), c.to_ambient())
            assert Codeword.from_ambient(xs) == shift(c)


class TestValidateSpec:
    def test_worked_valid(self):
        assert validate_spec(WORKED) == []

    def test_case1_divisibility_violation(self):
        bad = CodeSpec(2, 3, 1, P("1+x^2"), P("1"), P("1+x"))
        violations = validate_spec(bad)
        assert violations == ["a does not divide (x^beta-1) * l"]

    def test_zero_l_is_always_fine_on_divisibility(self):
        spec = CodeSpec(2, 3, 1, P("1+x^2"), ZERO, P("1+x"))
        assert validate_spec(spec) == []

    def test_degree_bound(self):
        bad = CodeSpec(2, 3, 1, P("1+x"), P("1+x"), P("1+x"))
        assert any("deg(l)" in v for v in validate_spec(bad))

    def test_non_divisor_rejected(self):
        bad = CodeSpec(2, 3, 1, P("1+x+x^2"), ZERO, P("1+x"))
        assert any("does not divide x^2-1" in v for v in validate_spec(bad))

    def test_case3_f_must_divide_g(self):
        bad = CodeSpec(2, 3, 3, P("1+x^2"), ZERO, P("1+x"), P("1+x+x^2"))
        assert any("does not divide g" in v for v in validate_spec(bad))

    def test_constructor_guards(self):
        with pytest.raises(ValueError):
            CodeSpec(0, 3, 1, P("1"), ZERO, P("1"))
        with pytest.raises(ValueError):
            CodeSpec(2, 3, 4, P("1"), ZERO, P("1"))
        with pytest.raises(ValueError):
            CodeSpec(2, 3, 3, P("1"), ZERO, P("1"))  # missing f
        with pytest.raises(ValueError):
            CodeSpec(2, 3, 1, P("1"), ZERO, P("1"), P("1"))  # stray f


class TestSpanning:
    def test_worked_sizes(self):
        groups = {}
        for el in spanning_set(WORKED):
            groups.setdefault(el.group, []).append(el)
        assert len(groups.get("S1", [])) == 0
        assert len(groups["S2"]) == 2
        assert len(groups["S3"]) == 1
        assert all(el.multiples == 4 for el in groups["S2"])
        assert all(el.multiples == 2 for el in groups["S3"])

    def test_a_full_modulus_gives_empty_s1(self):
        spec = CodeSpec(2, 3, 1, P("1+x^2"), ZERO, P("1+x"))
        assert all(el.group != "S1" for el in spanning_set(spec))

    def test_invalid_spec_rejected(self):
        bad = CodeSpec(2, 3, 1, P("1+x^2"), P("1"), P("1+x"))
        with pytest.raises(SpecValidationError):
            spanning_set(bad)

    def test_spanning_span_equals_closure_cases_1_and_2(self):
        for alpha, beta in ((1, 1), (2, 3), (3, 3), (1, 2), (2, 2)):
            for spec in iter_valid_specs(alpha, beta, cases=(1, 2)):
                span = spanning_span(spanning_set(spec), alpha, beta)
                assert span == closure_of_spec(spec), spec

    def test_spanning_span_contained_in_closure_always(self):
        # The stated case-3 family does not always generate the code
        # (verify reports those as findings); containment must hold.
        for alpha, beta in ((1, 1), (2, 3), (3, 3), (1, 2), (2, 2)):
            for spec in iter_valid_specs(alpha, beta):
                span = spanning_span(spanning_set(spec), alpha, beta)
                closure = closure_of_spec(spec)
                assert all(closure.contains_packed(v) for v in span.basis), spec

    def test_case3_spanning_defect_is_visible(self):
        # Smallest case-3 instance where the stated family undershoots.
        spec = CodeSpec(1, 2, 3, P("1"), ZERO, P("1+x"), P("1+x"))
        assert validate_spec(spec) == []
        assert cardinality_formula(spec) == 8 == len(closure_of_spec(spec))
        span = spanning_span(spanning_set(spec), 1, 2)
        assert len(span) == 4

    def test_minimality_on_worked_example(self):
        elements = spanning_set(WORKED)
        full = spanning_span(elements, 2, 3)
        for skip in range(len(elements)):
            rest = [el for i, el in enumerate(elements) if i != skip]
            assert len(spanning_span(rest, 2, 3)) < len(full)


class TestCardinalityAndClosure:
    def test_worked_case1(self):
        assert cardinality_formula(WORKED) == 32
        assert len(closure_of_spec(WORKED)) == 32

    def test_case2_formula_value(self):
        # The formula value for this spec is 4, but the spec violates the
        # case-2 divisibility constraint and its actual closure has 8
        # words; validation is what keeps it out of the sweeps.
        spec = CodeSpec(2, 3, 2, P("1+x^2"), P("1+x"), P("1+x"))
        assert cardinality_formula(spec) == 4
        assert validate_spec(spec) != []
        assert len(closure_of_spec(spec)) == 8

    def test_case2_simple(self):
        spec = CodeSpec(1, 1, 2, P("1+x"), ZERO, P("1"))
        assert cardinality_formula(spec) == 2
        assert len(closure_of_spec(spec)) == 2

    def test_case3_f_equals_g_reduces(self):
        spec = CodeSpec(2, 3, 3, P("1+x^2"), ZERO, P("1+x"), P("1+x"))
        t2 = 1
        assert cardinality_formula(spec) == (1 << 0) * (1 << (2 * (3 - t2))) * 1

    def test_closure_of_zero_generator(self):
        z = AmbientElement(ZERO, RPoly(), 1, 1)
        assert len(enumerate_closure([z], 1, 1)) == 1

    def test_closure_single_generator_example(self):
        gen = AmbientElement(P("1"), RPoly(ZERO, P("1")), 1, 1)
        cs = enumerate_closure([gen], 1, 1)
        assert len(cs) == 2
        assert {str(w) for w in cs.words} == {"0|0", "1|u"}

    def test_budget(self):
        gen = AmbientElement(P("1"), RPoly(), 3, 3)
        with pytest.raises(BudgetExceededError):
            enumerate_closure([gen], 3, 3, budget=16)


class TestCodeSet:
    def test_contains_and_membership(self):
        cs = closure_of_spec(WORKED)
        assert contains(cs, Codeword.zero(2, 3))
        gen = Codeword.from_ambient(WORKED.generators()[1])
        assert contains(cs, gen)
        with pytest.raises(ValueError):
            contains(cs, Codeword.zero(1, 1))

    def test_constacyclic_checks(self):
        cs = closure_of_spec(WORKED)
        assert is_constacyclic(cs)
        # a set closed under addition but not under the shift
        bad = CodeSet.from_packed_words(2, 1, [0, 1])
        assert not is_constacyclic(bad)
        full = CodeSet.from_basis(2, 1, [1, 2, 4, 8])
        assert is_constacyclic(full)

    def test_from_words_rejects_non_groups(self):
        with pytest.raises(ValueError):
            CodeSet.from_packed_words(2, 1, [0, 1, 2])
        with pytest.raises(ValueError):
            CodeSet.from_packed_words(2, 1, [1, 2])

    def test_from_words_random_subgroups_round_trip(self):
        import numpy as np

        rng = random.Random(77)
        for _ in range(200):
            beta = rng.randint(1, 4)
            alpha = rng.randint(0, 4)
            nbits = alpha + 2 * beta
            vectors = [rng.getrandbits(nbits) for _ in range(rng.randint(0, 5))]
            reference = CodeSet.from_basis(alpha, beta, vectors)
            words = list(reference.packed())
            rng.shuffle(words)
            rebuilt = CodeSet.from_packed_words(alpha, beta, words)
            assert rebuilt == reference
            assert np.array_equal(rebuilt.packed(), reference.packed())

    def test_words_canonical_order(self):
        cs = enumerate_closure(
            [AmbientElement(P("1"), RPoly(ZERO, P("1")), 1, 1)], 1, 1
        )
        keys = [w.sort_key() for w in cs.words]
        assert keys == sorted(keys)

    def test_umul_packed(self):
        w = Codeword((1, 1), (R_ONE, R_U)).to_packed()
        u = umul_packed(w, 2, 2)
        assert Codeword.from_packed(u, 2, 2) == Codeword((0, 0), (R_U, R_ZERO))


class TestSpecFiles:
    def test_round_trip(self):
        text = WORKED.serialize()
        assert parse_spec_text(text) == WORKED

    def test_case3_round_trip(self):
        spec = CodeSpec(2, 2, 3, P("1+x^2"), ZERO, P("1+x^2"), P("1+x"))
        assert parse_spec_text(spec.serialize()) == spec

    def test_unknown_key(self):
        with pytest.raises(SpecParseError) as err:
            parse_spec_text("alpha = 2\nbogus = 1\n")
        assert err.value.line == 2

    def test_missing_key(self):
        with pytest.raises(SpecParseError):
            parse_spec_text("alpha = 2\nbeta = 3\ncase = 1\na = 1\nl = 0\n")

    def test_bad_polynomial(self):
        with pytest.raises(SpecParseError):
            parse_spec_text("alpha = 2\nbeta = 3\ncase = 1\na = y\nl = 0\ng = 1\n")

    def test_f_only_for_case3(self):
        with pytest.raises(ValueError):
            parse_spec_text("alpha = 2\nbeta = 3\ncase = 1\na = 1\nl = 0\ng = 1\nf = 1\n")


class TestSweep:
    def test_iter_valid_specs_matches_validator(self):
        for alpha, beta in ((1, 1), (2, 2), (2, 3), (3, 3)):
            generated = set(iter_valid_specs(alpha, beta))
            assert generated, (alpha, beta)
            for spec in generated:
                assert validate_spec(spec) == [], spec
            # brute-force the full candidate space and compare
            from z2ucodes.gf2poly import divisors_of_xn_minus_1

            brute = set()
            divs_a = divisors_of_xn_minus_1(alpha)
            divs_b = divisors_of_xn_minus_1(beta)
            for a in divs_a:
                lspace = [BinPoly(bits) for bits in range(1 << max(a.degree, 0))] if a.degree >= 0 else [ZERO]
                for g in divs_b:
                    for l in lspace:
                        for case in (1, 2):
                            cand = CodeSpec(alpha, beta, case, a, l, g)
                            if not validate_spec(cand):
                                brute.add(cand)
                    for f in divs_b:
                        if f.degree == 0 or not f.divides(g):
                            continue
                        for l in lspace:
                            cand = CodeSpec(alpha, beta, 3, a, l, g, f)
                            if not validate_spec(cand):
                                brute.add(cand)
            assert generated == brute, (alpha, beta)
