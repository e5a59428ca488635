import random

import pytest

from z2ucodes.gf2poly import ZERO, parse_poly
from z2ucodes.ringr import R_ONE, R_ONE_U, R_U, R_ZERO
from z2ucodes.codewords import (
    CodeSet,
    CodeSpec,
    Codeword,
    closure_of_spec,
    iter_valid_specs,
    shift,
)
from z2ucodes.gray import (
    bit_reverse,
    format_binary_code,
    gray_dimension_formula,
    gray_image,
    gray_map,
    gray_symbol,
    is_double_cyclic,
    lee_distance,
    lee_weight,
    min_distance,
    self_dual_transfer,
)


def P(text):
    return parse_poly(text)


WORKED = CodeSpec(2, 3, 1, P("1+x^2"), P("1+x"), P("1+x"))


class TestSymbols:
    def test_table(self):
        assert gray_symbol(R_ZERO) == (0, 0)
        assert gray_symbol(R_ONE) == (0, 1)
        assert gray_symbol(R_U) == (1, 1)
        assert gray_symbol(R_ONE_U) == (1, 0)


class TestGrayMap:
    def test_worked_examples(self):
        c = Codeword((1,), (R_ONE_U, R_U))
        assert gray_map(c, "interleaved").bits == (1, 1, 0, 1, 1)
        assert gray_map(c, "block").bits == (1, 1, 1, 0, 1)
        z = Codeword.zero(1, 2)
        for layout in ("interleaved", "block"):
            assert gray_map(z, layout).bits == (0,) * 5

    def test_layouts_are_permutations_of_each_other(self):
        rng = random.Random(31)
        for _ in range(200):
            alpha, beta = rng.randint(1, 4), rng.randint(1, 4)
            c = Codeword.from_packed(rng.getrandbits(alpha + 2 * beta), alpha, beta)
            a = sorted(gray_map(c, "interleaved").bits)
            b = sorted(gray_map(c, "block").bits)
            assert a == b

    def test_unknown_layout(self):
        with pytest.raises(ValueError):
            gray_map(Codeword.zero(1, 1), "diagonal")


class TestLeeWeight:
    def test_worked_examples(self):
        assert lee_weight(Codeword((), (R_U, R_U, R_U))) == 6
        assert lee_weight(Codeword.zero(2, 3)) == 0
        assert lee_weight(Codeword((1,), (R_ONE_U,))) == 2

    def test_symbol_weights(self):
        weights = {R_ZERO: 0, R_ONE: 1, R_U: 2, R_ONE_U: 1}
        for e, w in weights.items():
            assert lee_weight(Codeword((), (e,))) == w

    @pytest.mark.parametrize("alpha,beta", [(1, 1), (2, 2)])
    def test_isometry_exhaustive(self, alpha, beta):
        n = alpha + 2 * beta
        words = [Codeword.from_packed(w, alpha, beta) for w in range(1 << n)]
        for c1 in words:
            for c2 in words:
                dl = lee_distance(c1, c2)
                for layout in ("interleaved", "block"):
                    g1, g2 = gray_map(c1, layout), gray_map(c2, layout)
                    assert dl == sum(b1 ^ b2 for b1, b2 in zip(g1.bits, g2.bits))


class TestGrayImage:
    def test_worked_example(self):
        code = closure_of_spec(WORKED)
        img = gray_image(code, "block")
        assert img.n == 8
        assert img.dimension == 5
        assert len(img) == len(code)

    def test_injective_on_sweep(self):
        for spec in list(iter_valid_specs(2, 3))[::7]:
            code = closure_of_spec(spec)
            for layout in ("interleaved", "block"):
                assert len(gray_image(code, layout)) == len(code)

    def test_image_linear_always(self):
        # phi is linear per symbol here, so images of submodules must be
        # linear; gray_image would raise otherwise.
        for spec in list(iter_valid_specs(3, 3))[::11]:
            gray_image(closure_of_spec(spec), "interleaved")


class TestMinDistance:
    def test_worked_example(self):
        assert min_distance(closure_of_spec(WORKED)) == 2

    def test_full_ambient(self):
        full = CodeSet.from_basis(1, 1, [1, 2, 4])
        assert min_distance(full) == 1

    def test_repetition_style(self):
        spec = CodeSpec(3, 1, 2, P("1+x+x^2"), ZERO, P("1+x"))
        code = closure_of_spec(spec)
        assert min_distance(code) == 3

    def test_trivial_rejected(self):
        with pytest.raises(ValueError):
            min_distance(CodeSet.from_basis(1, 1, []))


class TestDoubleCyclic:
    def test_extremes(self):
        from z2ucodes.codewords import BinaryCode

        zero = BinaryCode.from_basis(8, [])
        assert is_double_cyclic(zero, 2, 6)
        full = BinaryCode.from_basis(8, [1 << i for i in range(8)])
        assert is_double_cyclic(full, 2, 6)

    def test_block_layout_images_odd_beta(self):
        for spec in list(iter_valid_specs(2, 3))[::5]:
            code = closure_of_spec(spec)
            img = gray_image(code, "block")
            assert is_double_cyclic(img, 2, 6), spec

    def test_block_layout_images_even_beta(self):
        for spec in list(iter_valid_specs(1, 2))[::3]:
            code = closure_of_spec(spec)
            img = gray_image(code, "block")
            assert is_double_cyclic(img, 1, 4), spec

    def test_length_mismatch(self):
        from z2ucodes.codewords import BinaryCode

        with pytest.raises(ValueError):
            is_double_cyclic(BinaryCode.from_basis(8, []), 2, 4)

    def test_image_of_shift_is_double_shift(self):
        rng = random.Random(33)
        from z2ucodes.gray import gray_block_packed

        for _ in range(300):
            alpha, beta = rng.randint(1, 5), rng.randint(1, 5)
            w = rng.getrandbits(alpha + 2 * beta)
            from z2ucodes.codewords import shift_packed

            lhs = gray_block_packed(shift_packed(w, alpha, beta), alpha, beta)
            g = gray_block_packed(w, alpha, beta)
            amask = (1 << alpha) - 1
            ymask = (1 << (2 * beta)) - 1
            a, y = g & amask, g >> alpha
            a = ((a << 1) | (a >> (alpha - 1))) & amask
            y = ((y << 1) | (y >> (2 * beta - 1))) & ymask
            assert lhs == (a | (y << alpha))


class TestDimensionFormula:
    def test_worked_example(self):
        assert gray_dimension_formula(WORKED) == 5

    def test_full_space(self):
        spec = CodeSpec(2, 3, 1, P("1"), ZERO, P("1"))
        assert gray_dimension_formula(spec) == 8

    def test_case2_reading(self):
        spec = CodeSpec(2, 3, 2, P("1+x"), ZERO, P("1+x"))
        assert gray_dimension_formula(spec) == 2 + 6 - 1 - (1 + 3)

    def test_matches_rank_on_separable_sweep(self):
        for alpha, beta in ((2, 3), (3, 3), (3, 1)):
            for spec in iter_valid_specs(alpha, beta):
                if not spec.is_separable():
                    continue
                assert gray_dimension_formula(spec) == closure_of_spec(spec).rank, spec


class TestSelfDualTransfer:
    def test_separable_code(self):
        spec = CodeSpec(2, 3, 1, P("1+x"), ZERO, P("1+x"))
        rep = self_dual_transfer(closure_of_spec(spec))
        assert rep.image_dual_equal == {"interleaved": True, "block": True}
        assert not rep.code_self_dual

    def test_zero_code(self):
        rep = self_dual_transfer(CodeSet.from_basis(1, 1, []))
        assert all(rep.image_dual_equal.values())

    def test_self_dual_example(self):
        spec = CodeSpec(2, 1, 2, P("1+x"), ZERO, P("1"))
        rep = self_dual_transfer(closure_of_spec(spec))
        assert rep.code_self_dual
        assert rep.ok()
        assert rep.image_self_dual == {"interleaved": True, "block": True}


class TestExport:
    def test_bit_reverse(self):
        assert bit_reverse(0b001, 3) == 0b100
        assert bit_reverse(0b110, 3) == 0b011

    def test_golden_format(self):
        code = closure_of_spec(WORKED)
        out = format_binary_code(gray_image(code, "block"), "block")
        lines = out.splitlines()
        assert lines[0] == "n=8 k=5 d=2 layout=block"
        assert len(lines) == 1 + 32
        assert lines[1] == "00"
        assert lines[1:] == sorted(lines[1:])
