"""The Gray map, Lee weight, binary images, double cyclicity and
self-duality transfer.

Per symbol x + u*y the map sends (x, y) to (y, x + y), so it is
GF(2)-linear on the packed representation; images of code sets are
binary linear codes, which :func:`gray_image` still verifies rather
than assumes.

Two coordinate layouts are first class: ``interleaved`` keeps the two
image bits of each symbol adjacent, ``block`` groups all first image
bits and then all second image bits.  The layouts differ by a fixed
coordinate permutation, so weights agree; cyclicity claims do not, and
double cyclicity holds in block layout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ringr import RElem
from .codewords import (
    DEFAULT_BUDGET,
    BinaryCode,
    CodeSet,
    CodeSpec,
    Codeword,
    SpecValidationError,
    popcount,
    validate_spec,
)
from .duality import dual_bruteforce

LAYOUTS = ("interleaved", "block")


def gray_symbol(e: RElem) -> tuple[int, int]:
    """Per-symbol image: 0->(0,0), 1->(0,1), u->(1,1), 1+u->(1,0)."""
    return (e.q, e.p ^ e.q)


@dataclass(frozen=True)
class BinaryWord:
    """Binary image word with its coordinate layout tag."""

    bits: tuple[int, ...]
    layout: str

    def __len__(self) -> int:
        return len(self.bits)

    def weight(self) -> int:
        return sum(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


def gray_block_packed(w, alpha: int, beta: int):
    """Block-layout image on packed words: (a, p, q) -> (a, q, p^q)."""
    amask = (1 << alpha) - 1
    bmask = (1 << beta) - 1
    a = w & amask
    p = (w >> alpha) & bmask
    q = (w >> (alpha + beta)) & bmask
    return a | (q << alpha) | ((p ^ q) << (alpha + beta))


def gray_interleaved_packed(w, alpha: int, beta: int):
    """Interleaved-layout image: symbol j occupies bits alpha+2j, alpha+2j+1."""
    amask = (1 << alpha) - 1
    out = w & amask
    for j in range(beta):
        y = (w >> (alpha + beta + j)) & 1
        xy = ((w >> (alpha + j)) & 1) ^ y
        out = out | (y << (alpha + 2 * j)) | (xy << (alpha + 2 * j + 1))
    return out


def _gray_packed(w, alpha: int, beta: int, layout: str):
    if layout == "block":
        return gray_block_packed(w, alpha, beta)
    if layout == "interleaved":
        return gray_interleaved_packed(w, alpha, beta)
    raise ValueError(f"unknown layout {layout!r}")


def gray_map(c: Codeword, layout: str = "interleaved") -> BinaryWord:
    """Image of one codeword; length alpha + 2*beta."""
    packed = _gray_packed(c.to_packed(), c.alpha, c.beta, layout)
    n = c.alpha + 2 * c.beta
    return BinaryWord(tuple((packed >> i) & 1 for i in range(n)), layout)


def lee_weight(c: Codeword) -> int:
    """Symbol weights 0,1,2,1 for 0,1,u,1+u plus binary Hamming weight."""
    return bin(gray_block_packed(c.to_packed(), c.alpha, c.beta)).count("1")


def lee_distance(c1: Codeword, c2: Codeword) -> int:
    return lee_weight(c1 + c2)


def gray_image(code: CodeSet, layout: str = "interleaved") -> BinaryCode:
    """Image of the whole set; linearity is verified on construction."""
    arr = _gray_packed(code.packed(), code.alpha, code.beta, layout)
    return BinaryCode.from_packed_words(code.alpha + 2 * code.beta, arr)


def min_distance(code: CodeSet) -> int:
    """Minimum nonzero Lee weight, by exhaustive scan."""
    if len(code) < 2:
        raise ValueError("minimum distance requires at least two codewords")
    arr = code.packed()
    imgs = gray_block_packed(arr[arr != 0], code.alpha, code.beta)
    return int(popcount(imgs).min())


def is_double_cyclic(bcode: BinaryCode, alpha: int, two_beta: int) -> bool:
    """Closure under the simultaneous cyclic shift of both blocks."""
    if bcode.n != alpha + two_beta:
        raise ValueError("word length does not match alpha + 2*beta")
    arr = bcode.packed()
    amask = (1 << alpha) - 1
    ymask = (1 << two_beta) - 1
    a = arr & amask
    y = arr >> alpha
    if alpha:
        a = ((a << 1) | (a >> (alpha - 1))) & amask
    if two_beta:
        y = ((y << 1) | (y >> (two_beta - 1))) & ymask
    shifted = np.sort(a | (y << alpha))
    return bool(np.array_equal(shifted, arr))


def gray_dimension_formula(spec: CodeSpec) -> int:
    """Predicted binary image dimension from the generator degrees."""
    violations = validate_spec(spec)
    if violations:
        raise SpecValidationError(violations)
    n = spec.alpha + 2 * spec.beta
    da = spec.a.degree
    if spec.case == 1:
        return n - da - spec.g.degree
    if spec.case == 2:
        # "deg g(x^beta - 1)" resolved as deg(g) + beta.
        return n - da - (spec.g.degree + spec.beta)
    return n - da - spec.f.degree - spec.g.degree


@dataclass
class SelfDualTransferReport:
    """phi(C-dual) versus phi(C)-dual, per layout."""

    image_dual_equal: dict
    code_self_dual: bool
    image_self_dual: "dict | None"

    def ok(self) -> bool:
        checks = all(self.image_dual_equal.values())
        if self.code_self_dual and self.image_self_dual is not None:
            checks = checks and all(self.image_self_dual.values())
        return checks


def self_dual_transfer(code: CodeSet, budget: int = DEFAULT_BUDGET) -> SelfDualTransferReport:
    """Check phi(C-dual) = phi(C)-dual; for self-dual C also check the
    image is binary self-dual."""
    dual = dual_bruteforce(code, budget)
    equal = {}
    image_self = {}
    self_dual = dual == code
    for layout in LAYOUTS:
        img_of_dual = gray_image(dual, layout)
        dual_of_img = gray_image(code, layout).dual()
        equal[layout] = img_of_dual == dual_of_img
        if self_dual:
            img = gray_image(code, layout)
            image_self[layout] = img == img.dual()
    return SelfDualTransferReport(equal, self_dual, image_self if self_dual else None)


def bit_reverse(value: int, n: int) -> int:
    out = 0
    for i in range(n):
        if (value >> i) & 1:
            out |= 1 << (n - 1 - i)
    return out


def format_binary_code(bcode: BinaryCode, layout: str, d: "int | None" = None) -> str:
    """Golden-file export: header then sorted hex words, one per line.

    Words are encoded with the first coordinate as the most significant
    bit and sorted ascending.
    """
    if d is None:
        d = bcode.min_weight() if bcode.dimension > 0 else 0
    n = bcode.n
    width = (n + 3) // 4
    values = sorted(bit_reverse(int(w), n) for w in bcode.packed())
    lines = [f"n={n} k={bcode.dimension} d={d} layout={layout}"]
    lines.extend(f"{v:0{width}x}" for v in values)
    return "\n".join(lines) + "\n"
