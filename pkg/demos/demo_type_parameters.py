"""
Type parameters and the submodule census
========================================

A code has structure parameters (k0, k1, k2) with |C| = 2^k1 * 4^k2.
The package computes them twice: once from the stated degree formulas,
once by measuring the enumerated word set, and reports any gap.
"""

from z2ucodes import (
    CodeSpec,
    count_codes_census,
    count_codes_formula,
    parse_poly,
    puncture_x,
    puncture_y,
    subcode_cb,
    type_from_enumeration,
    type_from_formulas,
)
from z2ucodes.codewords import closure_of_spec

spec = CodeSpec(2, 3, 1, parse_poly("1+x^2"), parse_poly("1+x"), parse_poly("1+x"))
code = closure_of_spec(spec)

print("from degree formulas:", type_from_formulas(spec))
print("from enumeration:    ", type_from_enumeration(code))

# Punctured codes and the u-multiple subcode
print("|C_X| =", len(puncture_x(code)),
      " |C_Y| =", len(puncture_y(code)),
      " |C_b| =", len(subcode_cb(code)))

# How many codes exist at a given length?  The stated count 2^C2(a)*3^C2(b)
# undercounts: the census enumerates every submodule of the ambient space.
for alpha, beta in ((1, 1), (1, 3), (3, 1)):
    stated = count_codes_formula(alpha, beta)
    census = count_codes_census(alpha, beta)
    print(f"(alpha={alpha}, beta={beta}): stated {stated}, census {census}")
