"""End-to-end cyclic sieving: fixed-point counts against root-of-unity
evaluations, entirely in integer arithmetic.

The sieving polynomial in type A is a q-power times a Kostka-Foulkes
polynomial.  Evaluation at a root of unity is decided by cyclotomic
divisibility, so a verdict is a theorem about algebraic integers, not a
numerical coincidence.
"""
import json

from minuscule import (
    IntPolynomial,
    WeightSequence,
    build_root_system,
    csp_check,
    cyclotomic,
    eval_matches,
    type_a_csp_polynomial,
)

print("small cyclotomic polynomials:")
for r in (1, 2, 3, 4, 6, 12):
    print(f"  Phi_{r} = {cyclotomic(r)}")

f = IntPolynomial((1, 0, 1))
print("\n1 + q^2 at the primitive 4th root of unity is 0:",
      eval_matches(f, 4, 1, 0))

a1 = build_root_system("A", 1)
seq = WeightSequence(a1, ((1,),) * 8)
print("\nA1, eight factors: sieving polynomial",
      type_a_csp_polynomial(seq))
report = csp_check(seq, 1)
print("fixed-point counts of the rotation powers:", report.fixed_counts)
print("verdict:", report.verdict)

a3 = build_root_system("A", 3)
seq = WeightSequence(a3, (a3.fundamental_weight(2),) * 4)
print("\nA3, four copies of omega_2, checking every admissible shift:")
for ell in (1, 2, 4):
    report = csp_check(seq, ell)
    print(f"  ell={ell}: {json.dumps(report.to_json_dict())}")
