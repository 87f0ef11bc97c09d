#!/usr/bin/env python3
"""Walk through the design layer: parameters, distance bounds, incidence matrices.

A code here is described by four numbers (alpha, beta, k, t): k information
symbols, t buckets of beta stored symbols, each bucket decodable on its own
to the alpha inputs that feed it.  The price of that per-bucket autonomy is
minimum distance, and this script shows exactly how much.
"""

from gdcode import (
    bound_report,
    build_design,
    construct_m0,
    delta0_closed_form,
    matrix_profile,
    validate_params,
)


def show(alpha, beta, k, t):
    design = build_design(alpha, beta, k, t)
    rep = bound_report(design)
    print(f"(alpha={alpha}, beta={beta}, k={k}, t={t})  ->  n={design.n}, "
          f"s={design.s}, r={design.r}")
    print(f"  distance bound for this family : {rep.gdc_bound}")
    print(f"  classic locality bound         : {rep.lrc_bound}")
    print(f"  Singleton bound                : {rep.singleton}")
    print(f"  achieved by the construction   : {rep.achieved_d}")
    print("  incidence matrix M0 (rows = inputs, cols = buckets):")
    for line in design.m0.to_bitstrings():
        print(f"    {line}")
    print(f"  bucket input sets: "
          f"{[tuple(i + 1 for i in si) for si in design.S]} (1-based)")
    print()


print("=== three parameter sets, small to large ===\n")
show(2, 3, 3, 2)
show(2, 3, 5, 3)
show(4, 6, 6, 3)

print("=== what the constructor guarantees ===\n")
m0 = construct_m0(4, 6, 3)
prof = matrix_profile(m0)
print("construct_m0(alpha=4, k=6, t=3) ->", m0.to_bitstrings())
print(f"column weights   : {m0.col_weights()}  (all alpha)")
print(f"min row weight   : {prof.w_min}         (equals s)")
print(f"repetition count : {prof.gamma}         (ceil((k-r)/C(t,s)))")
print(f"distance deficit : {delta0_closed_form(m0, 6)}  "
      f"(d = n-k+1-deficit = {18 - 6 + 1 - delta0_closed_form(m0, 6)})")
print()

print("=== invalid parameters are rejected up front ===\n")
for params in [(3, 3, 5, 2), (1, 3, 5, 2)]:
    try:
        validate_params(*params)
    except Exception as e:
        print(f"validate_params{params}: {e}")
