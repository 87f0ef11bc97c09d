#!/usr/bin/env python3
"""The codec in action: encode, read one bucket, repair a loss, decode globally.

The running example stores 3 information symbols in 6 coded symbols split
into two buckets of 3.  Any 2 symbols of a bucket recover that bucket's 2
inputs; any 4 symbols overall recover everything (distance 3 tolerates any
2 erasures).
"""

import random

from gdcode import (
    RankDeficientError,
    build_code,
    decode_global,
    encode,
    group_decode,
    repair_symbol,
)

code = build_code(2, 3, 3, 2, seed=0)
design = code.design
rng = random.Random(1)

x = [rng.randrange(code.field.q) for _ in range(design.k)]
word = encode(code, x)
print(f"message  x = {[hex(v) for v in x]}")
for i, bucket in enumerate(word.buckets()):
    inputs = tuple(j + 1 for j in design.S[i])
    print(f"bucket {i + 1} = {[hex(v) for v in bucket]}   (encodes x{inputs})")
print()

print("=== group decode: any 2 symbols of a bucket recover its inputs ===\n")
for i in range(design.t):
    positions = design.buckets[i][:2]
    have = {p: word.symbols[p] for p in positions}
    got = group_decode(code, i, have)
    print(f"bucket {i + 1}, positions {tuple(p + 1 for p in positions)} -> "
          f"{[hex(v) for v in got]}")
print()

print("=== local repair: one lost symbol, two helpers from its bucket ===\n")
lost = 1  # position 2, 1-based
helpers = {0: word.symbols[0], 2: word.symbols[2]}
rebuilt = repair_symbol(code, lost, helpers)
print(f"position {lost + 1} erased; helpers {{1, 3}} rebuild {hex(rebuilt)} "
      f"(original {hex(word.symbols[lost])})")
print()

print("=== global decode: any 4 of the 6 symbols suffice ===\n")
keep = [0, 2, 3, 5]
have = {p: word.symbols[p] for p in keep}
print(f"keeping positions {[p + 1 for p in keep]} ->",
      [hex(v) for v in decode_global(code, have)])

print("\none whole bucket alone is NOT enough (it only spans its 2 inputs):")
try:
    decode_global(code, {p: word.symbols[p] for p in design.buckets[0]})
except RankDeficientError as e:
    print("  ", e)
