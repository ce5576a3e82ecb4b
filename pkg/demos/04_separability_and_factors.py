# The seven-element list vanishes exactly when the state factors, and the
# factors are recoverable.  The rank-1 oracle (all 18 flattening minors)
# double-checks the decision on a random mixed pool.
import random

from tritangle import extract_factors, is_separable, rank1_oracle
from tritangle.randstates import mixed_pool, random_product_state

rng = random.Random(7)
product = random_product_state(rng)
print("random product separable:", is_separable(product))
f = extract_factors(product)
print("  fx =", tuple(str(v) for v in f.fx))
print("  fy =", tuple(str(v) for v in f.fy))
print("  fz =", tuple(str(v) for v in f.fz))
print("  outer product rebuilds amplitudes:", f.amplitudes() == product.amps)

agree = sum(is_separable(s) == rank1_oracle(s) for s in mixed_pool(seed=7, count=500))
print(f"decision vs rank-1 oracle agreement: {agree}/500")
