"""Verifying every hand-written gradient against finite differences.

The backward passes in this package are written by hand, so each one is held
against an independent oracle: central differences of the forward pass in
double precision. Linear ops (convolution, concat, the pixel permutations)
agree to rounding error; the losses carry curvature and still land far below
their tolerances; the end-to-end network check perturbs every parameter of a
micro configuration.
"""

import time

from mchsr.gradcheck import run_suite

started = time.perf_counter()
results = run_suite(seed=0)
for r in results:
    print(r)
failed = [r for r in results if not r.passed]
print(f"\n{len(results) - len(failed)}/{len(results)} checks passed "
      f"in {time.perf_counter() - started:.1f}s")
