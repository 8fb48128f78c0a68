"""The deshuffle / shuffle pair: lossless resolution-channel exchange.

Deshuffle folds every alpha x alpha spatial block into channels, so a
high-resolution feature map can be processed on the low-resolution grid
without throwing information away (unlike pooling). Shuffle is its exact
inverse and doubles as the sub-pixel upsampler on the output side.
"""

import numpy as np

from mchsr.pixels import deshuffle, shuffle
from mchsr.tensor import Tensor

x = Tensor(np.arange(16, dtype=np.float32).reshape(1, 1, 4, 4))
print("input 4x4:")
print(x.data[0, 0])

folded = deshuffle(x, 2)
print(f"\nafter deshuffle(alpha=2): shape {folded.shape}")
for c in range(4):
    print(f"channel {c} (block offset dy={c // 2}, dx={c % 2}):")
    print(folded.data[0, c])

back = shuffle(folded, 2)
print("\nshuffle(deshuffle(x)) == x:", np.array_equal(back.data, x.data))

# Both directions are permutations: values and energy are untouched.
rng = np.random.default_rng(0)
big = Tensor(rng.standard_normal((2, 3, 16, 16)).astype(np.float32))
for alpha in (2, 4, 8):
    roundtrip = shuffle(deshuffle(big, alpha), alpha)
    same_values = np.array_equal(np.sort(deshuffle(big, alpha).data.ravel()),
                                 np.sort(big.data.ravel()))
    print(f"alpha={alpha}: bit-exact roundtrip {np.array_equal(roundtrip.data, big.data)}, "
          f"value multiset preserved {same_values}")
