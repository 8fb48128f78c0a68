"""Reconstructing the beauty image from render layers.

A renderer hands us a stack of per-pixel layers: each lobe (diffuse, glossy,
subsurface, transmission) split into color / direct light / indirect light,
plus environment and emission. The final image is

    sum over lobes of  color * (direct + indirect),  plus Env and Emit.

This script builds a random synthetic layer set, validates it, composes the
beauty image, and shows what the validator says about broken inputs.
"""

from pathlib import Path

import numpy as np

from mchsr.compositor import compose_final, synthetic_layer_set, validate
from mchsr.data import write_pfm
from mchsr.tensor import Tensor

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

rng = np.random.default_rng(7)
layers = synthetic_layer_set(rng, height=32, width=32)
print(f"built {len(layers)} layers: {', '.join(sorted(layers))}")

report = validate(layers)
print("validation:", report)

beauty = compose_final(layers)
print(f"composed beauty image: shape {beauty.shape}, "
      f"range [{beauty.data.min():.3f}, {beauty.data.max():.3f}]")
write_pfm(out_dir / "beauty.pfm", beauty)
print(f"wrote {out_dir / 'beauty.pfm'}")

# The composition is exactly linear in the light layers: doubling the
# environment pass adds exactly one extra copy of it.
doubled = dict(layers)
doubled["Env"] = Tensor(layers["Env"].data * 2.0)
delta = compose_final(doubled).data - beauty.data
print("linearity check: max |delta - Env| =",
      float(np.abs(delta - layers["Env"].data).max()))

# Break the set on purpose and watch the validator complain.
broken = dict(layers)
broken["DifCol"] = broken.pop("DiffCol")  # typo
bad = broken["GlossInd"].data.copy()
bad[0, 0, 3, 5] = np.nan
broken["GlossInd"] = Tensor(bad)
print("\nvalidator on a broken set:")
print(validate(broken))
