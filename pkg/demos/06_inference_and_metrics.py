"""Inference from layer directories plus the evaluation metrics.

Loads a checkpoint (training one quickly if demo 05 has not run), feeds it a
low-resolution directory and a high-resolution layer directory, writes the
super-resolved PFM, and scores a test split with both metric presets:
RelMSE in scene-linear space and PSNR in sRGB.
"""

from pathlib import Path

from mchsr import network, synthetic, training
from mchsr.data import load_manifest, nearest_downsample, read_pfm, write_pfm

out_dir = Path(__file__).parent / "out" / "toy_training"
data_dir = out_dir / "data"
ckpt = out_dir / "run" / "best.ckpt"

if not ckpt.exists():
    print("no checkpoint from demo 05 yet; running a quick training first...")
    if not (data_dir / "manifest.json").exists():
        synthetic.make_dataset(data_dir, n_train=16, n_val=2, n_test=2,
                               height=64, width=64, base_sigma=0.5, seed=0)
    training.train(training.TrainConfig(
        manifest=data_dir, out_dir=out_dir / "run", scale=2, seed=0,
        epochs=10_000, batch=16, lr=0.1, feat=8, groups=1, blocks=2,
        tile=32, patch=32, lrhs_layers=("Combined",), hrls_layers=("Combined",),
        max_steps=100,
    ))

params = network.load_checkpoint(ckpt)
print(f"checkpoint config: {params.config}")

manifest = load_manifest(data_dir)
entry = manifest.split("test")[0]

# Build an inference input pair: a low-resolution directory (downsampled
# 8-spp rendering) and the 1-spp high-resolution layer directory.
lrhs_dir = out_dir / "infer_lrhs"
lrhs_dir.mkdir(exist_ok=True)
hr = read_pfm(manifest.layer_dir(entry, 8) / "Combined.pfm")
write_pfm(lrhs_dir / "Combined.pfm", nearest_downsample(hr, 2))
hrls_dir = manifest.layer_dir(entry, 1)

sr = training.infer(params, lrhs_dir, hrls_dir, hrls_layers=("Combined",))
write_pfm(out_dir / "sr.pfm", sr)
print(f"super-resolved {entry.scene_id}: {sr.shape[3]}x{sr.shape[2]} -> {out_dir / 'sr.pfm'}")

for preset in ("bcr", "gharbi"):
    result = training.evaluate(params, manifest, split="test", preset=preset,
                               hrls_layers=("Combined",),
                               out_csv=out_dir / f"scores_{preset}.csv")
    print(f"\n{preset} preset:")
    print(result.table())
