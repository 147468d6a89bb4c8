"""
Dataset pipeline: labels, features and baseline maps
====================================================

Run the staged pipeline on a tiny two-scene dataset, then pull one test
sample out of the artifact tree: the rasterized input features, the
pooled-and-smoothed label heatmap, and two baseline predictions for the
same channel. Rerunning this script is a no-op rebuild; every stage is
skipped off the manifest.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from acousmap.heatmaps import layout_labels, omni_layout
from acousmap.pipeline import run_pipeline
from acousmap.scenes import Scene
from acousmap.tensorfile import read_tensor

CFG = {
    "name": "demo-maps",
    "seed": 21,
    "n_scenes": 2,
    "scene": {"rooms": 2, "size_range": [2.4, 3.0],
              "height_range": [2.4, 2.6], "receiver_stride": 2,
              "sources_per_room": 1},
    "sim": {"max_order": 5},
    "split": {"kind": "scene", "train_fraction": 0.5},
    "baselines": ["avg-rir", "scene-avg-map"],
}

out = "demos/run"
manifest = run_pipeline(CFG, out, through="baseline")
sid = manifest["splits"]["test"][0]
scene = Scene.load(f"{out}/scenes/{sid}.json")
print(f"test scene {sid}: {len(scene.rooms)} rooms, "
      f"{len(scene.receivers)} receivers, {len(scene.sources)} sources")

channel = layout_labels(omni_layout()).index("c50@1000")

features = read_tensor(f"{out}/features/{sid}/s00.amap")
label = read_tensor(f"{out}/labels/{sid}/s00_values.amap")
lmask = read_tensor(f"{out}/labels/{sid}/s00_mask.amap") > 0.5

panels = [("source blob (input)", features[:, :, 2], None),
          ("label c50@1000", label[:, :, channel], lmask)]
for kind in ("avg-rir", "scene-avg-map"):
    pred = read_tensor(f"{out}/predictions/{kind}/{sid}_s00_values.amap")
    pmask = read_tensor(f"{out}/predictions/{kind}/{sid}_s00_mask.amap") > 0.5
    panels.append((f"{kind} c50@1000", pred[:, :, channel], pmask & lmask))

fig, axes = plt.subplots(1, len(panels), figsize=(4 * len(panels), 4))
shown = [np.where(m, v, np.nan) if m is not None else v
         for _, v, m in panels]
vmin = np.nanmin([np.nanmin(s) for s in shown[1:]])
vmax = np.nanmax([np.nanmax(s) for s in shown[1:]])
for ax, (title, _, _), img in zip(axes, panels, shown):
    kw = {} if title.startswith("source") else {"vmin": vmin, "vmax": vmax}
    im = ax.imshow(img, origin="lower", cmap="viridis", **kw)
    ax.set_title(title, fontsize=9)
    ax.set_xticks([])
    ax.set_yticks([])
fig.colorbar(im, ax=axes[-1], shrink=0.8, label="dB")

fig.tight_layout()
fig.savefig("demos/plot_dataset_maps.png", dpi=120)
print("wrote demos/plot_dataset_maps.png")
