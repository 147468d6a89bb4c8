"""
Procedural floorplans and their rasterized maps
===============================================

Generate a chained-room layout and a grid-subdivision layout, populate
them with receivers, and rasterize each to the fixed-size map that the
dataset stages and the model consume: a wall slice plus a footprint mask.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from acousmap.scenes import (gen_grid_scene, gen_line_scene, populate_scene,
                             rasterize_floormap)

line = populate_scene(gen_line_scene(3, seed=9, size_range=(2.4, 3.0)),
                      seed=9, per_room=1)
grid = populate_scene(gen_grid_scene(seed=5, area=(9.0, 6.0), splits=(3, 2)),
                      seed=5, per_room=1)

fig, axes = plt.subplots(2, 2, figsize=(10, 9))
for row, scene in enumerate((line, grid)):
    fmap = rasterize_floormap(scene, slice_mode="center")

    # wall slice with door openings, over the inflated footprint
    ax = axes[row, 0]
    ax.imshow(fmap.scene_mask, origin="lower", cmap="Greys", alpha=0.3)
    ax.imshow(np.ma.masked_where(fmap.slice_map < 0.5, fmap.slice_map),
              origin="lower", cmap="autumn")
    ax.set_title(f"{scene.pattern} scene: slice + footprint")

    # receiver grid and source positions in metric coordinates
    ax = axes[row, 1]
    for room in scene.rooms:
        ox, oy = room.origin
        w, d = room.size
        ax.plot([ox, ox + w, ox + w, ox, ox],
                [oy, oy, oy + d, oy + d, oy], "k-", lw=1.0)
    ax.plot(scene.receivers[:, 0], scene.receivers[:, 1], ".",
            ms=2, label=f"{len(scene.receivers)} receivers")
    ax.plot(scene.sources[:, 0], scene.sources[:, 1], "r*",
            ms=12, label=f"{len(scene.sources)} sources")
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title("0.3 m receiver grid")

fig.tight_layout()
fig.savefig("demos/plot_floorplans.png", dpi=120)
print("wrote demos/plot_floorplans.png")
