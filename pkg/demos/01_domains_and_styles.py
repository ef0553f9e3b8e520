"""Look at the two procedural domains and what stylization does to a scene.

Writes a contact sheet to demos_out/domains.ppm with one row per scene:
source image, target image, color-translated source and two stylized
versions of the source. Every row shares the same label map except the
target column.

    python3 demos/01_domains_and_styles.py
"""
from pathlib import Path

import numpy as np

from texinv.datasets import write_ppm
from texinv.procgen import CLASS_NAMES, generate_dataset, source_spec, target_spec, texture_bank
from texinv.stylize import channel_stats, color_transfer, stylize_image

OUT = Path("demos_out")
N = 4

source = generate_dataset(0, source_spec(), N, "source")
target = generate_dataset(0, target_spec(), N, "target_train")
styles = texture_bank(0, 2)

print("class frequencies (source, target):")
for c, name in enumerate(CLASS_NAMES):
    fs = np.mean([np.mean(im.labels == c) for im in source])
    ft = np.mean([np.mean(im.labels == c) for im in target])
    print(f"  {name:<10} {fs:6.3f} {ft:6.3f}")

mean, std = channel_stats(target)
rows = []
for src, tgt in zip(source, target):
    translated = color_transfer(src, mean, std)
    stylized = [stylize_image(src, s) for s in styles]
    # the label map survives stylization byte for byte
    assert all(s.labels.tobytes() == src.labels.tobytes() for s in stylized)
    tiles = [src.pixels, tgt.pixels, translated.pixels] + [s.pixels for s in stylized]
    rows.append(np.concatenate(tiles, axis=1))

OUT.mkdir(exist_ok=True)
write_ppm(OUT / "domains.ppm", np.concatenate(rows, axis=0))
print(f"wrote {OUT / 'domains.ppm'}")
