#!/usr/bin/env python3
"""Regenerate the bundled synthetic rasters under src/spatialph/data/.

Two base layouts at 64x64: a regular street-like grid and an irregular
partition with a few large cells.  Each layout is emitted twice, the
duplicate with a sprinkling of dark specks placed near existing structure so
the perturbation stays small in bottleneck distance.
"""

import random
from pathlib import Path

from spatialph.levelset import GrayImage, write_pgm

SIZE = 64
WHITE, DARK = 255, 0
SPECK = 120  # below the default threshold of 205


def gridlike() -> list[int]:
    px = [WHITE] * (SIZE * SIZE)
    lines = range(2, SIZE, 8)
    for c in lines:
        for i in range(2, SIZE - 2):
            px[c * SIZE + i] = DARK
            px[i * SIZE + c] = DARK
    return px


def irregular() -> list[int]:
    px = [WHITE] * (SIZE * SIZE)

    def wall(points):
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            steps = max(abs(x1 - x0), abs(y1 - y0))
            for s in range(steps + 1):
                x = round(x0 + (x1 - x0) * s / steps)
                y = round(y0 + (y1 - y0) * s / steps)
                px[y * SIZE + x] = DARK

    border = [(2, 2), (61, 2), (61, 61), (2, 61), (2, 2)]
    wall(border)
    wall([(2, 44), (20, 40), (38, 46), (61, 42)])
    wall([(26, 2), (30, 18), (22, 32), (28, 44)])
    wall([(44, 2), (40, 14), (50, 26), (44, 42)])
    wall([(2, 20), (14, 24), (26, 18)])
    return px


def with_specks(px: list[int], seed: int, count: int = 14) -> list[int]:
    rng = random.Random(seed)
    out = list(px)
    placed = 0
    while placed < count:
        x = rng.randrange(1, SIZE - 1)
        y = rng.randrange(1, SIZE - 1)
        if out[y * SIZE + x] != WHITE:
            continue
        near = any(
            out[(y + dy) * SIZE + (x + dx)] == DARK
            for dx in range(-3, 4)
            for dy in range(-3, 4)
            if 0 <= x + dx < SIZE and 0 <= y + dy < SIZE
        )
        if not near:
            continue
        out[y * SIZE + x] = SPECK
        placed += 1
    return out


def main() -> None:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "spatialph" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = gridlike()
    irreg = irregular()
    images = {
        "gridlike_a.pgm": grid,
        "gridlike_b.pgm": with_specks(grid, seed=11),
        "irregular_a.pgm": irreg,
        "irregular_b.pgm": with_specks(irreg, seed=23),
    }
    for name, px in images.items():
        write_pgm(GrayImage(SIZE, SIZE, tuple(px)), out_dir / name)
        print(f"wrote {out_dir / name}")


if __name__ == "__main__":
    main()
