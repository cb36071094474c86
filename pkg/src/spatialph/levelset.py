"""Level-set filtration of binary images.

The foreground of a binary image is grown outward at unit speed; the front at
time t is then the set of grid points within Euclidean distance t of the
foreground, so the whole evolution is captured exactly by a Euclidean
distance transform.  Each pixel centre becomes a grid vertex carrying its
arrival time, every unit pixel square is split into two triangles along the
top-left to bottom-right diagonal, and edges and triangles enter at the
maximum of their vertices.  The time-0 complex is exactly the foreground
structure; holes fill in as the front closes over them.

Images are read and written in the portable graymap/bitmap formats
(P1/P2/P4/P5).  In bitmaps, 1 is black and black is foreground.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .complexes import FilteredComplex
from .errors import EmptyForegroundError

Coord = tuple[int, int]  # (x, y), x = column, y = row


@dataclass(frozen=True)
class GrayImage:
    width: int
    height: int
    pixels: tuple[int, ...]  # row-major intensities in [0, 255]

    def __post_init__(self):
        if self.width * self.height != len(self.pixels):
            raise ValueError("pixel count does not match dimensions")
        if self.pixels and not all(0 <= p <= 255 for p in self.pixels):
            raise ValueError("intensities must lie in [0, 255]")

    def at(self, x: int, y: int) -> int:
        return self.pixels[y * self.width + x]


@dataclass(frozen=True)
class BinaryImage:
    width: int
    height: int
    foreground: frozenset[Coord]

    def __post_init__(self):
        for x, y in self.foreground:
            if not (0 <= x < self.width and 0 <= y < self.height):
                raise ValueError(f"foreground pixel ({x},{y}) out of bounds")

    def mask(self) -> np.ndarray:
        """Boolean (height, width) array, True on foreground."""
        m = np.zeros((self.height, self.width), dtype=bool)
        for x, y in self.foreground:
            m[y, x] = True
        return m


@dataclass(frozen=True)
class LevelSetField:
    """Arrival time of the expanding front at every grid vertex."""

    width: int
    height: int
    values: np.ndarray  # (height, width) float64

    def at(self, x: int, y: int) -> float:
        return float(self.values[y, x])


def threshold_image(img: GrayImage, cutoff: int = 205) -> BinaryImage:
    """Dark pixels are structure: foreground iff intensity < cutoff."""
    if not 0 <= cutoff <= 255:
        raise ValueError("cutoff must be in [0, 255]")
    fg = frozenset(
        (i % img.width, i // img.width)
        for i, p in enumerate(img.pixels)
        if p < cutoff
    )
    return BinaryImage(img.width, img.height, fg)


def arrival_times(img: BinaryImage) -> LevelSetField:
    """Euclidean distance from every grid vertex to the nearest foreground pixel.

    This is the exact arrival time of a front propagating outward from the
    foreground at unit speed.
    """
    if not img.foreground:
        raise EmptyForegroundError("image has no foreground pixels")
    background = ~img.mask()
    values = ndimage.distance_transform_edt(background)
    return LevelSetField(img.width, img.height, np.asarray(values, dtype=float))


def levelset_complex(img: BinaryImage) -> FilteredComplex:
    """Filtered complex of the unit-speed outward evolution of ``img``.

    Vertex ids are row-major pixel indices.  Each unit square is split along
    its top-left to bottom-right diagonal; edges and triangles enter at the
    max of their vertices.
    """
    field = arrival_times(img)
    w, h = img.width, img.height
    a = field.values
    pairs: list[tuple[tuple[int, ...], float]] = []
    for y in range(h):
        base = y * w
        for x in range(w):
            pairs.append(((base + x,), float(a[y, x])))
    for y in range(h):
        for x in range(w):
            tl = y * w + x
            v_tl = a[y, x]
            if x + 1 < w:
                pairs.append(((tl, tl + 1), float(max(v_tl, a[y, x + 1]))))
            if y + 1 < h:
                pairs.append(((tl, tl + w), float(max(v_tl, a[y + 1, x]))))
            if x + 1 < w and y + 1 < h:
                v_tr = a[y, x + 1]
                v_bl = a[y + 1, x]
                v_br = a[y + 1, x + 1]
                diag = float(max(v_tl, v_br))
                pairs.append(((tl, tl + w + 1), diag))
                pairs.append(((tl, tl + 1, tl + w + 1), float(max(diag, v_tr))))
                pairs.append(((tl, tl + w, tl + w + 1), float(max(diag, v_bl))))
    return FilteredComplex.from_pairs(pairs)


def _read_tokens(data: bytes, count: int, start: int) -> tuple[list[int], int]:
    """Read whitespace-separated integer tokens, skipping # comments."""
    tokens: list[int] = []
    i = start
    n = len(data)
    while len(tokens) < count and i < n:
        c = data[i : i + 1]
        if c == b"#":
            while i < n and data[i : i + 1] != b"\n":
                i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < n and not data[j : j + 1].isspace() and data[j : j + 1] != b"#":
                j += 1
            tokens.append(int(data[i:j]))
            i = j
    if len(tokens) < count:
        raise ValueError("truncated image file")
    return tokens, i


def read_image(path) -> "GrayImage | BinaryImage":
    """Read P1/P4 as a BinaryImage and P2/P5 as a GrayImage."""
    with open(path, "rb") as f:
        data = f.read()
    magic = data[:2]
    if magic not in (b"P1", b"P2", b"P4", b"P5"):
        raise ValueError(f"{path}: unsupported magic {magic!r}")
    if magic in (b"P1", b"P4"):
        (w, h), pos = _read_tokens(data, 2, 2)
        if magic == b"P1":
            # Plain bitmaps may pack digits without separators.
            bits = []
            i = pos
            while len(bits) < w * h and i < len(data):
                c = data[i : i + 1]
                if c == b"#":
                    while i < len(data) and data[i : i + 1] != b"\n":
                        i += 1
                elif c in (b"0", b"1"):
                    bits.append(int(c))
                    i += 1
                elif c.isspace():
                    i += 1
                else:
                    raise ValueError(f"{path}: unexpected byte {c!r} in P1 raster")
            if len(bits) < w * h:
                raise ValueError(f"{path}: truncated raster")
            fg = frozenset(
                (i % w, i // w) for i, b in enumerate(bits) if b == 1
            )
        else:
            pos += 1  # single whitespace after the header
            row_bytes = (w + 7) // 8
            fg = set()
            for y in range(h):
                row = data[pos + y * row_bytes : pos + (y + 1) * row_bytes]
                if len(row) < row_bytes:
                    raise ValueError(f"{path}: truncated raster")
                for x in range(w):
                    if row[x // 8] >> (7 - x % 8) & 1:
                        fg.add((x, y))
            fg = frozenset(fg)
        return BinaryImage(w, h, fg)
    (w, h, maxval), pos = _read_tokens(data, 3, 2)
    if not 0 < maxval <= 255:
        raise ValueError(f"{path}: only 8-bit graymaps supported, maxval={maxval}")
    if magic == b"P2":
        values, _ = _read_tokens(data, w * h, pos)
    else:
        pos += 1
        raster = data[pos : pos + w * h]
        if len(raster) < w * h:
            raise ValueError(f"{path}: truncated raster")
        values = list(raster)
    return GrayImage(w, h, tuple(values))


def write_pbm(img: BinaryImage, path) -> None:
    """Plain P1 bitmap, 1 = black = foreground."""
    with open(path, "w") as f:
        f.write(f"P1\n{img.width} {img.height}\n")
        for y in range(img.height):
            row = " ".join(
                "1" if (x, y) in img.foreground else "0" for x in range(img.width)
            )
            f.write(row + "\n")


def write_pgm(img: GrayImage, path) -> None:
    """Plain P2 graymap."""
    with open(path, "w") as f:
        f.write(f"P2\n{img.width} {img.height}\n255\n")
        for y in range(img.height):
            row = " ".join(
                str(img.pixels[y * img.width + x]) for x in range(img.width)
            )
            f.write(row + "\n")
