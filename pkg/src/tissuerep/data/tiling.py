"""Tile extraction, tissue-coverage scoring, and offline augmentation.

Tiles are cut on a regular grid with integer stride
``max(1, round(tile_size * (1 - overlap_fraction)))``; partial tiles at the
borders are dropped so every tile has the configured size.
"""

from __future__ import annotations

import numpy as np

AUGMENT_NAMES = ("orig", "rot90", "rot180", "fliph", "flipv")


def tile_stride(tile_size: int, overlap_fraction: float) -> int:
    if not 0.0 <= overlap_fraction < 1.0:
        raise ValueError(f"overlap_fraction must be in [0, 1), got {overlap_fraction}")
    return max(1, int(round(tile_size * (1.0 - overlap_fraction))))


def tile_image(source: np.ndarray, tile_size: int,
               overlap_fraction: float) -> list[tuple[np.ndarray, int, int]]:
    """Cut a H x W x 3 source into (tile, x, y) triples in row-major order.

    x is the column of the tile's top-left corner, y its row.
    """
    if source.ndim != 3 or source.shape[2] != 3:
        raise ValueError(f"source must be H x W x 3, got shape {source.shape}")
    height, width = source.shape[:2]
    if height < tile_size or width < tile_size:
        raise ValueError(
            f"source too small: {height}x{width} cannot hold a {tile_size}px tile")
    stride = tile_stride(tile_size, overlap_fraction)
    tiles = []
    for y in range(0, height - tile_size + 1, stride):
        for x in range(0, width - tile_size + 1, stride):
            tiles.append((source[y:y + tile_size, x:x + tile_size].copy(), x, y))
    return tiles


def tile_grid_count(dim: int, tile_size: int, stride: int) -> int:
    """Closed-form number of tile positions along one axis."""
    if dim < tile_size:
        return 0
    return (dim - tile_size) // stride + 1


def saturation(tile: np.ndarray) -> np.ndarray:
    """Per-pixel HSV saturation, 0 where the pixel is black."""
    mx = tile.max(axis=-1)
    mn = tile.min(axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        sat = np.where(mx > 0, (mx - mn) / np.where(mx > 0, mx, 1.0), 0.0)
    return sat


def tissue_coverage(tile: np.ndarray, brightness_threshold: float = 0.85,
                    saturation_threshold: float = 0.10) -> float:
    """Fraction of pixels that look like tissue rather than background.

    A pixel counts as tissue when its brightness (channel mean) is below
    ``brightness_threshold`` or its saturation exceeds
    ``saturation_threshold``; bright unsaturated pixels are background.
    """
    brightness = tile.mean(axis=-1)
    tissue = (brightness < brightness_threshold) | (saturation(tile) > saturation_threshold)
    return float(tissue.mean())


def augment(tile: np.ndarray) -> list[np.ndarray]:
    """Return [identity, rot90, rot180, flip-horizontal, flip-vertical]."""
    if tile.shape[0] != tile.shape[1]:
        raise ValueError(f"augment requires a square tile, got {tile.shape[0]}x{tile.shape[1]}")
    return [
        tile.copy(),
        np.rot90(tile, k=1).copy(),
        np.rot90(tile, k=2).copy(),
        tile[:, ::-1].copy(),
        tile[::-1, :].copy(),
    ]
