"""Procedural desk-scale tile corpus with a known class signal.

Each class owns a hue band and a blob-density band: tiles show dark
nuclei-like blobs of the class hue over a pale, faintly tinted background,
with per-patient color jitter so patient-disjoint splits are nontrivial.
``classify_by_pixel_stats`` inverts that construction and serves as an
independent oracle for anything claiming to preserve class identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image
from scipy import ndimage

from .manifest import Manifest, ManifestEntry
from .tiling import tissue_coverage, saturation

# Blob-count band centers: class c averages BLOB_BASE + BLOB_STEP * c blobs.
BLOB_BASE = 4
BLOB_STEP = 6


def class_hue(label: int, n_classes: int) -> float:
    return label / n_classes


def _hsv_to_rgb(h: np.ndarray, s: np.ndarray, v: np.ndarray) -> np.ndarray:
    h = np.mod(h, 1.0) * 6.0
    i = np.floor(h).astype(int) % 6
    f = h - np.floor(h)
    p = v * (1 - s)
    q = v * (1 - f * s)
    t = v * (1 - (1 - f) * s)
    choices = np.stack([
        np.stack([v, t, p], axis=-1),
        np.stack([q, v, p], axis=-1),
        np.stack([p, v, t], axis=-1),
        np.stack([p, q, v], axis=-1),
        np.stack([t, p, v], axis=-1),
        np.stack([v, p, q], axis=-1),
    ])
    return np.take_along_axis(choices, i[None, ..., None], axis=0)[0]


def _hue(rgb: np.ndarray) -> np.ndarray:
    mx = rgb.max(axis=-1)
    mn = rgb.min(axis=-1)
    delta = mx - mn
    safe = np.where(delta > 0, delta, 1.0)
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    h = np.where(mx == r, (g - b) / safe,
                 np.where(mx == g, 2.0 + (b - r) / safe, 4.0 + (r - g) / safe))
    return np.where(delta > 0, np.mod(h / 6.0, 1.0), 0.0)


def circular_mean_hue(hues: np.ndarray) -> float:
    angles = hues * 2 * np.pi
    return float(np.mod(np.arctan2(np.sin(angles).mean(), np.cos(angles).mean())
                        / (2 * np.pi), 1.0))


def circular_hue_distance(a: float, b: float) -> float:
    d = abs(a - b) % 1.0
    return min(d, 1.0 - d)


def _render_tile(rng: np.random.Generator, tile_size: int, hue: float,
                 n_blobs: int, brightness: float) -> np.ndarray:
    base = _hsv_to_rgb(np.full((tile_size, tile_size), hue),
                       np.full((tile_size, tile_size), 0.05),
                       np.full((tile_size, tile_size), brightness))
    img = base + rng.normal(0.0, 0.01, size=base.shape)
    yy, xx = np.mgrid[0:tile_size, 0:tile_size].astype(np.float64)
    alpha = np.zeros((tile_size, tile_size))
    scale = tile_size / 32.0
    for _ in range(n_blobs):
        cx = rng.uniform(0, tile_size)
        cy = rng.uniform(0, tile_size)
        radius = rng.uniform(1.8, 3.2) * scale
        dist = np.sqrt((xx - cx) ** 2 + (yy - cy) ** 2)
        alpha = np.maximum(alpha, np.clip(radius - dist, 0.0, 1.0))
    blob_color = _hsv_to_rgb(np.full((tile_size, tile_size), np.mod(hue, 1.0)),
                             np.full((tile_size, tile_size), 0.55),
                             np.full((tile_size, tile_size), 0.45))
    img = img * (1 - alpha[..., None]) + blob_color * alpha[..., None]
    return np.clip(img, 0.0, 1.0)


@dataclass
class SynthCorpus:
    images: np.ndarray          # N x H x W x 3 uint8
    patient_ids: list[str]
    labels: np.ndarray          # N int64
    n_classes: int

    def __len__(self) -> int:
        return len(self.patient_ids)


def synth_corpus(n_classes: int, n_patients: int, tiles_per_patient: int,
                 tile_size: int, seed: int) -> SynthCorpus:
    """Generate a deterministic corpus whose class signal is hue + blob density."""
    if min(n_classes, n_patients, tiles_per_patient, tile_size) < 1:
        raise ValueError("all corpus counts must be >= 1")
    rng = np.random.default_rng(seed)
    images = np.empty((n_patients * tiles_per_patient, tile_size, tile_size, 3), dtype=np.uint8)
    patient_ids: list[str] = []
    labels = np.empty(n_patients * tiles_per_patient, dtype=np.int64)
    i = 0
    for p in range(n_patients):
        patient = f"P{p:03d}"
        hue_jitter = rng.uniform(-0.02, 0.02)
        brightness = rng.uniform(0.90, 0.96)
        for t in range(tiles_per_patient):
            label = t % n_classes
            hue = class_hue(label, n_classes) + hue_jitter + rng.uniform(-0.01, 0.01)
            n_blobs = BLOB_BASE + BLOB_STEP * label + rng.integers(-1, 2)
            tile = _render_tile(rng, tile_size, hue, max(1, n_blobs), brightness)
            images[i] = (tile * 255.0 + 0.5).astype(np.uint8)
            patient_ids.append(patient)
            labels[i] = label
            i += 1
    return SynthCorpus(images=images, patient_ids=patient_ids, labels=labels,
                       n_classes=n_classes)


def classify_by_pixel_stats(image: np.ndarray, n_classes: int) -> int:
    """Predict the class of a (possibly reconstructed) tile from pixel statistics.

    Uses the circular-mean hue of tissue pixels plus the connected-component
    blob count; hue carries most of the weight since blob counts blur badly
    in reconstructions.
    """
    tile = image.astype(np.float64)
    if tile.max() > 1.5:
        tile = tile / 255.0
    brightness = tile.mean(axis=-1)
    mask = (brightness < 0.85) | (saturation(tile) > 0.10)
    if mask.mean() < 0.02:
        mask = np.ones(tile.shape[:2], dtype=bool)
    hue = circular_mean_hue(_hue(tile[mask]))
    blob_mask = brightness < 0.70
    n_blobs = int(ndimage.label(blob_mask)[1])

    best, best_score = 0, np.inf
    for c in range(n_classes):
        hue_term = (circular_hue_distance(hue, class_hue(c, n_classes)) / 0.5) ** 2
        blob_term = ((n_blobs - (BLOB_BASE + BLOB_STEP * c)) / BLOB_STEP) ** 2
        score = hue_term + 0.05 * blob_term
        if score < best_score:
            best, best_score = c, score
    return best


def write_corpus(corpus: SynthCorpus, out_dir: str | Path,
                 tile_subdir: str = "tiles") -> Manifest:
    """Write corpus tiles as PNGs and return the matching manifest.

    Tile paths in the manifest are relative to ``out_dir``.
    """
    out_dir = Path(out_dir)
    tile_dir = out_dir / tile_subdir
    tile_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for i in range(len(corpus)):
        name = f"{corpus.patient_ids[i]}_{i}_0_orig.png"
        Image.fromarray(corpus.images[i]).save(tile_dir / name)
        entries.append(ManifestEntry(
            tile_path=f"{tile_subdir}/{name}",
            patient_id=corpus.patient_ids[i],
            cohort="synthetic",
            label=int(corpus.labels[i]),
            source_x=i,
            source_y=0,
        ))
    return Manifest(entries)


def load_tile(manifest_dir: str | Path, tile_path: str) -> np.ndarray:
    """Read one tile as float32 RGB in [0, 1]."""
    full = Path(tile_path)
    if not full.is_absolute():
        full = Path(manifest_dir) / full
    with Image.open(full) as img:
        arr = np.asarray(img.convert("RGB"), dtype=np.float32) / 255.0
    return arr


def corpus_coverage_check(corpus: SynthCorpus) -> np.ndarray:
    """Tissue coverage of every tile (diagnostics for filter settings)."""
    return np.array([tissue_coverage(corpus.images[i] / 255.0) for i in range(len(corpus))])
