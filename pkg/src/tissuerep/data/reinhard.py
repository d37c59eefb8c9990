"""Color-transfer stain normalization in a perceptual log-opponent space.

RGB tiles are mapped through LMS cone responses into the decorrelated
l-alpha-beta space, each channel is shifted and scaled so its statistics
match a reference, and the result is mapped back to RGB and clipped.
"""

from __future__ import annotations

import numpy as np

_RGB_TO_LMS = np.array([
    [0.3811, 0.5783, 0.0402],
    [0.1967, 0.7244, 0.0782],
    [0.0241, 0.1288, 0.8444],
])
_LMS_TO_RGB = np.linalg.inv(_RGB_TO_LMS)

_LOGLMS_TO_LAB = np.diag([1 / np.sqrt(3), 1 / np.sqrt(6), 1 / np.sqrt(2)]) @ np.array([
    [1.0, 1.0, 1.0],
    [1.0, 1.0, -2.0],
    [1.0, -1.0, 0.0],
])
_LAB_TO_LOGLMS = np.linalg.inv(_LOGLMS_TO_LAB)

# Floor on LMS responses before the log; keeps pure black finite.
_LMS_EPS = 1e-6


def rgb_to_lab(tile: np.ndarray) -> np.ndarray:
    lms = np.clip(tile.astype(np.float64) @ _RGB_TO_LMS.T, _LMS_EPS, None)
    return np.log10(lms) @ _LOGLMS_TO_LAB.T


def lab_to_rgb(lab: np.ndarray) -> np.ndarray:
    lms = np.power(10.0, lab @ _LAB_TO_LOGLMS.T)
    return np.clip(lms @ _LMS_TO_RGB.T, 0.0, 1.0)


def reinhard_stats(tile: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-channel mean and std of a tile in the l-alpha-beta space."""
    lab = rgb_to_lab(tile)
    flat = lab.reshape(-1, 3)
    return flat.mean(axis=0), flat.std(axis=0)


def reinhard_normalize(tile: np.ndarray, reference_mean: np.ndarray,
                       reference_std: np.ndarray) -> np.ndarray:
    """Match a tile's color statistics to a reference.

    Channels with zero standard deviation keep scale 1 (constant tiles are
    shifted to the reference mean but never amplified).
    """
    reference_std = np.asarray(reference_std, dtype=np.float64)
    reference_mean = np.asarray(reference_mean, dtype=np.float64)
    if np.any(reference_std <= 0):
        raise ValueError("reference_std must be strictly positive")
    lab = rgb_to_lab(tile)
    flat = lab.reshape(-1, 3)
    mean = flat.mean(axis=0)
    std = flat.std(axis=0)
    scale = np.where(std > 0, reference_std / np.where(std > 0, std, 1.0), 1.0)
    normed = (lab - mean) * scale + reference_mean
    return lab_to_rgb(normed)
