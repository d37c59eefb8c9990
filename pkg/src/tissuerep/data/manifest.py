"""Tile manifests and the patient-disjoint train/test split.

A manifest is a delimited text file with header
``tile_path,patient_id,cohort,label,source_x,source_y`` and one row per
tile. Splitting assigns whole patients to either side so no patient's
tiles leak across the boundary.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

MANIFEST_COLUMNS = ("tile_path", "patient_id", "cohort", "label", "source_x", "source_y")


@dataclass(frozen=True)
class ManifestEntry:
    tile_path: str
    patient_id: str
    cohort: str
    label: int
    source_x: int
    source_y: int


@dataclass
class Manifest:
    entries: list[ManifestEntry]

    def __len__(self) -> int:
        return len(self.entries)

    def patients(self) -> dict[str, list[int]]:
        """Map patient_id to the indices of that patient's entries."""
        out: dict[str, list[int]] = {}
        for i, e in enumerate(self.entries):
            out.setdefault(e.patient_id, []).append(i)
        return out

    def labels(self) -> np.ndarray:
        return np.array([e.label for e in self.entries], dtype=np.int64)

    def subset(self, indices: list[int]) -> "Manifest":
        return Manifest([self.entries[i] for i in indices])


def write_manifest(manifest: Manifest, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(MANIFEST_COLUMNS)
        for e in manifest.entries:
            writer.writerow([e.tile_path, e.patient_id, e.cohort, e.label, e.source_x, e.source_y])


def read_manifest(path: str | Path) -> Manifest:
    path = Path(path)
    entries = []
    with path.open("r", newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or tuple(reader.fieldnames) != MANIFEST_COLUMNS:
            raise ValueError(f"{path}: expected header {','.join(MANIFEST_COLUMNS)}")
        for row in reader:
            entries.append(ManifestEntry(
                tile_path=row["tile_path"],
                patient_id=row["patient_id"],
                cohort=row["cohort"],
                label=int(row["label"]),
                source_x=int(row["source_x"]),
                source_y=int(row["source_y"]),
            ))
    return Manifest(entries)


def split_by_patient(manifest: Manifest, test_fraction: float, seed: int) -> tuple[Manifest, Manifest]:
    """Split a manifest into patient-disjoint train/test manifests.

    Patients are shuffled with a seeded RNG and moved into the test side
    greedily until its tile count first reaches ``test_fraction`` of the
    total. The last remaining patient is never moved, so both sides stay
    non-empty.
    """
    if not manifest.entries:
        raise ValueError("cannot split an empty manifest")
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    by_patient = manifest.patients()
    if len(by_patient) < 2:
        raise ValueError("cannot split one patient")

    rng = np.random.default_rng(seed)
    order = sorted(by_patient)
    rng.shuffle(order)

    target = test_fraction * len(manifest)
    test_patients: list[str] = []
    count = 0
    for patient in order:
        if count >= target:
            break
        if len(test_patients) == len(order) - 1:
            break
        test_patients.append(patient)
        count += len(by_patient[patient])

    test_set = set(test_patients)
    test_idx = [i for p in test_patients for i in by_patient[p]]
    train_idx = [i for i, e in enumerate(manifest.entries) if e.patient_id not in test_set]
    return manifest.subset(sorted(train_idx)), manifest.subset(sorted(test_idx))
