"""Label schemas for the supported cohort layouts.

A schema names the classes of a corpus, an optional merge of raw label ids
into coarser ones, and the tissue-coverage threshold used when filtering
tiles (None disables the filter).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class LabelSchema:
    name: str
    classes: tuple[tuple[int, str], ...]
    merge_map: dict[int, int] | None = None
    coverage_threshold: float | None = None

    def __post_init__(self):
        if self.merge_map is not None:
            raw_ids = {cid for cid, _ in self.classes}
            missing = raw_ids - set(self.merge_map)
            if missing:
                raise ValueError(f"merge_map must cover every raw id, missing {sorted(missing)}")

    @property
    def class_ids(self) -> list[int]:
        return [cid for cid, _ in self.classes]

    @property
    def merged_ids(self) -> list[int]:
        if self.merge_map is None:
            return self.class_ids
        return sorted(set(self.merge_map.values()))

    def merge(self, label: int) -> int:
        """Map a raw label to its merged id (identity without a merge_map)."""
        if self.merge_map is None:
            return label
        if label not in self.merge_map:
            raise ValueError(f"label {label} not in schema '{self.name}'")
        return self.merge_map[label]


# Breast TMA tiles: labels 0-8 band the cancer-cell count, 8 the densest.
BREAST = LabelSchema(
    name="breast",
    classes=tuple((i, f"cell-density-{i}") for i in range(9)),
    coverage_threshold=0.70,
)

_COLORECTAL_RAW = (
    (0, "adipose"),
    (1, "background"),
    (2, "debris"),
    (3, "lymphocytes"),
    (4, "mucus"),
    (5, "smooth-muscle"),
    (6, "normal-mucosa"),
    (7, "stroma"),
    (8, "tumor"),
)

# Stroma and smooth muscle collapse into one "simple stroma" class (id 5),
# leaving 8 merged classes; tiles arrive pre-tiled and pre-normalized so no
# coverage filter applies.
COLORECTAL = LabelSchema(
    name="colorectal",
    classes=_COLORECTAL_RAW,
    merge_map={0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6, 7: 5, 8: 8},
    coverage_threshold=None,
)

# Lung WSIs carry a binary slide-level label; tiles keep the slide label.
LUNG = LabelSchema(
    name="lung",
    classes=((0, "normal"), (1, "tumor")),
    coverage_threshold=0.50,
)


def synthetic_schema(n_classes: int) -> LabelSchema:
    return LabelSchema(
        name="synthetic",
        classes=tuple((i, f"class-{i}") for i in range(n_classes)),
        coverage_threshold=None,
    )


BUILTIN_SCHEMAS = {"breast": BREAST, "colorectal": COLORECTAL, "lung": LUNG}


def get_schema(name: str, n_classes: int = 4) -> LabelSchema:
    if name == "synthetic":
        return synthetic_schema(n_classes)
    try:
        return BUILTIN_SCHEMAS[name]
    except KeyError:
        raise ValueError(f"unknown schema '{name}', expected one of "
                         f"{sorted(BUILTIN_SCHEMAS) + ['synthetic']}") from None
