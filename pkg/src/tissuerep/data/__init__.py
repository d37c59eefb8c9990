"""Tile corpora: extraction, filtering, normalization, manifests, splits."""

from .manifest import (Manifest, ManifestEntry, MANIFEST_COLUMNS,
                       read_manifest, split_by_patient, write_manifest)
from .reinhard import reinhard_normalize, reinhard_stats
from .schemas import (BREAST, COLORECTAL, LUNG, BUILTIN_SCHEMAS, LabelSchema,
                      get_schema, synthetic_schema)
from .synth import (SynthCorpus, classify_by_pixel_stats, load_tile,
                    synth_corpus, write_corpus)
from .tiling import (AUGMENT_NAMES, augment, tile_grid_count, tile_image,
                     tile_stride, tissue_coverage)

__all__ = [
    "Manifest", "ManifestEntry", "MANIFEST_COLUMNS", "read_manifest",
    "split_by_patient", "write_manifest", "reinhard_normalize",
    "reinhard_stats", "BREAST", "COLORECTAL", "LUNG", "BUILTIN_SCHEMAS",
    "LabelSchema", "get_schema", "synthetic_schema", "SynthCorpus",
    "classify_by_pixel_stats", "load_tile", "synth_corpus", "write_corpus",
    "AUGMENT_NAMES", "augment", "tile_grid_count", "tile_image",
    "tile_stride", "tissue_coverage",
]
