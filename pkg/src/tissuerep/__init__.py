"""Adversarial representation learning for histology tiles.

A GAN with a mapping network, style-conditioned generator, critic and a
jointly trained encoder that projects images into the generator's latent
space, plus the downstream evaluations that consume those projections:
2D latent visualization, linear tissue-type classification, and
attention-based multiple instance learning over bags of tile embeddings.
"""

__version__ = "0.1.0"
