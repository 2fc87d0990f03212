from .hilbert import HilbertSeries, monomial_numerator
from .resolution import Resolution, betti_table_string, prune
from .presentation import (GradedModulePresentation, syzygies, minimal_free_resolution,
                           projective_dimension, depth_AB, regularity, hilbert_series,
                           is_cohen_macaulay, ext1_against_ring, twist_betti,
                           minimal_generator_count)

__all__ = ["HilbertSeries", "monomial_numerator", "Resolution", "betti_table_string", "prune",
           "GradedModulePresentation", "syzygies", "minimal_free_resolution",
           "projective_dimension", "depth_AB", "regularity", "hilbert_series",
           "is_cohen_macaulay", "ext1_against_ring", "twist_betti", "minimal_generator_count"]
