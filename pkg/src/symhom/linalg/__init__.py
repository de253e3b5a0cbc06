"""Exact integer linear algebra: sparse matrices, Smith normal form, homology."""

from .homology import (HomologyGroup, HomologyPresentation, betti_number, complex_homology,
                       homology, homology_presentation)
from .snf import invariant_factors, rank_over_field, smith_normal_form
from .sparse import SparseIntMatrix

__all__ = ["SparseIntMatrix", "HomologyGroup", "HomologyPresentation", "homology",
           "homology_presentation", "betti_number", "complex_homology",
           "smith_normal_form", "invariant_factors", "rank_over_field"]
