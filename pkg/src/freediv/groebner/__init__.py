from .ideal import (Ideal, DimensionReport, normal_form, buchberger, ideal_membership,
                    eliminate, saturate, saturate_iterated, colon, intersect, ideal_power,
                    dimension, height, ideal_equal, is_groebner_basis, minors_ideal)

__all__ = ["Ideal", "DimensionReport", "normal_form", "buchberger", "ideal_membership",
           "eliminate", "saturate", "saturate_iterated", "colon", "intersect", "ideal_power",
           "dimension", "height", "ideal_equal", "is_groebner_basis", "minors_ideal"]
