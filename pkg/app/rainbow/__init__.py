from .counting import (
    all_copies,
    combination_array,
    copies_through_pair,
    count_rainbow_copies,
    rainbow_fraction,
    rainbow_mask,
)
from .profile import ColorDegreeProfile, color_degree_profile, star_count_from_profiles

__all__ = [
    "ColorDegreeProfile",
    "all_copies",
    "color_degree_profile",
    "combination_array",
    "copies_through_pair",
    "count_rainbow_copies",
    "rainbow_fraction",
    "rainbow_mask",
    "star_count_from_profiles",
]
