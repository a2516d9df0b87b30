"""Input validation utilities."""

from typing import Sequence, Tuple


def validate_flavor_count(L: int, max_flavors: int) -> Tuple[bool, str]:
    """Validate a number of flavors against the configured cap."""
    if L < 1:
        return False, f"Number of flavors must be positive, got {L}"
    if L > max_flavors:
        return False, f"L={L} exceeds the cap of {max_flavors} flavors (SPINFERMION_MAX_L)"
    return True, "Valid flavor count"


def validate_spin(two_s: int, max_flavors: int, mappable: bool = True) -> Tuple[bool, str]:
    """Validate ``two_s``; when ``mappable``, 2s+1 must also be a power of two."""
    if two_s < 1 or two_s % 2 == 0:
        return False, f"Only half-integer spins are supported, got two_s={two_s}"
    dim = two_s + 1
    if mappable and dim & (dim - 1):
        return False, f"2s+1 = {dim} is not a power of two"
    if dim > 2 ** max_flavors:
        return False, f"Dimension {dim} exceeds the cap of 2**{max_flavors} (SPINFERMION_MAX_L)"
    return True, "Valid spin"


def validate_alpha(alpha: int, L: int) -> Tuple[bool, str]:
    """Validate a 1-based flavor index."""
    if not 1 <= alpha <= L:
        return False, f"Flavor index alpha={alpha} outside 1..{L}"
    return True, "Valid flavor index"


def validate_occupations(occupations: Sequence[int]) -> Tuple[bool, str]:
    """Validate an occupation tuple of zeros and ones."""
    if not occupations:
        return False, "No occupations provided"
    if any(n not in (0, 1) for n in occupations):
        return False, "Occupations must be 0 or 1"
    return True, "Valid occupations"


def validate_samples(samples: int) -> Tuple[bool, str]:
    """Validate a sample count for randomized checks."""
    if samples < 1:
        return False, f"Sample count must be positive, got {samples}"
    return True, "Valid sample count"
