"""Imports every class module so that each registers its pipeline."""

from . import class_i, class_ii, class_iii1, class_iii2, class_iv1, class_iv2  # noqa: F401
