"""Exception types raised across the package.

Grouped under one base class so callers (the CLI in particular) can map
failures to exit codes without enumerating modules.
"""

__all__ = [
    "BoxMergeError",
    "MinAxisTooSmall",
    "ScaleExceedsAxis",
    "OddScale",
    "EmptyPointSet",
    "InsufficientPoints",
    "AllTransparent",
    "ImageTooSmall",
    "UnsupportedFormat",
    "DecodeError",
    "BitDepthUnsupported",
]


class BoxMergeError(Exception):
    """Base class for every error this package raises deliberately."""


class MinAxisTooSmall(BoxMergeError):
    """The shortest axis is too short to allow even one halving."""


class ScaleExceedsAxis(BoxMergeError):
    """A partition count larger than an axis length was requested."""


class OddScale(BoxMergeError):
    """A partition table with an odd partition count cannot be halved."""


class EmptyPointSet(BoxMergeError):
    """A measurement was requested on a set with no points."""


class InsufficientPoints(BoxMergeError):
    """Too few usable log-log points remain to fit a slope."""


class AllTransparent(BoxMergeError):
    """Every pixel fell at or below the alpha threshold."""


class ImageTooSmall(BoxMergeError):
    """The image is smaller than the 2x2 minimum for embedding."""


class UnsupportedFormat(BoxMergeError):
    """The input file is not one of the accepted raster formats."""


class DecodeError(BoxMergeError):
    """The input file matched a supported format but could not be decoded."""


class BitDepthUnsupported(BoxMergeError):
    """The input uses more than 8 bits per sample."""
