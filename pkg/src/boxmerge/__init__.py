"""Box-dimension estimation for integer point sets and colour images.

The pipeline: embed data as non-negative integer points (images become
(x, y, r, g, b) tuples), count occupied grid boxes across a dyadic ladder
of scales by merging the finest partition downwards, drop saturated
scales, and fit a line through the surviving log-log pairs.  The slope is
the dimension estimate.
"""

from .core import (
    AxisSpec,
    PartitionTable,
    PointSet,
    ScalePlan,
    ScaleSeries,
    box_merge_series,
    initial_partition,
    make_scale_plan,
    merge_halve,
)
from .errors import (
    AllTransparent,
    BitDepthUnsupported,
    BoxMergeError,
    DecodeError,
    EmptyPointSet,
    ImageTooSmall,
    InsufficientPoints,
    MinAxisTooSmall,
    OddScale,
    ScaleExceedsAxis,
    UnsupportedFormat,
)
from .estimator import (
    DimensionEstimate,
    FitConfig,
    apply_cutoff,
    estimate_dimension,
    fit_loglog,
)
from .imaging import (
    FIXTURE_KINDS,
    AlphaPolicy,
    RasterImage,
    decode_image_file,
    fixture_image,
    gen_diagonal_line,
    gen_fixture,
    gen_gradient_plane,
    gen_noise,
    image_to_pointset,
    write_image,
)
from .oracle import naive_box_count, naive_series

__version__ = "0.1.0"

__all__ = [
    "AxisSpec",
    "PointSet",
    "ScalePlan",
    "PartitionTable",
    "ScaleSeries",
    "make_scale_plan",
    "initial_partition",
    "merge_halve",
    "box_merge_series",
    "naive_box_count",
    "naive_series",
    "FitConfig",
    "DimensionEstimate",
    "apply_cutoff",
    "fit_loglog",
    "estimate_dimension",
    "RasterImage",
    "AlphaPolicy",
    "image_to_pointset",
    "gen_diagonal_line",
    "gen_gradient_plane",
    "gen_noise",
    "gen_fixture",
    "fixture_image",
    "FIXTURE_KINDS",
    "decode_image_file",
    "write_image",
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
    "__version__",
]
