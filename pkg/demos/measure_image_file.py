"""
Measuring an image file from disk
=================================

The file-facing workflow: write a PNG, decode it back, embed the pixels
as 5-D points, and estimate the dimension.  Transparent pixels are left
out of the embedding, which is what lets a mostly-empty image measure
below D=2.
"""

import tempfile
from pathlib import Path

from boxmerge import (
    decode_image_file,
    estimate_dimension,
    fixture_image,
    image_to_pointset,
    write_image,
)

workdir = Path(tempfile.mkdtemp())

# The line fixture paints 256 coloured pixels on a transparent canvas.
path = workdir / "line.png"
write_image(fixture_image("line"), str(path))
print(f"wrote {path} ({path.stat().st_size} bytes)")

# Decode and embed.  Only the 256 opaque pixels survive the alpha policy,
# so the point set is a thin curve through the 5-D space.
image = decode_image_file(str(path))
points = image_to_pointset(image)
print(f"decoded {image.width}x{image.height}, embedded {len(points)} points")

est = estimate_dimension(points)
print(f"D = {est.dimension:.4f}   R^2 = {est.r_squared:.4f}")

# The same numbers are available from the command line:
#
#   boxmerge synth line -o line.png
#   boxmerge measure line.png --csv line.csv
#
# The CSV holds one row per scale (s, n, log2_s, log2_n, kept) ready for
# plotting the log-log line in any tool.
