"""Colour images as 5-D point sets, plus fixture generators and file I/O.

A pixel at column x, row y with colour (r, g, b) becomes the integer point
(x, y, r, g, b) in a space whose colour axes always span 256 values.  Fully
transparent pixels carry no colour information and are skipped, so flat
regions, gradients and noise separate purely by how much of the colour
volume they occupy.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError

from .core import PointSet
from .errors import (
    AllTransparent,
    BitDepthUnsupported,
    DecodeError,
    ImageTooSmall,
    UnsupportedFormat,
)

__all__ = [
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
]

COLOUR_DEPTH = 256

FIXTURE_KINDS = ("line", "plane", "noise1", "noise2", "noise3")


@dataclass(frozen=True, eq=False, init=False)
class RasterImage:
    """An RGBA raster: ``pixels`` is a read-only (height, width, 4) uint8 array."""

    pixels: np.ndarray

    def __init__(self, pixels: np.ndarray) -> None:
        arr = np.asarray(pixels)
        if arr.ndim != 3 or arr.shape[2] != 4 or arr.dtype != np.uint8:
            raise ValueError(
                f"pixels must be a (height, width, 4) uint8 array, got {arr.shape} {arr.dtype}"
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    def __repr__(self) -> str:
        return f"RasterImage({self.width}x{self.height})"


@dataclass(frozen=True)
class AlphaPolicy:
    """Which pixels count: those with alpha strictly above ``threshold``."""

    threshold: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.threshold <= 255:
            raise ValueError(f"alpha threshold must lie in [0, 255], got {self.threshold!r}")


def image_to_pointset(image: RasterImage, policy: AlphaPolicy | None = None) -> PointSet:
    """Embed an image as (x, y, r, g, b) points.

    The spatial axes take their lengths from the image; the colour axes are
    always 256 long regardless of which values actually occur, so colour
    sparseness is measured against the full colour volume.  Raises
    ``ImageTooSmall`` below 2x2 (no scale ladder exists) and
    ``AllTransparent`` when the alpha policy admits no pixel.
    """
    pol = policy or AlphaPolicy()
    if image.width < 2 or image.height < 2:
        raise ImageTooSmall(f"need at least 2x2 pixels, got {image.width}x{image.height}")
    ys, xs = np.nonzero(image.pixels[:, :, 3] > pol.threshold)
    if xs.size == 0:
        raise AllTransparent("no pixel passes the alpha threshold")
    rgb = image.pixels[ys, xs, :3].astype(np.int64)
    points = np.column_stack([xs.astype(np.int64), ys.astype(np.int64), rgb])
    axes = (image.width, image.height, COLOUR_DEPTH, COLOUR_DEPTH, COLOUR_DEPTH)
    return PointSet(axes, points)


def _fixture_channels(size: int, noisy_channels: int, seed: int) -> np.ndarray:
    """(size, size, 3) uint8 colour block shared by the synthetic fixtures.

    The deterministic base is a horizontal red ramp, a vertical green
    counter-ramp and a flat blue mid-level; the first ``noisy_channels``
    of (r, g, b) are then replaced with uniform bytes from a seeded PCG64
    stream so every noise level is reproducible from its seed.
    """
    ramp = ((np.arange(size, dtype=np.int64) * COLOUR_DEPTH) // size).astype(np.uint8)
    rgb = np.empty((size, size, 3), dtype=np.uint8)
    rgb[:, :, 0] = ramp[np.newaxis, :]
    rgb[:, :, 1] = (255 - ramp)[:, np.newaxis]
    rgb[:, :, 2] = 128
    if noisy_channels:
        rng = np.random.default_rng(seed)
        noise = rng.integers(0, COLOUR_DEPTH, size=(size, size, noisy_channels), dtype=np.uint8)
        rgb[:, :, :noisy_channels] = noise
    return rgb


def _full_frame_points(rgb: np.ndarray) -> PointSet:
    size = rgb.shape[0]
    ys, xs = np.divmod(np.arange(size * size, dtype=np.int64), size)
    colours = rgb.reshape(-1, 3).astype(np.int64)
    points = np.column_stack([xs, ys, colours])
    axes = (size, size, COLOUR_DEPTH, COLOUR_DEPTH, COLOUR_DEPTH)
    return PointSet(axes, points)


def gen_diagonal_line(size: int = 256) -> PointSet:
    """One point per step of the main diagonal, colour sliding with position.

    Runs from (0, 0, 255, 0, 0) to (size-1, size-1, 0, 255, 255): a curve
    through the 5-D space, so its dimension is 1.
    """
    i = np.arange(size, dtype=np.int64)
    points = np.column_stack([i, i, (size - 1) - i, i, i])
    axes = (size, size, COLOUR_DEPTH, COLOUR_DEPTH, COLOUR_DEPTH)
    return PointSet(axes, points)


def gen_gradient_plane(size: int = 256) -> PointSet:
    """Full frame of smoothly varying colour; colour is a function of position.

    Red ramps 0..255 left to right, green 255..0 top to bottom, blue stays
    at 128, so the occupied set is a 2-D sheet in the 5-D space.
    """
    return _full_frame_points(_fixture_channels(size, 0, 0))


def gen_noise(noisy_channels: int, seed: int = 0, size: int = 256) -> PointSet:
    """Full frame with 1-3 colour channels replaced by uniform random bytes.

    Each independent noisy channel adds one dimension on top of the 2-D
    spatial sheet, giving expected dimensions 3, 4 and 5.
    """
    if not 1 <= noisy_channels <= 3:
        raise ValueError(f"noisy_channels must be 1, 2 or 3, got {noisy_channels!r}")
    return _full_frame_points(_fixture_channels(size, noisy_channels, seed))


def gen_fixture(kind: str, seed: int = 0) -> PointSet:
    """Build one of the named 256x256 synthetic point sets."""
    if kind == "line":
        return gen_diagonal_line()
    if kind == "plane":
        return gen_gradient_plane()
    if kind in ("noise1", "noise2", "noise3"):
        return gen_noise(int(kind[-1]), seed)
    raise ValueError(f"unknown fixture kind {kind!r}; expected one of {FIXTURE_KINDS}")


def fixture_image(kind: str, seed: int = 0, size: int = 256) -> RasterImage:
    """Render a fixture as an RGBA image whose embedding matches gen_fixture.

    The line fixture paints its single diagonal on a fully transparent
    canvas; the full-frame fixtures are opaque everywhere.
    """
    pixels = np.zeros((size, size, 4), dtype=np.uint8)
    if kind == "line":
        if size != COLOUR_DEPTH:
            raise ValueError("the line fixture is defined for size == 256 only")
        i = np.arange(size)
        pixels[i, i, 0] = (size - 1 - i).astype(np.uint8)
        pixels[i, i, 1] = i.astype(np.uint8)
        pixels[i, i, 2] = i.astype(np.uint8)
        pixels[i, i, 3] = 255
        return RasterImage(pixels)
    if kind == "plane":
        rgb = _fixture_channels(size, 0, 0)
    elif kind in ("noise1", "noise2", "noise3"):
        rgb = _fixture_channels(size, int(kind[-1]), seed)
    else:
        raise ValueError(f"unknown fixture kind {kind!r}; expected one of {FIXTURE_KINDS}")
    pixels[:, :, :3] = rgb
    pixels[:, :, 3] = 255
    return RasterImage(pixels)


_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"

# PNG colour types: 0 grey, 2 truecolour, 3 palette, 4 grey+alpha, 6 RGBA.
_PNG_DIRECT_COLOUR_TYPES = {0, 2, 4, 6}


def _decode_png(data: bytes) -> RasterImage:
    """Decode an 8-bit direct-colour PNG to RGBA.

    The IHDR chunk sits at a fixed offset right after the signature, so
    bit depth and colour type are checked on the raw bytes before any
    pixel decoding: palette images and non-8-bit depths are refused
    explicitly rather than silently converted.
    """
    if len(data) < 26 or data[12:16] != b"IHDR":
        raise DecodeError("PNG too short or missing IHDR chunk")
    bit_depth = data[24]
    colour_type = data[25]
    if colour_type not in _PNG_DIRECT_COLOUR_TYPES:
        raise UnsupportedFormat(
            f"palette/indexed PNG (colour type {colour_type}) is not supported"
        )
    if bit_depth != 8:
        raise BitDepthUnsupported(f"only 8-bit channels are supported, got {bit_depth}-bit")
    try:
        with Image.open(io.BytesIO(data)) as img:
            rgba = img.convert("RGBA")
            arr = np.asarray(rgba, dtype=np.uint8)
    except (UnidentifiedImageError, OSError, SyntaxError, ValueError) as exc:
        raise DecodeError(f"PNG decode failed: {exc}") from exc
    return RasterImage(arr)


def _decode_ppm(data: bytes) -> RasterImage:
    """Decode a binary PPM (P6): tiny hand parser, no library involved.

    The header is three whitespace-separated tokens (width, height,
    maxval) after the magic, with ``#`` comments allowed between tokens
    and a single whitespace byte before the pixel payload.
    """
    pos = 2  # past the b"P6" magic
    tokens: list[int] = []
    while len(tokens) < 3:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise DecodeError("truncated PPM header")
        try:
            tokens.append(int(data[start:pos]))
        except ValueError as exc:
            raise DecodeError(f"bad PPM header token {data[start:pos]!r}") from exc
    pos += 1  # exactly one whitespace byte separates header and payload
    width, height, maxval = tokens
    if width < 1 or height < 1:
        raise DecodeError(f"bad PPM dimensions {width}x{height}")
    if maxval > 255:
        raise BitDepthUnsupported(f"only 8-bit channels are supported, got maxval {maxval}")
    if maxval < 1:
        raise DecodeError(f"bad PPM maxval {maxval}")
    expected = width * height * 3
    payload = data[pos : pos + expected]
    if len(payload) != expected:
        raise DecodeError(f"PPM payload has {len(payload)} bytes, expected {expected}")
    rgb = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
    pixels = np.empty((height, width, 4), dtype=np.uint8)
    pixels[:, :, :3] = rgb
    pixels[:, :, 3] = 255  # PPM has no alpha channel; everything is opaque
    return RasterImage(pixels)


def decode_image_file(path: str) -> RasterImage:
    """Read a PNG or binary PPM file into an RGBA raster."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data.startswith(_PNG_SIGNATURE):
        return _decode_png(data)
    if data.startswith(b"P6"):
        return _decode_ppm(data)
    raise UnsupportedFormat("file is neither a PNG nor a binary PPM (P6)")


def write_image(image: RasterImage, path: str) -> None:
    """Write an RGBA raster as a PNG; output bytes depend only on the pixels."""
    Image.fromarray(image.pixels, mode="RGBA").save(path, format="PNG")
