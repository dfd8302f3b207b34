"""Command-line front end: measure, synth, verify, bench.

Exit codes are part of the interface: 0 success, 1 usage error or a
verify mismatch, 2 file/decode trouble, 3 estimation failure (degenerate
input such as an all-transparent image).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass

from .core import PointSet, box_merge_series
from .errors import (
    AllTransparent,
    BitDepthUnsupported,
    DecodeError,
    EmptyPointSet,
    ImageTooSmall,
    InsufficientPoints,
    MinAxisTooSmall,
    OddScale,
    ScaleExceedsAxis,
    UnsupportedFormat,
)
from .estimator import DimensionEstimate, FitConfig, estimate_dimension
from .imaging import (
    FIXTURE_KINDS,
    AlphaPolicy,
    decode_image_file,
    fixture_image,
    gen_fixture,
    gen_noise,
    image_to_pointset,
    write_image,
)
from .oracle import naive_series

__all__ = ["main", "build_parser", "RunReport", "run_bench"]

EXIT_OK = 0
EXIT_MISMATCH_OR_USAGE = 1
EXIT_IO = 2
EXIT_ESTIMATION = 3

_DECODE_ERRORS = (UnsupportedFormat, DecodeError, BitDepthUnsupported, OSError)
_ESTIMATION_ERRORS = (
    AllTransparent,
    ImageTooSmall,
    EmptyPointSet,
    MinAxisTooSmall,
    ScaleExceedsAxis,
    OddScale,
    InsufficientPoints,
)

VERIFY_PIXEL_LIMIT = 1 << 20  # brute-force pass is quadratic-ish in practice; cap it


@dataclass(frozen=True)
class ScaleRecord:
    s: int
    n: int
    log2_s: float
    log2_n: float
    kept: bool


@dataclass(frozen=True)
class RunReport:
    """Flat, serialisable view of one estimate for CSV/JSON output."""

    source: str
    axes: tuple[int, ...]
    dimension: float
    intercept: float
    r_squared: float
    threshold_log2_n: float
    cutoff_fraction: float
    source_point_count: int
    records: tuple[ScaleRecord, ...]
    wall_ms: float

    @classmethod
    def from_estimate(
        cls,
        est: DimensionEstimate,
        wall_ms: float,
        source: str = "",
        axes: tuple[int, ...] = (),
    ) -> "RunReport":
        records = []
        for s, n in est.series.entries:
            log2_s = math.log2(s)
            log2_n = math.log2(n)
            records.append(
                ScaleRecord(s, n, log2_s, log2_n, kept=log2_n <= est.threshold)
            )
        return cls(
            source=source,
            axes=axes,
            dimension=est.dimension,
            intercept=est.intercept,
            r_squared=est.r_squared,
            threshold_log2_n=est.threshold,
            cutoff_fraction=est.config.cutoff_fraction,
            source_point_count=est.series.source_point_count,
            records=tuple(records),
            wall_ms=wall_ms,
        )

    def to_csv(self) -> str:
        lines = ["s,n,log2_s,log2_n,kept"]
        for r in self.records:
            lines.append(f"{r.s},{r.n},{r.log2_s:.6f},{r.log2_n:.6f},{int(r.kept)}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "input": self.source,
            "axes": list(self.axes),
            "dimension": self.dimension,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "threshold_log2_n": self.threshold_log2_n,
            "cutoff_fraction": self.cutoff_fraction,
            "source_point_count": self.source_point_count,
            "scales": [
                {
                    "s": r.s,
                    "n": r.n,
                    "log2_s": r.log2_s,
                    "log2_n": r.log2_n,
                    "kept": r.kept,
                }
                for r in self.records
            ],
            "kept": [[r.log2_s, r.log2_n] for r in self.records if r.kept],
            "rejected": [[r.log2_s, r.log2_n] for r in self.records if not r.kept],
            "wall_ms": self.wall_ms,
        }


def _load_pointset(path: str, alpha_threshold: int) -> PointSet:
    image = decode_image_file(path)
    return image_to_pointset(image, AlphaPolicy(alpha_threshold))


def _cmd_measure(args: argparse.Namespace) -> int:
    try:
        ps = _load_pointset(args.image, args.alpha_threshold)
    except _DECODE_ERRORS as exc:
        print(f"measure: decode failed: {exc}", file=sys.stderr)
        return EXIT_IO
    except _ESTIMATION_ERRORS as exc:
        print(f"measure: estimation failed: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION
    started = time.perf_counter()
    try:
        est = estimate_dimension(ps, FitConfig(args.cutoff))
    except _ESTIMATION_ERRORS as exc:
        print(f"measure: estimation failed: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION
    wall_ms = (time.perf_counter() - started) * 1000.0
    report = RunReport.from_estimate(
        est, wall_ms, source=args.image, axes=tuple(int(x) for x in ps.lengths)
    )
    if args.csv:
        try:
            with open(args.csv, "w") as fh:
                fh.write(report.to_csv())
        except OSError as exc:
            print(f"measure: cannot write {args.csv}: {exc}", file=sys.stderr)
            return EXIT_IO
    if args.json:
        try:
            with open(args.json, "w") as fh:
                json.dump(report.to_json_dict(), fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"measure: cannot write {args.json}: {exc}", file=sys.stderr)
            return EXIT_IO
    print(f"D = {est.dimension:.4f}")
    print(f"R^2 = {est.r_squared:.4f}  (kept {len(est.kept)}/{len(est.series.entries)} scales)")
    return EXIT_OK


def _cmd_synth(args: argparse.Namespace) -> int:
    image = fixture_image(args.kind, seed=args.seed)
    try:
        write_image(image, args.output)
    except OSError as exc:
        print(f"synth: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.kind} fixture to {args.output}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.target in FIXTURE_KINDS:
        ps = gen_fixture(args.target, seed=args.seed)
    else:
        try:
            image = decode_image_file(args.target)
        except _DECODE_ERRORS as exc:
            print(f"verify: decode failed: {exc}", file=sys.stderr)
            return EXIT_IO
        pixel_count = image.width * image.height
        if pixel_count > VERIFY_PIXEL_LIMIT:
            # Refusing an oversized request is a usage problem, not an I/O one.
            print(
                f"verify: image has {pixel_count} pixels; the brute-force pass "
                f"is capped at {VERIFY_PIXEL_LIMIT}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH_OR_USAGE
        try:
            ps = image_to_pointset(image)
        except _ESTIMATION_ERRORS as exc:
            print(f"verify: estimation failed: {exc}", file=sys.stderr)
            return EXIT_ESTIMATION
    try:
        fast = list(box_merge_series(ps).entries)
        slow = naive_series(ps)
    except _ESTIMATION_ERRORS as exc:
        print(f"verify: estimation failed: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION
    if fast != slow:
        for (s_f, n_f), (s_s, n_s) in zip(fast, slow):
            if (s_f, n_f) != (s_s, n_s):
                print(
                    f"verify: MISMATCH at s={s_f}: merged={n_f} brute-force={n_s}",
                    file=sys.stderr,
                )
                break
        return EXIT_MISMATCH_OR_USAGE
    print(f"verify: PASS — {len(fast)} scales agree with brute force ({len(ps)} points)")
    return EXIT_OK


@dataclass(frozen=True)
class BenchRow:
    size: int
    pixels: int
    wall_ms: float
    ms_per_mp: float


def run_bench(sizes: list[int], seed: int = 0) -> list[BenchRow]:
    """Time estimate_dimension on full-noise frames of the given edge sizes."""
    rows = []
    for size in sizes:
        ps = gen_noise(3, seed, size=size)
        started = time.perf_counter()
        estimate_dimension(ps)
        wall_ms = (time.perf_counter() - started) * 1000.0
        pixels = size * size
        rows.append(BenchRow(size, pixels, wall_ms, wall_ms * (1 << 20) / pixels))
    return rows


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        rows = run_bench(args.sizes, seed=args.seed)
    except _ESTIMATION_ERRORS as exc:
        # Tiny frames can saturate at every scale and leave nothing to fit.
        print(f"bench: estimation failed: {exc}", file=sys.stderr)
        return EXIT_ESTIMATION
    print(f"{'size':>6} {'pixels':>10} {'wall_ms':>10} {'ms_per_mp':>10}")
    for row in rows:
        print(f"{row.size:>6} {row.pixels:>10} {row.wall_ms:>10.1f} {row.ms_per_mp:>10.1f}")
    print(
        "context: interpreted-environment implementations of this method "
        "report ~5000 ms per megapixel worst case; the vectorised path "
        "should sit well under that."
    )
    return EXIT_OK


def _cutoff_fraction(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"cut-off fraction must lie in (0, 1], got {value}")
    return value


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this interface reserves 2 for I/O."""

    def error(self, message: str) -> "argparse.NoReturn":  # type: ignore[name-defined]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_MISMATCH_OR_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="boxmerge",
        description="Estimate the box dimension of a colour image embedded as "
        "(x, y, r, g, b) integer points.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_measure = sub.add_parser("measure", help="estimate the dimension of an image file")
    p_measure.add_argument("image", help="path to a PNG or binary PPM (P6) file")
    p_measure.add_argument(
        "--cutoff",
        type=_cutoff_fraction,
        default=0.9,
        help="saturation cut-off fraction of log2(point count) (default 0.9)",
    )
    p_measure.add_argument(
        "--alpha-threshold",
        type=int,
        default=0,
        metavar="N",
        help="count only pixels with alpha > N (default 0)",
    )
    p_measure.add_argument("--csv", metavar="PATH", help="write the per-scale table as CSV")
    p_measure.add_argument("--json", metavar="PATH", help="write the full report as JSON")
    p_measure.set_defaults(func=_cmd_measure)

    p_synth = sub.add_parser("synth", help="write a synthetic fixture image")
    p_synth.add_argument("kind", choices=FIXTURE_KINDS)
    p_synth.add_argument("-o", "--output", required=True, help="output PNG path")
    p_synth.add_argument("--seed", type=int, default=0, help="noise seed (default 0)")
    p_synth.set_defaults(func=_cmd_synth)

    p_verify = sub.add_parser(
        "verify", help="cross-check the merged counts against brute force"
    )
    p_verify.add_argument(
        "target",
        help="an image file (at most 1048576 pixels) or a fixture kind: "
        + ", ".join(FIXTURE_KINDS),
    )
    p_verify.add_argument("--seed", type=int, default=0, help="noise seed (default 0)")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time the estimator on synthetic noise")
    p_bench.add_argument(
        "--sizes",
        type=int,
        nargs="+",
        default=[256, 512, 1024],
        help="edge sizes of the square noise frames (default: 256 512 1024)",
    )
    p_bench.add_argument("--seed", type=int, default=0, help="noise seed (default 0)")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
