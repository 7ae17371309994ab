"""Command-line front end.

One subcommand per suite plus ``render``.  Specs come from an optional
JSON document (validated against the shipped schema, unknown fields
rejected) merged with command-line flag overrides.  Exit codes:

* 0 - suite ran and passed
* 1 - suite ran and failed (report still written)
* 2 - invalid spec or arguments (nothing written)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path
from typing import Optional

import jsonschema

from .errors import GeometryError, SpecInvalid
from .suites import run_suite
from .svgrender import render_svg

SUBCOMMANDS = (
    "desargues", "harmonic", "net", "psi", "phi", "hilbert", "pasch", "moulton", "render"
)
OUTPUT_DIR_ENV = "STRAIGHTPLANES_OUT"


def _load_schema(name: str) -> dict:
    with resources.files("straightplanes.schemas").joinpath(name).open("r") as fh:
        return json.load(fh)


def validate_spec(spec: dict) -> dict:
    schema = _load_schema("scene_spec.schema.json")
    try:
        jsonschema.validate(spec, schema)
    except jsonschema.ValidationError as exc:
        raise SpecInvalid(f"spec rejected: {exc.message}") from exc
    if spec["suite"] == "render" and "scene" not in spec:
        raise SpecInvalid("render spec needs a 'scene'")
    return spec


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="straightplanes",
        description="Verification suites and figures for the dual-kernel plane geometry engine.",
    )
    sub = parser.add_subparsers(dest="suite", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=f"run the {name} suite" if name != "render" else "emit an SVG figure")
        p.add_argument("--spec", type=Path, default=None, help="JSON spec document")
        p.add_argument("--seed", type=int, default=None, help="64-bit random seed")
        p.add_argument("--depth", type=int, default=None, help="net / bisection depth")
        p.add_argument("--cases", type=int, default=None, help="number of cases")
        p.add_argument("--samples", type=int, default=None, help="number of samples")
        p.add_argument("--probes", type=int, default=None, help="probe lines per case")
        p.add_argument("--bend", type=str, default=None, help="moulton bend factor, e.g. 2/1")
        p.add_argument("--scene", type=str, default=None, help="render scene name")
        p.add_argument("--out", type=Path, default=None, help="output path")
        p.add_argument(
            "--format", choices=("json", "csv", "svg"), default=None, help="output format"
        )
    return parser


def _assemble_spec(args: argparse.Namespace) -> dict:
    spec: dict = {}
    if args.spec is not None:
        try:
            text = Path(args.spec).read_text()
        except OSError as exc:
            raise SpecInvalid(f"cannot read spec file: {exc}") from exc
        try:
            spec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecInvalid(f"spec is not valid JSON: {exc}") from exc
        if not isinstance(spec, dict):
            raise SpecInvalid("spec document must be a JSON object")
    if "suite" in spec and spec["suite"] != args.suite:
        raise SpecInvalid(
            f"spec names suite {spec['suite']!r} but the {args.suite!r} subcommand was invoked"
        )
    spec["suite"] = args.suite
    for key in ("seed", "depth", "cases", "samples", "probes", "bend", "scene", "format"):
        value = getattr(args, key)
        if value is not None:
            spec[key] = value
    if args.out is not None:
        spec["out"] = str(args.out)
    return validate_spec(spec)


def _default_format(spec: dict) -> str:
    if spec["suite"] == "render":
        return "svg"
    return "json"


def _output_path(spec: dict, fmt: str) -> Path:
    if "out" in spec:
        return Path(spec["out"])
    out_dir = Path(os.environ.get(OUTPUT_DIR_ENV, "."))
    return out_dir / f"{spec['suite']}.{fmt}"


def _write_csv(path: Path, rows) -> None:
    import csv

    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        for row in rows:
            writer.writerow(row)


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        spec = _assemble_spec(args)
    except SpecInvalid as exc:
        print(f"spec invalid: {exc}", file=sys.stderr)
        return 2

    fmt = spec.get("format", _default_format(spec))
    path = _output_path(spec, fmt)

    if spec["suite"] == "render":
        if fmt != "svg":
            print("spec invalid: render emits svg only", file=sys.stderr)
            return 2
        try:
            document = render_svg(spec)
        except GeometryError as exc:
            print(f"spec invalid: {exc}", file=sys.stderr)
            return 2
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(document)
        print(f"wrote {path}")
        return 0

    if fmt == "svg":
        print("spec invalid: suites emit json or csv; use the render subcommand for svg",
              file=sys.stderr)
        return 2

    try:
        report = run_suite(spec)
    except SpecInvalid as exc:
        print(f"spec invalid: {exc}", file=sys.stderr)
        return 2

    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "csv":
        rows = getattr(report, "csv_rows", None)
        if rows is None:
            print(f"spec invalid: suite {spec['suite']!r} has no csv form", file=sys.stderr)
            return 2
        _write_csv(path, rows)
    else:
        path.write_text(report.to_json())
    print(report.summary_line())
    print(f"wrote {path}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
