"""Parsers for the textual encodings: partitions, progressions, semigroups, certificates."""

from __future__ import annotations

import io
import json
import re
from pathlib import Path

import pandas as pd

from .engine import Step, ValidSequence
from .errors import ParseError
from .partition import EMPTY, Partition, normalize
from .progressions import EMPTY as EMPTY_PROGRESSION
from .progressions import Progression, Residue, Singleton

# "2 mod 3", "-1 mod 3"
RESIDUE_PATTERN = re.compile(r'^\s*(-?\d+)\s*mod\s*(\d+)\s*$')
# "{4}", "{-5}"
SINGLETON_PATTERN = re.compile(r'^\s*\{\s*(-?\d+)\s*\}\s*$')
RANGE_PATTERN = re.compile(r'^\s*(\d+)\s*\.\.\s*(\d+)\s*$')
SEMIGROUP_PATTERN = re.compile(r'^\s*(gens|gaps)\s*:\s*(.*)$')


def _int_list(text: str, what: str) -> list[int]:
    items = [item.strip() for item in text.split(',') if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise ParseError(f"bad {what}: {text!r}")


def parse_partition(text: str) -> Partition:
    """Parse '8,7,1,1,1' (any order, zeros allowed); '0' or '' is the empty partition."""
    text = text.strip()
    if text in ("", "0", "()"):
        return EMPTY
    values = _int_list(text.strip("()"), "partition")
    if any(v < 0 for v in values):
        raise ParseError(f"negative part in {text!r}")
    return normalize(values)


def parse_progression(text: str) -> Progression:
    """Parse exactly one of 'empty', '{m}' or 'rep mod d' (d >= 2)."""
    if text.strip() == "empty":
        return EMPTY_PROGRESSION
    match = SINGLETON_PATTERN.match(text)
    if match:
        return Singleton(int(match.group(1)))
    match = RESIDUE_PATTERN.match(text)
    if match:
        modulus = int(match.group(2))
        if modulus < 2:
            raise ParseError(f"modulus must be >= 2 in {text!r}")
        return Residue(int(match.group(1)), modulus)
    raise ParseError(f"not a progression: {text!r} (expected 'empty', '{{m}}' or 'r mod d')")


def parse_range(text: str) -> range:
    """Parse 'MIN..MAX' into an inclusive range."""
    match = RANGE_PATTERN.match(text)
    if not match:
        raise ParseError(f"not a range: {text!r} (expected MIN..MAX)")
    low, high = int(match.group(1)), int(match.group(2))
    if low > high:
        raise ParseError(f"empty range {text!r}")
    return range(low, high + 1)


def parse_semigroup_spec(text: str) -> tuple[str, list[int]]:
    """Parse 'gens:2,3' or 'gaps:1,3,5' into (kind, values)."""
    match = SEMIGROUP_PATTERN.match(text)
    if not match:
        raise ParseError(f"not a semigroup spec: {text!r} (expected gens:... or gaps:...)")
    return match.group(1), _int_list(match.group(2), "semigroup values")


def parse_certificate_rows(rows: list) -> ValidSequence:
    """Build a sequence from [[partition, lambda, k], ...] rows."""
    steps = []
    for index, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != 3:
            raise ParseError(f"certificate row {index} must be [partition, lambda, k]")
        partition, lam, k = row
        try:
            k = int(k)
        except (TypeError, ValueError):
            raise ParseError(f"certificate row {index}: bad k {k!r}")
        steps.append(Step(parse_partition(str(partition)), parse_progression(str(lam)), k))
    return ValidSequence(tuple(steps))


def parse_certificate_json(content: str) -> tuple[ValidSequence, Partition | None, int | None]:
    """Parse the JSON certificate schema; returns (sequence, target, declared delta)."""
    try:
        data = json.loads(content)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}")
    if isinstance(data, list):
        return parse_certificate_rows(data), None, None
    if not isinstance(data, dict) or "steps" not in data:
        raise ParseError("certificate JSON needs a 'steps' list")
    target = parse_partition(str(data["target"])) if "target" in data else None
    delta = data.get("delta")
    return parse_certificate_rows(data["steps"]), target, delta


def parse_certificate_text(content: str) -> ValidSequence:
    """Parse 'partition | lambda | k' per line; blank lines and '#' comments skipped."""
    rows = []
    for number, line in enumerate(content.split('\n'), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split('|')]
        if len(fields) != 3:
            raise ParseError(f"line {number}: expected 'partition | lambda | k'")
        rows.append(fields)
    return parse_certificate_rows(rows)


def parse_certificate_csv(content: str) -> tuple[ValidSequence, Partition | None, int | None]:
    """Parse CSV with partition, lambda and k columns; target and delta columns are optional."""
    try:
        frame = pd.read_csv(io.StringIO(content), dtype=str, keep_default_na=False)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ParseError(f"invalid CSV: {e}")
    missing = {"partition", "lambda", "k"} - set(frame.columns)
    if missing:
        raise ParseError(f"certificate CSV lacks columns: {', '.join(sorted(missing))}")
    records = frame.to_dict("records")
    rows = [[record["partition"], record["lambda"], record["k"]] for record in records]
    target = delta = None
    if records and records[0].get("target"):
        target = parse_partition(records[0]["target"])
    if records and records[0].get("delta"):
        try:
            delta = int(records[0]["delta"])
        except ValueError:
            raise ParseError(f"bad delta {records[0]['delta']!r}")
    return parse_certificate_rows(rows), target, delta


def parse_certificate_file(file_path: str | Path) -> tuple[ValidSequence, Partition | None, int | None]:
    """Parse a certificate file, picking the format from its extension.

    Args:
        file_path: Path to a .json, .csv or plain text certificate

    Returns:
        (sequence, declared target, declared delta); text files declare neither
    """
    path = Path(file_path)
    content = path.read_text(encoding='utf-8')

    suffix = path.suffix.lower()
    if suffix == '.json':
        return parse_certificate_json(content)
    elif suffix == '.csv':
        return parse_certificate_csv(content)
    else:
        return parse_certificate_text(content), None, None
