"""Run reports and the curve-spec file format.

A curve spec is UTF-8 text with one ``key: value`` per line::

    # hyperelliptic curve with p = 3, h = 3
    family: hyperelliptic_odd
    p: 3
    h: 3
    budget: 200

Blank lines and ``#`` comments are ignored.  Keys: family (required),
p (required), h, budget.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .curves import Family

SCHEMA_VERSION = "1.0"
TOOL_VERSION = "0.1.0"

_KEYS = {"family": str, "p": int, "h": int, "budget": int}
_REQUIRED = ("family", "p")


class SpecParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<spec>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line, self.column, self.source = line, column, source


@dataclass(frozen=True)
class CurveSpec:
    family: str
    p: int
    h: int | None = None
    budget: int | None = None

    def params(self) -> dict:
        return {} if self.h is None else {"h": self.h}

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def parse_spec(text: str, source: str = "<spec>") -> CurveSpec:
    values: dict = {}
    where: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        if ":" not in line:
            raise SpecParseError("expected 'key: value'", lineno, col, source)
        colon = line.index(":")
        key, val = line[:colon].strip(), line[colon + 1:]
        vcol = colon + 2 + (len(val) - len(val.lstrip()))
        val = val.strip()
        if key not in _KEYS:
            raise SpecParseError(f"unknown key {key!r} (expected one of {', '.join(_KEYS)})", lineno, col, source)
        if key in values:
            raise SpecParseError(f"duplicate key {key!r} (first on line {where[key]})", lineno, col, source)
        if not val:
            raise SpecParseError(f"missing value for {key!r}", lineno, vcol, source)
        if _KEYS[key] is int:
            try:
                values[key] = int(val)
            except ValueError:
                raise SpecParseError(f"{key} must be an integer, got {val!r}", lineno, vcol, source) from None
        else:
            if key == "family" and val not in {f.value for f in Family}:
                raise SpecParseError(
                    f"unknown family {val!r} (expected one of {', '.join(f.value for f in Family)})",
                    lineno, vcol, source)
            values[key] = val
        where[key] = lineno
    for key in _REQUIRED:
        if key not in values:
            raise SpecParseError(f"missing required key {key!r}", 1, 1, source)
    return CurveSpec(**values)


def load_spec(path: str | Path) -> CurveSpec:
    path = Path(path)
    try:
        text = path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise SpecParseError(f"not UTF-8: {exc.reason}", 1, 1, str(path)) from None
    return parse_spec(text, str(path))


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict
    seed: int = 0
    status: str = "pass"
    exit_code: int = 0
    timing: dict = field(default_factory=dict)
    tool_version: str = TOOL_VERSION
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "RunReport":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {data.get('schema_version')!r}")
        return cls(**data)

    @classmethod
    def loads(cls, text: str) -> "RunReport":
        return cls.from_json(json.loads(text))
