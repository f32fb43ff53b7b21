"""Plain-text run configuration: ``key = value`` lines, ``#`` comments."""

import dataclasses
from dataclasses import dataclass, fields
from typing import Optional

_TRUE = {"true", "yes", "on", "1"}
_FALSE = {"false", "no", "off", "0"}


@dataclass
class RunConfig:
    command: str = "augment"
    # augment
    input: Optional[str] = None
    output: Optional[str] = None
    report: Optional[str] = None
    variant: str = "adsi"
    beta_min: float = 0.01
    beta_max: float = 0.4
    alpha_min: float = 0.0
    alpha_max: float = 1.0
    orders: str = "1,2,3"
    epsilon: float = 1e-8
    seed: int = 0
    clamp: bool = True
    workers: int = 1
    # di / sweep
    a: Optional[str] = None
    b: Optional[str] = None
    features_a: Optional[str] = None
    features_b: Optional[str] = None
    id_column: bool = False
    embedder: str = "builtin"
    limit: int = 300
    table: Optional[str] = None
    betas: str = "0:0.4:0.1"
    mask: str = "box"
    target: str = "both"
    # mask export
    kind: str = "butterworth"
    beta: float = 0.2
    order: int = 2
    alpha: float = 1.0
    size: str = "64x64"

    def to_text(self):
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if isinstance(value, bool):
                value = "true" if value else "false"
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{f.name} = {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        kinds = {f.name: f.type for f in fields(cls)}
        values = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"config line {lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in kinds:
                raise ValueError(f"config line {lineno}: unknown key {key!r}")
            values[key] = _coerce(kinds[key], value, lineno)
        return cls(**values)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_text(fh.read())

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_text())

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


def _coerce(kind, value, lineno):
    base = kind.replace("Optional[", "").rstrip("]") if isinstance(kind, str) else kind
    try:
        if base in (bool, "bool"):
            low = value.lower()
            if low in _TRUE:
                return True
            if low in _FALSE:
                return False
            raise ValueError(f"not a boolean: {value!r}")
        if base in (int, "int"):
            return int(value)
        if base in (float, "float"):
            return float(value)
    except ValueError as exc:
        raise ValueError(f"config line {lineno}: {exc}") from None
    return value
