"""
Artifact schema loader for platoon-v2i-delay.

Loads the YAML schemas under ``schema/artifacts/`` that declare the column
layout of every tabular artifact the CLI writes. Writers take their column
order from here.

Usage:
    from platoon_v2i.schema.loader import load_schema

    schema = load_schema("planner_report")
    print(schema.column_names)

ADR: 2026-10-01-delay-aware-platoon-toolkit
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

from platoon_v2i.config.paths import find_data_dir
from platoon_v2i.exceptions import ConfigurationError, SchemaError

ENV_SCHEMA_DIR = "PLATOON_V2I_SCHEMA_DIR"


def _find_schema_dir() -> Path:
    """
    Find the artifact schema directory.

    Same search order as the scenario corpus, with PLATOON_V2I_SCHEMA_DIR as
    the environment override.
    """
    try:
        schema_dir = find_data_dir("schema", ENV_SCHEMA_DIR) / "artifacts"
    except ConfigurationError as e:
        raise SchemaError(str(e)) from e
    if not schema_dir.is_dir():
        raise SchemaError(f"Schema directory {schema_dir} has no artifacts/ subdirectory")
    return schema_dir


@dataclass
class ColumnSpec:
    """One artifact column."""

    name: str
    json_type: str
    description: str
    unit: str | None


@dataclass
class ArtifactSchema:
    """
    Parsed artifact schema.

    Attributes:
        name: Schema name (file stem)
        title: Human-readable title
        description: Detailed description
        file: Default artifact file name (may contain a {placeholder})
        float_format: printf format for floats
        columns: Fixed columns in write order
        dynamic_columns: Pattern of trailing per-follower columns, if any
        required_columns: Columns every artifact must carry
        raw: Original parsed YAML dict
    """

    name: str
    title: str
    description: str
    file: str
    float_format: str
    columns: list[ColumnSpec]
    dynamic_columns: str | None
    required_columns: list[str]
    raw: dict[str, Any]

    @property
    def column_names(self) -> list[str]:
        """Fixed column names in write order."""
        return [col.name for col in self.columns]

    def expand_columns(self, n_dynamic: int) -> list[str]:
        """Fixed columns followed by dynamic columns 1..n_dynamic."""
        names = self.column_names
        if self.dynamic_columns is None:
            return names
        return names + [self.dynamic_columns.format(i=i) for i in range(1, n_dynamic + 1)]


def _parse_column(name: str, props: dict[str, Any]) -> ColumnSpec:
    return ColumnSpec(
        name=name,
        json_type=props.get("type", "number"),
        description=props.get("description", ""),
        unit=props.get("x-unit"),
    )


def get_schema_path(name: str) -> Path:
    """Path of a schema file (may not exist)."""
    return _find_schema_dir() / f"{name}.yaml"


def load_schema(name: str) -> ArtifactSchema:
    """
    Load an artifact schema.

    Args:
        name: Schema name without extension. Options: "planner_report",
              "sweep_report", "region_boundary", "frequency_response"

    Raises:
        SchemaError: If the file doesn't exist or is invalid
    """
    schema_path = get_schema_path(name)
    if not schema_path.exists():
        raise SchemaError(f"Schema file not found: {schema_path}")

    with open(schema_path) as f:
        raw = yaml.safe_load(f)

    if raw is None:
        raise SchemaError(f"Empty schema file: {schema_path}")

    properties = raw.get("properties", {})
    if not properties:
        raise SchemaError(f"Schema {schema_path} declares no columns")
    artifact = raw.get("x-artifact", {})

    return ArtifactSchema(
        name=name,
        title=raw.get("title", ""),
        description=raw.get("description", ""),
        file=artifact.get("file", f"{name}.csv"),
        float_format=artifact.get("float_format", "%.17g"),
        columns=[_parse_column(col, props) for col, props in properties.items()],
        dynamic_columns=artifact.get("dynamic_columns"),
        required_columns=raw.get("required", []),
        raw=raw,
    )


def list_schemas() -> list[str]:
    """Available schema names."""
    return sorted(p.stem for p in _find_schema_dir().glob("*.yaml") if not p.stem.startswith("_"))
