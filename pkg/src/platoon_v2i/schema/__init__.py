"""Artifact schemas (single source of truth for CSV column layouts)."""

from platoon_v2i.schema.loader import ArtifactSchema, ColumnSpec, list_schemas, load_schema

__all__ = ["ArtifactSchema", "ColumnSpec", "list_schemas", "load_schema"]
