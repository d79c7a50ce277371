"""CSV artifact writers; column order comes from the artifact schemas."""

from __future__ import annotations

import logging
from pathlib import Path

import pandas as pd

from platoon_v2i.exceptions import SchemaError
from platoon_v2i.schema.loader import ArtifactSchema, load_schema

logger = logging.getLogger(__name__)


def conform(df: pd.DataFrame, schema: ArtifactSchema, n_dynamic: int = 0) -> pd.DataFrame:
    """
    Reorder df to the schema's column order.

    Raises:
        SchemaError: If a required column is missing or df carries extra columns
    """
    columns = schema.expand_columns(n_dynamic)
    missing = [c for c in schema.required_columns if c not in df.columns]
    extra = [c for c in df.columns if c not in columns]
    if missing or extra:
        raise SchemaError(f"{schema.name}: missing columns {missing}, unexpected columns {extra}")
    return df.reindex(columns=columns)


def write_artifact(
    df: pd.DataFrame,
    path: Path,
    schema_name: str,
    n_dynamic: int = 0,
) -> Path:
    """Write df as CSV in schema column order with full float precision."""
    schema = load_schema(schema_name)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    conform(df, schema, n_dynamic).to_csv(path, index=False, float_format=schema.float_format)
    logger.debug(f"Wrote {len(df)} rows to {path}")
    return path
