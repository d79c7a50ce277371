"""
Data-directory discovery.

Resolution order for ``scenarios/`` and ``schema/``:
1. The repository directory next to the source tree
2. The copy bundled into the wheel (``platoon_v2i/_data/<name>``)
3. ``<name>/`` under the current working directory
4. An environment variable (a .env file is loaded first, without
   overriding variables already set)
"""

from __future__ import annotations

import os
from pathlib import Path

from dotenv import load_dotenv

from platoon_v2i.exceptions import ConfigurationError, ScenarioNotFoundError

ENV_SCENARIO_DIR = "PLATOON_V2I_SCENARIO_DIR"
ENV_OUT_DIR = "PLATOON_V2I_OUT_DIR"
DEFAULT_OUT_DIR = "out"

SCENARIO_SUFFIXES = (".json", ".yaml", ".yml")


def _package_data_candidates(name: str) -> list[Path]:
    here = Path(__file__).resolve()
    return [here.parents[3] / name, here.parents[1] / "_data" / name]


def find_data_dir(name: str, env_var: str) -> Path:
    """
    Locate a data directory (``scenarios`` or ``schema``).

    Raises:
        ConfigurationError: If no candidate exists
    """
    for candidate in _package_data_candidates(name):
        if candidate.is_dir():
            return candidate

    cwd_dir = Path.cwd() / name
    if cwd_dir.is_dir():
        return cwd_dir

    load_dotenv(override=False)
    env_path = os.environ.get(env_var)
    if env_path and Path(env_path).is_dir():
        return Path(env_path)

    raise ConfigurationError(
        f"Could not find the {name}/ directory. "
        f"Run from the project root or set {env_var}."
    )


def find_scenario_dir() -> Path:
    """Directory holding the shipped scenario corpus."""
    return find_data_dir("scenarios", ENV_SCENARIO_DIR)


def default_out_dir() -> Path:
    """Output root: PLATOON_V2I_OUT_DIR or ./out."""
    load_dotenv(override=False)
    return Path(os.environ.get(ENV_OUT_DIR, DEFAULT_OUT_DIR))


def resolve_scenario(name_or_path: str | Path) -> Path:
    """
    Path of a scenario given a file path or a corpus id.

    Raises:
        ScenarioNotFoundError: If neither a file nor a corpus entry matches
    """
    path = Path(name_or_path)
    if path.is_file():
        return path

    corpus = find_scenario_dir()
    for suffix in SCENARIO_SUFFIXES:
        candidate = corpus / f"{name_or_path}{suffix}"
        if candidate.is_file():
            return candidate
    raise ScenarioNotFoundError(f"No scenario file or corpus id '{name_or_path}' (searched {corpus})")


def list_scenarios() -> list[Path]:
    """Corpus files sorted by id."""
    corpus = find_scenario_dir()
    return sorted(p for p in corpus.iterdir() if p.suffix in SCENARIO_SUFFIXES)
