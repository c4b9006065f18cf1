"""Access to the shipped group-spec corpus.

The directory can be overridden with the ``REALFORMS_FIXTURES`` environment
variable.
"""
import json
import os
import pathlib
from typing import Dict, Iterator, Tuple

ENV_VAR = "REALFORMS_FIXTURES"


def fixture_dir() -> pathlib.Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return pathlib.Path(override)
    return pathlib.Path(__file__).resolve().parent / "fixtures"


def fixture_names():
    return sorted(p.stem for p in fixture_dir().glob("*.json"))


def load_record(name: str) -> Dict:
    return json.loads((fixture_dir() / f"{name}.json").read_text())


def iter_records() -> Iterator[Tuple[str, Dict]]:
    for name in fixture_names():
        yield name, load_record(name)


def resolve(path_or_name: str) -> pathlib.Path:
    """A file path if it exists, else the corpus entry of that name."""
    p = pathlib.Path(path_or_name)
    if p.exists():
        return p
    candidate = fixture_dir() / (path_or_name if path_or_name.endswith(".json") else f"{path_or_name}.json")
    if candidate.exists():
        return candidate
    raise FileNotFoundError(path_or_name)
