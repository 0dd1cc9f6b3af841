"""Bundled complex corpus and simplicial map suite.

Every corpus space ships with its documented Euler / non-Euler status;
tests and the verification suites re-derive the classification rather
than trusting the label.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .errors import InputError
from .fileio import complex_from_dict, load_json
from .simplicial import SimplicialComplex, SimplicialMap, validate_map


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    complex: SimplicialComplex
    euler: bool
    pure: bool
    description: str


def _data_dir() -> Path:
    return Path(resources.files("whitney").joinpath("corpus"))


def load_corpus(directory: Optional[str | Path] = None) -> dict[str, CorpusEntry]:
    """The bundled corpus, or every complex file of a user directory.

    User directories need an index.json like the bundled one; without it,
    each *.json complex is loaded with unknown (recomputed) status.
    """
    base = Path(directory) if directory is not None else _data_dir()
    index_path = base / "index.json"
    entries: dict[str, CorpusEntry] = {}
    if index_path.exists():
        index = load_json(index_path)
        for item in index["complexes"]:
            k = complex_from_dict(load_json(base / item["file"]))
            entries[item["name"]] = CorpusEntry(
                item["name"], k, bool(item["euler"]), bool(item["pure"]),
                item.get("description", ""),
            )
        return entries
    from .calculus import is_euler_space

    for path in sorted(base.glob("*.json")):
        try:
            k = complex_from_dict(load_json(path))
        except InputError:
            continue
        report = is_euler_space(k)
        entries[path.stem] = CorpusEntry(path.stem, k, report.is_euler, True, "")
    if not entries:
        raise InputError(f"no complexes found in {base}")
    return entries


def load_extra(name: str) -> SimplicialComplex:
    """Auxiliary complexes used by the bundled map suite."""
    return complex_from_dict(load_json(_data_dir() / f"{name}.json"))


@dataclass(frozen=True)
class MapEntry:
    name: str
    map: SimplicialMap
    domain_name: str
    codomain_name: str


def load_map_suite() -> list[MapEntry]:
    """Identity, double cover, fold, collapse-to-point, inclusion into a cone."""
    base = _data_dir()
    index = load_json(base / "maps.json")
    complexes: dict[str, SimplicialComplex] = {}

    def get(name: str) -> SimplicialComplex:
        if name not in complexes:
            complexes[name] = complex_from_dict(load_json(base / f"{name}.json"))
        return complexes[name]

    out = []
    for item in index["maps"]:
        f = validate_map(get(item["domain"]), get(item["codomain"]), item["vertex_map"])
        out.append(MapEntry(item["name"], f, item["domain"], item["codomain"]))
    return out
