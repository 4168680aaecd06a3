"""Catalog of surfaces and bundles, stored as a single JSON file.

Format (all rationals are strings, "p/q" or plain "n")::

    {
      "surfaces": [
        {"name": "p2", "divisors": ["H"], "pairing": [["1"]],
         "omega_c1": ["-3"], "omega_c2_int": "3", "chi_top": "3"}
      ],
      "bundles": [
        {"name": "e2", "surface": "p2", "rank": 2,
         "c1": ["1"], "c2_int": "3"}
      ]
    }

Both top-level keys are optional; an empty object is an empty catalog.
Validation failures raise CatalogError with the offending field path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .chow import BundleData, SurfaceModel
from .errors import CatalogError, DimensionMismatchError

__all__ = ["Catalog", "load_catalog", "default_catalog_path"]


@dataclass
class Catalog:
    surfaces: dict[str, SurfaceModel] = field(default_factory=dict)
    bundles: dict[str, dict[str, BundleData]] = field(default_factory=dict)

    def surface(self, name: str) -> SurfaceModel:
        try:
            return self.surfaces[name]
        except KeyError:
            raise CatalogError(f"unknown surface {name!r}") from None

    def bundle(self, surface_name: str, bundle_name: str) -> BundleData:
        self.surface(surface_name)
        try:
            return self.bundles[surface_name][bundle_name]
        except KeyError:
            raise CatalogError(
                f"unknown bundle {bundle_name!r} on surface "
                f"{surface_name!r}") from None

    def bundles_on(self, surface_name: str) -> dict[str, BundleData]:
        return dict(self.bundles.get(surface_name, {}))

    def lines_on(self, surface_name: str) -> dict[str, BundleData]:
        return {n: b for n, b in self.bundles_on(surface_name).items()
                if b.rank == 1}


def _rational(value: object, path: str) -> Fraction:
    if not isinstance(value, str):
        raise CatalogError(f"{path}: expected rational string, got {value!r}")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise CatalogError(f"{path}: malformed rational {value!r}") from None


def _rational_list(value: object, path: str) -> list[Fraction]:
    if not isinstance(value, list):
        raise CatalogError(f"{path}: expected a list")
    return [_rational(x, f"{path}[{i}]") for i, x in enumerate(value)]


def _surface(entry: object, path: str) -> SurfaceModel:
    if not isinstance(entry, dict):
        raise CatalogError(f"{path}: expected an object")
    try:
        name = entry["name"]
        divisors = entry["divisors"]
        pairing = entry["pairing"]
        omega_c1 = entry["omega_c1"]
        omega_c2 = entry["omega_c2_int"]
    except KeyError as missing:
        raise CatalogError(f"{path}: missing field {missing}") from None
    if not isinstance(name, str):
        raise CatalogError(f"{path}.name: expected a string")
    if (not isinstance(divisors, list)
            or not all(isinstance(d, str) for d in divisors)):
        raise CatalogError(f"{path}.divisors: expected a list of names")
    if not isinstance(pairing, list):
        raise CatalogError(f"{path}.pairing: expected a matrix")
    rows = [_rational_list(row, f"{path}.pairing[{i}]")
            for i, row in enumerate(pairing)]
    chi = entry.get("chi_top")
    try:
        return SurfaceModel.create(
            name=name,
            divisors=divisors,
            pairing=rows,
            omega_c1=_rational_list(omega_c1, f"{path}.omega_c1"),
            omega_c2_int=_rational(omega_c2, f"{path}.omega_c2_int"),
            chi_top=None if chi is None else _rational(chi, f"{path}.chi_top"),
        )
    except DimensionMismatchError as exc:
        raise CatalogError(f"{path}: {exc}") from None


def _bundle(entry: object, path: str, surfaces: dict[str, SurfaceModel]
            ) -> tuple[str, str, BundleData]:
    if not isinstance(entry, dict):
        raise CatalogError(f"{path}: expected an object")
    try:
        name = entry["name"]
        surface_name = entry["surface"]
        rank = entry["rank"]
        c1 = entry["c1"]
    except KeyError as missing:
        raise CatalogError(f"{path}: missing field {missing}") from None
    if not isinstance(name, str) or not isinstance(surface_name, str):
        raise CatalogError(f"{path}: name and surface must be strings")
    if surface_name not in surfaces:
        raise CatalogError(
            f"{path}: bundle {name!r} references unknown surface "
            f"{surface_name!r}")
    if not isinstance(rank, int) or rank < 1:
        raise CatalogError(f"{path}.rank: expected a positive integer")
    c2 = entry.get("c2_int", "0")
    try:
        data = BundleData(
            surfaces[surface_name], rank,
            tuple(_rational_list(c1, f"{path}.c1")),
            _rational(c2, f"{path}.c2_int"))
    except (DimensionMismatchError, ValueError) as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(f"{path}: {exc}") from None
    return surface_name, name, data


def load_catalog(path: str | Path) -> Catalog:
    """Parse and validate a catalog file."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise CatalogError(f"{path}: top level must be an object")

    catalog = Catalog()
    surfaces_raw = raw.get("surfaces", [])
    if not isinstance(surfaces_raw, list):
        raise CatalogError("surfaces: expected a list")
    for i, entry in enumerate(surfaces_raw):
        model = _surface(entry, f"surfaces[{i}]")
        if model.name in catalog.surfaces:
            raise CatalogError(f"surfaces[{i}]: duplicate name {model.name!r}")
        catalog.surfaces[model.name] = model

    bundles_raw = raw.get("bundles", [])
    if not isinstance(bundles_raw, list):
        raise CatalogError("bundles: expected a list")
    for i, entry in enumerate(bundles_raw):
        surface_name, name, data = _bundle(entry, f"bundles[{i}]",
                                           catalog.surfaces)
        per_surface = catalog.bundles.setdefault(surface_name, {})
        if name in per_surface:
            raise CatalogError(
                f"bundles[{i}]: duplicate bundle {name!r} on "
                f"surface {surface_name!r}")
        per_surface[name] = data
    return catalog


def default_catalog_path() -> Path:
    """Location of the catalog shipped with the package."""
    return Path(resources.files("quotcalc") / "data" / "catalog.json")
