"""Registry of recorded thresholds from the literature.

Entries are data, not computations: each carries the recorded threshold and
its citation.  An entry is upgraded from "recorded" to "verified" only when
one of this package's engines independently reproduces the value (currently
the pure-power formula cross-checked against the LP threshold).  Values with
no computational pathway here stay recorded, so nothing is presented as
confirmed that was not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .errors import DomainError, LctkitError
from .newton import lct
from .poly import MonomialIdeal
from .rationals import format_rational, parse_rational
from .singularity import weighted_lct


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    parameters: dict
    threshold: Fraction
    citation: str
    status: str  # "recorded" | "verified"

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "threshold": format_rational(self.threshold),
            "citation": self.citation,
            "status": self.status,
        }


def _load_raw() -> list[dict]:
    text = resources.files("lctkit.data").joinpath("registry.json").read_text("utf-8")
    payload = json.loads(text)
    if payload.get("version") != 1:
        raise LctkitError(f"unsupported registry version: {payload.get('version')}")
    return payload["entries"]


def _pure_power_ideal(exponents) -> MonomialIdeal:
    n = len(exponents)
    gens = []
    for j, m in enumerate(exponents):
        vec = [0] * n
        vec[j] = m
        gens.append(tuple(vec))
    return MonomialIdeal(n, tuple(gens))


def _verify(raw: dict, threshold: Fraction) -> str:
    if raw.get("engine") != "pure-powers":
        return "recorded"
    exponents = raw.get("engine_m") or raw["parameters"]["m"]
    formula = weighted_lct(exponents)
    lp_value = lct(_pure_power_ideal(exponents))
    if formula == threshold and lp_value == threshold:
        return "verified"
    raise LctkitError(
        f"registry entry {raw['name']} {raw['parameters']} disagrees with the "
        f"engines: recorded {threshold}, formula {formula}, lp {lp_value}"
    )


def registry_entries() -> list[RegistryEntry]:
    """All entries with their engine-checked status."""
    entries = []
    for raw in _load_raw():
        threshold = parse_rational(raw["threshold"])
        entries.append(
            RegistryEntry(
                name=raw["name"],
                parameters=raw["parameters"],
                threshold=threshold,
                citation=raw["citation"],
                status=_verify(raw, threshold),
            )
        )
    return entries


def registry_lookup(name: str, parameters: dict | None = None) -> RegistryEntry:
    """Fetch one recorded threshold by name, disambiguated by parameters."""
    matches = [e for e in registry_entries() if e.name == name]
    if not matches:
        known = sorted({e["name"] for e in _load_raw()})
        raise DomainError(f"unknown registry entry {name!r}; known names: {known}")
    if parameters is None:
        if len(matches) == 1:
            return matches[0]
        options = [e.parameters for e in matches]
        raise DomainError(
            f"registry entry {name!r} needs parameters; one of: {options}"
        )
    for entry in matches:
        if entry.parameters == parameters:
            return entry
    raise DomainError(
        f"no registry entry {name!r} with parameters {parameters}; "
        f"available: {[e.parameters for e in matches]}"
    )
