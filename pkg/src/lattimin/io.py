"""JSON file formats for lattices, preferences, spectra, and representations."""

from __future__ import annotations

import json

from .errors import LattiminError
from .lattice import Lattice, Poset, build_lattice, lattice_from_poset
from .preference import WeakOrder
from .representation import Representation
from .spectrum import SpectralSpace


class FormatError(LattiminError):
    """Input file is malformed; message carries a position when available."""


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror}") from e


def lattice_from_dict(d, validate=True) -> Lattice:
    """Build a lattice from its JSON dict.

    With validate=False the tables are loaded as-is so callers can inspect
    law violations themselves; the poset form is always lawful by
    construction.
    """
    if "poset" in d:
        p = d["poset"]
        try:
            P = Poset(int(p["n"]), tuple(tuple(c) for c in p["covers"]))
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"bad poset block: {e}") from e
        return lattice_from_poset(P)
    try:
        if validate:
            return build_lattice(
                d["meet"], d["join"], d["bottom"], d["top"], d.get("labels")
            )
        return Lattice(d["meet"], d["join"], d["bottom"], d["top"], d.get("labels"))
    except KeyError as e:
        raise FormatError(f"lattice file missing field {e}") from e
    except (TypeError, ValueError) as e:
        raise FormatError(f"bad lattice tables: {e}") from e


def lattice_to_dict(L: Lattice) -> dict:
    d = {
        "n": L.n,
        "bottom": L.bottom,
        "top": L.top,
        "meet": [[int(x) for x in row] for row in L.meet],
        "join": [[int(x) for x in row] for row in L.join],
    }
    if L.labels is not None:
        d["labels"] = list(L.labels)
    return d


def load_lattice(path, validate=True) -> Lattice:
    return lattice_from_dict(load_json(path), validate=validate)


def load_preference(path, L: Lattice) -> WeakOrder:
    d = load_json(path)
    try:
        ranks = [int(r) for r in d["ranks"]]
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"{path}: bad preference file: {e}") from e
    if len(ranks) != L.n:
        raise FormatError(
            f"{path}: ranks length {len(ranks)} does not match lattice size {L.n}"
        )
    return WeakOrder(tuple(ranks))


def preference_to_dict(W: WeakOrder) -> dict:
    return {"ranks": list(W.ranks)}


def representation_to_dict(R: Representation) -> dict:
    return {
        "outcomes": R.outcome_count,
        "sigma": {str(a): sorted(s) for a, s in enumerate(R.sigma_map)},
        "outcome_ranks": list(R.outcome_ranks),
    }


def load_representation(path, L: Lattice) -> Representation:
    d = load_json(path)
    try:
        count = int(d["outcomes"])
        sigma = d["sigma"]
        sigma_map = tuple(
            frozenset(int(x) for x in sigma[str(a)]) for a in range(L.n)
        )
        ranks = tuple(int(r) for r in d["outcome_ranks"])
        return Representation(count, sigma_map, ranks)
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"{path}: bad representation file: {e}") from e


def spectrum_to_dict(S: SpectralSpace) -> dict:
    return {
        "points": [sorted(F) for F in S.points],
        "sigma": {str(a): sorted(S.sigma(a)) for a in range(S.lattice.n)},
    }
