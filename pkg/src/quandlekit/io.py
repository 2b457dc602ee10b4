"""File formats and name shorthands used by the command line.

Everything is JSON with sorted keys: quandles ({"size", "table"}), reps
({"quandle", "modulus", "dim", "eta", "tau"}), cochains ({"degree",
"modulus", "dim", "values"}) with tuple keys spelled "x,y[,z]".
"""

from __future__ import annotations

import json
import os

from .algebra import (AlgebraRep, make_alexander_rep, make_conj_rep, make_rep,
                      permutation_rep_r3)
from .errors import InputError
from .homology import Cochain
from .quandles import (FiniteQuandle, make_alexander, make_dihedral,
                       make_trivial, quandle_from_table)


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def _load_json(path: str) -> dict:
    if not os.path.exists(path):
        raise InputError(f"no such file: {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}, "
                         f"column {exc.colno}") from None


def quandle_to_doc(q: FiniteQuandle) -> dict:
    return {"size": q.size, "table": [list(r) for r in q.table],
            "label": q.label}


def quandle_from_doc(doc: dict, label: str = "") -> FiniteQuandle:
    if "table" not in doc:
        raise InputError("quandle document is missing 'table'")
    table = doc["table"]
    if "size" in doc and doc["size"] != len(table):
        raise InputError("quandle document 'size' disagrees with the table")
    return quandle_from_table(table, label=doc.get("label", label))


def load_quandle(spec: str) -> FiniteQuandle:
    """A quandle by shorthand (dihedral:3, alexander:5:2, trivial:4) or by
    JSON file path."""
    parts = spec.split(":")
    try:
        if parts[0] == "dihedral" and len(parts) == 2:
            return make_dihedral(int(parts[1]))
        if parts[0] == "alexander" and len(parts) == 3:
            return make_alexander(int(parts[1]), int(parts[2]))
        if parts[0] == "trivial" and len(parts) == 2:
            return make_trivial(int(parts[1]))
    except ValueError:
        raise InputError(f"bad quandle shorthand {spec!r}") from None
    if parts[0] in ("dihedral", "alexander", "trivial"):
        raise InputError(f"bad quandle shorthand {spec!r}")
    return quandle_from_doc(_load_json(spec), label=os.path.basename(spec))


def rep_to_doc(rep: AlgebraRep) -> dict:
    return {
        "quandle": quandle_to_doc(rep.quandle),
        "modulus": rep.modulus,
        "dim": rep.dim,
        "eta": [[[list(r) for r in rep.eta[x][y]] for y in range(rep.quandle.size)]
                for x in range(rep.quandle.size)],
        "tau": [[[list(r) for r in rep.tau[x][y]] for y in range(rep.quandle.size)]
                for x in range(rep.quandle.size)],
        "label": rep.label,
    }


def rep_from_doc(doc: dict, quandle: FiniteQuandle | None = None) -> AlgebraRep:
    for key in ("modulus", "dim", "eta", "tau"):
        if key not in doc:
            raise InputError(f"rep document is missing {key!r}")
    if quandle is None:
        if "quandle" not in doc:
            raise InputError("rep document has no quandle and none was supplied")
        quandle = quandle_from_doc(doc["quandle"])
    return make_rep(quandle, doc["modulus"], doc["eta"], doc["tau"],
                    label=doc.get("label", ""), check=True)


def load_rep(spec: str, quandle: FiniteQuandle | None = None,
             modulus: int | None = None) -> AlgebraRep:
    """A representation by shorthand or JSON file path.

    Shorthands: alexander-rep:N:t (on the supplied quandle),
    conj-rep:perm3 (dihedral R3 permutation action, mod 3 by default),
    trivial-action[:N] (eta = I, tau = 0).
    """
    parts = spec.split(":")
    if parts[0] == "alexander-rep" and len(parts) == 3:
        if quandle is None:
            raise InputError("alexander-rep shorthand needs a quandle")
        return make_alexander_rep(quandle, int(parts[1]), int(parts[2]))
    if parts[0] == "conj-rep" and len(parts) >= 2 and parts[1] == "perm3":
        mod = int(parts[2]) if len(parts) == 3 else 3
        return make_conj_rep(permutation_rep_r3(mod))
    if parts[0] == "trivial-action":
        if len(parts) == 2:
            modulus = int(parts[1])
        if modulus is None:
            raise InputError("trivial-action shorthand needs a modulus")
        if quandle is None:
            raise InputError("trivial-action shorthand needs a quandle")
        return make_alexander_rep(quandle, modulus, 1)
    if parts[0] in ("alexander-rep", "conj-rep"):
        raise InputError(f"bad rep shorthand {spec!r}")
    return rep_from_doc(_load_json(spec), quandle=quandle)


def cochain_to_doc(kappa: Cochain) -> dict:
    values = {",".join(map(str, k)): list(v) for k, v in sorted(kappa.values.items())}
    return {"degree": kappa.degree, "modulus": kappa.modulus, "dim": kappa.dim,
            "values": values}


def cochain_from_doc(doc: dict) -> Cochain:
    for key in ("degree", "modulus", "dim"):
        if key not in doc:
            raise InputError(f"cochain document is missing {key!r}")
    values = {}
    for key, vec in doc.get("values", {}).items():
        parts = tuple(int(x) for x in key.split(","))
        if len(parts) != doc["degree"]:
            raise InputError(f"cochain key {key!r} has wrong arity")
        if len(vec) != doc["dim"]:
            raise InputError(f"cochain value for {key!r} has wrong length")
        values[parts] = [int(x) % doc["modulus"] for x in vec]
    return Cochain(degree=doc["degree"], modulus=doc["modulus"],
                   dim=doc["dim"], values=values)


def load_cochain(spec: str, rep: AlgebraRep | None = None,
                 degree: int = 2) -> Cochain:
    """A cochain from a JSON file, or the shorthand 'zero'."""
    if spec == "zero":
        if rep is None:
            raise InputError("'zero' cochain shorthand needs a rep for its shape")
        return Cochain(degree=degree, modulus=rep.modulus, dim=rep.dim, values={})
    return cochain_from_doc(_load_json(spec))
