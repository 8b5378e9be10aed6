"""File formats: fan files, h files, step logs, and the text rendering of reports.

Fan file (JSON, 1-based indices)::

    {"n": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
     "max_faces": [[1, 2], [2, 3], [1, 3]], "ghosts": [], "discriminant": null}

Scalars are JSON integers or literal strings such as ``"1/2"`` or
``"1-sqrt(2)"``.  A ghost vertex may carry ``null`` as its ray, meaning the
zero vector.  An optional ``"lattice"`` entry lists integer basis vectors of
a lattice, used only by the maximal-action reduction.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .complexes import SimplicialComplex
from .cplx import ExactComplex
from .fan import FanError, FanReport, MarkedFan
from .foliation import HSubspace
from .scalar import DiscriminantError, scalar_to_json, to_scalar

FAN_KEYS = {"n", "rays", "max_faces", "ghosts", "discriminant", "lattice"}


class InputError(ValueError):
    """Malformed input; the message names the file position or field."""


# ---------------------------------------------------------------------------
# scalars

def _scalar(value, where: str):
    if isinstance(value, float):
        raise InputError(f"{where}: floats are not accepted, write {value!r} as a fraction string")
    try:
        return to_scalar(value)
    except (TypeError, ValueError) as e:
        raise InputError(f"{where}: {e}") from None


def load_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None


def read_json_file(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    return load_json(text, path)


# ---------------------------------------------------------------------------
# fans

def fan_from_json(data, source: str = "<input>") -> MarkedFan:
    if not isinstance(data, dict):
        raise InputError(f"{source}: a fan file must hold a JSON object")
    unknown = sorted(set(data) - FAN_KEYS)
    if unknown:
        raise InputError(f"{source}: unknown field(s) {unknown}")
    for key in ("n", "rays", "max_faces"):
        if key not in data:
            raise InputError(f"{source}: missing field {key!r}")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"{source}: field 'n' must be a positive integer")
    rays_in = data["rays"]
    if not isinstance(rays_in, list):
        raise InputError(f"{source}: field 'rays' must be a list")
    ghosts = data.get("ghosts", [])
    if not isinstance(ghosts, list) or not all(
            isinstance(g, int) and not isinstance(g, bool) for g in ghosts):
        raise InputError(f"{source}: field 'ghosts' must be a list of integers")
    rays = []
    for i, r in enumerate(rays_in, 1):
        if r is None:
            if i not in ghosts:
                raise InputError(f"{source}: rays[{i}] is null but {i} is not a ghost")
            rays.append(tuple([Fraction(0)] * n))
            continue
        if not isinstance(r, list) or len(r) != n:
            raise InputError(f"{source}: rays[{i}] must be a list of {n} scalars")
        rays.append(tuple(_scalar(x, f"{source}: rays[{i}][{c + 1}]") for c, x in enumerate(r)))
    faces = data["max_faces"]
    if not isinstance(faces, list) or not all(isinstance(f, list) for f in faces):
        raise InputError(f"{source}: field 'max_faces' must be a list of lists")
    for k, f in enumerate(faces, 1):
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in f):
            raise InputError(f"{source}: max_faces[{k}] must contain integers")
    try:
        K = SimplicialComplex(len(rays), faces, ghosts if "ghosts" in data else None)
        fan = MarkedFan(K, rays, n)
    except DiscriminantError as e:
        raise InputError(f"{source}: field 'rays': {e}") from None
    except (ValueError, FanError) as e:
        raise InputError(f"{source}: {e}") from None
    declared = data.get("discriminant")
    if declared is not None and (isinstance(declared, bool) or not isinstance(declared, int)):
        raise InputError(f"{source}: field 'discriminant' must be an integer or null")
    if "discriminant" in data and declared != fan.discriminant:
        raise InputError(f"{source}: field 'discriminant' is {declared} but the rays use "
                         f"{fan.discriminant}")
    return fan


def fan_lattice(data, source: str = "<input>"):
    """The optional ``"lattice"`` rows of a fan file, or ``None``."""
    L = data.get("lattice") if isinstance(data, dict) else None
    if L is None:
        return None
    if not isinstance(L, list) or not all(isinstance(r, list) for r in L):
        raise InputError(f"{source}: field 'lattice' must be a list of vectors")
    return [[_scalar(x, f"{source}: lattice[{k}]") for x in r] for k, r in enumerate(L, 1)]


def read_fan(path: str) -> MarkedFan:
    return fan_from_json(read_json_file(path), path)


def fan_to_json(fan: MarkedFan) -> dict:
    return {
        "n": fan.n,
        "rays": [[scalar_to_json(x) for x in r] for r in fan.rays],
        "max_faces": [list(f) for f in fan.complex.sorted_facets() if f],
        "ghosts": sorted(fan.complex.ghosts),
        "discriminant": fan.discriminant,
    }


def report_to_json(rep: FanReport) -> dict:
    return {
        "simplicial": rep.simplicial,
        "fan_condition": rep.fan_condition,
        "complete": rep.complete,
        "simplicial_witness": list(rep.simplicial_witness) if rep.simplicial_witness else None,
        "fan_witness": [list(c) for c in rep.fan_witness] if rep.fan_witness else None,
        "complete_witness": [list(r) if isinstance(r, (tuple, list, frozenset)) else r
                             for r in rep.complete_witness],
        "method": rep.method,
    }


# ---------------------------------------------------------------------------
# h subspaces

def h_from_json(data, m: int, source: str = "<input>") -> HSubspace:
    """A list of complex vectors; entries are ``{"re": .., "im": ..}`` or plain scalars."""
    if isinstance(data, dict) and "h" in data:
        data = data["h"]
    if not isinstance(data, list) or not all(isinstance(v, list) for v in data):
        raise InputError(f"{source}: h must be a list of complex vectors")
    basis = []
    for k, v in enumerate(data, 1):
        if len(v) != m:
            raise InputError(f"{source}: h[{k}] has {len(v)} entries, need m = {m}")
        row = []
        for j, x in enumerate(v, 1):
            where = f"{source}: h[{k}][{j}]"
            if isinstance(x, dict):
                extra = set(x) - {"re", "im"}
                if extra:
                    raise InputError(f"{where}: unknown key(s) {sorted(extra)}")
                row.append(ExactComplex(_scalar(x.get("re", 0), where + ".re"),
                                        _scalar(x.get("im", 0), where + ".im")))
            else:
                row.append(ExactComplex(_scalar(x, where)))
        basis.append(row)
    return HSubspace(m, basis)


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None


def parse_scalar_list(text: str, what: str) -> list:
    return [_scalar(t.strip(), what) for t in text.split(",") if t.strip()]


# ---------------------------------------------------------------------------
# step logs

def step_log(steps, m_input: int) -> dict:
    return {
        "header": (f"input fan has m = {m_input}; at each step the new vertex is reported as 0 "
                   "and stored as old m + 1 (field stored_as); kernel generators list the "
                   "coefficient of e_0 first"),
        "steps": [s.to_json() for s in steps],
    }


# ---------------------------------------------------------------------------
# text rendering

def _is_table(v) -> bool:
    return (isinstance(v, list) and v and all(isinstance(r, list) for r in v)
            and all(isinstance(x, (int, str)) and not isinstance(x, bool) for r in v for x in r))


def _atom(x) -> str:
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def render_text(data, indent: int = 0) -> str:
    """Deterministic plain-text rendering of a JSON-like report."""
    return "\n".join(_render(data, indent)) + "\n"


def _render(data, indent):
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif _is_table(data):
        width = max(len(_atom(x)) for r in data for x in r)
        for r in data:
            lines.append(pad + " ".join(_atom(x).rjust(width) for x in r))
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(pad + _atom(data))
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_atom(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return _atom(v)


def dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"
