"""Shift definition files and certificate round trips."""

import json
from pathlib import Path

from .autos import MarkerSystem, compose_automorphisms, identity_automorphism, marker_to_code
from .points import EvPeriodicPoint, in_cylinder_m, orbit_id
from .shift import LabeledGraph, SftSpec, cover_from_sft, fischer_cover

BUNDLED = ("golden_mean", "even")
DATA = Path(__file__).parent / "data"


def shift_from_dict(data):
    """Fischer cover of a shift given in the JSON schema (``sft`` or ``graph``)."""
    alphabet = tuple(data["alphabet"])
    kind = data.get("kind", "sft")
    if kind == "sft":
        return cover_from_sft(SftSpec(alphabet, tuple(data.get("forbidden", ()))))
    if kind == "graph":
        edges = tuple(tuple(e) for e in data["edges"])
        return fischer_cover(LabeledGraph(alphabet, tuple(data["states"]), edges))
    raise ValueError(f"unknown shift kind {kind!r}")


def read_shift_dict(path):
    """Parsed JSON of a shift file; a bare bundled name also works."""
    p = Path(path)
    if not p.exists() and p.stem in BUNDLED:
        text = (DATA / f"{p.stem}.json").read_text(encoding="utf-8")
    else:
        text = p.read_text(encoding="utf-8")
    return json.loads(text)


def load_shift(path):
    return shift_from_dict(read_shift_dict(path))


def bundled(name):
    """``"golden_mean"`` or ``"even"``."""
    return load_shift(name)


def dumps(obj):
    """Byte-stable JSON."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def certificate_automorphism(c, cert):
    """Rebuild the automorphism of a ``prop31`` certificate from its markers."""
    if cert["case"] == "identity":
        return identity_automorphism(c)
    if cert["case"] not in ("pair", "family"):
        raise ValueError(f"cannot rebuild a {cert['case']!r} certificate from markers")
    auts = [marker_to_code(c, MarkerSystem.from_json(ms)) for ms in cert["markers"]]
    g = auts[0]
    for f in auts[1:]:
        g = compose_automorphisms(g, f)
    return g


def verify_certificate(cert):
    """Re-check a certificate written by the command line tool.

    The automorphism is rebuilt from the recorded markers, then every
    recorded sample image and periodic orbit is recomputed and compared.
    Returns a list of failure messages; empty means verified.
    """
    from .points import QkPoint, dot_action

    c = shift_from_dict(cert["shift"])
    body = cert["certificate"]
    g = certificate_automorphism(c, body)
    k = body["inputs"]["k"]
    m = orbit_id(body["inputs"]["m"], c)
    u = body["inputs"]["u"]
    problems = []
    if not body["samples"]:
        problems.append("no sampled points")
    for s in body["samples"]:
        y = QkPoint(EvPeriodicPoint.parse(s["point"]), k)
        z = dot_action(g, y)
        if str(z) != s["image"]:
            problems.append(f"image of {s['point']} is {z}, recorded {s['image']}")
        if not in_cylinder_m(z.point, u, m, k):
            problems.append(f"image of {s['point']} leaves [{u}]")
    for p in body["periodic"]:
        y = g.code.apply_point(EvPeriodicPoint.periodic(p["orbit"]))
        if orbit_id(y.left, c).word != p["orbit"]:
            problems.append(f"orbit ({p['orbit']}) moved")
    return problems
