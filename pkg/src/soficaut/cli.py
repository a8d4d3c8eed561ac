"""Command line front end.

Every verb loads a shift file (or a bundled name such as ``golden_mean``),
runs one library operation and prints a report headed by the command line
that produced it.  ``--json`` prints the same report as JSON.

Exit status: 0 on success, 1 when an input fails validation or a check
fails, 2 when a bounded search gives up.
"""

import argparse
import json
import sys
from pathlib import Path

from . import autos, constructions, io, points, shift
from .errors import SearchExhausted, SoficError


def _b(x):
    return "true" if x else "false"


def _orbit(args, c):
    return points.orbit_id(args.m.strip("()"), c)


def cmd_check(c, args):
    t = shift.is_transitive(c)
    p = shift.shift_period(c)
    mixing = t and p == 1
    data = {"transitive": t, "mixing": mixing, "period": p, "states": c.n}
    return [f"transitive: {_b(t)}, mixing: {_b(mixing)}, period: {p}"], data, True


def cmd_words(c, args):
    words = shift.enumerate_words(c, args.n)
    return words + [f"count: {len(words)}"], {"n": args.n, "words": words}, True


def cmd_sync(c, args):
    ok = shift.is_synchronizing(c, args.word)
    return [f"synchronizing: {_b(ok)}"], {"word": args.word, "synchronizing": ok}, True


def cmd_sync_extend(c, args):
    w = shift.extend_to_synchronizing(c, args.word)
    return [f"extension: {w}"], {"word": args.word, "extension": w}, True


def _marker_system(args):
    data = args.data.split(",")
    images = args.images.split(",") if args.images else data[1:] + data[:1]
    return autos.MarkerSystem(args.left, args.right, tuple(data), tuple(images))


def cmd_marker_validate(c, args):
    ms = _marker_system(args)
    v = autos.validate_marker_system(c, ms)
    if v is not None:
        return [f"violation: {v}"], {"ok": False, "violation": v.kind, "detail": v.detail}, False
    ov = autos.max_overlap(ms)
    return [f"ok: true, max overlap: {ov}"], {"ok": True, "max_overlap": ov}, True


def cmd_marker_build(c, args):
    ms = _marker_system(args)
    g = autos.marker_to_code(c, ms)
    lines = [f"radius: {g.radius}", f"order: {g.order}"]
    data = {"marker": ms.to_json(), "radius": g.radius, "order": g.order}
    for w in args.apply or []:
        img = g.code.apply_word(w)
        lines.append(f"apply {w}: {img}")
        data.setdefault("apply", {})[w] = img
    if args.out:
        body = g.code.to_json() if args.table else {"radius": g.radius, "marker": ms.to_json()}
        Path(args.out).write_text(io.dumps(body), encoding="utf-8")
        lines.append(f"code: {args.out}")
    return lines, data, True


def cmd_per_k(c, args):
    orbits = points.enumerate_per_k(c, args.k)
    words = [str(o) for o in orbits]
    return words + [f"count: {len(words)}"], {"k": args.k, "orbits": [o.word for o in orbits]}, True


def cmd_classify(c, args):
    kind, _ = points.classify_type(c, args.word)
    return [f"type: {kind.value}"], {"word": args.word, "type": kind.value}, True


def cmd_ryan(c, args):
    rs = constructions.ryan_system(c, args.R)
    lines = [f"marker: {rs.marker}", f"n: {rs.n}", f"data: {len(rs.data)}",
             f"orbits: {len(rs.orbits)}", f"covers: {_b(rs.covers(c))}"]
    return lines, rs.to_json(), True


def cmd_center_test(c, args):
    rs = constructions.ryan_system(c, args.R)
    lines, data, ok = [], {"marker": rs.marker, "n": rs.n, "autos": [], "shifts": {}}, True
    d = rs.data
    perms = [{d[0]: d[1], d[1]: d[0]}]
    if len(d) >= 3:
        perms.append({d[0]: d[1], d[1]: d[2], d[2]: d[0]})
    for perm in perms:
        g = constructions.orbit_permutation_auto(c, rs, perm)
        j = constructions.identify_power_of_shift(c, g)
        ok &= j is None
        text = " ".join(f"{a}->{b}" for a, b in perm.items())
        lines.append(f"tau {text}: power of shift: {j}")
        data["autos"].append({"perm": perm, "power": j})
    for j in range(-3, 4):
        got = constructions.identify_power_of_shift(c, autos.shift_automorphism(c, j))
        ok &= got == j
        lines.append(f"sigma^{j}: power of shift: {got}")
        data["shifts"][str(j)] = got
    lines.append(f"verified: {_b(ok)}")
    data["verified"] = ok
    return lines, data, ok


def _certificate(c, args, cert, kind):
    body = {"kind": kind, "shift": io.read_shift_dict(args.shift), "certificate": cert.to_json()}
    out = args.out or f"{kind}_certificate.json"
    Path(out).write_text(io.dumps(body), encoding="utf-8")
    return out


def cmd_prop31(c, args):
    cert = constructions.prop31(c, args.k, _orbit(args, c), args.w, args.u)
    out = _certificate(c, args, cert, "prop31")
    lines = [f"case: {cert.case}", f"radius: {cert.automorphism.radius}",
             f"samples: {len(cert.samples)}", f"certificate: {out}",
             f"verified: {_b(cert.verified)}"]
    return lines, {"certificate": out, **cert.to_json()}, cert.verified


def cmd_minimality(c, args):
    wit = constructions.minimality_witness(c, args.k, _orbit(args, c), args.u, args.w)
    out = _certificate(c, args, wit.certificate, "minimality")
    lines = [f"radius: {wit.automorphism.radius}", f"checks: {len(wit.checks)}",
             f"certificate: {out}", f"verified: {_b(wit.verified)}"]
    return lines, {"certificate": out, "checks": len(wit.checks), "verified": wit.verified}, wit.verified


def cmd_pingpong(c, args):
    rep = constructions.pingpong_check(c, args.k, _orbit(args, c), args.A, args.B, args.L)
    data = {"ok": rep.ok, "length": rep.length, "words": rep.words_checked,
            "sample": rep.sample_size, "violation": rep.violation}
    return [str(rep)], data, rep.ok


def cmd_verify(_, args):
    cert = json.loads(Path(args.shift).read_text(encoding="utf-8"))
    problems = io.verify_certificate(cert)
    return problems + [f"verified: {_b(not problems)}"], {"problems": problems, "verified": not problems}, not problems


def _parser():
    p = argparse.ArgumentParser(prog="soficaut", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, *opts):
        s = sub.add_parser(name)
        s.add_argument("shift", help="shift JSON file or bundled name" if name != "verify" else "certificate JSON")
        s.add_argument("--json", action="store_true")
        s.add_argument("--out")
        for flags, kw in opts:
            s.add_argument(*flags, **kw)
        s.set_defaults(fn=fn)

    req = {"required": True}
    verb("check", cmd_check)
    verb("words", cmd_words, (("--n",), {"type": int, **req}))
    verb("sync", cmd_sync, (("--word",), req))
    verb("sync-extend", cmd_sync_extend, (("--word",), req))
    marker = [(("--left",), req), (("--right",), req), (("--data",), {**req, "help": "comma separated"}),
              (("--images",), {"help": "comma separated; default rotates the data by one"})]
    verb("marker-validate", cmd_marker_validate, *marker)
    verb("marker-build", cmd_marker_build, *marker, (("--apply",), {"action": "append"}),
         (("--table",), {"action": "store_true", "help": "write the full window table to --out"}))
    verb("per-k", cmd_per_k, (("--k",), {"type": int, **req}))
    verb("classify", cmd_classify, (("--word",), req))
    verb("ryan", cmd_ryan, (("--R",), {"type": int, **req}))
    verb("center-test", cmd_center_test, (("--R",), {"type": int, "default": 1}))
    cyl = [(("--k",), {"type": int, **req}), (("--m",), req), (("--w",), req), (("--u",), req)]
    verb("prop31", cmd_prop31, *cyl)
    verb("minimality", cmd_minimality, *cyl)
    verb("pingpong", cmd_pingpong, (("--k",), {"type": int, **req}), (("--m",), req),
         (("--A",), req), (("--B",), req), (("--L",), {"type": int, "default": 4}))
    verb("verify", cmd_verify)
    return p


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    args = _parser().parse_args(argv)
    header = "# " + " ".join([args.verb] + [a for a in (argv if argv is not None else sys.argv[1:])[1:]])
    try:
        c = io.load_shift(args.shift) if args.verb != "verify" else None
        lines, data, ok = args.fn(c, args)
    except SearchExhausted as e:
        lines, data, ok, code = [f"error: {e}"], {"error": type(e).__name__, "message": str(e)}, False, 2
    except (SoficError, ValueError, KeyError, OSError) as e:
        lines, data, ok, code = [f"error: {e}"], {"error": type(e).__name__, "message": str(e)}, False, 1
    else:
        code = 0 if ok else 1
    if args.json:
        stdout.write(io.dumps(data))
    else:
        stdout.write("\n".join([header] + lines) + "\n")
    return code


def main():
    sys.exit(run())
