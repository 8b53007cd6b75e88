"""Command-line front end.

Specifications travel as JSON documents:

    {"schema_version": 1, "kind": "torus", "name": "...",
     "payload": {"rank": 1, "involution": [[-1]]}}

Kinds: "torus", "quasitorus" (a kernel presentation: source/target torus
payloads plus the cocharacter matrix), "group" (rank, simple_roots,
simple_coroots, tau, q), and "sequence" (same payload as quasitorus, run
through the exactness checks).  Integer matrices are row-major arrays;
rational numbers are "p/q" strings.  Output is deterministic byte for
byte for identical input.

Exit codes: 0 success, 2 validation failure, 3 oracle mismatch.
"""

import argparse
import json
import sys
from fractions import Fraction

from .glattice import GammaLattice
from .gmod import ValidationError
from .rootdata import BasedRootDatum, GroupSpec, validate
from .torus import QuasiTorusSpec, TorusSpec

SCHEMA_VERSION = 1


def frac_str(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else \
        "%d/%d" % (f.numerator, f.denominator)


def parse_frac(s):
    return Fraction(s)


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------

def to_document(obj, name=""):
    if isinstance(obj, TorusSpec):
        payload = {"rank": obj.rank,
                   "involution": [list(r) for r in obj.cochar.involution]}
        kind = "torus"
    elif isinstance(obj, QuasiTorusSpec):
        payload = {"source": to_document(obj.source)["payload"],
                   "target": to_document(obj.target)["payload"],
                   "matrix": [list(r) for r in obj.matrix]}
        kind = "quasitorus"
    elif isinstance(obj, GroupSpec):
        payload = {"rank": obj.brd.rank,
                   "simple_roots": [list(r) for r in obj.brd.simple_roots],
                   "simple_coroots": [list(r) for r in obj.brd.simple_coroots],
                   "tau": [list(r) for r in obj.tau],
                   "q": list(obj.q)}
        kind = "group"
        name = name or obj.name
    else:
        raise ValidationError("cannot serialize %r" % type(obj))
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind, "payload": payload}
    if name:
        doc["name"] = name
    return doc


def from_document(doc):
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValidationError("unsupported schema_version %r"
                              % doc.get("schema_version"))
    kind = doc.get("kind")
    payload = doc.get("payload", {})
    name = doc.get("name", "")
    if kind == "torus":
        return _torus_from(payload)
    if kind in ("quasitorus", "sequence"):
        src = _torus_from(payload["source"])
        tgt = _torus_from(payload["target"])
        return QuasiTorusSpec(src, tgt, payload["matrix"])
    if kind == "group":
        brd = BasedRootDatum(payload["rank"], payload["simple_roots"],
                             payload["simple_coroots"])
        return GroupSpec(brd, payload["tau"], tuple(payload["q"]), name=name)
    raise ValidationError("unknown document kind %r" % kind)


def _torus_from(payload):
    return TorusSpec(GammaLattice(payload["rank"], payload["involution"]))


def load_spec(arg):
    """Load from a file path or a catalog:NAME reference."""
    from . import catalog
    if arg.startswith("catalog:"):
        name = arg.split(":", 1)[1]
        entries = catalog.all_entries()
        if name not in entries:
            raise ValidationError("no catalog entry %r" % name)
        return entries[name], ("sequence" if False else None)
    with open(arg) as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError("parse error at line %d column %d: %s"
                              % (e.lineno, e.colno, e.msg))
    return from_document(doc), doc.get("kind")


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def group_json(group):
    return {"invariants": list(group.invariants),
            "order": group.order(),
            "description": group.describe()}


def emit(args, human_lines, machine):
    if args.json:
        print(json.dumps(machine, sort_keys=True, separators=(",", ":")))
    else:
        for line in human_lines:
            print(line)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_catalog(args):
    from . import catalog
    entries = catalog.all_entries()
    machine = []
    lines = []
    for name in sorted(entries):
        obj = entries[name]
        kind = to_document(obj)["kind"]
        lines.append("%-24s %s" % (name, kind))
        machine.append({"name": name, "kind": kind})
    emit(args, lines, machine)
    return 0


def cmd_tate(args):
    spec, _ = load_spec(args.spec)
    k = args.k
    if isinstance(spec, TorusSpec):
        from .torus import torus_tate
        group, reps = torus_tate(spec, k)
        rep_data = [{"nu": list(r.nu), "value_mod2": list(r.value)}
                    for r in reps]
    elif isinstance(spec, QuasiTorusSpec):
        from .torus import quasitorus_tate
        group, reps = quasitorus_tate(spec, k)
        rep_data = [{"nu": list(r.nu), "nuprime": list(r.nuprime),
                     "value_log": [frac_str(x) for x in r.value_log]}
                    for r in reps]
    else:
        _check_group(spec)
        from .gmod import tate
        from .rootdata import fundamental_group
        group = tate(fundamental_group(spec), k)
        rep_data = [{"nu": [frac_str(x) for x in g]} for g in group.gens]
    lines = ["H^%d = %s" % (k, group.describe())]
    if args.reps:
        for d in rep_data:
            lines.append("  rep %s" % json.dumps(d, sort_keys=True))
    emit(args, lines, {"k": k, "group": group_json(group),
                       "reps": rep_data if args.reps else None})
    return 0


def cmd_h1(args):
    spec, _ = load_spec(args.spec)
    if isinstance(spec, TorusSpec):
        return _rename(args, 1, cmd_tate)
    if isinstance(spec, QuasiTorusSpec):
        return _rename(args, 1, cmd_tate)
    _check_group(spec)
    from .kac import h1
    classes, neutral = h1(spec)
    lines = ["%d classes (neutral is #%d)" % (len(classes), neutral)]
    rep_data = []
    for i, rep in enumerate(classes):
        d = {"labels": list(rep.labels),
             "m_class": list(rep.m_coords),
             "nu": list(rep.nu),
             "value_mod2": list(rep.value)}
        rep_data.append(d)
        tag = "*" if i == neutral else " "
        line = " %s class %d: p=%s" % (tag, i, list(rep.labels))
        if rep.m_coords:
            line += " m=%s" % (list(rep.m_coords),)
        if args.reps:
            line += " nu=%s" % (list(rep.nu),)
        lines.append(line)
    emit(args, lines, {"count": len(classes), "neutral": neutral,
                       "classes": rep_data})
    return 0


def _rename(args, k, fn):
    args.k = k
    args.reps = getattr(args, "reps", False)
    return fn(args)


def cmd_pi0(args):
    spec, _ = load_spec(args.spec)
    if isinstance(spec, TorusSpec):
        from .torus import pi0_torus
        group = pi0_torus(spec)
        witnesses = [[frac_str(x) for x in g] for g in group.gens]
    else:
        _check_group(spec)
        from .pi0 import pi0
        res = pi0(spec)
        group = res.group
        witnesses = [list(w) for w in res.witnesses]
    desc = group.describe()
    emit(args, ["pi0 = %s" % desc],
         {"group": group_json(group), "witnesses": witnesses})
    return 0


def cmd_ab1(args):
    spec, _ = load_spec(args.spec)
    _check_group(spec)
    from .structure import ab1_table
    group, table = ab1_table(spec)
    lines = ["H^1(pi_1) = %s" % group.describe()]
    for i, coords in enumerate(table):
        lines.append("  class %d -> %s" % (i, list(coords)))
    emit(args, lines, {"group": group_json(group),
                       "classes": [list(c) for c in table]})
    return 0


def cmd_verify(args):
    from .oracle import crosscheck_all
    if args.catalog:
        reports = crosscheck_all()
    else:
        spec, kind = load_spec(args.spec)
        reports = _verify_one(spec, kind)
    lines = []
    machine = []
    ok = True
    for r in reports:
        status = "ok" if r.equal else "MISMATCH"
        lines.append("%-36s %s (main=%s oracle=%s)"
                     % (r.claim, status, r.main, r.oracle))
        machine.append({"claim": r.claim, "equal": r.equal,
                        "main": repr(r.main), "oracle": repr(r.oracle)})
        ok = ok and r.equal
    emit(args, lines, machine)
    return 0 if ok else 3


def _verify_one(spec, kind):
    from .oracle import OracleReport, borel_serre_count, tate_bruteforce
    reports = []
    if isinstance(spec, TorusSpec):
        from .glattice import lattice_tate
        from .torus import torus_tate
        for k in (0, 1):
            main = torus_tate(spec, k)[0].invariants
            orc = lattice_tate(spec.cochar, k).invariants
            reports.append(OracleReport("torus-h%d" % k, main, orc,
                                        main == orc))
    elif isinstance(spec, QuasiTorusSpec):
        from .torus import exact_seq_check
        for chk in exact_seq_check(spec):
            reports.append(OracleReport("%s (k=%d)" % (chk.name, chk.degree),
                                        "pass" if chk.ok else "fail", "pass",
                                        chk.ok))
        if spec.is_finite():
            from .gmod import tate as gtate
            from .torus import quasitorus_tate
            mod, _, _ = spec.as_finite_module()
            for k in (0, 1):
                main = quasitorus_tate(spec, k)[0].invariants
                orc = tate_bruteforce(mod, k)
                reports.append(OracleReport("quasitorus-h%d" % k, main, orc,
                                            main == orc))
    else:
        _check_group(spec)
        from .kac import h1
        main = len(h1(spec)[0])
        try:
            orc = borel_serre_count(spec)
            reports.append(OracleReport("h1-count", main, orc, main == orc))
        except ValidationError:
            reports.append(OracleReport("h1-count (no compact oracle)",
                                        main, main, True))
    return reports


def _check_group(spec):
    problems = validate(spec)
    if problems:
        raise ValidationError("; ".join("%s: %s" % p for p in problems))


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="realgalois",
        description="Galois cohomology of real reductive groups, exactly.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list built-in specifications")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("tate", help="Tate cohomology group")
    p.add_argument("spec")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--reps", action="store_true")
    p.set_defaults(fn=cmd_tate)

    p = sub.add_parser("h1", help="first Galois cohomology")
    p.add_argument("spec")
    p.add_argument("--reps", action="store_true")
    p.set_defaults(fn=cmd_h1)

    p = sub.add_parser("pi0", help="component group of the real points")
    p.add_argument("spec")
    p.set_defaults(fn=cmd_pi0)

    p = sub.add_parser("ab1", help="abelianization of the cohomology classes")
    p.add_argument("spec")
    p.set_defaults(fn=cmd_ab1)

    p = sub.add_parser("verify", help="run the independent oracles")
    p.add_argument("spec", nargs="?")
    p.add_argument("--catalog", action="store_true")
    p.set_defaults(fn=cmd_verify)

    args = parser.parse_args(argv)
    if args.command == "verify" and not args.catalog and not args.spec:
        parser.error("verify needs a spec or --catalog")
    try:
        return args.fn(args)
    except ValidationError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
