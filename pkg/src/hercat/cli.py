"""Command-line front end.

Every input flag takes inline JSON or a path to a JSON file. Results go to
stdout, diagnostics to stderr. Exit status: 0 on success, 2 on malformed
input, 1 when a mathematical precondition fails.
"""

from __future__ import annotations

import argparse
import os
import random
import re
import sys
from typing import Callable

from hercat import classify as cls
from hercat import klattice as kl
from hercat import quiver as qv
from hercat import serialize as io
from hercat import tube as tb
from hercat.errors import HercatError, InputError, ParseError

DEFAULT_MAX_DIM = 8
_DYNKIN = re.compile(r"^[ADE]\d+$")


def max_dim() -> int:
    raw = os.environ.get("HW_MAX_DIM", "")
    if not raw:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        raise ParseError("HW_MAX_DIM", f"expected an integer, got {raw!r}") from None
    if value < 1:
        raise ParseError("HW_MAX_DIM", "must be positive")
    return value


# -- input helpers ------------------------------------------------------------


def _load(arg: str, flag: str):
    """Inline JSON, or the contents of the file named by ``arg``."""
    text = arg
    label = flag
    stripped = arg.lstrip()
    if not stripped.startswith(("[", "{")) and os.path.exists(arg):
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(flag, f"cannot read {arg}: {exc.strerror}") from None
        label = f"{flag}={arg}"
    elif not stripped.startswith(("[", "{", "-")) and not stripped[:1].isdigit():
        raise ParseError(flag, f"no such file and not JSON: {arg!r}")
    return io.loads(text, label)


def _require(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name.replace('_', '-')} is required")
    return value


def _quiver(args) -> qv.Quiver:
    raw = _require(args, "quiver")
    if _DYNKIN.match(raw.strip().upper()):
        return qv.dynkin_quiver(raw.strip().upper(), args.orientation or 0)
    return io.parse_quiver(_load(raw, "--quiver"), "--quiver")


def _lattice(args) -> kl.EulerLattice:
    """From --gram, --genus, --quiver, --rank (tube) or --descriptor."""
    if args.gram is not None:
        return io.parse_lattice(_load(args.gram, "--gram"), "--gram")
    if getattr(args, "descriptor", None) is not None:
        return cls.build_lattice(_descriptor(args))
    if args.genus is not None:
        if args.genus < 0:
            raise ParseError("--genus", "must be nonnegative")
        return kl.curve_lattice(args.genus)
    if args.quiver is not None:
        return qv.ringel_lattice(_quiver(args))
    if args.rank is not None:
        if args.rank < 1:
            raise ParseError("--rank", "must be at least 1")
        return tb.tube_lattice(args.rank)
    raise InputError("give a lattice with --gram, --genus, --quiver, --rank or --descriptor")


def _descriptor(args) -> cls.Descriptor:
    if args.descriptor is not None:
        return io.parse_descriptor(_load(args.descriptor, "--descriptor"), "--descriptor")
    if args.quiver is not None:
        return cls.QuiverCat(_quiver(args))
    if args.genus is not None:
        return cls.CurveCat(args.genus)
    if args.rank is not None:
        return cls.TubeCat(args.rank)
    raise InputError("give a category with --descriptor, --quiver, --genus or --rank")


def _rep(args, name: str, q: qv.Quiver) -> qv.Rep:
    flag = "--" + name
    return io.parse_rep(_load(_require(args, name), flag), q, flag)


def _class(args, lat: kl.EulerLattice, name: str = "class") -> tuple[int, ...]:
    flag = "--" + name.replace("_", "-")
    return io.parse_class(_load(_require(args, name), flag), flag, lat.rank)


def _tube_object(args, name: str) -> tb.TubeObject:
    flag = "--" + name
    return io.parse_tube_object(_load(_require(args, name), flag), args.rank, flag)


# -- output -------------------------------------------------------------------


def _text(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if k == "schema":
                continue
            if isinstance(v, (dict,)) or (isinstance(v, list) and v and isinstance(v[0], (dict, list))):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {io.dumps(v)}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                sub = _text(item, indent + 1)
                lines.append(f"{pad}-")
                lines.extend(sub)
            else:
                lines.append(f"{pad}{io.dumps(item)}")
        return lines
    return [f"{pad}{io.dumps(value)}"]


def _emit(args, value, stream) -> None:
    if args.format == "text":
        stream.write("\n".join(_text(value)) + "\n")
    else:
        stream.write(io.dumps(value) + "\n")


# -- commands -----------------------------------------------------------------


def cmd_cartan(args):
    lat = _lattice(args)
    return io.lattice_to_json(lat)


def cmd_coxeter(args):
    lat = _lattice(args)
    c = kl.coxeter(lat)
    out = {"coxeter": c.tolist(), "serre": kl.serre_check(lat).ok}
    cy = kl.fractional_cy(c, cls.CY_SEARCH)
    if cy is not None:
        out["fractional_cy"] = io.cy_to_json(cy)
    return out


def cmd_radical(args):
    num = kl.radical_quotient(_lattice(args))
    return {
        "radical": [list(v) for v in num.radical_basis],
        "num_rank": num.num_rank,
        "complement": num.complement.tolist(),
        "projection": num.projection.tolist(),
        "num": io.lattice_to_json(num.lattice),
    }


def cmd_hom(args):
    q = _quiver(args)
    d = qv.hom_ext_dims(_rep(args, "left", q), _rep(args, "right", q))
    return {"hom": d.hom, "ext": d.ext}


def cmd_ext(args):
    q = _quiver(args)
    m, n = _rep(args, "left", q), _rep(args, "right", q)
    res = qv.hom_ext(m, n)
    cocycles = [[[[io.encode_rational(x) for x in row] for row in mat] for mat in z] for z in res.ext_cocycles]
    return {"hom": res.hom_dim, "ext": res.ext_dim, "cocycles": cocycles}


def cmd_tau(args):
    q = _quiver(args)
    tm = qv.ar_translate(_rep(args, "left", q))
    return io.rep_to_json(tm)


def cmd_indec(args):
    q = _quiver(args)
    m = _rep(args, "left", q)
    return {"indecomposable": qv.indecomposable(m), "end_top_dim": qv.endomorphism_top_dim(m)}


def cmd_exceptional(args):
    if args.left is not None:
        q = _quiver(args)
        m = _rep(args, "left", q)
        d = qv.hom_ext_dims(m, m)
        return {"exceptional": (d.hom, d.ext) == (1, 0), "hom": d.hom, "ext": d.ext}
    lat = _lattice(args)
    v = _class(args, lat)
    value = lat.chi(v, v)
    return {"exceptional_class": value == 1, "chi": value}


def cmd_reflect(args):
    q = _quiver(args)
    m = _rep(args, "left", q)
    if args.vertex is None:
        raise InputError("--vertex is required")
    if not 0 <= args.vertex < q.vertex_count:
        raise ParseError("--vertex", f"vertex {args.vertex} out of range for {q.vertex_count} vertices")
    new_q, new_m = qv.reflect(q, m, args.vertex)
    return {"schema": io.SCHEMA, "quiver": io.quiver_to_json(new_q), "rep": io.rep_to_json(new_m)}


def cmd_enumerate(args):
    q = _quiver(args)
    cap = max_dim() if args.bound is None else min(args.bound, max_dim())
    reps = qv.enumerate_indecomposables(q, cap)
    return {"schema": io.SCHEMA, "count": len(reps), "indecomposables": [io.rep_to_json(m) for m in reps]}


def cmd_tilt_from_seq(args):
    q = _quiver(args)
    seq = io.parse_rep_list(_load(_require(args, "seq"), "--seq"), q, "--seq")
    summands = qv.tilting_summands(seq)
    t = qv.direct_sum(summands) if summands else qv.Rep.zero_maps(q, [0] * q.vertex_count)
    d = qv.hom_ext_dims(t, t)
    return {
        "schema": io.SCHEMA,
        "summands": [io.rep_to_json(x) for x in summands],
        "tilting": io.rep_to_json(t),
        "self_ext": d.ext,
    }


def cmd_twist_k(args):
    lat = _lattice(args)
    v = _class(args, lat)
    s = io.parse_class_list(_load(_require(args, "spherical_set"), "--spherical-set"), "--spherical-set", lat.rank)
    return {"class": list(kl.twist_k(lat, s, v, args.direction))}


def cmd_perp(args):
    lat = _lattice(args)
    e = _class(args, lat)
    split = kl.perp_split(lat, e)
    return {"e": list(split.e), "perp": io.lattice_to_json(split.perp), "inclusion": split.inclusion.tolist()}


def cmd_torsion(args):
    lat = _lattice(args)
    v = _class(args, lat)
    s = io.parse_class_list(_load(_require(args, "spherical_set"), "--spherical-set"), "--spherical-set", lat.rank)
    return {"torsion": kl.torsion_test(lat, v, s)}


def cmd_tube_hom(args):
    x, y = _tube_object(args, "left"), _tube_object(args, "right")
    method = "realize" if args.realize else "closed"
    d = tb.tube_hom(x, y, method)
    return {"hom": d.hom, "ext": d.ext}


def cmd_spherical(args):
    r = _require(args, "rank")
    if r < 1:
        raise ParseError("--rank", "must be at least 1")
    if args.seq is not None:
        raw = _load(args.seq, "--seq")
        if not isinstance(raw, list):
            raise ParseError("--seq", "expected a list of tube objects")
        objs = [io.parse_tube_object(x, r, f"--seq[{i}]") for i, x in enumerate(raw)]
    else:
        objs = tb.minimal_spherical(r)
    check = tb.generalized_spherical(objs)
    return {
        "objects": [io.tube_object_to_json(x) for x in objs],
        "spherical": check.ok,
        "semisimple_end": check.semisimple,
        "tau_closed": check.tau_closed,
        "serre_duality": check.duality,
        "hom": check.hom_matrix,
        "ext": check.ext_matrix,
    }


def cmd_classify(args):
    bound = 4 if args.bound is None else args.bound
    return io.report_to_json(cls.classify(_descriptor(args), bound))


def cmd_search_min_ext(args):
    bound = max_dim() if args.bound is None else args.bound
    if args.quiver is not None:
        res = qv.min_self_ext_search(_quiver(args), min(bound, max_dim()))
        obj = io.rep_to_json(res.obj)
    elif args.rank is not None:
        res = qv.min_self_ext_search(tb.Tube(args.rank), bound)
        obj = io.tube_object_to_json(res.obj)
    else:
        raise InputError("give --quiver or --rank (tube)")
    return {"kind": res.kind, "hom": res.hom, "ext": res.ext, "object": obj}


def cmd_path_check(args):
    return {"path_check": qv.path_distance_check(_quiver(args))}


def _euler_rows(seed: int, samples: int):
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        q = qv.random_acyclic_quiver(rng)
        m, n = qv.random_rep(rng, q), qv.random_rep(rng, q)
        d = qv.hom_ext_dims(m, n)
        if d.hom - d.ext != qv.ringel_lattice(q).chi(m.dims, n.dims):
            bad += 1
    return bad


def identity_table(grid: int, genus_max: int, seed: int = 0, samples: int = 20) -> list[dict]:
    rows = []
    for g in range(genus_max + 1):
        c = kl.coxeter(kl.curve_lattice(g)).tolist()
        expected = [[1, 2 * g - 2], [0, 1]]
        rows.append({"check": "curve-coxeter", "params": {"g": g}, "pass": c == expected, "detail": f"C={c}"})
    names: dict[str, list[int]] = {}
    for g in range(1, genus_max + 1):
        for a in range(-grid, grid + 1):
            for b in range(-grid, grid + 1):
                rep = kl.verify_section5(a, b, g)
                for name, ok, detail in rep.checks:
                    tally = names.setdefault(name, [0, 0])
                    tally[0] += 1
                    tally[1] += int(not ok)
                    if not ok:
                        rows.append({"check": name, "params": {"a": a, "b": b, "g": g}, "pass": False, "detail": detail})
    for name, (total, failed) in names.items():
        rows.append({"check": name, "params": {"cases": total}, "pass": failed == 0, "detail": f"{total - failed}/{total}"})
    if samples:
        bad = _euler_rows(seed, samples)
        rows.append(
            {"check": "euler-consistency", "params": {"seed": seed, "pairs": samples}, "pass": bad == 0, "detail": f"{samples - bad}/{samples}"}
        )
    return rows


def cmd_identity_table(args):
    grid = 3 if args.grid is None else args.grid
    genus_max = 4 if args.genus_max is None else args.genus_max
    if grid < 0 or genus_max < 0:
        raise InputError("--grid and --genus-max must be nonnegative")
    seed = 0 if args.seed is None else args.seed
    rows = identity_table(grid, genus_max, seed, args.samples)
    return {"rows": rows, "pass": all(r["pass"] for r in rows)}


def _verify_table(result) -> str:
    width = max(len(r["check"]) for r in result["rows"])
    lines = []
    for r in result["rows"]:
        params = " ".join(f"{k}={v}" for k, v in r["params"].items())
        status = "PASS" if r["pass"] else "FAIL"
        lines.append(f"{status}  {r['check']:<{width}}  {params:<18}  {r['detail']}")
    lines.append(f"{'ALL PASS' if result['pass'] else 'FAILURES PRESENT'}")
    return "\n".join(lines) + "\n"


COMMANDS: dict[str, Callable] = {
    "cartan": cmd_cartan,
    "coxeter": cmd_coxeter,
    "radical": cmd_radical,
    "hom": cmd_hom,
    "ext": cmd_ext,
    "tau": cmd_tau,
    "indec": cmd_indec,
    "exceptional": cmd_exceptional,
    "reflect": cmd_reflect,
    "enumerate": cmd_enumerate,
    "tilt-from-seq": cmd_tilt_from_seq,
    "twist-k": cmd_twist_k,
    "perp": cmd_perp,
    "torsion": cmd_torsion,
    "tube-hom": cmd_tube_hom,
    "spherical": cmd_spherical,
    "classify": cmd_classify,
    "search-min-ext": cmd_search_min_ext,
    "path-check": cmd_path_check,
    "verify-paper": cmd_identity_table,
}

HELP = {
    "cartan": "Gram matrix of a lattice, quiver, tube, curve or descriptor",
    "coxeter": "Coxeter matrix -A^{-1}A^T",
    "radical": "radical of the form and the numerical quotient",
    "hom": "dim Hom and dim Ext^1 between two representations",
    "ext": "Ext^1 with representative cocycles",
    "tau": "Auslander-Reiten translate of a representation",
    "indec": "test a representation for indecomposability",
    "exceptional": "test a representation or a class for exceptionality",
    "reflect": "BGP reflection at a sink or source",
    "enumerate": "indecomposables of a Dynkin quiver",
    "tilt-from-seq": "tilting object from a full exceptional sequence",
    "twist-k": "twist along spherical classes on K_0",
    "perp": "split off an exceptional class",
    "torsion": "orthogonality to a spherical set",
    "tube-hom": "Hom and Ext^1 between tube objects",
    "spherical": "check a generalized 1-spherical object in a tube",
    "classify": "numerical invariants and branch consistency",
    "search-min-ext": "object minimizing self-extensions",
    "path-check": "Hom-path distances between indecomposables",
    "verify-paper": "table of the explicit Cartan/Coxeter identities",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gram", help="Gram matrix or lattice JSON")
    common.add_argument("--quiver", help="quiver JSON, or a Dynkin name such as A3")
    common.add_argument("--orientation", type=int, help="orientation bits for a Dynkin name")
    common.add_argument("--descriptor", help="category descriptor JSON")
    common.add_argument("--left", help="first representation or tube object")
    common.add_argument("--right", help="second representation or tube object")
    common.add_argument("--seq", help="list of representations or tube objects")
    common.add_argument("--class", dest="class_", metavar="CLASS", help="class in K_0 as an integer list")
    common.add_argument("--spherical-set", help="list of classes")
    common.add_argument("--rank", type=int, help="tube rank")
    common.add_argument("--genus", type=int, help="curve genus")
    common.add_argument("--bound", type=int, help="search bound")
    common.add_argument("--seed", type=int, help="seed for randomized checks")
    common.add_argument("--vertex", type=int, help="vertex for reflect")
    common.add_argument("--direction", choices=("left", "right"), default="left", help="twist direction")
    common.add_argument("--realize", action="store_true", help="tube-hom via explicit matrices")
    common.add_argument("--grid", type=int, help="verify-paper: a, b range over [-grid, grid]")
    common.add_argument("--genus-max", type=int, help="verify-paper: largest genus")
    common.add_argument("--samples", type=int, default=20, help="verify-paper: random Euler pairs")
    common.add_argument("--format", choices=("json", "text"), help="output format")

    parser = argparse.ArgumentParser(prog="hercat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=HELP[name], description=HELP[name])
    return parser


def run(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0) and 2
    setattr(args, "class", args.class_)
    try:
        result = COMMANDS[args.command](args)
    except InputError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except HercatError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    if args.command == "verify-paper" and args.format != "json":
        stdout.write(_verify_table(result))
        return 0 if result["pass"] else 1
    _emit(args, result, stdout)
    if args.command == "verify-paper":
        return 0 if result["pass"] else 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
