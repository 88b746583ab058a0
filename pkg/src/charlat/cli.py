"""Command-line interface: ``charlat {orbits,charlat,count,iso,verify}``.

JSON output is ``{"command", "input", "result"}`` with sorted keys. Slow
results (count tables, oracle sweeps) are cached as the JSON document itself
under ``--cache-dir`` (default ``$CHARLAT_CACHE`` or ``~/.cache/charlat``).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Callable

from . import latticecore as lc
from .charlattice import char_lattice, count_char_subgroups, count_projection_surjective
from .isodecide import decide_general
from .oracle import p_group_signatures, verify_against_formulas
from .orbits import count_orbits, enumerate_canonical, orbit_partition, type_size
from .signature import GroupSignature, PGroupSignature, SignatureError, parse_signature, sylow_decompose

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def default_cache_dir() -> Path:
    env = os.environ.get("CHARLAT_CACHE")
    return Path(env) if env else Path.home() / ".cache" / "charlat"


def _keyed_int(text: str, key: str) -> int:
    """Accept ``N`` or ``key=N``."""
    if "=" in text:
        k, _, text = text.partition("=")
        if k.strip() != key:
            raise argparse.ArgumentTypeError(f"expected {key}=N, got {k}=...")
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _components(g: GroupSignature) -> list[PGroupSignature]:
    comps = list(sylow_decompose(g).values())
    if not comps:
        raise UsageError("the trivial group has no components to describe")
    return comps


def _fmt(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


# ---------------------------------------------------------------------------
# result builders


def orbits_result(s: PGroupSignature) -> dict:
    parts = orbit_partition(s.lam)
    classes = []
    for a in enumerate_canonical(s.lam):
        types = sorted(parts[a], reverse=True)
        entry = {"label": "O" + _fmt(a), "canonical": list(a), "types": [list(b) for b in types]}
        entry["size"] = sum(type_size(b, s.p) for b in types)
        classes.append(entry)
    return {"group": str(s), "p": s.p, "lambda": list(s.lam), "count": count_orbits(s.lam), "classes": classes}


def lattice_document(lat: lc.FiniteLattice, name: Callable = str, types: Callable | None = None) -> dict:
    elements = []
    for lab in lat.labels:
        e = {"label": name(lab)}
        if types is not None:
            e["types"] = types(lab)
        elements.append(e)
    return {"elements": elements, "covers": [list(c) for c in lat.covers]}


def _component_lattice(s: PGroupSignature) -> lc.FiniteLattice:
    return char_lattice(s)


def _types_of(h) -> list[list[int]]:
    return [list(t) for t in sorted(h.type_set)]


def charlat_lattice(g: GroupSignature) -> tuple[lc.FiniteLattice, Callable, Callable]:
    comps = _components(g)
    lat = _component_lattice(comps[0])
    if len(comps) == 1:
        return lat, str, _types_of
    for s in comps[1:]:
        lat = lc.product(lat, _component_lattice(s))

    def flatten(lab):
        if isinstance(lab, tuple):
            for part in lab:
                yield from flatten(part)
        else:
            yield lab

    def name(lab):
        return " x ".join(str(h) for h in flatten(lab))

    def types(lab):
        return [_types_of(h) for h in flatten(lab)]

    return lat, name, types


def count_result(g: GroupSignature) -> dict:
    comps = _components(g)
    orbits = chars = 1
    per = []
    for s in comps:
        o, c = count_orbits(s.lam), count_char_subgroups(s)
        orbits *= o
        chars *= c
        per.append({"component": str(s), "p": s.p, "orbits": o, "characteristic_subgroups": c})
    return {"components": per, "orbits": orbits, "characteristic_subgroups": chars}


def table_result(n: int) -> dict:
    rows = [{"n": k, "value": str(count_char_subgroups(PGroupSignature(2, tuple(range(1, k + 1)))))}
            for k in range(1, n + 1)]
    return {"rows": rows}


def njk_result(k: int) -> dict:
    return {"k": k, "value": str(count_projection_surjective(k))}


def verify_result(sigs: list[PGroupSignature], jobs: int) -> dict:
    if jobs > 1 and len(sigs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as ex:
            reports = list(ex.map(verify_against_formulas, sigs))
    else:
        reports = [verify_against_formulas(s) for s in sigs]
    return {"pass": all(r["pass"] for r in reports), "checked": len(reports), "reports": reports}


# ---------------------------------------------------------------------------
# plumbing


class Cache:
    def __init__(self, root: Path | None):
        self.root = root

    def _path(self, command: str, inp: dict) -> Path:
        key = hashlib.sha256(json.dumps([command, inp], sort_keys=True).encode()).hexdigest()[:24]
        return self.root / f"{command}-{key}.json"

    def get_or_compute(self, command: str, inp: dict, compute: Callable[[], dict]) -> dict:
        if self.root is None:
            return compute()
        path = self._path(command, inp)
        if path.exists():
            try:
                doc = json.loads(path.read_text())
                if doc.get("command") == command and doc.get("input") == inp:
                    return doc["result"]
            except (OSError, ValueError, KeyError):
                pass
        result = compute()
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(dump(command, inp, result))
            tmp.replace(path)
        except OSError:
            pass
        return result


def dump(command: str, inp: dict, result: dict) -> str:
    return json.dumps({"command": command, "input": inp, "result": result}, sort_keys=True, indent=2) + "\n"


def _parse_group(text: str) -> GroupSignature:
    return parse_signature(text)


def cmd_orbits(args, cache: Cache) -> tuple[str, int]:
    if args.format == "dot":
        raise UsageError("orbits has no DOT form")
    g = _parse_group(args.group)
    inp = {"group": str(g)}
    comps = [orbits_result(s) for s in _components(g)]
    total = 1
    for c in comps:
        total *= c["count"]
    return dump("orbits", inp, {"components": comps, "count": total}), EXIT_OK


def cmd_charlat(args, cache: Cache) -> tuple[str, int]:
    g = _parse_group(args.group)
    lat, name, types = charlat_lattice(g)
    if args.format == "dot":
        return lc.to_dot(lat, name), EXIT_OK
    doc = lattice_document(lat, name, types)
    doc["size"] = len(lat)
    return dump("charlat", {"group": str(g)}, doc), EXIT_OK


def cmd_count(args, cache: Cache) -> tuple[str, int]:
    if args.format == "dot":
        raise UsageError("count has no DOT form")
    chosen = [x is not None for x in (args.group, args.table, args.njk)]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --group, --table, --njk")
    if args.group is not None:
        g = _parse_group(args.group)
        inp = {"group": str(g)}
        return dump("count", inp, count_result(g)), EXIT_OK
    if args.table is not None:
        inp = {"table": args.table}
        result = cache.get_or_compute("count", inp, lambda: table_result(args.table))
        return dump("count", inp, result), EXIT_OK
    inp = {"njk": args.njk}
    return dump("count", inp, njk_result(args.njk)), EXIT_OK


def cmd_iso(args, cache: Cache) -> tuple[str, int]:
    if args.format == "dot":
        raise UsageError("iso has no DOT form")
    a, b = _parse_group(args.a), _parse_group(args.b)
    d = decide_general(a, b)
    result = {"isomorphic": d.isomorphic}
    if args.explain:
        result.update(d.as_dict())
    return dump("iso", {"a": str(a), "b": str(b)}, result), EXIT_OK if d.isomorphic else EXIT_NO


def cmd_verify(args, cache: Cache) -> tuple[str, int]:
    if args.format == "dot":
        raise UsageError("verify has no DOT form")
    if (args.group is None) == (args.sweep is None):
        raise UsageError("give exactly one of --group, --sweep")
    if args.group is not None:
        g = _parse_group(args.group)
        inp = {"group": str(g)}
        result = verify_result(_components(g), 1)
    else:
        primes = sorted({int(x) for x in args.primes.split(",") if x.strip()})
        inp = {"sweep": args.sweep, "primes": primes}
        result = cache.get_or_compute(
            "verify", inp, lambda: verify_result(p_group_signatures(args.sweep, primes), args.jobs))
        result = dict(result)
        result["signatures"] = [r["signature"]["group"] + f" (p={r['signature']['p']})" for r in result["reports"]]
    return dump("verify", inp, result), EXIT_OK if result["pass"] else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help="cache directory (default $CHARLAT_CACHE or ~/.cache/charlat)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")

    parser = argparse.ArgumentParser(prog="charlat", description="Characteristic subgroups of finite abelian groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", parents=[common], help="automorphism classes")
    p.add_argument("--group", required=True, help="cyclic factor orders, e.g. 2,8")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("charlat", parents=[common], help="characteristic-subgroup lattice")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_charlat)

    p = sub.add_parser("count", parents=[common], help="orbit and characteristic-subgroup counts")
    p.add_argument("--group")
    p.add_argument("--table", type=lambda t: _keyed_int(t, "n"), help="rows 1..N for Z_2 x Z_4 x ... (n=N)")
    p.add_argument("--njk", type=lambda t: _keyed_int(t, "k"), help="projection-surjective subspaces of GF(2)^k (k=K)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("iso", parents=[common], help="decide lattice isomorphism (exit 0 yes, 1 no, 2 error)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify", parents=[common], help="brute-force cross-check")
    p.add_argument("--group")
    p.add_argument("--sweep", type=lambda t: _keyed_int(t, "maxorder"), help="all p-groups up to order N (maxorder=N)")
    p.add_argument("--primes", default="2,3,5", help="primes for --sweep (default 2,3,5)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    root = None if args.no_cache else (args.cache_dir or default_cache_dir())
    try:
        text, code = args.func(args, Cache(root))
    except (UsageError, SignatureError, lc.CapExceeded, ValueError) as exc:
        print(f"charlat {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
