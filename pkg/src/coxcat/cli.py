"""Command-line front end: enumerate, poly, map, verify, selftest.

Objects stream one per line; paths serialize verbatim as step strings in
text mode and as {"steps": ...} in JSON mode, permutations as one-line
JSON arrays, ideals as {"roots": [...]}.  Enumerations print in
lexicographic order of the serialized form.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bijmaps, noncrossing, paths, rootposets, signedperm, sortable
from .qseries import GroupType, QPoly, SizeGuardError, cat_number, qcat_a

_OBJECTS = ("dyck", "ideal", "nc", "revnc", "sortable", "partition")
_STATS = ("area", "maj", "ls", "lt", "majimaj")
_VIAS = ("phiA", "phiB", "psiA", "psiB")


def _group(args) -> GroupType:
    family, n = args.type, args.n
    rank = n - 1 if family == "A" else n
    return GroupType(family, rank)


def _enumerate_objects(args):
    family, n = args.type, args.n
    if args.object == "dyck":
        limit = paths.AREA_GUARD_A if family == "A" else paths.AREA_GUARD_B
        if family == "D":
            raise ValueError("no type-D Dyck paths")
        if n > limit and not args.unsafe:
            raise SizeGuardError(f"type {family} path enumeration guarded at n <= {limit}")
        return [("path", w) for w in (paths.enumerate_a if family == "A" else paths.enumerate_b)(n)]
    t = _group(args)
    if args.object == "ideal":
        return [("ideal", i) for i in rootposets.ideals(t, unsafe=args.unsafe)]
    if args.object == "nc":
        return [("perm", w) for w in noncrossing.nc_elements(t)]
    if args.object == "revnc":
        return [("perm", w) for w in noncrossing.rev_nc(t)]
    if args.object == "sortable":
        return [("perm", w) for w in sortable.enumerate_sortables(family, n, unsafe=args.unsafe)]
    if args.object == "partition":
        if family == "A":
            return [
                ("partition", noncrossing.perm_to_partition_a(w))
                for w in noncrossing.nc_elements(t)
            ]
        if family == "B":
            return [
                ("partition", noncrossing.perm_to_partition_b(w))
                for w in noncrossing.nc_elements(t)
            ]
        raise ValueError("no type-D set partitions")
    raise ValueError(f"unknown object {args.object!r}")


def _serialize(kind: str, obj, fmt: str) -> str:
    if kind == "path":
        return json.dumps({"steps": obj}) if fmt == "json" else obj
    if kind == "perm":
        if fmt == "json":
            return json.dumps({"oneline": list(obj)})
        return json.dumps(list(obj), separators=(",", ":"))
    if kind == "ideal":
        return json.dumps(rootposets.ideal_to_json(obj), separators=(",", ":"))
    if kind == "partition":
        blocks = noncrossing.partition_to_json(obj)
        if fmt == "json":
            return json.dumps({"blocks": blocks}, separators=(",", ":"))
        return json.dumps(blocks, separators=(",", ":"))
    raise ValueError(kind)


def _stat_value(kind: str, obj, stat: str, args) -> int:
    family = args.type
    if kind == "path":
        if stat == "area":
            return paths.area_a(obj) if family == "A" else paths.area_b(obj)
        if stat == "maj":
            return paths.maj_a(obj) if family == "A" else paths.maj_b(obj)
    if kind == "ideal":
        if stat == "area":
            return len(obj)
        if stat == "maj":
            return rootposets.ideal_maj(_group(args), obj)
    if kind == "perm":
        if stat == "ls":
            return signedperm.length_s(obj, family)
        if stat == "lt":
            if family == "D":
                return signedperm.length_t_bfs(obj, family)
            return signedperm.length_t(obj)
        if stat == "maj":
            return signedperm.maj(obj, family)
        if stat == "majimaj":
            return signedperm.maj(obj, family) + signedperm.imaj(obj, family)
    raise ValueError(f"statistic {stat!r} undefined for {kind}")


_DEFAULT_STATS = {"path": ("area", "maj"), "ideal": ("area", "maj"), "perm": ("ls", "majimaj")}


def cmd_enumerate(args) -> int:
    objs = _enumerate_objects(args)
    lines = []
    for kind, obj in objs:
        line = _serialize(kind, obj, args.format)
        if args.format == "csv":
            stats = _DEFAULT_STATS.get(kind, ())
            vals = [str(_stat_value(kind, obj, s, args)) for s in stats]
            line = ",".join([_serialize(kind, obj, "text").replace(",", ";")] + vals)
        lines.append(line)
    for line in sorted(lines):
        print(line)
    return 0


def cmd_poly(args) -> int:
    objs = _enumerate_objects(args)
    values = [_stat_value(kind, obj, args.stat, args) for kind, obj in objs]
    counts = [0] * (max(values, default=0) + 1)
    for v in values:
        counts[v] += 1
    poly = QPoly(counts)
    if args.format == "json":
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def _parse_path_line(line: str) -> str:
    line = line.strip()
    if line.startswith("{"):
        return json.loads(line)["steps"]
    if line.startswith('"'):
        return json.loads(line)
    return line


def _parse_ideal_line(line: str):
    data = json.loads(line)
    if isinstance(data, dict):
        data = data["roots"]
    return frozenset(rootposets.parse_root(s) for s in data)


def _parse_perm_line(line: str, n: int):
    line = line.strip()
    if line.startswith("("):
        return signedperm.from_cycles(signedperm.parse_cycles(line), n)
    data = json.loads(line)
    if isinstance(data, dict):
        data = data["oneline"]
    p = tuple(int(v) for v in data)
    signedperm.check_perm(p)
    return p


def cmd_map(args) -> int:
    family = "A" if args.via.endswith("A") else "B"
    n = args.n
    t = GroupType(family, n - 1 if family == "A" else n)
    for line in sys.stdin:
        if not line.strip():
            continue
        if args.inverse:
            image = _parse_perm_line(line, n)
            if args.via.startswith("phi"):
                table = bijmaps.phi_inverse_table(t)
                kind, preimage = "ideal", table.get(image)
            else:
                table = bijmaps.psi_inverse_table(family, n)
                kind, preimage = "path", table.get(image)
            if preimage is None:
                raise ValueError(f"{image!r} is not in the image of {args.via}")
            serialized = _serialize(kind, preimage, args.format)
            ls = signedperm.length_s(image, family)
            if args.format == "json":
                print(json.dumps({"preimage": json.loads(serialized) if kind == "ideal" else {"steps": preimage}, "ls": ls}))
            else:
                print(f"{serialized}  ls={ls}")
            continue
        if args.via.startswith("phi"):
            ideal = _parse_ideal_line(line)
            image = bijmaps.phi(t, ideal)
        else:
            word = _parse_path_line(line)
            image = (bijmaps.psi_a if family == "A" else bijmaps.psi_b)(word)[0]
        ls = signedperm.length_s(image, family)
        mm = signedperm.maj(image, family) + signedperm.imaj(image, family)
        if args.format == "json":
            print(json.dumps({"image": {"oneline": list(image)}, "ls": ls, "majimaj": mm}))
        else:
            print(f"{json.dumps(list(image), separators=(',', ':'))}  ls={ls}")
    return 0


_VERIFY_DEFAULT_A = 6
_VERIFY_DEFAULT_B = 4


def _verify_task(task) -> dict:
    which, rank = task
    if which == "d4":
        return noncrossing.d4_counterexample()
    t = GroupType("A" if which.endswith("A") else "B", rank)
    if which.startswith("phi"):
        return bijmaps.verify_phi_theorems(t)
    return bijmaps.verify_psi_theorems(t)


def cmd_verify(args) -> int:
    tasks = []
    if args.which == "all":
        max_a = args.max_n if args.max_n else _VERIFY_DEFAULT_A
        max_b = args.max_n if args.max_n else _VERIFY_DEFAULT_B
        for n in range(2, max_a + 1):
            tasks += [("phiA", n - 1), ("psiA", n - 1)]
        for n in range(2, max_b + 1):
            tasks += [("phiB", n), ("psiB", n)]
        tasks.append(("d4", 4))
    elif args.which == "d4":
        tasks = [("d4", 4)]
    else:
        n = args.n
        if n is None:
            raise SystemExit("verify --which <single> requires --n")
        rank = n - 1 if args.which.endswith("A") else n
        tasks = [(args.which, rank)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))
    else:
        reports = [_verify_task(t) for t in tasks]
    bad = 0
    for report in reports:
        print(json.dumps(report))
        bad += len(report["failures"])
    return 1 if bad else 0


def _selftest_cases():
    tA8 = GroupType("A", 8)
    ideal17 = frozenset(
        rootposets.diff(a, b)
        for a, b in [
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9),
            (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (7, 9), (1, 4), (2, 5), (3, 6),
        ]
    )
    tB4 = GroupType("B", 4)
    idealB4 = rootposets.root_poset(tB4).ideal_from_antichain(
        [rootposets.diff(1, 4), rootposets.short(1)]
    )

    def eq(name, got, want):
        return (name, got, want)

    cases = [
        eq("qcat_a(3)", str(qcat_a(3)), "1 + q^2 + q^3 + q^4 + q^6"),
        eq("Cat_B2(q) by areas", str(rootposets.cat_q(GroupType("B", 2))), "1 + 2q + q^2 + q^3 + q^4"),
        eq("cat numbers", (cat_number(GroupType("H3", 3)), cat_number(GroupType("E8", 8)), cat_number(GroupType("B", 2))), (32, 25080, 6)),
        eq("B2 path count", len(paths.enumerate_b(2)), 6),
        eq("B2 areas", sorted(paths.area_b(w) for w in paths.enumerate_b(2)), [0, 1, 1, 2, 3, 4]),
        eq("maj of B6 path", paths.maj_b("NENNENNNENNE"), 48),
        eq("lattice maj", paths.lattice_maj("NEENEENNENNE"), 24),
        eq("lattice unfold", paths.unfold_lattice_to_b("NEENEENNENNE"), "NENNENNNENNE"),
        eq("cycle notation", signedperm.cycles_str(signedperm.to_cycles((4, 2, -6, 5, 1, 3))), "(1,4,5)(3,-6,-3)"),
        eq("rev example", signedperm.rev((2, -4, 3, -1)), (2, -1, 3, -4)),
        eq("phi9 image", bijmaps.phi(tA8, ideal17), (7, 3, 4, 5, 2, 6, 9, 8, 1)),
        eq("phi9 maj pair", (rootposets.ideal_maj(tA8, ideal17), signedperm.maj((7, 3, 4, 5, 2, 6, 9, 8, 1), "A"), signedperm.imaj((7, 3, 4, 5, 2, 6, 9, 8, 1), "A")), (35, 20, 17)),
        eq("phi10 lift", bijmaps.phi(GroupType("A", 9), rootposets.lift_delta(tA8, ideal17)), (10, 6, 3, 4, 5, 7, 2, 9, 8, 1)),
        eq("phi4 image", bijmaps.phi(tB4, idealB4), (4, 3, 2, -1)),
        eq("phi5 lift", bijmaps.phi(GroupType("B", 5), rootposets.lift_delta(tB4, idealB4)), (4, 3, 2, -1, -5)),
        eq("psiA word", str(bijmaps.psi_a("NNNNEEENNEEE")[1]), "s5 s4 s3 s2 s1 | s5 s4 s2 | s5"),
        eq("psiA image", bijmaps.psi_a("NNNNEEENNEEE")[0], (6, 2, 1, 5, 4, 3)),
        eq("psiB word", str(bijmaps.psi_b("NNNNEEENNNNE")[1]), "s5 s4 s3 s2 s1 s0 | s5 s4 s2 s1 s0 | s5 s2 s1"),
        eq("psiB image", bijmaps.psi_b("NNNNEEENNNNE")[0], (1, -2, -6, 5, 4, 3)),
        eq("S3 sorting words", sorted(str(sortable.c_sorting_word(w, (2, 1), "A")) for w in signedperm.enumerate_group("A", 3)), sorted(["e", "s2", "s2 s1", "s2 s1 | s2", "s1", "s1 | s2"])),
        eq("[2,3,1] unsortable", sortable.is_c_sortable((2, 3, 1), (2, 1), "A"), False),
    ]
    return cases


def cmd_selftest(args) -> int:
    bad = 0
    for name, got, want in _selftest_cases():
        ok = got == want
        bad += not ok
        status = "ok" if ok else "FAIL"
        print(f"{status}: {name}" + ("" if ok else f" (got {got!r}, want {want!r})"))
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxcat")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, need_n=True):
        p.add_argument("--type", choices=("A", "B", "D"), default="A")
        if need_n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--unsafe", action="store_true", help="override rank guards")

    p_enum = sub.add_parser("enumerate", help="list objects one per line")
    common(p_enum)
    p_enum.add_argument("--object", choices=_OBJECTS, required=True)
    p_enum.set_defaults(fn=cmd_enumerate)

    p_poly = sub.add_parser("poly", help="generating polynomial of a statistic")
    common(p_poly)
    p_poly.add_argument("--object", choices=_OBJECTS, required=True)
    p_poly.add_argument("--stat", choices=_STATS, required=True)
    p_poly.set_defaults(fn=cmd_poly)

    p_map = sub.add_parser("map", help="apply a bijection to objects from stdin")
    p_map.add_argument("--via", choices=_VIAS, required=True)
    p_map.add_argument("--n", type=int, required=True)
    p_map.add_argument("--format", choices=("text", "json"), default="text")
    p_map.add_argument(
        "--inverse",
        action="store_true",
        help="read permutations (one-line arrays or cycle strings) and return preimages",
    )
    p_map.set_defaults(fn=cmd_map)

    p_ver = sub.add_parser("verify", help="run theorem verifiers; nonzero exit on failure")
    p_ver.add_argument("--which", choices=_VIAS + ("d4", "all"), default="all")
    p_ver.add_argument("--all", action="store_const", const="all", dest="which")
    p_ver.add_argument("--n", type=int)
    p_ver.add_argument("--max-n", type=int, default=0, help="cap for --which all sweeps")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.set_defaults(fn=cmd_verify)

    p_self = sub.add_parser("selftest", help="fixed regression assertions")
    p_self.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
