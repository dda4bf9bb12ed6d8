"""Command-line interface.

Commands: verify, construct, enumerate, tables, sd-set, classify,
project, import.  Exit codes: 0 success / everything verified,
1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .construct import (
    Family,
    catalog,
    cube_g2x3,
    cube_g3_variant_i,
    cube_g3_variant_ii,
    cube_w2w2g2,
    g2,
    g3,
    table2,
    w1,
    w2,
)
from .core import costas_violation, is_costas, is_costas_cube, projections
from .enumeration import (
    EnumerationLimitError,
    array_classes,
    enumerate_costas_arrays,
    enumerate_costas_cubes,
    projection_class_count,
    table1,
)
from .files import emit_array_file, emit_cube_file, parse_array_file, parse_cube_file
from .gf import format_element, parse_element, parse_field_spec
from .symmetry import PLANAR_SYMMETRIES, apply_planar, canonical_array, projection_set


def _machine(doc) -> str:
    return json.dumps(doc, sort_keys=True)


def _read(path: str) -> str:
    return Path(path).read_text()


# -- verify -------------------------------------------------------------


def cmd_verify(args) -> int:
    text = _read(args.input)
    if args.target == "array":
        try:
            perms = parse_array_file(text)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        failures = 0
        out = []
        for idx, p in enumerate(perms, start=1):
            bad = costas_violation(p)
            if args.format == "machine":
                out.append({"index": idx, "values": list(p.values), "costas": bad is None,
                            "repeated_vector": list(bad) if bad else None})
            elif bad is None:
                print(f"{idx}: {p} costas")
            else:
                print(f"{idx}: {p} FAIL repeated vector {bad}")
            failures += bad is not None
        if args.format == "machine":
            print(_machine(out))
        return 1 if failures else 0

    try:
        cube = parse_cube_file(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    t = projections(cube)
    verdicts = {name: is_costas(p) for name, p in (("A", t.a), ("B", t.b), ("C", t.c))}
    ok = all(verdicts.values())
    if args.format == "machine":
        print(_machine({
            "order": cube.order,
            "triples": [list(x) for x in cube.triples()],
            "projections": {"A": list(t.a.values), "B": list(t.b.values), "C": list(t.c.values)},
            "projection_costas": verdicts,
            "costas_cube": ok,
        }))
    else:
        for name, p in (("A", t.a), ("B", t.b), ("C", t.c)):
            print(f"projection {name}: {p} {'costas' if verdicts[name] else 'NOT costas'}")
        print(f"costas cube: {'yes' if ok else 'NO'}")
    return 0 if ok else 1


# -- construct ----------------------------------------------------------

_NEEDS = {
    "w1": ("phi",),
    "g2": ("phi", "rho"),
    "w2": ("phi",),
    "g3": ("phi",),
    "cube-g2x3": ("phi", "rho", "psi"),
    "cube-w2w2g2": ("phi", "psi"),
    "cube-g3-i": ("phi",),
    "cube-g3-ii": ("phi",),
}
_PRIME_ONLY = {"w1", "w2", "cube-w2w2g2"}


def cmd_construct(args) -> int:
    field = parse_field_spec(args.field)
    if args.family in _PRIME_ONLY and field.m != 1:
        print(f"error: family {args.family} needs a prime field", file=sys.stderr)
        return 2
    missing = [n for n in _NEEDS[args.family] if getattr(args, n) is None]
    if missing:
        print(f"error: family {args.family} requires --" + " --".join(missing), file=sys.stderr)
        return 2
    elems = {n: parse_element(field, getattr(args, n)) for n in _NEEDS[args.family]}
    params = {n: format_element(field, e) for n, e in elems.items()}

    if args.family == "w1":
        obj = w1(field.p, elems["phi"], args.c)
        params["c"] = str(args.c)
    elif args.family == "g2":
        obj = g2(field, elems["phi"], elems["rho"])
    elif args.family == "w2":
        obj = w2(field.p, elems["phi"])
    elif args.family == "g3":
        obj = g3(field, elems["phi"])
    elif args.family == "cube-g2x3":
        obj = cube_g2x3(field, elems["phi"], elems["rho"], elems["psi"])
    elif args.family == "cube-w2w2g2":
        obj = cube_w2w2g2(field.p, elems["phi"], elems["psi"])
    elif args.family == "cube-g3-i":
        obj = cube_g3_variant_i(field, elems["phi"])
    else:
        obj = cube_g3_variant_ii(field, elems["phi"])

    stamp = f"{args.family} over GF({field.q}) " + " ".join(f"{k}={v}" for k, v in params.items())
    if hasattr(obj, "rows"):
        t = projections(obj)
        verified = is_costas_cube(obj)
        if args.format == "machine":
            print(_machine({
                "family": args.family, "field": args.field, "parameters": params,
                "order": obj.order, "triples": [list(x) for x in obj.triples()],
                "projections": {"A": list(t.a.values), "B": list(t.b.values), "C": list(t.c.values)},
                "costas_cube": verified,
            }))
        else:
            comments = [stamp, f"costas cube: {'yes' if verified else 'NO'}",
                        f"projection A: {' '.join(map(str, t.a.values))}",
                        f"projection B: {' '.join(map(str, t.b.values))}",
                        f"projection C: {' '.join(map(str, t.c.values))}"]
            print(emit_cube_file(obj, comments=comments), end="")
    else:
        verified = is_costas(obj)
        if args.format == "machine":
            print(_machine({
                "family": args.family, "field": args.field, "parameters": params,
                "order": obj.order, "values": list(obj.values), "costas": verified,
            }))
        else:
            print(emit_array_file([obj], comments=[stamp, f"costas: {'yes' if verified else 'NO'}"]), end="")
    return 0 if verified else 1


# -- enumerate ----------------------------------------------------------


def cmd_enumerate(args) -> int:
    try:
        if args.arrays_file:
            arrays = parse_array_file(_read(args.arrays_file))
            if any(p.order != args.order for p in arrays):
                print("error: arrays file does not match --order", file=sys.stderr)
                return 2
        else:
            arrays = enumerate_costas_arrays(args.order)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cubes = enumerate_costas_cubes(args.order, arrays, threads=args.threads)
    report = {
        "order": args.order,
        "cube_classes": len(cubes),
        "projection_array_classes": projection_class_count(cubes),
        "total_array_classes": len(array_classes(arrays)),
    }
    if args.format == "machine":
        if args.emit_representatives:
            report["representatives"] = [[list(t) for t in c.triples()] for c in cubes]
        print(_machine(report))
    else:
        print(
            "order {order}: cube classes {cube_classes}, "
            "projection array classes {projection_array_classes}, "
            "total array classes {total_array_classes}".format(**report)
        )
        if args.emit_representatives:
            for c in cubes:
                print(c)
    return 0


# -- tables -------------------------------------------------------------


def cmd_tables(args) -> int:
    if args.table == 1:
        try:
            reports = table1(args.max_order, threads=args.threads)
        except EnumerationLimitError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if args.format == "machine":
            print(_machine([
                {"order": r.order, "cube_classes": r.cube_classes,
                 "projection_array_classes": r.projection_array_classes,
                 "total_array_classes": r.total_array_classes}
                for r in reports
            ]))
        else:
            print("order  cubes  projection_arrays  total_arrays")
            for r in reports:
                print(f"{r.order:>5}  {r.cube_classes:>5}  {r.projection_array_classes:>17}  {r.total_array_classes:>12}")
        return 0

    rows = table2(args.max_order)
    if args.format == "machine":
        print(_machine([
            {"order": r.order, "g2x3": r.g2x3, "w2w2g2": r.w2w2g2, "g3": r.g3,
             "g3_variant_i": r.g3_variant_i, "g3_variant_ii": r.g3_variant_ii,
             "total_known": r.total_known}
            for r in rows
        ]))
    else:
        print("order  g2x3  w2w2g2  g3  total_known")
        for r in rows:
            if r.g2x3 or r.w2w2g2 or r.g3:
                cells = [str(r.order),
                         str(r.g2x3) if r.g2x3 else "-",
                         str(r.w2w2g2) if r.w2w2g2 else "-",
                         str(r.g3) if r.g3 else "-",
                         str(r.total_known) if r.total_known is not None else "?"]
                print(f"{cells[0]:>5}  {cells[1]:>4}  {cells[2]:>6}  {cells[3]:>2}  {cells[4]:>11}")
    return 0


# -- sd-set -------------------------------------------------------------


def cmd_sd_set(args) -> int:
    try:
        cube = parse_cube_file(_read(args.input))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not is_costas_cube(cube):
        print("error: not a Costas cube", file=sys.stderr)
        return 1
    members = projection_set(cube)
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for p in members:
        groups.setdefault(canonical_array(p).values, []).append(p.values)
    for vals in groups.values():
        vals.sort()
    if args.format == "machine":
        print(_machine({
            "order": cube.order,
            "size": len(members),
            "degenerate": cube.order <= 2,
            "classes": {" ".join(map(str, k)): [list(v) for v in vs]
                        for k, vs in sorted(groups.items())},
        }))
    else:
        note = " (degenerate order <= 2)" if cube.order <= 2 else ""
        print(f"|S(D)| = {len(members)}{note}")
        for key in sorted(groups):
            listed = " ".join("(" + ",".join(map(str, v)) + ")" for v in groups[key])
            print(f"class ({','.join(map(str, key))}): {listed}")
    return 0


# -- classify -----------------------------------------------------------


def _labels_for(values: tuple[int, ...], cat) -> list[str]:
    return sorted(cat.get(values, set()))


def cmd_classify(args) -> int:
    text = _read(args.input)
    if args.target == "array":
        try:
            perms = parse_array_file(text)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        cats = {}
        out = []
        for idx, p in enumerate(perms, start=1):
            cat = cats.setdefault(p.order, catalog(p.order))
            labels = _labels_for(canonical_array(p).values, cat)
            out.append({"index": idx, "values": list(p.values), "costas": is_costas(p),
                        "labels": labels})
            if args.format != "machine":
                shown = ",".join(labels) if labels else "unlabeled"
                print(f"{idx}: {p} {shown}")
        if args.format == "machine":
            print(_machine(out))
        return 0
    try:
        cube = parse_cube_file(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    t = projections(cube)
    cat = catalog(cube.order)
    doc = {}
    for name, p in (("A", t.a), ("B", t.b), ("C", t.c)):
        labels = _labels_for(canonical_array(p).values, cat)
        doc[name] = {"values": list(p.values), "labels": labels}
        if args.format != "machine":
            shown = ",".join(labels) if labels else "unlabeled"
            print(f"projection {name}: {p} {shown}")
    if args.format == "machine":
        print(_machine(doc))
    return 0


# -- project ------------------------------------------------------------


def cmd_project(args) -> int:
    try:
        cube = parse_cube_file(_read(args.input))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    t = projections(cube)
    if args.format == "machine":
        print(_machine({"A": list(t.a.values), "B": list(t.b.values), "C": list(t.c.values)}))
    else:
        for name, p in (("A", t.a), ("B", t.b), ("C", t.c)):
            print(f"# projection {name}")
            print(" ".join(map(str, p.values)))
    return 0


# -- import -------------------------------------------------------------


def cmd_import(args) -> int:
    try:
        text = _read(args.input)
        lines = [
            (no, line.strip())
            for no, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith("#")
        ]
        perms = []
        for no, line in lines:
            try:
                perms.append((no, parse_array_file(line)[0]))
            except ValueError as exc:
                print(f"error: line {no}: {exc}", file=sys.stderr)
                return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not perms:
        print("error: no permutations found", file=sys.stderr)
        return 2
    orders = {p.order for _, p in perms}
    if len(orders) > 1:
        print(f"error: mixed orders {sorted(orders)} in one file", file=sys.stderr)
        return 1
    order = orders.pop()
    if args.expect_order is not None and order != args.expect_order:
        print(f"error: file has order {order}, expected {args.expect_order}", file=sys.stderr)
        return 1
    for no, p in perms:
        if not is_costas(p):
            print(f"error: line {no}: {p} is not a Costas array "
                  f"(repeated vector {costas_violation(p)})", file=sys.stderr)
            return 1

    values = {p.values for _, p in perms}
    closed = all(
        apply_planar(s, p).values in values for _, p in perms for s in PLANAR_SYMMETRIES
    )
    if not closed:
        if args.expand:
            for _, p in list(perms):
                for s in PLANAR_SYMMETRIES:
                    values.add(apply_planar(s, p).values)
            print(f"note: expanded to full square-symmetry orbits ({len(values)} arrays)")
        else:
            print("warning: file is not closed under the square symmetries; "
                  "it may hold class representatives only (rerun with --expand)")

    from .core import Permutation

    normalized = [Permutation(v) for v in sorted(values)]
    classes = len(array_classes(normalized))
    out_path = Path(args.output) if args.output else Path(args.input).with_suffix(
        Path(args.input).suffix + ".normalized"
    )
    out_path.write_text(emit_array_file(
        normalized, comments=[f"order {order}", f"arrays {len(normalized)}", f"classes {classes}"]
    ))
    print(f"order {order}: {len(normalized)} arrays, {classes} classes; normalized copy: {out_path}")
    return 0


# -- parser --------------------------------------------------------------


def _add_format(sub) -> None:
    sub.add_argument("--format", choices=("text", "machine"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="costas-cubes",
        description="Verify, construct, enumerate, and classify Costas arrays and Costas cubes.",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for any randomized helper (reproducibility)")
    subs = parser.add_subparsers(dest="command")

    s = subs.add_parser("verify", help="check the Costas property of arrays or a cube")
    s.add_argument("target", choices=("array", "cube"))
    s.add_argument("input")
    _add_format(s)
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("construct", help="run one finite-field construction")
    s.add_argument("family", choices=sorted(_NEEDS))
    s.add_argument("--field", required=True,
                   help='field spec "p^m:c0,...,cm" or prime shorthand, e.g. 2^4:1,0,0,1,1 or 13')
    s.add_argument("--phi", default=None, help='element as encoding or polynomial, e.g. 11 or "1+2x^2"')
    s.add_argument("--rho", default=None)
    s.add_argument("--psi", default=None)
    s.add_argument("--c", type=int, default=0, help="column shift for w1")
    _add_format(s)
    s.set_defaults(func=cmd_construct)

    s = subs.add_parser("enumerate", help="count cube and array classes of one order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--arrays-file", default=None,
                   help="complete Costas array database for this order")
    s.add_argument("--emit-representatives", action="store_true")
    s.add_argument("--threads", type=int, default=1)
    _add_format(s)
    s.set_defaults(func=cmd_enumerate)

    s = subs.add_parser("tables", help="order-by-order class count tables")
    s.add_argument("--table", type=int, choices=(1, 2), required=True)
    s.add_argument("--max-order", type=int, required=True)
    s.add_argument("--threads", type=int, default=1)
    _add_format(s)
    s.set_defaults(func=cmd_tables)

    s = subs.add_parser("sd-set", help="distinct Costas arrays projected by a cube's orbit")
    s.add_argument("input")
    _add_format(s)
    s.set_defaults(func=cmd_sd_set)

    s = subs.add_parser("classify", help="label arrays or cube projections by construction family")
    s.add_argument("target", choices=("array", "cube"))
    s.add_argument("input")
    _add_format(s)
    s.set_defaults(func=cmd_classify)

    s = subs.add_parser("project", help="emit the three projections of a cube")
    s.add_argument("input")
    _add_format(s)
    s.set_defaults(func=cmd_project)

    s = subs.add_parser("import", help="validate and normalize an array database file")
    s.add_argument("input")
    s.add_argument("--expect-order", type=int, default=None)
    s.add_argument("--expand", action="store_true",
                   help="expand class representatives to full orbits")
    s.add_argument("--output", default=None)
    s.set_defaults(func=cmd_import)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
