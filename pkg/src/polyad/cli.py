"""polyad: command-line front end.

Groups travel between subcommands as PGF documents on stdin/stdout, so
pipelines like `polyad example T3 | polyad subgroups -` work.  All reports
are deterministic plain text; --json switches to machine-readable records.
Exit codes: 0 success, 1 verification failure (first counterexample
printed), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms as ax
from . import core, pgf, structure, subgroups
from .constructions import named_example
from .errors import BudgetExceeded, PolyadError
from .permutations import permutation_group
from .post_cover import correspondent_group
from .retract import retract_at, verify_hossu
from .bingroup import BinaryGroupTable


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_group(path):
    return pgf.load(_read_text(path))


def _parse_set(text):
    return frozenset(int(t) for t in text.replace(",", " ").split())


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True, default=_json_default))
    else:
        for line in text_lines:
            print(line)


def _json_default(obj):
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, set):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"not serializable: {type(obj)}")


def _set_label(g, S):
    return g.label_set(S)


# -- subcommand bodies -------------------------------------------------------


def cmd_example(args):
    g = named_example(args.name)
    sys.stdout.write(pgf.save(g))
    return 0


def cmd_verify(args):
    from .errors import NotAssociative, NotGroup, PGFError

    text = _read_text(args.group)
    try:
        g = pgf.load(text)
    except PGFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotAssociative as exc:
        print(f"FAIL: not associative; first counterexample {exc.witness}")
        return 1
    except NotGroup as exc:
        print(f"FAIL: not a group; first counterexample {exc.witness}")
        return 1
    except AssertionError as exc:
        print(f"FAIL: {exc}")
        return 1
    except PolyadError as exc:
        print(f"FAIL: {exc}")
        return 1
    _emit(args, {"ok": True, "size": g.k, "arity": g.n},
          [f"OK: {g.k} elements, arity {g.n}, backing {g.g.backing}"])
    return 0


def cmd_info(args):
    g = _read_group(args.group)
    idem = structure.idempotents(g)
    payload = {
        "size": g.k,
        "arity": g.n,
        "backing": g.g.backing,
        "labels": [g.label(a) for a in g.elements],
        "idempotents": sorted(idem),
    }
    _emit(args, payload, [
        f"size {g.k}",
        f"arity {g.n}",
        f"backing {g.g.backing}",
        "labels " + " ".join(payload["labels"]),
        f"idempotents {_set_label(g, idem)}",
    ])
    return 0


def cmd_skew(args):
    g = _read_group(args.group)
    rows = [f"skew({g.label(a)}) = {g.label(g.skew(a))}" for a in g.elements]
    _emit(args, {"skew": [g.skew(a) for a in g.elements]}, rows)
    return 0


def cmd_order(args):
    g = _read_group(args.group)
    if args.element is not None:
        m = structure.nadic_order(g, args.element)
        _emit(args, {"element": args.element, "order": m},
              [f"order({g.label(args.element)}) = {m}"])
        return 0
    prof = structure.order_profile(g)
    _emit(args, {"orders": [prof[a] for a in g.elements]},
          [f"order({g.label(a)}) = {prof[a]}" for a in g.elements])
    return 0


def cmd_power(args):
    g = _read_group(args.group)
    v = structure.nadic_power(g, args.element, args.s)
    _emit(args, {"power": v},
          [f"{g.label(args.element)}^[{args.s}] = {g.label(v)}"])
    return 0


def cmd_units(args):
    g = _read_group(args.group)
    E = structure.units(g)
    text = f"E(A) = {_set_label(g, E)}" + (" (empty)" if not E else "")
    _emit(args, {"units": sorted(E)}, [text])
    return 0


def cmd_idempotents(args):
    g = _read_group(args.group)
    I = structure.idempotents(g)
    text = f"I(A) = {_set_label(g, I)}" + (" (empty)" if not I else "")
    _emit(args, {"idempotents": sorted(I)}, [text])
    return 0


def cmd_center(args):
    g = _read_group(args.group)
    B = _parse_set(args.set) if args.set else None
    S = structure.center_family(g, args.kind, m=args.m, B=B)
    _emit(args, {"kind": args.kind, "members": sorted(S)},
          [f"{args.kind}{'' if args.m is None else f'(m={args.m})'} = "
           f"{_set_label(g, S)}"])
    return 0


def cmd_normalizer(args):
    g = _read_group(args.group)
    B = _parse_set(args.set)
    m = args.m if args.m is not None else g.n
    N = structure.normalizer_family(g, B, m)
    _emit(args, {"normalizer": sorted(N), "m": m},
          [f"N(B, m={m}) = {_set_label(g, N)}"])
    return 0


def cmd_normality(args):
    g = _read_group(args.group)
    B = _parse_set(args.set)
    if args.kind == "audit":
        flags = subgroups.normality_implications_audit(g, B)
        simple = {key: flags[key] for key in
                  ("invariant", "semi_invariant", "normal", "weakly_normal")}
        m_part = {str(m): v for m, v in flags["m_semi_invariant"].items()}
        _emit(args, {"flags": simple, "m_semi_invariant": m_part},
              [f"{key} = {val}" for key, val in sorted(simple.items())] +
              [f"m_semi_invariant(m={m}) = {v}"
               for m, v in sorted(flags["m_semi_invariant"].items())])
        return 0
    val = subgroups.check_normality(g, B, args.kind, m=args.m)
    _emit(args, {args.kind: val}, [f"{args.kind} = {val}"])
    return 0


def cmd_subgroups(args):
    g = _read_group(args.group)
    subs = subgroups.all_subgroups(g)
    lines = [f"{len(subs)} subgroups"]
    by_order = {}
    for S in subs:
        by_order.setdefault(len(S), []).append(S)
    for size in sorted(by_order):
        lines.append(f"order {size}: {len(by_order[size])}")
    for S in subs:
        lines.append(_set_label(g, S))
    _emit(args, {"subgroups": [sorted(S) for S in subs]}, lines)
    return 0


def cmd_cosets(args):
    g = _read_group(args.group)
    B = _parse_set(args.set)
    dec = subgroups.coset_decomposition(g, B, args.side)
    lines = [f"{len(dec.cosets)} {args.side} cosets"]
    lines += [_set_label(g, c) for c in dec.cosets]
    _emit(args, {"cosets": [sorted(c) for c in dec.cosets],
                 "reps": list(dec.reps)}, lines)
    return 0


def cmd_factor(args):
    g = _read_group(args.group)
    B = _parse_set(args.set)
    q = subgroups.factor_group(g, B)
    sys.stdout.write(pgf.save(q))
    return 0


def cmd_conjugate(args):
    g = _read_group(args.group)
    B = _parse_set(args.left)
    C = _parse_set(args.right)
    w = subgroups.is_conjugate(g, B, C)
    s = subgroups.is_semiconjugate(g, B, C)
    lines = [
        f"conjugate: {'yes via ' + g.label(w) if w is not None else 'no'}",
        f"semiconjugate: {'yes via ' + g.label(s) if s is not None else 'no'}",
    ]
    _emit(args, {"conjugate": w, "semiconjugate": s}, lines)
    return 0


def cmd_post_cover(args):
    g = _read_group(args.group)
    cover = g.cover()
    bt = cover.binary
    lines = ["pgf 1", "kind table", "arity 2", f"size {bt.k}"]
    lines.append("labels " + " ".join(pgf._quote(s) for s in bt.labels))
    lines.append("table")
    flat = [v for row in bt.mul for v in row]
    lines += pgf._wrap_numbers(flat)
    lines.append("end")
    lines.append(f"# |A*| = {bt.k} = {g.k} * ({g.n}-1)")
    for i in range(1, g.n):
        lvl = sorted(cover.level(i))
        lines.append(f"# grading A({i}): " + " ".join(str(e) for e in lvl))
    lines.append("# A0 = A(%d)" % (g.n - 1))
    print("\n".join(lines))
    return 0


def cmd_retract(args):
    g = _read_group(args.group)
    r = retract_at(g, args.anchor)
    bt = r.binary
    lines = ["pgf 1", "kind gluskin", f"arity {g.n}", f"size {g.k}"]
    if g.labels:
        lines.append("labels " + " ".join(pgf._quote(s) for s in g.labels))
    lines.append(f"basesize {bt.k}")
    lines.append("baselabels " + " ".join(pgf._quote(s) for s in bt.labels))
    lines.append("base")
    for row in bt.mul:
        lines.append(" ".join(str(v) for v in row))
    lines.append("beta " + " ".join(str(v) for v in r.beta))
    lines.append(f"d {r.d}")
    lines.append("end")
    lines.append(f"# retract at {g.label(args.anchor)}; reconstruction "
                 "reproduces the source operation")
    print("\n".join(lines))
    return 0


def cmd_classify(args):
    g = _read_group(args.group)
    kind, gen, gens = structure.classify_cyclic(g)
    flags = structure.abelianness(g)
    solv = structure.classify_solvability(g)
    lines = [f"cyclic: {kind}" + (f" generator {g.label(gen)}" if gen is not None else "")]
    for key in ("abelian", "semiabelian", "weakly_semiabelian", "commutative"):
        lines.append(f"{key}: {flags[key]}")
    lines.append(f"semisolvable: {solv['semisolvable']}")
    lines.append(f"seminilpotent: {solv['seminilpotent']}")
    payload = {
        "cyclic": kind,
        "generator": gen,
        "abelian": flags["abelian"],
        "semiabelian": flags["semiabelian"],
        "weakly_semiabelian": flags["weakly_semiabelian"],
        "semisolvable": solv["semisolvable"],
        "seminilpotent": solv["seminilpotent"],
    }
    _emit(args, payload, lines)
    return 0


def cmd_decompose(args):
    g = _read_group(args.group)
    res = subgroups.sylow_hall_semiabelian(
        g, anchor=args.anchor, check_unique=not args.no_unique_check)
    lines = []
    for anchor in sorted(res):
        parts = " x ".join(_set_label(g, P) for P in res[anchor])
        lines.append(f"anchor {g.label(anchor)}: {parts}")
    _emit(args, {str(a): [sorted(P) for P in parts]
                 for a, parts in res.items()}, lines)
    return 0


def cmd_axioms(args):
    g = _read_group(args.group)
    if args.audit:
        verdicts = ax.all_verdicts(g)
        expect = core.is_group(
            g.g, assume_associative=g.g.associative_by_construction)
        bad = {k: v for k, v in verdicts.items() if v != expect}
        lines = [f"is_group = {expect}"]
        lines += [f"{name} = {v}" for name, v in sorted(verdicts.items())]
        if bad:
            lines.append(f"DISAGREEMENT: {sorted(bad)}")
        _emit(args, {"is_group": expect, "verdicts": verdicts,
                     "disagreements": sorted(bad)}, lines)
        return 1 if bad else 0
    params = {}
    if args.i is not None:
        params["i"] = args.i
    if args.j is not None:
        params["j"] = args.j
    if args.k is not None:
        params["k"] = args.k
    if args.m is not None:
        params["m"] = args.m
    val = ax.check_axiom(g, args.system, **params)
    _emit(args, {"system": args.system, "verdict": val},
          [f"{args.system} = {val}"])
    return 0


def cmd_perm_group(args):
    width = args.n - 1
    sigma = pgf.cycles_to_sigma(args.sigma, width)
    g = permutation_group(args.q, args.n, sigma, arity=args.arity)
    sys.stdout.write(pgf.save(g))
    return 0


def cmd_product(args):
    from .constructions import direct_product

    factors = [pgf.load(_read_text(p)) for p in args.groups]
    sys.stdout.write(pgf.save(direct_product(factors)))
    return 0


def cmd_solve(args):
    g = _read_group(args.group)
    pattern = []
    for tok in args.pattern.replace(",", " ").split():
        pattern.append(None if tok in ("x", "?") else int(tok))
    x = g.solve(tuple(pattern), args.rhs)
    _emit(args, {"solution": x}, [f"x = {g.label(x)}"])
    return 0


# -- wiring -------------------------------------------------------------------


def _add_group_arg(p):
    p.add_argument("group", nargs="?", default="-",
                   help="PGF file, or - for stdin (default)")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="polyad",
        description="Finite n-ary (polyadic) group workbench")
    ap.add_argument("--eval-budget", type=int, default=core.EVAL_BUDGET,
                    help="cap for exhaustive scans")
    ap.add_argument("--table-cap", type=int, default=core.TABLE_CAP,
                    help="cap for materialized operation tables")
    ap.add_argument("--threads", type=int, default=0,
                    help="internal parallelism bound (0 = all cores); "
                         "outputs are deterministic regardless")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("example", help="emit a named catalog group as PGF")
    p.add_argument("name")
    p.set_defaults(func=cmd_example)

    for name, func, extra in [
        ("verify", cmd_verify, None),
        ("info", cmd_info, None),
        ("skew", cmd_skew, None),
        ("units", cmd_units, None),
        ("idempotents", cmd_idempotents, None),
        ("subgroups", cmd_subgroups, None),
        ("post-cover", cmd_post_cover, None),
        ("classify", cmd_classify, None),
    ]:
        p = sub.add_parser(name)
        _add_group_arg(p)
        p.set_defaults(func=func)

    p = sub.add_parser("order")
    _add_group_arg(p)
    p.add_argument("--element", "-a", type=int, default=None)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("power")
    _add_group_arg(p)
    p.add_argument("--element", "-a", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("center")
    _add_group_arg(p)
    p.add_argument("--kind", default="Z",
                   choices=["Z", "HZ", "Z_m", "C", "HC", "C_m",
                            "DZ", "HDZ", "DC_m", "HDC",
                            "TZ", "HTZ", "TC_m", "HTC"])
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--set", default=None, help="centralize this subset")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("normalizer")
    _add_group_arg(p)
    p.add_argument("--set", required=True)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_normalizer)

    p = sub.add_parser("normality")
    _add_group_arg(p)
    p.add_argument("--set", required=True)
    p.add_argument("--kind", default="audit",
                   choices=["audit", "invariant", "semi_invariant",
                            "m_semi_invariant", "normal", "weakly_normal"])
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("cosets")
    _add_group_arg(p)
    p.add_argument("--set", required=True)
    p.add_argument("--side", default="left", choices=["left", "right"])
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("factor")
    _add_group_arg(p)
    p.add_argument("--set", required=True)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("conjugate")
    _add_group_arg(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("retract")
    _add_group_arg(p)
    p.add_argument("--anchor", "-a", type=int, default=0)
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("decompose")
    _add_group_arg(p)
    p.add_argument("--anchor", "-a", type=int, default=None)
    p.add_argument("--no-unique-check", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("axioms")
    _add_group_arg(p)
    p.add_argument("--system", default=None)
    p.add_argument("--audit", action="store_true")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("perm-group")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--sigma", required=True, help='cycles, e.g. "(1 2)"')
    p.add_argument("--arity", type=int, default=None)
    p.set_defaults(func=cmd_perm_group)

    p = sub.add_parser("product")
    p.add_argument("groups", nargs="+", help="PGF files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("solve")
    _add_group_arg(p)
    p.add_argument("--pattern", required=True,
                   help='word with one hole, e.g. "x,1,2"')
    p.add_argument("--rhs", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    core_budget = args.eval_budget
    if core_budget != core.EVAL_BUDGET:
        core.EVAL_BUDGET = core_budget
    try:
        return args.func(args)
    except (PolyadError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"FAIL: {exc}")
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
