"""Command-line front end.

Numerical generators are comma-separated integers (``4,6,21``); affine
generators are semicolon-separated vectors of space-separated integers
(``2 0;0 3;2 1;1 2``).  ``--json`` switches to a machine-readable envelope
with the fixed keys command/input/result/truncated, one document per
invocation.  Exit codes: 0 success, 1 internal or arithmetic error, 2 bad
usage or input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import enumeration, families, gluing, presentations
from .errors import InputError, MonoidError
from .factorizations import enumerate_factorizations, r_classes
from .semigroups import (
    AffineSemigroup,
    NumericalSemigroup,
    affine_from_generators,
    as_affine,
    numerical_from_generators,
)


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {text!r}")


def _parse_numerical(text: str) -> NumericalSemigroup:
    gens = [_parse_int(tok, "generator") for tok in text.split(",") if tok.strip() != ""]
    return numerical_from_generators(gens)


def _parse_affine(text: str) -> AffineSemigroup:
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        rows.append(tuple(_parse_int(tok, "coordinate") for tok in chunk.split()))
    if not rows:
        raise InputError("no generators given")
    return affine_from_generators(len(rows[0]), rows)


def _looks_affine(text: str) -> bool:
    return ";" in text or " " in text.strip()


def _fmt_vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _fmt_elem(e) -> str:
    return str(e) if isinstance(e, int) else _fmt_vec(e)


def _pair_lines(pairs) -> list[str]:
    return [
        f"{_fmt_vec(p.left)} {_fmt_vec(p.right)} betti={_fmt_elem(p.element)} "
        f"indispensable={'yes' if p.indispensable else 'no'}"
        for p in pairs
    ]


def _pair_payload(pairs) -> list[dict]:
    return [
        {
            "left": list(p.left),
            "right": list(p.right),
            "element": p.element if isinstance(p.element, int) else list(p.element),
            "indispensable": p.indispensable,
        }
        for p in pairs
    ]


def _parse_pair_line(line: str):
    vecs = []
    for tok in line.replace(",", " ").split(")"):
        tok = tok.strip().lstrip("(").strip()
        if tok and not any(ch.isalpha() for ch in tok):
            vecs.append(tuple(int(x) for x in tok.split()))
        if len(vecs) == 2:
            break
    if len(vecs) != 2:
        raise InputError(f"cannot parse a pair from line {line!r}")
    return vecs[0], vecs[1]


def _print(out, lines):
    for line in lines:
        print(line, file=out)


def _cmd_betti(args):
    if _looks_affine(args.gens):
        sg = _parse_affine(args.gens)
        if args.bound is None:
            raise InputError("affine Betti computation requires --bound")
        elems = presentations.affine_betti_up_to(sg, args.bound)
        return (
            {"betti": [list(v) for v in elems], "bound": args.bound},
            [" ".join(_fmt_vec(v) for v in elems)],
            True,
        )
    sg = _parse_numerical(args.gens)
    elems = presentations.betti_elements(sg)
    return {"betti": elems}, [" ".join(map(str, elems))], False


def _cmd_betti_minimal(args):
    sg = _parse_numerical(args.gens)
    elems = presentations.betti_minimal_elements(sg)
    return {"betti_minimal": elems}, [" ".join(map(str, elems))], False


def _atoms_and_element(args):
    if _looks_affine(args.gens):
        sg = _parse_affine(args.gens)
        target = tuple(_parse_int(t, "coordinate") for t in args.element.split())
        return sg.generators, target
    sg = _parse_numerical(args.gens)
    return sg.minimal_generators, _parse_int(args.element, "element")


def _cmd_factorizations(args):
    atoms, target = _atoms_and_element(args)
    fs = enumerate_factorizations(atoms, target)
    payload = {"factorizations": [list(u) for u in fs.factorizations]}
    return payload, [" ".join(_fmt_vec(u) for u in fs.factorizations)], False


def _cmd_rclasses(args):
    atoms, target = _atoms_and_element(args)
    part = r_classes(enumerate_factorizations(atoms, target))
    payload = {"classes": [[list(u) for u in cls] for cls in part.classes]}
    lines = [" ".join(_fmt_vec(u) for u in cls) for cls in part.classes]
    return payload, lines, False


def _cmd_minpres(args):
    sg = _parse_numerical(args.gens)
    pres = presentations.minimal_presentation(sg, topology=args.topology)
    return {"pairs": _pair_payload(pres.pairs)}, _pair_lines(pres.pairs), False


def _cmd_indispensable(args):
    sg = _parse_numerical(args.gens)
    pres = presentations.minimal_presentation(sg)
    pairs = [p for p in pres.pairs if p.indispensable]
    return {"pairs": _pair_payload(pairs)}, _pair_lines(pairs), False


def _cmd_unique(args):
    sg = _parse_numerical(args.gens)
    res = presentations.is_uniquely_presented(sg)
    if res.answer:
        return {"unique": True, "witness": None}, ["yes"], False
    w = res.witness
    payload = {
        "unique": False,
        "witness": {
            "element": w.element,
            "factorizations": w.factorization_count,
            "r_classes": w.r_class_count,
        },
    }
    line = f"no (witness: {w.element} has {w.factorization_count} factorizations)"
    return payload, [line], False


def _cmd_verify(args):
    sg = _parse_numerical(args.gens)
    if args.pairs == "-":
        text = sys.stdin.read()
    else:
        with open(args.pairs, "r", encoding="utf-8") as fh:
            text = fh.read()
    pairs = [
        _parse_pair_line(line) for line in text.splitlines() if line.strip()
    ]
    ok = presentations.verify_presentation(sg, pairs, args.bound)
    return {"verified": ok}, ["yes" if ok else "no"], False


def _workers_from_env() -> int:
    raw = os.environ.get("MONOIDP_THREADS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise InputError(f"MONOIDP_THREADS must be a positive integer, got {raw!r}")
    if workers < 1:
        raise InputError(f"MONOIDP_THREADS must be a positive integer, got {raw!r}")
    return workers


def _cmd_enum(args):
    workers = _workers_from_env()
    sgs = enumeration.semigroups_with_frobenius(args.frobenius, workers=workers)
    payload: dict = {"frobenius": args.frobenius}
    numbers = []
    lines = []
    if args.count or not (args.unique or args.list):
        payload["count"] = len(sgs)
        numbers.append(len(sgs))
    if args.unique:
        hits = sum(presentations.is_uniquely_presented(s).answer for s in sgs)
        payload["unique"] = hits
        numbers.append(hits)
    if numbers:
        lines.append(" ".join(map(str, numbers)))
    if args.list:
        gens = [",".join(map(str, s.minimal_generators)) for s in sgs]
        payload["semigroups"] = gens
        lines.extend(gens)
    return payload, lines, False


def _dec_payload(dec):
    return {
        "a1": list(dec.a1_indices),
        "a2": list(dec.a2_indices),
        "d": dec.d if isinstance(dec.d, int) else list(dec.d),
        "u": list(dec.u),
        "v": list(dec.v),
    }


def _dec_line(dec) -> str:
    return (
        f"d={_fmt_elem(dec.d)} "
        f"A1={','.join(map(str, dec.a1_indices))} "
        f"A2={','.join(map(str, dec.a2_indices))} "
        f"u={_fmt_vec(dec.u)} v={_fmt_vec(dec.v)}"
    )


def _gluing_input(text: str) -> AffineSemigroup:
    if _looks_affine(text):
        return _parse_affine(text)
    return as_affine(_parse_numerical(text))


def _cmd_glue_check(args):
    sg = _gluing_input(args.gens)
    part = [_parse_int(t, "index") for t in args.part.split(",")]
    dec = gluing.check_gluing(sg, part)
    if dec is None:
        return {"gluing": None}, ["no gluing"], False
    return {"gluing": _dec_payload(dec)}, [_dec_line(dec)], False


def _cmd_glue_find(args):
    sg = _gluing_input(args.gens)
    decs = gluing.find_gluings(sg)
    payload = {"gluings": [_dec_payload(d) for d in decs]}
    lines = [_dec_line(d) for d in decs] if decs else ["no gluing"]
    return payload, lines, False


def _cmd_glue_num(args):
    sg1 = _parse_numerical(args.gens)
    glued, dec = gluing.glue_numerical(sg1, args.lam, args.mu)
    payload = {
        "generators": list(glued.minimal_generators),
        "gluing": _dec_payload(dec),
    }
    lines = [
        "gens " + ",".join(map(str, glued.minimal_generators)),
        _dec_line(dec),
    ]
    return payload, lines, False


def _cmd_invariants(args):
    sg = _parse_numerical(args.gens)
    inv = sg.invariants()
    payload = {
        "multiplicity": inv.multiplicity,
        "embedding_dimension": inv.embedding_dimension,
        "frobenius": inv.frobenius,
        "genus": inv.genus,
    }
    line = f"m={inv.multiplicity} e={inv.embedding_dimension} f={inv.frobenius} g={inv.genus}"
    return payload, [line], False


def _cmd_family(args):
    if args.kind == "interval":
        p = families.IntervalParams(a=_parse_int(args.params[0], "a"),
                                    x=_parse_int(args.params[1], "x"))
        sg = families.interval_semigroup(p)
        up = families.interval_uniquely_presented(p)
        payload = {
            "generators": list(sg.minimal_generators),
            "uniquely_presented": up,
        }
        lines = [
            "gens " + ",".join(map(str, sg.minimal_generators)),
            f"uniquely_presented {'yes' if up else 'no'}",
        ]
        if p.x in (2, 3):
            cf = families.interval_betti_closed_form(p)
            payload["betti"] = list(cf.elements)
            payload["betti_lower_bound_only"] = cf.lower_bound_only
            suffix = " (partial)" if cf.lower_bound_only else ""
            lines.append("betti " + " ".join(map(str, cf.elements)) + suffix)
        return payload, lines, False
    if args.kind == "ed3":
        m1, m2, a, b, c = (_parse_int(t, "parameter") for t in args.params)
        p = families.ED3SymmetricParams(m1=m1, m2=m2, a=a, b=b, c=c)
        sg = families.ed3_symmetric(p)
        up = families.ed3_symmetric_uniquely_presented(p)
        betti = families.ed3_symmetric_betti(p)
        payload = {
            "generators": list(sg.minimal_generators),
            "uniquely_presented": up,
            "betti": betti,
        }
        lines = [
            "gens " + ",".join(map(str, sg.minimal_generators)),
            f"uniquely_presented {'yes' if up else 'no'}",
            "betti " + " ".join(map(str, betti)),
        ]
        return payload, lines, False
    if args.kind == "med":
        sg = _parse_numerical(args.params[0])
        up = families.med_uniquely_presented(sg)
        betti = families.med_betti_closed_form(sg)
        payload = {
            "generators": list(sg.minimal_generators),
            "uniquely_presented": up,
            "betti": betti,
        }
        lines = [
            f"uniquely_presented {'yes' if up else 'no'}",
            "betti " + " ".join(map(str, betti)),
        ]
        return payload, lines, False
    if args.kind == "telescopic":
        step = families.telescopic_sequence(_parse_int(args.params[0], "i"))
        payload = {
            "generators": list(step.semigroup.minimal_generators),
            "betti": list(step.predicted_betti),
            "presentation_size": len(step.presentation),
        }
        lines = [
            "gens " + ",".join(map(str, step.semigroup.minimal_generators)),
            "betti " + " ".join(map(str, step.predicted_betti)),
            f"presentation_size {len(step.presentation)}",
        ]
        return payload, lines, False
    raise InputError(f"unknown family {args.kind!r}")


_FAMILY_ARITY = {"interval": 2, "ed3": 5, "med": 1, "telescopic": 1}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="monoidp",
        description="Betti elements, minimal presentations and gluings of "
        "numerical and affine semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="Betti elements")
    p.add_argument("gens")
    p.add_argument("--bound", type=int, default=None,
                   help="degree bound (required for affine input)")
    p.set_defaults(handler=_cmd_betti)

    p = sub.add_parser("betti-minimal", parents=[common], help="Betti-minimal elements")
    p.add_argument("gens")
    p.set_defaults(handler=_cmd_betti_minimal)

    p = sub.add_parser("factorizations", parents=[common], help="the fiber of one element")
    p.add_argument("gens")
    p.add_argument("element")
    p.set_defaults(handler=_cmd_factorizations)

    p = sub.add_parser("rclasses", parents=[common], help="R-class partition of a fiber")
    p.add_argument("gens")
    p.add_argument("element")
    p.set_defaults(handler=_cmd_rclasses)

    p = sub.add_parser("minpres", parents=[common], help="a minimal presentation")
    p.add_argument("gens")
    p.add_argument("--topology", choices=("star", "path"), default="star")
    p.set_defaults(handler=_cmd_minpres)

    p = sub.add_parser("indispensable", parents=[common],
                       help="pairs present in every minimal presentation")
    p.add_argument("gens")
    p.set_defaults(handler=_cmd_indispensable)

    p = sub.add_parser("unique", parents=[common], help="unique presentation test")
    p.add_argument("gens")
    p.set_defaults(handler=_cmd_unique)

    p = sub.add_parser("verify", parents=[common],
                       help="check that pairs generate the kernel congruence on a window")
    p.add_argument("gens")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--pairs", default="-", help="file of pair lines, or - for stdin")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("enum", parents=[common],
                       help="numerical semigroups with a given Frobenius number")
    p.add_argument("--frobenius", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--unique", action="store_true")
    p.add_argument("--list", action="store_true")
    p.set_defaults(handler=_cmd_enum)

    p = sub.add_parser("glue-check", parents=[common], help="test one generator split")
    p.add_argument("--gens", required=True)
    p.add_argument("--part", required=True, help="comma-separated A1 indices")
    p.set_defaults(handler=_cmd_glue_check)

    p = sub.add_parser("glue-find", parents=[common], help="search all generator splits")
    p.add_argument("--gens", required=True)
    p.set_defaults(handler=_cmd_glue_find)

    p = sub.add_parser("glue-num", parents=[common],
                       help="glue lambda*S1 with <mu> at lambda*mu")
    p.add_argument("gens")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.set_defaults(handler=_cmd_glue_num)

    p = sub.add_parser("family", parents=[common],
                       help="interval <a> <x> | ed3 <m1> <m2> <a> <b> <c> | "
                            "med <gens> | telescopic <i>")
    p.add_argument("kind", choices=sorted(_FAMILY_ARITY))
    p.add_argument("params", nargs="*")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("invariants", parents=[common],
                       help="multiplicity, embedding dimension, Frobenius, genus")
    p.add_argument("gens")
    p.set_defaults(handler=_cmd_invariants)

    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "family" and len(args.params) != _FAMILY_ARITY[args.kind]:
            raise InputError(
                f"family {args.kind} takes {_FAMILY_ARITY[args.kind]} parameter(s)"
            )
        payload, lines, truncated = args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except MonoidError as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.json:
        envelope = {
            "command": args.command,
            "input": {
                k: v
                for k, v in sorted(vars(args).items())
                if k not in ("handler", "json", "command") and v is not None
            },
            "result": payload,
            "truncated": truncated,
        }
        print(json.dumps(envelope, sort_keys=True), file=out)
    else:
        _print(out, lines)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
