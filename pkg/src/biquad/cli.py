"""Command-line front end.

Every subcommand prints one JSON document.  Exit status is 0 on success, 1 for
malformed input, 2 when a mathematical precondition fails (the document is then
``{"error": code, "detail": ...}``) and 3 when a self-check finds a failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import serialize as ser
from .biquadratic import V4, BiquadPoly, analyze, aut_type
from .checks import run_moduli_checks
from .descent import elem_abelian_closure, noncyclic_iso
from .elem_abelian import elem_iso, radical_closure_analysis
from .errors import BiquadError, InvalidInput
from .field import PrimeField, parse_field
from .moduli import enumerate_elem_abelian_classes
from .normal_forms import normalize

EXIT_OK, EXIT_MALFORMED, EXIT_PRECONDITION, EXIT_CHECK_FAILED = 0, 1, 2, 3


def load_payload(arg):
    """A JSON document given inline, as ``@path`` or as an existing file path."""
    if arg.startswith("@"):
        path = arg[1:]
    elif not arg.lstrip().startswith(("{", "[")) and os.path.isfile(arg):
        path = arg
    else:
        path = None
    try:
        if path is not None:
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(arg)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}")


def _biquad(F, doc):
    return ser.biquad_from_json(F, doc)


def cmd_normalize(F, args):
    P = ser.quartic_from_json(F, load_payload(args.payload))
    return ser.normal_form_to_json(F, normalize(F, P))


def cmd_analyze(F, args):
    return analyze(F, _biquad(F, load_payload(args.payload)))


def _iso_pair(F, payloads):
    docs = [load_payload(p) for p in payloads]
    if len(docs) == 1:
        doc = docs[0]
        if not isinstance(doc, dict) or "P" not in doc or "Q" not in doc:
            raise InvalidInput("a single iso payload needs 'P' and 'Q'")
        docs = [doc["P"], doc["Q"]]
    if len(docs) != 2:
        raise InvalidInput("iso takes two polynomials")
    return _biquad(F, docs[0]), _biquad(F, docs[1])


def cmd_iso(F, args):
    P, Q = _iso_pair(F, args.payload)
    if not args.noncyclic and aut_type(F, P) == V4 and aut_type(F, Q) == V4:
        return ser.verdict_to_json(F, elem_iso(F, P, Q))
    return ser.verdict_to_json(F, noncyclic_iso(F, P, Q))


def cmd_closure(F, args):
    return ser.closure_to_json(F, elem_abelian_closure(F, _biquad(F, load_payload(args.payload))))


def cmd_radical(F, args):
    E = ser.elem_ext_from_json(F, load_payload(args.payload))
    return ser.radical_to_json(F, radical_closure_analysis(E))


def cmd_classify(F, args):
    gens = None
    if args.payload is not None:
        doc = load_payload(args.payload)
        gens = doc.get("gens") if isinstance(doc, dict) else doc
    if args.gens is not None:
        gens = [g for g in args.gens.split(",") if g.strip()]
    if gens is not None:
        gens = [F.parse(g) for g in gens]
    keys = enumerate_elem_abelian_classes(F, gens)
    return [ser.orbit_to_json(F, k, with_polynomial=True) for k in keys]


def cmd_moduli_check(F, args):
    tally = run_moduli_checks(F, n=args.checks, seed=args.seed)
    return {"ok": tally.ok, "checks": tally.summary()}, (EXIT_OK if tally.ok else EXIT_CHECK_FAILED)


def oracle_census(p_max):
    """Rows ``(p, u, w, criterion, oracle, library, agree)`` over all odd primes up to ``p_max``."""
    from .biquadratic import is_irreducible_biquadratic, quadratic_subfields
    from .oracle import factor_quartic, frobenius_report, subfields_oracle
    from sympy import primerange

    rows = []
    for p in primerange(3, p_max + 1):
        F = PrimeField(p)
        for u in range(p):
            for w in range(1, p):
                P = BiquadPoly(F(u), F(w))
                oracle_irr = factor_quartic(F, P).irreducible
                lib_irr = is_irreducible_biquadratic(F, P)
                rows.append((p, u, w, "irreducible", oracle_irr, lib_irr))
                if not oracle_irr:
                    continue
                rows.append((p, u, w, "galois_group", frobenius_report(p, P).label, aut_type(F, P).tag))
                rows.append(
                    (
                        p,
                        u,
                        w,
                        "subfields",
                        sorted(k.to_json() for k in subfields_oracle(F, P)),
                        sorted(k.to_json() for k in quadratic_subfields(F, P)),
                    )
                )
    return [(*r, r[4] == r[5]) for r in rows]


def _csv_cell(v):
    return ";".join(v) if isinstance(v, list) else v


def cmd_oracle_check(F, args):
    rows = oracle_census(args.p_max)
    if args.csv:
        out = sys.stdout if args.csv == "-" else open(args.csv, "w", newline="", encoding="utf-8")
        try:
            writer = csv.writer(out)
            writer.writerow(["p", "u", "w", "criterion", "oracle", "library", "agree"])
            for p, u, w, crit, o, lib, agree in rows:
                writer.writerow([p, u, w, crit, _csv_cell(o), _csv_cell(lib), agree])
        finally:
            if out is not sys.stdout:
                out.close()
    bad = [r for r in rows if not r[-1]]
    summary = {
        "p_max": args.p_max,
        "rows": len(rows),
        "cases": sum(1 for r in rows if r[3] == "irreducible"),
        "disagreements": len(bad),
        "ok": not bad,
    }
    if args.csv == "-":
        return None, EXIT_OK if not bad else EXIT_CHECK_FAILED
    return summary, EXIT_OK if not bad else EXIT_CHECK_FAILED


COMMANDS = {
    "normalize": cmd_normalize,
    "analyze": cmd_analyze,
    "iso": cmd_iso,
    "closure": cmd_closure,
    "radical": cmd_radical,
    "classify": cmd_classify,
    "moduli-check": cmd_moduli_check,
    "oracle-check": cmd_oracle_check,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help='"Q", "Fp:5" or a JSON field descriptor')
    parser = _Parser(prog="biquad", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (
        ("normalize", 'quartic {"u","v","w","z"}'),
        ("analyze", 'biquadratic {"u","w"}'),
        ("closure", 'biquadratic {"u","w"}'),
        ("radical", 'parameters {"a","b"}'),
    ):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("payload", help=help_)

    p = sub.add_parser("iso", parents=[common])
    p.add_argument("payload", nargs="+", help='two biquadratics, or one {"P":...,"Q":...}')
    p.add_argument("--noncyclic", action="store_true", help="always use the descent decider")

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("payload", nargs="?", help='{"gens": [...]}')
    p.add_argument("--gens", help="comma-separated square-class generators")

    p = sub.add_parser("moduli-check", parents=[common])
    p.add_argument("--checks", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("oracle-check", parents=[common])
    p.add_argument("--p-max", type=int, default=13)
    p.add_argument("--csv", help="write the census table here ('-' for standard output)")
    return parser


def _emit(doc, stream=None):
    (stream or sys.stdout).write(ser.dumps(doc) + "\n")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        F = parse_field(args.field)
        result = COMMANDS[args.command](F, args)
    except InvalidInput as exc:
        _emit({"error": exc.code, "detail": exc.detail or str(exc)})
        return EXIT_MALFORMED
    except BiquadError as exc:
        _emit({"error": exc.code, "detail": exc.detail or str(exc)})
        return EXIT_PRECONDITION
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if result is not None:
        _emit(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
