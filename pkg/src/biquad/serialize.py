"""JSON encoding of every result type, with decoders for round trips.

Field elements always travel as strings (``"num/den"``, a residue) or as
``{"x": ..., "y": ...}`` objects, never as JSON numbers.
"""

from __future__ import annotations

import json

from .biquadratic import C2, C4, V4, AutKind, BiquadPoly, SubfieldSet
from .descent import Closure, DescentVerdict, DescentWitness, ElemKey, NonGaloisKey, NoneCyclic, Trivial
from .elem_abelian import ElemAbelianExt, IsoVerdict, NoClosure, ThreeClosures, TrivialClosure
from .errors import InvalidInput
from .field import Field, QuadExt, parse_field
from .moduli import OrbitKey, PairClass, orbit
from .normal_forms import (
    BiquadForm,
    QuarticPoly,
    ReducibleRootQuarterU,
    ReducibleRootZero,
    RForm,
    TForm,
)
from .oracle import FactorReport

_AUT = {"V4": V4, "C4": C4, "C2": C2}


def dumps(doc) -> str:
    """Canonical, byte-stable JSON text."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _get(doc, key):
    try:
        return doc[key]
    except (KeyError, TypeError):
        raise InvalidInput(f"missing field {key!r}")


def biquad_to_json(F: Field, P: BiquadPoly):
    return {"u": F.to_json(P.u), "w": F.to_json(P.w)}


def biquad_from_json(F: Field, doc) -> BiquadPoly:
    if isinstance(doc, dict) and "coeffs" in doc:
        c = [F.parse(x) for x in doc["coeffs"]]
        if len(c) != 5 or c[1] != 0 or c[3] != 0 or c[4] != 1:
            raise InvalidInput("coefficients do not describe a monic X^4 + uX^2 + w")
        return BiquadPoly(c[2], c[0])
    return BiquadPoly(F.parse(_get(doc, "u")), F.parse(_get(doc, "w")))


def quartic_to_json(F: Field, P: QuarticPoly):
    return {k: F.to_json(getattr(P, k)) for k in ("u", "v", "w", "z")}


def quartic_from_json(F: Field, doc) -> QuarticPoly:
    if not isinstance(doc, dict):
        raise InvalidInput("quartic payload must be an object")
    return QuarticPoly(*(F.parse(doc.get(k, "0")) for k in ("u", "v", "w", "z")))


def normal_form_to_json(F: Field, nf):
    doc = {"form": nf.kind}
    if isinstance(nf, BiquadForm):
        doc.update(a=F.to_json(nf.a), b=F.to_json(nf.b), shift=F.to_json(nf.shift))
    elif isinstance(nf, RForm):
        t = nf.tform
        doc.update(
            a=F.to_json(nf.a),
            b=F.to_json(nf.b),
            scale=F.to_json(nf.scale),
            shift=F.to_json(nf.shift),
            tform={
                "form": t.kind,
                "c": F.to_json(t.c),
                "d": F.to_json(t.d),
                "P0": F.to_json(t.P0),
                "P1": F.to_json(t.P1),
                "u": F.to_json(t.u),
                "substitution": t.substitution(F),
                "coeffs": [F.to_json(c) for c in t.coeffs(F)],
            },
        )
    if hasattr(nf, "substitution"):
        doc["substitution"] = nf.substitution(F)
        doc["coeffs"] = [F.to_json(c) for c in nf.coeffs(F)]
    return doc


def normal_form_from_json(F: Field, doc):
    kind = _get(doc, "form")
    if kind == "ReducibleRootZero":
        return ReducibleRootZero()
    if kind == "ReducibleRootQuarterU":
        return ReducibleRootQuarterU()

    def p(key, d=doc):
        return F.parse(_get(d, key))

    if kind == "BiquadForm":
        return BiquadForm(p("a"), p("b"), p("shift"))
    if kind == "RForm":
        t = _get(doc, "tform")
        tform = TForm(p("c", t), p("d", t), p("P0", t), p("P1", t), p("u", t))
        return RForm(p("a"), p("b"), p("scale"), p("shift"), tform)
    raise InvalidInput(f"unknown normal form {kind!r}")


def aut_to_json(kind: AutKind):
    return kind.tag


def aut_from_json(tag) -> AutKind:
    try:
        return _AUT[tag]
    except KeyError:
        raise InvalidInput(f"unknown automorphism type {tag!r}")


def subfields_to_json(S: SubfieldSet):
    return [k.to_json() for k in S]


def subfields_from_json(F: Field, doc) -> SubfieldSet:
    return SubfieldSet(frozenset(F.square_class(F.parse(x)) for x in doc))


def analysis_from_json(F: Field, doc):
    """Decode ``analyze`` output into (irreducible, AutKind | None, galois | None, SubfieldSet | None)."""
    irreducible = bool(_get(doc, "irreducible"))
    if not irreducible:
        return irreducible, None, None, None
    return (
        irreducible,
        aut_from_json(_get(doc, "aut")),
        bool(_get(doc, "galois")),
        subfields_from_json(F, _get(doc, "subfields")),
    )


def witness_to_json(F: Field, w: DescentWitness):
    return {
        "c": F.to_json(w.c),
        "a": F.to_json(w.a),
        "r": w.r,
        "s": w.s,
        "omega": F.to_json(w.omega_cap),
        "branch": w.branch,
    }


def witness_from_json(F: Field, doc) -> DescentWitness:
    return DescentWitness(
        F.parse(_get(doc, "c")),
        F.parse(_get(doc, "a")),
        int(_get(doc, "r")),
        int(_get(doc, "s")),
        F.parse(_get(doc, "omega")),
        _get(doc, "branch"),
    )


def verdict_to_json(F: Field, v):
    doc = {"isomorphic": v.isomorphic}
    if v.matched_condition is not None:
        doc["matched_condition"] = v.matched_condition
    if isinstance(v, DescentVerdict):
        if v.witness is not None:
            doc["witness"] = witness_to_json(F, v.witness)
        if v.reason is not None:
            doc["reason"] = v.reason
    return doc


def verdict_from_json(F: Field, doc, descent=None):
    """Decode an ``iso`` verdict; ``descent`` forces the result type when the document is ambiguous."""
    iso = bool(_get(doc, "isomorphic"))
    cond = doc.get("matched_condition")
    if descent is None:
        descent = "witness" in doc or "reason" in doc
    if descent:
        wit = witness_from_json(F, doc["witness"]) if "witness" in doc else None
        return DescentVerdict(iso, wit, doc.get("reason"), cond)
    return IsoVerdict(iso, cond)


def closure_to_json(F: Field, rep):
    doc = {"kind": rep.kind}
    if isinstance(rep, Closure):
        doc["w_class"] = rep.w_class.to_json()
        doc["closure_field"] = rep.closure_field.descriptor()
    return doc


def closure_from_json(F: Field, doc):
    kind = _get(doc, "kind")
    if kind == "Trivial":
        return Trivial()
    if kind == "NoneCyclic":
        return NoneCyclic()
    if kind == "Closure":
        E = parse_field(_get(doc, "closure_field"))
        if not isinstance(E, QuadExt) or E.base != F:
            raise InvalidInput("closure field must be a quadratic extension of the base")
        return Closure(F.square_class(F.parse(_get(doc, "w_class"))), E)
    raise InvalidInput(f"unknown closure report {kind!r}")


def radical_to_json(F: Field, rep):
    doc = {"kind": rep.kind}
    if isinstance(rep, TrivialClosure):
        doc["radical_min_poly"] = biquad_to_json(F, rep.radical_min_poly)
        doc["generator"] = rep.generator_description
        doc["gamma_square"] = F.to_json(rep.gamma_square)
    elif isinstance(rep, ThreeClosures):
        doc["closure_classes"] = [k.to_json() for k in rep.closure_classes]
    return doc


def radical_from_json(F: Field, doc):
    kind = _get(doc, "kind")
    if kind == "NoClosure":
        return NoClosure()
    if kind == "TrivialClosure":
        return TrivialClosure(
            biquad_from_json(F, _get(doc, "radical_min_poly")),
            _get(doc, "generator"),
            F.parse(_get(doc, "gamma_square")),
        )
    if kind == "ThreeClosures":
        return ThreeClosures(tuple(F.square_class(F.parse(x)) for x in _get(doc, "closure_classes")))
    raise InvalidInput(f"unknown radical report {kind!r}")


def elem_ext_to_json(F: Field, E: ElemAbelianExt):
    return {"a": F.to_json(E.a), "b": F.to_json(E.b)}


def elem_ext_from_json(F: Field, doc) -> ElemAbelianExt:
    return ElemAbelianExt(F, F.parse(_get(doc, "a")), F.parse(_get(doc, "b")))


def orbit_to_json(F: Field, key: OrbitKey, with_polynomial=False):
    doc = key.to_json()
    if with_polynomial:
        from .elem_abelian import compose_elem_abelian

        a, b = key.canonical_rep.reps()
        doc["polynomial"] = biquad_to_json(F, compose_elem_abelian(F, a, b))
    return doc


def orbit_from_json(F: Field, doc) -> OrbitKey:
    a, b = _get(doc, "canonical_rep")
    key = orbit(F, PairClass.of(F, F.parse(a), F.parse(b)))
    listed = frozenset(PairClass.of(F, F.parse(x), F.parse(y)) for x, y in doc.get("orbit", []))
    if listed and listed != key.members:
        raise InvalidInput("orbit members do not match the canonical representative")
    return key


def key_to_json(F: Field, key):
    return key.to_json()


def key_from_json(F: Field, doc):
    kind = _get(doc, "kind")
    if kind == "ElemAbelian":
        return ElemKey(orbit_from_json(F, doc))
    if kind == "NonGalois":
        s = F.square_class(F.parse(_get(doc, "s")))
        E = QuadExt(F, s.rep)
        return NonGaloisKey(s, E.parse(_get(doc, "rep")), E)
    raise InvalidInput(f"unknown class key {kind!r}")


def factor_report_to_json(F: Field, rep: FactorReport):
    return {
        "pattern": rep.pattern,
        "factors": [{"coeffs": [F.to_json(c) for c in f], "multiplicity": m} for f, m in rep.factors],
    }


def factor_report_from_json(F: Field, doc) -> FactorReport:
    factors = tuple(
        ([F.parse(c) for c in _get(f, "coeffs")], int(_get(f, "multiplicity"))) for f in _get(doc, "factors")
    )
    return FactorReport(factors, _get(doc, "pattern"))
