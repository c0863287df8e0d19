"""Form-file serialization: one strict JSON document per presentation.

Schema (all four top-level keys required, no extras):

    {
      "num_vars": 3,
      "degree": 7,
      "prime": 2147483647,
      "generators": [
        {"terms": [{"exp": [7, 0, 0], "coeff": 1}, ...]},
        ...
      ]
    }

Exponent vectors must have length num_vars, non-negative entries summing to
the declared degree; coefficients are canonical residues in [1, prime) (zero
terms are never stored); duplicate exponent vectors within a generator are
rejected. Terms are emitted in monomial rank order, so dumps are byte-for-byte
reproducible.
"""

from __future__ import annotations

import json
from typing import IO

from .errors import InvalidParameter, ParseError
from .field import PrimeField
from .forms import Form
from .inverse_system import LevelPresentation


def _expect_keys(obj: dict, keys: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    got = set(obj)
    if got != keys:
        missing = sorted(keys - got)
        extra = sorted(got - keys)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unknown {extra}")
        raise ParseError(f"{where}: {', '.join(detail)}")


def _expect_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def parse_presentation(text: str, fp: PrimeField | None = None) -> LevelPresentation:
    """Parse a form document; raises ParseError with location details.

    If fp is given, the document's prime must match it; otherwise the
    document's own prime defines the field.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    _expect_keys(doc, {"num_vars", "degree", "prime", "generators"}, "document")
    num_vars = _expect_int(doc["num_vars"], "num_vars")
    degree = _expect_int(doc["degree"], "degree")
    prime = _expect_int(doc["prime"], "prime")
    if num_vars < 1:
        raise ParseError("num_vars: must be >= 1")
    if degree < 1:
        raise ParseError("degree: must be >= 1")
    if fp is None:
        try:
            fp = PrimeField(prime)
        except InvalidParameter as exc:
            raise ParseError(f"prime: {exc}") from exc
    elif fp.p != prime:
        raise ParseError(
            f"document prime {prime} does not match session prime {fp.p}"
        )
    raw_gens = doc["generators"]
    if not isinstance(raw_gens, list) or not raw_gens:
        raise ParseError("generators: expected a nonempty list")
    gens = []
    for gi, raw_gen in enumerate(raw_gens):
        where = f"generators[{gi}]"
        _expect_keys(raw_gen, {"terms"}, where)
        raw_terms = raw_gen["terms"]
        if not isinstance(raw_terms, list) or not raw_terms:
            raise ParseError(f"{where}.terms: expected a nonempty list")
        terms = {}
        for ti, raw_term in enumerate(raw_terms):
            twhere = f"{where}.terms[{ti}]"
            _expect_keys(raw_term, {"exp", "coeff"}, twhere)
            exp = raw_term["exp"]
            if not isinstance(exp, list) or len(exp) != num_vars:
                raise ParseError(
                    f"{twhere}.exp: expected a list of length {num_vars}"
                )
            exp = tuple(_expect_int(a, f"{twhere}.exp") for a in exp)
            if any(a < 0 for a in exp):
                raise ParseError(f"{twhere}.exp: negative exponent")
            if sum(exp) != degree:
                raise ParseError(
                    f"{twhere}.exp: degree {sum(exp)} != declared {degree}"
                )
            coeff = _expect_int(raw_term["coeff"], f"{twhere}.coeff")
            if not 1 <= coeff < fp.p:
                raise ParseError(
                    f"{twhere}.coeff: {coeff} outside [1, {fp.p}) "
                    "(zero terms are never stored)"
                )
            if exp in terms:
                raise ParseError(f"{twhere}.exp: duplicate exponent vector {list(exp)}")
            terms[exp] = coeff
        gens.append(Form(num_vars, degree, terms))
    return LevelPresentation(fp, num_vars, degree, tuple(gens))


def dump_presentation(pres: LevelPresentation) -> str:
    """Serialize a presentation to the canonical document text."""
    doc = {
        "num_vars": pres.num_vars,
        "degree": pres.socle_degree,
        "prime": pres.fp.p,
        "generators": [
            {
                "terms": [
                    {"exp": list(mono), "coeff": coeff}
                    for mono, coeff in g.sorted_terms()
                ]
            }
            for g in pres.generators
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_presentation(path: str, fp: PrimeField | None = None) -> LevelPresentation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read(), fp)


def save_presentation(pres: LevelPresentation, target: str | IO[str]) -> None:
    text = dump_presentation(pres)
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
