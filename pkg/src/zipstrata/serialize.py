"""JSON input and output: group-spec files, strata tables and certificates.

Words are written 1-based; rationals are written as "num/den" strings
(plain integers when the denominator is 1).
"""

import json
from fractions import Fraction

from .rootdata import build_root_datum
from .weyl import weyl_group
from .zipdata import StratumRecord, make_zip_datum

SPEC_FIELDS = {"series", "rank", "similitude", "galois_order", "mu"}


class SpecError(ValueError):
    """A malformed group spec; the message starts with the offending field path."""


def frac(x):
    return str(Fraction(x))


def fracs(v):
    return [frac(x) for x in v]


def parse_rational(text, where="value"):
    if isinstance(text, bool) or isinstance(text, float):
        raise SpecError(f"{where}: expected an exact rational, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise SpecError(f"{where}: cannot read {text!r} as a rational") from None


def word_out(w):
    return [i + 1 for i in w.word]


def word_in(rd, word, where="word"):
    if not isinstance(word, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in word):
        raise SpecError(f"{where}: expected a list of integers")
    if any(not 1 <= i <= rd.rank for i in word):
        raise SpecError(f"{where}: letters must lie in 1..{rd.rank}")
    return weyl_group(rd).element([i - 1 for i in word])


def parse_group_spec(data):
    """Validate a group-spec mapping and return (root datum, mu or None)."""
    if not isinstance(data, dict):
        raise SpecError("$: expected a JSON object")
    for key in data:
        if key not in SPEC_FIELDS:
            raise SpecError(f"$.{key}: unknown field")
    for key in ("series", "rank"):
        if key not in data:
            raise SpecError(f"$.{key}: missing required field")
    series, rank = data["series"], data["rank"]
    if series not in ("A", "B", "C", "D"):
        raise SpecError(f"$.series: expected one of A, B, C, D, got {series!r}")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise SpecError("$.rank: expected an integer")
    similitude = data.get("similitude", False)
    if not isinstance(similitude, bool):
        raise SpecError("$.similitude: expected true or false")
    order = data.get("galois_order", 1)
    if not isinstance(order, int) or isinstance(order, bool):
        raise SpecError("$.galois_order: expected an integer")
    try:
        rd = build_root_datum(series, rank, similitude, order)
    except ValueError as exc:
        raise SpecError(f"$: {exc}") from None
    mu = None
    if "mu" in data:
        raw = data["mu"]
        if not isinstance(raw, list):
            raise SpecError("$.mu: expected a list")
        if len(raw) != rd.dim:
            raise SpecError(f"$.mu: expected {rd.dim} coordinates, got {len(raw)}")
        mu = tuple(parse_rational(x, f"$.mu[{i}]") for i, x in enumerate(raw))
    return rd, mu


def load_group_spec(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_group_spec(data)


def zip_datum_from_spec(rd, mu):
    if mu is None:
        raise SpecError("$.mu: required for this command")
    try:
        return make_zip_datum(rd, mu)
    except ValueError as exc:
        raise SpecError(f"$.mu: {exc}") from None


def strata_to_json(table):
    return [
        {
            "word": word_out(r.w),
            "length": r.length,
            "dimension": r.dimension,
            "minimal_partner": word_out(r.minimal_partner),
            "cominimal_partner": word_out(r.cominimal_partner),
            "involution_image": word_out(r.involution_image),
        }
        for r in table
    ]


def strata_from_json(rd, rows):
    out = []
    for k, row in enumerate(rows):
        where = f"$[{k}]"
        if not isinstance(row, dict):
            raise SpecError(f"{where}: expected an object")
        elems = {}
        for key in ("word", "minimal_partner", "cominimal_partner", "involution_image"):
            if key not in row:
                raise SpecError(f"{where}.{key}: missing")
            elems[key] = word_in(rd, row[key], f"{where}.{key}")
        out.append(StratumRecord(
            w=elems["word"],
            length=row["length"],
            dimension=row["dimension"],
            minimal_partner=elems["minimal_partner"],
            cominimal_partner=elems["cominimal_partner"],
            involution_image=elems["involution_image"],
        ))
    return out


def certificate_to_json(cert):
    return {
        "chi": fracs(cert.chi),
        "p": cert.p,
        "stratum": word_out(cert.stratum_w),
        "cominimal": word_out(cert.cominimal),
        "N": cert.N,
        "lambda": fracs(cert.lam),
        "divisor": [
            {"alpha": fracs(e.alpha), "target": word_out(e.target), "coeff": frac(e.coeff)}
            for e in cert.divisor.entries
        ],
        "flags": {
            "ample": cert.flags.ample,
            "orbitally_p_close": cert.flags.orbitally_p_close,
            "all_coeffs_positive": cert.flags.all_coeffs_positive,
        },
        "verdict": cert.verdict,
    }


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False)
