"""Command-line front end.

Exit status: 0 on success, 2 on a validation or budget error, 3 when a
consistency check that must hold by theory fails (an implementation bug).
"""

import argparse
import re
import sys
import time

from . import appendix, characters, sweeps
from .frobenius import FrobeniusModel, is_prime
from .hasse import INCONSISTENT, hasse_certificate, weight_shift_search
from .rootdata import build_root_datum, special_simple_roots
from .serialize import (
    SpecError, certificate_to_json, dumps, frac, fracs, load_group_spec, parse_rational,
    strata_to_json, word_out, zip_datum_from_spec,
)
from .weyl import length_distribution, weyl_group
from .zipdata import strata_table

OK, INVALID, INCONSISTENT_EXIT = 0, 2, 3


def table(headers, rows):
    rows = [[str(x) for x in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    return "\n".join([line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows])


def fmt_word(word):
    return "e" if not word else "s" + ".".join(str(i) for i in word)


def fmt_vec(v):
    return "(" + ", ".join(frac(x) for x in v) + ")"


def parse_chi(text, rd):
    parts = [t.strip() for t in text.split(",")]
    coords = [parse_rational(t, "--chi") for t in parts]
    if coords == [0]:
        coords = [0] * rd.dim
    if rd.similitude and len(coords) == rd.dim - 1:
        coords = [0] + coords
    if len(coords) != rd.dim:
        raise SpecError(f"--chi: expected {rd.dim} coordinates, got {len(coords)}")
    return tuple(coords)


def need_prime(p):
    if p is None:
        raise SpecError("--p: required for this command")
    if not is_prime(p):
        raise SpecError(f"--p: {p} is not a prime")
    return p


def load(args, need_mu=True):
    if not args.spec:
        raise SpecError("--spec: required for this command")
    rd, mu = load_group_spec(args.spec)
    zd = zip_datum_from_spec(rd, mu) if need_mu else None
    return rd, mu, zd


def check_budget(args, zd):
    if len(zd.iw) > args.max_weyl_order:
        raise OverflowError(f"|^I W| = {len(zd.iw)} exceeds --max-weyl-order {args.max_weyl_order}")


def cmd_strata(args, out):
    rd, mu, zd = load(args)
    check_budget(args, zd)
    rows = strata_table(zd)
    if args.json:
        out.write(dumps(strata_to_json(rows)) + "\n")
        return OK
    out.write(f"datum {rd.tag}  mu {fmt_vec(mu)}  K {[i + 1 for i in zd.K]}  "
              f"I {[i + 1 for i in zd.I]}  J {[i + 1 for i in zd.J]}\n")
    out.write(table(
        ["w", "length", "dim", "minimal", "cominimal", "involution"],
        [[fmt_word(word_out(r.w)), r.length, r.dimension, fmt_word(word_out(r.minimal_partner)),
          fmt_word(word_out(r.cominimal_partner)), fmt_word(word_out(r.involution_image))] for r in rows],
    ) + "\n")
    return OK


def cmd_predicates(args, out):
    rd, mu, _ = load(args, need_mu=False)
    if args.chi is None:
        raise SpecError("--chi: required for this command")
    chi = parse_chi(args.chi, rd)
    zd = zip_datum_from_spec(rd, mu) if mu is not None else None
    report = {
        "chi": fracs(chi),
        "dominant": characters.is_dominant(rd, chi),
        "regular": characters.is_regular(rd, chi),
        "quasi_constant": characters.is_quasi_constant(rd, chi),
        "min_p_close": characters.min_p_close(rd, chi),
    }
    if args.p is not None:
        report["orbitally_p_close"] = characters.is_orbitally_p_close(rd, chi, need_prime(args.p))
    if zd is not None:
        report["l_character"] = characters.is_l_character(zd, chi)
        report["ample"] = characters.is_ample(zd, chi) if report["l_character"] else False
    orbits = characters.orbit_values(rd, chi)
    report["orbits"] = [fracs(v) for v in orbits]
    if args.json:
        out.write(dumps(report) + "\n")
        return OK
    out.write(f"chi {fmt_vec(chi)}\n")
    out.write(table(["predicate", "value"],
                    [[k, str(v).lower()] for k, v in report.items() if k not in ("chi", "orbits")]) + "\n")
    out.write(table(["orbit", "abs pairings"],
                    [[i + 1, " ".join(v)] for i, v in enumerate(report["orbits"])]) + "\n")
    return OK


def cmd_hasse(args, out):
    rd, mu, zd = load(args)
    check_budget(args, zd)
    p = need_prime(args.p)
    if args.chi is not None:
        chis = [parse_chi(args.chi, rd)]
        if not characters.is_l_character(zd, chis[0]):
            raise SpecError("--chi: not a character of L (nonzero on a Levi coroot)")
        fm = FrobeniusModel(rd, p)
        certs = [hasse_certificate(zd, fm, chis[0], r.w) for r in strata_table(zd)]
    else:
        candidates = sweeps.ample_p_close(zd, p, sweeps.l_character_grid(zd, args.box))
        chis = sweeps.sample(candidates, args.sample, args.seed)
        certs = sweeps.certificate_sweep(zd, p, chis, args.jobs)
    bad = sweeps.inconsistencies(certs)
    if args.json:
        out.write(dumps([certificate_to_json(c) for c in certs]) + "\n")
    else:
        out.write(f"datum {rd.tag}  p {p}  characters {len(chis)}  certificates {len(certs)}\n")
        out.write(table(
            ["chi", "stratum", "cominimal", "N", "coefficients", "ample", "p-close", "verdict"],
            [[fmt_vec(c.chi), fmt_word(word_out(c.stratum_w)), fmt_word(word_out(c.cominimal)), c.N,
              " ".join(frac(x) for x in c.divisor.coefficients) or "-",
              str(c.flags.ample).lower(), str(c.flags.orbitally_p_close).lower(), c.verdict]
             for c in certs],
        ) + "\n")
    if bad:
        sys.stderr.write(f"{INCONSISTENT}: {len(bad)} certificate(s) violate the positivity contract\n")
        return INCONSISTENT_EXIT
    return OK


def cmd_cones(args, out):
    rd, mu, zd = load(args)
    p = need_prime(args.p)
    if args.chi is not None:
        chis = [parse_chi(args.chi, rd)]
    else:
        chis = sweeps.sample(sweeps.character_grid(rd, args.box), args.sample, args.seed)
    rows, bad = sweeps.cone_sweep(zd, p, chis)
    shift = weight_shift(zd, chis[0], args.a_max) if args.chi is not None else None
    if args.chi is None:
        rows = [(c, f) for c, f in rows if f.in_C]
    if args.json:
        report = [{"chi": fracs(c), "in_C": f.in_C, "sign_pattern": f.sign_pattern,
                   "in_A_p": f.in_A_p, "in_C_plusplus": f.in_C_plusplus} for c, f in rows]
        if shift is not None:
            report[0]["weight_shift"] = shift[1]
        out.write(dumps(report) + "\n")
    else:
        if args.chi is None:
            out.write(f"datum {rd.tag}  p {p}  grid {len(chis)}  in C {len(rows)}  "
                      f"in A_p {sum(f.in_A_p for _, f in rows)}\n")
        out.write(table(["chi", "in_C", "sign_pattern", "in_A_p", "in_C++"],
                        [[fmt_vec(c), *(str(x).lower() for x in (f.in_C, f.sign_pattern, f.in_A_p, f.in_C_plusplus))]
                         for c, f in rows]) + "\n")
        if shift is not None:
            found = "none found" if shift[1] is None else shift[1]
            out.write(f"weight shift along eta_omega {fmt_vec(shift[0])} (a <= {args.a_max}): {found}\n")
    if bad:
        sys.stderr.write(f"{INCONSISTENT}: {len(bad)} character(s) in A_p fail the C++ test\n")
        return INCONSISTENT_EXIT
    return OK


def weight_shift(zd, chi, a_max):
    """Scan a in 0..a_max for eta = 0, k = 1, chi_eta = chi along the Hodge
    character; only available for type C data."""
    if zd.rd.series != "C":
        return None
    eta_omega = appendix.hodge_character(appendix.symplectic_weights(zd.rd), zd.mu)
    zero = (0,) * zd.rd.dim
    return eta_omega, weight_shift_search(zd, zero, eta_omega, chi, 1, a_max)


def cmd_verify_omega(args, out):
    rows = [r for s in "ABCD" for r in appendix.verify_special_fundamental_quasi_constant(s, args.max_rank)]
    siegel = []
    if args.spec:
        rd, mu, zd = load(args)
        if rd.series == "C" and mu is not None:
            wm = appendix.symplectic_weights(rd)
            eta = appendix.hodge_character(wm, mu)
            viol = appendix.top_half_positivity_check(
                wm, mu, [rd.simple_coroots[i] for i in special_simple_roots(rd)])
            siegel.append({"eta_omega": fracs(eta),
                           "quasi_constant": characters.is_quasi_constant(rd, eta),
                           "ample": characters.is_ample(zd, eta),
                           "violations": viol})
    failed = [r for r in rows if not r.ok] + [s for s in siegel
                                              if not (s["quasi_constant"] and s["ample"]) or s["violations"]]
    if args.json:
        out.write(dumps({
            "vertices": [{"series": r.series, "rank": r.rank, "vertex": r.vertex,
                          "weight": fracs(r.weight), "value_sets": [fracs(v) for v in r.value_sets],
                          "quasi_constant": r.quasi_constant, "minuscule": r.minuscule,
                          "pattern_ok": r.pattern_ok} for r in rows],
            "hodge": siegel,
        }) + "\n")
    else:
        out.write(table(["series", "rank", "vertex", "value sets", "quasi-const", "minuscule", "pattern"],
                        [[r.series, r.rank, r.vertex, " ".join("{" + ",".join(fracs(v)) + "}" for v in r.value_sets),
                          str(r.quasi_constant).lower(), str(r.minuscule).lower(), str(r.pattern_ok).lower()]
                         for r in rows]) + "\n")
        for s in siegel:
            out.write(f"eta_omega ({', '.join(s['eta_omega'])})  quasi-constant {str(s['quasi_constant']).lower()}"
                      f"  ample {str(s['ample']).lower()}  violations {len(s['violations'])}\n")
    return INCONSISTENT_EXIT if failed else OK


def cmd_bench(args, out):
    if args.spec:
        rd, mu, zd = load(args)
    else:
        rd = build_root_datum("C", 8, similitude=True)
        mu = (1,) * 9
        zd = zip_datum_from_spec(rd, mu)
    t0 = time.perf_counter()
    levels = length_distribution(rd, cap=args.max_weyl_order)
    t1 = time.perf_counter()
    weyl_group.cache_clear()
    zd = zip_datum_from_spec(rd, mu)
    iw = zd.iw
    t2 = time.perf_counter()
    report = {
        "datum": rd.tag,
        "weyl_order": sum(levels),
        "max_length": len(levels) - 1,
        "length_counts": levels,
        "weyl_seconds": round(t1 - t0, 3),
        "iw_size": len(iw),
        "iw_max_length": max(w.length for w in iw),
        "iw_seconds": round(t2 - t1, 3),
    }
    if args.json:
        out.write(dumps(report) + "\n")
    else:
        out.write(table(["quantity", "value"], [[k, v] for k, v in report.items() if k != "length_counts"]) + "\n")
    return OK


COMMANDS = {
    "strata": cmd_strata,
    "predicates": cmd_predicates,
    "hasse": cmd_hasse,
    "cones": cmd_cones,
    "verify-omega": cmd_verify_omega,
    "bench": cmd_bench,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="zipstrata", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--spec", help="group-spec JSON file")
    parser.add_argument("--p", type=int, help="prime")
    parser.add_argument("--chi", help="character as comma-separated rationals (similitude first)")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")
    parser.add_argument("--sample", type=int, default=0, help="sample this many grid points (0 = all)")
    parser.add_argument("--max-weyl-order", type=int, default=20_000_000, help="enumeration budget")
    parser.add_argument("--box", type=int, default=3, help="sweep radius")
    parser.add_argument("--a-max", type=int, default=50, help="weight-shift scan limit")
    parser.add_argument("--max-rank", type=int, default=8, help="rank limit for verify-omega")
    return parser


def _join_negative_values(argv):
    """Let '--chi -1,-1' through argparse, which would read '-1,-1' as an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--chi" and i + 1 < len(argv) and re.match(r"^-[\d./]", argv[i + 1]):
            out.append(f"--chi={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, out=None):
    out = out or sys.stdout
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (SpecError, OverflowError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
