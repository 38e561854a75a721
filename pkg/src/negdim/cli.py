"""Command-line front end.

Grammar: negdim <module> <verb> [flags], plus the aggregate `negdim
verify-all`.  All output is exact: rationals render as a/b and no floating
point appears anywhere.  Every command takes --json for machine-readable
output; text and JSON are byte-stable for a fixed config and version.

Exit codes: 0 when everything asked for holds (expected discrepancies do
not fail a run), 1 on an unexpected failure or computational error, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from negdim import casimir, dims, jack, spaces
from negdim.partitions import format_partition, parse_partition
from negdim.reporting import VerificationReport


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _casimir_payload(group=None, lam=None, gf=None, coeffs=(),
                     checks=()) -> Dict[str, object]:
    return {
        "group": group,
        "lambda": lam,
        "gf": gf,
        "coeffs": list(coeffs),
        "checks": [{"name": c.check_id, "holds": c.ok} for c in checks],
    }


def _report_exit(report: VerificationReport, as_json: bool,
                 casimir_shape: bool = False) -> int:
    if as_json:
        if casimir_shape:
            _emit_json(_casimir_payload(checks=report.cases))
        else:
            _emit_json(report.as_dict())
    else:
        print(report.render_text())
    return 0 if report.all_ok else 1


def _resolve_mode(group: str, mode: Optional[str], n: Optional[int]) -> str:
    if mode is None:
        if n is not None:
            mode = "rows"
        else:
            mode = "blocks" if group in casimir.BLOCK_FAMILIES else "rows"
    if mode == "rows" and n is None:
        raise ValueError("rows mode needs --n (an integer rank)")
    if mode == "blocks" and group not in casimir.BLOCK_FAMILIES:
        raise ValueError(
            f"group {group!r} has no block form; use --mode rows --n <rank>")
    return mode


def _cmd_casimir_gf(args) -> int:
    lam = parse_partition(args.lam)
    mode = _resolve_mode(args.group, args.mode, args.n)
    result = casimir.generating_function(args.group, lam, mode=mode, n=args.n)
    if args.json:
        _emit_json(_casimir_payload(group=args.group,
                                    lam=format_partition(lam),
                                    gf=str(result.gf)))
    else:
        print(f"group: {args.group}")
        print(f"lambda: {format_partition(lam)}")
        print(f"mode: {result.mode}" + (f" (n = {result.n})" if result.n is not None else ""))
        print(f"gf: {result.gf}")
    return 0


def _cmd_casimir_coeffs(args) -> int:
    lam = parse_partition(args.lam)
    if args.order < 0:
        raise ValueError("--order must be nonnegative")
    mode = _resolve_mode(args.group, args.mode, args.n)
    coeffs = casimir.spectrum_coefficients(args.group, lam, args.order,
                                           mode=mode, n=args.n)
    rendered = [str(c) for c in coeffs]
    if args.json:
        _emit_json(_casimir_payload(group=args.group,
                                    lam=format_partition(lam),
                                    coeffs=rendered))
    else:
        print(f"group: {args.group}")
        print(f"lambda: {format_partition(lam)}")
        for p, c in enumerate(rendered):
            print(f"C[{p}]: {c}")
    return 0


def _cmd_casimir_verify(args) -> int:
    report = casimir.verify_duality(args.max_weight)
    return _report_exit(report, args.json, casimir_shape=args.json)


def _parse_coupling(text: Optional[str]):
    if text is None or text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"--k expects a rational like -1/2, or 'symbolic' "
                         f"(got {text!r})") from None


def _cmd_jack_compute(args) -> int:
    lam = parse_partition(args.lam)
    jf = jack.jack(lam, _parse_coupling(args.k))
    payload = {
        "lambda": format_partition(lam),
        "k": str(jf.coupling),
        "m_expansion": str(jf.m_expansion),
        "p_expansion": str(jf.p_expansion),
        "eigenvalue": str(jf.eigenvalue),
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"lambda: {payload['lambda']}")
        print(f"k: {payload['k']}")
        print(f"m-expansion: {payload['m_expansion']}")
        print(f"p-expansion: {payload['p_expansion']}")
        print(f"eigenvalue: {payload['eigenvalue']}")
    return 0


def _cmd_jack_duality(args) -> int:
    return _report_exit(jack.verify_duality(args.max_weight), args.json)


def _cmd_jack_diagram(args) -> int:
    return _report_exit(jack.verify_diagram(args.max_weight, args.max_n),
                        args.json)


def _space_row(s: spaces.SpaceSpec) -> Dict[str, object]:
    derived = spaces.to_kpq(s)
    shown = spaces.tabulated_kpq(s)
    return {
        "key": s.key,
        "label": s.label,
        "space": s.description,
        "root_system": s.root_system,
        "rank": s.rank,
        "mults": [str(m) for m in s.mults],
        "kpq": derived.as_dict(),
        "tabulated_kpq": shown.as_dict() if shown else None,
        "in_matching": s.in_matching,
    }


def _cmd_spaces_table(args) -> int:
    rows = [_space_row(s) for s in spaces.catalogue()]
    pairs = [spaces.dual_space(src).as_dict()
             for src, _ in spaces.EXPECTED_PAIRS]
    if args.json:
        _emit_json({"spaces": rows, "pairs": pairs})
        return 0
    print("catalogue (multiplicities and coupling triples):")
    for r in rows:
        shown = ""
        if r["tabulated_kpq"] and r["tabulated_kpq"] != r["kpq"]:
            p = r["tabulated_kpq"]
            shown = f"  [tabulated: k={p['k']} p={p['p']} q={p['q']}]"
        kpq = r["kpq"]
        print(f"  {r['key']:10s} {r['space']:24s} {r['root_system']}_{r['rank']:5s}"
              f" mults=({', '.join(r['mults'])})"
              f" k={kpq['k']} p={kpq['p']} q={kpq['q']}{shown}")
    print()
    print("dual pairs:")
    for row in pairs:
        mark = "ok" if row["matched"] else "NO MATCH"
        relabel = " (m<->n relabeled)" if row["relabeled"] else ""
        print(f"  {row['space']} -> {row['partner']}: {mark}{relabel}")
        for disc in row["discrepancies"]:
            print(f"    expected discrepancy {disc['id']}: derived "
                  f"{disc['field']} = {disc['derived']}, tabulated {disc['tabulated']}")
    return 0


def _cmd_spaces_dual(args) -> int:
    match = spaces.dual_space(args.label, m=args.m, n=args.n)
    if args.json:
        _emit_json(match.as_dict())
        return 0
    print(f"space: {match.source.description}  ({match.source.key})")
    print(f"kpq: {match.kpq}")
    if not spaces._triples_equal(match.kpq, match.derived):
        print(f"kpq (from multiplicities): {match.derived}")
    print(f"dual_kpq: {match.image}")
    if match.matched:
        relabel = " after m<->n relabeling" if match.relabeled else ""
        print(f"matched: {match.partner_description} ({match.partner}){relabel}")
    else:
        print("matched: nothing in the catalogue")
    for disc in match.discrepancies:
        print(f"expected discrepancy {disc['id']}: derived {disc['field']} = "
              f"{disc['derived']}, tabulated {disc['tabulated']}")
    return 0


def _cmd_dims_king(args) -> int:
    return _report_exit(dims.verify_king(args.max_weight), args.json)


def _cmd_dims_poly(args) -> int:
    lam = parse_partition(args.lam)
    poly = dims.dim_poly(args.family, lam)
    payload = {
        "family": args.family,
        "lambda": format_partition(lam),
        "poly": str(poly),
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"family: {args.family}")
        print(f"lambda: {payload['lambda']}")
        print(f"dim(N) = {payload['poly']}")
    return 0


def _cmd_dims_vogel(args) -> int:
    if args.family:
        triple = dims.vogel_classical(args.family)
        value = dims.vogel_dim(triple)
        payload = {
            "family": args.family,
            "triple": [str(t) for t in triple],
            "dim": str(value),
        }
        if args.json:
            _emit_json(payload)
        else:
            print(f"family: {args.family}")
            print(f"triple: ({', '.join(payload['triple'])})")
            print(f"dim: {value}")
        return 0
    return _report_exit(dims.verify_vogel(), args.json)


def _cmd_dims_vogel_sp_so(args) -> int:
    report = VerificationReport(suite="dims-vogel-sp-so", config={})
    report.add(dims.check_vogel_sp_so())
    return _report_exit(report, args.json)


def run_verify_all(max_weight: int = 6, max_degree: int = 6,
                   max_n: int = 4) -> VerificationReport:
    """Every verification sweep in one deterministic report."""
    if min(max_weight, max_degree, max_n) < 1:
        raise ValueError("config values must be at least 1")
    report = VerificationReport(
        suite="verify-all",
        config={"maxWeight": max_weight, "maxDegree": max_degree,
                "maxN": max_n})
    report.extend(casimir.verify_consistency(max_weight).cases)
    report.extend(casimir.verify_sp_so(max_weight).cases)
    report.extend(casimir.verify_u_self(max_weight).cases)
    report.extend(dims.verify_fundamental_constants().cases)
    report.extend(dims.verify_king(max_weight).cases)
    report.extend(dims.verify_vogel().cases)
    report.extend(jack.verify_structure(max_degree).cases)
    report.extend(jack.verify_schur(max_degree).cases)
    report.extend(jack.verify_conjugation(max_degree).cases)
    report.extend(jack.verify_duality(max_degree).cases)
    report.extend(jack.verify_diagram(min(max_weight, 5), max_n).cases)
    report.extend(spaces.verify_table().cases)
    report.sort()
    return report


def _cmd_verify_all(args) -> int:
    report = run_verify_all(args.max_weight, args.max_degree, args.max_n)
    return _report_exit(report, args.json)


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true",
                   help="emit machine-readable JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negdim",
        description="Exact verification of rank-negation dualities for "
                    "classical groups, symmetric functions and symmetric spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    cas = sub.add_parser("casimir", help="Casimir spectrum generating functions")
    casv = cas.add_subparsers(dest="verb", required=True)

    gf = casv.add_parser("gf", help="print C(lambda, z)")
    gf.add_argument("--group", required=True, choices=("u", "su", "b", "c", "d"))
    gf.add_argument("--lambda", dest="lam", required=True,
                    help='partition, e.g. "3,2,1" ("0" for empty)')
    gf.add_argument("--n", type=int,
                    help="integer rank; selects rows mode unless --mode says otherwise")
    gf.add_argument("--mode", choices=("blocks", "rows"))
    _add_json(gf)
    gf.set_defaults(func=_cmd_casimir_gf)

    co = casv.add_parser("coeffs", help="spectrum coefficients C_0..C_order")
    co.add_argument("--group", required=True, choices=("u", "su", "b", "c", "d"))
    co.add_argument("--lambda", dest="lam", required=True)
    co.add_argument("--order", type=int, required=True)
    co.add_argument("--n", type=int)
    co.add_argument("--mode", choices=("blocks", "rows"))
    _add_json(co)
    co.set_defaults(func=_cmd_casimir_coeffs)

    cvd = casv.add_parser("verify-duality",
                          help="rank-negation duality sweeps")
    cvd.add_argument("--max-weight", type=int, default=6)
    _add_json(cvd)
    cvd.set_defaults(func=_cmd_casimir_verify)

    ja = sub.add_parser("jack", help="Jack symmetric functions")
    jav = ja.add_subparsers(dest="verb", required=True)

    jc = jav.add_parser("compute", help="eigenfunction of one partition")
    jc.add_argument("--lambda", dest="lam", required=True)
    jc.add_argument("--k", default="symbolic",
                    help="coupling: a rational, or 'symbolic'; write "
                         "negative values as --k=-1/2")
    _add_json(jc)
    jc.set_defaults(func=_cmd_jack_compute)

    jd = jav.add_parser("verify-duality", help="transpose duality sweep")
    jd.add_argument("--max-weight", type=int, default=6)
    _add_json(jd)
    jd.set_defaults(func=_cmd_jack_duality)

    jg = jav.add_parser("verify-diagram",
                        help="finite-variable projection square")
    jg.add_argument("--max-weight", type=int, default=5)
    jg.add_argument("--max-n", type=int, default=4)
    _add_json(jg)
    jg.set_defaults(func=_cmd_jack_diagram)

    sp = sub.add_parser("spaces", help="symmetric-space coupling triples")
    spv = sp.add_subparsers(dest="verb", required=True)

    st = spv.add_parser("table", help="catalogue and dual pairs")
    _add_json(st)
    st.set_defaults(func=_cmd_spaces_table)

    sd = spv.add_parser("dual", help="dualize one space")
    sd.add_argument("--label", required=True,
                    help="catalogue key, e.g. BDI or group-C")
    sd.add_argument("--m", type=int)
    sd.add_argument("--n", type=int)
    _add_json(sd)
    sd.set_defaults(func=_cmd_spaces_dual)

    dm = sub.add_parser("dims", help="dimension polynomials")
    dmv = dm.add_subparsers(dest="verb", required=True)

    dk = dmv.add_parser("king", help="transposition duality sweep")
    dk.add_argument("--max-weight", type=int, default=6)
    _add_json(dk)
    dk.set_defaults(func=_cmd_dims_king)

    dp = dmv.add_parser("poly", help="dimension as a polynomial in N")
    dp.add_argument("--family", required=True, choices=("a", "b", "c", "d"))
    dp.add_argument("--lambda", dest="lam", required=True)
    _add_json(dp)
    dp.set_defaults(func=_cmd_dims_poly)

    dv = dmv.add_parser("vogel", help="universal dimension formula")
    dv.add_argument("--family", choices=("sp2n", "sln", "son"))
    _add_json(dv)
    dv.set_defaults(func=_cmd_dims_vogel)

    ds = dmv.add_parser("vogel-sp-so",
                        help="scaled symplectic triple vs orthogonal at -2n")
    _add_json(ds)
    ds.set_defaults(func=_cmd_dims_vogel_sp_so)

    va = sub.add_parser("verify-all", help="run every verification sweep")
    va.add_argument("--max-weight", type=int, default=6)
    va.add_argument("--max-degree", type=int, default=6)
    va.add_argument("--max-n", type=int, default=4)
    _add_json(va)
    va.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
