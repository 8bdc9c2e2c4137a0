"""Command line front end.

Exit codes: 0 success, 2 usage, 3 parse/validation error, 4 unmet
precondition, 5 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .algebra import LaurentPoly
from .errors import InvariantError, ParseError, PreconditionError, ValidationError
from .groups import (
    WirtingerPresentation,
    abelianization,
    arc_presentation,
    over_presentation,
    peripheral_pair,
)
from .invariants import (
    alexander_polynomial,
    bs_classify,
    murasugi_center_test,
    nabrep_phi,
    numeric_rep_residual,
)
from .knotcode import (
    KnotCode,
    arcs,
    bridge_decomposition,
    bridge_number,
    load_code,
    standard_normal_form,
)
from .schubert import (
    SchubertParams,
    schubert_code,
    schubert_exponents,
    schubert_presentations,
    schubert_s_value,
)
from .synthesis import bs_virtual_code, onerel_to_cyclic_wirtinger, presentation_to_code
from .words import Presentation, parse_word

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _read_input(args) -> str:
    if args.inline is not None:
        if args.source not in (None, "-"):
            raise UsageError("give either a file or --inline, not both")
        return args.inline
    if args.source in (None, "-"):
        return sys.stdin.read()
    try:
        with open(args.source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.source}: {exc.strerror}") from None


def _code_json(K: KnotCode) -> dict:
    return K.to_dict()


def _wirtinger_json(W: WirtingerPresentation) -> dict:
    d = W.base.to_dict()
    d["links"] = [
        {"from": W.generators[i], "conjugator": str(w), "to": W.generators[j]}
        for i, w, j in W.links
    ]
    return d


def _emit(args, text_lines, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


# -- code ----------------------------------------------------------------------


def cmd_code(args) -> None:
    K = load_code(_read_input(args))
    action = args.action
    if action == "validate":
        _emit(args, [f"valid knot code with {K.n} crossings", K.to_text()], _code_json(K))
    elif action == "normalize":
        S = standard_normal_form(K)
        _emit(args, [S.to_text()], _code_json(S))
    elif action == "arcs":
        dec = arcs(standard_normal_form(K))
        lines = [f"S{i} = ({', '.join(map(str, a))})" for i, a in enumerate(dec.arcs, 1)]
        _emit(args, lines, {"arcs": [list(a) for a in dec.arcs]})
    elif action == "bridges":
        dec = bridge_decomposition(K)
        lines = [dec.code.to_text()]
        for t, (b, u) in enumerate(zip(dec.bridges, dec.under_runs), 1):
            lines.append(f"y{t} = ({', '.join(map(str, b))})  under: {' '.join(map(str, u))}")
        lines.append(f"bridge number of this code: {bridge_number(K) if K.n else 0}")
        _emit(
            args,
            lines,
            {
                "code": _code_json(dec.code),
                "bridges": [list(b) for b in dec.bridges],
                "under_runs": [list(u) for u in dec.under_runs],
                "segments": dec.segments,
                "bridge_number": bridge_number(K) if K.n else 0,
            },
        )
    elif action == "group":
        W = arc_presentation(K) if args.form == "arc" else over_presentation(K)
        rank, tors = abelianization(W.base)
        ab = " + ".join(["Z"] * rank + [f"Z/{d}" for d in tors]) or "0"
        payload = _wirtinger_json(W)
        payload["abelianization"] = {"rank": rank, "torsion": list(tors)}
        _emit(args, [str(W.base), f"abelianization: {ab}"], payload)
    elif action == "peripheral":
        pp = peripheral_pair(K)
        _emit(
            args,
            [f"longitude: {pp.longitude}", f"meridian: {pp.meridian}", f"p: {pp.writhe_p}"],
            {"longitude": str(pp.longitude), "meridian": pp.meridian, "p": pp.writhe_p},
        )


# -- synth / bs ------------------------------------------------------------------


def _code_output(args, header_lines, header_payload, K: KnotCode) -> None:
    lines = [*header_lines, K.to_text()]
    payload = dict(header_payload)
    payload["code"] = _code_json(K)
    _emit(args, lines, payload)


def cmd_synth(args) -> None:
    if args.action == "from-wirtinger":
        P = Presentation.from_json(_read_input(args))
        W = WirtingerPresentation.from_presentation(P)
        K = presentation_to_code(W)
        _code_output(args, [], {}, K)
    else:
        r = parse_word(args.word, [args.x, args.y])
        chain = onerel_to_cyclic_wirtinger(r, args.x, args.y)
        K = presentation_to_code(chain)
        _code_output(args, [f"chain: {chain.base}"], {"chain": _wirtinger_json(chain)}, K)


def cmd_bs(args) -> None:
    if args.action == "code":
        P, K = bs_virtual_code(args.m)
        _code_output(args, [f"presentation: {P}"], {"presentation": P.to_dict()}, K)
    else:
        rep = bs_classify(args.m, args.n)
        d = rep.to_dict()
        lines = [f"BS({rep.m},{rep.n})"] + [
            f"{k}: {json.dumps(v) if isinstance(v, (bool, dict)) else v}"
            for k, v in d.items()
            if k not in ("m", "n")
        ]
        _emit(args, lines, d)


# -- schubert / invariants ------------------------------------------------------------


def cmd_schubert(args) -> None:
    p = SchubertParams(args.alpha, args.beta)
    emit = args.emit or ["exponents", "presentation", "code", "alexander"]
    lines, payload = [], {"alpha": p.alpha, "beta": p.beta}
    if "exponents" in emit:
        e = schubert_exponents(p)
        s, case = schubert_s_value(p)
        lines.append("exponents: " + " ".join("+" if x > 0 else "-" for x in e))
        lines.append(f"s: {s} (s*beta = {-case} mod alpha)")
        payload.update(exponents=list(e), s=s, s_case=-case)
    if "presentation" in emit:
        two, one = schubert_presentations(p)
        lines += [f"two-relator: {two}", f"one-relator: {one}"]
        payload.update(two_relator=two.to_dict(), one_relator=one.to_dict())
    if "code" in emit:
        K = schubert_code(p)
        lines.append(K.to_text())
        payload["code"] = _code_json(K)
    if "alexander" in emit:
        delta = alexander_polynomial(schubert_presentations(p)[1])
        lines.append(str(delta) if emit == ["alexander"] else f"alexander: {delta}")
        payload["alexander"] = str(delta)
    _emit(args, lines, payload)


def cmd_alexander(args) -> None:
    P = Presentation.from_json(_read_input(args))
    delta = alexander_polynomial(P)
    _emit(args, [str(delta)], {"alexander": str(delta)})


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {text!r}") from None


def cmd_nabrep(args) -> None:
    w = parse_word(args.word, ["x", "y"])
    phi = nabrep_phi(w)
    lines, payload = [str(phi)], {"word": str(w), "phi": str(phi)}
    if args.at:
        t0, u0 = (_fraction(v) for v in args.at)
        value = phi(t0, u0)
        R = numeric_rep_residual(w, t0, u0)
        lines.append(f"phi({t0}, {u0}) = {value}")
        lines.append(f"residual of x w = w y: {R}")
        payload.update(value=str(value), residual=[str(x) for x in R.entries()])
    _emit(args, lines, payload)


def cmd_murasugi(args) -> None:
    delta = LaurentPoly.parse(args.polynomial)
    res = murasugi_center_test(delta, args.rmax)
    line = res.verdict.value
    if res.r is not None:
        line += f" (r = {res.r})"
    elif res.r_max is not None:
        line += f" (r_max = {res.r_max})"
    _emit(
        args,
        [line],
        {"verdict": res.verdict.value, "degree": res.degree, "r": res.r, "r_max": res.r_max},
    )


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text")

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("source", nargs="?", help="input file ('-' or omitted: stdin)")
    src.add_argument("--inline", metavar="TEXT", help="input given directly on the command line")

    parser = argparse.ArgumentParser(
        prog="vkgroups", description="Virtual knot codes and their groups."
    )
    parser.add_argument("--version", action="version", version=f"vkgroups {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    code = sub.add_parser("code", help="knot code operations")
    csub = code.add_subparsers(dest="action", required=True)
    for name in ("validate", "normalize", "arcs", "bridges", "peripheral"):
        csub.add_parser(name, parents=[fmt, src])
    g = csub.add_parser("group", parents=[fmt, src])
    g.add_argument("--form", choices=["arc", "over"], default="over")
    code.set_defaults(func=cmd_code)

    synth = sub.add_parser("synth", help="presentation -> knot code")
    ssub = synth.add_subparsers(dest="action", required=True)
    ssub.add_parser("from-wirtinger", parents=[fmt, src])
    fr = ssub.add_parser("from-relator", parents=[fmt])
    fr.add_argument("word", help="relator over x, y with l_y = +-1")
    fr.add_argument("--x", default="x")
    fr.add_argument("--y", default="y")
    synth.set_defaults(func=cmd_synth)

    bs = sub.add_parser("bs", help="Baumslag-Solitar groups")
    bsub = bs.add_subparsers(dest="action", required=True)
    bc = bsub.add_parser("code", parents=[fmt])
    bc.add_argument("m", type=int)
    bk = bsub.add_parser("classify", parents=[fmt])
    bk.add_argument("m", type=int)
    bk.add_argument("n", type=int)
    bs.set_defaults(func=cmd_bs)

    sch = sub.add_parser("schubert", parents=[fmt], help="two-bridge knot S(alpha, beta)")
    sch.add_argument("alpha", type=int)
    sch.add_argument("beta", type=int)
    sch.add_argument(
        "--emit",
        action="append",
        choices=["exponents", "presentation", "code", "alexander"],
    )
    sch.set_defaults(func=cmd_schubert)

    alex = sub.add_parser("alexander", parents=[fmt, src], help="Alexander polynomial")
    alex.set_defaults(func=cmd_alexander)

    nab = sub.add_parser("nabrep", parents=[fmt], help="Nab-rep polynomial of a word in x, y")
    nab.add_argument("word")
    nab.add_argument("--at", nargs=2, metavar=("T", "U"))
    nab.set_defaults(func=cmd_nabrep)

    mur = sub.add_parser("murasugi", parents=[fmt], help="center conditions on a polynomial")
    mur.add_argument("polynomial")
    mur.add_argument("--rmax", type=int)
    mur.set_defaults(func=cmd_murasugi)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"vkgroups: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValidationError) as exc:
        print(f"vkgroups: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PreconditionError as exc:
        print(f"vkgroups: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvariantError, AssertionError) as exc:
        print(f"vkgroups: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
