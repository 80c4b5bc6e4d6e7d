"""Command-line front end for every decision procedure.

Words use the s-token grammar ("s1 s2 s1", bare digits, or "e" for the
identity) and --n is mandatory because words do not carry their strand
count in text form.  Output is plain text or a JSON object with the stable
keys verdict / witness / normal_form / details.  Exit codes: 0 for any
computed decision (negative verdicts included), 1 for parse or
precondition errors, 2 when a bounded search ends inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import conjugacy, doodle, endomorphisms, markov, oracle, twisted, words
from .words import Word

MAX_RADIUS_ENV = "TWINKIT_MAX_RADIUS"


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _capped_radius(radius: int, details: dict) -> int:
    cap = os.environ.get(MAX_RADIUS_ENV)
    if cap is not None and radius > int(cap):
        details["radius_capped_to"] = int(cap)
        return int(cap)
    return radius


def _parse_map(n: int, name: str) -> twisted.Endomap:
    factors = []
    for token in name.split("*"):
        token = token.strip()
        if token == "psi":
            factors.append(twisted.make_psi(n))
        elif token == "tau":
            if n != 4:
                raise CliError("tau is only defined on 4 strands")
            factors.append(twisted.make_tau())
        elif token == "kappa":
            if n < 5:
                raise CliError("kappa needs at least 5 strands")
            factors.append(twisted.make_kappa(n))
        elif token == "id":
            factors.append(twisted.identity_endomap(n))
        elif token.startswith("inn:"):
            factors.append(twisted.make_inner(Word.parse(n, token[4:])))
        else:
            raise CliError(f"unknown automorphism {token!r}")
    phi = factors[0]
    for factor in factors[1:]:
        phi = twisted.compose(phi, factor)
    return phi


def _emit(args, verdict, witness=None, normal_form=None, details=None) -> None:
    details = details or {}
    if args.output == "json":
        print(
            json.dumps(
                {
                    "verdict": verdict,
                    "witness": witness,
                    "normal_form": normal_form,
                    "details": details,
                },
                sort_keys=True,
            )
        )
    else:
        parts = [f"verdict={verdict}"]
        if normal_form is not None:
            parts.append(f'normal_form="{normal_form}"')
        if witness is not None:
            parts.append(f'witness="{witness}"')
        parts.extend(f'{k}="{v}"' if isinstance(v, str) else f"{k}={v}" for k, v in details.items())
        print(" ".join(str(p) for p in parts))


def _add_word_command(sub, name, help_text, nargs=1):
    p = sub.add_parser(name, help=help_text)
    p.add_argument("--n", type=int, required=True, help="strand count (>= 2)")
    if nargs == 1:
        p.add_argument("word", type=str)
    else:
        for k in range(1, nargs + 1):
            p.add_argument(f"word{k}", type=str)
    return p


def build_parser() -> _Parser:
    parser = _Parser(prog="twinkit", description="twin group decision procedures")
    parser.add_argument("--output", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_word_command(sub, "reduce", "canonical normal form")
    _add_word_command(sub, "equal", "word problem for two words", nargs=2)
    _add_word_command(sub, "certificate", "elementary-move chain between equal words", nargs=2)
    _add_word_command(sub, "cyclic-reduce", "cyclically reduced conjugacy representative")

    p = _add_word_command(sub, "conjugate", "conjugacy decision", nargs=2)
    p.add_argument("--witness", action="store_true", help="also return a conjugator")

    p = _add_word_command(sub, "destab", "destabilization decision")
    p.add_argument("--move", choices=("m3", "m4"), required=True)
    p.add_argument("--oracle", action="store_true", help="use the parabolic-membership oracle")

    p = _add_word_command(sub, "stab", "stabilize with a boundary chain")
    p.add_argument("--move", choices=("m3", "m4"), required=True)
    p.add_argument("--i", type=int, required=True, dest="index")

    p = _add_word_command(sub, "shift", "strand shift (trivial strand across)")
    p.add_argument("--inverse", action="store_true")

    _add_word_command(sub, "split", "sufficient split-twin conditions")
    _add_word_command(sub, "components", "closed curves in the closure")
    _add_word_command(sub, "permutation", "strand permutation")
    _add_word_command(sub, "pure", "kernel membership of the strand permutation")

    p = sub.add_parser("aut", help="automorphism operations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("map", type=str, help="psi | tau | kappa | id | inn:<word>, joined by *")
    p.add_argument("action", choices=("order", "apply", "norm"))
    p.add_argument("word", type=str, nargs="?")

    p = sub.add_parser("twisted", help="twisted conjugacy decision")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--aut", type=str, required=True)
    p.add_argument("--x", type=str, required=True)
    p.add_argument("--y", type=str, required=True)
    p.add_argument("--radius", type=int, default=twisted.DEFAULT_RADIUS)

    p = sub.add_parser("rinfty", help="twisted-conjugacy witness family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--aut", type=str, required=True)
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("endo", help="the doubling endomorphism")
    p.add_argument("--n", type=int, required=True)
    endo_sub = p.add_subparsers(dest="endo_action", required=True)
    q = endo_sub.add_parser("apply")
    q.add_argument("word", type=str)
    q = endo_sub.add_parser("inject-test")
    q.add_argument("--radius", type=int, required=True)
    q = endo_sub.add_parser("parity")
    q.add_argument("word", type=str)

    p = sub.add_parser("ball", help="enumerate elements up to a length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--counts-only", action="store_true")

    p = sub.add_parser("render", help="SVG diagram or closure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word", type=str)
    p.add_argument("--mode", choices=("diagram", "closure"), default="diagram")
    p.add_argument("-o", "--out", type=str, required=True)
    p.add_argument("--strand-spacing", type=int, default=doodle.DEFAULT_GEOMETRY.strand_spacing)
    p.add_argument("--slot-height", type=int, default=doodle.DEFAULT_GEOMETRY.slot_height)
    p.add_argument("--stroke-width", type=int, default=doodle.DEFAULT_GEOMETRY.stroke_width)

    sub.add_parser("heisenberg-check", help="norm-converse counterexample report")
    return parser


def _require_n(args) -> int:
    if args.n < 2:
        raise CliError(f"--n must be at least 2, got {args.n}")
    return args.n


def _run(args) -> int:
    cmd = args.command
    if cmd == "reduce":
        n = _require_n(args)
        nf = words.reduce(Word.parse(n, args.word))
        _emit(args, "ok", normal_form=str(nf), details={"length": len(nf)})
        return 0
    if cmd == "equal":
        n = _require_n(args)
        u = Word.parse(n, args.word1)
        v = Word.parse(n, args.word2)
        _emit(args, words.equal(u, v), normal_form=str(words.reduce(u)))
        return 0
    if cmd == "certificate":
        n = _require_n(args)
        u = Word.parse(n, args.word1)
        v = Word.parse(n, args.word2)
        cert = words.certificate(u, v)
        moves = [
            {"op": m.kind, "pos": m.pos, "letter": m.letter} for m in cert.moves
        ]
        _emit(args, "ok", details={"moves": moves, "count": len(moves)})
        return 0
    if cmd == "cyclic-reduce":
        n = _require_n(args)
        cr = conjugacy.cyclic_reduce(Word.parse(n, args.word))
        _emit(
            args,
            "ok",
            witness=str(cr.conjugator),
            normal_form=str(cr.representative),
            details={"length": len(cr.representative)},
        )
        return 0
    if cmd == "conjugate":
        n = _require_n(args)
        u = Word.parse(n, args.word1)
        v = Word.parse(n, args.word2)
        verdict = conjugacy.conjugate(u, v)
        witness = None
        if verdict and args.witness:
            witness = str(conjugacy.conjugating_witness(u, v))
        _emit(args, verdict, witness=witness)
        return 0
    if cmd == "destab":
        n = _require_n(args)
        w = Word.parse(n, args.word)
        kind = markov.M3 if args.move == "m3" else markov.M4
        if args.oracle:
            res = markov.destabilize_oracle(w, kind)
        elif kind == markov.M3:
            res = markov.destabilize_m3(w)
        else:
            res = markov.destabilize_m4(w)
        details = {}
        if res.found:
            details = {"beta": str(res.beta), "i": res.index, "kind": res.kind}
        _emit(args, res.found, details=details)
        return 0
    if cmd == "stab":
        n = _require_n(args)
        w = Word.parse(n, args.word)
        out = (
            markov.stabilize_m3(w, args.index)
            if args.move == "m3"
            else markov.stabilize_m4(w, args.index)
        )
        _emit(
            args,
            "ok",
            normal_form=str(words.reduce(out)),
            details={"word": str(out), "n": out.n},
        )
        return 0
    if cmd == "shift":
        n = _require_n(args)
        w = Word.parse(n, args.word)
        out = markov.m1_shift_inverse(w) if args.inverse else markov.m1_shift(w)
        _emit(args, "ok", normal_form=str(out))
        return 0
    if cmd == "split":
        n = _require_n(args)
        summary = doodle.split_check(Word.parse(n, args.word))
        _emit(
            args,
            summary.split_certified,
            details={
                "reason": summary.split_reason,
                "components": summary.components,
                "note": "sufficient conditions only; False never certifies non-split",
            },
        )
        return 0
    if cmd == "components":
        n = _require_n(args)
        _emit(args, doodle.closure_components(Word.parse(n, args.word)))
        return 0
    if cmd == "permutation":
        n = _require_n(args)
        perm = doodle.permutation_of(Word.parse(n, args.word))
        _emit(args, "ok", details={"images": list(perm.images)})
        return 0
    if cmd == "pure":
        n = _require_n(args)
        _emit(args, doodle.is_pure(Word.parse(n, args.word)))
        return 0
    if cmd == "aut":
        n = _require_n(args)
        phi = _parse_map(n, args.map)
        if args.action == "order":
            _emit(args, twisted.order_of(phi))
            return 0
        if args.word is None:
            raise CliError(f"aut {args.action} needs a word argument")
        w = Word.parse(n, args.word)
        result = twisted.apply(phi, w) if args.action == "apply" else twisted.norm(phi, w)
        _emit(args, "ok", normal_form=str(result))
        return 0
    if cmd == "twisted":
        n = _require_n(args)
        details = {}
        radius = _capped_radius(args.radius, details)
        phi = _parse_map(n, args.aut)
        verdict = twisted.twisted_conjugate(
            phi, Word.parse(n, args.x), Word.parse(n, args.y), radius
        )
        details.update(
            {
                "norm_x": str(verdict.norms[0]),
                "norm_y": str(verdict.norms[1]),
                "radius": radius,
            }
        )
        _emit(
            args,
            verdict.status,
            witness=None if verdict.witness is None else str(verdict.witness),
            details=details,
        )
        return 2 if verdict.status == "inconclusive" else 0
    if cmd == "rinfty":
        n = _require_n(args)
        phi = _parse_map(n, args.aut)
        family = twisted.rinfty_witness_family(n, phi, args.count)
        _emit(args, "ok", details={"family": [str(x) for x in family]})
        return 0
    if cmd == "endo":
        n = _require_n(args)
        m = endomorphisms.make_psi_n(n)
        if args.endo_action == "apply":
            nf = endomorphisms.psi_n_apply(m, Word.parse(n, args.word))
            _emit(args, "ok", normal_form=str(nf))
            return 0
        if args.endo_action == "inject-test":
            details = {}
            radius = _capped_radius(args.radius, details)
            report = endomorphisms.injectivity_ball_test(m, radius)
            details.update(
                {
                    "radius": radius,
                    "checked": report.elements_checked,
                    "counterexample": None
                    if report.counterexample is None
                    else str(report.counterexample),
                }
            )
            _emit(args, report.kernel_trivial, details=details)
            return 0
        bits = words.parity_vector(Word.parse(n, args.word))
        _emit(args, "ok", details={"parity": list(bits)})
        return 0
    if cmd == "ball":
        n = _require_n(args)
        details = {}
        radius = _capped_radius(args.radius, details)
        ball = oracle.enumerate_ball(n, radius)
        details.update({"layer_counts": list(ball.layer_counts), "size": len(ball)})
        if not args.counts_only:
            details["elements"] = [str(nf) for nf in ball.elements]
        _emit(args, "ok", details=details)
        return 0
    if cmd == "render":
        n = _require_n(args)
        geometry = doodle.SvgGeometry(
            strand_spacing=args.strand_spacing,
            slot_height=args.slot_height,
            stroke_width=args.stroke_width,
        )
        svg = doodle.render_svg(Word.parse(n, args.word), args.mode, geometry)
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
        _emit(args, "ok", details={"path": args.out, "bytes": len(svg.encode())})
        return 0
    if cmd == "heisenberg-check":
        report = twisted.heisenberg_counterexample()
        _emit(
            args,
            report.norm_a_trivial and report.norm_b_trivial and not report.conjugator_found,
            details={
                "group_order": report.group_order,
                "automorphism_order": report.automorphism_order,
                "norm_a_trivial": report.norm_a_trivial,
                "norm_b_trivial": report.norm_b_trivial,
                "conjugator_found": report.conjugator_found,
                "candidates_checked": report.candidates_checked,
            },
        )
        return 0
    raise CliError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
