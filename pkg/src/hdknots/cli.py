"""Command-line interface.

Exit codes: 0 on success, 1 on a parse or validation error (message on
stderr), 2 when a verification or predicate command ran but evaluated to
false.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import Sequence

from . import dsl, formats, handles, projection as pj, seifert as sf, spin
from .errors import HDKnotsError
from .forms import kummer_form, signature

EXIT_OK, EXIT_ERROR, EXIT_FALSE = 0, 1, 2


class CommandError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise CommandError(f"cannot read {path}: not UTF-8 text") from None


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CommandError(f"cannot write {out}: {exc.strerror}") from None


def _yes(flag: bool | None) -> str:
    return "unknown" if flag is None else ("yes" if flag else "no")


def _rho_text(rho: Sequence[int]) -> str:
    return "".join("+" if x > 0 else "-" for x in rho)


def _model_line(k: sf.KnotModel, knotted: bool | None) -> str:
    sigma = "undefined" if k.sigma is None else str(k.sigma)
    return f"n={k.n} delta={k.delta} sigma={sigma} simple={_yes(k.simple)} knotted={_yes(knotted)}"


def cmd_alex(args) -> int:
    print(sf.alexander(formats.parse_seifert(_read(args.file))))
    return EXIT_OK


def cmd_sig(args) -> int:
    text = _read(args.file)
    kind = formats.sniff(text)
    if kind == "FORM":
        print(signature(formats.parse_form(text)))
    else:
        print(sf.knot_signature(formats.parse_seifert(text)))
    return EXIT_OK


def cmd_sum(args) -> int:
    s1 = formats.parse_seifert(_read(args.first))
    s2 = formats.parse_seifert(_read(args.second))
    _write_or_print(formats.render_seifert(sf.connected_sum(s1, s2)), args.output)
    return EXIT_OK


def cmd_mirror(args) -> int:
    s = formats.parse_seifert(_read(args.file))
    _write_or_print(formats.render_seifert(sf.mirror_reverse(s)), args.output)
    return EXIT_OK


def cmd_spin(args) -> int:
    if args.seifert:
        s = formats.parse_seifert(_read(args.seifert))
        model = sf.knot_from_seifert(s, simple=False if args.not_simple else None)
    else:
        p = dsl.parse_proj(_read(args.proj), default_mu=args.mu)
        model = pj.lift(p, (1,) * pj.mu(p))
    model = spin.spin_tower(model, args.times)
    print(_model_line(model, pj.is_knotted(model)))
    print(f"origin={model.origin}")
    return EXIT_OK


def cmd_lifts(args) -> int:
    p = dsl.parse_proj(_read(args.file), default_mu=args.mu)
    comps = pj.singular_components(p)
    topologies = sorted({c.topology for c in comps})
    print(f"mu={pj.mu(p)} dim={pj.dimension(p)} expr={pj.render(p)}")
    print(f"components={len(comps)} topology={'; '.join(topologies)} double_points_only=yes")
    report = pj.classify_lifts(p, sample=args.sample, seed=args.seed)
    mode = "exhaustive" if report.exhaustive else f"sampled seed={args.seed}"
    print(f"assignments={len(report)} mode={mode}")
    if args.classify:
        print(f"classes={len(report)} ({report.caveat})")
        counts = Counter(c.invariants() for c in report.classes)
        for (n, sigma, delta, knotted), count in counts.items():
            sig = "undefined" if sigma is None else sigma
            print(f"n={n} sigma={sig} delta={delta} knotted={_yes(knotted)} classes={count}")
    else:
        for c in report.classes:
            sig = "undefined" if c.sigma is None else c.sigma
            print(f"rho={_rho_text(c.rho)} n={c.n} sigma={sig} delta={c.delta} knotted={_yes(c.knotted)}")
    return EXIT_OK


def cmd_realize(args) -> int:
    p = pj.realize_signature(args.r, mu=args.mu)
    _write_or_print(pj.render(p) + "\n", args.output)
    report = pj.classify_lifts(p, sample=args.sample, seed=args.seed)
    target = 16 * args.r
    sig_ok = all(c.sigma == target for c in report.classes)
    knot_ok = all(c.knotted for c in report.classes)
    ok = sig_ok and knot_ok
    mode = "exhaustive" if report.exhaustive else f"sampled seed={args.seed}"
    status = "certified" if ok else "NOT certified"
    print(f"sigma={target} {status} over {len(report)} lifts ({mode}) knotted={_yes(knot_ok)}")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_adjust(args) -> int:
    ds = formats.parse_disks(_read(args.file))
    moves = handles.adjust_to_targets(ds)
    for m in moves:
        print(f"disk {m.disk + 1}: {'+1' if m.epsilon > 0 else '-1'}")
    print(f"moves={len(moves)}")
    return EXIT_OK


def cmd_framing(args) -> int:
    ds = formats.parse_disks(_read(args.file))
    if args.adjusted:
        ds = handles.apply_moves(ds, handles.adjust_to_targets(ds))
    for i, f in enumerate(ds.framings(), start=1):
        print(f"disk {i}: {f}")
    return EXIT_OK


def cmd_verify_kummer(args) -> int:
    if args.file is None:
        f = kummer_form()
    else:
        text = _read(args.file)
        if formats.sniff(text) == "FRAMEDLINK":
            f = handles.intersection_form(formats.parse_framed_link(text))
        else:
            f = formats.parse_form(text)
    report = handles.verify_kummer(f)
    print(report)
    for name, passed in report.checks:
        print(f"  {name}: {'pass' if passed else 'fail'}")
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_liftable(args) -> int:
    e = dsl.parse_imm(_read(args.file))
    verdict, chain = pj.liftable_trace(e)
    print(verdict)
    for step in chain:
        print(f"  {step}")
    return EXIT_OK


def cmd_valid(args) -> int:
    ok = sf.is_valid(formats.parse_seifert(_read(args.file)))
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_realizable(args) -> int:
    ok = sf.realizable_3knot_signature(args.sigma)
    print("yes" if ok else "no")
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hdknots", description="Algebraic invariants of high-dimensional knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alex", help="print the Alexander polynomial of a Seifert matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("sig", help="print the signature of a Seifert matrix (k odd) or a form")
    p.add_argument("file")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("sum", help="write the connected sum (block sum) of two Seifert matrices")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("mirror", help="write the Seifert matrix of the reversed mirror image")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("spin", help="spin a knot K times and print its invariants")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--seifert", metavar="FILE")
    src.add_argument("--proj", metavar="FILE", help="lift this projection (rho = all +1) and spin the lift")
    p.add_argument("--times", type=int, default=1)
    p.add_argument("--mu", type=int, default=pj.DEFAULT_MU)
    p.add_argument("--not-simple", action="store_true", help="treat the Seifert hypersurface as not simply connected")
    p.set_defaults(func=cmd_spin)

    p = sub.add_parser("lifts", help="enumerate or sample the lifts of a projection")
    p.add_argument("file")
    p.add_argument("--classify", action="store_true", help="group the classes by their invariants")
    p.add_argument("--sample", type=int, default=pj.DEFAULT_SAMPLE)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mu", type=int, default=pj.DEFAULT_MU)
    p.set_defaults(func=cmd_lifts)

    p = sub.add_parser("realize", help="write a projection whose lifts have signature 16r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--mu", type=int, default=pj.DEFAULT_MU)
    p.add_argument("--sample", type=int, default=pj.DEFAULT_SAMPLE)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("adjust", help="print the minimal move list reaching the disk targets")
    p.add_argument("file")
    p.set_defaults(func=cmd_adjust)

    p = sub.add_parser("framing", help="print per-disk framings")
    p.add_argument("file")
    p.add_argument("--adjusted", action="store_true", help="apply the minimal moves first")
    p.set_defaults(func=cmd_framing)

    p = sub.add_parser("verify-kummer", help="check a form against the Kummer invariants")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_verify_kummer)

    p = sub.add_parser("liftable", help="decide liftability of an immersed-sphere expression")
    p.add_argument("file")
    p.set_defaults(func=cmd_liftable)

    p = sub.add_parser("valid", help="check |det(A - (-1)^k A^T)| = 1")
    p.add_argument("file")
    p.set_defaults(func=cmd_valid)

    p = sub.add_parser("realizable", help="is SIGMA the signature of some 3-knot")
    p.add_argument("sigma", type=int)
    p.set_defaults(func=cmd_realizable)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (HDKnotsError, CommandError, ValueError) as exc:
        print(f"hdknots {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
