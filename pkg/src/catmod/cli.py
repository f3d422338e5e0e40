"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for input errors (unreadable files, malformed documents, violated
preconditions, bad usage).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catgroup import (
    CatGroup,
    CatGroupFunctor,
    coherence_diagnostic,
    special_iso_closure,
    validate_catgroup,
    validate_functor,
)
from .cgroup import CGroup, special_closure, validate_cgroup
from .crossmod import (
    CCrossedModule,
    CrossedModuleMorphism,
    validate_cm_morphism,
    validate_crossed_module,
)
from .equivalence import verify_LT, verify_TL, verify_equivalence
from .errors import CatmodError, ParseError
from .functors import L0, T0
from .toolkit import (
    cyclic_table,
    gen_brown_spencer,
    gen_delooping,
    gen_discrete,
    gen_skeletal_cocycle,
    load_corpus,
    parse,
    serialize,
    standard_cocycle,
    write_corpus,
)


def _read_doc(path: str):
    return parse(Path(path).read_text(encoding="utf-8"))


def _write_report(path: str | None, payload: dict, name: str) -> None:
    if path:
        Path(path).write_text(serialize(payload, name=name), encoding="utf-8")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_validate(args: argparse.Namespace) -> int:
    obj = _read_doc(args.file)
    if isinstance(obj, CGroup):
        report = validate_cgroup(obj)
    elif isinstance(obj, CCrossedModule):
        report = validate_crossed_module(obj)
    elif isinstance(obj, CatGroup):
        report = validate_catgroup(obj, max_arrows=args.max_arrows or 64)
    elif isinstance(obj, CatGroupFunctor):
        report = validate_functor(obj)
    elif isinstance(obj, CrossedModuleMorphism):
        report = validate_cm_morphism(obj)
    else:
        raise ParseError("report documents cannot be validated")
    print(report)
    _write_report(args.report, report.to_payload(), f"validate {Path(args.file).name}")
    return 0 if report.ok else 1


def _cmd_closure(args: argparse.Namespace) -> int:
    obj = _read_doc(args.file)
    if isinstance(obj, CGroup):
        for a, b in sorted(special_closure(obj)):
            print(f"{a} ~ {b}")
        return 0
    if isinstance(obj, CatGroup):
        for f in sorted(special_iso_closure(obj)):
            print(f)
        for site, isos in sorted(coherence_diagnostic(obj).items()):
            if len(isos) > 1:
                print(f"multiple special isomorphisms at {site}: {', '.join(isos)}")
        return 0
    raise ParseError("closure needs a cgroup or catgroup document")


def _cmd_functor(args: argparse.Namespace) -> int:
    obj = _read_doc(args.file)
    if args.direction == "L":
        if not isinstance(obj, CatGroup):
            raise ParseError("functor L needs a catgroup document")
        _emit(serialize(L0(obj)), args.out)
        return 0
    if not isinstance(obj, CCrossedModule):
        raise ParseError("functor T needs a crossed_module document")
    tcat = T0(obj, max_arrows=args.max_arrows or 10000)
    _emit(serialize(tcat.cat), args.out)
    return 0


def _cmd_roundtrip(args: argparse.Namespace) -> int:
    obj = _read_doc(args.file)
    if args.direction == "TL":
        if not isinstance(obj, CatGroup):
            raise ParseError("roundtrip TL needs a catgroup document")
        pre = validate_catgroup(obj, max_arrows=args.max_arrows or 64)
        if not pre.ok:
            print(pre)
            _write_report(args.report, pre.to_payload(), "roundtrip TL")
            return 1
        module = L0(obj)
        tcat = T0(module, max_arrows=args.max_arrows or 10000)
        report = verify_TL(obj, tcat)
    else:
        if not isinstance(obj, CCrossedModule):
            raise ParseError("roundtrip LT needs a crossed_module document")
        pre = validate_crossed_module(obj)
        if not pre.ok:
            print(pre)
            _write_report(args.report, pre.to_payload(), "roundtrip LT")
            return 1
        tcat = T0(obj, max_arrows=args.max_arrows or 10000)
        report = verify_LT(obj, tcat)
    print(report)
    _write_report(args.report, report.to_payload(), f"roundtrip {args.direction}")
    return 0 if report.ok else 1


def _entry_ok(e: dict) -> bool:
    return bool(e.get("validated", True)) and all(ch["passed"] for ch in e["checks"])


def _cmd_equivalence(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus_dir)
    summary = verify_equivalence(corpus, jobs=args.jobs)
    for section in ("instances", "modules", "functors", "morphisms"):
        for e in summary[section]:
            status = "pass" if _entry_ok(e) else "FAIL"
            print(f"[{status}] {e['kind']} {e['name']}")
            for ch in e["checks"]:
                if not ch["passed"]:
                    print(f"    fail {ch['name']}: {ch['witness']}")
    for ch in summary["laws"]:
        status = "pass" if ch["passed"] else "FAIL"
        print(f"[{status}] law {ch['name']}")
        if not ch["passed"]:
            print(f"    {ch['witness']}")
    print(f"equivalence: {'pass' if summary['ok'] else 'FAIL'}")
    _write_report(args.report, summary, "equivalence")
    return 0 if summary["ok"] else 1


def _cmd_generate(args: argparse.Namespace) -> int:
    n = args.n
    if args.kind == "corpus":
        if not args.out:
            raise ParseError("generate corpus needs -o DIRECTORY")
        for fname in write_corpus(args.out):
            print(fname)
        return 0
    if args.kind == "discrete":
        obj = gen_discrete(*cyclic_table(n), name=f"DZ{n}")
    elif args.kind == "delooping":
        obj = gen_delooping(*cyclic_table(n), name=f"BZ{n}")
    elif args.kind == "skeletal":
        elements, add = cyclic_table(n)
        obj = gen_skeletal_cocycle(
            elements, add, elements, add, standard_cocycle(n, args.value), name=f"SkZ{n}v{args.value % n}"
        )
    else:
        t_elements, t_add = cyclic_table(n)
        g_elements, g_add = cyclic_table(2 * n)
        obj = gen_brown_spencer(
            t_elements,
            t_add,
            g_elements,
            g_add,
            boundary={str(t): str((2 * t) % (2 * n)) for t in range(n)},
            action={(g, t): t for g in g_elements for t in t_elements},
            name=f"BS{n}",
        )
    _emit(serialize(obj), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catmod",
        description="Finite categorical groups, crossed modules of c-groups, and the equivalence between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run the validator for a structure document")
    p.add_argument("file")
    p.add_argument("--max-arrows", type=int, default=None)
    p.add_argument("--report", default=None)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("closure", help="print the special part of a structure")
    p.add_argument("file")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("functor", help="apply a direction of the equivalence")
    p.add_argument("direction", choices=["L", "T"])
    p.add_argument("file")
    p.add_argument("--max-arrows", type=int, default=None)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_functor)

    p = sub.add_parser("roundtrip", help="verify one composite of the equivalence")
    p.add_argument("direction", choices=["TL", "LT"])
    p.add_argument("file")
    p.add_argument("--max-arrows", type=int, default=None)
    p.add_argument("--report", default=None)
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("equivalence", help="run the full suite over a corpus directory")
    p.add_argument("corpus_dir")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", default=None)
    p.set_defaults(func=_cmd_equivalence)

    p = sub.add_parser("generate", help="write a generated instance or the bundled corpus")
    p.add_argument("kind", choices=["discrete", "delooping", "skeletal", "brown_spencer", "corpus"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--value", type=int, default=1)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CatmodError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
