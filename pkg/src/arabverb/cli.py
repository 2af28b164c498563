"""Command-line entry points.

Exit codes: 0 success, 1 domain error (unknown lemma, bad lexicon...),
2 usage error.  Results go to stdout, diagnostics to stderr.
"""

import argparse
import sys
from importlib import resources

from . import analyzer, evaluate, pipeline, rules
from .errors import ArabverbError
from .lexicon import load_codebook, load_lexicon
from .translit import to_script


def _default_lexicon():
    return str(resources.files("arabverb.data").joinpath("sample_lexicon.tsv"))


def _load_entries(path, strict=False):
    report = load_lexicon(path, strict=strict)
    for lineno, message in report.diagnostics:
        print("%s:%d: %s" % (path, lineno, message), file=sys.stderr)
    return report.entries


def _build_index(path):
    entries = _load_entries(path)
    forms, _stats = pipeline.generate_all(entries)
    return analyzer.FormIndex(forms)


def cmd_generate(args):
    ruleset = rules.load_rules(args.rules) if args.rules else None
    if args.codebook:
        load_codebook(args.codebook)  # validated; digit ops are fixed data
    entries = _load_entries(args.lexicon, strict=args.strict)
    forms, stats = pipeline.generate_all(entries, ruleset=ruleset, workers=args.workers)
    for failure in stats.failures:
        print(str(failure), file=sys.stderr)
    pipeline.write_lexicon(forms, args.out)
    if args.stats:
        pipeline.write_stats(stats, args.stats)
    print("%d lemmas -> %d forms -> %s" % (stats.lemma_count, stats.form_count, args.out))
    return 0


def cmd_inflect(args):
    index = _build_index(args.lexicon)
    tables = analyzer.inflect_verb(index, args.lemma)
    for code, rows in tables.items():
        print("# code %s" % code)
        for cell, surface in rows:
            if args.voice and cell.voice.lower() != args.voice:
                continue
            print("%s\t%s\t%s\t%s\t%s" % (cell.tag, cell.paradigm, cell.voice,
                                          surface, to_script(surface)))
    return 0


def cmd_derive(args):
    index = _build_index(args.lexicon)
    pairs = analyzer.derive_root(index, args.root)
    for lemma, label in pairs:
        print("%s\t%s\t%s" % (lemma, to_script(lemma), label))
    return 0


def cmd_analyze(args):
    index = _build_index(args.lexicon)
    hits = analyzer.analyze(index, args.form)
    if args.max:
        hits = hits[: args.max]
    for a in hits:
        print("%s\t%s\t%s\t%s\t%s\t%s\t%s" % (
            a.surface, a.lemma, a.root, a.label, a.tag, a.paradigm, a.voice))
    return 0


def cmd_evaluate(args):
    report, _diff = evaluate.evaluate_files(
        args.reference, args.generated, args.exclude, args.report)
    print("correct=%d incorrect=%d no-data=%d excluded=%d precision=%.2f%%" % (
        report.correct, report.incorrect, report.no_data, report.excluded,
        report.precision * 100.0))
    return 0


def cmd_stats(args):
    entries = _load_entries(args.lexicon)
    forms, stats = pipeline.generate_all(entries)
    for key, value in stats.as_rows():
        print("%s\t%s" % (key, value))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="arabverb",
                                     description="Arabic verbal morphology engine")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="expand a lemma lexicon into inflected forms")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--rules")
    p.add_argument("--codebook")
    p.add_argument("--out", required=True)
    p.add_argument("--stats")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("inflect", help="print the 109-form paradigm of a lemma")
    p.add_argument("--lemma", required=True)
    p.add_argument("--voice", choices=["act", "pas"])
    p.add_argument("--lexicon", default=_default_lexicon())
    p.set_defaults(func=cmd_inflect)

    p = sub.add_parser("derive", help="list the lemmas generated from a root")
    p.add_argument("--root", required=True)
    p.add_argument("--lexicon", default=_default_lexicon())
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("analyze", help="analyses of a (partially) diacritized form")
    p.add_argument("--form", required=True)
    p.add_argument("--max", type=int)
    p.add_argument("--lexicon", default=_default_lexicon())
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("evaluate", help="compare generated forms against a reference")
    p.add_argument("--reference", required=True)
    p.add_argument("--generated", required=True)
    p.add_argument("--exclude")
    p.add_argument("--report", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("stats", help="quantitative data for a lemma lexicon")
    p.add_argument("--lexicon", required=True)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArabverbError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
