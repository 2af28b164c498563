"""Evaluation harness: compare a generated lexicon against a reference.

Both files use the normalized TSV schema below; a per-key diff is
written next to the report.  "Correct" means exact surface equality
after shared Unicode-level normalization (the internal transliteration
is already canonical).
"""

from dataclasses import dataclass

# Normalized comparison schema, one form per row:
#   lemma (internal) <TAB> tag <TAB> paradigm <TAB> voice <TAB> surface (internal)
# Reference lexicons converted from other analyzers must be mapped to
# these five columns; multiple rows may share a key when the reference
# offers variant surfaces.
NORMALIZED_COLUMNS = ("lemma", "tag", "paradigm", "voice", "surface")


def convert_reference(rows):
    """Converter stub for foreign reference lexicons.

    Tag-set mapping from other analyzers is out of scope here; supply
    rows already shaped as NORMALIZED_COLUMNS.
    """
    raise NotImplementedError(
        "normalize the reference externally to the %s schema" % (NORMALIZED_COLUMNS,)
    )


@dataclass
class EvalReport:
    correct: int = 0
    incorrect: int = 0
    no_data: int = 0
    excluded: int = 0

    @property
    def total(self):
        return self.correct + self.incorrect + self.no_data

    @property
    def precision(self):
        evaluable = self.correct + self.incorrect
        return self.correct / evaluable if evaluable else 0.0

    def check(self):
        assert self.correct >= 0 and self.incorrect >= 0 and self.no_data >= 0
        assert self.correct + self.incorrect + self.no_data == self.total
        assert 0.0 <= self.precision <= 1.0
        return self


def load_normalized(path):
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise ValueError("%s line %d: expected 5 columns" % (path, lineno))
            rows.append(tuple(fields))
    return rows


def load_exclusions(path):
    keys = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) >= 4:
                keys.add(tuple(fields[:4]))
    return keys


def evaluate(reference_rows, generated_rows, exclusions=None):
    """Per-form verdicts; returns (EvalReport, diff rows).

    A generated form is correct iff some reference row with the same
    (lemma, tag, paradigm, voice) key carries the same surface; keys
    absent from the reference count as no-data.
    """
    exclusions = exclusions or set()
    reference = {}
    for lemma, tag, paradigm, voice, surface in reference_rows:
        reference.setdefault((lemma, tag, paradigm, voice), set()).add(surface)
    report = EvalReport()
    diff = []
    seen = set()
    for row in generated_rows:
        if row in seen:
            continue
        seen.add(row)
        lemma, tag, paradigm, voice, surface = row
        key = (lemma, tag, paradigm, voice)
        if key in exclusions:
            report.excluded += 1
            continue
        expected = reference.get(key)
        if expected is None:
            report.no_data += 1
            verdict = "no-data"
        elif surface in expected:
            report.correct += 1
            verdict = "correct"
        else:
            report.incorrect += 1
            verdict = "incorrect"
            diff.append(key + (surface, "|".join(sorted(expected)), verdict))
            continue
        if verdict != "correct":
            diff.append(key + (surface, "", verdict))
    report.check()
    return report, diff


def forms_to_normalized(forms):
    """Inflected forms -> normalized comparison rows."""
    return [
        (f.lemma, f.cell.tag, f.cell.paradigm, f.cell.voice, f.surface)
        for f in forms
    ]


def evaluate_files(reference_path, generated_path, exclude_path=None, report_path=None):
    reference = load_normalized(reference_path)
    generated = load_normalized(generated_path)
    exclusions = load_exclusions(exclude_path) if exclude_path else set()
    report, diff = evaluate(reference, generated, exclusions)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write("correct\t%d\n" % report.correct)
            fh.write("incorrect\t%d\n" % report.incorrect)
            fh.write("no_data\t%d\n" % report.no_data)
            fh.write("excluded\t%d\n" % report.excluded)
            fh.write("total\t%d\n" % report.total)
            fh.write("precision\t%.4f\n" % (report.precision * 100.0))
        with open(report_path + ".diff", "w", encoding="utf-8") as fh:
            for row in diff:
                fh.write("\t".join(row) + "\n")
    return report, diff
