"""Lemma-lexicon entries: root plus 7-position morphological code.

A code has six digits and one letter, the letter in position 3 naming
the template (L or H).  Positions 1, 2 and 4 select derivational
operations from the codebook; positions 5-7 override the conjugation
vowels (0 keeps the class default).  Six-character legacy codes are
accepted and right-padded with a default vowel digit.
"""

from dataclasses import dataclass, field
from importlib import resources

from .alphabet import CONSONANTS
from .errors import BadCode, BadLexicon, NoEntries, UnknownClass
from .translit import to_internal

# The closed derivational inventory: 7 consonant insertions,
# 3 vowel lengthenings, 2 duplications.
CONSONANT_INSERTIONS = (
    ("prefix", "Á"),
    ("prefix", "n"),
    ("prefix", "st"),
    ("infix", "t", 1),
    ("infix", "n", 2),
    ("infix", "w", 2),
    ("infix", "ww", 2),
)
LENGTHENINGS = (
    ("lengthen", "A", 1),
    ("lengthen", "A", 2),
    ("append", "y"),  # surfaces as word-final -aY / pre-suffix -ay-
)
DUPLICATIONS = (
    ("dup", 2),
    ("dup", "final"),
)
OP_INVENTORY = frozenset(CONSONANT_INSERTIONS + LENGTHENINGS + DUPLICATIONS)

_VOWEL_DIGIT = {"0": None, "1": "a", "2": "i", "3": "u"}

# (d1, d2, d4, template) -> traditional pattern label.  Pattern I labels
# get their thematic vowels appended after resolution (Iau, Iii, ...).
_LABELS = {
    ("0", "0", "0", "L"): "I",
    ("0", "0", "1", "H"): "II",
    ("0", "6", "0", "H"): "III",
    ("1", "0", "0", "H"): "IV",
    ("0", "0", "4", "H"): "V",
    ("0", "6", "3", "H"): "VI",
    ("2", "0", "0", "L"): "VII",
    ("0", "1", "0", "L"): "VIII",
    ("0", "0", "2", "L"): "IX",
    ("0", "4", "0", "H"): "X",
    ("3", "0", "0", "H"): "X",
    ("0", "7", "2", "H"): "XI",
    ("0", "3", "1", "H"): "XII",
    ("0", "5", "0", "H"): "XIII",
    ("0", "2", "2", "H"): "XIV",
    ("0", "8", "0", "H"): "XV",
    ("0", "0", "0", "H"): "QI",
    ("0", "0", "3", "H"): "QII",
    ("0", "2", "0", "H"): "QIII",
    ("0", "0", "2", "H"): "QIV",
}

# Imperfective stem vowel defaults.  The first vowel is u exactly for
# II, III, IV and QI; the second is a for the ta- classes, i elsewhere.
_ISTEM_V_U = frozenset(["II", "III", "IV", "QI"])
_ISTEM_W_A = frozenset(["V", "VI", "QII"])

# Classes whose lemma begins with a repaired consonant cluster and so
# carries a prosthetic alif.
_PROSTHETIC = frozenset(
    ["VII", "VIII", "IX", "X", "XI", "XII", "XIII", "XIV", "XV", "QIII", "QIV"]
)

QUADRILITERAL = frozenset(["QI", "QII", "QIII", "QIV"])


@dataclass(frozen=True)
class MorphCode:
    d1: str
    d2: str
    template: str
    d4: str
    v5: str
    v6: str
    v7: str

    def __str__(self):
        return self.d1 + self.d2 + self.template + self.d4 + self.v5 + self.v6 + self.v7


@dataclass(frozen=True)
class DerivClass:
    label: str
    ops: tuple
    template_type: str
    ta_prefix: bool
    p_vowels: tuple  # (V, W) of the active perfective stem
    i_vowels: tuple  # (V, W) of the active imperfective stem
    prosthetic: bool


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str  # internal, fully diacritized 3SM perfective active
    root: str  # 3-4 radical symbols
    code: MorphCode
    gloss: str = ""
    line: int = 0

    def key(self):
        return (self.lemma, str(self.code))


def parse_code(text):
    """Parse a 6- or 7-character lexical code."""
    if len(text) == 6:
        text = text + "0"
    if len(text) != 7:
        raise BadCode("code %r must have 6 or 7 characters" % text)
    d1, d2, tpl, d4, v5, v6, v7 = text
    if tpl not in ("L", "H"):
        raise BadCode("position 3 of %r must be L or H" % text)
    if d1 not in "0123":
        raise BadCode("digit 1 of %r out of range" % text)
    if d2 not in "012345678":
        raise BadCode("digit 2 of %r out of range" % text)
    if d4 not in "01234":
        raise BadCode("digit 4 of %r out of range" % text)
    for v in (v5, v6, v7):
        if v not in "0123":
            raise BadCode("vowel digit of %r out of range" % text)
    return MorphCode(d1, d2, tpl, d4, v5, v6, v7)


def format_code(code):
    return str(code)


def load_codebook(path=None):
    """Digit -> op-sequence map from the codebook file."""
    if path is None:
        text = resources.files("arabverb.data").joinpath("codebook.tsv").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 3:
            raise BadLexicon("codebook line %d: need 3+ columns" % lineno)
        position, digit, names = fields[0], fields[1], fields[2]
        params = fields[3] if len(fields) > 3 else ""
        ops = _parse_ops(names, params, lineno)
        table[(position, digit)] = ops
    return table


def _parse_ops(names, params, lineno):
    if names == "none":
        return ()
    ops = []
    plist = params.split(";")
    for i, name in enumerate(names.split(";")):
        param = plist[i] if i < len(plist) else ""
        if name == "prefix":
            ops.append(("prefix", param))
        elif name == "infix":
            seg, pos = param.split("@")
            ops.append(("infix", seg, int(pos)))
        elif name == "lengthen":
            seg, pos = param.split("@")
            ops.append(("lengthen", seg, int(pos)))
        elif name == "append":
            ops.append(("append", param))
        elif name == "dup":
            ops.append(("dup", int(param) if param.isdigit() else param))
        elif name == "ta":
            ops.append(("ta",))
        else:
            raise BadLexicon("codebook line %d: unknown op %r" % (lineno, name))
    for op in ops:
        if op != ("ta",) and op not in OP_INVENTORY:
            raise BadLexicon("codebook line %d: op %r not in inventory" % (lineno, op))
    return tuple(ops)


_CODEBOOK = load_codebook()


def resolve_class(code, codebook=None):
    """Resolve a parsed code against the codebook into a DerivClass."""
    table = codebook if codebook is not None else _CODEBOOK
    key = (code.d1, code.d2, code.d4, code.template)
    label = _LABELS.get(key[:3] + (code.template,))
    if label is None:
        raise UnknownClass("no codebook row for digits %s%s_%s with template %s"
                           % (code.d1, code.d2, code.d4, code.template))
    ops = []
    ta = False
    for pos, digit in (("1", code.d1), ("2", code.d2), ("4", code.d4)):
        for op in table.get((pos, digit), ()):
            if op == ("ta",):
                ta = True
            else:
                ops.append(op)
    # Ordered application: prefixes, then infixes/lengthenings, then
    # duplications (duplication indices refer to root positions).
    rank = {"prefix": 0, "infix": 1, "lengthen": 1, "append": 2, "dup": 3}
    ops.sort(key=lambda op: rank[op[0]])

    p_w = _VOWEL_DIGIT[code.v5] or "a"
    i_v = _VOWEL_DIGIT[code.v6] or ("u" if label in _ISTEM_V_U else "a")
    if _VOWEL_DIGIT[code.v7]:
        i_w = _VOWEL_DIGIT[code.v7]
    elif label == "I":
        i_w = "u"
    elif label in _ISTEM_W_A:
        i_w = "a"
    else:
        i_w = "i"
    if label == "I":
        label = "I" + p_w + i_w
    return DerivClass(
        label=label,
        ops=tuple(ops),
        template_type=code.template,
        ta_prefix=ta,
        p_vowels=("a", p_w),
        i_vowels=(i_v, i_w),
        prosthetic=label in _PROSTHETIC,
    )


def parse_root(text):
    root = text.strip()
    if len(root) not in (3, 4):
        raise BadLexicon("root %r must have 3 or 4 radicals" % text)
    for ch in root:
        if ch not in CONSONANTS:
            raise BadLexicon("root %r contains non-consonant %r" % (text, ch))
    return root


@dataclass
class LoadReport:
    entries: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)  # (lineno, message)


def load_lexicon(path, strict=False):
    """Load a lemma lexicon TSV: lemma-arabic, root, code, gloss.

    Bad lines are reported, not fatal; the load fails only when no
    valid entry remains.  With strict=True each entry is regenerated
    from (root, code) and must reproduce its lemma exactly.
    """
    report = LoadReport()
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) < 3:
                report.diagnostics.append((lineno, "need at least 3 tab-separated fields"))
                continue
            try:
                lemma = to_internal(fields[0].strip())
                root = parse_root(fields[1])
                code = parse_code(fields[2].strip())
                resolve_class(code)
            except Exception as exc:
                report.diagnostics.append((lineno, str(exc)))
                continue
            gloss = fields[3].strip() if len(fields) > 3 else ""
            entry = LexiconEntry(lemma=lemma, root=root, code=code, gloss=gloss, line=lineno)
            if entry.key() in seen:
                report.diagnostics.append((lineno, "duplicate (lemma, code) pair"))
                continue
            seen.add(entry.key())
            report.entries.append(entry)
    if not report.entries:
        raise NoEntries("no valid entries in %s" % path)
    if strict:
        from .pipeline import regenerate_lemma  # deferred to avoid a cycle

        kept = []
        for entry in report.entries:
            regenerated = regenerate_lemma(entry)
            if regenerated != entry.lemma:
                report.diagnostics.append(
                    (entry.line, "lemma %s does not regenerate (got %s)" % (entry.lemma, regenerated))
                )
            else:
                kept.append(entry)
        report.entries = kept
        if not report.entries:
            raise NoEntries("no entry survived strict validation in %s" % path)
    return report
