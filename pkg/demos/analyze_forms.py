"""Analysis by lookup: full, partial, and bare-skeleton queries.

The analyzer never parses a form; it generates the whole inflected
lexicon once and answers queries against the index, accepting any
level of diacritization.
"""

from importlib import resources

from arabverb.analyzer import FormIndex, analyze, derive_root, inflect_verb
from arabverb.lexicon import load_lexicon
from arabverb.pipeline import generate_all
from arabverb.translit import to_script

lexicon_path = resources.files("arabverb.data").joinpath("gold_lexicon.tsv")
entries = load_lexicon(str(lexicon_path)).entries
forms, _stats = generate_all(entries)
index = FormIndex(forms)
print("indexed %d verbs -> %d distinct analyses" % (len(entries), len(index)))

for query in ("كَتَبَ", "كتب", "يَقُولُ", "قيل"):
    hits = analyze(index, query)
    print("\nanalyses of %s (%d):" % (query, len(hits)))
    for a in hits[:8]:
        print("  %-14s %-10s %s %s %s  (%s)"
              % (a.surface, a.lemma, a.tag, a.paradigm, a.voice, a.label))
    if len(hits) > 8:
        print("  ... %d more" % (len(hits) - 8))

print("\nlemmas from the root qwl:")
for lemma, label in derive_root(index, "qwl"):
    print("  %-12s %-8s %s" % (lemma, label, to_script(lemma)))

print("\nthe imperative block of qaAla:")
for code, rows in inflect_verb(index, "قَالَ").items():
    for cell, surface in rows:
        if cell.paradigm == "IMPV":
            print("  %s  %-8s %s" % (cell, surface, to_script(surface)))
