"""The evaluation harness: exact-match precision against a reference.

A self-comparison scores 100%; corrupting one surface drops exactly one
form into the incorrect column, and the report arithmetic always
balances.
"""

from importlib import resources

from arabverb.evaluate import evaluate, forms_to_normalized
from arabverb.lexicon import load_lexicon
from arabverb.pipeline import generate_all

lexicon_path = resources.files("arabverb.data").joinpath("sample_lexicon.tsv")
entries = load_lexicon(str(lexicon_path)).entries
forms, _stats = generate_all(entries)
rows = forms_to_normalized(forms)

report, _diff = evaluate(rows, rows)
print("self comparison: correct=%d incorrect=%d no-data=%d precision=%.2f%%"
      % (report.correct, report.incorrect, report.no_data, report.precision * 100))

mutated = list(rows)
lemma, tag, paradigm, voice, surface = mutated[0]
mutated[0] = (lemma, tag, paradigm, voice, surface + "u")
report, diff = evaluate(rows, mutated)
print("one corrupted row: correct=%d incorrect=%d precision=%.4f%%"
      % (report.correct, report.incorrect, report.precision * 100))
print("diff entry:", diff[0])
