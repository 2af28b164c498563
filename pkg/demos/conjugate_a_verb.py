"""Walk one verb through the whole generation pipeline, stage by stage.

The engine builds every paradigm the same way: merge the root with its
derivational material, drop the result into a two-vowel template, add
the stem vowels, repair the deep phonotactics, attach the inflectional
affixes, and run the surface cascade.  This script makes each stage
visible for a verb of your choice.
"""

from arabverb.inflect import CELLS, inflect
from arabverb.lexicon import LexiconEntry, parse_code, resolve_class
from arabverb.rules import default_rules
from arabverb.stems import TEMPLATES, apply_ta, build_stems, insert_into_template, merge
from arabverb.translit import to_script

ROOT = "mrr"
CODE = "04H0000"  # pattern X: the st- prefix on an H template

entry = LexiconEntry(lemma="", root=ROOT, code=parse_code(CODE))
dclass = resolve_class(entry.code)
print("root %s, code %s -> pattern %s" % (ROOT, CODE, dclass.label))

merged = merge(ROOT, dclass.ops)
print("1. merged with derivational material:", merged)

skeleton = insert_into_template(merged, TEMPLATES[(dclass.template_type, "p")])
print("2. inserted into the perfective template:", skeleton)

skeleton = apply_ta(skeleton, dclass.ta_prefix)
print("3. after the ta- affix stage:", skeleton)

stems = build_stems(entry)
print("4.-5. vocalized and preprocessed stems:", stems)

rules = default_rules()
print("6.-7. inflection plus the surface cascade:")
for cell in CELLS[:6]:
    underlying = inflect(stems, cell)
    surface = rules.apply(underlying)
    print("   %-22s %-16s -> %-16s %s"
          % (cell, underlying, surface, to_script(surface)))

print("...and so on through all %d cells." % len(CELLS))
