"""Bijective codec between Arabic script and the internal transliteration.

The codec table lives in ``data/codec_table.tsv``; both directions are
pure character maps.  Unicode input is NFC-composed first, and the
canonical combining order vowel-before-shadda is rewritten to the
internal convention shadda-before-vowel, so ``to_internal`` is stable
across the orderings found in real text.
"""

import unicodedata
from importlib import resources

from .alphabet import SHADDA, VOWELS, well_formed
from .errors import MalformedInternal, UnknownCharacter


def load_codec_table(path=None):
    """Load the codec table; returns (arabic->internal, internal->arabic)."""
    if path is None:
        text = resources.files("arabverb.data").joinpath("codec_table.tsv").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    a2i, i2a = {}, {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            raise MalformedInternal("codec table line %d: need 2+ columns" % lineno)
        cp, sym = fields[0], fields[1]
        arabic = chr(int(cp, 16))
        if arabic in a2i or sym in i2a:
            raise MalformedInternal("codec table line %d: mapping not bijective" % lineno)
        a2i[arabic] = sym
        i2a[sym] = arabic
    return a2i, i2a


_A2I, _I2A = load_codec_table()


def to_internal(text):
    """Convert Arabic script to the internal transliteration.

    Raises UnknownCharacter for any codepoint outside the codec table.
    """
    text = unicodedata.normalize("NFC", text)
    out = []
    for pos, ch in enumerate(text):
        sym = _A2I.get(ch)
        if sym is None:
            raise UnknownCharacter(ch, pos)
        out.append(sym)
    # NFC places a short vowel before shadda; internally the mark
    # precedes its vowel (kat~aba, not kata~ba).
    for i in range(len(out) - 1):
        if out[i] in VOWELS and out[i + 1] == SHADDA:
            out[i], out[i + 1] = out[i + 1], out[i]
    return "".join(out)


def to_script(s):
    """Convert an internal string back to Arabic script."""
    reason = well_formed(s)
    if reason is not None:
        raise MalformedInternal(reason)
    return "".join(_I2A[ch] for ch in s)
