"""English inflection for lexicon expansion.

Verbs get a third-person singular, past, gerund learned past participle;
nouns get a plural.  Irregular pasts and participles come from the bundled
table; everything else uses the regular suffix rules below.  The doubling
heuristic is the usual single-syllable approximation (stop consonant after
a single vowel), which is right for the lexicon's lemmas but will double
some polysyllabic stems with unstressed finals.
"""

from __future__ import annotations

from importlib import resources

VOWELS = "aeiou"

# Consonants that never double before -ed/-ing under the heuristic.
_NO_DOUBLE = set("hrlwxy")


def _load_irregular_verbs() -> dict[str, tuple[str, str]]:
    table = {}
    path = resources.files("modtag") / "data" / "irregular_verbs.txt"
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        base, past, participle = (f.strip() for f in line.split("|"))
        table[base] = (past, participle)
    return table


IRREGULAR_VERBS = _load_irregular_verbs()

# 3sg forms the suffix rules get wrong.
_IRREGULAR_3SG = {"be": "is", "have": "has"}


def _doubles_final(word: str) -> bool:
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    return c not in VOWELS and c not in _NO_DOUBLE and b in VOWELS and a not in VOWELS


def _s_form(word: str) -> str:
    if word.endswith(("s", "x", "z", "ch", "sh", "o")):
        return word + "es"
    if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        return word[:-1] + "ies"
    return word + "s"


def regular_past(word: str) -> str:
    if word.endswith("e"):
        return word + "d"
    if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        return word[:-1] + "ied"
    if _doubles_final(word):
        return word + word[-1] + "ed"
    return word + "ed"


def gerund(word: str) -> str:
    if word.endswith("ie"):
        return word[:-2] + "ying"
    if word.endswith("e") and len(word) > 2 and not word.endswith(("ee", "oe", "ye")):
        return word[:-1] + "ing"
    if _doubles_final(word):
        return word + word[-1] + "ing"
    return word + "ing"


def verb_forms(lemma: str) -> dict[str, str]:
    """Inflected forms of a base verb, keyed by the POS tag they carry."""
    past, participle = IRREGULAR_VERBS.get(lemma, (None, None))
    if past is None:
        past = participle = regular_past(lemma)
    return {
        "VB": lemma,
        "VBZ": _IRREGULAR_3SG.get(lemma) or _s_form(lemma),
        "VBD": past,
        "VBG": gerund(lemma),
        "VBN": participle,
    }


def noun_forms(lemma: str) -> dict[str, str]:
    return {"NN": lemma, "NNS": _s_form(lemma)}


def inflect_lemma(lemma: str, pos: str) -> set[str]:
    """All surface forms of `lemma` under base tag `pos`.

    VB lemmas yield the base, 3sg, past, gerund and (when distinct) past
    participle; NN lemmas yield singular and plural; any other POS is not
    inflectable and yields just the lemma.
    """
    if pos == "VB":
        return set(verb_forms(lemma).values())
    if pos == "NN":
        return set(noun_forms(lemma).values())
    return {lemma}
