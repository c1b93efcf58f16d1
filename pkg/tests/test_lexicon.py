import io

import pytest

from modtag.core import NEGATION, MenuModality
from modtag.lexicon import (LexiconError, dump_lexicon, expand_lexicon,
                            load_lexicon, lookup_triggers)

CODES = frozenset({"Modal-auxiliary-basic", "V3-I3-basic", "I-FOR"})


def load(text, known=CODES):
    return load_lexicon(io.StringIO(text), known_subcats=known)


def test_seed_lexicon_shape(seed_lexicon):
    assert len(seed_lexicon.entries) == 32
    ids = [e.entry_id for e in seed_lexicon.entries]
    assert "need/VB/Require" in ids
    assert "not/RB/Negation" in ids
    assert "hope for/VB+IN/Want" in ids
    negations = [e for e in seed_lexicon.entries if e.modality is NEGATION]
    assert {e.surface[0] for e in negations} == {"not", "n't"}


def test_seed_round_trip(seed_lexicon):
    reloaded = load_lexicon(io.StringIO(dump_lexicon(seed_lexicon)))
    assert reloaded.entries == seed_lexicon.entries


def test_basic_entry_fields():
    lex = load("hope for | VB IN | Want | 0 | I-FOR\n")
    (e,) = lex.entries
    assert e.surface == ("hope", "for")
    assert e.pos == ("VB", "IN")
    assert e.modality is MenuModality.WANT
    assert e.head_word == "hope" and e.head_pos == "VB"
    assert e.subcats == ("I-FOR",)


def test_duplicate_entries_merge_subcats():
    lex = load("try | VB | Try | 0 | V3-I3-basic\n"
               "try | VB | Try | 0 | I-FOR\n")
    (e,) = lex.entries
    assert e.subcats == ("V3-I3-basic", "I-FOR")


@pytest.mark.parametrize("line, fragment", [
    ("just-three | VB | Want", "field"),
    ("two words | VB | Want | 0 | I-FOR", "POS tags"),
    ("try | VB | Maybe | 0 | I-FOR", "Maybe"),
    ("try | VB | Try | 3 | I-FOR", "head index"),
    ("try | VB | Try | 0 | No-such-code", "No-such-code"),
    ("try | VB | Try | 0 | ", "subcat"),
])
def test_load_errors(line, fragment):
    with pytest.raises(LexiconError) as err:
        load(line + "\n")
    assert fragment.lower() in str(err.value).lower()


def test_expand_adds_inflections():
    lex = expand_lexicon(load("need | VB | Require | 0 | V3-I3-basic\n"))
    ids = {e.entry_id for e in lex.entries}
    assert ids == {"need/VB/Require", "needs/VBZ/Require",
                   "needed/VBD/Require", "needed/VBN/Require",
                   "needing/VBG/Require"}


def test_expand_multiword_inflects_head():
    lex = expand_lexicon(load("hope for | VB IN | Want | 0 | I-FOR\n"))
    surfaces = {(e.surface, e.pos) for e in lex.entries}
    assert (("hopes", "for"), ("VBZ", "IN")) in surfaces
    assert (("hoping", "for"), ("VBG", "IN")) in surfaces


def test_expand_idempotent(seed_lexicon):
    once = expand_lexicon(seed_lexicon)
    twice = expand_lexicon(once)
    assert [e.entry_id for e in twice.entries] == [e.entry_id for e in once.entries]


def test_expand_skips_non_base_pos():
    lex = expand_lexicon(load("managed | VBD | Succeed | 0 | V3-I3-basic\n",
                              known={"V3-I3-basic"}))
    assert len(lex.entries) == 1


def test_lookup_case_insensitive_words_exact_pos(expanded_lexicon):
    hits = lookup_triggers(expanded_lexicon, [("Should", "MD"), ("go", "VB")])
    assert [m.entry.entry_id for m in hits] == ["should/MD/Require"]
    # same word, wrong POS: no match
    assert lookup_triggers(expanded_lexicon, [("should", "NN")]) == []


def test_lookup_vbp_is_a_known_gap(expanded_lexicon):
    # expansion produces VBZ/VBD/VBG/VBN only, so a VBP token is missed
    assert lookup_triggers(expanded_lexicon, [("need", "VBP")]) == []


def test_lookup_overlapping_matches(expanded_lexicon):
    toks = [("He", "PRP"), ("hopes", "VBZ"), ("for", "IN"), ("it", "PRP")]
    hits = lookup_triggers(expanded_lexicon, toks)
    spans = [(m.start, m.end, m.entry.entry_id) for m in hits]
    assert spans == [(1, 2, "hopes/VBZ/Want"), (1, 3, "hopes for/VBZ+IN/Want")]
    assert all(m.head == 1 for m in hits)
