import io

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from fixtures import (CRICKET_TREE, CRICKET_TREE_TAGS, GOLDEN_1_INLINE,
                      GOLDEN_1_TOKENS, GOLDEN_2_EXTRA, GOLDEN_2_MISSING,
                      GOLDEN_2_TAGS, GOLDEN_2_TOKENS, NEED_FIXTURES)
from modtag.core import ModalityTag, Role, MenuModality, NEGATION
from modtag.taggers import (StringModalityTagger, TargetlessTriggerWarning,
                            TreeModalityTagger, compose_negation,
                            format_standoff, format_tagged_line, parse_inline,
                            parse_standoff, parse_tagged_line, render_inline,
                            sentence_standoff_rows, tag_string, tag_tree,
                            tag_tree_with_records)
from modtag.treebank import (flatten, parse_sexpr, preterminals, print_sexpr,
                             strip_tags, yield_tokens)


def tag_line(line, lex):
    return compose_negation(tag_string(parse_tagged_line(line), lex))


def tag_names(sentence):
    return {(i, t.name) for i, tok in enumerate(sentence.tokens) for t in tok.tags}


# ------------------------------------------------------------ tokenization

def test_parse_tagged_line():
    assert parse_tagged_line("He/PRP goes/VBZ ./.") == [
        ("He", "PRP"), ("goes", "VBZ"), (".", ".")]
    # words may contain slashes; the POS is after the last one
    assert parse_tagged_line("a/b/NN") == [("a/b", "NN")]
    with pytest.raises(ValueError) as err:
        parse_tagged_line("broken", 17)
    assert "17" in str(err.value) and "broken" in str(err.value)


def test_format_tagged_line_round_trip():
    line = "He/PRP goes/VBZ ./."
    assert format_tagged_line(parse_tagged_line(line)) == line


# ------------------------------------------------------------- string side

def test_golden_sentence_one(expanded_lexicon):
    out = render_inline(tag_line(GOLDEN_1_TOKENS, expanded_lexicon))
    assert out == GOLDEN_1_INLINE


def test_golden_sentence_two_deviations(expanded_lexicon):
    got = tag_names(tag_line(GOLDEN_2_TOKENS, expanded_lexicon))
    assert got - GOLDEN_2_TAGS == GOLDEN_2_EXTRA
    assert GOLDEN_2_TAGS - got == GOLDEN_2_MISSING


def test_target_is_next_nonauxiliary_verb(expanded_lexicon):
    s = tag_string(parse_tagged_line("It/PRP should/MD be/VB taken/VBN ./."),
                   expanded_lexicon)
    assert tag_names(s) == {(1, "TrigRequire"), (3, "TargRequire")}


def test_target_falls_back_to_auxiliary(expanded_lexicon):
    s = tag_string(parse_tagged_line("He/PRP can/MD be/VB kind/JJ ./."),
                   expanded_lexicon)
    assert tag_names(s) == {(1, "TrigAble"), (2, "TargAble")}


def test_target_scan_stops_at_clause_boundary(expanded_lexicon):
    line = "We/PRP can/MD ,/, he/PRP said/VBD ,/, win/VB ./."
    with pytest.warns(TargetlessTriggerWarning):
        s = tag_string(parse_tagged_line(line), expanded_lexicon)
    assert tag_names(s) == {(1, "TrigAble")}


def test_targetless_trigger_warns(expanded_lexicon):
    with pytest.warns(TargetlessTriggerWarning):
        s = tag_string(parse_tagged_line("We/PRP need/VB a/DT hero/NN ./."),
                       expanded_lexicon)
    assert tag_names(s) == {(1, "TrigRequire")}


def test_multiword_trigger(expanded_lexicon):
    s = tag_string(parse_tagged_line("He/PRP hopes/VBZ for/IN winning/VBG ./."),
                   expanded_lexicon)
    assert (1, "TrigWant") in tag_names(s)
    assert (3, "TargWant") in tag_names(s)


def test_tag_string_preserves_tokens(expanded_lexicon):
    toks = parse_tagged_line(GOLDEN_2_TOKENS)
    s = tag_line(GOLDEN_2_TOKENS, expanded_lexicon)
    assert [(t.word, t.pos) for t in s.tokens] == toks


def test_trigger_tags_have_lexicon_witness(expanded_lexicon):
    s = tag_string(parse_tagged_line(GOLDEN_1_TOKENS), expanded_lexicon)
    for tok in s.tokens:
        for tag, source in zip(tok.tags, tok.sources):
            if tag.role is Role.TRIGGER:
                surface = source.split("/")[0].split()
                assert tok.word.lower() in surface


# ----------------------------------------------------------- composition

def test_compose_rewrites_associated_negation(expanded_lexicon):
    s = tag_line("We/PRP can/MD not/RB go/VB ./.", expanded_lexicon)
    assert tag_names(s) == {(1, "TrigAble"), (2, "TrigNegation"),
                            (3, "TargNOTAble")}


def test_compose_require_becomes_permit(expanded_lexicon):
    s = tag_line("You/PRP must/MD not/RB go/VB ./.", expanded_lexicon)
    assert tag_names(s) == {(1, "TrigRequire"), (2, "TrigNegation"),
                            (3, "TargPermit")}


def test_unassociated_negation_keeps_own_target(expanded_lexicon):
    s = tag_line("He/PRP did/VBD not/RB go/VB ./.", expanded_lexicon)
    assert tag_names(s) == {(2, "TrigNegation"), (3, "TargNegation")}


def test_compose_without_negation_is_identity(expanded_lexicon):
    raw = tag_string(parse_tagged_line(GOLDEN_1_TOKENS.replace("not/RB ", "")),
                     expanded_lexicon)
    assert compose_negation(raw) == raw


def test_compose_never_changes_words(expanded_lexicon):
    raw = tag_string(parse_tagged_line(GOLDEN_1_TOKENS), expanded_lexicon)
    composed = compose_negation(raw)
    assert len(composed.tokens) == len(raw.tokens)
    assert [(t.word, t.pos) for t in composed.tokens] == \
        [(t.word, t.pos) for t in raw.tokens]


# ------------------------------------------------------------- tree side

def cricket_tree_tags(rules):
    tagged, _ = tag_tree_with_records(flatten(parse_sexpr(CRICKET_TREE)), rules)
    return {p.word: p.tags for p in preterminals(tagged) if p.tags}


def test_cricket_tree_tagging(compiled):
    assert cricket_tree_tags(compiled.rules) == CRICKET_TREE_TAGS


def test_need_rules_per_code(compiled):
    for code, source, expected in NEED_FIXTURES:
        rules = [r for r in compiled.rules
                 if "entry=need/VB/" in r.provenance
                 and "code=%s;" % code in r.provenance]
        assert rules, code
        tagged = tag_tree(flatten(parse_sexpr(source)), rules)
        got = {p.word: set(p.tags) for p in preterminals(tagged) if p.tags}
        assert got == expected, code


def test_tag_tree_preserves_shape(compiled):
    flat = flatten(parse_sexpr(CRICKET_TREE))
    tagged = tag_tree(flat, compiled.rules)
    assert strip_tags(tagged) == strip_tags(flat)


def test_tag_tree_empty_rules():
    t = flatten(parse_sexpr(CRICKET_TREE))
    assert tag_tree(t, []) == t


def test_tree_records_use_token_indices(compiled):
    tree = flatten(parse_sexpr(NEED_FIXTURES[3][1]))   # We need a Sir Sayyed
    _, records = tag_tree_with_records(tree, compiled.rules)
    words = [w for w, _pos in yield_tokens(tree)]
    by_word = {(words[idx], tag) for idx, tag, _rule in records}
    assert ("need", "TrigRequire") in by_word
    assert ("Sayyed", "TargRequire") in by_word


# ------------------------------------------------------------ wire formats

def test_render_inline_untagged_is_plain_text(expanded_lexicon):
    line = "The/DT dog/NN barked/VBD ./."
    s = tag_string(parse_tagged_line(line), expanded_lexicon)
    assert render_inline(s) == "The dog barked ."


def test_parse_inline_inverts_render(expanded_lexicon):
    s = tag_line(GOLDEN_1_TOKENS, expanded_lexicon)
    recovered = parse_inline(render_inline(s))
    assert recovered == [(t.word, t.tags) for t in s.tokens]


def test_parse_inline_multi_tag_group():
    got = parse_inline("on <TargAble TrigSucceed TargNegation reach> it")
    assert got == [
        ("on", ()),
        ("reach", (ModalityTag(Role.TARGET, MenuModality.ABLE),
                   ModalityTag(Role.TRIGGER, MenuModality.SUCCEED),
                   ModalityTag(Role.TARGET, NEGATION))),
        ("it", ()),
    ]


def test_parse_inline_errors():
    with pytest.raises(ValueError):
        parse_inline("<TrigAble can")          # unterminated
    with pytest.raises(ValueError):
        parse_inline("<TrigBogus can>")        # unknown tag


def test_standoff_round_trip(expanded_lexicon):
    s = tag_line(GOLDEN_1_TOKENS, expanded_lexicon)
    rows = sentence_standoff_rows(s, 7)
    text = format_standoff(rows)
    assert parse_standoff(io.StringIO(text)) == rows
    assert all(r[0] == 7 for r in rows)


def test_parse_standoff_rejects_bad_rows():
    with pytest.raises(ValueError):
        parse_standoff("1\t0\tTrigAble\n")            # missing field
    with pytest.raises(ValueError):
        parse_standoff("1\t0\tTrigBogus\tsrc\n")       # unknown tag


# -------------------------------------------------------------- estimators

def test_string_estimator_params_and_clone():
    est = StringModalityTagger(expand=False, compose=False)
    assert est.get_params() == {"lexicon": None, "expand": False,
                                "compose": False}
    cloned = clone(est)
    assert cloned.get_params() == est.get_params()


def test_string_estimator_requires_fit():
    with pytest.raises(NotFittedError):
        StringModalityTagger().transform([GOLDEN_1_TOKENS])


def test_string_estimator_golden():
    est = StringModalityTagger().fit()
    (s,) = est.transform([GOLDEN_1_TOKENS])
    assert render_inline(s) == GOLDEN_1_INLINE


def test_string_estimator_accepts_token_pairs():
    est = StringModalityTagger().fit()
    (s,) = est.transform([[("We", "PRP"), ("can", "MD"), ("go", "VB")]])
    assert {t.name for tok in s.tokens for t in tok.tags} == \
        {"TrigAble", "TargAble"}


def test_tree_estimator_golden():
    est = TreeModalityTagger().fit()
    (tagged,) = est.transform([CRICKET_TREE])
    got = {p.word: p.tags for p in preterminals(tagged) if p.tags}
    assert got == CRICKET_TREE_TAGS


def test_tree_estimator_accepts_prebuilt_rules(compiled):
    est = TreeModalityTagger(rules=compiled.rules).fit()
    (tagged,) = est.transform([parse_sexpr(CRICKET_TREE)])
    assert {p.word: p.tags for p in preterminals(tagged) if p.tags} == \
        CRICKET_TREE_TAGS


def test_tree_estimator_no_flatten():
    est = TreeModalityTagger(flatten=False).fit()
    flat_first = TreeModalityTagger().fit()
    already_flat = print_sexpr(flatten(parse_sexpr(CRICKET_TREE)))
    (a,) = est.transform([already_flat])
    (b,) = flat_first.transform([already_flat])
    assert a == b
