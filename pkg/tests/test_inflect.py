import pytest

from modtag.inflect import (IRREGULAR_VERBS, inflect_lemma, noun_forms,
                            verb_forms)


@pytest.mark.parametrize("lemma, forms", [
    ("walk", {"VB": "walk", "VBZ": "walks", "VBD": "walked",
              "VBG": "walking", "VBN": "walked"}),
    ("try", {"VB": "try", "VBZ": "tries", "VBD": "tried",
             "VBG": "trying", "VBN": "tried"}),
    ("manage", {"VB": "manage", "VBZ": "manages", "VBD": "managed",
                "VBG": "managing", "VBN": "managed"}),
    ("stop", {"VB": "stop", "VBZ": "stops", "VBD": "stopped",
              "VBG": "stopping", "VBN": "stopped"}),
    ("play", {"VB": "play", "VBZ": "plays", "VBD": "played",
              "VBG": "playing", "VBN": "played"}),
    ("fix", {"VB": "fix", "VBZ": "fixes", "VBD": "fixed",
             "VBG": "fixing", "VBN": "fixed"}),
    ("reach", {"VB": "reach", "VBZ": "reaches", "VBD": "reached",
               "VBG": "reaching", "VBN": "reached"}),
    ("veto", {"VB": "veto", "VBZ": "vetoes", "VBD": "vetoed",
              "VBG": "vetoing", "VBN": "vetoed"}),
    ("agree", {"VB": "agree", "VBZ": "agrees", "VBD": "agreed",
               "VBG": "agreeing", "VBN": "agreed"}),
    ("die", {"VB": "die", "VBZ": "dies", "VBD": "died",
             "VBG": "dying", "VBN": "died"}),
])
def test_regular_verbs(lemma, forms):
    assert verb_forms(lemma) == forms


@pytest.mark.parametrize("lemma, vbz, vbd, vbn, vbg", [
    ("be", "is", "was", "been", "being"),
    ("have", "has", "had", "had", "having"),
    ("go", "goes", "went", "gone", "going"),
    ("take", "takes", "took", "taken", "taking"),
    ("write", "writes", "wrote", "written", "writing"),
])
def test_irregular_verbs(lemma, vbz, vbd, vbn, vbg):
    forms = verb_forms(lemma)
    assert forms["VBZ"] == vbz
    assert forms["VBD"] == vbd
    assert forms["VBN"] == vbn
    assert forms["VBG"] == vbg


def test_irregular_table_loaded():
    assert len(IRREGULAR_VERBS) > 150
    assert IRREGULAR_VERBS["see"] == ("saw", "seen")


def test_noun_forms():
    assert noun_forms("match") == {"NN": "match", "NNS": "matches"}
    assert noun_forms("city") == {"NN": "city", "NNS": "cities"}
    assert noun_forms("boy") == {"NN": "boy", "NNS": "boys"}


def test_inflect_lemma():
    assert inflect_lemma("need", "VB") == {"need", "needs", "needed", "needing"}
    assert inflect_lemma("desire", "NN") == {"desire", "desires"}
    # non-base parts of speech are left alone
    assert inflect_lemma("managed", "VBD") == {"managed"}
    assert inflect_lemma("able", "JJ") == {"able"}
    assert inflect_lemma("not", "RB") == {"not"}
