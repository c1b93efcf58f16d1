"""Shared golden fixtures: hand-tagged sentences and hand-built parses.

The two golden sentences come with exact expected output; where our
taggers knowingly deviate, the deviation is pinned here so tests fail if
the behavior drifts in either direction.
"""

GOLDEN_1_TOKENS = ("Americans/NNS should/MD know/VB that/IN we/PRP can/MD "
                   "not/RB hand/VB over/IN Dr./NNP Khan/NNP to/TO them./PRP")

GOLDEN_1_INLINE = ("Americans <TrigRequire should> <TargRequire know> that "
                   "we <TrigAble can> <TrigNegation not> <TargNOTAble hand> "
                   "over Dr. Khan to them.")

GOLDEN_2_TOKENS = ("He/PRP managed/VBD to/TO hold/VB general/JJ elections/NNS "
                   "in/IN the/DT year/NN 2002,/CD but/CC he/PRP can/MD not/RB "
                   "be/VB ignorant/JJ of/IN the/DT fact/NN that/IN the/DT "
                   "world/NN at/IN large/JJ did/VBD not/RB accept/VB these/DT "
                   "elections./NNS")

# (token index, tag name) pairs in the published tagging of sentence 2.
GOLDEN_2_TAGS = frozenset({
    (1, "TrigSucceed"), (3, "TargSucceed"),
    (12, "TrigAble"), (13, "TrigNegation"), (14, "TargNOTAble"),
    (25, "TrigNegation"), (26, "TrigBelief"), (28, "TargBelief"),
})

# Known deviations of this implementation on sentence 2: the second
# negation has no verb target to compose with, so its own target mark
# stays on `accept`; and `elections` is a noun, which the string tagger
# never targets, so the Belief target is missed.
GOLDEN_2_EXTRA = frozenset({(26, "TargNegation")})
GOLDEN_2_MISSING = frozenset({(28, "TargBelief")})

# Disfluent cricket sentence, as parsed (tags stripped).
CRICKET_TREE = (
    "(TOP (S (NP (NNP Pakistan) (SBAR (WDT which) (S (MD could) (RB not) "
    "(VB reach) (ADJP (JJ semi-final)) (, ,) (PP (IN in) (DT a) (NN match) "
    "(PP (IN against) (ADJP (JJ South) (JJ African)) (NN team)) "
    "(PP (IN for) (DT the) (JJ fifth) (NN position)) (NP (NNP Pakistan)))))) "
    "(VBD defeated) (NP (NNP South) (NNP Africa)) (PP (IN by) (CD 41) "
    "(NNS runs)) (. .)))")

# Expected tags per word; every other word carries none.  The order of the
# stacked tags on `reach` is part of the expectation.
CRICKET_TREE_TAGS = {
    "could": ("TrigAble",),
    "not": ("TrigNegation",),
    "reach": ("TargAble", "TrigSucceed", "TargNegation"),
    "semi-final": ("TargSucceed",),
}

# One parse per subcat code of the `need` entry, with the tags that the
# rules compiled from exactly that code must produce.
NEED_FIXTURES = [
    ("T1-passive-for-V3-verb",
     "(S (NP (NNS Tents)) (VP (VBP are) (VP (VBN needed))) (. .))",
     {"needed": {"TrigRequire"}, "Tents": {"TargRequire"}}),
    ("V3-passive-basic",
     "(S (NP (DT The) (NN government)) (VP (VBZ is) (VP (VBN needed) "
     "(S (VP (TO to) (VP (VB buy) (NP (NNS tents))))))) (. .))",
     {"needed": {"TrigRequire"}, "buy": {"TargRequire"}}),
    ("V3-I3-basic",
     "(S (NP (PRP We)) (VP (MD will) (VP (VB need) (S (NP (PRP them)) "
     "(VP (TO to) (VP (VB work) (ADVP (RB continuously))))))) (. .))",
     {"need": {"TrigRequire"}, "work": {"TargRequire"}}),
    ("T1-monotransitive-for-V3-verbs",
     "(S (NP (PRP We)) (VP (VBP need) (NP (DT a) (NNP Sir) (NNP Sayyed)) "
     "(ADVP (RB again))) (. .))",
     {"need": {"TrigRequire"}, "Sayyed": {"TargRequire"}}),
    ("Modal-auxiliary-basic",
     "(S (NP (PRP He)) (VP (MD need) (RB not) (VP (VB go))) (. .))",
     {"need": {"TrigRequire"}, "go": {"TargRequire"}}),
]

# Small corpus where the string and tree taggers agree on some sentences
# and disagree on others in a controlled way, for the agreement report.
AGREEMENT_CORPUS = [
    ("He/PRP should/MD go/VB ./.",
     "(S (NP (PRP He)) (VP (MD should) (VP (VB go))) (. .))"),
    ("He/PRP wants/VBZ to/TO win/VB ./.",
     "(S (NP (PRP He)) (VP (VBZ wants) (S (VP (TO to) (VP (VB win))))) (. .))"),
    ("They/PRP managed/VBD the/DT store/NN ./.",
     "(S (NP (PRP They)) (VP (VBD managed) (NP (DT the) (NN store))) (. .))"),
    ("We/PRP need/VB a/DT hero/NN ./.",
     "(S (NP (PRP We)) (VP (VB need) (NP (DT a) (NN hero))) (. .))"),
]

# Hand-derived contingency tables for that corpus, string tagger as side
# A, tree tagger as side B: (tag name, both, only_a, only_b, neither).
AGREEMENT_EXPECTED = [
    ("TrigRequire", 2, 0, 0, 2),
    ("TrigSucceed", 0, 1, 0, 3),
    ("TrigWant", 1, 0, 0, 3),
    ("TargRequire", 1, 0, 1, 2),
    ("TargWant", 1, 0, 0, 3),
]
