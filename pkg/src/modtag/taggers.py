"""The two taggers and their wire formats.

The string tagger works on POS-tagged tokens: every lexicon match tags its
head token as a trigger, and the modality's target is the first verb to
the trigger's right that is not an auxiliary, looking only up to the next
clause boundary (that/IN, a relative pronoun, a coordinator or a comma).
When the window holds only auxiliaries the nearest verb in it is taken
anyway, so a bare copula can still be a target.  A negation trigger then
composes with the nearest modality trigger to its left whose target lies
right of the negation: the target's tag is rewritten with the negated
modality (``TargAble`` becomes ``TargNOTAble``) and the negation's own
target mark disappears into it.  Negations with no such trigger keep a
plain ``TargNegation`` on the next verb.

The tree tagger just runs compiled rules over a flattened parse tree and
stacks tags on preterminals; negation stays a separate stacked tag there.

Inline rendering wraps each tagged token as ``<Tag1 Tag2 word>`` with
single spaces; the token's POS is not part of the inline form.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .core import (NEGATION, MenuModality, ModalityTag, Role, is_not_form,
                   is_tag_name, negate_modality, parse_tag_name)
from .lexicon import Lexicon, lookup_triggers
from .patterns import Rule, TreeIndex, apply_rule_with_records
from .treebank import ParseTree

VERB_POS = frozenset({"VB", "VBZ", "VBD", "VBG", "VBN", "VBP"})

# Auxiliaries never make targets on the first pass.
AUX_WORDS = frozenset(
    "be am is are was were been being have has had having do does did".split())


def is_auxiliary(word: str, pos: str) -> bool:
    return pos in ("MD", "TO") or word.lower() in AUX_WORDS


def is_clause_boundary(word: str, pos: str) -> bool:
    return (pos in ("WDT", "WP", "WP$", "CC", ",")
            or (pos == "IN" and word.lower() == "that"))


class TargetlessTriggerWarning(UserWarning):
    pass


@dataclass(frozen=True)
class TaggedToken:
    word: str
    pos: str
    tags: tuple[ModalityTag, ...] = ()
    sources: tuple[str, ...] = ()     # provenance, aligned with tags


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[TaggedToken, ...]

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)


def parse_tagged_line(line: str, lineno: int = 0) -> list[tuple[str, str]]:
    """Split a ``word/POS word/POS ...`` line into (word, POS) pairs."""
    tokens = []
    for piece in line.split():
        word, sep, pos = piece.rpartition("/")
        if not sep or not word or not pos:
            raise ValueError("line %d: token %r is not word/POS" % (lineno, piece))
        tokens.append((word, pos))
    return tokens


def format_tagged_line(tokens: Iterable[tuple[str, str]]) -> str:
    return " ".join("%s/%s" % (w, p) for w, p in tokens)


def _find_target(tokens, start: int, negation_heads: frozenset[int]) -> Optional[int]:
    """Index of the target for a trigger whose span ends at `start`."""
    end = len(tokens)
    for j in range(start, len(tokens)):
        if is_clause_boundary(*tokens[j]):
            end = j
            break
    fallback = None
    for j in range(start, end):
        word, pos = tokens[j]
        if pos not in VERB_POS or j in negation_heads:
            continue
        if is_auxiliary(word, pos):
            if fallback is None:
                fallback = j
            continue
        return j
    return fallback


def tag_string(tokens, lex: Lexicon) -> TaggedSentence:
    """Tag one sentence of (word, POS) pairs against the lexicon.

    Returns the raw trigger/target tagging; run `compose_negation` on the
    result to fold negations in.  A trigger with no target in reach keeps
    its Trig tag and raises a TargetlessTriggerWarning.
    """
    tokens = list(tokens)
    matches = lookup_triggers(lex, tokens)
    negation_heads = frozenset(m.head for m in matches if m.entry.modality is NEGATION)
    tags: list[list[tuple[ModalityTag, str]]] = [[] for _ in tokens]

    def add(idx: int, tag: ModalityTag, source: str):
        if not any(t == tag for t, _ in tags[idx]):
            tags[idx].append((tag, source))

    for m in matches:
        source = m.entry.entry_id
        add(m.head, ModalityTag(Role.TRIGGER, m.entry.modality), source)
        target = _find_target(tokens, m.end, negation_heads)
        if target is None:
            warnings.warn(TargetlessTriggerWarning(
                "no target for trigger %r at token %d" % (tokens[m.head][0], m.head)))
            continue
        add(target, ModalityTag(Role.TARGET, m.entry.modality), source)

    return TaggedSentence(tuple(
        TaggedToken(w, p, tuple(t for t, _ in tt), tuple(s for _, s in tt))
        for (w, p), tt in zip(tokens, tags)))


def _trigger_targets(s: TaggedSentence) -> list[tuple[int, MenuModality, Optional[int]]]:
    """(trigger index, modality, recomputed target index) for every
    non-negation Trig tag, in token order."""
    tokens = [(t.word, t.pos) for t in s.tokens]
    negation_heads = frozenset(
        i for i, t in enumerate(s.tokens)
        if any(g.role is Role.TRIGGER and g.modality is NEGATION for g in t.tags))
    out = []
    for i, tok in enumerate(s.tokens):
        for g in tok.tags:
            if g.role is Role.TRIGGER and isinstance(g.modality, MenuModality):
                out.append((i, g.modality, _find_target(tokens, i + 1, negation_heads)))
    return out


def compose_negation(s: TaggedSentence) -> TaggedSentence:
    """Fold negation triggers into the targets they scope over.

    Never touches words, POS or token count; only tag lists change.
    """
    toks = [[list(t.tags), list(t.sources)] for t in s.tokens]
    links = _trigger_targets(s)
    negations = [i for i, t in enumerate(s.tokens)
                 if any(g.role is Role.TRIGGER and g.modality is NEGATION for g in t.tags)]

    for n in negations:
        associated = [(i, m, tgt) for i, m, tgt in links
                      if i < n and tgt is not None and tgt > n
                      and not is_not_form(m)]
        if not associated:
            continue
        i, m, tgt = max(associated, key=lambda item: item[0])
        tag_list, src_list = toks[tgt]
        old = ModalityTag(Role.TARGET, m)
        if old not in tag_list:
            continue
        tag_list[tag_list.index(old)] = ModalityTag(
            Role.TARGET, negate_modality(m).modality)
        neg_mark = ModalityTag(Role.TARGET, NEGATION)
        if neg_mark in tag_list:
            k = tag_list.index(neg_mark)
            del tag_list[k]
            del src_list[k]

    return TaggedSentence(tuple(
        replace(t, tags=tuple(tags), sources=tuple(srcs))
        for t, (tags, srcs) in zip(s.tokens, toks)))


# ------------------------------------------------------------ tree tagging

def tag_tree(t: ParseTree, rules: Iterable[Rule]) -> ParseTree:
    """Apply each rule in order to an (already flattened) tree."""
    for rule in rules:
        t, _ = apply_rule_with_records(rule, t)
    return t


def tag_tree_with_records(t: ParseTree, rules: Iterable[Rule]
                          ) -> tuple[ParseTree, list[tuple[int, str, str]]]:
    """Also report (token index, tag name, rule id) insertions."""
    records: list[tuple[int, str, str]] = []
    index = TreeIndex(t)   # shapes never change, so spans stay valid
    token_of = {path: index.span[path][0] for path, node in index.node.items()}
    for rule in rules:
        t, recs = apply_rule_with_records(rule, t)
        records.extend((token_of[path], tag, rule.rule_id) for path, tag in recs)
    return t, records


# ------------------------------------------------------------ wire formats

def render_inline(s: TaggedSentence) -> str:
    """Inline tagged text: ``<TrigAble can> <TrigNegation not> ...``"""
    pieces = []
    for t in s.tokens:
        if t.tags:
            pieces.append("<" + " ".join(g.name for g in t.tags) + " " + t.word + ">")
        else:
            pieces.append(t.word)
    return " ".join(pieces)


def parse_inline(text: str) -> list[tuple[str, tuple[ModalityTag, ...]]]:
    """Invert `render_inline`, up to POS: (word, tags) per token."""
    out = []
    pieces = text.split()
    i = 0
    while i < len(pieces):
        piece = pieces[i]
        if not piece.startswith("<"):
            out.append((piece, ()))
            i += 1
            continue
        group = [piece[1:]]
        while not group[-1].endswith(">"):
            i += 1
            if i >= len(pieces):
                raise ValueError("unterminated <...> group: %r" % piece)
            group.append(pieces[i])
        group[-1] = group[-1][:-1]
        word = group[-1]
        tags = []
        for name in group[:-1]:
            if not is_tag_name(name):
                raise ValueError("unknown tag name %r in %r" % (name, text))
            tags.append(parse_tag_name(name))
        out.append((word, tuple(tags)))
        i += 1
    return out


def sentence_standoff_rows(s: TaggedSentence, sentence_id: int
                           ) -> list[tuple[int, int, str, str]]:
    rows = []
    for i, t in enumerate(s.tokens):
        for tag, source in zip(t.tags, t.sources):
            rows.append((sentence_id, i, tag.name, source))
    return rows


def tree_standoff_rows(records, sentence_id: int) -> list[tuple[int, int, str, str]]:
    return [(sentence_id, idx, tag, rule_id) for idx, tag, rule_id in records]


def format_standoff(rows) -> str:
    return "".join("%d\t%d\t%s\t%s\n" % row for row in rows)


def parse_standoff(stream) -> list[tuple[int, int, str, str]]:
    """Rows of (sentence id, token index, tag name, source)."""
    if isinstance(stream, str):
        stream = stream.splitlines()
    rows = []
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ValueError("standoff line %d: expected 4 tab-separated fields"
                             % lineno)
        sid, idx, tag, source = fields
        if not is_tag_name(tag):
            raise ValueError("standoff line %d: unknown tag name %r" % (lineno, tag))
        rows.append((int(sid), int(idx), tag, source))
    return rows


# ------------------------------------------------------------- estimators

from sklearn.base import BaseEstimator, TransformerMixin      # noqa: E402
from sklearn.utils.validation import check_is_fitted          # noqa: E402

from .lexicon import expand_lexicon, load_lexicon, load_seed_lexicon  # noqa: E402
from .validation import as_token_sentence, as_tree            # noqa: E402


def _resolve_lexicon(lexicon) -> Lexicon:
    if lexicon is None:
        return load_seed_lexicon()
    if isinstance(lexicon, Lexicon):
        return lexicon
    if isinstance(lexicon, str):
        with open(lexicon, encoding="utf-8") as fh:
            return load_lexicon(fh)
    raise TypeError("lexicon must be None, a path or a Lexicon, got %r" % (lexicon,))


class StringModalityTagger(BaseEstimator, TransformerMixin):
    """Transformer from POS-tagged sentences to TaggedSentences.

    Parameters
    ----------
    lexicon : None, path or Lexicon
        None means the bundled seed lexicon.
    expand : bool
        Expand head-word inflections before tagging.
    compose : bool
        Fold negations into target tags (inline style).
    """

    def __init__(self, lexicon=None, expand=True, compose=True):
        self.lexicon = lexicon
        self.expand = expand
        self.compose = compose

    def fit(self, X=None, y=None):
        lex = _resolve_lexicon(self.lexicon)
        self.lexicon_ = expand_lexicon(lex) if self.expand else lex
        return self

    def transform(self, X) -> list[TaggedSentence]:
        check_is_fitted(self, "lexicon_")
        out = []
        for i, sent in enumerate(X):
            tagged = tag_string(as_token_sentence(sent, i), self.lexicon_)
            out.append(compose_negation(tagged) if self.compose else tagged)
        return out


class TreeModalityTagger(BaseEstimator, TransformerMixin):
    """Transformer from constituency trees to tagged trees.

    Either pass compiled `rules`, or a `lexicon` (None for the bundled
    seed) compiled at fit time.  `flatten` controls splicing before rules
    run.
    """

    def __init__(self, lexicon=None, rules=None, flatten=True):
        self.lexicon = lexicon
        self.rules = rules
        self.flatten = flatten

    def fit(self, X=None, y=None):
        if self.rules is not None:
            self.rules_ = list(self.rules)
        else:
            from .templates import compile_ruleset
            self.rules_ = compile_ruleset(_resolve_lexicon(self.lexicon)).rules
        return self

    def transform(self, X) -> list[ParseTree]:
        check_is_fitted(self, "rules_")
        from .treebank import flatten as flatten_tree
        out = []
        for i, item in enumerate(X):
            tree = as_tree(item, i)
            if self.flatten:
                tree = flatten_tree(tree)
            out.append(tag_tree(tree, self.rules_))
        return out
