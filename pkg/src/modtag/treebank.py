"""Constituency trees: S-expression parsing/printing, flattening, yields.

Trees are immutable.  A preterminal holds a POS label, an ordered tuple of
tag names and one word; serialized it reads ``(POS tag1 tag2 word)``.  Tags
are told apart from the word by membership in the closed tag-name registry,
so a word that happens to spell a registered tag name cannot be
represented.  Atoms cannot contain whitespace, ``(`` or ``)``.

Flattening splices out VP nodes directly under VP or S, and NP nodes
directly under PP or NP, which shortens trigger-to-target paths without
touching the token yield.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, Union

from .core import is_tag_name


@dataclass(frozen=True)
class Preterminal:
    pos: str
    tags: tuple[str, ...]
    word: str


@dataclass(frozen=True)
class Internal:
    label: str
    children: tuple["ParseTree", ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("internal node %r with no children" % self.label)


ParseTree = Union[Internal, Preterminal]


class SexprError(ValueError):
    """Malformed S-expression; `offset` is the character position."""

    def __init__(self, message: str, offset: int):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


def _tokenize(text: str) -> Iterator[tuple[str, int]]:
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            yield c, i
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()":
                j += 1
            yield text[i:j], i
            i = j


def parse_sexpr(text: str) -> ParseTree:
    """Parse one tree from `text`.

    Groups containing only atoms are preterminals: the first atom is the
    POS, trailing atoms before the word must be registered tag names, and
    exactly one word must remain.  Errors carry the character offset.
    """
    tokens = list(_tokenize(text))
    pos = 0

    def parse_group():
        nonlocal pos
        tok, off = tokens[pos]
        if tok != "(":
            raise SexprError("expected '('", off)
        pos += 1
        atoms: list[tuple[str, int]] = []
        children: list[ParseTree] = []
        while pos < len(tokens):
            tok, off = tokens[pos]
            if tok == ")":
                pos += 1
                return _build_node(atoms, children, off)
            if tok == "(":
                if not atoms:
                    raise SexprError("group with no label", off)
                children.append(parse_group())
            else:
                if children:
                    raise SexprError("atom %r after child groups" % tok, off)
                atoms.append((tok, off))
                pos += 1
        raise SexprError("unbalanced parentheses", len(text))

    def _build_node(atoms, children, close_off):
        if not atoms:
            raise SexprError("empty group", close_off)
        label = atoms[0][0]
        if children:
            return Internal(label, tuple(children))
        rest = atoms[1:]
        if not rest:
            raise SexprError("node %r has no children and no word" % label, close_off)
        tags = []
        k = 0
        while k < len(rest) and is_tag_name(rest[k][0]):
            tags.append(rest[k][0])
            k += 1
        words = rest[k:]
        if not words:
            raise SexprError("preterminal %r has tags but no word" % label, rest[-1][1])
        if len(words) > 1:
            raise SexprError("preterminal %r has more than one word" % label, words[1][1])
        return Preterminal(label, tuple(tags), words[0][0])

    if not tokens:
        raise SexprError("empty input", 0)
    tree = parse_group()
    if pos != len(tokens):
        raise SexprError("trailing content after tree", tokens[pos][1])
    return tree


def print_sexpr(t: ParseTree) -> str:
    """Canonical single-line form with single spaces."""
    if isinstance(t, Preterminal):
        return "(" + " ".join((t.pos,) + t.tags + (t.word,)) + ")"
    return "(" + t.label + " " + " ".join(print_sexpr(c) for c in t.children) + ")"


# Child labels spliced out under each parent label.
FLATTEN_RULES = {"VP": {"VP", "S"}, "NP": {"PP", "NP"}}


def _flatten_once(t: ParseTree) -> ParseTree:
    if isinstance(t, Preterminal):
        return t
    new_children: list[ParseTree] = []
    for child in t.children:
        child = _flatten_once(child)
        if isinstance(child, Internal) and t.label in FLATTEN_RULES.get(child.label, ()):
            new_children.extend(child.children)
        else:
            new_children.append(child)
    return Internal(t.label, tuple(new_children))


def flatten(t: ParseTree) -> ParseTree:
    """Splice to fixpoint, bottom-up.  Yield-preserving and idempotent."""
    out = _flatten_once(t)
    while out != t:
        t = out
        out = _flatten_once(t)
    return out


def yield_tokens(t: ParseTree) -> list[tuple[str, str]]:
    """(word, POS) pairs left to right."""
    return [(p.word, p.pos) for p in preterminals(t)]


def preterminals(t: ParseTree) -> Iterator[Preterminal]:
    if isinstance(t, Preterminal):
        yield t
    else:
        for c in t.children:
            yield from preterminals(c)


def node_at(t: ParseTree, path: tuple[int, ...]) -> ParseTree:
    for i in path:
        t = t.children[i]
    return t


def walk(t: ParseTree, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], ParseTree]]:
    """Preorder (path, node) pairs."""
    yield path, t
    if isinstance(t, Internal):
        for i, c in enumerate(t.children):
            yield from walk(c, path + (i,))


def add_tags(t: ParseTree, additions: dict[tuple[int, ...], list[str]]) -> ParseTree:
    """Return a copy of `t` with tag names appended at the given preterminal
    paths, skipping names a node already carries."""

    def rebuild(node: ParseTree, path: tuple[int, ...]) -> ParseTree:
        if isinstance(node, Preterminal):
            extra = [g for g in additions.get(path, []) if g not in node.tags]
            if not extra:
                return node
            return replace(node, tags=node.tags + tuple(extra))
        if not any(p[: len(path)] == path for p in additions):
            return node
        return Internal(
            node.label,
            tuple(rebuild(c, path + (i,)) for i, c in enumerate(node.children)),
        )

    return rebuild(t, ())


def strip_tags(t: ParseTree) -> ParseTree:
    if isinstance(t, Preterminal):
        return replace(t, tags=())
    return Internal(t.label, tuple(strip_tags(c) for c in t.children))
