"""Input coercion helpers shared by the estimators and the CLI."""

from __future__ import annotations

from .treebank import Internal, ParseTree, Preterminal, parse_sexpr


def as_token_sentence(sent, where=0) -> list[tuple[str, str]]:
    """Coerce one sentence to [(word, POS), ...].

    Accepts a ``word/POS ...`` string or any iterable of (word, POS)
    pairs.  `where` only decorates error messages.
    """
    from .taggers import parse_tagged_line
    if isinstance(sent, str):
        return parse_tagged_line(sent, where)
    out = []
    for item in sent:
        try:
            word, pos = item
        except (TypeError, ValueError):
            raise ValueError("sentence %r: token %r is not a (word, POS) pair"
                             % (where, item)) from None
        if not isinstance(word, str) or not isinstance(pos, str):
            raise ValueError("sentence %r: token %r is not a pair of strings"
                             % (where, item))
        out.append((word, pos))
    return out


def as_tree(item, where=0) -> ParseTree:
    """Coerce an s-expression string or a ParseTree to a ParseTree."""
    if isinstance(item, (Internal, Preterminal)):
        return item
    if isinstance(item, str):
        return parse_sexpr(item)
    raise TypeError("item %r: expected a parse tree or s-expression string, got %r"
                    % (where, type(item).__name__))


def check_equal_length(a, b, name_a="a", name_b="b"):
    if len(a) != len(b):
        raise ValueError("%s and %s differ in length: %d vs %d"
                         % (name_a, name_b, len(a), len(b)))
