"""Modality lexicon: loading, expansion, trigger lookup.

Lexicon files are UTF-8 text, one entry per line, fields separated by `|`,
comments starting with `#`:

    surface words | POS per word | modality | head index | subcat codes

The surface may span several space-separated words; the POS field then
lists one tag per word, and the head index says which word is the trigger
head.  Subcat codes are `;`-separated and must come from the subcat code
registry.  Words match case-insensitively; POS tags match exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources
from typing import Iterable, Optional

from .core import MENU_BY_LABEL, NEGATION, TagModality
from .inflect import noun_forms, verb_forms


@dataclass(frozen=True)
class LexiconEntry:
    surface: tuple[str, ...]
    pos: tuple[str, ...]
    modality: TagModality
    head_index: int
    subcats: tuple[str, ...]

    @property
    def head_word(self) -> str:
        return self.surface[self.head_index]

    @property
    def head_pos(self) -> str:
        return self.pos[self.head_index]

    @property
    def entry_id(self) -> str:
        from .core import TAG_LABEL
        return "%s/%s/%s" % (" ".join(self.surface), "+".join(self.pos),
                             TAG_LABEL[self.modality])


@dataclass(frozen=True)
class TriggerMatch:
    start: int
    end: int
    entry: LexiconEntry

    @property
    def head(self) -> int:
        return self.start + self.entry.head_index


class Lexicon:
    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self.entries: list[LexiconEntry] = list(entries)
        # (first word lowercased, first POS) -> entries starting there
        self._index: dict[tuple[str, str], list[LexiconEntry]] = {}
        for e in self.entries:
            self._index.setdefault((e.surface[0].lower(), e.pos[0]), []).append(e)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def candidates(self, word: str, pos: str) -> list[LexiconEntry]:
        return self._index.get((word.lower(), pos), [])


class LexiconError(ValueError):
    pass


def _parse_modality(token: str) -> TagModality:
    if token == "Negation":
        return NEGATION
    try:
        return MENU_BY_LABEL[token]
    except KeyError:
        raise LexiconError("unknown modality %r" % token) from None


def default_subcat_codes() -> frozenset[str]:
    from .templates import load_subcat_map
    return frozenset(load_subcat_map())


def load_lexicon(stream, known_subcats: Optional[frozenset[str]] = None) -> Lexicon:
    """Parse a lexicon file.

    `stream` is an iterable of lines (or a whole string).  Subcat codes are
    checked against `known_subcats`, defaulting to the bundled registry.
    Entries sharing (surface, POS, modality) collapse into one entry with
    the union of their subcat codes.
    """
    if isinstance(stream, str):
        stream = stream.splitlines()
    if known_subcats is None:
        known_subcats = default_subcat_codes()

    merged: dict[tuple, LexiconEntry] = {}
    for lineno, line in enumerate(stream, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 5:
            raise LexiconError("line %d: expected 5 |-separated fields, got %d"
                               % (lineno, len(fields)))
        surface = tuple(fields[0].split())
        pos = tuple(fields[1].split())
        if not surface:
            raise LexiconError("line %d: empty surface" % lineno)
        if len(pos) != len(surface):
            raise LexiconError("line %d: %d words but %d POS tags"
                               % (lineno, len(surface), len(pos)))
        modality = _parse_modality(fields[2])
        try:
            head_index = int(fields[3])
        except ValueError:
            raise LexiconError("line %d: bad head index %r" % (lineno, fields[3])) from None
        if not 0 <= head_index < len(surface):
            raise LexiconError("line %d: head index %d out of range" % (lineno, head_index))
        subcats = tuple(s.strip() for s in fields[4].split(";") if s.strip())
        if not subcats:
            raise LexiconError("line %d: entry has no subcat codes" % lineno)
        for code in subcats:
            if code not in known_subcats:
                raise LexiconError("line %d: unknown subcat code %r" % (lineno, code))
        entry = LexiconEntry(surface, pos, modality, head_index, subcats)
        key = (surface, pos, modality)
        if key in merged:
            old = merged[key]
            extra = tuple(c for c in subcats if c not in old.subcats)
            merged[key] = replace(old, subcats=old.subcats + extra)
        else:
            merged[key] = entry
    return Lexicon(merged.values())


def dump_lexicon(lex: Lexicon) -> str:
    lines = ["# columns: surface words | POS per word | modality | head index | subcat codes"]
    from .core import TAG_LABEL
    for e in lex:
        lines.append(" | ".join([
            " ".join(e.surface), " ".join(e.pos), TAG_LABEL[e.modality],
            str(e.head_index), ";".join(e.subcats),
        ]))
    return "\n".join(lines) + "\n"


def load_seed_lexicon() -> Lexicon:
    text = (resources.files("modtag") / "data" / "seed_lexicon.txt").read_text("utf-8")
    return load_lexicon(text)


def expand_lexicon(lex: Lexicon) -> Lexicon:
    """Add one entry per inflected form of each VB or NN head word.

    VB heads gain VBZ, VBD, VBG and VBN entries; NN heads gain NNS.  The
    original entries stay, duplicates collapse, so expansion is idempotent.
    """
    merged: dict[tuple, LexiconEntry] = {}

    def put(entry: LexiconEntry):
        key = (entry.surface, entry.pos, entry.modality)
        if key in merged:
            old = merged[key]
            extra = tuple(c for c in entry.subcats if c not in old.subcats)
            merged[key] = replace(old, subcats=old.subcats + extra)
        else:
            merged[key] = entry

    for e in lex:
        put(e)
        head_pos = e.head_pos
        if head_pos == "VB":
            forms = verb_forms(e.head_word)
        elif head_pos == "NN":
            forms = noun_forms(e.head_word)
        else:
            continue
        for tag, form in forms.items():
            if tag == head_pos:
                continue
            surface = e.surface[:e.head_index] + (form,) + e.surface[e.head_index + 1:]
            pos = e.pos[:e.head_index] + (tag,) + e.pos[e.head_index + 1:]
            put(LexiconEntry(surface, pos, e.modality, e.head_index, e.subcats))
    return Lexicon(merged.values())


def lookup_triggers(lex: Lexicon, tokens) -> list[TriggerMatch]:
    """All lexicon matches over `tokens` (a sequence of (word, POS) pairs).

    Matches may overlap; they come back ordered by start position, then
    span end, then lexicon order.
    """
    order = {id(e): i for i, e in enumerate(lex.entries)}
    out = []
    for i, (word, pos) in enumerate(tokens):
        for entry in lex.candidates(word, pos):
            end = i + len(entry.surface)
            if end > len(tokens):
                continue
            if all(tokens[i + k][0].lower() == entry.surface[k].lower()
                   and tokens[i + k][1] == entry.pos[k]
                   for k in range(len(entry.surface))):
                out.append(TriggerMatch(i, end, entry))
    out.sort(key=lambda m: (m.start, m.end, order[id(m.entry)]))
    return out
