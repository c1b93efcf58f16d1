"""Compiling lexicon entries into tree rules via the template catalog.

Each subcat code maps to one or more templates; each applicable
(entry, code, template) triple yields one Rule whose pattern anchors the
entry's head word (all inflected forms, as a word-in-set constraint) and
whose action inserts the entry's modality tags.  The catalog and the
code-to-template map are data files in the same `|`-separated style as the
lexicon, so new codes need no code changes.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .core import TAG_LABEL
from .inflect import inflect_lemma
from .lexicon import Lexicon, LexiconEntry
from .patterns import Rule, parse_action, parse_pattern


@dataclass(frozen=True)
class Template:
    template_id: str
    anchors: tuple[str, ...]        # allowed head POS prefixes
    pattern_skeleton: str
    action_skeleton: str
    note: str = ""


@dataclass(frozen=True)
class TemplateRef:
    template_id: str
    param: Optional[str] = None     # e.g. the preposition for I-FOR

    def __str__(self) -> str:
        return self.template_id if self.param is None else "%s:%s" % (self.template_id, self.param)


class InapplicableTemplate(ValueError):
    pass


def _data_lines(name: str):
    return (resources.files("modtag") / "data" / name).read_text("utf-8").splitlines()


def _split_fields(line: str, n: int, middle: int, lineno: int, what: str) -> list[str]:
    """Split on `|` into exactly `n` fields where field `middle` (the
    pattern) may itself contain `|` inside alternations."""
    fields = [f.strip() for f in line.split("|")]
    if len(fields) < n:
        raise ValueError("%s line %d: expected %d fields" % (what, lineno, n))
    head = fields[:middle]
    tail = fields[len(fields) - (n - middle - 1):]
    body = "|".join(fields[middle:len(fields) - (n - middle - 1)])
    return head + [body] + tail


def load_templates(stream=None) -> dict[str, Template]:
    """Template catalog keyed by id, in file order."""
    lines = _data_lines("templates.txt") if stream is None else (
        stream.splitlines() if isinstance(stream, str) else list(stream))
    catalog: dict[str, Template] = {}
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tid, anchors, pattern, action, note = _split_fields(line, 5, 2, lineno, "templates")
        if tid in catalog:
            raise ValueError("templates line %d: duplicate id %r" % (lineno, tid))
        catalog[tid] = Template(tid, tuple(a.strip() for a in anchors.split(",")),
                                pattern, action, note)
    return catalog


def load_subcat_map(stream=None) -> dict[str, tuple[TemplateRef, ...]]:
    """Subcat code registry: code -> template references, in file order."""
    lines = _data_lines("subcat_map.txt") if stream is None else (
        stream.splitlines() if isinstance(stream, str) else list(stream))
    mapping: dict[str, tuple[TemplateRef, ...]] = {}
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 2:
            raise ValueError("subcat map line %d: expected 2 fields" % lineno)
        code, refs = fields
        if code in mapping:
            raise ValueError("subcat map line %d: duplicate code %r" % (lineno, code))
        parsed = []
        for chunk in refs.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            tid, sep, param = chunk.partition(":")
            parsed.append(TemplateRef(tid.strip(), param.strip() if sep else None))
        if not parsed:
            raise ValueError("subcat map line %d: code %r maps to no templates"
                             % (lineno, code))
        mapping[code] = tuple(parsed)
    return mapping


def trigger_word_forms(entry: LexiconEntry) -> tuple[str, ...]:
    """Sorted inflected forms of the entry's head word."""
    return tuple(sorted(inflect_lemma(entry.head_word.lower(), entry.head_pos)))


def instantiate_template(template: Template, entry: LexiconEntry,
                         param: Optional[str] = None,
                         rule_id: Optional[str] = None,
                         provenance: str = "-") -> Rule:
    """Substitute the entry into a template skeleton and build the Rule.

    Raises InapplicableTemplate when the entry's head POS fits none of the
    template's anchor prefixes, and ValueError when the template needs a
    parameter the caller did not supply.
    """
    head_pos = entry.head_pos
    if not any(head_pos.startswith(a) for a in template.anchors):
        raise InapplicableTemplate(
            "template %s expects a %s head, entry %s has %s"
            % (template.template_id, "/".join(template.anchors),
               entry.entry_id, head_pos))
    pattern_text = template.pattern_skeleton
    action_text = template.action_skeleton
    if "$P" in pattern_text:
        if not param:
            raise ValueError("template %s needs a preposition parameter"
                             % template.template_id)
        pattern_text = pattern_text.replace("$P", param.lower())
    words = "|".join(trigger_word_forms(entry))
    pattern_text = pattern_text.replace("$W", words)
    label = TAG_LABEL[entry.modality]
    action_text = action_text.replace("$M", label)
    if rule_id is None:
        rule_id = "%s--%s" % (entry.entry_id, template.template_id)
    return Rule(rule_id, parse_pattern(pattern_text), parse_action(action_text),
                provenance)


@dataclass
class SkipRecord:
    entry_id: str
    code: str
    template_id: str
    reason: str


@dataclass
class CompileResult:
    rules: list[Rule]
    skipped: list[SkipRecord]
    entries_total: int
    entries_skipped: list[str]      # entries none of whose codes produced a rule

    def summary(self) -> str:
        lines = ["compiled %d rules from %d entries" % (len(self.rules), self.entries_total)]
        for entry_id in self.entries_skipped:
            lines.append("skipped entry %s: no applicable template" % entry_id)
        for s in self.skipped:
            lines.append("skipped %s %s %s: %s" % (s.entry_id, s.code, s.template_id, s.reason))
        return "\n".join(lines)


def compile_ruleset(lex: Lexicon,
                    templates: Optional[dict[str, Template]] = None,
                    subcat_map: Optional[dict[str, tuple[TemplateRef, ...]]] = None
                    ) -> CompileResult:
    """Compile every entry against its subcat codes, in stable order:
    lexicon order, then the entry's code order, then the map's template
    order.  Identical (pattern, action) pairs are emitted once."""
    templates = load_templates() if templates is None else templates
    subcat_map = load_subcat_map() if subcat_map is None else subcat_map
    rules: list[Rule] = []
    skipped: list[SkipRecord] = []
    entries_skipped: list[str] = []
    seen: dict[tuple, str] = {}
    n = 0
    for entry in lex:
        produced = False
        for code in entry.subcats:
            if code not in subcat_map:
                raise ValueError("entry %s uses unknown subcat code %r"
                                 % (entry.entry_id, code))
            for ref in subcat_map[code]:
                if ref.template_id not in templates:
                    raise ValueError("subcat code %r names unknown template %r"
                                     % (code, ref.template_id))
                template = templates[ref.template_id]
                provenance = "entry=%s;code=%s;template=%s" % (entry.entry_id, code, ref)
                try:
                    rule = instantiate_template(template, entry, ref.param,
                                                rule_id="r%03d" % (n + 1),
                                                provenance=provenance)
                except InapplicableTemplate as exc:
                    skipped.append(SkipRecord(entry.entry_id, code, str(ref), str(exc)))
                    continue
                key = (str(rule.pattern), rule.action)
                if key in seen:
                    skipped.append(SkipRecord(entry.entry_id, code, str(ref),
                                              "duplicate of %s" % seen[key]))
                    produced = True
                    continue
                seen[key] = rule.rule_id
                rules.append(rule)
                produced = True
                n += 1
        if not produced:
            entries_skipped.append(entry.entry_id)
    return CompileResult(rules, skipped, len(lex), entries_skipped)
