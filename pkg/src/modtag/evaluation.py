"""Agreement and precision scoring for modality annotations.

Two granularities are used:

* sentence level, for inter-annotator agreement: each sentence is reduced
  to the set of (role, modality) pairs it contains, and Cohen's kappa is
  computed per pair over presence/absence vectors;
* token level, for precision against a gold standard: a system record is
  correct when the gold standard has the same (role, modality) on the
  same token of the same sentence.

Both reductions normalize composed negative tags first, so ``TargNOTAble``
counts as target-Able plus target-Negation.  Recall is deliberately not
reported: the gold side of the fixtures only covers system output that a
judge reviewed, not an exhaustive annotation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import (NEGATION, MenuModality, ModalityTag, Role, base_form,
                   is_not_form, parse_tag_name)
from .taggers import TaggedSentence
from .treebank import preterminals


def normalize_tag(tag: ModalityTag) -> frozenset[ModalityTag]:
    """Split composed negatives: TargNOTAble -> {TargAble, TargNegation}."""
    if isinstance(tag.modality, MenuModality) and is_not_form(tag.modality):
        return frozenset({ModalityTag(tag.role, base_form(tag.modality)),
                          ModalityTag(tag.role, NEGATION)})
    return frozenset({tag})


@dataclass(frozen=True)
class SentenceAnnotation:
    sentence_id: object
    tags: frozenset[ModalityTag]


def extract_annotation(sent, sentence_id=0) -> SentenceAnnotation:
    """Sentence-level tag set from a TaggedSentence or a tagged tree."""
    tags: set[ModalityTag] = set()
    if isinstance(sent, TaggedSentence):
        for tok in sent.tokens:
            for tag in tok.tags:
                tags |= normalize_tag(tag)
    else:
        for node in preterminals(sent):
            for name in node.tags:
                tags |= normalize_tag(parse_tag_name(name))
    return SentenceAnnotation(sentence_id, frozenset(tags))


# -------------------------------------------------------------- agreement

def cohen_kappa(a: Sequence, b: Sequence) -> Optional[float]:
    """Chance-corrected agreement between two label sequences.

    Expected agreement is the dot product of the two annotators' label
    distributions.  Returns None when that expectation is 1 (both sides
    constant and equal), where kappa is undefined.
    """
    if len(a) != len(b):
        raise ValueError("annotation vectors differ in length: %d vs %d"
                         % (len(a), len(b)))
    n = len(a)
    if n == 0:
        raise ValueError("cannot compute agreement over zero items")
    po = sum(1 for x, y in zip(a, b) if x == y) / n
    dist_a = Counter(a)
    dist_b = Counter(b)
    pe = sum(dist_a[label] * dist_b.get(label, 0) for label in dist_a) / (n * n)
    if pe == 1.0:
        return None
    return (po - pe) / (1.0 - pe)


@dataclass(frozen=True)
class CategoryAgreement:
    tag: ModalityTag
    both: int          # marked by both annotators
    only_a: int
    only_b: int
    neither: int
    kappa: Optional[float]

    @property
    def contingency(self) -> tuple[int, int, int, int]:
        return (self.both, self.only_a, self.only_b, self.neither)


@dataclass(frozen=True)
class AgreementReport:
    n_sentences: int
    categories: tuple[CategoryAgreement, ...]
    trigger_kappa: Optional[float]    # macro average over defined kappas
    target_kappa: Optional[float]


def _category_key(tag: ModalityTag):
    menu = list(MenuModality)
    rank = menu.index(tag.modality) if tag.modality in menu else len(menu)
    return (0 if tag.role is Role.TRIGGER else 1, rank)


def agreement_report(annos_a: Iterable[SentenceAnnotation],
                     annos_b: Iterable[SentenceAnnotation]) -> AgreementReport:
    """Per-category and macro-averaged kappa over aligned sentences."""
    annos_a = list(annos_a)
    annos_b = list(annos_b)
    if len(annos_a) != len(annos_b):
        raise ValueError("annotator sets differ in size: %d vs %d"
                         % (len(annos_a), len(annos_b)))
    mismatched = [(x.sentence_id, y.sentence_id)
                  for x, y in zip(annos_a, annos_b)
                  if x.sentence_id != y.sentence_id]
    if mismatched:
        raise ValueError("sentence ids do not line up: %s"
                         % ", ".join("%r vs %r" % m for m in mismatched[:5]))

    observed = sorted({t for s in annos_a for t in s.tags}
                      | {t for s in annos_b for t in s.tags},
                      key=_category_key)
    categories = []
    for tag in observed:
        va = [tag in s.tags for s in annos_a]
        vb = [tag in s.tags for s in annos_b]
        categories.append(CategoryAgreement(
            tag=tag,
            both=sum(1 for x, y in zip(va, vb) if x and y),
            only_a=sum(1 for x, y in zip(va, vb) if x and not y),
            only_b=sum(1 for x, y in zip(va, vb) if not x and y),
            neither=sum(1 for x, y in zip(va, vb) if not x and not y),
            kappa=cohen_kappa(va, vb)))

    def macro(role: Role) -> Optional[float]:
        defined = [c.kappa for c in categories
                   if c.tag.role is role and c.kappa is not None]
        return sum(defined) / len(defined) if defined else None

    return AgreementReport(len(annos_a), tuple(categories),
                           macro(Role.TRIGGER), macro(Role.TARGET))


def _kappa_text(value: Optional[float]) -> str:
    return "%.4f" % value if value is not None else "n/a"


def format_agreement(report: AgreementReport) -> str:
    lines = ["%-16s %6s %7s %7s %8s %8s"
             % ("category", "both", "only_a", "only_b", "neither", "kappa")]
    for c in report.categories:
        lines.append("%-16s %6d %7d %7d %8d %8s"
                     % (c.tag.name, c.both, c.only_a, c.only_b, c.neither,
                        _kappa_text(c.kappa)))
    lines.append("sentences=%d" % report.n_sentences)
    lines.append("trigger_kappa=%s" % _kappa_text(report.trigger_kappa))
    lines.append("target_kappa=%s" % _kappa_text(report.target_kappa))
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------- precision

def normalize_records(rows) -> frozenset[tuple[int, int, ModalityTag]]:
    """Token-level (sentence id, token index, tag) facts from standoff rows."""
    out = set()
    for sid, idx, tag_name, _source in rows:
        for tag in normalize_tag(parse_tag_name(tag_name)):
            out.add((sid, idx, tag))
    return frozenset(out)


@dataclass(frozen=True)
class ModalityPrecision:
    label: str
    correct: int
    total: int

    @property
    def precision(self) -> Optional[float]:
        return self.correct / self.total if self.total else None


@dataclass(frozen=True)
class PrecisionReport:
    overall: ModalityPrecision
    per_modality: tuple[ModalityPrecision, ...]


def precision_report(system_rows, gold_rows) -> PrecisionReport:
    """Token-level precision of system records against gold records."""
    system = normalize_records(system_rows)
    gold = normalize_records(gold_rows)
    per: dict[str, list[int]] = {}
    correct_total = 0
    for record in system:
        _sid, _idx, tag = record
        label = "Negation" if tag.modality is NEGATION else tag.modality.value
        cell = per.setdefault(label, [0, 0])
        cell[1] += 1
        if record in gold:
            cell[0] += 1
            correct_total += 1

    menu = [m.value for m in MenuModality] + ["Negation"]
    ordered = sorted(per.items(), key=lambda kv: menu.index(kv[0]))
    return PrecisionReport(
        overall=ModalityPrecision("overall", correct_total, len(system)),
        per_modality=tuple(ModalityPrecision(label, c, t)
                           for label, (c, t) in ordered))


def format_precision(report: PrecisionReport) -> str:
    lines = ["%-12s %8s %8s %10s" % ("modality", "correct", "total", "precision")]
    for m in report.per_modality + (report.overall,):
        p = "%.4f" % m.precision if m.precision is not None else "n/a"
        lines.append("%-12s %8d %8d %10s" % (m.label, m.correct, m.total, p))
    lines.append("precision=%s"
                 % ("%.4f" % report.overall.precision
                    if report.overall.precision is not None else "n/a"))
    return "\n".join(lines) + "\n"
