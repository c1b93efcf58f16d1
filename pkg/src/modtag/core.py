"""Modality taxonomy: menu of annotation choices, negation algebra, tag names.

A modality tag marks a token either as the trigger of a modality (the word
that signals it) or as its target (the head of the phrase the modality
scopes over).  Tag names on the wire are the role prefix glued to the
modality label: ``TrigRequire``, ``TargAble``, ``TargNOTAble``,
``TrigNegation``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple


class CoreModality(enum.Enum):
    """The eight coarse modalities."""

    REQUIREMENT = "Requirement"
    PERMISSIVE = "Permissive"
    SUCCESS = "Success"
    EFFORT = "Effort"
    INTENTION = "Intention"
    ABILITY = "Ability"
    WANT = "Want"
    BELIEF = "Belief"


class MenuModality(enum.Enum):
    """The thirteen annotation menu choices, in menu order.

    Menu order doubles as the specificity order: an earlier member is the
    more specific choice when several apply.
    """

    REQUIRE = "Require"
    PERMIT = "Permit"
    SUCCEED = "Succeed"
    NOT_SUCCEED = "NotSucceed"
    TRY = "Try"
    NOT_TRY = "NotTry"
    INTEND = "Intend"
    NOT_INTEND = "NotIntend"
    ABLE = "Able"
    NOT_ABLE = "NotAble"
    WANT = "Want"
    FIRM_BELIEF = "FirmBelief"
    BELIEF = "Belief"


class PseudoModality(enum.Enum):
    """Markers that behave like modalities in tags but are not menu choices."""

    NEGATION = "Negation"


NEGATION = PseudoModality.NEGATION

TagModality = MenuModality | PseudoModality


class Role(enum.Enum):
    TRIGGER = "Trig"
    TARGET = "Targ"


class TargetPolarity(enum.Enum):
    """Polarity of the proposition inside the target's scope.

    Carried in the data model for annotated corpora; the taggers never set
    it to False themselves.
    """

    TRUE = True
    FALSE = False


# CoreModality for each menu choice.
CORE_OF = {
    MenuModality.REQUIRE: CoreModality.REQUIREMENT,
    MenuModality.PERMIT: CoreModality.PERMISSIVE,
    MenuModality.SUCCEED: CoreModality.SUCCESS,
    MenuModality.NOT_SUCCEED: CoreModality.SUCCESS,
    MenuModality.TRY: CoreModality.EFFORT,
    MenuModality.NOT_TRY: CoreModality.EFFORT,
    MenuModality.INTEND: CoreModality.INTENTION,
    MenuModality.NOT_INTEND: CoreModality.INTENTION,
    MenuModality.ABLE: CoreModality.ABILITY,
    MenuModality.NOT_ABLE: CoreModality.ABILITY,
    MenuModality.WANT: CoreModality.WANT,
    MenuModality.FIRM_BELIEF: CoreModality.BELIEF,
    MenuModality.BELIEF: CoreModality.BELIEF,
}

_NOT_FORMS = {
    MenuModality.NOT_SUCCEED: MenuModality.SUCCEED,
    MenuModality.NOT_TRY: MenuModality.TRY,
    MenuModality.NOT_INTEND: MenuModality.INTEND,
    MenuModality.NOT_ABLE: MenuModality.ABLE,
}

# Label used inside tag names.  Not-forms spell the negation in caps so the
# composed form reads TargNOTAble rather than TargNotAble.
TAG_LABEL = {m: m.value for m in MenuModality} | {NEGATION: "Negation"}
for _not_form, _base in _NOT_FORMS.items():
    TAG_LABEL[_not_form] = "NOT" + _base.value


def is_not_form(m: MenuModality) -> bool:
    return m in _NOT_FORMS


def base_form(m: MenuModality) -> MenuModality:
    """Strip the Not- prefix: NotAble -> Able; positive forms unchanged."""
    return _NOT_FORMS.get(m, m)


class NegationResult(NamedTuple):
    modality: MenuModality
    polarity_flipped: bool


def negate_modality(m: MenuModality) -> NegationResult:
    """Modality of a negated occurrence of `m`.

    Succeed, Try, Intend and Able negate to their Not-forms.  Require and
    Permit are duals: negating one yields the other with the target
    polarity flipped.  Want and the belief modalities are transparent to
    negation.  Not-forms cannot be negated again.
    """
    if not isinstance(m, MenuModality):
        raise ValueError("negate_modality expects a menu modality, got %r" % (m,))
    if is_not_form(m):
        raise ValueError("cannot negate %s: already a Not-form" % m.value)
    if m is MenuModality.REQUIRE:
        return NegationResult(MenuModality.PERMIT, True)
    if m is MenuModality.PERMIT:
        return NegationResult(MenuModality.REQUIRE, True)
    if m in (MenuModality.SUCCEED, MenuModality.TRY,
             MenuModality.INTEND, MenuModality.ABLE):
        not_form = {v: k for k, v in _NOT_FORMS.items()}[m]
        return NegationResult(not_form, False)
    # Want, FirmBelief, Belief pass negation through to the target.
    return NegationResult(m, False)


# Entailment chains over positive menu modalities: an earlier member
# entails every later member of its own chain.  Belief choices are outside
# both chains.
ENTAILMENT_CHAINS = (
    (MenuModality.REQUIRE, MenuModality.PERMIT),
    (MenuModality.SUCCEED, MenuModality.TRY, MenuModality.INTEND,
     MenuModality.ABLE, MenuModality.WANT),
)


def entails(a: MenuModality, b: MenuModality) -> bool:
    """True when choosing `a` commits the annotator to `b` as well."""
    if a is b:
        return True
    for chain in ENTAILMENT_CHAINS:
        if a in chain and b in chain:
            return chain.index(a) < chain.index(b)
    return False


_MENU_ORDER = {m: i for i, m in enumerate(MenuModality)}


def most_specific(ms) -> MenuModality:
    """The most specific choice among `ms`: earliest in menu order.

    All members must be positive forms; annotators pick among positive
    readings and negation is handled separately.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("most_specific of an empty set")
    for m in ms:
        if not isinstance(m, MenuModality) or is_not_form(m):
            raise ValueError("most_specific expects positive menu modalities, got %r" % (m,))
    return min(ms, key=_MENU_ORDER.__getitem__)


@dataclass(frozen=True)
class ModalityTag:
    """One tag on one token: a role plus a modality."""

    role: Role
    modality: TagModality

    def __post_init__(self):
        if not isinstance(self.role, Role):
            raise ValueError("bad role: %r" % (self.role,))
        if not isinstance(self.modality, (MenuModality, PseudoModality)):
            raise ValueError("bad modality: %r" % (self.modality,))

    @property
    def name(self) -> str:
        return self.role.value + TAG_LABEL[self.modality]


def render_tag(tag: ModalityTag, negated: bool = False) -> str:
    """Render a tag name, optionally composing a negation into it.

    With ``negated=True`` the modality is first passed through
    ``negate_modality``, so ``(Targ, Able)`` renders as ``TargNOTAble``
    and ``(Targ, Require)`` as ``TargPermit`` (the dual; the polarity flip
    is not part of the name).  The stacked style used in trees renders the
    modality tag and a separate Negation tag instead, both with
    ``negated=False``.
    """
    if not negated:
        return tag.name
    if not isinstance(tag.modality, MenuModality):
        raise ValueError("cannot compose negation into %s" % tag.name)
    composed = negate_modality(tag.modality).modality
    return tag.role.value + TAG_LABEL[composed]


# Closed registry of tag names, used to tell tags from words in serialized
# trees and tagged sentences.
TAG_NAMES = frozenset(
    role.value + TAG_LABEL[m]
    for role in Role
    for m in list(MenuModality) + [NEGATION]
)

_TAG_BY_NAME = {}
for _role in Role:
    for _m in list(MenuModality) + [NEGATION]:
        _TAG_BY_NAME[_role.value + TAG_LABEL[_m]] = ModalityTag(_role, _m)


def is_tag_name(s: str) -> bool:
    return s in TAG_NAMES


def parse_tag_name(s: str) -> ModalityTag:
    try:
        return _TAG_BY_NAME[s]
    except KeyError:
        raise ValueError("unknown tag name: %r" % (s,)) from None


MENU_BY_LABEL = {m.value: m for m in MenuModality}
