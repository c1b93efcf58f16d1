"""Rule-based modality tagging for English.

A shared trigger lexicon drives two taggers: a string tagger over
POS-tagged tokens and a tree tagger that compiles the lexicon into
tregex-style rules over constituency parses.  Evaluation helpers cover
chance-corrected inter-annotator agreement and precision against a gold
standard.
"""

from .core import (CORE_OF, ENTAILMENT_CHAINS, NEGATION, TAG_NAMES,
                   CoreModality, MenuModality, ModalityTag, PseudoModality,
                   Role, TargetPolarity, base_form, entails, is_not_form,
                   is_tag_name, most_specific, negate_modality,
                   parse_tag_name, render_tag)
from .evaluation import (AgreementReport, CategoryAgreement,
                         ModalityPrecision, PrecisionReport,
                         SentenceAnnotation, agreement_report, cohen_kappa,
                         extract_annotation, format_agreement,
                         format_precision, normalize_tag, precision_report)
from .inflect import inflect_lemma, noun_forms, verb_forms
from .lexicon import (Lexicon, LexiconEntry, LexiconError, TriggerMatch,
                      dump_lexicon, expand_lexicon, load_lexicon,
                      load_seed_lexicon, lookup_triggers)
from .patterns import (Match, PatternSyntaxError, Rule, TreePattern,
                       apply_rule, dump_rules, head_path, load_rules,
                       match_pattern, parse_pattern)
from .taggers import (StringModalityTagger, TaggedSentence, TaggedToken,
                      TargetlessTriggerWarning, TreeModalityTagger,
                      compose_negation, format_standoff, parse_inline,
                      parse_standoff, parse_tagged_line, render_inline,
                      tag_string, tag_tree, tag_tree_with_records)
from .templates import (CompileResult, Template, TemplateRef,
                        compile_ruleset, load_subcat_map, load_templates)
from .treebank import (Internal, ParseTree, Preterminal, SexprError,
                       add_tags, flatten, parse_sexpr, print_sexpr,
                       strip_tags, yield_tokens)

__version__ = "0.1.0"

__all__ = [
    "AgreementReport", "CORE_OF", "CategoryAgreement", "CompileResult",
    "CoreModality", "ENTAILMENT_CHAINS", "Internal", "Lexicon",
    "LexiconEntry", "LexiconError", "Match", "MenuModality",
    "ModalityPrecision", "ModalityTag", "NEGATION", "ParseTree",
    "PatternSyntaxError", "PrecisionReport", "Preterminal", "PseudoModality",
    "Role", "Rule", "SentenceAnnotation", "SexprError",
    "StringModalityTagger", "TAG_NAMES", "TaggedSentence", "TaggedToken",
    "TargetPolarity", "TargetlessTriggerWarning", "Template", "TemplateRef",
    "TreeModalityTagger", "TreePattern", "TriggerMatch", "add_tags",
    "agreement_report", "apply_rule", "base_form", "cohen_kappa",
    "compile_ruleset", "compose_negation", "dump_lexicon", "dump_rules",
    "entails", "expand_lexicon", "extract_annotation", "flatten",
    "format_agreement", "format_precision", "format_standoff", "head_path",
    "inflect_lemma", "is_not_form", "is_tag_name", "load_lexicon",
    "load_rules", "load_seed_lexicon", "load_subcat_map", "load_templates",
    "lookup_triggers", "match_pattern", "most_specific", "negate_modality",
    "normalize_tag", "noun_forms", "parse_inline", "parse_pattern",
    "parse_sexpr", "parse_standoff", "parse_tag_name", "parse_tagged_line",
    "precision_report", "print_sexpr", "render_inline", "render_tag",
    "strip_tags", "tag_string", "tag_tree", "tag_tree_with_records",
    "verb_forms", "yield_tokens",
]
