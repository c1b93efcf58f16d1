"""Command line front end.

Data goes to stdout, diagnostics (warnings, compile summaries) to stderr,
so output can be piped.  Sentence ids in standoff output are 1-based input
line numbers; blank input lines keep their line number so ids stay
aligned across files.

`--jobs N` fans sentence processing out over N worker processes.  Workers
return finished output chunks together with any warnings, and the parent
emits both in input order, so stdout is byte-identical whatever N is.
"""

from __future__ import annotations

import sys
import warnings
from multiprocessing import Pool

import click

from .evaluation import (SentenceAnnotation, agreement_report,
                         format_agreement, format_precision, normalize_tag,
                         precision_report)
from .core import parse_tag_name
from .patterns import dump_rules, load_rules
from .taggers import (compose_negation, format_standoff, parse_standoff,
                      parse_tagged_line, render_inline,
                      sentence_standoff_rows, tag_string,
                      tag_tree_with_records, tree_standoff_rows)
from .treebank import flatten, parse_sexpr, print_sexpr

# Per-process state for pool workers, filled in by the initializers.
_WORKER: dict = {}


def _load_lexicon_file(path, known_subcats=None):
    from .lexicon import load_lexicon, load_seed_lexicon
    if path is None:
        return load_seed_lexicon()
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh, known_subcats=known_subcats)


def _load_compile_inputs(lexicon_path, templates_path, subcat_map_path):
    from .templates import load_subcat_map, load_templates
    templates = subcat_map = None
    if templates_path is not None:
        with open(templates_path, encoding="utf-8") as fh:
            templates = load_templates(fh)
    if subcat_map_path is not None:
        with open(subcat_map_path, encoding="utf-8") as fh:
            subcat_map = load_subcat_map(fh)
    known = frozenset(subcat_map) if subcat_map is not None else None
    lex = _load_lexicon_file(lexicon_path, known_subcats=known)
    return lex, templates, subcat_map


def _compile_rules(lexicon_path, templates_path, subcat_map_path):
    from .templates import compile_ruleset
    lex, templates, subcat_map = _load_compile_inputs(
        lexicon_path, templates_path, subcat_map_path)
    return compile_ruleset(lex, templates=templates, subcat_map=subcat_map)


def _init_string_worker(lexicon_path, fmt):
    from .lexicon import expand_lexicon
    _WORKER["lexicon"] = expand_lexicon(_load_lexicon_file(lexicon_path))
    _WORKER["fmt"] = fmt


def _run_string_line(item):
    lineno, line = item
    if not line.strip():
        return ("\n" if _WORKER["fmt"] == "inline" else "", [])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        tagged = compose_negation(
            tag_string(parse_tagged_line(line, lineno), _WORKER["lexicon"]))
    notes = ["line %d: %s" % (lineno, w.message) for w in caught]
    if _WORKER["fmt"] == "inline":
        return (render_inline(tagged) + "\n", notes)
    return (format_standoff(sentence_standoff_rows(tagged, lineno)), notes)


def _init_tree_worker(rules_path, lexicon_path, templates_path,
                      subcat_map_path, fmt, do_flatten):
    if rules_path is not None:
        with open(rules_path, encoding="utf-8") as fh:
            _WORKER["rules"] = load_rules(fh)
    else:
        _WORKER["rules"] = _compile_rules(
            lexicon_path, templates_path, subcat_map_path).rules
    _WORKER["fmt"] = fmt
    _WORKER["flatten"] = do_flatten


def _run_tree_line(item):
    lineno, line = item
    if not line.strip():
        return ("\n" if _WORKER["fmt"] == "tree" else "", [])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        tree = parse_sexpr(line)
        if _WORKER["flatten"]:
            tree = flatten(tree)
        tree, records = tag_tree_with_records(tree, _WORKER["rules"])
    notes = ["line %d: %s" % (lineno, w.message) for w in caught]
    if _WORKER["fmt"] == "tree":
        return (print_sexpr(tree) + "\n", notes)
    return (format_standoff(tree_standoff_rows(records, lineno)), notes)


def _process_lines(stream, jobs, initializer, initargs, worker):
    """Run `worker` over numbered lines, in order, optionally in a pool."""
    items = [(i, line.rstrip("\n")) for i, line in enumerate(stream, 1)]
    pool = None
    try:
        if jobs <= 1:
            initializer(*initargs)
            results = map(worker, items)
        else:
            pool = Pool(jobs, initializer=initializer, initargs=initargs)
            results = pool.imap(worker, items, chunksize=64)
        for chunk, notes in results:
            for note in notes:
                click.echo(note, err=True)
            sys.stdout.write(chunk)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        _WORKER.clear()


@click.group()
def main():
    """Modality tagging over POS-tagged text or constituency trees."""


@main.command("tag-string")
@click.argument("source", type=click.File("r"), default="-")
@click.option("--lexicon", "lexicon_path", type=click.Path(exists=True),
              default=None, help="Trigger lexicon (default: bundled).")
@click.option("--format", "fmt", type=click.Choice(["inline", "standoff"]),
              default="inline", show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker processes.")
def tag_string_command(source, lexicon_path, fmt, jobs):
    """Tag word/POS lines; one sentence per line."""
    _process_lines(source, jobs, _init_string_worker, (lexicon_path, fmt),
                   _run_string_line)


@main.command("tag-tree")
@click.argument("source", type=click.File("r"), default="-")
@click.option("--rules", "rules_path", type=click.Path(exists=True),
              default=None, help="Compiled rule file; skips compilation.")
@click.option("--lexicon", "lexicon_path", type=click.Path(exists=True),
              default=None, help="Lexicon to compile rules from.")
@click.option("--templates", "templates_path", type=click.Path(exists=True),
              default=None)
@click.option("--subcat-map", "subcat_map_path", type=click.Path(exists=True),
              default=None)
@click.option("--format", "fmt", type=click.Choice(["tree", "standoff"]),
              default="tree", show_default=True)
@click.option("--no-flatten", is_flag=True,
              help="Match rules against the trees exactly as given.")
@click.option("--jobs", type=int, default=1, show_default=True)
def tag_tree_command(source, rules_path, lexicon_path, templates_path,
                     subcat_map_path, fmt, no_flatten, jobs):
    """Tag s-expression parse trees; one tree per line."""
    if rules_path is not None and lexicon_path is not None:
        raise click.UsageError("--rules and --lexicon are mutually exclusive")
    _process_lines(source, jobs, _init_tree_worker,
                   (rules_path, lexicon_path, templates_path,
                    subcat_map_path, fmt, not no_flatten),
                   _run_tree_line)


@main.command("compile")
@click.option("--lexicon", "lexicon_path", type=click.Path(exists=True),
              default=None, help="Trigger lexicon (default: bundled).")
@click.option("--templates", "templates_path", type=click.Path(exists=True),
              default=None)
@click.option("--subcat-map", "subcat_map_path", type=click.Path(exists=True),
              default=None)
@click.option("-o", "--output", type=click.File("w"), default="-")
def compile_command(lexicon_path, templates_path, subcat_map_path, output):
    """Compile the lexicon into tree rules (written to stdout or -o)."""
    result = _compile_rules(lexicon_path, templates_path, subcat_map_path)
    output.write(dump_rules(result.rules))
    click.echo(result.summary(), err=True)


def _annotations_from_standoff(path, n_sentences):
    with open(path, encoding="utf-8") as fh:
        rows = parse_standoff(fh)
    by_sentence: dict[int, set] = {}
    for sid, _idx, tag_name, _source in rows:
        by_sentence.setdefault(sid, set()).update(
            normalize_tag(parse_tag_name(tag_name)))
    top = max(by_sentence, default=0)
    if n_sentences is not None and top > n_sentences:
        raise click.UsageError("%s has sentence id %d > --sentences %d"
                               % (path, top, n_sentences))
    return [SentenceAnnotation(i, frozenset(by_sentence.get(i, ())))
            for i in range(1, (n_sentences or top) + 1)], top


@main.command("agree")
@click.argument("standoff_a", type=click.Path(exists=True))
@click.argument("standoff_b", type=click.Path(exists=True))
@click.option("--sentences", type=int, default=None,
              help="Total sentence count (default: highest id seen).")
def agree_command(standoff_a, standoff_b, sentences):
    """Sentence-level agreement between two standoff files."""
    if sentences is None:
        _, top_a = _annotations_from_standoff(standoff_a, None)
        _, top_b = _annotations_from_standoff(standoff_b, None)
        sentences = max(top_a, top_b)
    annos_a, _ = _annotations_from_standoff(standoff_a, sentences)
    annos_b, _ = _annotations_from_standoff(standoff_b, sentences)
    sys.stdout.write(format_agreement(agreement_report(annos_a, annos_b)))


@main.command("precision")
@click.argument("system", type=click.Path(exists=True))
@click.argument("gold", type=click.Path(exists=True))
def precision_command(system, gold):
    """Token-level precision of a system standoff file against gold."""
    with open(system, encoding="utf-8") as fh:
        system_rows = parse_standoff(fh)
    with open(gold, encoding="utf-8") as fh:
        gold_rows = parse_standoff(fh)
    sys.stdout.write(format_precision(precision_report(system_rows, gold_rows)))


if __name__ == "__main__":
    main()
