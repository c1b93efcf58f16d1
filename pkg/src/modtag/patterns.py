"""Tree patterns, matching and tag-insertion rules.

The pattern DSL is a small tregex-like language over constituency trees.
A pattern is one node description; relation clauses hang further node
descriptions off it:

    trigger:(MD word=can|could) $ target:(VB|VBZ|VBP|VBD|VBG|VBN) .. target

reads "a preterminal labeled MD whose word is can or could, with a sister
bound to `target` that it also precedes".  Node syntax:

    [name:] ( LABELSPEC [word=w1|w2|...] [REL operand ...] )

where LABELSPEC is a label, a `|` alternation of labels, a /regex/ (which
must match the whole label) or `*` for any label.  For preterminals the
label is the POS.  Word constraints only ever match preterminals and are
case-insensitive.  An operand is either a node description or the bare
name of a node declared elsewhere in the pattern (a back reference; both
clauses then constrain the same tree node).  Relation clauses written
after the top-level node attach to it, as if inside its parentheses.

Relations (left side is the node the clause hangs on):

    <    immediate dominance (operand is a child)
    <<   dominance (operand is a proper descendant)
    .    immediately precedes (token spans are adjacent)
    ..   precedes (operand's span starts at or after this span's end)
    $    sister (same parent, distinct nodes); `$sister` is an alias

A match binds every named pattern node to a tree node.  Matches are
enumerated in document order of the match root (then of the other named
nodes in declaration order); two assignments that differ only on unnamed
nodes count as one match.

A Rule couples a pattern with tag insertions.  Applying a rule keeps, for
each distinct binding of its trigger node (the node named `trigger`, or
the match root when no node has that name), only the first match, then
inserts the action's tag names.  A tag aimed at an internal node lands on
the node's head preterminal: its last nominal child in yield order,
falling back to the last adjective-like preterminal and then to the last
preterminal outright.  Insertion is idempotent, and rule application
never changes the tree's shape or yield, only preterminal tag lists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .core import parse_tag_name
from .treebank import Internal, ParseTree, Preterminal, add_tags, node_at, walk

RELATION_OPS = ("<<", "<", "..", ".", "$")


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


@dataclass(frozen=True)
class LabelSpec:
    """Label constraint: alternation of literals, a regex, or anything."""

    labels: Optional[tuple[str, ...]] = None
    regex: Optional[str] = None

    def matches(self, label: str) -> bool:
        if self.labels is not None:
            return label in self.labels
        if self.regex is not None:
            return re.fullmatch(self.regex, label) is not None
        return True

    def __str__(self) -> str:
        if self.labels is not None:
            return "|".join(self.labels)
        if self.regex is not None:
            return "/%s/" % self.regex
        return "*"


@dataclass(frozen=True)
class BackRef:
    name: str


@dataclass
class PatternNode:
    label: LabelSpec
    name: Optional[str] = None
    words: Optional[tuple[str, ...]] = None
    relations: list[tuple[str, Union["PatternNode", BackRef]]] = field(default_factory=list)

    def matches_node(self, node: ParseTree) -> bool:
        node_label = node.pos if isinstance(node, Preterminal) else node.label
        if not self.label.matches(node_label):
            return False
        if self.words is not None:
            return isinstance(node, Preterminal) and node.word.lower() in self.words
        return True

    def __str__(self) -> str:
        parts = [str(self.label)]
        if self.words is not None:
            parts.append("word=" + "|".join(self.words))
        for op, operand in self.relations:
            parts.append(op)
            parts.append(operand.name if isinstance(operand, BackRef) else str(operand))
        body = "(" + " ".join(parts) + ")"
        return self.name + ":" + body if self.name else body


@dataclass
class TreePattern:
    root: PatternNode
    nodes: list[PatternNode]          # all pattern nodes, declaration order
    named: dict[str, PatternNode]

    @property
    def names(self) -> list[str]:
        return list(self.named)

    def __str__(self) -> str:
        return str(self.root)

    def __eq__(self, other) -> bool:
        return isinstance(other, TreePattern) and str(self) == str(other)


# ---------------------------------------------------------------- parsing

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise PatternSyntaxError("expected %r" % ch, self.pos)
        self.pos += 1

    def atom(self) -> str:
        """A run of characters that can appear in labels and words."""
        self.skip_ws()
        j = self.pos
        while j < len(self.text) and not self.text[j].isspace() and self.text[j] not in "()|":
            j += 1
        if j == self.pos:
            raise PatternSyntaxError("expected a name, label or word", self.pos)
        out = self.text[self.pos:j]
        self.pos = j
        return out

    def relation(self) -> Optional[str]:
        self.skip_ws()
        rest = self.text[self.pos:]
        if rest.startswith("$sister"):
            self.pos += len("$sister")
            return "$"
        for op in RELATION_OPS:
            if rest.startswith(op):
                self.pos += len(op)
                return op
        return None


def parse_pattern(text: str) -> TreePattern:
    """Parse the DSL; raises PatternSyntaxError with a character offset."""
    sc = _Scanner(text)
    nodes: list[PatternNode] = []
    named: dict[str, PatternNode] = {}

    def parse_alternation() -> tuple[str, ...]:
        items = [sc.atom()]
        while sc.peek() == "|":
            sc.expect("|")
            items.append(sc.atom())
        return tuple(items)

    def parse_labelspec() -> LabelSpec:
        sc.skip_ws()
        if sc.peek() == "/":
            start = sc.pos
            end = sc.text.find("/", sc.pos + 1)
            if end < 0:
                raise PatternSyntaxError("unterminated /regex/", start)
            body = sc.text[sc.pos + 1:end]
            sc.pos = end + 1
            try:
                re.compile(body)
            except re.error as exc:
                raise PatternSyntaxError("bad regex: %s" % exc, start) from None
            return LabelSpec(regex=body)
        alt = parse_alternation()
        if alt == ("*",):
            return LabelSpec()
        return LabelSpec(labels=alt)

    def parse_clauses(node: PatternNode, stop_at_paren: bool):
        while True:
            sc.skip_ws()
            if stop_at_paren and sc.peek() == ")":
                return
            if sc.eof():
                if stop_at_paren:
                    raise PatternSyntaxError("unterminated '('", sc.pos)
                return
            start = sc.pos
            op = sc.relation()
            if op is None:
                raise PatternSyntaxError("expected a relation operator", start)
            sc.skip_ws()
            operand_start = sc.pos
            if sc.peek() == "(" or _looks_like_node_start(sc):
                node.relations.append((op, parse_node()))
            else:
                name = sc.atom()
                if not _NAME_RE.fullmatch(name):
                    raise PatternSyntaxError("bad node reference %r" % name, operand_start)
                node.relations.append((op, BackRef(name)))

    def _looks_like_node_start(sc: _Scanner) -> bool:
        # A named node: IDENT ':' '('
        m = _NAME_RE.match(sc.text, sc.pos)
        if not m:
            return False
        j = m.end()
        return j < len(sc.text) and sc.text[j] == ":"

    def parse_node() -> PatternNode:
        sc.skip_ws()
        name = None
        start = sc.pos
        m = _NAME_RE.match(sc.text, sc.pos)
        if m and m.end() < len(sc.text) and sc.text[m.end()] == ":":
            name = m.group()
            sc.pos = m.end() + 1
        sc.expect("(")
        node = PatternNode(label=parse_labelspec(), name=name)
        sc.skip_ws()
        # word= constraints come before relation clauses
        while True:
            sc.skip_ws()
            if sc.text.startswith("word=", sc.pos):
                if node.words is not None:
                    raise PatternSyntaxError("duplicate word constraint", sc.pos)
                sc.pos += len("word=")
                node.words = tuple(w.lower() for w in parse_alternation())
            else:
                break
        parse_clauses(node, stop_at_paren=True)
        sc.expect(")")
        if name is not None:
            if name in named:
                raise PatternSyntaxError("node name %r declared twice" % name, start)
            named[name] = node
        nodes.append(node)
        return node

    root = parse_node()
    parse_clauses(root, stop_at_paren=False)
    if not sc.eof():
        raise PatternSyntaxError("trailing content", sc.pos)

    pattern = TreePattern(root=root, nodes=nodes, named=named)
    _check_refs(pattern)
    return pattern


def _check_refs(pattern: TreePattern):
    for node in pattern.nodes:
        for _, operand in node.relations:
            if isinstance(operand, BackRef) and operand.name not in pattern.named:
                raise PatternSyntaxError("reference to undeclared node %r" % operand.name, 0)


# ---------------------------------------------------------------- matching

Path = tuple[int, ...]


class TreeIndex:
    """Per-tree tables the matcher needs: preorder paths, spans, parents."""

    def __init__(self, tree: ParseTree):
        self.tree = tree
        self.paths: list[Path] = []
        self.order: dict[Path, int] = {}
        self.node: dict[Path, ParseTree] = {}
        self.span: dict[Path, tuple[int, int]] = {}
        for path, node in walk(tree):
            self.order[path] = len(self.paths)
            self.paths.append(path)
            self.node[path] = node
        counter = 0

        def assign_spans(path: Path) -> tuple[int, int]:
            nonlocal counter
            node = self.node[path]
            if isinstance(node, Preterminal):
                span = (counter, counter + 1)
                counter += 1
            else:
                start = counter
                for i in range(len(node.children)):
                    assign_spans(path + (i,))
                span = (start, counter)
            self.span[path] = span
            return span

        assign_spans(())

    def parent(self, path: Path) -> Optional[Path]:
        return path[:-1] if path else None

    def related(self, op: str, path: Path) -> Iterator[Path]:
        """Paths standing in relation `op` to the node at `path`."""
        node = self.node[path]
        if op == "<":
            if isinstance(node, Internal):
                for i in range(len(node.children)):
                    yield path + (i,)
        elif op == "<<":
            for other in self.paths:
                if len(other) > len(path) and other[: len(path)] == path:
                    yield other
        elif op == "$":
            if path:
                parent, me = path[:-1], path[-1]
                for i in range(len(self.node[parent].children)):
                    if i != me:
                        yield parent + (i,)
        elif op in (".", ".."):
            end = self.span[path][1]
            for other in self.paths:
                start = self.span[other][0]
                if (start == end) if op == "." else (start >= end):
                    yield other

    def holds(self, op: str, a: Path, b: Path) -> bool:
        if op == "<":
            return b[:-1] == a and len(b) == len(a) + 1
        if op == "<<":
            return len(b) > len(a) and b[: len(a)] == a
        if op == "$":
            return a != b and len(a) == len(b) and bool(a) and a[:-1] == b[:-1]
        if op == ".":
            return self.span[a][1] == self.span[b][0]
        if op == "..":
            return self.span[a][1] <= self.span[b][0]
        raise ValueError("unknown relation %r" % op)


@dataclass(frozen=True)
class Match:
    tree: ParseTree
    root: Path
    bindings: dict[str, Path] = field(hash=False)

    def node(self, name: str) -> ParseTree:
        return node_at(self.tree, self.bindings[name])

    def path(self, name: str) -> Path:
        return self.bindings[name]


def match_pattern(pattern: TreePattern, tree: ParseTree,
                  index: Optional[TreeIndex] = None) -> list[Match]:
    """All distinct matches of `pattern` in `tree`, in document order."""
    idx = index if index is not None and index.tree is tree else TreeIndex(tree)
    order = idx.order
    names = pattern.names
    seen: set[tuple] = set()
    results: list[tuple[tuple, Match]] = []

    def satisfy(node: PatternNode, path: Path, env: dict[str, Path]) -> Iterator[dict[str, Path]]:
        if not node.matches_node(idx.node[path]):
            return
        if node.name is not None:
            if env.get(node.name, path) != path:
                return
            env = {**env, node.name: path}

        def clauses(i: int, env: dict[str, Path]) -> Iterator[dict[str, Path]]:
            if i == len(node.relations):
                yield env
                return
            op, operand = node.relations[i]
            if isinstance(operand, BackRef):
                bound = env.get(operand.name)
                if bound is not None:
                    if idx.holds(op, path, bound):
                        yield from clauses(i + 1, env)
                    return
                # forward reference: operand declared later in the pattern
                target_node = pattern.named[operand.name]
                for other in idx.related(op, path):
                    for child_env in satisfy(target_node, other, env):
                        yield from clauses(i + 1, child_env)
                return
            for other in idx.related(op, path):
                for child_env in satisfy(operand, other, env):
                    yield from clauses(i + 1, child_env)

        yield from clauses(0, env)

    for root_path in idx.paths:
        for env in satisfy(pattern.root, root_path, {}):
            key = (root_path,) + tuple(env.get(n) for n in names)
            if key not in seen:
                seen.add(key)
                sort_key = (order[root_path],) + tuple(
                    order[env[n]] if n in env else -1 for n in names
                )
                results.append((sort_key, Match(tree, root_path, dict(env))))

    results.sort(key=lambda pair: pair[0])
    return [m for _, m in results]


# ---------------------------------------------------------------- rules

HEAD_PRIMARY = {"NN", "NNS", "NNP", "NNPS"}
HEAD_SECONDARY = {"JJ", "VBG", "CD", "PRP", "PRP$"}


def head_path(tree: ParseTree, path: Path) -> Path:
    """Head preterminal of the node at `path` (see module docstring)."""
    node = node_at(tree, path)
    if isinstance(node, Preterminal):
        return path
    pres = [(p, n) for p, n in walk(node) if isinstance(n, Preterminal)]
    for pool in (HEAD_PRIMARY, HEAD_SECONDARY):
        hits = [p for p, n in pres if n.pos in pool]
        if hits:
            return path + hits[-1]
    return path + pres[-1][0]


@dataclass
class Rule:
    rule_id: str
    pattern: TreePattern
    action: tuple[tuple[str, str], ...]   # (node name, tag name)
    provenance: str = "-"

    def __post_init__(self):
        if not self.action:
            raise ValueError("rule %s has an empty action" % self.rule_id)
        for name, tag in self.action:
            if name not in self.pattern.named:
                raise ValueError(
                    "rule %s action names %r, which the pattern does not bind"
                    % (self.rule_id, name))
            parse_tag_name(tag)   # unknown tag names fail here

    @property
    def trigger_name(self) -> Optional[str]:
        return "trigger" if "trigger" in self.pattern.named else None


def apply_rule(rule: Rule, tree: ParseTree,
               index: Optional[TreeIndex] = None) -> ParseTree:
    tagged, _ = apply_rule_with_records(rule, tree, index)
    return tagged


def apply_rule_with_records(
    rule: Rule, tree: ParseTree, index: Optional[TreeIndex] = None
) -> tuple[ParseTree, list[tuple[Path, str]]]:
    """Apply one rule; also report (preterminal path, tag name) insertions."""
    matches = match_pattern(rule.pattern, tree, index)
    chosen: dict[Path, Match] = {}
    for m in matches:
        anchor = m.bindings[rule.trigger_name] if rule.trigger_name else m.root
        chosen.setdefault(anchor, m)

    additions: dict[Path, list[str]] = {}
    records: list[tuple[Path, str]] = []
    for m in chosen.values():
        for name, tag in rule.action:
            target = head_path(tree, m.bindings[name])
            node = node_at(tree, target)
            if tag not in node.tags and tag not in additions.get(target, ()):
                additions.setdefault(target, []).append(tag)
                records.append((target, tag))
    return add_tags(tree, additions), records


# ---------------------------------------------------------------- rule files

def format_action(action) -> str:
    return ";".join("%s=%s" % (name, tag) for name, tag in action)


def parse_action(text: str) -> tuple[tuple[str, str], ...]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, sep, tag = chunk.partition("=")
        if not sep:
            raise ValueError("bad action clause %r" % chunk)
        pairs.append((name.strip(), tag.strip()))
    return tuple(pairs)


def dump_rules(rules) -> str:
    lines = ["# columns: rule id | pattern | action | provenance"]
    for r in rules:
        lines.append(" | ".join([r.rule_id, str(r.pattern), format_action(r.action), r.provenance]))
    return "\n".join(lines) + "\n"


def load_rules(stream) -> list[Rule]:
    if isinstance(stream, str):
        stream = stream.splitlines()
    rules = []
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        # '|' also appears inside label alternations, so split carefully:
        # id, then pattern up to the last two fields.
        if len(fields) < 4:
            raise ValueError("line %d: expected 4 |-separated fields" % lineno)
        rule_id = fields[0]
        action_text, provenance = fields[-2], fields[-1]
        pattern_text = "|".join(fields[1:-2])
        rules.append(Rule(rule_id, parse_pattern(pattern_text),
                          parse_action(action_text), provenance))
    return rules
