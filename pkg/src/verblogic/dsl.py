"""Line-oriented knowledge-base language and interactive command parsing.

One declaration per line, ``#`` starts a comment:

    kind <child> < <parent>           noun taxonomy
    part <child> < <parent>           place mereology
    way  <child> < <parent>           verb taxonomy
    isa  <individual> : <class>       individual-to-class membership
    iso  <verb> ~ <noun-class>        verb/noun-class pairing
    subject <term> : <class>          subject class label
    mu <class> <verb> <noun> = <x>    characteristic value, x in [0, 1]
    mass <noun>                       rendering flag: no article
    fact <subject> <tense> [not] <verb> [<object>]
         [in <t>] [from <t>] [to <t>] [if "<condition>"]

Tense is one of past/present/future.  The verb and object positions also
accept a parenthesized group, e.g. ``(potato and apple)``, which the
statement algebra distributes into an And/Or compound.  Parsing is not
fail-fast: every problem becomes a positioned diagnostic and the rest of
the file is still read.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import EmptyFrameError, UnknownCommandError
from .statement import Atom, TermGroup, Tense, make_atom
from .taxonomy import RelationKind, Term, canonical_id

TENSES = {t.value: t for t in Tense}
KEYWORDS = ("kind", "part", "way", "isa", "iso", "subject", "mu", "mass", "fact")


@dataclass(frozen=True)
class Diagnostic:
    line: int
    column: int
    severity: str  # "error" | "warning"
    message: str

    def format(self, filename: str = "<kb>") -> str:
        return f"{filename}:{self.line}:{self.column}: {self.severity}: {self.message}"


# -- declarations -------------------------------------------------------------


@dataclass(frozen=True)
class EdgeDecl:
    kind: RelationKind
    child: Term
    parent: Term
    isa: bool = False
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class IsoDecl:
    verb: Term
    noun_class: Term
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SubjectDecl:
    subject: Term
    cls: Term
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MuDecl:
    cls: Term
    verb: Term
    noun: Term
    value: float
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MassDecl:
    noun: Term
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class FactDecl:
    atom: Atom  # may carry group sugar; canonicalized when the KB is built
    line: int = field(default=0, compare=False)


Decl = Union[EdgeDecl, IsoDecl, SubjectDecl, MuDecl, MassDecl, FactDecl]


@dataclass
class KBSource:
    """Ordered parsed declarations; order is irrelevant to KB semantics."""

    declarations: list[Decl] = field(default_factory=list)


@dataclass
class ParseResult:
    source: KBSource
    diagnostics: list[Diagnostic]

    @property
    def ok(self) -> bool:
        return not any(d.severity == "error" for d in self.diagnostics)


# -- tokenizing ---------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    text: str
    column: int  # 1-based
    kind: str = "word"  # word | quoted | group


class _LineError(Exception):
    def __init__(self, column: int, message: str):
        super().__init__(message)
        self.column = column
        self.message = message


def _tokenize(line: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "#":
            break
        start = i
        if ch == '"':
            end = line.find('"', i + 1)
            if end < 0:
                raise _LineError(start + 1, "unterminated quote")
            tokens.append(_Token(line[i + 1:end], start + 1, "quoted"))
            i = end + 1
        elif ch == "(":
            end = line.find(")", i + 1)
            if end < 0:
                raise _LineError(start + 1, "unterminated group")
            tokens.append(_Token(line[i + 1:end].strip(), start + 1, "group"))
            i = end + 1
        else:
            while i < n and not line[i].isspace() and line[i] not in '#("':
                i += 1
            tokens.append(_Token(line[start:i], start + 1))
    return tokens


# -- file parsing -------------------------------------------------------------


class _Parser:
    def __init__(self) -> None:
        self.terms: dict[str, Term] = {}
        self.iso_seen: dict[str, int] = {}
        self.edges_seen: set[tuple[RelationKind, str, str]] = set()
        self.diagnostics: list[Diagnostic] = []
        self.declarations: list[Decl] = []

    def term(self, tok: _Token) -> Term:
        tid = canonical_id(tok.text)
        if not tid:
            raise _LineError(tok.column, "empty term")
        return self.terms.setdefault(tid, Term(tid, tok.text))

    def error(self, line: int, column: int, message: str) -> None:
        self.diagnostics.append(Diagnostic(line, column, "error", message))

    def warning(self, line: int, column: int, message: str) -> None:
        self.diagnostics.append(Diagnostic(line, column, "warning", message))

    # each _parse_* consumes the tokens after the keyword

    def parse_line(self, lineno: int, line: str) -> None:
        try:
            tokens = _tokenize(line)
        except _LineError as exc:
            self.error(lineno, exc.column, exc.message)
            return
        if not tokens:
            return
        head = tokens[0]
        handler = getattr(self, f"_parse_{head.text.casefold()}", None)
        if handler is None or head.text.casefold() not in KEYWORDS:
            self.error(lineno, head.column,
                       f"unknown keyword {head.text!r} (expected one of: "
                       + ", ".join(KEYWORDS) + ")")
            return
        try:
            decl = handler(tokens[1:], lineno)
        except _LineError as exc:
            self.error(lineno, exc.column, exc.message)
            return
        if decl is not None:
            self.declarations.append(decl)

    def _expect_shape(self, tokens: list[_Token], count: int, usage: str,
                      lineno: int) -> None:
        if len(tokens) != count:
            col = tokens[count].column if len(tokens) > count else (
                tokens[-1].column + len(tokens[-1].text) if tokens else 1)
            raise _LineError(col, f"expected: {usage}")

    def _edge(self, tokens: list[_Token], lineno: int, keyword: str,
              kind: RelationKind, sep: str, isa: bool) -> EdgeDecl | None:
        usage = f"{keyword} <child> {sep} <parent>"
        self._expect_shape(tokens, 3, usage, lineno)
        if tokens[1].text != sep:
            raise _LineError(tokens[1].column, f"expected: {usage}")
        child, parent = self.term(tokens[0]), self.term(tokens[2])
        key = (kind, child.id, parent.id)
        if key in self.edges_seen:
            self.warning(lineno, tokens[0].column,
                         f"duplicate declaration {child.id} {sep} {parent.id}")
            return None
        self.edges_seen.add(key)
        return EdgeDecl(kind, child, parent, isa=isa, line=lineno)

    def _parse_kind(self, tokens, lineno):
        return self._edge(tokens, lineno, "kind", RelationKind.KIND_OF, "<", False)

    def _parse_part(self, tokens, lineno):
        return self._edge(tokens, lineno, "part", RelationKind.PART_OF, "<", False)

    def _parse_way(self, tokens, lineno):
        return self._edge(tokens, lineno, "way", RelationKind.WAY_OF, "<", False)

    def _parse_isa(self, tokens, lineno):
        return self._edge(tokens, lineno, "isa", RelationKind.KIND_OF, ":", True)

    def _parse_iso(self, tokens, lineno):
        usage = "iso <verb> ~ <noun-class>"
        self._expect_shape(tokens, 3, usage, lineno)
        if tokens[1].text != "~":
            raise _LineError(tokens[1].column, f"expected: {usage}")
        verb = self.term(tokens[0])
        if verb.id in self.iso_seen:
            raise _LineError(
                tokens[0].column,
                f"duplicate noun class for verb {verb.id!r} "
                f"(first declared on line {self.iso_seen[verb.id]})")
        self.iso_seen[verb.id] = lineno
        return IsoDecl(verb, self.term(tokens[2]), line=lineno)

    def _parse_subject(self, tokens, lineno):
        usage = "subject <term> : <class>"
        self._expect_shape(tokens, 3, usage, lineno)
        if tokens[1].text != ":":
            raise _LineError(tokens[1].column, f"expected: {usage}")
        return SubjectDecl(self.term(tokens[0]), self.term(tokens[2]), line=lineno)

    def _parse_mu(self, tokens, lineno):
        usage = "mu <subject-class> <verb> <noun> = <decimal in [0,1]>"
        self._expect_shape(tokens, 5, usage, lineno)
        if tokens[3].text != "=":
            raise _LineError(tokens[3].column, f"expected: {usage}")
        try:
            value = float(tokens[4].text)
        except ValueError:
            raise _LineError(tokens[4].column,
                             f"expected a decimal, got {tokens[4].text!r}") from None
        if not 0.0 <= value <= 1.0:
            raise _LineError(tokens[4].column, "value outside [0,1]")
        return MuDecl(self.term(tokens[0]), self.term(tokens[1]),
                      self.term(tokens[2]), value, line=lineno)

    def _parse_mass(self, tokens, lineno):
        self._expect_shape(tokens, 1, "mass <noun>", lineno)
        return MassDecl(self.term(tokens[0]), line=lineno)

    def _group(self, tok: _Token) -> TermGroup:
        words = tok.text.split()
        connectives = {w.casefold() for w in words[1::2]}
        terms = words[0::2]
        if len(terms) < 2 or connectives not in ({"and"}, {"or"}):
            raise _LineError(
                tok.column, "group must look like (a and b) or (a or b)")
        made = tuple(self.term(_Token(w, tok.column)) for w in terms)
        return TermGroup(connectives.pop(), made)

    def _slot(self, tok: _Token):
        return self._group(tok) if tok.kind == "group" else self.term(tok)

    def _parse_fact(self, tokens, lineno):
        usage = ("fact <subject> <tense> [not] <verb> [<object>] "
                 '[in <t>] [from <t>] [to <t>] [if "<condition>"]')
        if len(tokens) < 3:
            col = tokens[-1].column if tokens else 1
            raise _LineError(col, f"expected: {usage}")
        queue = list(tokens)
        subject = self.term(queue.pop(0))
        tense_tok = queue.pop(0)
        tense = TENSES.get(tense_tok.text.casefold())
        if tense is None:
            raise _LineError(tense_tok.column,
                             "tense must be past, present or future")
        negated = False
        if queue and queue[0].text.casefold() == "not":
            negated = True
            queue.pop(0)
        if not queue:
            raise _LineError(tense_tok.column + len(tense_tok.text),
                             f"expected: {usage}")
        verb = self._slot(queue.pop(0))
        obj = None
        if queue and queue[0].kind != "quoted" and \
                queue[0].text.casefold() not in ("in", "from", "to", "if"):
            obj = self._slot(queue.pop(0))
        places: dict[str, Term] = {}
        condition = None
        while queue:
            tok = queue.pop(0)
            word = tok.text.casefold()
            if word in ("in", "from", "to"):
                if not queue:
                    raise _LineError(tok.column, f"{word} needs a term")
                if word in places:
                    raise _LineError(tok.column, f"duplicate place slot {word!r}")
                places[word] = self.term(queue.pop(0))
            elif word == "if":
                if not queue or queue[0].kind != "quoted":
                    raise _LineError(tok.column,
                                     'if needs a quoted "<condition>"')
                condition = queue.pop(0).text
                if queue:
                    raise _LineError(queue[0].column,
                                     "condition must end the fact")
            else:
                raise _LineError(tok.column, f"unexpected token {tok.text!r}")
        try:
            atom = make_atom(subject, verb, obj, places, tense=tense,
                             negated=negated, condition=condition)
        except EmptyFrameError:
            raise _LineError(tokens[0].column,
                             "fact needs an object or at least one place") from None
        return FactDecl(atom, line=lineno)


def parse_kb(text: str) -> ParseResult:
    """Parse a whole KB file, collecting every diagnostic."""
    parser = _Parser()
    for lineno, line in enumerate(text.splitlines(), start=1):
        parser.parse_line(lineno, line)
    return ParseResult(KBSource(parser.declarations), parser.diagnostics)


# -- serialization ------------------------------------------------------------

_EDGE_KEYWORD = {RelationKind.KIND_OF: "kind", RelationKind.PART_OF: "part",
                 RelationKind.WAY_OF: "way"}


def _slot_text(slot) -> str:
    if isinstance(slot, TermGroup):
        inner = f" {slot.op} ".join(t.display for t in slot.terms)
        return f"({inner})"
    return slot.display


def serialize_decl(decl: Decl) -> str:
    if isinstance(decl, EdgeDecl):
        if decl.isa:
            return f"isa {decl.child.display} : {decl.parent.display}"
        return f"{_EDGE_KEYWORD[decl.kind]} {decl.child.display} < {decl.parent.display}"
    if isinstance(decl, IsoDecl):
        return f"iso {decl.verb.display} ~ {decl.noun_class.display}"
    if isinstance(decl, SubjectDecl):
        return f"subject {decl.subject.display} : {decl.cls.display}"
    if isinstance(decl, MuDecl):
        return (f"mu {decl.cls.display} {decl.verb.display} "
                f"{decl.noun.display} = {decl.value:g}")
    if isinstance(decl, MassDecl):
        return f"mass {decl.noun.display}"
    atom = decl.atom
    parts = ["fact", atom.subject.display, atom.tense.value]
    if atom.negated:
        parts.append("not")
    parts.append(_slot_text(atom.verb))
    if atom.obj is not None:
        parts.append(_slot_text(atom.obj))
    for slot, place in atom.places.items():
        parts.extend([slot, place.display])
    if atom.condition is not None:
        parts.append(f'if "{atom.condition}"')
    return " ".join(parts)


def serialize_kb(source: KBSource) -> str:
    return "\n".join(serialize_decl(d) for d in source.declarations) + "\n"


# -- interactive commands -----------------------------------------------------


@dataclass(frozen=True)
class AskCommand:
    operator: str  # HOW | WHICH_PART | WHICH_KIND
    slot: str | None = None


@dataclass(frozen=True)
class ShowConclusionsCommand:
    pass


@dataclass(frozen=True)
class ShowFactCommand:
    pass


@dataclass(frozen=True)
class AnnotateCommand:
    subject: str
    verb: str
    noun: str


@dataclass(frozen=True)
class QuitCommand:
    pass


ReplCommand = Union[AskCommand, ShowConclusionsCommand, ShowFactCommand,
                    AnnotateCommand, QuitCommand]

_ACCEPTED_FORMS = ("HOW | WHICH PART [in|from|to] | WHICH KIND | "
                   "conclusions | fact | annotate <subject> <verb> <noun> | quit")


def parse_command(line: str) -> ReplCommand:
    """Parse one interactive line; WHAT KIND and WHICH KIND are synonyms."""
    words = line.strip().split()
    lowered = [w.casefold() for w in words]
    if not lowered:
        raise UnknownCommandError(f"empty command; accepted: {_ACCEPTED_FORMS}")
    if lowered == ["how"]:
        return AskCommand("HOW")
    if lowered[0] in ("which", "what") and len(lowered) >= 2:
        rest = lowered[1:]
        if rest[0] == "part" and len(rest) <= 2:
            slot = rest[1] if len(rest) == 2 else None
            if slot in (None, "in", "from", "to"):
                return AskCommand("WHICH_PART", slot)
        if rest == ["kind"]:
            return AskCommand("WHICH_KIND")
    if lowered[0] in ("whichpart", "which_part") and len(lowered) <= 2:
        slot = lowered[1] if len(lowered) == 2 else None
        if slot in (None, "in", "from", "to"):
            return AskCommand("WHICH_PART", slot)
    if lowered[0] in ("whichkind", "whatkind", "which_kind", "what_kind") \
            and len(lowered) == 1:
        return AskCommand("WHICH_KIND")
    if lowered == ["conclusions"]:
        return ShowConclusionsCommand()
    if lowered == ["fact"]:
        return ShowFactCommand()
    if lowered[0] == "annotate" and len(words) == 4:
        return AnnotateCommand(words[1], words[2], words[3])
    if lowered == ["quit"]:
        return QuitCommand()
    raise UnknownCommandError(
        f"unknown command {line.strip()!r}; accepted: {_ACCEPTED_FORMS}")
