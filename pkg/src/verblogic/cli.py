"""Command-line entry point and HTTP serving mode.

Subcommands: check, derive, ask, repl, annotate, serve.  Exit codes:
0 success, 1 diagnostics or runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import dialogue, dsl, engine, fuzzy
from .errors import (AmbiguousSlotError, AxisEmptyError, FrameMismatchError,
                     FullySpecificError, NoIsomorphismError,
                     UnknownCommandError, VerbLogicError)
from .kb import KnowledgeBase, load_file
from .statement import (And, Atom, Compound, FrequencyAdverb, Leaf, Tense,
                        atom_record, make_atom, render_compound, render_text)

DEFAULT_PORT = 7878


def _print_diagnostics(diags, filename: str) -> None:
    for d in diags:
        print(d.format(filename), file=sys.stderr)


def _load(path: str) -> KnowledgeBase | None:
    try:
        kb, diags = load_file(path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None
    _print_diagnostics(diags, path)
    return kb


def _atom_json(kb: KnowledgeBase, atom: Atom) -> dict:
    record = atom_record(atom)
    record["rendered"] = render_text(atom, kb.lexicon, bare_nouns=kb.bare_nouns)
    return record


def _conclusion_json(kb: KnowledgeBase, c: Compound) -> dict:
    if isinstance(c, Leaf):
        return _atom_json(kb, c.atom)
    op = "and" if isinstance(c, And) else "or"
    return {
        "op": op,
        "parts": [_conclusion_json(kb, p) for p in c.parts],
        "rendered": render_compound(c, kb.lexicon, bare_nouns=kb.bare_nouns),
    }


def _emit(kb: KnowledgeBase, conclusions, fmt: str) -> None:
    for c in conclusions:
        if fmt == "json":
            payload = _conclusion_json(kb, c) if not isinstance(c, Leaf) \
                else _atom_json(kb, c.atom)
            print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        else:
            print(render_compound(c, kb.lexicon, bare_nouns=kb.bare_nouns))


# -- subcommands ----------------------------------------------------------


def _cmd_check(args) -> int:
    kb = _load(args.kb)
    if kb is None:
        return 1
    print("OK")
    return 0


def _cmd_derive(args) -> int:
    kb = _load(args.kb)
    if kb is None:
        return 1
    for fact in kb.facts:
        _emit(kb, engine.derive_all(kb, fact), args.format)
    return 0


def _fact_atom(kb: KnowledgeBase, index: int) -> Atom:
    if not 0 <= index < len(kb.facts):
        raise VerbLogicError(f"no fact with index {index}")
    fact = kb.facts[index]
    if not isinstance(fact, Leaf):
        raise VerbLogicError("dialogue needs a plain (non-compound) fact")
    return fact.atom


def _cmd_ask(args) -> int:
    kb = _load(args.kb)
    if kb is None:
        return 1
    try:
        session = dialogue.open_session(kb, _fact_atom(kb, args.fact))
        atom = dialogue.ask(session, dialogue.QuestionOperator[args.op],
                            args.slot)
    except VerbLogicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(_atom_json(kb, atom), sort_keys=True,
                         separators=(",", ":")))
    else:
        print(render_text(atom, kb.lexicon, bare_nouns=kb.bare_nouns))
    return 0


def _annotate_sentence(kb: KnowledgeBase, subject: str, verb: str, noun: str,
                       tense: Tense) -> str:
    s, v, n = kb.term(subject), kb.term(verb), kb.term(noun)
    try:
        atom = fuzzy.annotate(kb, s, v, n, tense)
    except FrameMismatchError:
        atom = make_atom(s, v, n, tense=tense, adverb=FrequencyAdverb.NEVER)
    return render_text(atom, kb.lexicon, bare_nouns=kb.bare_nouns)


def _cmd_annotate(args) -> int:
    kb = _load(args.kb)
    if kb is None:
        return 1
    try:
        print(_annotate_sentence(kb, args.subject, args.verb, args.noun,
                                 Tense(args.tense)))
    except NoIsomorphismError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_repl(args) -> int:
    kb = _load(args.kb)
    if kb is None:
        return 1
    try:
        session = dialogue.open_session(kb, _fact_atom(kb, args.fact))
    except VerbLogicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    say = lambda text: print(f"A: {text}")
    say(dialogue.rendered_utterance(kb, session))
    interactive = sys.stdin.isatty()
    while True:
        try:
            if interactive:
                line = input("B> ")
            else:
                line = input()
                print(f"B> {line}")
        except EOFError:
            break
        if not line.strip():
            continue
        try:
            command = dsl.parse_command(line)
        except UnknownCommandError as exc:
            say(str(exc))
            continue
        if isinstance(command, dsl.QuitCommand):
            break
        if isinstance(command, dsl.AskCommand):
            try:
                dialogue.ask(session,
                             dialogue.QuestionOperator[command.operator],
                             command.slot)
                say(dialogue.rendered_utterance(kb, session))
            except (FullySpecificError, AmbiguousSlotError,
                    AxisEmptyError) as exc:
                say(f"({exc})")
        elif isinstance(command, dsl.ShowFactCommand):
            say(render_text(session.fact, kb.lexicon, bare_nouns=kb.bare_nouns))
        elif isinstance(command, dsl.ShowConclusionsCommand):
            for atom in engine.derive_conclusions(kb, session.fact):
                say(render_text(atom, kb.lexicon, bare_nouns=kb.bare_nouns))
        elif isinstance(command, dsl.AnnotateCommand):
            try:
                say(_annotate_sentence(kb, command.subject, command.verb,
                                       command.noun, Tense.PRESENT))
            except NoIsomorphismError as exc:
                say(f"({exc})")
    return 0


# -- HTTP API --------------------------------------------------------------


class _ServerState:
    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        self.sessions: dict[str, dialogue.Session] = {}
        self.lock = threading.Lock()


_SESSION_RE = re.compile(r"^/api/session/([0-9a-f]+)$")
_ASK_RE = re.compile(r"^/api/session/([0-9a-f]+)/ask$")


class _ApiHandler(BaseHTTPRequestHandler):
    server_version = "verblogic"

    @property
    def state(self) -> _ServerState:
        return self.server.state  # type: ignore[attr-defined]

    def log_message(self, *args) -> None:  # silence request logging
        pass

    def _send(self, status: int, payload) -> None:
        body = json.dumps(payload, sort_keys=True).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _fail(self, status: int, code: str, message: str) -> None:
        self._send(status, {"code": code, "error": message})

    def _body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return None
        return json.loads(raw.decode("utf-8"))

    def _session_payload(self, session: dialogue.Session) -> dict:
        kb = self.state.kb
        atom = session.utterance()
        record = atom_record(atom)
        rendered = dialogue.rendered_utterance(kb, session)
        record["rendered"] = rendered
        return {
            "session_id": session.id,
            "utterance": record,
            "rendered": rendered,
            "refinements": [
                {"operator": op.value, "slot": slot}
                for op, slot in dialogue.available_refinements(session)
            ],
            "done": session.fully_specific,
        }

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()

    def do_GET(self) -> None:
        kb = self.state.kb
        if self.path == "/api/facts":
            facts = [
                {"index": i,
                 "rendered": render_compound(f, kb.lexicon,
                                             bare_nouns=kb.bare_nouns)}
                for i, f in enumerate(kb.facts)
            ]
            self._send(200, facts)
            return
        match = _SESSION_RE.match(self.path)
        if match:
            with self.state.lock:
                session = self.state.sessions.get(match.group(1))
                if session is None:
                    self._fail(404, "unknown_session", "no such session")
                    return
                self._send(200, self._session_payload(session))
            return
        self._fail(404, "not_found", f"no route for {self.path}")

    def do_POST(self) -> None:
        try:
            body = self._body()
        except (json.JSONDecodeError, UnicodeDecodeError):
            self._fail(400, "bad_request", "body is not valid JSON")
            return
        if self.path == "/api/session":
            self._create_session(body)
            return
        match = _ASK_RE.match(self.path)
        if match:
            self._ask(match.group(1), body)
            return
        self._fail(404, "not_found", f"no route for {self.path}")

    def _create_session(self, body) -> None:
        if not isinstance(body, dict) or not isinstance(body.get("fact"), int):
            self._fail(400, "bad_request", 'body must be {"fact": <index>}')
            return
        kb = self.state.kb
        index = body["fact"]
        if not 0 <= index < len(kb.facts):
            self._fail(404, "unknown_fact", f"no fact with index {index}")
            return
        fact = kb.facts[index]
        if not isinstance(fact, Leaf) or fact.atom.negated:
            self._fail(400, "unsupported_fact",
                       "dialogue needs a plain positive fact")
            return
        session = dialogue.open_session(kb, fact.atom)
        with self.state.lock:
            self.state.sessions[session.id] = session
            self._send(200, self._session_payload(session))

    def _ask(self, session_id: str, body) -> None:
        if not isinstance(body, dict) or "operator" not in body:
            self._fail(400, "bad_request",
                       'body must be {"operator": ..., "slot"?: ...}')
            return
        op_name = str(body["operator"]).upper().replace(" ", "_")
        try:
            op = dialogue.QuestionOperator[op_name]
        except KeyError:
            self._fail(400, "bad_request", f"unknown operator {body['operator']!r}")
            return
        slot = body.get("slot")
        if slot is not None and slot not in ("in", "from", "to"):
            self._fail(400, "bad_request", f"unknown slot {slot!r}")
            return
        with self.state.lock:
            session = self.state.sessions.get(session_id)
            if session is None:
                self._fail(404, "unknown_session", "no such session")
                return
            try:
                dialogue.ask(session, op, slot)
            except FullySpecificError as exc:
                self._fail(409, "fully_specific", str(exc))
                return
            except AmbiguousSlotError as exc:
                self._fail(409, "ambiguous_slot", str(exc))
                return
            except AxisEmptyError as exc:
                self._fail(409, "axis_empty", str(exc))
                return
            self._send(200, self._session_payload(session))


def make_server(kb: KnowledgeBase, port: int = DEFAULT_PORT,
                host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Build the API server without starting it (port 0 picks a free one)."""
    server = ThreadingHTTPServer((host, port), _ApiHandler)
    server.state = _ServerState(kb)  # type: ignore[attr-defined]
    return server


def _cmd_serve(args) -> int:
    kb = _load(args.kb)
    if kb is None:
        return 1
    server = make_server(kb, args.port)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}/api/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


# -- argument wiring --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verblogic",
        description="Reason over noun/place/verb taxonomies and chat about it.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_kb(p):
        p.add_argument("kb", help="knowledge-base file")
        return p

    with_kb(sub.add_parser("check", help="parse and validate a KB file"))

    derive = with_kb(sub.add_parser("derive", help="print every conclusion"))
    derive.add_argument("--format", choices=("text", "json"), default="text")

    ask = with_kb(sub.add_parser("ask", help="apply one question operator"))
    ask.add_argument("--op", required=True,
                     choices=("HOW", "WHICH_PART", "WHICH_KIND"))
    ask.add_argument("--slot", choices=("in", "from", "to"))
    ask.add_argument("--fact", type=int, default=0)
    ask.add_argument("--format", choices=("text", "json"), default="text")

    repl = with_kb(sub.add_parser("repl", help="interactive dialogue"))
    repl.add_argument("--fact", type=int, default=0)

    annotate = with_kb(sub.add_parser(
        "annotate", help="frequency-annotated statement"))
    annotate.add_argument("subject")
    annotate.add_argument("verb")
    annotate.add_argument("noun")
    annotate.add_argument("--tense", choices=("past", "present", "future"),
                          default="present")

    serve = with_kb(sub.add_parser("serve", help="run the HTTP API"))
    serve.add_argument("--port", type=int, default=DEFAULT_PORT)
    return parser


_COMMANDS = {
    "check": _cmd_check,
    "derive": _cmd_derive,
    "ask": _cmd_ask,
    "repl": _cmd_repl,
    "annotate": _cmd_annotate,
    "serve": _cmd_serve,
}


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


def main() -> None:
    sys.exit(run())
