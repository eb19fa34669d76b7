"""Conversation filter and question operators.

A session opens with the most general statement the taxonomies can
justify and walks back toward the original fact one taxonomy step per
question.  HOW targets the verb axis, WHICH PART a place axis, WHICH KIND
the object axis; each successful ask makes exactly one axis one step more
specific.
"""

from __future__ import annotations

import enum
import uuid
from dataclasses import dataclass, field

from .engine import Axis, axis_term, occupied_axes, replace_axis
from .errors import (AmbiguousSlotError, AxisEmptyError, FullySpecificError,
                     NegatedFactError)
from .kb import KnowledgeBase
from .statement import Atom, render_text
from .taxonomy import Term


class QuestionOperator(enum.Enum):
    HOW = "HOW"                # verb axis
    WHICH_PART = "WHICH_PART"  # a place axis
    WHICH_KIND = "WHICH_KIND"  # object axis


@dataclass
class Session:
    """Mutable dialogue state over one positive fact.

    Each occupied axis carries the upward path from the fact's term to the
    opening term plus a cursor into it; cursor 0 means fully specific.
    Sessions are single-writer; distinct sessions may run concurrently
    over the shared frozen KB.
    """

    fact: Atom
    paths: dict[Axis, list[Term]]
    cursors: dict[Axis, int]
    id: str = field(default_factory=lambda: uuid.uuid4().hex[:12])
    asked: int = 0

    def utterance(self) -> Atom:
        atom = self.fact
        for axis, path in self.paths.items():
            current = path[self.cursors[axis]]
            if current != axis_term(self.fact, axis):
                atom = replace_axis(atom, axis, current)
        return atom

    @property
    def fully_specific(self) -> bool:
        return all(cursor == 0 for cursor in self.cursors.values())


def open_session(kb: KnowledgeBase, fact: Atom) -> Session:
    """Start a dialogue at the most general derivable statement.

    Per axis the opening term is the maximal ancestor (lexicographic
    tie-break on diamonds); facts whose terms have no ancestors open as
    themselves.
    """
    if fact.negated:
        raise NegatedFactError("dialogue over negated facts is unsupported")
    paths: dict[Axis, list[Term]] = {}
    cursors: dict[Axis, int] = {}
    for axis in occupied_axes(fact):
        start = axis_term(fact, axis)
        assert start is not None
        top = kb.edges.most_general_ancestor(axis.relation, start)
        path = [start] if top is None else kb.edges.path_up(axis.relation, start, top)
        paths[axis] = path
        cursors[axis] = len(path) - 1
    return Session(fact=fact, paths=paths, cursors=cursors)


_PLACE_AXES = {"in": Axis.PLACE_IN, "from": Axis.PLACE_FROM, "to": Axis.PLACE_TO}


def _resolve_axis(session: Session, op: QuestionOperator,
                  slot: str | None) -> Axis:
    if op is QuestionOperator.HOW:
        return Axis.VERB
    if op is QuestionOperator.WHICH_KIND:
        if Axis.OBJECT not in session.paths:
            raise AxisEmptyError("the statement has no object")
        return Axis.OBJECT
    occupied = [a for s, a in _PLACE_AXES.items() if a in session.paths]
    if slot is not None:
        axis = _PLACE_AXES.get(slot)
        if axis is None:
            raise AxisEmptyError(f"unknown place slot {slot!r}")
        if axis not in session.paths:
            raise AxisEmptyError(f"the statement has no {slot!r} place")
        return axis
    if not occupied:
        raise AxisEmptyError("the statement has no place slots")
    if len(occupied) > 1:
        raise AmbiguousSlotError(
            "several places are occupied; say which of "
            + "/".join(s for s, a in _PLACE_AXES.items() if a in session.paths))
    return occupied[0]


def ask(session: Session, op: QuestionOperator, slot: str | None = None) -> Atom:
    """Step the targeted axis one level toward the fact; returns the new
    utterance."""
    axis = _resolve_axis(session, op, slot)
    if session.cursors[axis] == 0:
        raise FullySpecificError(
            f"the {axis.value} axis is already fully specific")
    session.cursors[axis] -= 1
    session.asked += 1
    return session.utterance()


def available_refinements(session: Session) -> list[tuple[QuestionOperator, str | None]]:
    """Exactly the asks that would currently succeed, in stable order."""
    out: list[tuple[QuestionOperator, str | None]] = []
    if session.cursors.get(Axis.VERB, 0) > 0:
        out.append((QuestionOperator.HOW, None))
    for slot, axis in _PLACE_AXES.items():
        if session.cursors.get(axis, 0) > 0:
            out.append((QuestionOperator.WHICH_PART, slot))
    if session.cursors.get(Axis.OBJECT, 0) > 0:
        out.append((QuestionOperator.WHICH_KIND, None))
    return out


def rendered_utterance(kb: KnowledgeBase, session: Session) -> str:
    """Current statement as text; the opener is phrased without the
    object's indefinite article, answers with it."""
    return render_text(session.utterance(), kb.lexicon,
                       bare_nouns=kb.bare_nouns,
                       object_article=session.asked > 0)
