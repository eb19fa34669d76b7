from __future__ import annotations

import random
from dataclasses import replace

import pytest

from verblogic import Leaf, QuestionOperator, Tense, entails, make_atom
from verblogic.dialogue import (ask, available_refinements, open_session,
                                rendered_utterance)
from verblogic.errors import (AmbiguousSlotError, AxisEmptyError,
                              FullySpecificError, NegatedFactError)

from .conftest import T, kb_from_edges

HOW = QuestionOperator.HOW
WHICH_PART = QuestionOperator.WHICH_PART
WHICH_KIND = QuestionOperator.WHICH_KIND


def house_kb():
    return kb_from_edges(kind_of=[("house", "property")],
                         part_of=[("CA", "U.S.")],
                         way_of=[("buy", "own")])


def house_fact():
    return make_atom(T("I"), T("buy"), T("house"), {"in": T("CA")},
                     tense=Tense.FUTURE)


def travel_kb():
    return kb_from_edges(way_of=[("fly", "travel"), ("travel", "move")],
                         part_of=[("Tokyo", "Japan"),
                                  ("Los_Angeles", "U.S.")])


def travel_fact():
    return make_atom(T("I"), T("fly"),
                     places={"from": T("Tokyo"), "to": T("Los_Angeles")},
                     tense=Tense.PAST)


class TestOpenSession:
    def test_opens_most_general(self):
        kb = house_kb()
        session = open_session(kb, house_fact())
        assert rendered_utterance(kb, session) == "I will own property in U.S."

    def test_top_level_fact_opens_as_itself(self):
        kb = house_kb()
        fact = make_atom(T("I"), T("own"), T("property"), {"in": T("U.S.")},
                         tense=Tense.FUTURE)
        session = open_session(kb, fact)
        assert session.utterance() == fact
        assert session.fully_specific

    def test_height_two_chain_opens_at_top(self):
        kb = travel_kb()
        session = open_session(kb, travel_fact())
        assert session.utterance().verb == T("move")

    def test_negated_fact_rejected(self):
        with pytest.raises(NegatedFactError):
            open_session(house_kb(), replace(house_fact(), negated=True))


class TestAsk:
    def test_scripted_refinement_sequence(self):
        kb = house_kb()
        session = open_session(kb, house_fact())
        ask(session, WHICH_PART)
        assert rendered_utterance(kb, session) == "I will own a property in CA"
        ask(session, HOW)
        assert rendered_utterance(kb, session) == "I will buy a property in CA"
        ask(session, WHICH_KIND)
        assert rendered_utterance(kb, session) == "I will buy a house in CA"
        assert session.utterance() == house_fact()

    def test_fully_specific_axis_rejects_ask(self):
        session = open_session(house_kb(), house_fact())
        ask(session, HOW)
        with pytest.raises(FullySpecificError):
            ask(session, HOW)

    def test_two_how_asks_walk_the_chain(self):
        kb = travel_kb()
        session = open_session(kb, travel_fact())
        # oracle: the verb path is exactly path_up(fly, move)
        from verblogic import RelationKind
        path = kb.edges.path_up(RelationKind.WAY_OF, T("fly"), T("move"))
        assert [t.id for t in path] == ["fly", "travel", "move"]
        assert ask(session, HOW).verb == T("travel")
        assert ask(session, HOW).verb == T("fly")

    def test_ambiguous_place_needs_slot(self):
        session = open_session(travel_kb(), travel_fact())
        with pytest.raises(AmbiguousSlotError):
            ask(session, WHICH_PART)
        assert ask(session, WHICH_PART, "from").place_from == T("Tokyo")

    def test_empty_axis_rejected(self):
        session = open_session(house_kb(), house_fact())
        with pytest.raises(AxisEmptyError):
            ask(session, WHICH_PART, "to")

    def test_missing_object_axis_rejected(self):
        session = open_session(travel_kb(), travel_fact())
        with pytest.raises(AxisEmptyError):
            ask(session, WHICH_KIND)

    def test_one_axis_steps_per_ask(self):
        kb = house_kb()
        session = open_session(kb, house_fact())
        before = session.utterance()
        after = ask(session, WHICH_PART)
        changed = [f for f in ("verb", "obj", "place_in")
                   if getattr(before, f) != getattr(after, f)]
        assert changed == ["place_in"]
        assert entails(kb, Leaf(after), Leaf(before))


class TestAvailableRefinements:
    def test_fresh_session_offers_all_three(self):
        session = open_session(house_kb(), house_fact())
        assert available_refinements(session) == [
            (HOW, None), (WHICH_PART, "in"), (WHICH_KIND, None)]

    def test_exhausted_session_offers_nothing(self):
        session = open_session(house_kb(), house_fact())
        for op in (WHICH_PART, HOW, WHICH_KIND):
            ask(session, op)
        assert available_refinements(session) == []

    def test_only_generalizable_axes_offered(self):
        kb = kb_from_edges(way_of=[("fly", "travel")])
        fact = make_atom(T("I"), T("fly"), places={"to": T("Mars")},
                         tense=Tense.PAST)
        session = open_session(kb, fact)
        assert available_refinements(session) == [(HOW, None)]

    def test_refinements_are_exactly_the_asks_that_succeed(self):
        session = open_session(travel_kb(), travel_fact())
        offered = set(available_refinements(session))
        for op, slot in [(HOW, None), (WHICH_PART, "in"), (WHICH_PART, "from"),
                         (WHICH_PART, "to"), (WHICH_KIND, None)]:
            trial = open_session(travel_kb(), travel_fact())
            trial.cursors = dict(session.cursors)
            try:
                ask(trial, op, slot)
                succeeded = True
            except Exception:
                succeeded = False
            assert succeeded == ((op, slot) in offered)


class TestSessionInvariants:
    def test_every_utterance_is_entailed(self):
        kb = travel_kb()
        fact = travel_fact()
        session = open_session(kb, fact)
        rng = random.Random(5)
        seen = [session.utterance()]
        while not session.fully_specific:
            op, slot = rng.choice(available_refinements(session))
            seen.append(ask(session, op, slot))
        for u in seen:
            assert u == fact or entails(kb, Leaf(fact), Leaf(u))

    def test_convergence_bound(self):
        session = open_session(travel_kb(), travel_fact())
        budget = sum(len(p) - 1 for p in session.paths.values())
        assert budget == 4
        steps = 0
        while available_refinements(session):
            op, slot = available_refinements(session)[0]
            ask(session, op, slot)
            steps += 1
        assert steps == budget
        assert session.utterance() == travel_fact()

    def test_determinism(self):
        def run():
            kb = house_kb()
            session = open_session(kb, house_fact())
            out = [rendered_utterance(kb, session)]
            for op in (WHICH_PART, HOW, WHICH_KIND):
                ask(session, op)
                out.append(rendered_utterance(kb, session))
            return out

        assert run() == run()

    def test_opener_renders_bare_answers_with_article(self):
        kb = house_kb()
        session = open_session(kb, house_fact())
        assert "property" in rendered_utterance(kb, session)
        assert "a property" not in rendered_utterance(kb, session)
        ask(session, WHICH_PART)
        assert "a property" in rendered_utterance(kb, session)
