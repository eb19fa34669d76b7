from __future__ import annotations

import itertools
import random
from dataclasses import replace

import pytest

from verblogic import (And, Leaf, Or, Tense, canonical_form, derive_all,
                       derive_conclusions, entails, make_atom, negate,
                       specialize_negative)
from verblogic.errors import NegatedFactError, PositiveFactError
from verblogic.statement import compound_key, render_text

from .conftest import T, kb_from_edges


def house_fact():
    return make_atom(T("I"), T("buy"), T("house"), {"in": T("CA")},
                     tense=Tense.FUTURE)


def house_kb():
    return kb_from_edges(kind_of=[("house", "property")],
                         part_of=[("CA", "U.S.")],
                         way_of=[("buy", "own")])


SEVEN = [  # frozen from the four-premise example, in engine output order
    ("buy", "house", "u.s."),
    ("buy", "property", "ca"),
    ("buy", "property", "u.s."),
    ("own", "house", "ca"),
    ("own", "house", "u.s."),
    ("own", "property", "ca"),
    ("own", "property", "u.s."),
]


def triple(atom):
    return (atom.verb.id, atom.obj.id, atom.place_in.id)


class TestDeriveConclusions:
    def test_seven_conclusions_exact(self):
        out = derive_conclusions(house_kb(), house_fact())
        assert [triple(a) for a in out] == SEVEN
        assert all(a.subject == T("I") and a.tense is Tense.FUTURE
                   for a in out)

    def test_source_fact_excluded(self):
        out = derive_conclusions(house_kb(), house_fact())
        assert house_fact() not in out

    def test_no_ancestors_no_conclusions(self):
        kb = house_kb()
        top = make_atom(T("I"), T("own"), T("property"), {"in": T("U.S.")},
                        tense=Tense.FUTURE)
        assert derive_conclusions(kb, top) == []

    def test_negated_fact_rejected(self):
        with pytest.raises(NegatedFactError):
            derive_conclusions(house_kb(), replace(house_fact(), negated=True))

    def test_count_law_on_two_chains(self):
        # heights 2 and 3 above the fact's terms: (1+2)(1+3) - 1 = 11
        kb = kb_from_edges(way_of=[("a0", "a1"), ("a1", "a2")],
                           kind_of=[("b0", "b1"), ("b1", "b2"), ("b2", "b3")])
        fact = make_atom(T("I"), T("a0"), T("b0"), tense=Tense.PAST)
        out = derive_conclusions(kb, fact)
        assert len(out) == 11
        # brute-force enumeration of all slot combinations
        expected = {
            (v, o)
            for v in ("a0", "a1", "a2") for o in ("b0", "b1", "b2", "b3")
        } - {("a0", "b0")}
        assert {(a.verb.id, a.obj.id) for a in out} == expected

    def test_place_slots_generalize_independently(self):
        kb = kb_from_edges(part_of=[("tokyo", "japan"),
                                    ("los_angeles", "u.s.")],
                           way_of=[("fly", "travel"), ("travel", "move")])
        fact = make_atom(T("I"), T("fly"),
                         places={"from": T("Tokyo"), "to": T("Los Angeles")},
                         tense=Tense.PAST)
        out = derive_conclusions(kb, fact)
        assert len(out) == (1 + 2) * (1 + 1) * (1 + 1) - 1
        travelled = make_atom(T("I"), T("travel"),
                              places={"from": T("Japan"), "to": T("U.S.")},
                              tense=Tense.PAST)
        assert travelled in out

    def test_condition_lifts_onto_every_conclusion(self):
        kb = house_kb()
        plain = derive_conclusions(kb, house_fact())
        conditioned = derive_conclusions(
            kb, replace(house_fact(), condition="I get this job"))
        assert [replace(a, condition=None) for a in conditioned] == plain
        assert all(a.condition == "I get this job" for a in conditioned)

    def test_tense_neutrality(self):
        kb = house_kb()
        by_tense = {
            tense: derive_conclusions(kb, replace(house_fact(), tense=tense))
            for tense in Tense
        }
        for tense, out in by_tense.items():
            assert all(a.tense is tense for a in out)
            normalized = [replace(a, tense=Tense.PAST) for a in out]
            assert normalized == [replace(a, tense=Tense.PAST)
                                  for a in by_tense[Tense.FUTURE]]

    def test_modality_and_adverb_pass_through(self):
        kb = house_kb()
        fact = replace(house_fact(), can=True)
        assert all(a.can for a in derive_conclusions(kb, fact))

    def test_monotone_preservation(self):
        kb = house_kb()
        fact = house_fact()
        ups = {
            "verb": {"own"}, "obj": {"property"}, "place_in": {"u.s."},
        }
        for a in derive_conclusions(kb, fact):
            for field, allowed in ups.items():
                value = getattr(a, field)
                original = getattr(fact, field)
                assert value == original or value.id in allowed


class TestSpecializeNegative:
    def test_contraposition_example(self):
        kb = kb_from_edges(kind_of=[("potato", "vegetable")],
                           way_of=[("bake", "cook")])
        fact = make_atom(T("I"), T("cook"), T("vegetable"), tense=Tense.PAST,
                         negated=True)
        out = specialize_negative(kb, fact)
        rendered = {render_text(a) for a in out}
        assert "I did not bake a potato" in rendered
        assert all(a.negated for a in out)

    def test_leaf_terms_no_conclusions(self):
        kb = kb_from_edges(kind_of=[("potato", "vegetable")],
                           way_of=[("bake", "cook")])
        fact = make_atom(T("I"), T("bake"), T("potato"), tense=Tense.PAST,
                         negated=True)
        assert specialize_negative(kb, fact) == []

    def test_positive_fact_rejected(self):
        with pytest.raises(PositiveFactError):
            specialize_negative(house_kb(), house_fact())

    def test_duality_with_generalization(self):
        # exhaustive mirror check on random small DAGs, one per axis
        rng = random.Random(22)
        for _ in range(40):
            kb, verbs, nouns = _random_two_axis_kb(rng, max_nodes=6)
            atoms = [make_atom(T("I"), T(v), T(n), tense=Tense.PAST)
                     for v in verbs for n in nouns]
            ups = {a: {a, *derive_conclusions(kb, a)} for a in atoms}
            for s, t in itertools.product(atoms, atoms):
                neg_t = replace(t, negated=True)
                downs = {neg_t, *specialize_negative(kb, neg_t)}
                assert (t in ups[s]) == (replace(s, negated=True) in downs)


def _random_two_axis_kb(rng: random.Random, max_nodes: int):
    def random_edges(prefix: str):
        n = rng.randint(2, max_nodes)
        names = [f"{prefix}{i}" for i in range(n)]
        rng.shuffle(names)
        edges = set()
        for lo in range(n - 1):
            for hi in range(lo + 1, n):
                if rng.random() < 0.4:
                    edges.add((names[lo], names[hi]))
        if not edges:
            edges.add((names[0], names[1]))
        return names, sorted(edges)

    verbs, way = random_edges("v")
    nouns, kind = random_edges("n")
    return kb_from_edges(way_of=way, kind_of=kind), verbs, nouns


class TestDeriveAll:
    def kb(self):
        return kb_from_edges(way_of=[("bake", "cook")],
                             kind_of=[("potato", "vegetable"),
                                      ("apple", "fruit")])

    def baked_both(self):
        return And((
            Leaf(make_atom(T("I"), T("bake"), T("potato"), tense=Tense.PAST)),
            Leaf(make_atom(T("I"), T("bake"), T("apple"), tense=Tense.PAST)),
        ))

    def test_compound_generalization_contains_cooked_both(self):
        target = canonical_form(And((
            Leaf(make_atom(T("I"), T("cook"), T("vegetable"), tense=Tense.PAST)),
            Leaf(make_atom(T("I"), T("cook"), T("fruit"), tense=Tense.PAST)),
        )))
        out = derive_all(self.kb(), self.baked_both())
        assert target in out

    def test_single_leaf_matches_derive_conclusions(self):
        kb = house_kb()
        fact = Leaf(house_fact())
        assert derive_all(kb, fact) == [Leaf(a) for a in
                                        derive_conclusions(kb, house_fact())]

    def test_product_count_oracle(self):
        kb = self.kb()
        out = derive_all(kb, self.baked_both())
        m = len(derive_conclusions(
            kb, make_atom(T("I"), T("bake"), T("potato"), tense=Tense.PAST)))
        n = len(derive_conclusions(
            kb, make_atom(T("I"), T("bake"), T("apple"), tense=Tense.PAST)))
        assert (m, n) == (3, 3)
        assert len(out) == (m + 1) * (n + 1) - 1

    def test_negated_leaves_specialize(self):
        kb = self.kb()
        fact = negate(self.baked_both())  # Or of negated leaves
        out = derive_all(kb, fact)
        assert out == []  # bake/potato/apple are leaves: nothing below them

    def test_or_compound(self):
        kb = self.kb()
        fact = Or((
            Leaf(make_atom(T("I"), T("bake"), T("potato"), tense=Tense.PAST)),
            Leaf(make_atom(T("I"), T("bake"), T("apple"), tense=Tense.PAST)),
        ))
        out = derive_all(kb, fact)
        assert all(isinstance(c, Or) for c in out)
        assert len(out) == 15


class TestEntails:
    def test_travel_example(self):
        kb = kb_from_edges(way_of=[("fly", "travel")],
                           part_of=[("tokyo", "japan"),
                                    ("los_angeles", "u.s.")])
        flew = Leaf(make_atom(
            T("I"), T("fly"),
            places={"from": T("Tokyo"), "to": T("Los Angeles")},
            tense=Tense.PAST))
        traveled = Leaf(make_atom(
            T("I"), T("travel"), places={"from": T("Japan"), "to": T("U.S.")},
            tense=Tense.PAST))
        assert entails(kb, flew, traveled)
        assert not entails(kb, traveled, flew)

    def test_reflexive(self):
        kb = house_kb()
        assert entails(kb, Leaf(house_fact()), Leaf(house_fact()))

    def test_transitive_on_random_kbs(self):
        rng = random.Random(7)
        for _ in range(15):
            kb, verbs, nouns = _random_two_axis_kb(rng, max_nodes=4)
            atoms = [Leaf(make_atom(T("I"), T(v), T(n), tense=Tense.PAST))
                     for v in verbs for n in nouns]
            keys = {compound_key(a): a for a in atoms}
            closure = {
                compound_key(a): {compound_key(c)
                                  for c in derive_all(kb, a)} | {compound_key(a)}
                for a in atoms
            }
            for a_key, reach in closure.items():
                for b_key in reach:
                    assert closure[b_key] <= reach
