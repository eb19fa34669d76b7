"""Deductive core: generalize positive facts upward, negated facts downward.

A fact generalizes along up to five independent axes, each governed by one
relation kind:

    verb        -> way_of        object      -> kind_of
    place(in)   -> part_of       place(from) -> part_of
    place(to)   -> part_of

Every conclusion replaces, per occupied axis, the fact's term with one of
its strict ancestors (or keeps it); negated facts mirror this with strict
descendants.  Subject, tense, condition, modality and adverb pass through
verbatim, which is what makes "if ..." prefixes lift onto every
conclusion for free.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import replace
from typing import TYPE_CHECKING

from .errors import NegatedFactError, PositiveFactError
from .statement import (And, Atom, Compound, Leaf, Or, TermGroup, atom_key,
                        canonical_form, compound_key)
from .taxonomy import RelationKind, Term

if TYPE_CHECKING:  # pragma: no cover
    from .kb import KnowledgeBase


class Axis(enum.Enum):
    VERB = "verb"
    OBJECT = "object"
    PLACE_IN = "in"
    PLACE_FROM = "from"
    PLACE_TO = "to"

    @property
    def relation(self) -> RelationKind:
        if self is Axis.VERB:
            return RelationKind.WAY_OF
        if self is Axis.OBJECT:
            return RelationKind.KIND_OF
        return RelationKind.PART_OF


def axis_term(fact: Atom, axis: Axis) -> Term | None:
    """The fact's term on ``axis``, or None when the slot is empty."""
    value = {
        Axis.VERB: fact.verb,
        Axis.OBJECT: fact.obj,
        Axis.PLACE_IN: fact.place_in,
        Axis.PLACE_FROM: fact.place_from,
        Axis.PLACE_TO: fact.place_to,
    }[axis]
    if isinstance(value, TermGroup):
        raise ValueError("inference needs a distributed atom, not group sugar")
    return value


def replace_axis(fact: Atom, axis: Axis, value: Term) -> Atom:
    field = {
        Axis.VERB: "verb",
        Axis.OBJECT: "obj",
        Axis.PLACE_IN: "place_in",
        Axis.PLACE_FROM: "place_from",
        Axis.PLACE_TO: "place_to",
    }[axis]
    return replace(fact, **{field: value})


def occupied_axes(fact: Atom) -> list[Axis]:
    return [axis for axis in Axis if axis_term(fact, axis) is not None]


def _substitutions(kb: "KnowledgeBase", fact: Atom, upward: bool) -> list[Atom]:
    axes = occupied_axes(fact)
    options: list[list[Term]] = []
    for axis in axes:
        original = axis_term(fact, axis)
        assert original is not None
        if upward:
            related = kb.edges.strict_ancestors(axis.relation, original)
        else:
            related = kb.edges.strict_descendants(axis.relation, original)
        options.append([original] + sorted(related, key=lambda t: t.id))
    results: set[Atom] = set()
    for combo in itertools.product(*options):
        candidate = fact
        for axis, value in zip(axes, combo):
            if value is not axis_term(fact, axis):
                candidate = replace_axis(candidate, axis, value)
        if candidate != fact:
            results.add(candidate)
    return sorted(results, key=atom_key)


def derive_conclusions(kb: "KnowledgeBase", fact: Atom) -> list[Atom]:
    """Every strict generalization of a positive fact, in stable order.

    The unchanged fact itself is excluded.  With chain taxonomies the
    count is the product over occupied axes of (1 + chain height above
    the term), minus one.
    """
    if fact.negated:
        raise NegatedFactError("negated facts specialize downward instead")
    return _substitutions(kb, fact, upward=True)


def specialize_negative(kb: "KnowledgeBase", fact: Atom) -> list[Atom]:
    """Contraposition: every strict specialization of a negated fact."""
    if not fact.negated:
        raise PositiveFactError("positive facts generalize upward instead")
    return _substitutions(kb, fact, upward=False)


def _leaf_conclusions(kb: "KnowledgeBase", atom: Atom) -> list[Atom]:
    if atom.negated:
        return specialize_negative(kb, atom)
    return derive_conclusions(kb, atom)


def derive_all(kb: "KnowledgeBase", fact: Compound) -> list[Compound]:
    """Conclusions of a compound: each leaf varies independently.

    The fact is canonicalized first; every combination of leaf
    replacements (conclusion-or-original per leaf) forms one result,
    minus the original compound itself.
    """
    fact = canonical_form(fact)
    if isinstance(fact, Leaf):
        return [Leaf(a) for a in _leaf_conclusions(kb, fact.atom)]
    fact_key = compound_key(fact)
    slots = _leaf_slots(fact)
    choices = [[atom] + _leaf_conclusions(kb, atom) for atom in slots]
    results: dict[tuple, Compound] = {}
    for combo in itertools.product(*choices):
        built = canonical_form(_rebuild(fact, iter(combo)))
        key = compound_key(built)
        if key != fact_key:
            results[key] = built
    return [results[k] for k in sorted(results)]


def _leaf_slots(c: Compound) -> list[Atom]:
    if isinstance(c, Leaf):
        return [c.atom]
    out: list[Atom] = []
    for part in c.parts:
        out.extend(_leaf_slots(part))
    return out


def _rebuild(c: Compound, feed) -> Compound:
    if isinstance(c, Leaf):
        return Leaf(next(feed))
    parts = tuple(_rebuild(p, feed) for p in c.parts)
    return And(parts) if isinstance(c, And) else Or(parts)


def entails(kb: "KnowledgeBase", fact: Compound, candidate: Compound) -> bool:
    """True when the candidate is the fact itself or one of its conclusions."""
    fact_c = canonical_form(fact)
    candidate_c = canonical_form(candidate)
    if compound_key(fact_c) == compound_key(candidate_c):
        return True
    target = compound_key(candidate_c)
    return any(compound_key(c) == target for c in derive_all(kb, fact_c))
