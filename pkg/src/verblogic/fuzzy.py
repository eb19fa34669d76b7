"""Verb/noun-class pairings and subject-conditioned frequency annotation.

A verb may be declared isomorphic to a noun class ("eat ~ food"); any noun
under that class can then be annotated with a frequency adverb chosen by
the characteristic value mu of (subject class, verb, noun).  The five
bands tile [0, 1]:

    often         [0.70, 1.00]
    more_or_less  [0.40, 0.70)
    less_likely   [0.20, 0.40)
    rarely        [0.05, 0.20)
    never         [0.00, 0.05)

Band edges are half-open with the upper band claiming its lower endpoint.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .errors import FrameMismatchError, NoIsomorphismError, RangeError
from .statement import Atom, FrequencyAdverb, Tense, make_atom
from .taxonomy import RelationKind, Term

if TYPE_CHECKING:  # pragma: no cover
    from .kb import KnowledgeBase

__all__ = [
    "FrequencyAdverb", "DEFAULT_CLASS", "adverb_for_mu", "membership",
    "annotate", "is_sound_can",
]

DEFAULT_CLASS = "any"

_BANDS = (
    (0.70, FrequencyAdverb.OFTEN),
    (0.40, FrequencyAdverb.MORE_OR_LESS),
    (0.20, FrequencyAdverb.LESS_LIKELY),
    (0.05, FrequencyAdverb.RARELY),
    (0.00, FrequencyAdverb.NEVER),
)


def adverb_for_mu(mu: float) -> FrequencyAdverb:
    """Map a characteristic value in [0, 1] to its frequency band."""
    if not 0.0 <= mu <= 1.0:
        raise RangeError(f"characteristic value {mu!r} outside [0, 1]")
    for floor, adverb in _BANDS:
        if mu >= floor:
            return adverb
    return FrequencyAdverb.NEVER


def membership(kb: "KnowledgeBase", subject: Term, verb: Term,
               noun: Term) -> float:
    """Raw table lookup of mu, falling back to the default subject class."""
    cls = kb.subject_classes.get(subject.id, DEFAULT_CLASS)
    table = kb.memberships
    value = table.get((cls, verb.id, noun.id))
    if value is None:
        value = table.get((DEFAULT_CLASS, verb.id, noun.id))
    return value if value is not None else 0.0


def _noun_in_frame(kb: "KnowledgeBase", verb: Term, noun: Term) -> bool:
    iso_class = kb.isomorphisms.get(verb.id)
    if iso_class is None:
        return False
    if noun == iso_class:
        return True
    return iso_class in kb.edges.strict_ancestors(RelationKind.KIND_OF, noun)


def annotate(kb: "KnowledgeBase", subject: Term, verb: Term, noun: Term,
             tense: Tense) -> Atom:
    """Build the adverb-annotated statement for (subject, verb, noun)."""
    if verb.id not in kb.isomorphisms:
        raise NoIsomorphismError(f"verb {verb.id!r} has no declared noun class")
    if not _noun_in_frame(kb, verb, noun):
        iso_class = kb.isomorphisms[verb.id]
        raise FrameMismatchError(
            f"{noun.id!r} is not under {verb.id!r}'s class {iso_class.id!r}")
    adverb = adverb_for_mu(membership(kb, subject, verb, noun))
    return make_atom(subject, verb, noun, tense=tense, adverb=adverb)


def is_sound_can(kb: "KnowledgeBase", subject: Term, verb: Term,
                 noun: Term) -> bool:
    """Whether "<subject> can <verb> <noun>" expresses a real possibility."""
    if not _noun_in_frame(kb, verb, noun):
        return False
    mu = membership(kb, subject, verb, noun)
    return adverb_for_mu(mu) is not FrequencyAdverb.NEVER
