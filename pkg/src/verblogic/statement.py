"""Statement algebra: atoms, negation, And/Or compounds, rendering.

An atom pairs a verb with a noun frame (object and/or place slots) under a
fixed subject.  Compounds are And/Or trees over atoms.  The four
distributive rewrite laws

    v * (e and g) = v*e and v*g        (v and w) * e = v*e and w*e
    v * (e or g)  = v*e or v*g         (v or w) * e  = v*e or w*e

turn group-sugared atoms (several verbs or objects in one slot) into pure
compounds; ``canonical_form`` applies them, flattens nested nodes, sorts
and deduplicates children, so structural equality is decidable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Union

from .errors import EmptyFrameError
from .taxonomy import Term

PLACE_SLOTS = ("in", "from", "to")


class Tense(enum.Enum):
    PAST = "past"
    PRESENT = "present"
    FUTURE = "future"


class FrequencyAdverb(enum.Enum):
    """Frequency bands in descending order of characteristic value."""

    OFTEN = "often"
    MORE_OR_LESS = "more_or_less"
    LESS_LIKELY = "less_likely"
    RARELY = "rarely"
    NEVER = "never"

    @property
    def rank(self) -> int:
        """Descending rank: often is 4, never is 0."""
        order = (self.NEVER, self.RARELY, self.LESS_LIKELY,
                 self.MORE_OR_LESS, self.OFTEN)
        return order.index(self)

    @property
    def phrase(self) -> str:
        return self.value.replace("_", " ")


@dataclass(frozen=True)
class TermGroup:
    """Parser sugar: several terms joined by one connective in a slot."""

    op: str  # "and" | "or"
    terms: tuple[Term, ...]

    def __post_init__(self) -> None:
        if self.op not in ("and", "or"):
            raise ValueError(f"bad group connective {self.op!r}")
        if len(self.terms) < 2:
            raise ValueError("a term group needs at least two terms")


Slot = Union[Term, TermGroup]


@dataclass(frozen=True)
class Atom:
    """One statement: subject, polarity, verb, noun frame, tense, extras.

    ``condition`` is verbatim text preserved byte-for-byte through every
    transformation.  ``verb`` and ``obj`` may carry a :class:`TermGroup`
    until :func:`distribute` runs; everything downstream of
    :func:`canonical_form` sees single terms only.
    """

    subject: Term
    verb: Slot
    tense: Tense
    negated: bool = False
    obj: Slot | None = None
    place_in: Term | None = None
    place_from: Term | None = None
    place_to: Term | None = None
    condition: str | None = None
    adverb: FrequencyAdverb | None = None
    can: bool = False

    @property
    def places(self) -> dict[str, Term]:
        """Occupied place slots in in/from/to order."""
        out = {}
        for slot, value in (("in", self.place_in), ("from", self.place_from),
                            ("to", self.place_to)):
            if value is not None:
                out[slot] = value
        return out

    def place(self, slot: str) -> Term | None:
        return {"in": self.place_in, "from": self.place_from,
                "to": self.place_to}[slot]

    def with_place(self, slot: str, value: Term) -> "Atom":
        key = {"in": "place_in", "from": "place_from", "to": "place_to"}[slot]
        return replace(self, **{key: value})


def make_atom(subject: Term, verb: Slot, obj: Slot | None = None,
              places: Mapping[str, Term] | None = None, *,
              tense: Tense, negated: bool = False,
              condition: str | None = None,
              adverb: FrequencyAdverb | None = None,
              can: bool = False) -> Atom:
    """Validate and build an atom.

    Raises :class:`EmptyFrameError` when neither an object nor any place
    slot is supplied.
    """
    places = dict(places or {})
    for slot in places:
        if slot not in PLACE_SLOTS:
            raise ValueError(f"unknown place slot {slot!r}")
    if obj is None and not places:
        raise EmptyFrameError(
            f"statement for verb {_slot_id(verb)!r} has no object and no place")
    return Atom(
        subject=subject, verb=verb, tense=tense, negated=negated, obj=obj,
        place_in=places.get("in"), place_from=places.get("from"),
        place_to=places.get("to"), condition=condition, adverb=adverb,
        can=can,
    )


def _slot_id(slot: Slot | None) -> str:
    if slot is None:
        return ""
    if isinstance(slot, TermGroup):
        return f"({slot.op} " + " ".join(t.id for t in slot.terms) + ")"
    return slot.id


# -- compounds ----------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    atom: Atom


@dataclass(frozen=True)
class And:
    parts: tuple["Compound", ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise ValueError("And needs at least two children")


@dataclass(frozen=True)
class Or:
    parts: tuple["Compound", ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise ValueError("Or needs at least two children")


Compound = Union[Leaf, And, Or]


def leaves(c: Compound) -> list[Atom]:
    """Leaf atoms in tree order."""
    if isinstance(c, Leaf):
        return [c.atom]
    out: list[Atom] = []
    for part in c.parts:
        out.extend(leaves(part))
    return out


def negate(c: Compound) -> Compound:
    """Flip atom polarity; push through And/Or by De Morgan."""
    if isinstance(c, Leaf):
        return Leaf(replace(c.atom, negated=not c.atom.negated))
    parts = tuple(negate(p) for p in c.parts)
    return Or(parts) if isinstance(c, And) else And(parts)


def distribute(c: Compound) -> Compound:
    """Rewrite group-sugared atoms into pure And/Or compounds.

    The object slot expands at the outer level, the verb slot inside it,
    so ``(v or w) * (e and g)`` becomes an And of Ors.
    """
    if isinstance(c, (And, Or)):
        parts = tuple(distribute(p) for p in c.parts)
        return And(parts) if isinstance(c, And) else Or(parts)
    atom = c.atom
    if isinstance(atom.obj, TermGroup):
        group = atom.obj
        parts = tuple(distribute(Leaf(replace(atom, obj=t))) for t in group.terms)
        return And(parts) if group.op == "and" else Or(parts)
    if isinstance(atom.verb, TermGroup):
        group = atom.verb
        parts = tuple(Leaf(replace(atom, verb=t)) for t in group.terms)
        return And(parts) if group.op == "and" else Or(parts)
    return c


def atom_key(a: Atom) -> tuple:
    """Deterministic ordering key over every atom field."""
    return (
        a.subject.id,
        a.negated,
        _slot_id(a.verb),
        _slot_id(a.obj),
        a.place_in.id if a.place_in else "",
        a.place_from.id if a.place_from else "",
        a.place_to.id if a.place_to else "",
        a.tense.value,
        a.condition or "",
        a.adverb.value if a.adverb else "",
        a.can,
    )


def compound_key(c: Compound) -> tuple:
    if isinstance(c, Leaf):
        return ("atom", atom_key(c.atom))
    tag = "and" if isinstance(c, And) else "or"
    return (tag, tuple(compound_key(p) for p in c.parts))


def canonical_form(c: Compound) -> Compound:
    """Distribute, flatten same-type nests, sort and deduplicate children.

    Idempotent; single surviving children collapse into their parent slot,
    so ``And(a, a)`` canonicalizes to plain ``a``.
    """
    c = distribute(c)
    return _normalize(c)


def _normalize(c: Compound) -> Compound:
    if isinstance(c, Leaf):
        return c
    node_type = type(c)
    flat: list[Compound] = []
    for part in c.parts:
        part = _normalize(part)
        if isinstance(part, node_type):
            flat.extend(part.parts)
        else:
            flat.append(part)
    unique = {compound_key(p): p for p in flat}
    ordered = [unique[k] for k in sorted(unique)]
    if len(ordered) == 1:
        return ordered[0]
    return node_type(tuple(ordered))


def atom_record(a: Atom) -> dict:
    """Flat key/value serialization of a canonical atom (ids, not display)."""
    return {
        "subject": a.subject.id,
        "negated": a.negated,
        "verb": _slot_id(a.verb),
        "object": _slot_id(a.obj) or None,
        "places": {slot: (t.id if t else None)
                   for slot, t in (("in", a.place_in), ("from", a.place_from),
                                   ("to", a.place_to))},
        "tense": a.tense.value,
        "condition": a.condition,
        "adverb": a.adverb.value if a.adverb else None,
        "can": a.can,
    }


# -- English rendering --------------------------------------------------------


@dataclass
class Lexicon:
    """Past/present verb forms; the default rule appends "ed"/"s".

    Lookups are keyed by the head word, so multi-word verbs such as
    ``wipe_with_a_duster`` inflect their first word only.
    """

    forms: dict[str, tuple[str, str]] = field(default_factory=dict)

    def past(self, verb_id: str) -> str:
        head, _, tail = verb_id.partition("_")
        inflected = self.forms.get(head, (head + "ed", ""))[0]
        return inflected + (" " + tail.replace("_", " ") if tail else "")

    def present(self, verb_id: str) -> str:
        head, _, tail = verb_id.partition("_")
        inflected = self.forms.get(head, ("", head + "s"))[1]
        return inflected + (" " + tail.replace("_", " ") if tail else "")

    def base(self, verb_id: str) -> str:
        return verb_id.replace("_", " ")


DEFAULT_LEXICON = Lexicon({
    "fly": ("flew", "flies"),
    "eat": ("ate", "eats"),
    "buy": ("bought", "buys"),
    "drive": ("drove", "drives"),
    "run": ("ran", "runs"),
    "hit": ("hit", "hits"),
    "punch": ("punched", "punches"),
    "wipe": ("wiped", "wipes"),
    "bake": ("baked", "bakes"),
    "cook": ("cooked", "cooks"),
    "own": ("owned", "owns"),
    "travel": ("traveled", "travels"),
    "move": ("moved", "moves"),
    "clean": ("cleaned", "cleans"),
    "sing": ("sang", "sings"),
    "draw": ("drew", "draws"),
    "ride": ("rode", "rides"),
    "drink": ("drank", "drinks"),
})

_PLAIN_SUBJECTS = {"i", "you", "we", "they"}


def _be_form(subject: Term, tense: Tense) -> str:
    if tense is Tense.FUTURE:
        return "will be"
    if tense is Tense.PAST:
        return "was" if subject.id == "i" else "were" if subject.id in ("you", "we", "they") else "was"
    return "am" if subject.id == "i" else "are" if subject.id in ("you", "we", "they") else "is"


def _verb_phrase(a: Atom, lex: Lexicon) -> str:
    verb = a.verb
    assert isinstance(verb, Term), "render needs a distributed atom"
    base = lex.base(verb.id)
    adverb = a.adverb
    if adverb is FrequencyAdverb.LESS_LIKELY and not a.negated and not a.can:
        return f"{_be_form(a.subject, a.tense)} less likely to {base}"
    lead = f"{adverb.phrase} " if adverb else ""
    if a.can:
        return lead + (f"cannot {base}" if a.negated else f"can {base}")
    if a.tense is Tense.FUTURE:
        return f"will not {base}" if a.negated else f"will {lead}{base}"
    if a.tense is Tense.PAST:
        return f"did not {lead}{base}" if a.negated else f"{lead}{lex.past(verb.id)}"
    if a.negated:
        aux = "do" if a.subject.id in _PLAIN_SUBJECTS else "does"
        return f"{aux} not {lead}{base}"
    inflected = base if a.subject.id in _PLAIN_SUBJECTS else lex.present(verb.id)
    return f"{lead}{inflected}"


def _with_article(noun: Term, bare_nouns: Iterable[str]) -> str:
    if noun.id in set(bare_nouns):
        return noun.text
    article = "an" if noun.text[:1].lower() in "aeiou" else "a"
    return f"{article} {noun.text}"


def render_text(a: Atom, lex: Lexicon | None = None, *,
                bare_nouns: Iterable[str] = (),
                object_article: bool = True) -> str:
    """Best-effort deterministic English sentence for one atom.

    ``bare_nouns`` suppresses the indefinite article (mass nouns and
    declared individuals); ``object_article=False`` drops it everywhere,
    which is how conversational openers are phrased.
    """
    lex = lex or DEFAULT_LEXICON
    words = [a.subject.text, _verb_phrase(a, lex)]
    if a.obj is not None:
        assert isinstance(a.obj, Term), "render needs a distributed atom"
        if object_article:
            words.append(_with_article(a.obj, bare_nouns))
        else:
            words.append(a.obj.text)
    for slot in PLACE_SLOTS:
        place = a.place(slot)
        if place is not None:
            words.append(f"{slot} {place.text}")
    sentence = " ".join(w for w in words if w)
    if a.condition is not None:
        sentence = f"If {a.condition}, {sentence}"
    return sentence[:1].upper() + sentence[1:]


def render_compound(c: Compound, lex: Lexicon | None = None, *,
                    bare_nouns: Iterable[str] = ()) -> str:
    """Render a compound by joining part sentences with and/or."""
    if isinstance(c, Leaf):
        return render_text(c.atom, lex, bare_nouns=bare_nouns)
    joiner = " and " if isinstance(c, And) else " or "
    rendered = []
    for part in c.parts:
        text = render_compound(part, lex, bare_nouns=bare_nouns)
        if not isinstance(part, Leaf):
            text = f"({text})"
        rendered.append(text)
    return joiner.join(rendered)
