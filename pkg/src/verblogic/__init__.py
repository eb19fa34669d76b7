"""Deductive reasoning over noun/place/verb specificity taxonomies."""

from .dialogue import (QuestionOperator, Session, ask, available_refinements,
                       open_session)
from .engine import (Axis, derive_all, derive_conclusions, entails,
                     specialize_negative)
from .fuzzy import adverb_for_mu, annotate, is_sound_can, membership
from .kb import KnowledgeBase, build_kb, load_file, load_text
from .statement import (And, Atom, Compound, FrequencyAdverb, Leaf, Lexicon,
                        Or, Tense, TermGroup, canonical_form, distribute,
                        make_atom, negate, render_compound, render_text)
from .taxonomy import EdgeStore, RelationKind, Term, term

__all__ = [
    "And", "Atom", "Axis", "Compound", "EdgeStore", "FrequencyAdverb",
    "KnowledgeBase", "Leaf", "Lexicon", "Or", "QuestionOperator",
    "RelationKind", "Session", "Tense", "Term", "TermGroup",
    "adverb_for_mu", "annotate", "ask", "available_refinements", "build_kb",
    "canonical_form", "derive_all", "derive_conclusions", "distribute",
    "entails", "is_sound_can", "load_file", "load_text", "make_atom",
    "membership", "negate", "open_session", "render_compound", "render_text",
    "specialize_negative", "term",
]

__version__ = "0.1.0"
