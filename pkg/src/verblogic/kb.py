"""Frozen knowledge base assembled from parsed declarations."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from . import dsl
from .errors import CycleError, SelfLoopError
from .statement import (Compound, DEFAULT_LEXICON, Leaf, Lexicon, TermGroup,
                        canonical_form, leaves)
from .taxonomy import EdgeStore, Term, canonical_id


@dataclass
class KnowledgeBase:
    """Read-only view over everything a KB file declares.

    ``facts`` are canonical compounds in declaration order.  ``bare_nouns``
    collects mass nouns plus declared individuals, the two cases that
    render without an indefinite article.
    """

    edges: EdgeStore = field(default_factory=EdgeStore)
    facts: list[Compound] = field(default_factory=list)
    lexicon: Lexicon = field(default_factory=lambda: DEFAULT_LEXICON)
    isomorphisms: dict[str, Term] = field(default_factory=dict)
    memberships: dict[tuple[str, str, str], float] = field(default_factory=dict)
    subject_classes: dict[str, str] = field(default_factory=dict)
    mass_nouns: set[str] = field(default_factory=set)
    individuals: set[str] = field(default_factory=set)
    terms: dict[str, Term] = field(default_factory=dict)

    @property
    def bare_nouns(self) -> set[str]:
        return self.mass_nouns | self.individuals

    def term(self, text: str) -> Term:
        """Resolve raw text to the interned term, or mint a new one."""
        tid = canonical_id(text)
        return self.terms.get(tid, Term(tid, text.strip()))

    def _register(self, *ts: Term) -> None:
        for t in ts:
            self.terms.setdefault(t.id, t)


def build_kb(source: dsl.KBSource) -> tuple[KnowledgeBase, list[dsl.Diagnostic]]:
    """Materialize a KB, reporting structural problems (cycles) positioned
    at the offending declaration."""
    kb = KnowledgeBase()
    diagnostics: list[dsl.Diagnostic] = []
    for decl in source.declarations:
        if isinstance(decl, dsl.EdgeDecl):
            kb._register(decl.child, decl.parent)
            try:
                kb.edges.add_edge(decl.kind, decl.child, decl.parent)
            except (CycleError, SelfLoopError) as exc:
                diagnostics.append(
                    dsl.Diagnostic(decl.line, 1, "error", str(exc)))
                continue
            if decl.isa:
                kb.individuals.add(decl.child.id)
        elif isinstance(decl, dsl.IsoDecl):
            kb._register(decl.verb, decl.noun_class)
            kb.isomorphisms[decl.verb.id] = decl.noun_class
        elif isinstance(decl, dsl.SubjectDecl):
            kb._register(decl.subject, decl.cls)
            kb.subject_classes[decl.subject.id] = decl.cls.id
        elif isinstance(decl, dsl.MuDecl):
            kb._register(decl.cls, decl.verb, decl.noun)
            kb.memberships[(decl.cls.id, decl.verb.id, decl.noun.id)] = decl.value
        elif isinstance(decl, dsl.MassDecl):
            kb._register(decl.noun)
            kb.mass_nouns.add(decl.noun.id)
        elif isinstance(decl, dsl.FactDecl):
            compound = canonical_form(Leaf(decl.atom))
            for atom in leaves(compound):
                slots = [atom.subject, atom.verb, atom.obj, atom.place_in,
                         atom.place_from, atom.place_to]
                kb._register(*[t for t in slots
                               if t is not None and not isinstance(t, TermGroup)])
            kb.facts.append(compound)
    kb.edges.freeze()
    return kb, diagnostics


def load_text(text: str) -> tuple[KnowledgeBase | None, list[dsl.Diagnostic]]:
    """Parse and build in one step; the KB is None when any error occurred."""
    result = dsl.parse_kb(text)
    kb, build_diags = build_kb(result.source)
    diagnostics = result.diagnostics + build_diags
    if any(d.severity == "error" for d in diagnostics):
        return None, diagnostics
    return kb, diagnostics


def load_file(path: str | Path) -> tuple[KnowledgeBase | None, list[dsl.Diagnostic]]:
    return load_text(Path(path).read_text(encoding="utf-8"))
