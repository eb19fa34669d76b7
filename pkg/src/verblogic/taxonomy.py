"""Terms and strict-specificity graphs.

Three independent but structurally identical orderings drive every inference
axis: nouns under ``kind_of``, places under ``part_of``, verbs under
``way_of``.  Each is a DAG of strict (irreflexive) child < parent edges;
queries run against the transitive closure, which is recomputed on every
successful insert (knowledge bases are desk-scale, so O(V*E) is fine).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .errors import CycleError, NoPathError, SelfLoopError

_WS = re.compile(r"\s+")


def canonical_id(text: str) -> str:
    """Case-folded symbol with whitespace runs collapsed to underscores."""
    return _WS.sub("_", text.strip()).casefold()


@dataclass(frozen=True)
class Term:
    """An interned symbol for a noun, verb, place, or subject.

    Identity is the canonical ``id``; ``display`` keeps the spelling from
    the first occurrence and never takes part in equality or hashing.
    """

    id: str
    display: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("term id must be non-empty")
        if not self.display:
            object.__setattr__(self, "display", self.id)

    @property
    def text(self) -> str:
        """Display form with underscores rendered as spaces."""
        return self.display.replace("_", " ")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Term({self.id!r})"


def term(text: str) -> Term:
    """Build a term from raw text, preserving the original spelling."""
    return Term(canonical_id(text), text.strip())


class RelationKind(enum.Enum):
    KIND_OF = "kind_of"   # noun -> noun (includes individual "isa" edges)
    PART_OF = "part_of"   # place -> place
    WAY_OF = "way_of"     # verb -> verb


class EdgeStore:
    """Per-kind sets of child < parent edges plus their transitive closure.

    Mutable only until :meth:`freeze`; afterwards every method is a pure
    read and safe for concurrent use.
    """

    def __init__(self) -> None:
        self._parents: dict[RelationKind, dict[str, set[str]]] = {
            kind: {} for kind in RelationKind
        }
        self._up: dict[RelationKind, dict[str, set[str]]] = {
            kind: {} for kind in RelationKind
        }
        self._down: dict[RelationKind, dict[str, set[str]]] = {
            kind: {} for kind in RelationKind
        }
        self._terms: dict[str, Term] = {}
        self._frozen = False

    # -- building ---------------------------------------------------------

    def add_edge(self, kind: RelationKind, child: Term, parent: Term) -> None:
        """Record child < parent under ``kind`` and refresh the closure.

        The store is left untouched when the edge is rejected.
        """
        if self._frozen:
            raise RuntimeError("edge store is frozen")
        if child == parent:
            raise SelfLoopError(f"{child.id} < {child.id}")
        up = self._up[kind]
        if child.id in up.get(parent.id, ()):
            raise CycleError(f"{child.id} < {parent.id} would close a cycle")
        self._terms.setdefault(child.id, child)
        self._terms.setdefault(parent.id, parent)
        self._parents[kind].setdefault(child.id, set()).add(parent.id)
        self._recompute(kind)

    def freeze(self) -> None:
        self._frozen = True

    def _recompute(self, kind: RelationKind) -> None:
        parents = self._parents[kind]
        up: dict[str, set[str]] = {}
        nodes = set(parents)
        for ps in parents.values():
            nodes.update(ps)
        for node in nodes:
            seen: set[str] = set()
            stack = list(parents.get(node, ()))
            while stack:
                cur = stack.pop()
                if cur in seen:
                    continue
                seen.add(cur)
                stack.extend(parents.get(cur, ()))
            up[node] = seen
        down: dict[str, set[str]] = {node: set() for node in nodes}
        for node, ancestors in up.items():
            for anc in ancestors:
                down[anc].add(node)
        self._up[kind] = up
        self._down[kind] = down

    # -- queries ----------------------------------------------------------

    def term_for(self, term_id: str) -> Term | None:
        return self._terms.get(term_id)

    def strict_ancestors(self, kind: RelationKind, t: Term) -> set[Term]:
        """All terms strictly above ``t``; empty for unknown terms."""
        return {self._terms[a] for a in self._up[kind].get(t.id, ())}

    def strict_descendants(self, kind: RelationKind, t: Term) -> set[Term]:
        """Exact inverse of :meth:`strict_ancestors`."""
        return {self._terms[d] for d in self._down[kind].get(t.id, ())}

    def most_general_ancestor(self, kind: RelationKind, t: Term) -> Term | None:
        """The maximal element above ``t``, ties broken by id; None at top."""
        ancestors = self._up[kind].get(t.id, set())
        maximal = sorted(a for a in ancestors if not self._up[kind].get(a))
        return self._terms[maximal[0]] if maximal else None

    def path_up(self, kind: RelationKind, start: Term, goal: Term) -> list[Term]:
        """An upward path from ``start`` to ``goal``, both inclusive.

        At each step the lexicographically smallest parent that can still
        reach the goal is taken, so the result is deterministic even on
        diamond-shaped graphs.
        """
        if start == goal:
            return [start]
        up = self._up[kind]
        if goal.id not in up.get(start.id, ()):
            raise NoPathError(f"{goal.id} is not above {start.id}")
        path = [start]
        current = start.id
        while current != goal.id:
            for parent in sorted(self._parents[kind].get(current, ())):
                if parent == goal.id or goal.id in up.get(parent, ()):
                    path.append(self._terms[parent])
                    current = parent
                    break
        return path
