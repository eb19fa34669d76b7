from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import pytest

from verblogic import KnowledgeBase, RelationKind, Term
from verblogic.taxonomy import EdgeStore

KB_DIR = Path(__file__).resolve().parent.parent / "kb"


def T(text: str) -> Term:
    return Term(text.casefold().replace(" ", "_"), text)


def kb_from_edges(**edges_by_kind) -> KnowledgeBase:
    """Build a frozen KB straight from edge lists, bypassing the DSL.

    Keywords are relation kind values: kind_of / part_of / way_of, each a
    list of (child, parent) strings.
    """
    store = EdgeStore()
    for kind_name, edges in edges_by_kind.items():
        kind = RelationKind(kind_name)
        for child, parent in edges:
            store.add_edge(kind, T(child), T(parent))
    store.freeze()
    return KnowledgeBase(edges=store)


def dfs_reachable(edges: list[tuple[str, str]], start: str) -> set[str]:
    """Independent brute-force reachability over child->parent pairs."""
    adj = defaultdict(set)
    for child, parent in edges:
        adj[child].add(parent)
    seen: set[str] = set()
    stack = [start]
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def all_upward_paths(edges: list[tuple[str, str]], start: str,
                     goal: str) -> list[list[str]]:
    """Every upward path from start to goal, by exhaustive DFS."""
    adj = defaultdict(set)
    for child, parent in edges:
        adj[child].add(parent)
    paths: list[list[str]] = []

    def walk(node: str, trail: list[str]) -> None:
        if node == goal:
            paths.append(trail)
            return
        for nxt in adj[node]:
            walk(nxt, trail + [nxt])

    walk(start, [start])
    return paths


@pytest.fixture
def house_kb() -> KnowledgeBase:
    from verblogic import load_file

    kb, diags = load_file(KB_DIR / "house.vl")
    assert kb is not None, diags
    return kb
