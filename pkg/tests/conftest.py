"""Shared brute-force oracles, kept deliberately independent of the package.

Every helper here recomputes alternation / pattern containment / coverage
from first principles (nested loops over index tuples, multiset
permutations via itertools) so that library results can be checked against
code that shares no logic with the implementation under test.
"""

from __future__ import annotations

import itertools

import pytest


def brute_alternates(seq, x, y):
    proj = [c for c in seq if c == x or c == y]
    return all(a != b for a, b in zip(proj, proj[1:]))


def brute_has_132(seq):
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if seq[i] < seq[k] < seq[j]:
                    return True
    return False


def brute_edges(seq):
    """Edge set of the graph the word represents (letters taken as-is)."""
    letters = sorted(set(seq))
    return {
        (x, y)
        for x, y in itertools.combinations(letters, 2)
        if brute_alternates(seq, x, y)
    }


def words_with_copy_counts(n, min_copies, max_copies):
    """All words over {1..n} using each letter min..max times, as tuples."""
    ranges = [range(min_copies, max_copies + 1)] * n
    for counts in itertools.product(*ranges):
        letters = []
        for i, c in enumerate(counts, start=1):
            letters += [i] * c
        yield from set(itertools.permutations(letters))


def brute_representants(g, min_copies=1, max_copies=2, forbid_132=True):
    """All (132-avoiding) word-representants of g, fixed labeling, sorted."""
    target = {tuple(e) for e in g.edge_list()}
    hits = []
    for w in words_with_copy_counts(g.n, min_copies, max_copies):
        if forbid_132 and brute_has_132(w):
            continue
        if brute_edges(w) == target:
            hits.append(w)
    return sorted(hits)


@pytest.fixture
def write_graph(tmp_path):
    """Write a GraphFile for a LabeledGraph and return its path."""

    def _write(g, name="g.graph"):
        lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edge_list()]
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    return _write
