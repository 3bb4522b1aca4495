"""Semantics tying words to graphs.

A word w over alphabet {1..n} represents the graph on vertices 1..n whose
edges are exactly the alternating pairs of w. A 132-representant is a
word-representant that additionally avoids the pattern 132. Labels are
significant: these functions never relabel on their own.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import LabeledGraph
from .words import Word, WordLike, alternates, has_132, is_k_uniform, reduce_word

EDGE_NOT_ALTERNATING = "edge-not-alternating"
NONEDGE_ALTERNATING = "nonedge-alternating"
ALPHABET_MISMATCH = "alphabet-mismatch"


@dataclass(frozen=True)
class Violation:
    pair: Optional[tuple[int, int]]  # None for alphabet mismatches
    reason: str


@dataclass(frozen=True)
class RepresentationCheck:
    word: Word
    graph: LabeledGraph
    verdict: bool
    first_violation: Optional[Violation]


def _as_word(w: WordLike) -> Word:
    return w if isinstance(w, Word) else Word(w)


def graph_from_word(w: WordLike) -> LabeledGraph:
    """The graph represented by w: edge {x,y} iff x and y alternate in w.

    The alphabet must be exactly {1..n}; a gapped alphabet raises instead of
    being silently reduced, since relabeling changes which graphs admit
    132-avoiding representants.
    """
    word = _as_word(w)
    alpha = word.alphabet()
    n = max(alpha) if alpha else 0
    if alpha != frozenset(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - alpha)
        raise ValueError(f"alphabet has gaps (missing {missing}); reduce the word first")
    edges = [
        (x, y)
        for x in range(1, n + 1)
        for y in range(x + 1, n + 1)
        if alternates(word, x, y)
    ]
    return LabeledGraph(n, edges)


def represents(w: WordLike, g: LabeledGraph) -> RepresentationCheck:
    """Does w represent g, letter x standing for vertex x?

    Failures are verdicts, not errors. The first offending pair in
    lexicographic order is reported; an alphabet different from {1..n} is
    reported as a violation with no pair.
    """
    word = _as_word(w)
    alpha = word.alphabet()
    if alpha != frozenset(range(1, g.n + 1)):
        v = Violation(None, ALPHABET_MISMATCH)
        return RepresentationCheck(word, g, False, v)
    for x in range(1, g.n + 1):
        for y in range(x + 1, g.n + 1):
            alt = alternates(word, x, y)
            if g.has_edge(x, y) and not alt:
                v = Violation((x, y), EDGE_NOT_ALTERNATING)
                return RepresentationCheck(word, g, False, v)
            if not g.has_edge(x, y) and alt:
                v = Violation((x, y), NONEDGE_ALTERNATING)
                return RepresentationCheck(word, g, False, v)
    return RepresentationCheck(word, g, True, None)


def is_132_representant(w: WordLike, g: LabeledGraph) -> bool:
    """represents(w, g) and w avoids 132."""
    word = _as_word(w)
    return not has_132(word) and represents(word, g).verdict


def combine_components(words: Sequence[WordLike]) -> Word:
    """Join 2-uniform 132-avoiding representants of disjoint graphs.

    Each word is reduced, then shifted up by the total alphabet size of the
    words before it; the shifted blocks are concatenated in reverse order
    (largest labels first), which keeps the result 132-avoiding. The result
    represents the disjoint union with component i relabeled to the block
    just above the alphabets of components 1..i-1.
    """
    if not words:
        raise ValueError("need at least one component word")
    blocks: list[tuple[int, ...]] = []
    offset = 0
    for w in words:
        word = _as_word(w)
        if len(word) == 0:
            raise ValueError("empty component word")
        if not is_k_uniform(word, 2):
            raise ValueError(f"{word} is not 2-uniform")
        if has_132(word):
            raise ValueError(f"{word} contains 132")
        reduced = reduce_word(word)
        blocks.append(tuple(x + offset for x in reduced))
        offset += len(set(reduced.letters))
    out: list[int] = []
    for block in reversed(blocks):
        out.extend(block)
    return Word(out)


def add_isolated(w: WordLike) -> Word:
    """Prepend n·n for a fresh maximal letter n, adding an isolated vertex.

    The doubled fresh letter alternates with nothing and, being maximal and
    leftmost, cannot take part in a new 132.
    """
    word = _as_word(w)
    if has_132(word):
        raise ValueError("input must avoid 132")
    n = max(word.alphabet(), default=0) + 1
    return Word((n, n) + word.letters)


def remove_vertex_word(w: WordLike, x: int) -> Word:
    """Delete every copy of letter x."""
    word = _as_word(w)
    if x not in word.alphabet():
        raise ValueError(f"letter {x} does not occur")
    return Word(c for c in word if c != x)
