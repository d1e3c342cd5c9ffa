"""Low-level algorithms on partially commutative words.

Letters are (vertex, sign) pairs; two letters may swap when their
vertices are distinct and adjacent in the graph.  Used by the group
layer for normal forms and by the series layer, which needs reduction
only to recognize trivial elements.
"""

from __future__ import annotations

from typing import Callable, Iterable

Letter = tuple[str, int]

Adjacency = Callable[[str, str], bool]


def reduce_signed(adjacent: Adjacency, letters) -> tuple[Letter, ...]:
    """Delete inverse pairs separated only by letters commuting with
    them, until none remain."""
    word = list(letters)
    changed = True
    while changed:
        changed = False
        n = len(word)
        for i in range(n):
            v, s = word[i]
            for j in range(i + 1, n):
                u, t = word[j]
                if u == v:
                    if t == -s:
                        del word[j]
                        del word[i]
                        changed = True
                    break
                if not adjacent(v, u):
                    break
            if changed:
                break
    return tuple(word)


def canonical_signed(
    order_index: Callable[[str], int],
    blockers: Callable[[str], Iterable[str]],
    letters,
) -> tuple[Letter, ...]:
    """Lexicographically least commutation-equivalent ordering.

    Letters rank by vertex declaration order, positive sign first.
    ``blockers(v)`` lists the vertices whose later occurrences cannot
    jump over a letter on v: v itself plus its non-neighbours.
    """
    rem = list(letters)
    out: list[Letter] = []
    while rem:
        present = {v for v, _ in rem}
        best_key = None
        best_idx = -1
        shadow: set[str] = set()
        for idx, (v, s) in enumerate(rem):
            if v not in shadow:
                key = (order_index(v), 0 if s > 0 else 1)
                if best_key is None or key < best_key:
                    best_key, best_idx = key, idx
            shadow.update(blockers(v))
            if present <= shadow:
                break
        out.append(rem.pop(best_idx))
    return tuple(out)
