"""Block decompositions of alternating words and the collapsing maps.

An alternating word factors uniquely as optional boundary b-letters
around maximal single-sign a-blocks separated by single b-letters, the
block signs strictly alternating.  ``alpha`` replaces every block by one
letter carrying its sign; ``beta`` is the same with the generators
exchanged.  ``alpha_bar``/``beta_bar`` are the induced maps on conjugacy
classes of even alternating words, and ``power_split`` exhibits how
``alpha`` acts on powers.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import alpha_word, beta_word, reduce_word
from .errors import BadShape
from .words import (
    INVERSE,
    EvenAltClass,
    as_alternating,
    cyc_class,
    is_alternating,
    rotations,
)

_RANK = str.maketrans("aAbB", "0123")


@dataclass(frozen=True, slots=True)
class ADecomposition:
    """Unique factorization y0 s1 y1 ... s_l y_l of an alternating word.

    ``leading``/``trailing`` are single b-letters or empty, ``blocks``
    are the maximal single-sign a-blocks and ``separators`` the single
    b-letters between consecutive blocks.
    """

    leading: str
    blocks: tuple[str, ...]
    separators: tuple[str, ...]
    trailing: str

    def signs(self) -> tuple[int, ...]:
        return tuple(1 if blk[0] == "a" else -1 for blk in self.blocks)

    def reassemble(self) -> str:
        parts = [self.leading]
        for i, blk in enumerate(self.blocks):
            parts.append(blk)
            if i < len(self.separators):
                parts.append(self.separators[i])
        parts.append(self.trailing)
        return "".join(parts)


def _decompose(w: str, block_letters: str) -> ADecomposition:
    leading = ""
    i = 0
    if w and w[0] not in block_letters:
        leading, i = w[0], 1
    blocks: list[str] = []
    separators: list[str] = []
    start = None
    run_sign = ""
    last_in_run = None
    for j in range(i, len(w)):
        ch = w[j]
        if ch not in block_letters:
            continue
        if not run_sign:
            start, run_sign, last_in_run = j, ch, j
        elif ch == run_sign:
            last_in_run = j
        else:
            blocks.append(w[start:last_in_run + 1])
            separators.append(w[last_in_run + 1])
            start, run_sign, last_in_run = j, ch, j
    trailing = ""
    if run_sign:
        blocks.append(w[start:last_in_run + 1])
        if last_in_run + 1 < len(w):
            trailing = w[last_in_run + 1]
    return ADecomposition(leading, tuple(blocks), tuple(separators), trailing)


def a_decompose(w: str) -> ADecomposition:
    """The a-decomposition; blocks hold a-letters, boundaries b-letters."""
    return _decompose(as_alternating(w), "aA")


def b_decompose(w: str) -> ADecomposition:
    return _decompose(as_alternating(w), "bB")


def alpha(w: str) -> str:
    return alpha_word(as_alternating(w))


def beta(w: str) -> str:
    return beta_word(as_alternating(w))


def _least_rotation_from(cls: EvenAltClass, letters: str) -> str:
    cands = [r for r in rotations(cls.rep) if r[0] in letters]
    return min(cands, key=lambda r: r.translate(_RANK))


def _bar(cls: EvenAltClass, letters: str, collapse) -> EvenAltClass:
    if cls.is_trivial():
        return cls
    r = _least_rotation_from(cls, letters)
    x = r[0]
    image = collapse(r + x)
    # collapse(r + x) starts and ends with x, so multiplying by the
    # inverse letter just strips the final position.
    return cyc_class(image[:-1])


def alpha_bar(cls: EvenAltClass) -> EvenAltClass:
    """Collapse map on classes: rotate to an a-letter x, take the class
    of alpha(x w' x) x^-1.  Well defined independent of the rotation."""
    return _bar(cls, "aA", alpha_word)


def beta_bar(cls: EvenAltClass) -> EvenAltClass:
    return _bar(cls, "bB", beta_word)


def _split_anchor(w: str, block_letters: str) -> tuple[int, int] | None:
    idx = [i for i, ch in enumerate(w) if ch in block_letters]
    for k in range(len(idx) - 1):
        if w[idx[k]] != w[idx[k + 1]]:
            return idx[k], idx[k + 1]
    return None


def _power_split(c1: str, w: str, c2: str, collapse, block_letters: str):
    if not w or len(w) % 2:
        raise BadShape("periodic part must be nonempty of even length")
    if not is_alternating(c1 + w + c2):
        raise BadShape("concatenation must be alternating as written")
    anchor = _split_anchor(w, block_letters)
    if anchor is None:
        # Single-sign blocks only: the collapse of c1 w^n c2 does not
        # depend on n at all.
        return collapse(c1 + w + c2), "", ""
    i, j = anchor
    x = w[i]
    v1, v2, v3 = w[:i], w[i + 1 : j], w[j + 1 :]
    d1 = collapse(c1 + v1 + x)[:-1]
    core = v2 + INVERSE[x] + v3
    wp = collapse(x + core + v1 + x)[:-1]
    d2 = collapse(x + core + c2)
    return d1, wp, d2


def power_split(c1: str, w: str, c2: str) -> tuple[str, str, str]:
    """Words (d1, w', d2) with alpha(c1 w^n c2) = d1 w'^(n-1) d2 as
    reduced words for every n >= 1, and [w'] the alpha_bar image of [w].
    """
    return _power_split(c1, w, c2, alpha_word, "aA")


def power_split_beta(c1: str, w: str, c2: str) -> tuple[str, str, str]:
    return _power_split(c1, w, c2, beta_word, "bB")


def gamma(n: int, w: str) -> str:
    """Apply the alternating composition of alpha and beta of depth n,
    starting with alpha."""
    for i in range(n):
        w = alpha_word(w) if i % 2 == 0 else beta_word(w)
    return w


def gamma_bar(n: int, cls: EvenAltClass) -> EvenAltClass:
    for i in range(n):
        cls = alpha_bar(cls) if i % 2 == 0 else beta_bar(cls)
    return cls


def reduce(w: str) -> str:
    """Free reduction, re-exported next to the block maps."""
    return reduce_word(w)
