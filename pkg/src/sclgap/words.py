"""Reduced and alternating words in the free group on two generators.

Words are plain strings over ``a``, ``b`` with uppercase for inverses,
always kept freely reduced.  An *alternating* word switches generator
at every letter; conjugacy classes of even-length alternating words get
a canonical representative (least rotation) so they can be compared and
hashed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ._kernels import reduce_word
from .errors import NotAlternating, OddLength

ALPHABET = "aAbB"
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
SWAP = str.maketrans("aAbB", "bBaA")

# Letter order a < a^-1 < b < b^-1, used for canonical rotations only.
_RANK = str.maketrans("aAbB", "0123")

_TOKEN = re.compile(r"([ab])(?:\^(-?\d+))?", re.IGNORECASE)


def generator_of(letter: str) -> str:
    """The generator (``a`` or ``b``) a single letter belongs to."""
    return letter.lower()


def sign_of(letter: str) -> int:
    return 1 if letter.islower() else -1


def inverse(w: str) -> str:
    """Inverse word: reverse the letters and flip every sign."""
    return w.translate(str.maketrans(ALPHABET, "AaBb"))[::-1]


def parse_word(text: str) -> str:
    """Parse CLI word syntax into a reduced word.

    Accepts compact strings like ``abAB`` and whitespace-separated
    tokens like ``a^-1 b a^2``.  Raises ValueError on anything else.
    """
    text = text.strip()
    if not text:
        return ""
    letters: list[str] = []
    for token in text.split():
        pos = 0
        while pos < len(token):
            m = _TOKEN.match(token, pos)
            if not m:
                raise ValueError(f"cannot parse word at {token[pos:]!r}")
            gen = m.group(1)
            exp = int(m.group(2)) if m.group(2) else (1 if gen.islower() else -1)
            if not gen.islower():
                # "A^2" means (a^-1)^2
                exp = -exp if m.group(2) else exp
                gen = gen.lower()
            letters.append((gen if exp > 0 else gen.upper()) * abs(exp))
            pos = m.end()
    return reduce_word("".join(letters))


def is_reduced(w: str) -> bool:
    return all(w[i + 1] != INVERSE[w[i]] for i in range(len(w) - 1))


def is_alternating(w: str) -> bool:
    """True for reduced words whose letters alternate generators."""
    if not is_reduced(w):
        return False
    return all(w[i].lower() != w[i + 1].lower() for i in range(len(w) - 1))


def as_alternating(w: str) -> str:
    """Return ``w`` unchanged if alternating, else raise NotAlternating."""
    for i in range(len(w) - 1):
        if w[i].lower() == w[i + 1].lower():
            raise NotAlternating(f"letters {i},{i+1} of {w!r} share a generator")
    return w


def exp_sum(w: str, gen: str) -> int:
    """Signed count of a generator; both sums vanish exactly on the
    commutator subgroup."""
    return w.count(gen) - w.count(gen.upper())


def in_commutator_subgroup(w: str) -> bool:
    return exp_sum(w, "a") == 0 and exp_sum(w, "b") == 0


def swap_generators(w: str) -> str:
    """Image under the automorphism exchanging the two generators."""
    return w.translate(SWAP)


def rotations(w: str):
    for i in range(len(w)):
        yield w[i:] + w[:i]


def least_rotation(w: str) -> str:
    """Lexicographically least rotation under the order a < A < b < B."""
    if not w:
        return w
    return min(rotations(w), key=lambda r: r.translate(_RANK))


def cyclic_reduce_word(w: str) -> tuple[str, str]:
    """Write w = c u c^-1 with u cyclically reduced; returns (c, u)."""
    w = reduce_word(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == INVERSE[w[j - 1]]:
        i += 1
        j -= 1
    return w[:i], w[i:j]


@dataclass(frozen=True, slots=True)
class EvenAltClass:
    """Conjugacy class of an even-length alternating word.

    ``rep`` is the canonical representative: the least rotation of any
    representative.  Even alternating words are cyclically reduced, so
    two of them are conjugate exactly when they are rotations of each
    other.
    """

    rep: str

    def __len__(self) -> int:
        return len(self.rep)

    def is_trivial(self) -> bool:
        return not self.rep

    def in_commutator_subgroup(self) -> bool:
        return in_commutator_subgroup(self.rep)

    def __str__(self) -> str:
        return f"[{self.rep or 'e'}]"


def cyc_class(w: str) -> EvenAltClass:
    """Canonical conjugacy class of an even alternating word."""
    as_alternating(w)
    if len(w) % 2:
        raise OddLength(f"|{w}| is odd")
    return EvenAltClass(least_rotation(w))


def format_word(w: str) -> str:
    return w if w else "e"
