"""Triples of alternating words: equivalence, thinness, degeneracy.

Triples are considered up to rotation, the flip reversing order and
inverting entries, and the two sign automorphisms.  A triple is
letter-thin when some equivalent form literally matches one of four
patterns built from middle letters and shared boundary words; it is
degenerate when one entry is trivial and the other two are inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .words import as_alternating, inverse

Triple = tuple[str, str, str]

_PHI_A = str.maketrans("aA", "Aa")
_PHI_B = str.maketrans("bB", "Bb")

THIN_TAGS = ("T1a", "T1b", "T2a", "T2b")


def rotate(t: Triple) -> Triple:
    return (t[1], t[2], t[0])


def flip(t: Triple) -> Triple:
    return (inverse(t[2]), inverse(t[1]), inverse(t[0]))


def phi_a(t: Triple) -> Triple:
    return tuple(x.translate(_PHI_A) for x in t)  # type: ignore[return-value]


def phi_b(t: Triple) -> Triple:
    return tuple(x.translate(_PHI_B) for x in t)  # type: ignore[return-value]


_MOVES = {"rot": rotate, "flip": flip, "phi_a": phi_a, "phi_b": phi_b}
# Inverses within the move group: rotation has order three, the rest
# are involutions.
_UNDO = {"rot": ("rot", "rot"), "flip": ("flip",), "phi_a": ("phi_a",), "phi_b": ("phi_b",)}


def apply_moves(t: Triple, moves: tuple[str, ...]) -> Triple:
    for m in moves:
        t = _MOVES[m](t)
    return t


def undo_moves(t: Triple, moves: tuple[str, ...]) -> Triple:
    for m in reversed(moves):
        for u in _UNDO[m]:
            t = _MOVES[u](t)
    return t


def orbit(t: Triple) -> dict[Triple, tuple[str, ...]]:
    """All equivalent forms of t with a move word reaching each; the
    move group has order 24."""
    seen: dict[Triple, tuple[str, ...]] = {t: ()}
    queue = [t]
    while queue:
        cur = queue.pop()
        path = seen[cur]
        for name, move in _MOVES.items():
            nxt = move(cur)
            if nxt not in seen:
                seen[nxt] = path + (name,)
                queue.append(nxt)
    return seen


def equivalent_forms(t: Triple) -> set[Triple]:
    return set(orbit(t))


def is_degenerate(t: Triple) -> bool:
    x1, x2, x3 = t
    if not x3:
        return x2 == inverse(x1)
    if not x2:
        return x3 == inverse(x1)
    if not x1:
        return x3 == inverse(x2)
    return False


def _match_t1(form: Triple, first: str, second: str, lone: str):
    """Match (c1^-1 <first><second> c2, c2^-1 <second^-1><first> c3,
    c3^-1 <first^-1> c1); returns (c1, c2, c3) or None."""
    y1, y2, y3 = form
    mid1 = first + second
    mid2 = inverse(second) + first
    for i, ch in enumerate(y3):
        if ch != lone:
            continue
        c3 = inverse(y3[:i])
        c1 = y3[i + 1 :]
        prefix = inverse(c1) + mid1
        if not y1.startswith(prefix):
            continue
        c2 = y1[len(prefix) :]
        if y2 == inverse(c2) + mid2 + c3:
            return (c1, c2, c3)
    return None


def _match_t2(form: Triple, conj: str, lone: str):
    """Match (c1^-1 <conj^-1 x conj> c2, c2^-1 <lone>, <lone^-1> c1)
    where the middle of the first entry is conj-inverse, x, conj."""
    y1, y2, y3 = form
    if not y2 or y2[-1] != lone:
        return None
    if not y3 or y3[0] != inverse(lone):
        return None
    c2 = inverse(y2[:-1])
    c1 = y3[1:]
    if y1 == inverse(c1) + conj + c2:
        return (c1, c2)
    return None


def _match(tag: str, form: Triple):
    if tag == "T1a":
        return _match_t1(form, "a", "b", "A")
    if tag == "T1b":
        return _match_t1(form, "b", "a", "B")
    if tag == "T2a":
        return _match_t2(form, "Bab", "B")
    return _match_t2(form, "Aba", "A")


def build_pattern(tag: str, cs: tuple[str, ...]) -> Triple:
    """Assemble the literal pattern triple for a tag from its boundary
    words."""
    if tag == "T1a":
        c1, c2, c3 = cs
        return (inverse(c1) + "ab" + c2, inverse(c2) + "Ba" + c3, inverse(c3) + "A" + c1)
    if tag == "T1b":
        c1, c2, c3 = cs
        return (inverse(c1) + "ba" + c2, inverse(c2) + "Ab" + c3, inverse(c3) + "B" + c1)
    if tag == "T2a":
        c1, c2 = cs
        return (inverse(c1) + "Bab" + c2, inverse(c2) + "B", "b" + c1)
    if tag == "T2b":
        c1, c2 = cs
        return (inverse(c1) + "Aba" + c2, inverse(c2) + "A", "a" + c1)
    raise ValueError(tag)


@dataclass(frozen=True, slots=True)
class ThinType:
    """Classification result; witness data reassembles to a form
    equivalent to the classified triple."""

    tag: str  # T1a, T1b, T2a, T2b, degenerate or none
    moves: tuple[str, ...] = ()
    cs: tuple[str, ...] = ()

    def is_thin(self) -> bool:
        return self.tag in THIN_TAGS

    def reassemble(self) -> Triple | None:
        if not self.is_thin():
            return None
        return undo_moves(build_pattern(self.tag, self.cs), self.moves)


def classify(t: Triple) -> ThinType:
    """First matching tag in the order degenerate, T1a, T1b, T2a, T2b
    over all equivalent forms; ``none`` when nothing matches."""
    for x in t:
        as_alternating(x)
    if is_degenerate(t):
        return ThinType("degenerate")
    forms = orbit(t)
    for tag in THIN_TAGS:
        for form, moves in forms.items():
            cs = _match(tag, form)
            if cs is not None:
                return ThinType(tag, moves, cs)
    return ThinType("none")


def is_letter_thin(t: Triple) -> bool:
    """Pattern search without the tag priority of classify; same
    thin-or-not answer, cheaper on average."""
    if is_degenerate(t):
        return False
    for form in orbit(t):
        for tag in THIN_TAGS:
            if _match(tag, form) is not None:
                return True
    return False


_FIRST_GEN = {
    # Pattern constraints: each boundary word is empty or starts with
    # the listed generator, so the assembled entries stay reduced.
    "T1a": ("b", "a", "b"),
    "T1b": ("a", "b", "a"),
    "T2a": ("a", "a"),
    "T2b": ("b", "b"),
}


def random_alt_word(rng: Random, maxlen: int, first_gen: str | None = None) -> str:
    n = rng.randint(0, maxlen)
    if n == 0:
        return ""
    gen = first_gen if first_gen else rng.choice("ab")
    other = "b" if gen == "a" else "a"
    out = []
    for i in range(n):
        g = gen if i % 2 == 0 else other
        out.append(g if rng.random() < 0.5 else g.upper())
    return "".join(out)


def gen_letter_thin(rng: Random, size_bound: int, tag: str | None = None) -> Triple:
    """Random letter-thin triple of a uniformly chosen (or forced) type."""
    chosen = tag if tag else rng.choice(THIN_TAGS)
    cs = tuple(random_alt_word(rng, size_bound, g) for g in _FIRST_GEN[chosen])
    return build_pattern(chosen, cs)
