"""Letter maps from arbitrary groups into alternating words.

A letter map sends group elements to alternating words, commutes with
inversion, and on every pair (g, h) either multiplies exactly or leaves
a one-letter middle defect.  The well-behaved variant produces only
letter-thin or degenerate triples; any letter map is upgraded to a
well-behaved one by adjusting word boundaries (the tilde construction).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from ._kernels import reduce_word
from .blocks import gamma
from .triples import Triple, classify, is_degenerate
from .words import as_alternating, inverse


class GroupOracle:
    """Minimal black-box group interface."""

    name = "group"

    def identity(self):
        raise NotImplementedError

    def multiply(self, g, h):
        raise NotImplementedError

    def invert(self, g):
        raise NotImplementedError

    def equal(self, g, h) -> bool:
        raise NotImplementedError

    def power(self, g, n: int):
        out = self.identity()
        base = g if n >= 0 else self.invert(g)
        for _ in range(abs(n)):
            out = self.multiply(out, base)
        return out


class F2Group(GroupOracle):
    """The rank-2 free group on reduced words."""

    name = "f2"

    def identity(self) -> str:
        return ""

    def multiply(self, g: str, h: str) -> str:
        return reduce_word(g + h)

    def invert(self, g: str) -> str:
        return inverse(g)

    def equal(self, g: str, h: str) -> bool:
        return g == h


F2 = F2Group()


@dataclass(frozen=True)
class LetterQM:
    """A letter map on a carrier group.

    ``structural_powers`` reports elements for which image-of-power
    equals power-of-image by construction rather than by sampling.
    """

    carrier: GroupOracle
    evaluate: Callable[[Any], str]
    name: str = "letter-map"
    structural_powers: Callable[[Any], bool] = field(default=lambda g: False)

    def __call__(self, g) -> str:
        return self.evaluate(g)


def tilde(w: str) -> str:
    """Boundary adjustment: trivial on single a-letters and the empty
    word, otherwise prepend/append fixed words so the result starts
    with a and ends with a-inverse.  Commutes with inversion."""
    as_alternating(w)
    if w in ("", "a", "A"):
        return ""
    zs = {"a": "", "b": "a", "B": "a", "A": "aa"}[w[0]]
    ze = {"A": "", "b": "A", "B": "A", "a": "AA"}[w[-1]]
    return reduce_word(zs + w + ze)


def f2_sign_qm(g: str) -> str:
    """Replace each maximal generator power by a single letter with its
    sign.  The motivating letter map on the free group itself."""
    g = reduce_word(g)
    out = []
    for ch in g:
        if not out or out[-1].lower() != ch.lower():
            out.append(ch)
    return "".join(out)


def f2_letter_qm() -> LetterQM:
    def structural(g: str) -> bool:
        # Powers of g concatenate without merging runs exactly when g
        # is cyclically reduced, starts with an a-power and ends with a
        # b-power (or is trivial).
        if not g:
            return True
        return g[0].lower() == "a" and g[-1].lower() == "b"

    return LetterQM(F2, f2_sign_qm, name="f2-sign", structural_powers=structural)


@dataclass(frozen=True, slots=True)
class LetterQMCheck:
    """Outcome of checking one pair against the letter-map contract."""

    kind: str  # 'product', 'one-letter' or 'violation'
    witness: tuple | None = None


def _one_letter_witness(w1: str, w2: str, w3: str):
    """Search factorizations w1 = c1^-1 x1 c2, w2 = c2^-1 x2 c3,
    w3 = c3^-1 x3 c1 with x1 x2 x3 a single letter of one generator."""
    for gen in "ab":
        members = {gen, gen.upper()}
        for i, x1 in enumerate(w1):
            if x1 not in members:
                continue
            c1 = inverse(w1[:i])
            c2 = w1[i + 1 :]
            rest = inverse(c2)
            if not w2.startswith(rest) or len(w2) == len(rest):
                continue
            x2 = w2[len(rest)]
            if x2 not in members:
                continue
            c3 = w2[len(rest) + 1 :]
            lead = inverse(c3)
            if not w3.startswith(lead) or len(w3) == len(lead):
                continue
            x3 = w3[len(lead)]
            if x3 not in members or w3[len(lead) + 1 :] != c1:
                continue
            signs = sum(1 if x.islower() else -1 for x in (x1, x2, x3))
            if abs(signs) == 1:
                return (c1, c2, c3, x1, x2, x3)
    return None


def verify_letter_qm(phi: LetterQM, g, h) -> LetterQMCheck:
    """Check one pair against the letter-map definition."""
    w1 = phi(g)
    w2 = phi(h)
    w3 = inverse(phi(phi.carrier.multiply(g, h)))
    for w in (w1, w2, w3):
        as_alternating(w)
    if reduce_word(w1 + w2 + w3) == "":
        return LetterQMCheck("product")
    witness = _one_letter_witness(w1, w2, w3)
    if witness is not None:
        return LetterQMCheck("one-letter", witness)
    return LetterQMCheck("violation", (w1, w2, w3))


@dataclass(frozen=True, slots=True)
class WellBehavedCheck:
    kind: str  # 'thin', 'degenerate' or 'violation'
    triple: Triple


def verify_well_behaved(psi: LetterQM, g, h) -> WellBehavedCheck:
    """Classify the image triple of one pair."""
    t = (psi(g), psi(h), inverse(psi(psi.carrier.multiply(g, h))))
    if is_degenerate(t):
        return WellBehavedCheck("degenerate", t)
    if classify(t).is_thin():
        return WellBehavedCheck("thin", t)
    return WellBehavedCheck("violation", t)


def tilde_of(phi: LetterQM) -> LetterQM:
    """The associated well-behaved letter map."""
    return LetterQM(
        phi.carrier,
        lambda g: tilde(phi.evaluate(g)),
        name=f"tilde({phi.name})",
        structural_powers=lambda g: False,
    )


def gamma_of(phi: LetterQM, depth: int) -> LetterQM:
    """Compose a letter map with the depth-n alternation of the two
    collapsing maps."""
    return LetterQM(
        phi.carrier,
        lambda g: gamma(depth, phi.evaluate(g)),
        name=f"gamma{depth}({phi.name})",
        structural_powers=lambda g: False,
    )
