"""Amalgamated free products driven by factor oracles.

Elements are alternating sequences of factor syllables, none inside the
edge subgroup (a lone syllable may lie in it).  Each factor supplies a
coset sign coming from an invariant order on its cosets modulo the edge
subgroup; reading one sign letter per syllable produces the letter map
whose certificate machinery yields the 1/2 bound for every element not
conjugating into a factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .engine import GapCertificate, NoCertificate, certificate_for
from .errors import OracleInconsistency
from .lettermaps import GroupOracle, LetterQM


@dataclass(frozen=True)
class FactorOracle:
    """One side of an amalgam: its group, membership in the image of
    the edge subgroup, and the invariant coset sign (zero exactly on
    the edge subgroup)."""

    group: GroupOracle
    in_edge: Callable[[Any], bool]
    coset_sign: Callable[[Any], int]
    name: str = "factor"


@dataclass(frozen=True, slots=True)
class AmalgamElement:
    syllables: tuple[tuple[str, Any], ...]

    def syllable_count(self) -> int:
        return len(self.syllables)


class Amalgam(GroupOracle):
    """A free product of two factor oracles amalgamated over their edge
    subgroups.  ``transfer(tag, x)`` converts an edge-subgroup element
    of the tagged side into the other side's representation; the
    default assumes a shared representation."""

    def __init__(
        self,
        a: FactorOracle,
        b: FactorOracle,
        transfer: Callable[[str, Any], Any] | None = None,
        name: str = "amalgam",
    ):
        self.sides = {"A": a, "B": b}
        self.transfer = transfer if transfer else lambda tag, x: x
        self.name = name

    # -- group oracle interface -------------------------------------

    def identity(self) -> AmalgamElement:
        return AmalgamElement(())

    def element(self, syllables) -> AmalgamElement:
        stack: list[tuple[str, Any]] = []
        for tag, x in syllables:
            self._push(stack, tag, x)
        return AmalgamElement(tuple(stack))

    def multiply(self, g: AmalgamElement, h: AmalgamElement) -> AmalgamElement:
        stack = list(g.syllables)
        for tag, x in h.syllables:
            self._push(stack, tag, x)
        return AmalgamElement(tuple(stack))

    def invert(self, g: AmalgamElement) -> AmalgamElement:
        return AmalgamElement(
            tuple((tag, self.sides[tag].group.invert(x)) for tag, x in reversed(g.syllables))
        )

    def equal(self, g: AmalgamElement, h: AmalgamElement) -> bool:
        return not self.multiply(g, self.invert(h)).syllables

    # -- normalization ----------------------------------------------

    def _push(self, stack: list[tuple[str, Any]], tag: str, x) -> None:
        side = self.sides[tag]
        while True:
            if side.group.equal(x, side.group.identity()):
                return
            if stack and stack[-1][0] == tag:
                _, prev = stack.pop()
                x = side.group.multiply(prev, x)
                continue
            if stack:
                top_tag, top = stack[-1]
                if self.sides[top_tag].in_edge(top):
                    # A lone edge syllable below: absorb it into ours.
                    stack.pop()
                    x = side.group.multiply(self.transfer(top_tag, top), x)
                    continue
                if side.in_edge(x):
                    other = self.sides[top_tag]
                    x = other.group.multiply(top, self.transfer(tag, x))
                    stack.pop()
                    tag, side = top_tag, other
                    continue
            break
        stack.append((tag, x))

    def normal_form(self, g: AmalgamElement):
        """Syllable normal form: ``("C", x)`` when g lies in the edge
        subgroup (x in the A-side representation when possible), else
        the alternating syllable tuple with per-syllable consistency
        checks against the oracles."""
        sylls = g.syllables
        if not sylls:
            return ("C", None)
        if len(sylls) == 1 and self.sides[sylls[0][0]].in_edge(sylls[0][1]):
            return ("C", sylls[0])
        for tag, x in sylls:
            side = self.sides[tag]
            if side.in_edge(x):
                raise OracleInconsistency(f"normalized {side.name} syllable inside edge subgroup")
            if side.coset_sign(x) == 0:
                raise OracleInconsistency(f"sign 0 on {side.name} element outside edge subgroup")
        return sylls

    # -- the sign letter map ----------------------------------------

    def phi(self, g: AmalgamElement) -> str:
        """One letter per syllable: the A-side sign choosing between
        the first generator and its inverse, the B-side sign the
        second."""
        nf = self.normal_form(g)
        if isinstance(nf, tuple) and nf and nf[0] == "C":
            return ""
        out = []
        for tag, x in nf:
            sign = self.sides[tag].coset_sign(x)
            if sign not in (-1, 1):
                raise OracleInconsistency(f"coset sign {sign!r} outside -1,0,+1")
            letter = "a" if tag == "A" else "b"
            out.append(letter if sign > 0 else letter.upper())
        return "".join(out)

    def _strictly_alternating(self, g: AmalgamElement) -> bool:
        sylls = g.syllables
        if not sylls or len(sylls) % 2:
            return False
        if any(self.sides[tag].in_edge(x) for tag, x in sylls):
            return False
        return all(s[0] == ("A" if i % 2 == 0 else "B") for i, s in enumerate(sylls))

    def letter_qm(self) -> LetterQM:
        return LetterQM(
            self,
            self.phi,
            name=f"{self.name}-sign",
            structural_powers=self._strictly_alternating,
        )

    # -- conjugation to the alternating shape ------------------------

    def alternating_conjugate(self, g: AmalgamElement):
        """Conjugator x and g' = x g x^-1 whose normal form strictly
        alternates, starting with an A-syllable; None when g conjugates
        into a factor."""
        conj = self.identity()
        cur = g
        while cur.syllable_count() >= 2 and cur.syllables[0][0] == cur.syllables[-1][0]:
            d = AmalgamElement((cur.syllables[0],))
            d_inv = self.invert(d)
            cur = self.multiply(self.multiply(d_inv, cur), d)
            conj = self.multiply(d_inv, conj)
        if cur.syllable_count() <= 1:
            return None
        if cur.syllables[0][0] == "B":
            d = AmalgamElement((cur.syllables[0],))
            d_inv = self.invert(d)
            cur = self.multiply(self.multiply(d_inv, cur), d)
            conj = self.multiply(d_inv, conj)
        return conj, cur

    def scl_bound(self, g: AmalgamElement) -> GapCertificate | NoCertificate:
        """End-to-end bound; no certificate exactly when g conjugates
        into one of the factors."""
        res = self.alternating_conjugate(g)
        if res is None:
            return NoCertificate("conjugates into a factor")
        conj, gp = res
        cert = certificate_for(self.letter_qm(), gp)
        if isinstance(cert, NoCertificate):
            return cert
        source = dict(cert.source)
        source.update({"group": self.name, "conjugated": True})
        return GapCertificate(
            source=source,
            outcome=cert.outcome,
            sign=cert.sign,
            psi_bar=cert.psi_bar,
            phi_bar=cert.phi_bar,
            scl_lower_bound=cert.scl_lower_bound,
            power_evidence=cert.power_evidence,
        )


def syllable_normal_form(am: Amalgam, g: AmalgamElement):
    return am.normal_form(g)


def phi_amalgam(am: Amalgam, g: AmalgamElement) -> str:
    return am.phi(g)


def alternating_conjugate(am: Amalgam, g: AmalgamElement):
    return am.alternating_conjugate(g)


def amalgam_scl_bound(am: Amalgam, g: AmalgamElement):
    return am.scl_bound(g)


# ---------------------------------------------------------------------------
# The free group as the free product of two integer factors.


class IntGroup(GroupOracle):
    name = "Z"

    def identity(self) -> int:
        return 0

    def multiply(self, g: int, h: int) -> int:
        return g + h

    def invert(self, g: int) -> int:
        return -g

    def equal(self, g: int, h: int) -> bool:
        return g == h


def integer_factor(name: str) -> FactorOracle:
    return FactorOracle(
        IntGroup(),
        in_edge=lambda n: n == 0,
        coset_sign=lambda n: (n > 0) - (n < 0),
        name=name,
    )


def free_product_of_integers() -> Amalgam:
    """The rank-2 free group presented as Z * Z over the trivial edge
    subgroup."""
    return Amalgam(integer_factor("Za"), integer_factor("Zb"), name="Z*Z")


def f2_word_to_amalgam(am: Amalgam, word: str) -> AmalgamElement:
    """Read a reduced word over a A b B into syllables of Z * Z."""
    sylls: list[tuple[str, int]] = []
    for ch in word:
        tag = "A" if ch.lower() == "a" else "B"
        step = 1 if ch.islower() else -1
        sylls.append((tag, step))
    return am.element(sylls)
