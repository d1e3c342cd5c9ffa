"""Counting quasimorphisms, letter-sum homomorphisms and homogenization.

``eta0`` counts ab-subwords minus ba-subwords (each minus its inverse
occurrences); it has defect 1 and takes value 2 on the commutator of the
generators.  Letter homomorphisms count signed generator occurrences.
Both induce well-defined values on conjugacy classes of even alternating
words, computed cyclically and exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import _kernels
from ._kernels import reduce_word
from .errors import NoStabilization
from .words import EvenAltClass, exp_sum

_PAIR_SCORE = {"ab": 1, "AB": 1, "ba": -1, "BA": -1}


def nu(pattern: str, g: str) -> int:
    """Number of (possibly overlapping) occurrences of a nonempty
    reduced word as a subword of the reduced form of g."""
    if not pattern:
        raise ValueError("pattern must be nonempty")
    g = reduce_word(g)
    count = 0
    start = 0
    while True:
        i = g.find(pattern, start)
        if i < 0:
            return count
        count += 1
        start = i + 1


def eta0(g: str) -> int:
    """eta_ab - eta_ba evaluated on g, where eta_w = nu_w - nu_{w^-1}."""
    return _kernels.eta0(reduce_word(g))


@dataclass(frozen=True, slots=True)
class LetterHom:
    """Homomorphism eta_x + eta_y for one a-letter and one b-letter."""

    xgen: str  # 'a' or 'A'
    ygen: str  # 'b' or 'B'

    def __call__(self, g: str) -> int:
        xs = exp_sum(g, "a")
        ys = exp_sum(g, "b")
        return (xs if self.xgen == "a" else -xs) + (ys if self.ygen == "b" else -ys)

    def label(self) -> str:
        return f"hom({self.xgen},{self.ygen})"


LETTER_HOMS = (
    LetterHom("a", "b"),
    LetterHom("a", "B"),
    LetterHom("A", "b"),
    LetterHom("A", "B"),
)


def eta_hom(h: LetterHom, g: str) -> int:
    return h(g)


def cyclic_eta0(cls: EvenAltClass) -> int:
    """Homogeneous eta0 on a class: score every cyclic length-2 window,
    wraparound pair included.  Equals lim eta0(w^n)/n."""
    w = cls.rep
    if not w:
        return 0
    total = _kernels.eta0(w)
    total += _PAIR_SCORE.get(w[-1] + w[0], 0)
    return total


def cyclic_eval(functional, cls: EvenAltClass) -> int:
    """Exact homogeneous value of eta0 or a LetterHom on a class."""
    if functional == "eta0":
        return cyclic_eta0(cls)
    if isinstance(functional, LetterHom):
        return functional(cls.rep)
    raise TypeError(f"unknown functional {functional!r}")


def homogenize(f: Callable, g, multiply: Callable, horizon: int = 16) -> Fraction:
    """Slope of n -> f(g^n) once its first differences become constant.

    The tail of constant differences must be at least three steps long
    and reach the horizon; raises NoStabilization otherwise, in which
    case the caller should retry with a larger horizon.
    """
    if horizon < 3:
        raise ValueError("horizon must be at least 3")
    values = []
    power = g
    for _ in range(horizon):
        values.append(f(power))
        power = multiply(power, g)
    diffs = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    tail = 1
    while tail < len(diffs) and diffs[-tail - 1] == diffs[-1]:
        tail += 1
    if tail < 3:
        raise NoStabilization(f"first differences {diffs[-4:]} not constant at horizon {horizon}")
    return Fraction(diffs[-1])


def sampled_defect(f: Callable, pairs, multiply: Callable) -> Fraction:
    """Max |f(g)+f(h)-f(gh)| over the sample; a lower bound for the
    defect of f."""
    best = Fraction(0)
    for g, h in pairs:
        d = abs(Fraction(f(g)) + Fraction(f(h)) - Fraction(f(multiply(g, h))))
        if d > best:
            best = d
    return best


def eta0_exhaustive_defect(maxlen: int) -> int:
    """Exact defect of eta0 restricted to all pairs of reduced words of
    length at most maxlen."""
    return _kernels.eta0_exhaustive_defect(maxlen)
