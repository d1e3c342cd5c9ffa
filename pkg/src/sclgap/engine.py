"""Certificate engine: iterate the collapsing maps on a conjugacy class,
detect the terminal branch, and assemble the quasimorphism whose
homogenization certifies a stable-commutator-length bound of 1/2.

The pipeline: a letter map sends the target element to an even
alternating word; alternately applying the two collapse maps to its
conjugacy class either stays inside the commutator subgroup and
terminates on a class fixed by both maps (a power of the basic
commutator), or exits the commutator subgroup.  Either way a base
functional with homogeneous value at least 2 exists, and pulling it
back through the depth-N collapse of the boundary-adjusted letter map
yields an integer map psi with psi(g)+psi(h)-psi(gh) always +-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .blocks import alpha_bar, beta_bar, gamma
from .counting import LETTER_HOMS, LetterHom, cyclic_eval, eta0, homogenize
from .errors import NoStabilization, PowerIncompatible, SclGapError, TrivialInput
from .lettermaps import LetterQM, f2_letter_qm, tilde
from .words import (
    EvenAltClass,
    cyc_class,
    cyclic_reduce_word,
    in_commutator_subgroup,
    reduce_word,
)


@dataclass(frozen=True, slots=True)
class StabilizationOutcome:
    """Terminal data of the collapse iteration.

    ``branch`` is ``commutator-fixed`` (terminal class is a nonzero
    power of the basic commutator, recorded in ``k``) or
    ``exits-commutator`` (terminal class has nonzero letter sums and
    ``hom`` evaluates to at least 2 on it).
    """

    branch: str
    depth: int
    terminal: EvenAltClass
    k: int | None = None
    hom: LetterHom | None = None

    def functional(self):
        return "eta0" if self.branch == "commutator-fixed" else self.hom


def _commutator_power(cls: EvenAltClass) -> int:
    n = len(cls.rep)
    if n % 4:
        raise SclGapError(f"fixed class {cls} has length not divisible by 4")
    k = n // 4
    if cls == cyc_class("abAB" * k):
        return k
    if cls == cyc_class("baBA" * k):
        return -k
    raise SclGapError(f"class {cls} fixed by both maps is not a commutator power")


def stabilize(cls: EvenAltClass) -> StabilizationOutcome:
    """Alternately apply the two collapse maps until the class leaves
    the commutator subgroup or is fixed by both maps."""
    if cls.is_trivial():
        raise TrivialInput("cannot stabilize the trivial class")
    depth = 0
    cur = cls
    while depth <= len(cls.rep):
        if not cur.in_commutator_subgroup():
            for hom in LETTER_HOMS:
                if hom(cur.rep) >= 2:
                    return StabilizationOutcome("exits-commutator", depth, cur, hom=hom)
            raise SclGapError(f"no letter homomorphism reaches 2 on {cur}")
        a_img = alpha_bar(cur)
        b_img = beta_bar(cur)
        if a_img == cur and b_img == cur:
            return StabilizationOutcome("commutator-fixed", depth, cur, k=_commutator_power(cur))
        cur = a_img if depth % 2 == 0 else b_img
        depth += 1
    raise SclGapError("collapse iteration failed to terminate within the length bound")


@dataclass(frozen=True, slots=True)
class NoCertificate:
    reason: str


@dataclass(frozen=True)
class GapCertificate:
    """Complete recipe for the certifying quasimorphism.

    psi evaluates the branch functional on the depth-N collapse of the
    boundary-adjusted letter-map image (1 on the empty word), times the
    sign.  phi = (psi+1)/2, and the homogenization of phi takes value
    phi_bar on the source element with defect at most 1, giving the
    stable-commutator-length bound by duality.
    """

    source: dict
    outcome: StabilizationOutcome
    sign: int  # +1 or -1, making the homogeneous value positive
    psi_bar: Fraction
    phi_bar: Fraction
    scl_lower_bound: Fraction
    power_evidence: str

    def __post_init__(self):
        if self.psi_bar < 2:
            raise SclGapError(f"homogeneous value {self.psi_bar} below 2")
        if self.phi_bar != self.psi_bar / 2 or self.scl_lower_bound != self.phi_bar / 2:
            raise SclGapError("certificate value chain is inconsistent")

    @property
    def beyond_minimum(self) -> bool:
        """True when the bound improves on 1/2; an engine extra, not
        part of the guaranteed statement."""
        return self.scl_lower_bound > Fraction(1, 2)

    def functional_label(self) -> str:
        f = self.outcome.functional()
        return f if isinstance(f, str) else f.label()

    def to_record(self) -> dict:
        return {
            "source": self.source,
            "branch": self.outcome.branch,
            "depth": self.outcome.depth,
            "terminal_class": self.outcome.terminal.rep,
            "functional": self.functional_label(),
            "sign": self.sign,
            "psi_bar": [self.psi_bar.numerator, self.psi_bar.denominator],
            "phi_bar": [self.phi_bar.numerator, self.phi_bar.denominator],
            "scl_lower_bound": [
                self.scl_lower_bound.numerator,
                self.scl_lower_bound.denominator,
            ],
            "power_evidence": self.power_evidence,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2, sort_keys=True)


def parse_functional(label: str):
    if label == "eta0":
        return "eta0"
    if label.startswith("hom(") and label.endswith(")"):
        x, y = label[4:-1].split(",")
        return LetterHom(x, y)
    raise ValueError(f"unknown functional label {label!r}")


DEFAULT_POWER_HORIZON = 8


def certificate_for(
    phi: LetterQM, g0, power_horizon: int = DEFAULT_POWER_HORIZON
) -> GapCertificate | NoCertificate:
    """Run the whole construction for one element under one letter map."""
    image = phi(g0)
    if not image:
        return NoCertificate("letter-map image is trivial")
    if len(image) % 2:
        return NoCertificate("letter-map image has odd length")
    if phi.structural_powers(g0):
        evidence = "structural"
    else:
        acc = g0
        for n in range(2, power_horizon + 1):
            acc = phi.carrier.multiply(acc, g0)
            if phi(acc) != image * n:
                raise PowerIncompatible(f"image of power {n} is not the image power")
        evidence = f"checked-up-to-{power_horizon}"
    outcome = stabilize(cyc_class(image))
    value = cyclic_eval(outcome.functional(), outcome.terminal)
    sign = -1 if value < 0 else 1
    psi_bar = Fraction(abs(value))
    return GapCertificate(
        source={"letter_map": phi.name, "g0": _describe(g0)},
        outcome=outcome,
        sign=sign,
        psi_bar=psi_bar,
        phi_bar=psi_bar / 2,
        scl_lower_bound=psi_bar / 4,
        power_evidence=evidence,
    )


def _describe(g) -> str:
    return g if isinstance(g, str) else str(g)


def psi_eval(cert: GapCertificate, phi: LetterQM, g) -> int:
    """The integer quasimorphism of the certificate at one element."""
    word = gamma(cert.outcome.depth, tilde(phi(g)))
    if word:
        value = cyclic_eval_word(cert.outcome.functional(), word)
    else:
        value = 1
    return cert.sign * value


def cyclic_eval_word(functional, word: str) -> int:
    if functional == "eta0":
        return eta0(word)
    return functional(word)


def phi_eval(cert: GapCertificate, phi: LetterQM, g) -> Fraction:
    return Fraction(psi_eval(cert, phi, g) + 1, 2)


def coboundary_value(cert: GapCertificate, phi: LetterQM, g, h) -> int:
    """delta^1 phi on a pair; always 0 or 1, the hypothesis feeding the
    circle-action correspondence."""
    s = (
        psi_eval(cert, phi, g)
        + psi_eval(cert, phi, h)
        - psi_eval(cert, phi, phi.carrier.multiply(g, h))
    )
    if s not in (-1, 1):
        raise SclGapError(f"psi law violated: {s}")
    return (s + 1) // 2


def phi_bar_eval(cert: GapCertificate, phi: LetterQM, g) -> Fraction:
    """Homogeneous value at g via eventual linearity of psi on powers,
    halved.  Retries with doubled horizon before giving up."""
    horizon = cert.outcome.depth + 8
    for _ in range(4):
        try:
            slope = homogenize(
                lambda x: psi_eval(cert, phi, x), g, phi.carrier.multiply, horizon
            )
            return slope / 2
        except NoStabilization:
            horizon *= 2
    raise NoStabilization(f"no affine tail up to horizon {horizon}")


def f2_scl_bound(word: str) -> GapCertificate | NoCertificate:
    """Headline front end: certify scl >= 1/2 for a free-group word.

    Conjugates the input to a rotation of its cyclic reduction starting
    with an a-power and ending with a b-power, where the sign letter
    map is power-compatible by construction.  No certificate exists
    exactly when the input conjugates into a generator subgroup.
    """
    w = reduce_word(word)
    _, core = cyclic_reduce_word(w)
    if not core:
        return NoCertificate("trivial element")
    gens = {ch.lower() for ch in core}
    if len(gens) == 1:
        return NoCertificate("conjugates into a generator subgroup")
    candidates = [
        core[i:] + core[:i]
        for i in range(len(core))
        if core[i].lower() == "a" and core[i - 1].lower() == "b"
    ]
    g0 = min(candidates)
    phi = f2_letter_qm()
    cert = certificate_for(phi, g0)
    if isinstance(cert, NoCertificate):
        return cert
    record = dict(cert.source)
    record.update({"group": "f2", "word": word, "conjugated_to": g0})
    return GapCertificate(
        source=record,
        outcome=cert.outcome,
        sign=cert.sign,
        psi_bar=cert.psi_bar,
        phi_bar=cert.phi_bar,
        scl_lower_bound=cert.scl_lower_bound,
        power_evidence=cert.power_evidence,
    )
