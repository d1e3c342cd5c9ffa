import json
from fractions import Fraction
from random import Random

import pytest

from sclgap.counting import LetterHom, sampled_defect
from sclgap.engine import (
    GapCertificate,
    NoCertificate,
    certificate_for,
    coboundary_value,
    f2_scl_bound,
    parse_functional,
    phi_bar_eval,
    psi_eval,
    stabilize,
)
from sclgap.errors import PowerIncompatible, TrivialInput
from sclgap.lettermaps import F2, LetterQM, f2_letter_qm
from sclgap.words import INVERSE, cyc_class, inverse, reduce_word

HALF = Fraction(1, 2)


def _random_word(rng, maxlen):
    out = []
    for _ in range(rng.randint(0, maxlen)):
        out.append(rng.choice([c for c in "aAbB" if not out or c != INVERSE[out[-1]]]))
    return "".join(out)


def test_stabilize_fixed_commutator():
    out = stabilize(cyc_class("abAB"))
    assert out.branch == "commutator-fixed"
    assert out.depth == 0
    assert out.k == 1
    out3 = stabilize(cyc_class("abAB" * 3))
    assert out3.branch == "commutator-fixed" and out3.k == 3
    outneg = stabilize(cyc_class("baBA"))
    assert outneg.k == -1


def test_stabilize_exits_commutator_example():
    out = stabilize(cyc_class("abABaBAb"))
    assert out.branch == "exits-commutator"
    assert out.depth == 2
    assert out.terminal == cyc_class("bABA")
    assert out.hom == LetterHom("A", "b")
    assert out.hom(out.terminal.rep) == 2


def test_stabilize_rejects_trivial_class():
    with pytest.raises(TrivialInput):
        stabilize(cyc_class(""))


def test_headline_certificate():
    cert = f2_scl_bound("abAB")
    assert isinstance(cert, GapCertificate)
    assert cert.psi_bar == 2
    assert cert.phi_bar == 1
    assert cert.scl_lower_bound == HALF
    assert cert.power_evidence == "structural"
    assert not cert.beyond_minimum


def test_three_quarters_word_certifies_one_half():
    cert = f2_scl_bound("abABaBBBAbbb")
    assert isinstance(cert, GapCertificate)
    assert cert.scl_lower_bound == HALF


def test_pure_powers_get_no_certificate():
    assert isinstance(f2_scl_bound("aaaaa"), NoCertificate)
    assert isinstance(f2_scl_bound(""), NoCertificate)
    assert isinstance(f2_scl_bound("abA"), NoCertificate)


def test_certificate_for_odd_image():
    phi = f2_letter_qm()
    assert isinstance(certificate_for(phi, "aba"), NoCertificate)


def test_psi_eval_examples():
    cert = f2_scl_bound("abAB")
    phi = f2_letter_qm()
    assert psi_eval(cert, phi, "abAB") == 1
    assert psi_eval(cert, phi, "") == 1
    rng = Random(3)
    for _ in range(300):
        g = _random_word(rng, 20)
        from sclgap.blocks import gamma
        from sclgap.lettermaps import tilde

        if gamma(cert.outcome.depth, tilde(phi(g))):
            assert psi_eval(cert, phi, inverse(g)) == -psi_eval(cert, phi, g)


def test_psi_law_and_coboundary():
    rng = Random(5)
    phi = f2_letter_qm()
    for word in ("abAB", "abABaBAb", "aabbABAB"):
        cert = f2_scl_bound(word)
        for _ in range(400):
            g = _random_word(rng, 25)
            h = _random_word(rng, 25)
            s = (
                psi_eval(cert, phi, g)
                + psi_eval(cert, phi, h)
                - psi_eval(cert, phi, reduce_word(g + h))
            )
            assert s in (-1, 1)
            assert coboundary_value(cert, phi, g, h) == (s + 1) // 2
    assert coboundary_value(f2_scl_bound("abAB"), phi, "", "") == 1


def test_psi_sampled_defect_is_exactly_one():
    rng = Random(7)
    cert = f2_scl_bound("abAB")
    phi = f2_letter_qm()
    pairs = [(_random_word(rng, 15), _random_word(rng, 15)) for _ in range(500)]
    assert sampled_defect(lambda g: psi_eval(cert, phi, g), pairs, F2.multiply) == 1


def test_phi_bar_eval_examples():
    cert = f2_scl_bound("abAB")
    phi = f2_letter_qm()
    assert phi_bar_eval(cert, phi, "abAB") == 1
    assert phi_bar_eval(cert, phi, "abAB" * 2) == 2
    assert phi_bar_eval(cert, phi, "") == 0


def test_phi_bar_is_conjugation_invariant():
    rng = Random(11)
    cert = f2_scl_bound("abAB")
    phi = f2_letter_qm()
    for _ in range(30):
        x = _random_word(rng, 8)
        conj = reduce_word(x + "abAB" + inverse(x))
        assert phi_bar_eval(cert, phi, conj) == 1


def test_phi_bar_defect_at_most_one():
    rng = Random(13)
    cert = f2_scl_bound("abAB")
    phi = f2_letter_qm()
    tol = Fraction(1, 10**9)
    for _ in range(40):
        g = _random_word(rng, 10)
        h = _random_word(rng, 10)
        d = abs(
            phi_bar_eval(cert, phi, g)
            + phi_bar_eval(cert, phi, h)
            - phi_bar_eval(cert, phi, reduce_word(g + h))
        )
        assert d <= 1 + tol


def test_power_incompatible_maps_are_rejected():
    bad = LetterQM(F2, lambda g: "ab" if g == "ab" else "", name="bad")
    with pytest.raises(PowerIncompatible):
        certificate_for(bad, "ab")


def test_checked_power_evidence_for_non_structural_elements():
    phi = f2_letter_qm()
    # b-start a-end word: power compatible but not flagged structural.
    cert = certificate_for(phi, "baBA")
    assert isinstance(cert, GapCertificate)
    assert cert.power_evidence.startswith("checked-up-to-")


def test_certificate_serialization_round_trip():
    cert = f2_scl_bound("abABaBAb")
    record = json.loads(cert.to_json())
    assert record["branch"] == "exits-commutator"
    assert record["psi_bar"] == [2, 1]
    assert record["scl_lower_bound"] == [1, 2]
    assert parse_functional(record["functional"]) == LetterHom("A", "b")
    assert parse_functional("eta0") == "eta0"
    assert Fraction(*record["phi_bar"]) == cert.phi_bar


def test_depth_is_bounded_by_image_length():
    rng = Random(17)
    phi = f2_letter_qm()
    for _ in range(100):
        w = _random_word(rng, 14)
        cert = f2_scl_bound(w)
        if isinstance(cert, NoCertificate):
            continue
        g0 = cert.source["conjugated_to"]
        assert cert.outcome.depth <= len(phi(g0))
