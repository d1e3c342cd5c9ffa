from random import Random

import pytest

from sclgap.blocks import (
    a_decompose,
    alpha,
    alpha_bar,
    b_decompose,
    beta,
    beta_bar,
    power_split,
    power_split_beta,
)
from sclgap.errors import BadShape
from sclgap.words import cyc_class, inverse, is_alternating, reduce_word, swap_generators

PAPER_W = "baBabaBAbAbabA"


def _random_alt(rng, n, first_gen=None):
    if n == 0:
        return ""
    gen = first_gen or rng.choice("ab")
    other = "b" if gen == "a" else "a"
    return "".join(
        (gen if i % 2 == 0 else other).upper() if rng.random() < 0.5
        else (gen if i % 2 == 0 else other)
        for i in range(n)
    )


def test_a_decomposition_worked_example():
    dec = a_decompose(PAPER_W)
    assert dec.leading == "b"
    assert dec.blocks == ("aBaba", "AbA", "a", "A")
    assert dec.separators == ("B", "b", "b")
    assert dec.trailing == ""
    assert dec.signs() == (1, -1, 1, -1)
    assert dec.reassemble() == PAPER_W


def test_decomposition_of_single_letters():
    assert a_decompose("a").blocks == ("a",)
    assert a_decompose("b").leading == "b"
    assert a_decompose("").blocks == ()
    assert b_decompose("baBAbabA").blocks == ("b", "B", "bab")


def test_decomposition_reassembles_and_alternates_signs():
    rng = Random(11)
    for _ in range(500):
        w = _random_alt(rng, rng.randint(0, 20))
        dec = a_decompose(w)
        assert dec.reassemble() == w
        signs = dec.signs()
        assert all(signs[i] != signs[i + 1] for i in range(len(signs) - 1))
        for block in dec.blocks:
            assert block[0] in "aA" and block[-1] in "aA"
            assert ("A" not in block) if block[0] == "a" else ("a" not in block)


def test_alpha_beta_worked_examples():
    assert alpha(PAPER_W) == "baBAbabA"
    assert alpha(alpha(PAPER_W)) == alpha(PAPER_W)
    assert beta("baBAbabA") == "baBAbA"
    assert alpha("baBAbA") == "baBA"
    assert alpha("baBA") == "baBA" and beta("baBA") == "baBA"


def test_alpha_respects_inversion():
    rng = Random(13)
    for _ in range(500):
        w = _random_alt(rng, rng.randint(0, 16))
        assert alpha(inverse(w)) == inverse(alpha(w))
        assert beta(inverse(w)) == inverse(beta(w))


def test_alpha_beta_swap_conjugation():
    rng = Random(17)
    for _ in range(500):
        w = _random_alt(rng, rng.randint(0, 16))
        assert swap_generators(alpha(w)) == beta(swap_generators(w))
        assert swap_generators(beta(w)) == alpha(swap_generators(w))


def _alternating_words(maxlen):
    words = [""]
    frontier = [""]
    for _ in range(maxlen):
        nxt = []
        for w in frontier:
            gens = ("bB" if w[-1] in "aA" else "aA") if w else "aAbB"
            nxt.extend(w + ch for ch in gens)
        words.extend(nxt)
        frontier = nxt
    return words


def test_alpha_idempotent_and_monotone_exhaustive():
    for w in _alternating_words(9):
        aw = alpha(w)
        assert is_alternating(aw)
        assert alpha(aw) == aw
        assert len(aw) <= len(w)
        assert (len(aw) == len(w)) == (aw == w)


def test_splitting_identity_randomized():
    # alpha may be computed piecewise around any a-letter.
    rng = Random(19)
    checked = 0
    while checked < 10_000:
        w = _random_alt(rng, rng.randint(1, 18))
        positions = [i for i, ch in enumerate(w) if ch in "aA"]
        if not positions:
            continue
        i = rng.choice(positions)
        x = w[i]
        lhs = reduce_word(alpha(w[: i + 1]) + inverse(x) + alpha(w[i:]))
        assert lhs == alpha(w)
        checked += 1


def test_alpha_bar_worked_examples():
    assert alpha_bar(cyc_class("aBAbABaBab")) == cyc_class("aBAB")
    assert alpha_bar(cyc_class("abaBab")) == cyc_class("")
    assert alpha_bar(cyc_class("")) == cyc_class("")


def test_beta_bar_derived_example():
    # alpha_bar fixes this class; beta_bar then lands on [bABA].
    cls = cyc_class("abABaBAb")
    assert alpha_bar(cls) == cls
    assert beta_bar(cls) == cyc_class("bABA")


def _alpha_bar_oracle(cls):
    """Evaluate the class map from any admissible rotation; all choices
    must agree."""
    w = cls.rep
    results = set()
    for i in range(len(w)):
        r = w[i:] + w[:i]
        if r[0] not in "aA":
            continue
        x = r[0]
        results.add(cyc_class(reduce_word(alpha(r + x) + inverse(x))))
    return results


def test_alpha_bar_well_defined_over_rotations():
    rng = Random(23)
    for _ in range(300):
        w = _random_alt(rng, 2 * rng.randint(1, 8))
        cls = cyc_class(w)
        results = _alpha_bar_oracle(cls)
        assert results == {alpha_bar(cls)}


def test_alpha_bar_monotone_and_preserves_commutator_nontriviality():
    rng = Random(29)
    for _ in range(300):
        w = _random_alt(rng, 2 * rng.randint(1, 8))
        cls = cyc_class(w)
        img = alpha_bar(cls)
        assert len(img) <= len(cls)
        assert (len(img) == len(cls)) == (img == cls)
        if cls.in_commutator_subgroup() and not cls.is_trivial():
            assert not img.is_trivial()
            assert not beta_bar(cls).is_trivial()


def test_power_split_commutator_example():
    d1, wp, d2 = power_split("", "abAB", "")
    for n in range(1, 7):
        assert alpha("abAB" * n) == d1 + wp * (n - 1) + d2
    assert cyc_class(wp) == alpha_bar(cyc_class("abAB"))


def test_power_split_single_sign_case():
    # No negative a-letter: the collapsed image does not depend on n.
    d1, wp, d2 = power_split("", "ab", "")
    assert wp == ""
    for n in range(1, 7):
        assert alpha("ab" * n) == d1 + d2


def _random_alt_ending(rng, maxlen, last_gen):
    n = rng.randint(0, maxlen)
    if n == 0:
        return ""
    first = last_gen if n % 2 == 1 else ("b" if last_gen == "a" else "a")
    return _random_alt(rng, n, first)


def test_power_split_randomized():
    rng = Random(31)
    other = {"a": "b", "b": "a"}
    for _ in range(400):
        w = _random_alt(rng, 2 * rng.randint(1, 6))
        c1 = _random_alt_ending(rng, 5, other[w[0].lower()])
        c2 = _random_alt(rng, rng.randint(0, 5), other[w[-1].lower()])
        d1, wp, d2 = power_split(c1, w, c2)
        for n in range(1, 7):
            assert alpha(c1 + w * n + c2) == d1 + wp * (n - 1) + d2
        if wp:
            assert cyc_class(wp) == alpha_bar(cyc_class(w))
        b1, bw, b2 = power_split_beta(
            swap_generators(c1), swap_generators(w), swap_generators(c2)
        )
        assert (b1, bw, b2) == tuple(map(swap_generators, (d1, wp, d2)))


def test_power_split_nonempty_for_commutator_words():
    rng = Random(37)
    found = 0
    while found < 100:
        w = _random_alt(rng, 2 * rng.randint(2, 7))
        from sclgap.words import in_commutator_subgroup

        if not in_commutator_subgroup(w):
            continue
        _, wp, _ = power_split("", w, "")
        assert wp != ""
        found += 1


def test_power_split_rejects_bad_shapes():
    with pytest.raises(BadShape):
        power_split("", "aba", "")  # odd length
    with pytest.raises(BadShape):
        power_split("", "", "")
    with pytest.raises(BadShape):
        power_split("a", "ab", "")  # junction does not alternate
