"""The compiled kernels and the pure fallback must agree exactly."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sclgap import _kernels, _pure
from sclgap.words import reduce_word

pytestmark = pytest.mark.skipif(
    not _kernels.COMPILED, reason="compiled extension not built; nothing to compare"
)

raw_words = st.text(alphabet="aAbB", max_size=50)


def _alternating(w):
    w = reduce_word(w)
    out = []
    for ch in w:
        if not out or out[-1].lower() != ch.lower():
            out.append(ch)
    return "".join(out)


@given(raw_words)
def test_reduce_agrees(s):
    assert _kernels.reduce_word(s) == _pure.reduce_word(s)


@given(raw_words)
def test_eta0_agrees(s):
    r = _pure.reduce_word(s)
    assert _kernels.eta0(r) == _pure.eta0(r)


@given(raw_words)
def test_collapse_maps_agree(s):
    w = _alternating(s)
    assert _kernels.alpha_word(w) == _pure.alpha_word(w)
    assert _kernels.beta_word(w) == _pure.beta_word(w)


def test_exhaustive_defect_agrees_small():
    for maxlen in (1, 2, 3, 4):
        assert _kernels.eta0_exhaustive_defect(maxlen) == _pure.eta0_exhaustive_defect(maxlen)
