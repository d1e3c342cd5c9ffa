"""Acceptance battery: the criteria the package must meet, runnable via
the CLI selftest and mirrored one-to-one by tests/test_acceptance.py.

Every check is exact (integer or rational equality) except where a
stated tolerance appears; scales and tolerances are fixed here, not
tunable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .amalgams import f2_word_to_amalgam, free_product_of_integers
from .blocks import alpha, alpha_bar, beta, beta_bar, power_split
from .counting import eta0_exhaustive_defect
from .engine import (
    GapCertificate,
    NoCertificate,
    coboundary_value,
    f2_scl_bound,
    phi_bar_eval,
    psi_eval,
)
from .graphs import cycle_graph, path_graph
from .lettermaps import f2_letter_qm, f2_sign_qm, verify_letter_qm
from .raags import embed_in_star_amalgam, parse_raag_word, raag, raag_certificate, star_link_amalgam
from .seriesorder import coset_sign, positivity_sign
from .triples import gen_letter_thin, is_letter_thin
from .words import INVERSE, cyc_class, in_commutator_subgroup

HALF = Fraction(1, 2)


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _all_reduced_words(maxlen: int, alphabet: str = "aAbB"):
    words = [""]
    frontier = [""]
    for _ in range(maxlen):
        frontier = [
            w + ch for w in frontier for ch in alphabet if not w or ch != INVERSE[w[-1]]
        ]
        words.extend(frontier)
    return words


def _commutator_words(maxlen: int):
    """All nontrivial reduced words with both letter sums zero."""
    out = []
    stack = [("", 0, 0)]
    while stack:
        w, sa, sb = stack.pop()
        if w and sa == 0 and sb == 0:
            out.append(w)
        if len(w) == maxlen:
            continue
        room = maxlen - len(w)
        for ch, da, db in (("a", 1, 0), ("A", -1, 0), ("b", 0, 1), ("B", 0, -1)):
            if w and ch == INVERSE[w[-1]]:
                continue
            if abs(sa + da) + abs(sb + db) <= room - 1:
                stack.append((w + ch, sa + da, sb + db))
    return out


def _random_commutator_word(rng: Random, halflen: int) -> str:
    """Random nontrivial element of the commutator subgroup."""
    from .words import reduce_word

    while True:
        letters = []
        for ch in "ab":
            n = rng.randint(1, halflen)
            letters += [ch] * n + [ch.upper()] * n
        rng.shuffle(letters)
        w = reduce_word("".join(letters))
        if w:
            return w


def _random_reduced_word(rng: Random, maxlen: int) -> str:
    n = rng.randint(0, maxlen)
    out = []
    for _ in range(n):
        choices = [c for c in "aAbB" if not out or c != INVERSE[out[-1]]]
        out.append(rng.choice(choices))
    return "".join(out)


# ---------------------------------------------------------------------------


def criterion_1() -> Result:
    """Headline bound for the basic commutator, in under a second."""
    t0 = time.perf_counter()
    cert = f2_scl_bound("abAB")
    dt = time.perf_counter() - t0
    ok = (
        isinstance(cert, GapCertificate)
        and cert.phi_bar == 1
        and cert.scl_lower_bound == HALF
        and dt < 1.0
    )
    return Result(1, "headline bound abAB", ok, f"phi_bar={cert.phi_bar}, bound={cert.scl_lower_bound}, {dt:.3f}s", dt)


def criterion_2() -> Result:
    """Certificates for every commutator-subgroup word of length <= 12."""
    t0 = time.perf_counter()
    words = _commutator_words(12)
    failures = 0
    for w in words:
        cert = f2_scl_bound(w)
        if not isinstance(cert, GapCertificate) or cert.phi_bar < 1:
            failures += 1
    dt = time.perf_counter() - t0
    ok = failures == 0 and dt < 300.0
    return Result(2, "desk-scale gap reproduction", ok, f"{len(words)} words, {failures} failures, {dt:.1f}s", dt)


def criterion_3() -> Result:
    """Collapse maps preserve letter-thin triples, 1e5 samples."""
    t0 = time.perf_counter()
    rng = Random(20250301)
    failures = 0
    for _ in range(100_000):
        t = gen_letter_thin(rng, 8)
        ta = (alpha(t[0]), alpha(t[1]), alpha(t[2]))
        tb = (beta(t[0]), beta(t[1]), beta(t[2]))
        if not is_letter_thin(ta) or not is_letter_thin(tb):
            failures += 1
    dt = time.perf_counter() - t0
    return Result(3, "thinness preservation", failures == 0, f"100000 triples, {failures} failures, {dt:.1f}s", dt)


def criterion_4() -> Result:
    """Quasimorphism laws for 20 certificates, plus the exact defect."""
    t0 = time.perf_counter()
    rng = Random(20250304)
    phi = f2_letter_qm()
    failures = 0
    for _ in range(20):
        word = _random_commutator_word(rng, 5)
        cert = f2_scl_bound(word)
        if not isinstance(cert, GapCertificate):
            failures += 1
            continue
        for _ in range(500):
            g = _random_reduced_word(rng, 40)
            h = _random_reduced_word(rng, 40)
            s = (
                psi_eval(cert, phi, g)
                + psi_eval(cert, phi, h)
                - psi_eval(cert, phi, phi.carrier.multiply(g, h))
            )
            if s not in (-1, 1):
                failures += 1
            if coboundary_value(cert, phi, g, h) not in (0, 1):
                failures += 1
    defect = eta0_exhaustive_defect(8)
    dt = time.perf_counter() - t0
    ok = failures == 0 and defect == 1
    return Result(4, "defect laws", ok, f"failures={failures}, exhaustive eta0 defect={defect}, {dt:.1f}s", dt)


def _alternating_words(maxlen: int):
    words = [""]
    frontier = [""]
    for _ in range(maxlen):
        nxt = []
        for w in frontier:
            if w:
                gens = "bB" if w[-1] in "aA" else "aA"
            else:
                gens = "aAbB"
            nxt.extend(w + ch for ch in gens)
        words.extend(nxt)
        frontier = nxt
    return words


def criterion_5() -> Result:
    """Collapse dynamics: idempotence, monotone length, fixed classes."""
    t0 = time.perf_counter()
    failures = 0
    for w in _alternating_words(12):
        aw = alpha(w)
        if alpha(aw) != aw or len(aw) > len(w) or (len(aw) == len(w)) != (aw == w):
            failures += 1
        bw = beta(w)
        if beta(bw) != bw or len(bw) > len(w) or (len(bw) == len(w)) != (bw == w):
            failures += 1
    # Joint fixed classes among commutator classes of length <= 16.
    fixed = set()
    seen = set()
    for w in _alternating_words(16):
        if not w or len(w) % 2 or not in_commutator_subgroup(w):
            continue
        cls = cyc_class(w)
        if cls in seen:
            continue
        seen.add(cls)
        if alpha_bar(cls) == cls and beta_bar(cls) == cls:
            fixed.add(cls)
    expected = {cyc_class("abAB" * k) for k in range(1, 5)}
    expected |= {cyc_class("baBA" * k) for k in range(1, 5)}
    ok = failures == 0 and fixed == expected
    dt = time.perf_counter() - t0
    return Result(5, "collapse dynamics", ok, f"failures={failures}, fixed classes={len(fixed)} (want 8), {dt:.1f}s", dt)


def _fill_alt(rng: Random, n: int, first: str) -> str:
    other = "b" if first == "a" else "a"
    out = []
    for i in range(n):
        base = first if i % 2 == 0 else other
        out.append(base if rng.random() < 0.5 else base.upper())
    return "".join(out)


def _random_alt_first(rng: Random, maxlen: int, first_gen: str) -> str:
    n = rng.randint(0, maxlen)
    return _fill_alt(rng, n, first_gen) if n else ""


def _random_alt_last(rng: Random, maxlen: int, last_gen: str) -> str:
    n = rng.randint(0, maxlen)
    if not n:
        return ""
    first = last_gen if n % 2 == 1 else ("b" if last_gen == "a" else "a")
    return _fill_alt(rng, n, first)


def criterion_6() -> Result:
    """Power-splitting identity, six powers, 1000 random triples."""
    t0 = time.perf_counter()
    rng = Random(20250306)
    failures = 0
    for _ in range(1000):
        w = _fill_alt(rng, 2 * rng.randint(1, 5), rng.choice("ab"))
        other = {"a": "b", "b": "a"}
        c1 = _random_alt_last(rng, 6, other[w[0].lower()])
        c2 = _random_alt_first(rng, 6, other[w[-1].lower()])
        d1, wp, d2 = power_split(c1, w, c2)
        for n in range(1, 7):
            if alpha(c1 + w * n + c2) != d1 + wp * (n - 1) + d2:
                failures += 1
    dt = time.perf_counter() - t0
    return Result(6, "power splitting", failures == 0, f"1000 triples x n=1..6, {failures} failures, {dt:.1f}s", dt)


def criterion_7() -> Result:
    """Amalgam letter map: free case agrees with the sign map, and the
    letter-map law never fails."""
    t0 = time.perf_counter()
    am = free_product_of_integers()
    failures = 0
    for w in _all_reduced_words(6):
        if am.phi(f2_word_to_amalgam(am, w)) != f2_sign_qm(w):
            failures += 1
    rng = Random(20250307)
    phi_free = am.letter_qm()
    for _ in range(10_000):
        g = f2_word_to_amalgam(am, _random_reduced_word(rng, 10))
        h = f2_word_to_amalgam(am, _random_reduced_word(rng, 10))
        if verify_letter_qm(phi_free, g, h).kind == "violation":
            failures += 1
    graph = path_graph("abc")
    am2 = star_link_amalgam(graph, "a")
    grp = raag(graph)
    phi_raag = am2.letter_qm()
    verts = list(graph.vertices)
    for _ in range(10_000):
        letters_g = [(rng.choice(verts), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        letters_h = [(rng.choice(verts), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        g = embed_in_star_amalgam(am2, "a", grp.element(letters_g))
        h = embed_in_star_amalgam(am2, "a", grp.element(letters_h))
        if verify_letter_qm(phi_raag, g, h).kind == "violation":
            failures += 1
    dt = time.perf_counter() - t0
    return Result(7, "amalgam consistency", failures == 0, f"{failures} failures, {dt:.1f}s", dt)


def _random_raag_letters(rng: Random, graph, maxlen: int):
    verts = list(graph.vertices)
    return [(rng.choice(verts), rng.choice((1, -1))) for _ in range(rng.randint(1, maxlen))]


def criterion_8() -> Result:
    """Order oracle soundness on the path and the 5-cycle."""
    t0 = time.perf_counter()
    failures = 0
    for graph, lam in ((path_graph("abc"), {"b"}), (cycle_graph("abcde"), {"b", "e"})):
        grp = raag(graph)
        rng = Random(20250308)
        for _ in range(10_000):
            g = grp.element(_random_raag_letters(rng, graph, 8))
            h = grp.element(_random_raag_letters(rng, graph, 5))
            conj = grp.multiply(grp.multiply(h, g), grp.invert(h))
            if positivity_sign(graph, conj.letters) != positivity_sign(graph, g.letters):
                failures += 1
        for _ in range(10_000):
            g1 = grp.element(_random_raag_letters(rng, graph, 6))
            g2 = grp.element(_random_raag_letters(rng, graph, 6))
            s1 = positivity_sign(graph, g1.letters)
            s2 = positivity_sign(graph, g2.letters)
            if s1 == 0 or s2 == 0:
                continue
            if s1 < 0:
                g1 = grp.invert(g1)
            if s2 < 0:
                g2 = grp.invert(g2)
            if positivity_sign(graph, grp.multiply(g1, g2).letters) != 1:
                failures += 1
        for _ in range(10_000):
            x1 = grp.element(_random_raag_letters(rng, graph, 6))
            x2 = grp.element(_random_raag_letters(rng, graph, 6))
            g = grp.element(_random_raag_letters(rng, graph, 6))
            before = coset_sign(graph, lam, grp.multiply(grp.invert(x1), x2).letters)
            gx1 = grp.multiply(g, x1)
            gx2 = grp.multiply(g, x2)
            after = coset_sign(graph, lam, grp.multiply(grp.invert(gx1), gx2).letters)
            if before != after:
                failures += 1
    # Star-link special case: the path is the star of its middle vertex.
    graph = path_graph("abc")
    grp = raag(graph)
    rng = Random(20250309)
    for _ in range(1000):
        g = grp.element(_random_raag_letters(rng, graph, 8))
        m = g.exp_sum("b")
        if coset_sign(graph, {"a", "c"}, g.letters) != (m > 0) - (m < 0):
            failures += 1
    dt = time.perf_counter() - t0
    return Result(8, "order oracle soundness", failures == 0, f"{failures} failures, {dt:.1f}s", dt)


def criterion_9() -> Result:
    """The sharp bound for a commutator of non-adjacent vertices, and
    clique-supported rejections."""
    t0 = time.perf_counter()
    graph = path_graph("abc")
    cert = raag_certificate(graph, parse_raag_word(graph, "acAC"))
    ok = isinstance(cert, GapCertificate) and cert.scl_lower_bound == HALF
    reject = raag_certificate(graph, parse_raag_word(graph, "ab"))
    ok = ok and isinstance(reject, NoCertificate)
    import contextlib
    import io
    import json
    import os
    import tempfile

    from .cli import main as cli_main

    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(graph.to_record(), fh)
        path = fh.name
    try:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code_cert = cli_main(["bound", "--graph", path, "--word", "acAC"])
            code_reject = cli_main(["bound", "--graph", path, "--word", "ab"])
    finally:
        os.unlink(path)
    ok = ok and code_cert == 0 and code_reject == 1
    dt = time.perf_counter() - t0
    return Result(9, "raag theorem", ok, f"exit codes {code_cert},{code_reject}, bound={getattr(cert, 'scl_lower_bound', None)}, {dt:.1f}s", dt)


def criterion_10() -> Result:
    """Exact scl beyond the construction is out of scope: the word with
    true scl 3/4 still certifies exactly 1/2."""
    t0 = time.perf_counter()
    cert = f2_scl_bound("abABaBBBAbbb")
    ok = isinstance(cert, GapCertificate) and cert.scl_lower_bound == HALF
    dt = time.perf_counter() - t0
    return Result(10, "non-reproduction of exact scl", ok, f"bound={getattr(cert, 'scl_lower_bound', None)}, {dt:.1f}s", dt)


def criterion_11() -> Result:
    """Cyclic evaluation matches the eventual-linearity slope."""
    t0 = time.perf_counter()
    rng = Random(20250311)
    phi = f2_letter_qm()
    failures = 0
    for _ in range(1000):
        word = _random_commutator_word(rng, 4)
        cert = f2_scl_bound(word)
        if not isinstance(cert, GapCertificate):
            failures += 1
            continue
        g0 = cert.source["conjugated_to"]
        if cert.outcome.depth > len(phi(g0)):
            failures += 1
        if phi_bar_eval(cert, phi, g0) != cert.phi_bar:
            failures += 1
    dt = time.perf_counter() - t0
    return Result(11, "homogenization cross-check", failures == 0, f"1000 certificates, {failures} failures, {dt:.1f}s", dt)


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
]


def run_all(only=None) -> list[Result]:
    results = []
    for i, crit in enumerate(CRITERIA, start=1):
        if only and i not in only:
            continue
        res = crit()
        results.append(res)
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} criterion {res.number} ({res.name}): {res.detail}")
    return results
