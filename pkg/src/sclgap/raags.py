"""Right-angled Artin groups: normal forms, cyclic reduction, and the
star-link amalgam splitting behind the 1/2 bound.

Elements are canonical reduced letter sequences; a full subgraph gives
a retraction and exact membership, so the amalgam over a vertex star
runs with honest oracles: the star side orders cosets by the central
vertex exponent, the other side by the trace-series positivity cone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .amalgams import Amalgam, AmalgamElement, FactorOracle
from .engine import GapCertificate, NoCertificate
from .errors import SclGapError, UnknownVertex
from .graphs import Graph
from .lettermaps import GroupOracle
from .pcword import canonical_signed, reduce_signed
from .seriesorder import coset_sign


@dataclass(frozen=True, slots=True)
class RaagElement:
    """Canonical reduced word over the vertex generators."""

    graph: Graph
    letters: tuple[tuple[str, int], ...]

    def is_trivial(self) -> bool:
        return not self.letters

    def support(self) -> set[str]:
        return {v for v, _ in self.letters}

    def exp_sum(self, v: str) -> int:
        return sum(s for u, s in self.letters if u == v)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(v if s > 0 else f"{v}^-1" for v, s in self.letters)


class Raag(GroupOracle):
    """Group oracle for the right-angled Artin group of a graph."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.name = f"raag({','.join(graph.vertices)})"
        self._order = {v: i for i, v in enumerate(graph.vertices)}
        self._blockers = {
            v: {v} | {u for u in graph.vertices if u != v and not graph.adjacent(u, v)}
            for v in graph.vertices
        }

    # -- normal forms -------------------------------------------------

    def element(self, letters) -> RaagElement:
        for v, s in letters:
            if v not in self._order:
                raise UnknownVertex(v)
            if s not in (1, -1):
                raise ValueError(f"bad sign {s}")
        reduced = reduce_signed(self.graph.adjacent, letters)
        canon = canonical_signed(self._order.__getitem__, self._blockers.__getitem__, reduced)
        return RaagElement(self.graph, canon)

    def normal_form(self, letters) -> RaagElement:
        return self.element(letters)

    def identity(self) -> RaagElement:
        return RaagElement(self.graph, ())

    def multiply(self, g: RaagElement, h: RaagElement) -> RaagElement:
        return self.element(g.letters + h.letters)

    def invert(self, g: RaagElement) -> RaagElement:
        return self.element(tuple((v, -s) for v, s in reversed(g.letters)))

    def equal(self, g: RaagElement, h: RaagElement) -> bool:
        return g.letters == h.letters

    def generator(self, v: str, sign: int = 1) -> RaagElement:
        return self.element(((v, sign),))

    # -- structure ----------------------------------------------------

    def retraction(self, g: RaagElement, lam) -> RaagElement:
        lam_set = set(lam)
        return self.element(tuple(l for l in g.letters if l[0] in lam_set))

    def in_subgroup(self, g: RaagElement, lam) -> bool:
        return g.support() <= set(lam)

    def cyclic_reduce(self, g: RaagElement) -> tuple[RaagElement, RaagElement]:
        """Conjugator x and cyclically reduced core with g = x core x^-1."""
        adj = self.graph.adjacent
        cur = list(g.letters)
        conj: list[tuple[str, int]] = []
        while True:
            found = False
            n = len(cur)
            for i in range(n):
                v, s = cur[i]
                if not all(u != v and adj(u, v) for u, _ in cur[:i]):
                    continue
                for j in range(n - 1, i, -1):
                    u, t = cur[j]
                    if u == v and t == -s and all(
                        w != v and adj(w, v) for w, _ in cur[j + 1 :]
                    ):
                        conj.append((v, s))
                        cur = cur[:i] + cur[i + 1 : j] + cur[j + 1 :]
                        found = True
                        break
                if found:
                    break
            if not found:
                break
        return self.element(conj), self.element(cur)

    def conjugates_into_clique(self, g: RaagElement) -> bool:
        _, core = self.cyclic_reduce(g)
        return self.graph.is_clique(core.support())


_RAAGS: dict[Graph, Raag] = {}


def raag(graph: Graph) -> Raag:
    grp = _RAAGS.get(graph)
    if grp is None:
        grp = Raag(graph)
        _RAAGS[graph] = grp
    return grp


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*?)(?:\^(-?\d+))")


def parse_raag_word(graph: Graph, text: str) -> RaagElement:
    """Parse single-character vertex words with case inverses
    (``acAC``) or whitespace-separated ``v^-1`` tokens."""
    text = text.strip()
    letters: list[tuple[str, int]] = []
    single = {v for v in graph.vertices if len(v) == 1 and v.islower()}
    for token in text.split():
        m = _TOKEN.fullmatch(token)
        if m:
            name, exp = m.group(1), int(m.group(2))
            if name not in set(graph.vertices):
                raise UnknownVertex(name)
            letters.extend([(name, 1 if exp > 0 else -1)] * abs(exp))
            continue
        if token in set(graph.vertices):
            letters.append((token, 1))
            continue
        for ch in token:
            if ch in single:
                letters.append((ch, 1))
            elif ch.lower() in single:
                letters.append((ch.lower(), -1))
            else:
                raise UnknownVertex(ch)
    return raag(graph).element(letters)


# ---------------------------------------------------------------------------
# Star-link amalgam and the certificate pipeline.


def star_link_amalgam(graph: Graph, v: str) -> Amalgam:
    """A(graph) split over the star of v: one factor is the star
    subgroup ordered by the v-exponent, the other the vertex-deleted
    subgroup ordered by the trace-series coset sign over the link."""
    link = graph.link(v)
    star_graph = graph.full_subgraph(graph.star(v))
    rest_graph = graph.full_subgraph([u for u in graph.vertices if u != v])
    star_side = raag(star_graph)
    rest_side = raag(rest_graph)

    def star_sign(g: RaagElement) -> int:
        m = g.exp_sum(v)
        return (m > 0) - (m < 0)

    def rest_sign(g: RaagElement) -> int:
        return coset_sign(rest_graph, link, g.letters)

    a = FactorOracle(
        star_side,
        in_edge=lambda g: g.support() <= link,
        coset_sign=star_sign,
        name=f"star({v})",
    )
    b = FactorOracle(
        rest_side,
        in_edge=lambda g: g.support() <= link,
        coset_sign=rest_sign,
        name=f"minus({v})",
    )

    def transfer(tag: str, g: RaagElement) -> RaagElement:
        target = rest_side if tag == "A" else star_side
        return target.element(g.letters)

    return Amalgam(a, b, transfer=transfer, name=f"raag-split({v})")


def embed_in_star_amalgam(am: Amalgam, v: str, g: RaagElement) -> AmalgamElement:
    """Split a word into star-side runs (letters on v) and deleted-side
    runs (all other letters)."""
    sylls: list[tuple[str, RaagElement]] = []
    run: list[tuple[str, int]] = []
    run_tag = ""
    for letter in g.letters:
        tag = "A" if letter[0] == v else "B"
        if tag != run_tag and run:
            sylls.append((run_tag, am.sides[run_tag].group.element(run)))
            run = []
        run_tag = tag
        run.append(letter)
    if run:
        sylls.append((run_tag, am.sides[run_tag].group.element(run)))
    return am.element(sylls)


def raag_certificate(graph: Graph, g: RaagElement) -> GapCertificate | NoCertificate:
    """The end-to-end bound for one group element; no certificate
    exactly when the element conjugates into a clique subgroup."""
    grp = raag(graph)
    _, core = grp.cyclic_reduce(g)
    if core.is_trivial():
        return NoCertificate("trivial element")
    supp = core.support()
    if graph.is_clique(supp):
        return NoCertificate("conjugates into a clique subgroup")
    pivot = None
    for v in graph.vertices:
        if v in supp and any(
            u != v and not graph.adjacent(u, v) for u in supp
        ):
            pivot = v
            break
    if pivot is None:
        raise SclGapError("non-clique support without a non-adjacent pair")
    am = star_link_amalgam(graph, pivot)
    cert = am.scl_bound(embed_in_star_amalgam(am, pivot, core))
    if isinstance(cert, NoCertificate):
        raise SclGapError(f"amalgam refused a non-clique element: {cert.reason}")
    source = dict(cert.source)
    source.update(
        {
            "group": "raag",
            "graph": graph.to_record(),
            "word": str(g),
            "pivot": pivot,
        }
    )
    return GapCertificate(
        source=source,
        outcome=cert.outcome,
        sign=cert.sign,
        psi_bar=cert.psi_bar,
        phi_bar=cert.phi_bar,
        scl_lower_bound=cert.scl_lower_bound,
        power_evidence=cert.power_evidence,
    )
