"""Coset-sign oracles from a truncated series expansion over the trace
monoid.

Each generator maps to 1 + X_v (its inverse to the alternating
geometric series), multiplied out in the algebra whose monomials are
trace words: variables commute exactly when their vertices are
adjacent.  The lowest nonvanishing homogeneous component of the image
minus 1 is conjugation-invariant, so the sign of its least monomial
(graded, then lexicographic on canonical representatives) defines a
bi-invariant positivity cone.  Composing with the retraction onto a
full-subgraph subgroup turns that cone into an invariant order on the
cosets, which is exactly what the amalgam letter map consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeOverflow
from .graphs import Graph
from .pcword import reduce_signed

Monomial = tuple[int, ...]


class TraceAlgebra:
    """Canonical trace monomials over the vertices of a graph, with a
    memoized least-linearization canonical form."""

    def __init__(self, graph: Graph):
        self.graph = graph
        n = len(graph.vertices)
        self.index = {v: i for i, v in enumerate(graph.vertices)}
        # blockers[v] as a bitmask: v itself plus its non-neighbours.
        self.blocker_mask = []
        for i, v in enumerate(graph.vertices):
            mask = 1 << i
            for j, u in enumerate(graph.vertices):
                if u != v and not graph.adjacent(u, v):
                    mask |= 1 << j
            self.blocker_mask.append(mask)
        self._cache: dict[Monomial, Monomial] = {}

    def canon(self, m: Monomial) -> Monomial:
        if len(m) <= 1:
            return m
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        rem = list(m)
        out = []
        while rem:
            shadow = 0
            best = -1
            best_idx = -1
            for idx, v in enumerate(rem):
                if not (shadow >> v) & 1 and (best < 0 or v < best):
                    best, best_idx = v, idx
                shadow |= self.blocker_mask[v]
            out.append(best)
            del rem[best_idx]
        res = tuple(out)
        self._cache[m] = res
        return res


_ALGEBRAS: dict[Graph, TraceAlgebra] = {}


def trace_algebra(graph: Graph) -> TraceAlgebra:
    alg = _ALGEBRAS.get(graph)
    if alg is None:
        alg = TraceAlgebra(graph)
        _ALGEBRAS[graph] = alg
    return alg


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """Integer combination of canonical trace monomials up to a degree
    cap; products drop the higher terms."""

    algebra: TraceAlgebra
    cap: int
    terms: dict  # Monomial -> int, zero coefficients removed

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = min(self.cap, other.cap)
        out: dict[Monomial, int] = {}
        canon = self.algebra.canon
        for m1, c1 in self.terms.items():
            room = cap - len(m1)
            for m2, c2 in other.terms.items():
                if len(m2) > room:
                    continue
                key = canon(m1 + m2)
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return TruncatedSeries(self.algebra, cap, out)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(self.algebra.canon(mono), 0)

    def nonunit_terms(self) -> dict:
        return {m: c for m, c in self.terms.items() if m}

    def least_nonunit(self):
        """Least monomial with nonzero coefficient, graded then lex;
        None when the series is the constant."""
        best = None
        for m in self.terms:
            if m and (best is None or (len(m), m) < (len(best), best)):
                best = m
        return best


def one(graph: Graph, cap: int) -> TruncatedSeries:
    return TruncatedSeries(trace_algebra(graph), cap, {(): 1})


def _letter_series(alg: TraceAlgebra, v: int, sign: int, cap: int) -> TruncatedSeries:
    terms: dict[Monomial, int] = {(): 1}
    if sign > 0:
        if cap >= 1:
            terms[(v,)] = 1
    else:
        coeff = -1
        for d in range(1, cap + 1):
            terms[(v,) * d] = coeff
            coeff = -coeff
    return TruncatedSeries(alg, cap, terms)


def magnus(graph: Graph, letters, cap: int) -> TruncatedSeries:
    """Image of a word under v -> 1 + X_v, truncated at the cap.
    Multiplicative, so representatives of equal group elements agree."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    alg = trace_algebra(graph)
    acc = one(graph, cap)
    for name, sign in letters:
        acc = acc * _letter_series(alg, alg.index[name], sign, cap)
    return acc


def positivity_sign(graph: Graph, letters) -> int:
    """Sign of the least monomial of the series image minus 1; zero
    exactly on the trivial element.  The degree cap ladder doubles from
    2 up to four times the reduced length plus 16."""
    reduced = reduce_signed(graph.adjacent, letters)
    if not reduced:
        return 0
    hard_cap = 4 * len(reduced) + 16
    cap = 2
    while True:
        series = magnus(graph, reduced, cap)
        least = series.least_nonunit()
        if least is not None:
            return 1 if series.terms[least] > 0 else -1
        if cap >= hard_cap:
            raise DegreeOverflow(
                f"no nonzero term of degree <= {hard_cap} for a nontrivial element"
            )
        cap = min(2 * cap, hard_cap)


def retraction_letters(lam: set, letters):
    """Delete the letters outside a full subgraph; a homomorphism."""
    return tuple((v, s) for v, s in letters if v in lam)


def coset_sign(graph: Graph, lam, g_letters) -> int:
    """Invariant sign of a coset modulo the full-subgraph subgroup.

    Zero exactly on words supported in the subgraph, otherwise the
    positivity sign of g times the inverse of its retraction image.
    Accepts the subgraph as a vertex collection or as a Graph, which is
    then checked to be full.
    """
    if isinstance(lam, Graph):
        graph.check_full(lam)
        lam_set = set(lam.vertices)
    else:
        lam_set = set(lam)
        graph.full_subgraph(lam_set)  # raises on unknown vertices
    reduced = reduce_signed(graph.adjacent, g_letters)
    if all(v in lam_set for v, _ in reduced):
        return 0
    rho = retraction_letters(lam_set, reduced)
    k = reduced + tuple((v, -s) for v, s in reversed(rho))
    sign = positivity_sign(graph, k)
    if sign == 0:
        raise DegreeOverflow("kernel part of a non-subgroup element reduced to nothing")
    return sign
