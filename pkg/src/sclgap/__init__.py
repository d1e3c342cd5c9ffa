"""Certified lower bounds of 1/2 for stable commutator length.

The library simplifies group elements through letter maps into
alternating words of the rank-2 free group, iterates two collapsing
maps on conjugacy classes until a terminal shape appears, and
evaluates an explicit integer quasimorphism whose homogenization
certifies the bound.  Front ends cover free groups, amalgamated free
products over invariantly ordered edge subgroups, and right-angled
Artin groups.
"""

from ._kernels import COMPILED
from .blocks import (
    a_decompose,
    alpha,
    alpha_bar,
    b_decompose,
    beta,
    beta_bar,
    power_split,
)
from .counting import LetterHom, cyclic_eval, eta0, homogenize, nu, sampled_defect
from .engine import (
    GapCertificate,
    NoCertificate,
    certificate_for,
    coboundary_value,
    f2_scl_bound,
    phi_bar_eval,
    psi_eval,
    stabilize,
)
from .graphs import Graph, cycle_graph, path_graph
from .lettermaps import (
    F2,
    LetterQM,
    f2_letter_qm,
    f2_sign_qm,
    tilde,
    verify_letter_qm,
    verify_well_behaved,
)
from .raags import Raag, RaagElement, parse_raag_word, raag, raag_certificate, star_link_amalgam
from .seriesorder import coset_sign, magnus, positivity_sign
from .triples import classify, equivalent_forms, gen_letter_thin
from .words import cyc_class, exp_sum, parse_word, reduce_word, swap_generators

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "F2",
    "GapCertificate",
    "Graph",
    "LetterHom",
    "LetterQM",
    "NoCertificate",
    "Raag",
    "RaagElement",
    "a_decompose",
    "alpha",
    "alpha_bar",
    "b_decompose",
    "beta",
    "beta_bar",
    "certificate_for",
    "classify",
    "coboundary_value",
    "coset_sign",
    "cyc_class",
    "cyclic_eval",
    "cycle_graph",
    "equivalent_forms",
    "eta0",
    "exp_sum",
    "f2_letter_qm",
    "f2_scl_bound",
    "f2_sign_qm",
    "gen_letter_thin",
    "homogenize",
    "magnus",
    "nu",
    "parse_raag_word",
    "parse_word",
    "path_graph",
    "phi_bar_eval",
    "positivity_sign",
    "power_split",
    "psi_eval",
    "raag",
    "raag_certificate",
    "reduce_word",
    "sampled_defect",
    "stabilize",
    "star_link_amalgam",
    "swap_generators",
    "tilde",
    "verify_letter_qm",
    "verify_well_behaved",
]
