"""Exact computations with virtual knot codes and their groups.

Knot codes <-> cyclic Wirtinger presentations, two-bridge (Schubert)
families, Fox calculus / Alexander polynomials, Riley's Nab-rep polynomial
and Baumslag-Solitar classification.
"""

__version__ = "0.1.0"

from .algebra import BiPoly, LaurentPoly, Mat2, laurent_gcd, laurent_normalize_unit
from .errors import InvariantError, ParseError, PreconditionError, ValidationError, VKError
from .groups import (
    PeripheralPair,
    WirtingerPresentation,
    abelianization,
    abelianization_two_gen,
    arc_presentation,
    over_presentation,
    peripheral_pair,
)
from .invariants import (
    alexander_polynomial,
    alexander_two_generator,
    bs_classify,
    fox_derivative,
    murasugi_center_test,
    nabrep_phi,
)
from .knotcode import (
    KnotCode,
    arcs,
    bridge_decomposition,
    standard_normal_form,
    validate_code,
)
from .schubert import SchubertParams, schubert_code, schubert_exponents, schubert_presentations
from .synthesis import (
    bs_virtual_code,
    close_deficiency_one,
    cyclic_wirtinger_to_code,
    onerel_to_cyclic_wirtinger,
)
from .words import GroupRingElem, Presentation, Word, parse_word
