"""Exact 2-adic and linear complexity of binary periodic sequences.

Sequence families with ideal or optimal autocorrelation, FCSR/LFSR
simulators, exact circulant determinants with Bezout witnesses, and linear
complexity over prime fields.
"""

from .adic import (
    TwoAdicProfile,
    ac_lower_bound_from_det,
    dhl_gcd_lemma_check,
    maximality_certificate,
    mersenne_factor_bound_check,
    two_adic_complexity,
    two_adic_fraction,
)
from .circulant import (
    bezout_witness,
    circulant_det_exact,
    circulant_det_spectral,
    det_closed_form_ideal,
    det_closed_form_legendre,
    gram_det,
)
from .fieldlc import berlekamp_massey, integer_gcd_witness, lc_prime_field, theorem5_check
from .sequences import (
    BinarySequence,
    autocorrelation_profile,
    complement,
    gen_dhl,
    gen_hall_sextic,
    gen_legendre,
    gen_m_sequence,
    gen_twin_prime,
    sequence_polynomial_eval,
    support_difference_set_check,
)

__version__ = "0.1.0"
