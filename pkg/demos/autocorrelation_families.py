"""Autocorrelation classes of the built-in sequence families.

Run: python3 demos/autocorrelation_families.py
"""

from twoadic import autocorrelation_profile
from twoadic.sequences import (
    gen_dhl,
    gen_hall_sextic,
    gen_legendre,
    gen_m_sequence,
    gen_twin_prime,
    support_difference_set_check,
)

families = [
    ("legendre", 7, gen_legendre),
    ("legendre", 13, gen_legendre),
    ("dhl", 13, gen_dhl),
    ("dhl", 89, gen_dhl),
    ("twinprime", 5, gen_twin_prime),
    ("hall", 31, gen_hall_sextic),
    ("mseq", 5, gen_m_sequence),
]
for name, param, gen in families:
    s = gen(param)
    prof = autocorrelation_profile(s)
    ds = support_difference_set_check(s)
    print(f"{name:9s} {param:3d}  N={s.period:3d} weight={s.weight:3d} "
          f"class={prof.classification:14s} out-of-phase={sorted(prof.out_of_phase)} "
          f"difference set={ds.holds}")
