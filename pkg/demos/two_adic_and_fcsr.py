"""Rational 2-adic value of a periodic sequence, and the FCSR that replays it.

Run: python3 demos/two_adic_and_fcsr.py
"""

from twoadic import BinarySequence, gen_legendre
from twoadic.adic import regenerate, two_adic_fraction
from twoadic.registers import fcsr_generate, fcsr_init_from_fraction

for text in ("01001", "1010", "0000"):
    s = BinarySequence.from_string(text)
    prof = two_adic_fraction(s)
    print(f"{text}: value {prof.numerator}/{prof.denominator}, AC = {prof.complexity}")

# The smallest FCSR generating s has connection number equal to the denominator.
s = gen_legendre(11)
prof = two_adic_fraction(s)
state = fcsr_init_from_fraction(prof.numerator, prof.denominator)
print(f"\nLegendre 11 = {s}")
print(f"connection number q = {state.q}, {state.stages} stages, memory {state.memory}")
bits, state = fcsr_generate(state, 22)
print("FCSR output  =", "".join(map(str, bits)))
assert bits == regenerate(prof, 22) == list(s.bits) * 2
