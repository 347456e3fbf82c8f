"""Linear complexity of one binary sequence read over different prime fields.

The gcd with 1 - x^N can only grow after reduction mod p, and only at primes
dividing the integer a of the rational Bezout witness.

Run: python3 demos/linear_complexity_fields.py
"""

from twoadic import BinarySequence, gen_m_sequence
from twoadic.fieldlc import corollary_prediction, integer_gcd_witness, lc_prime_field
from twoadic.sequences import complement

for text in ("11000", "11010"):
    s = BinarySequence.from_string(text)
    w = integer_gcd_witness(s)
    lcs = {p: lc_prime_field(s, p).lc for p in (2, 3, 5, 7)}
    print(f"{text}: rational gcd degree {w.g_degree}, a = {w.a}, LC_p = {lcs}")

m = gen_m_sequence(4)
print(f"\nm-sequence of period {m.period}, weight {m.weight}")
for t, label in ((m, "s"), (complement(m), "~s")):
    for p in (3, 5, 7, 11):
        want = corollary_prediction(t, p)
        got = lc_prime_field(t, p).lc
        print(f"  {label:2s} p={p:2d}: LC_p={got:2d} predicted={want}")
