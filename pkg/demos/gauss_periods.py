"""Quadratic and quartic Gauss periods for primes p = 1 mod 4.

The product 16(B0+B1)(B1+B2)(B2+B3)(B3+B0) is an integer given by the
two-squares decomposition p = a^2 + b^2, and it is coprime to 2^p - 1.

Run: python3 demos/gauss_periods.py
"""

from math import gcd

from twoadic.gauss import quadratic_period_values, quartic_period_product, two_squares

print(" p    a   b        B0        B1   product  gcd(product, 2^p-1)")
for p in (5, 13, 17, 29, 37, 41, 53, 61):
    ts = two_squares(p)
    b0, b1 = quadratic_period_values(p)
    prod = quartic_period_product(p)
    print(f"{p:2d} {ts.a:4d} {ts.b:3d} {b0:9.5f} {b1:9.5f} {prod:9d}  {gcd(prod, 2**p - 1)}")
