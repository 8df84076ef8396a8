#!/usr/bin/env python3
# Build small finite fields as lookup tables and poke at their arithmetic.

import numpy as np

from uct import make_field

# GF(4) = Z_2[x] / (x^2 + x + 1): the modulus is found automatically as the
# irreducible monic quadratic with the smallest encoding (here: the only one).
f4 = make_field(2, 2)
print("GF(4) modulus (constant term first):", f4.modulus)
print("addition table:")
print(np.array(f4.add_table))
print("multiplication table:")
print(np.array(f4.mul_table))

# Element 2 encodes the polynomial x, and x*x = x + 1, which encodes to 3.
print("2 * 2 =", f4.mul(2, 2))

# Prime fields are just Z_p.
f7 = make_field(7, 1)
print("\nGF(7): 3 * 5 =", f7.mul(3, 5), " inverse of 4 =", f7.inv(4))

# Every nonzero element has multiplicative order dividing q - 1.
f9 = make_field(3, 2)
print("\nGF(9) modulus:", f9.modulus)
for a in range(1, 9):
    power, steps = a, 1
    while power != 1:
        power = f9.mul(power, a)
        steps += 1
    print(f"  element {a}: multiplicative order {steps}")
