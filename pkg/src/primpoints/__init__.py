"""Exact computation of low-degree algebraic points on hyperelliptic curves.

Subpackages: exact rational/polynomial arithmetic (`arith`), number fields
and the primitivity test (`numfield`), permutation actions (`permact`),
hyperelliptic curve divisors and Riemann-Roch spaces (`hyperell`), the
point-classification pipeline (`pipeline`), and the CLI (`cli`).
"""

__version__ = "0.1.0"
