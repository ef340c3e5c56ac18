"""
The split-sum identity and Abel polynomials
===========================================

The degree of the node class delta_{0,0} can be computed by distributing
the poles between the two components of a nodal fiber, or from a closed
formula. Their equality is a combinatorial identity in the pole orders.
This script checks it at integer points, as a polynomial identity, and
through the Abel-polynomial argument.
"""

# %%
from fractions import Fraction

from hurwitz_strata import delta00_closed, delta00_split_sum, enumerate_partitions
from hurwitz_strata.identities import (
    abel_classical_check,
    abel_set_binomial_symbolic,
    kazarian_cleared_polys,
    kazarian_difference,
    kazarian_lhs,
    kazarian_rhs,
    split_coefficient_identity,
)

bad = [k for n in range(2, 11) for k in enumerate_partitions(n) if k.length >= 2 and delta00_split_sum(k) != delta00_closed(k)]
print("partitions where the two node-class routes differ:", bad)

# %%
t = [Fraction(1, 2), 3, Fraction(-2, 7), 5]
print("split sum:", kazarian_lhs(t), " closed side:", kazarian_rhs(t))

# %%
# After clearing denominators both sides are polynomials; compare them
# monomial by monomial.
lhs, rhs = kazarian_cleared_polys(5)
print("m=5 cleared polynomials equal:", lhs == rhs, "terms:", len(lhs.terms))

# %%
# The difference between the split sum and its pole part depends only on
# the total of the variables.
print(kazarian_difference([1, 1, 2, 4]), kazarian_difference([2, 2, 2, 2]))

# %%
print("Abel set identity m<=5:", all(abel_set_binomial_symbolic(m) for m in range(6)))
print("classical Abel identity n<=10:", all(abel_classical_check(n) for n in range(1, 11)))
print([split_coefficient_identity(m) for m in range(2, 7)])
