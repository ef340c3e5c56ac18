"""
Degrees of the caustic and Maxwell strata
=========================================

The two codimension-one strata of a genus-0 Hurwitz space are the caustic
(a triple critical point) and the Maxwell stratum (two double points over
one critical value). Their degrees are closed expressions in the pole
orders kappa.
"""

# %%
from hurwitz_strata import Partition, caustic_degree, maxwell_degree, kl_codim2, parse
from hurwitz_strata.strata import specialization_report

for text in ["1,1,1", "2,1", "3,1", "1^4", "2,2", "1^5", "3,2,1"]:
    kappa = parse(text)
    line = f"kappa={kappa!s:12} caustic={caustic_degree(kappa)!s:>8}"
    if kappa.size >= 4:
        line += f"  maxwell={maxwell_degree(kappa)!s:>8}"
    print(line)

# %%
# The Maxwell formula goes negative for kappa = (2,2), which cannot be the
# degree of an actual stratum; it is reported, not clamped.
print("maxwell (2,2):", maxwell_degree(Partition([2, 2])))

# %%
# Substituting kappa = 1^(n-3) 3 into the caustic formula gives twice the
# degree of the codimension-two stratum with two caustic values (the order
# of the two critical values is not fixed).
for n in range(4, 9):
    kappa = Partition([3] + [1] * (n - 3))
    print(n, caustic_degree(kappa), 2 * kl_codim2(1, n))

# %%
# The analogous Maxwell and mixed substitutions do not reproduce the other
# two codimension-two degrees.
for row in specialization_report(4, 7):
    print(row["n"], f"{row['check']:26}", row["lhs_value"], "vs", row["rhs_value"], "PASS" if row["pass"] else "fail")
