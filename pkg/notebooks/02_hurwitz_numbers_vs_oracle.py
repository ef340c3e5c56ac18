"""
Closed-form double Hurwitz numbers against direct enumeration
=============================================================

A Hurwitz number counts connected covers of the sphere, weighted by
automorphisms. It equals the number of transitive tuples of permutations
with product one in the prescribed cycle types, divided by n!. Here that
count serves as ground truth for the closed formulas.
"""

# %%
from hurwitz_strata import ClassTuple, hurwitz_oracle, parse
from hurwitz_strata.hurwitz import closed_hurwitz, oracle_classes
from hurwitz_strata.oracle import product_count, transitive_count

t = ClassTuple([parse("3,1"), parse("3,1"), parse("2,1,1"), parse("2,1,1")])
print("all tuples:", product_count(t))
print("transitive (characters + sieve):", transitive_count(t, "sieve"))
print("transitive (exhaustive search):  ", transitive_count(t, "dfs"))
print("Hurwitz number, genus:", hurwitz_oracle(t))

# %%
# Two ways to turn a stratum degree into a Hurwitz number. "printed" keeps
# the n! denominator and the coinciding-profile factor; "calibrated" divides
# by |Aut kappa| instead.
print(f"{'family':8} {'kappa':12} {'printed':>10} {'calibrated':>10} {'oracle':>8}")
for family, text in [
    ("caustic", "1,1,1"),
    ("caustic", "1^4"),
    ("caustic", "1^5"),
    ("caustic", "2,1"),
    ("caustic", "3,1"),
    ("caustic", "2,2,1"),
    ("maxwell", "1^4"),
    ("maxwell", "1^5"),
    ("maxwell", "2,1,1"),
]:
    kappa = parse(text)
    printed = closed_hurwitz(family, kappa, "printed")
    calibrated = closed_hurwitz(family, kappa, "calibrated")
    h, _ = hurwitz_oracle(ClassTuple(oracle_classes(kappa, printed.spec.mu)))
    print(f"{family:8} {text:12} {printed.value!s:>10} {calibrated.value!s:>10} {h!s:>8}")
