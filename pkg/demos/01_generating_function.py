"""
Disk cover contributions and their generating function
=======================================================

"""

from fractions import Fraction

from opengw import alpha_coefficients, contribution, gf_series
from opengw.exact import format_rational

# one-ghost numbers alpha_g for an embedded disk (m = -1)
alpha = alpha_coefficients(6)
for g, a in alpha.items():
    print(f"alpha_{g} = {format_rational(a)}")

# contributions summed over closed ghost partitions with 1/|Aut| weights
gf = gf_series(6)
print()
for g in range(7):
    c = contribution(g, 1)
    print(f"C({g},1) = {format_rational(c):>24}   [t^{2 * g}] gf = {format_rational(gf[2 * g])}")

# genus two by hand: a genus-two ghost, or two tori up to swapping
print()
print(format_rational(-alpha[2] + Fraction(1, 2) * alpha[1] ** 2))

# more than one boundary component: nothing survives
print([format_rational(contribution(g, h)) for g in range(1, 4) for h in (2, 3)])

# m drops out, since m * alpha_g is fixed by the series
print(contribution(3, 1, Fraction(5, 2)) == contribution(3, 1))
