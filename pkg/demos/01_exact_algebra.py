"""Exact arithmetic: rationals, prime fields, polynomials and Q(t)."""
from fractions import Fraction

from rankjump.algebra import GF, QQ, QQt, Polynomial, discriminant, poly_gcd, rational_sqrt

X = Polynomial.x(QQ)
print("gcd(x^3 - x, 3x^2 - 1) =", poly_gcd(X ** 3 - X, 3 * X ** 2 - 1))
print("disc(x^3 - x) =", discriminant(X ** 3 - X))

# over Q(t) the discriminant of x^3 - x + t^2 is a polynomial in t: its roots are the bad fibres
t, x = QQt.gen, Polynomial.x(QQt)
print("disc_x(x^3 - x + t^2) =", discriminant(x ** 3 - x + t * t))

F7 = GF(7)
print("sqrt(2) in F_7 =", F7.sqrt(F7(2)))
print("sqrt(25/4) in Q =", rational_sqrt(Fraction(25, 4)), "; sqrt(2) in Q =", rational_sqrt(Fraction(2)))
