"""Exact moments of words in the combined generator Z = D + c*T.

Three measure families reproduce three classical operator laws: the unit
disk gives the circular element (Catalan squared moments), the annulus
family gives the free Poisson circle (R-diagonal, powers of c on the
diagonal), and point masses decorate the triangular moments.
"""

from fractions import Fraction as F

from dtmoments import (
    Atomic,
    ComplexRational,
    DTWord,
    UniformAnnulus,
    UniformDisk,
    ZWord,
    dt_word_moment,
    z_word_moment,
)

print("circular element: tau((Z*Z)^p) over the unit disk, c = 1")
for p in range(1, 6):
    zw = ZWord.from_letters(["Z*", "Z"] * p)
    print(f"  p={p}: {z_word_moment(zw, UniformDisk(1)).value}")

print("\nfree Poisson family: annulus parameter c, tau(Z^n (Z*)^n) = c^n")
for c in (F(1), F(3, 2), F(2)):
    mu = UniformAnnulus(c)
    row = [z_word_moment(ZWord.from_letters(["Z"] * n + ["Z*"] * n), mu).value
           for n in (1, 2, 3)]
    print(f"  c={c}: {row}")

print("\noff-diagonal annulus words vanish (R-diagonality):")
mu = UniformAnnulus(F(3, 2))
for a, b in [(1, 2), (2, 1), (3, 1), (1, 3)]:
    zw = ZWord.from_letters(["Z"] * a + ["Z*"] * b)
    print(f"  tau(Z^{a} Z*^{b}) = {z_word_moment(zw, mu).value}")

print("\ndecorated triangular word over a point mass at w = 1/3 + i/7:")
w = ComplexRational(F(1, 3), F(1, 7))
word = DTWord.from_letters(["D", "T", "D*", "T*"])
value = dt_word_moment(word, Atomic.delta(w))
print(f"  tau(D T D* T*) = {value.value}  (= |w|^2 / 2)")
