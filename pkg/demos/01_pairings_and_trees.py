"""Walk through the pairing-to-tree machinery on a ten-letter word.

The trace of a word in the triangular generator and its adjoint is a sum over
non-crossing pairings that join plain letters to starred letters.  Each such
pairing folds the 10-gon of letter positions into an oriented tree, and the
pairing's weight is the number of total orders compatible with the arrows.
"""

from dtmoments import (
    Pairing,
    StarWord,
    enumerate_compatible_ncp,
    nto,
    quotient_graph,
    t_word_moment,
)

word = StarWord.parse("*1*1*11*1*")
print(f"word: {' '.join(word.symbols)}")

pairings = enumerate_compatible_ncp(word)
print(f"compatible non-crossing pairings: {len(pairings)}")

showcase = Pairing(((1, 6), (2, 3), (4, 5), (7, 10), (8, 9)))
q = quotient_graph(showcase, word)
print(f"\nfolding {showcase.pairs}:")
print(f"  merge classes: {q.merge_classes()}")
print(f"  oriented edges (source -> target means target sits below): {q.edges}")
print(f"  ordering count: {nto(showcase, word)}")

print("\nall pairings and their ordering counts:")
total = 0
for sigma in pairings:
    count = nto(sigma, word)
    total += count
    print(f"  {sigma.pairs}  ->  {count}")

from math import factorial

k = len(word)
print(f"\nsum {total} / (k/2+1)! = {total}/{factorial(k // 2 + 1)}")
print(f"trace of the word: {t_word_moment(word).value}")
