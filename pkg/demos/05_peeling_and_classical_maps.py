#!/usr/bin/env python3
# The corner-peeling description of the bijection, the Hillman-Grassl
# correspondence, row insertion, and the transpose laws connecting them.

from itertools import permutations

from rimhooks import (
    Partition,
    Rpp,
    build,
    corner_toggle,
    diag_partition,
    factorize,
    gk_chain_max,
    hg,
    hg_inv,
    peel_tableau,
    permutation_matrix,
    rsk,
)
from rimhooks.render import ascii_grid

shape = Partition((3, 3, 3))
pi = Rpp(shape, ((1, 1, 4), (2, 3, 4), (4, 4, 4)))
print("a filling of the square:")
print(ascii_grid(pi))

# peeling removes one outer corner at a time, recording how far the corner
# entry exceeds its neighbours and min-max-toggling the rest of its diagonal
step = corner_toggle(pi, (3, 3))
print("\nafter toggling away the corner (3,3):")
print(ascii_grid(step))

tableau = peel_tableau(pi)
print("\nfully peeled tableau of counts:")
print(ascii_grid(tableau))

# the peeling map and the lexicographic factorization are the same bijection,
# computed by two unrelated recursions
assert tableau == factorize(pi).to_tableau()
print("\npeeling equals factorization: True")

# the Hillman-Grassl correspondence is a different bijection onto the same
# tableaux; it is its own kind of extraction and has an exact inverse
hg_image = hg(pi)
print("\nHillman-Grassl image:")
print(ascii_grid(hg_image))
assert hg_inv(hg_image) == pi

# row insertion sends the count matrix to a pair of column-strict tableaux;
# diagonal partial sums of the built filling match Greene-Kleitman chain
# maxima of the matrix
pair = rsk(tableau)
print("\nrow insertion of the peeled tableau:")
print(ascii_grid(pair.p))
print()
print(ascii_grid(pair.q))
mu = diag_partition(pi, 0)
print("\nmain-diagonal partition of the filling:", mu)
print("one weak chain in the full rectangle:   ", gk_chain_max(tableau, 0, 1, "weak"))
print("four strict chains:                     ", gk_chain_max(tableau, 0, 4, "strict"))

# on permutation matrices the composite map (build, then Hillman-Grassl) is
# an involution, and row insertion turns it into transposition
for word in permutations((1, 2, 3)):
    sigma = permutation_matrix(word)
    tau = hg(build(sigma))
    assert hg(build(tau)) == sigma
    assert rsk(tau) == rsk(sigma).conjugate()
print("\ninvolution and transpose law hold for every permutation of 3: True")
