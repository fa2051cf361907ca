#!/usr/bin/env python3
# Inserting rim-hook bricks into a reverse plane partition, and how it fails.

from rimhooks import InsertionFailure, Partition, Rpp, insertion_path, try_insert
from rimhooks.render import ascii_rpp

shape = Partition((3, 3, 3))
pi = Rpp(shape, ((0, 0, 0), (0, 0, 0), (1, 1, 1)))
print("start from this filling of the square:")
print(ascii_rpp(pi))

# inserting adds 1 along a greedy south-west walk from the hook's tail:
# go south while the value below matches (on the south-continuing diagonals),
# otherwise go west
for anchor in ((1, 3), (2, 2)):
    hook = shape.rim_hook(anchor)
    path = insertion_path(hook, pi)
    print(f"\nhook {anchor}: rim cells {hook.cells}")
    print(f"  walk {path}")
    result = try_insert(hook, pi)
    print(ascii_rpp(result, path))

# insertion can fail; the report carries a candidate cell that certifies the
# failure (it precedes the walk's head in content order)
steep = Rpp(shape, ((0, 0, 0), (1, 1, 1), (2, 2, 2)))
outcome = try_insert(shape.rim_hook((1, 1)), steep)
print("\ninsert the longest hook into a steeper filling:")
print(ascii_rpp(steep))
assert isinstance(outcome, InsertionFailure)
print(outcome)

# the walk is still total: on failing insertions it may leave the diagram
# through the west edge, which is exactly what the witness reasoning needs
print("attempted walk:", outcome.path)
