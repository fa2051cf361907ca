#!/usr/bin/env python3
# Diagrams, hooks, corners, diagonal regions and the two cell orders.

from rimhooks import Partition, content, content_key, revlex_key
from rimhooks.render import ascii_shape

shape = Partition((4, 3, 1))
print("shape          ", shape)
print("conjugate      ", shape.conjugate())
print("cells          ", shape.size, "in", shape.length, "rows")

# hook lengths count the cell itself plus everything due east and due south
print("\nhook length at every cell:")
for i, p in enumerate(shape.parts, start=1):
    print("  ", " ".join(str(shape.hook_length((i, j))) for j in range(1, p + 1)))

# corners come interleaved when sorted by content (column minus row)
inner, outer = shape.corners()
print("\ninner corners  ", inner, "contents", [content(u) for u in inner])
print("outer corners  ", outer, "contents", [content(u) for u in outer])

# each diagonal belongs to one of four regions; rim-hooks continue east
# through inner diagonals and band A, south through inner diagonals and band B
print("\nregion of every cell:")
for i, p in enumerate(shape.parts, start=1):
    print("  ", " ".join(shape.region((i, j)).value.ljust(5) for j in range(1, p + 1)))

# two total orders on cells drive everything: reverse lexicographic
# (later columns first) and the content order (larger content first)
print("\nreverse lexicographic:", sorted(shape.cells(), key=revlex_key))
print("content order:        ", sorted(shape.cells(), key=content_key))

# every cell names one rim-hook: head at the bottom of its column, tail at
# the end of its row, running along the rim
print("\nall rim-hooks, smallest first:")
for hook in shape.rim_hooks():
    print(f"\nanchor {hook.anchor}, {len(hook)} cells")
    print(ascii_shape(shape, hook.cells))
