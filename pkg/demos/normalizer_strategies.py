"""Three ways to get a normalizer in a symmetric group, checked against each other."""

import time

from derivant import equals, normalizer_in, parse_cycles, PermGroup
from derivant import constructors as C

cases = [
    ("C7 in S7", C.symmetric(7), PermGroup([parse_cycles("(1 2 3 4 5 6 7)", 7)], 7), "holomorph"),
    ("3^2 in S9", C.symmetric(9), C.translations(2, 3), "holomorph"),
    ("A6 in S10", C.symmetric(10), C.psl(2, 9), "catalog"),
]
for name, U, G, fast in cases:
    t = time.perf_counter()
    a = normalizer_in(U, G, strategy=fast, guard=True)
    t1 = time.perf_counter() - t
    t = time.perf_counter()
    b = normalizer_in(U, G, strategy="exact")
    t2 = time.perf_counter() - t
    print(f"{name:10} |N| = {a.group.order():5}  {fast} {t1:.2f}s, exact scan {t2:.2f}s, "
          f"agree: {equals(a.group, b.group)}")
    for note in a.notes:
        print("           ", note)
