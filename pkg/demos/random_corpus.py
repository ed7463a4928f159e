# Generate random graph links and check the norm identities on each.
import random
import sys
from collections import Counter

from splicenorm import format_diagram, random_diagram
from splicenorm.checks import check_diagram
from splicenorm.geometry import essential_basis

count = int(sys.argv[1]) if len(sys.argv) > 1 else 30
shapes = Counter()
failures = 0
for seed in range(count):
    d = random_diagram(seed, max_nodes=3)
    shapes[(d.r, d.p, essential_basis(d).b_e)] += 1
    fails = check_diagram(d, random.Random(seed), n_classes=50)
    if fails:
        failures += 1
        print(format_diagram(d))
        print("\n".join(fails))

print("(r, p, b_e) counts:", dict(sorted(shapes.items())))
print(f"{failures} of {count} diagrams failed")

# one example in .spl form
print(format_diagram(random_diagram(7, max_nodes=3)))
