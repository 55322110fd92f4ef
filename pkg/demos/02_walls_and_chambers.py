"""Walk through the walls in the movable cone for h = 3 and small k."""

from math import gcd

from hilbwalls import chamber_report, from_triple

for k in range(1, 9):
    if gcd(3, k) != 1:
        continue
    rep = chamber_report(from_triple(1, 3, k))
    print(f"k = {k}: {len(rep.walls)} wall(s), {rep.chamber_count} chamber(s)")
    for wall in rep.walls:
        vecs = ", ".join(str(c.w) for c in wall.representatives)
        print(f"    Gamma = {wall.gamma}  [{wall.kind.value}]  {vecs}")

# When two vectors land on one wall, counting them separately gives a different number.
rep = chamber_report(from_triple(1, 3, 2))
print(f"\nk = 2: {rep.chamber_count} chambers by distinct walls, "
      f"{rep.chamber_count_by_vectors} if every vector counts as a wall")
