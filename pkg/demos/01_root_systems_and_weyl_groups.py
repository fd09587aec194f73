"""Tour of the combinatorial bedrock: roots, Weyl groups, rows.

Every computation in the package starts from a classical root system with
a fixed simple-root labelling (the doubled edge of B/C at the high index,
the D fork at the last two indices).  This script builds a few systems,
shows the dominance order and reflection action, and prints the row
decomposition whose abelian/Heisenberg structure drives everything else.
"""

from hessenpave import (
    apply,
    build_root_system,
    dominance_leq,
    enumerate_weyl,
    format_root,
    format_word,
    inversion_set,
    rows,
    simple_reflection,
)

for lie_type, rank in [("A", 2), ("B", 2), ("C", 2), ("D", 4)]:
    rs = build_root_system(lie_type, rank)
    print(f"== {lie_type}{rank}: {rs.num_positive} positive roots ==")
    print("  positives:", ", ".join(format_root(r) for r in rs.positive_roots))

    dec = rows(rs)
    for i, row in enumerate(dec.rows, start=1):
        members = ", ".join(sorted(format_root(r) for r in row)) or "(empty)"
        extra = ""
        if dec.type_C_long_roots and dec.type_C_long_roots[i - 1]:
            extra = f"   [Heisenberg, long root {dec.type_C_long_roots[i-1]}]"
        print(f"  row {i}: {members}{extra}")
    if dec.type_D_parts:
        p0, p1, p2 = dec.type_D_parts[0]
        print("  row 1 fork split:",
              [sorted(map(format_root, p)) for p in (p0, p1, p2)])
    print()

a2 = build_root_system("A", 2)
s1 = simple_reflection(a2, 1)
print("s1 acts on A2 simples:",
      format_root(apply(s1, a2.simple_roots[0])), "and",
      format_root(apply(s1, a2.simple_roots[1])))
theta = a2.root((1, 1))
print("dominance: alpha1 <= alpha1+alpha2 ?",
      dominance_leq(a2, a2.simple_roots[0], theta))

print("\nWeyl group of B2, by length with inversion sets:")
for w in enumerate_weyl(build_root_system("B", 2)):
    inv = ", ".join(sorted(format_root(r) for r in inversion_set(w)))
    print(f"  word={format_word(w) or '(identity)':8}  length={w.length}  "
          f"inversions: {inv or '(none)'}")
