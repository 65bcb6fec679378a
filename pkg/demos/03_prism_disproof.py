#!/usr/bin/env python3
"""Why the triangular-prism trick does not extend to longer odd cycles.

The prism (3-cycle box an edge) is a commutativity gadget for the triangle.
The natural generalisation -- (2n+1)-cycle box a path -- fails for n >= 2,
and the failure is fully mechanisable: candidate distinguished pairs that sit
too close violate a walk-distance bound, and all remaining pairs are killed
by an explicit 2-dimensional representation, lifted from the path factor,
whose entries at the distinguished pair refuse to commute.
"""

from collections import Counter

from qgadget import disprove_box_path_gadget


def main():
    for k in (1, 3, 4):
        report = disprove_box_path_gadget(2, k)
        kinds = Counter()
        for cls in report.classes:
            kinds[cls.refutation.kind] += cls.members
        print(f"=== C:5 box P:{k} ({report.graph_label})")
        print(f"  {report.total_pairs} candidate pairs in {len(report.classes)} "
              f"symmetry classes; all refuted: {report.all_refuted}")
        for kind, count in sorted(kinds.items()):
            print(f"    {kind}: {count} pairs")
        for cls in report.classes:
            if cls.refutation.kind == "noncommuting_witness":
                det = cls.refutation.detail
                print(f"  sample witness: path slots ({det['s0']},{det['t0']}), "
                      f"entries {det['witness']}, commutator norm "
                      f"{det['commutator_norm']:.3f}")
                break
        print()


if __name__ == "__main__":
    main()
