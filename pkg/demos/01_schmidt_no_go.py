#!/usr/bin/env python3
"""Two small graphs with no commutativity gadget of either kind.

Finding a pair of non-identity endomorphisms with disconnected supports is
enough: the pair induces a genuinely quantum (2-dimensional, noncommuting)
endomorphism, and composing it with any would-be gadget morphism produces a
contradiction.  This script hunts for such pairs on the diamond (a 4-cycle
with a chord) and on the 6-cycle with a long chord, then builds and checks
the 2-dimensional representation each pair generates.
"""

from qgadget import (build_family, commutator_norm, find_schmidt_pair, nogo_verdict,
                     schmidt_rep, schmidt_witness, support, verify_rep)


def examine(spec: str):
    g = build_family(spec)
    print(f"=== {spec}: {g.n} vertices, {g.num_edges} edges")
    cert = find_schmidt_pair(g, oracular=True)
    print(f"  endomorphism pair f={cert.f.mapping} g={cert.g.mapping}")
    print(f"  supports {sorted(support(cert.f))} and {sorted(support(cert.g))} "
          f"are disconnected")

    rep = schmidt_rep(g, cert.f, cert.g)
    report = verify_rep(rep, oracular=True)
    w1, w2 = schmidt_witness(cert.f, cert.g)
    print(f"  2-dim representation verifies (max residual {report.max_residual:.2e})")
    print(f"  witness entries {w1} and {w2} have commutator norm "
          f"{commutator_norm(rep, w1, w2):.3f}")

    verdict = nogo_verdict(g)
    print(f"  verdict: {verdict.kind}")
    for note in verdict.notes:
        print(f"    {note}")
    print()


if __name__ == "__main__":
    examine("diamond")
    examine("dprime")
    # contrast: the 5-cycle has only automorphisms, so the search finds nothing
    verdict = nogo_verdict(build_family("C:5"))
    print(f"=== C:5 verdict: {verdict.kind} (no pair exists; nothing is ruled out)")
