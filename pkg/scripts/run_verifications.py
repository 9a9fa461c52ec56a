#!/usr/bin/env python3
"""Sweep the built-in catalog and verify every structural identity.

For each (Lie algebra, module, coefficient algebra) triple this runs the
component-commutation checks, the lift-composition checks, the chain-map
lifting checks, the diagram identities, and the per-degree exactness of the
class-restriction sequence, printing a dimension table and timing for each.

Usage: python scripts/run_verifications.py [--seed N] [--trials N]
"""

import argparse
import sys
import time
from pathlib import Path
from random import Random

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from currentcoh.algebras import catalog, catalog_rep
from currentcoh.cohomology import CurrentCohomology, HypothesisFailed
from currentcoh.lifts import (
    COMPOSITION_CASES,
    eye_base,
    homotopy_chain_map,
    verify_chain_map_lift,
    verify_component_commutation,
    verify_composition_preservation,
)

TRIPLES = [
    ("abelian1", "trivial", "dual_numbers"),
    ("abelian2", "trivial", "split2"),
    ("solvable2", "trivial", "dual_numbers"),
    ("solvable2", "trivial", "split2"),
    ("heisenberg3", "trivial", "dual_numbers"),
    ("sl2", "adjoint", "dual_numbers"),
    ("sl2", "adjoint", "split2"),
    ("sl2", "natural", "dual_numbers"),
    ("sl2", "trivial", "split2"),
    ("sl2", "adjoint", "truncated_poly3"),
]


def resolve(g_name, rep_name, s_name):
    if g_name.startswith("abelian"):
        g = catalog("abelian", int(g_name[len("abelian"):]))
    else:
        g = catalog(g_name)
    if s_name.startswith("truncated_poly"):
        s = catalog("truncated_poly", int(s_name[len("truncated_poly"):]))
    else:
        s = catalog(s_name)
    return g, catalog_rep(rep_name, g), s


def run_triple(g_name, rep_name, s_name, seed, trials):
    g, rep, s = resolve(g_name, rep_name, s_name)
    print(f"\n=== ({g_name}, {rep_name}, {s_name}) "
          f"[current dim {g.dim * s.dim}] ===")
    t0 = time.perf_counter()
    engine = CurrentCohomology(g, s, rep)
    failures = []

    report = verify_component_commutation(engine.setup)
    failures += report.failures()
    print(f"  component commutation: {'ok' if report.ok else 'FAIL'}")

    for case in COMPOSITION_CASES:
        rep_c = verify_composition_preservation(
            engine.ctx, case, trials=trials, seed=seed,
            degrees=(1, 2), module_dims=(rep.module_dim,) * 3,
        )
        failures += rep_c.failures()
    print(f"  lift composition ({len(COMPOSITION_CASES)} cases x {trials}): "
          f"{'ok' if not failures else 'FAIL'}")

    rng = Random(seed)
    for k in range(3):
        fam = homotopy_chain_map(rep, rng, scalar=rng.randint(-2, 2))
        failures += verify_chain_map_lift(engine.setup, fam).failures()
    ident = {p: eye_base(engine.base.space(p).dim) for p in range(g.dim + 1)}
    failures += verify_chain_map_lift(engine.setup, ident).failures()
    print("  chain map lifting: " + ("ok" if not failures else "FAIL"))

    failures += engine.verify_alpha_diagram().failures()
    failures += engine.verify_zeta_psi().failures()
    failures += engine.verify_naturality(ident).failures()
    print("  diagrams and naturality: " + ("ok" if not failures else "FAIL"))

    ses = engine.verify_ses()
    print(ses.summary())

    try:
        collapse = engine.verify_vanishing_collapse()
        print("  vanishing collapse: " + ("ok" if collapse.ok else "FAIL"))
        if not collapse.ok:
            failures += collapse.failures()
    except HypothesisFailed as exc:
        print(f"  vanishing collapse: inapplicable ({exc})")

    elapsed = time.perf_counter() - t0
    print(f"  elapsed: {elapsed:.2f}s")
    return ses.ok and not failures


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--trials", type=int, default=25)
    args = parser.parse_args()
    overall = True
    start = time.perf_counter()
    for g_name, rep_name, s_name in TRIPLES:
        overall = run_triple(g_name, rep_name, s_name, args.seed, args.trials) \
            and overall
    print(f"\ntotal: {time.perf_counter() - start:.2f}s, "
          + ("all identities verified" if overall else "FAILURES above"))
    return 0 if overall else 1


if __name__ == "__main__":
    sys.exit(main())
