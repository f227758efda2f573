#!/usr/bin/env python3
"""Reverse bounds: certificates turn into upper bounds on ||A|| - w(A).

In general w(A) can be as small as ||A||/2. But once A is certified to live
in a disk ||A - lambda I|| <= r (or, equivalently, a sector pair makes
(A* - conj(varphi) I)(phi I - A) accretive), the gap between norm and radius
is bounded. This script builds certificates for sample matrices, evaluates
every applicable bound, and prints the slacks. A nonnegative slack confirms
the bound on that instance.
"""

import numpy as np

from numrad import (
    DiskCertificate,
    SectorPair,
    check_disk,
    gen_segment_instance,
    ginibre,
    operator_norm,
    optimize_lambda,
    verify_all,
)


def show(title, reports):
    print(f"\n{title}")
    print(f"  {'id':<6} {'hyp':<5} {'lhs':>12} {'rhs':>12} {'slack':>12}")
    for rep in reports:
        print(
            f"  {rep.inequality_id:<6} {str(rep.hypothesis_ok):<5} "
            f"{rep.lhs:12.6f} {rep.rhs:12.6f} {rep.slack:12.6f}"
        )


# A perturbed scalar matrix sits in a small disk around its scalar part, so
# the certificate is immediate and the bounds are tight.
rng = np.random.default_rng(7)
c = ginibre(4, rng)
c /= operator_norm(c)
t = (1.0 + 0.5j) * np.eye(4) + 0.3 * c
cert = DiskCertificate(lam=1.0 + 0.5j, r=0.3)
ok, measured = check_disk(t, cert)
print(f"disk check: measured distance {measured:.4f} <= r = {cert.r} -> {ok}")
show("disk certificate (lambda = 1 + 0.5i, r = 0.3)", verify_all(t, [cert]))

# A Hermitian matrix with spectrum inside [m, M] satisfies the sector
# hypothesis for the real pair (m, M); the segment bounds apply as well.
a, pair = gen_segment_instance(1.0, 4.0, 4, seed=3)
show("segment pair (m, M) = (1, 4) on a Hermitian instance", verify_all(a, [pair]))

# When no certificate is known, fit one: optimize_lambda searches for the
# center that approximately minimizes ||T - lambda I||.
g = ginibre(3, rng)
g = g / operator_norm(g) + 1.5 * np.eye(3)
fitted = optimize_lambda(g)
print(f"\nfitted certificate: lambda = {fitted.lam:.4f}, r = {fitted.r:.4f}")
show("auto-fitted disk certificate", verify_all(g, [fitted]))

# Hypothesis failure is data, not an error: a certificate that does not hold
# simply marks every report hypothesis_ok = False.
bad = DiskCertificate(lam=4.0, r=0.1)
reports = verify_all(g, [bad])
print(f"\nbad certificate: all hypotheses false -> {all(not r.hypothesis_ok for r in reports)}")
