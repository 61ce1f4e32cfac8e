"""Resource caps for the exponential-time computations.

Every cap is overridable at call sites and from the CLI.  The defaults keep
desk-scale runs comfortable: graph enumeration up to 7 vertices, subset sums
up to 2^20 terms, partition-based polynomials up to 10 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    enum_n: int = 7        # isomorphism-class enumeration and canonical forms
    subset_n: int = 20     # vertex-subset sums, 2^n terms
    subset_m: int = 20     # edge-subset sums, 2^m terms
    partition_n: int = 10  # set-partition based polynomials


DEFAULT_CAPS = Caps()
