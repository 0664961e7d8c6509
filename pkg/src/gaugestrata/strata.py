"""Orbit-type sets and stratification graphs for concrete bundles.

Combines label enumeration with the per-manifold solvability criteria to
decide which Howe-subgroup labels occur as orbit types of the pointed
gauge orbit space of a given SU(n)-bundle, and restricts the subgroup
order to the present labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import diophantine as dio
from .labels import HasseDiagram, HoweLabel, descendants, enumerate_labels


class Manifold(str, Enum):
    S4 = "s4"
    S2XS2 = "s2xs2"
    T4 = "t4"
    CP2 = "cp2"
    DIM2 = "dim2"
    DIM3 = "dim3"


_CRITERION = {
    Manifold.S4: "linear-gcd",
    Manifold.S2XS2: "bilinear-gcd",
    Manifold.T4: "bilinear-gcd",
    Manifold.CP2: "quadratic-oracle",
    Manifold.DIM2: "dim<4-trivial",
    Manifold.DIM3: "dim<4-trivial",
}


@dataclass(frozen=True)
class BundleSpec:
    """A principal SU(n)-bundle over one of the supported base manifolds.

    `c2` is the integer Chern number c_P (second Chern class in units of
    the generator); it must be 0 for dim-2/3 bases, where every bundle is
    trivial.
    """

    n: int
    manifold: Manifold
    c2: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        if self.manifold in (Manifold.DIM2, Manifold.DIM3) and self.c2 != 0:
            raise ValueError(
                f"bundles over {self.manifold.value} are trivial; c2 must be 0, got {self.c2}")


@dataclass(frozen=True)
class StratumAnnotation:
    label: HoweLabel
    d_s4: int
    d_s2xs2: int
    present: bool
    criterion: str


def _divides(d: int, c: int) -> bool:
    # gcd(empty) = 0 encodes "trivial bundle only": 0 divides only 0.
    return c == 0 if d == 0 else c % d == 0


def annotate(label: HoweLabel, manifold: Manifold, c2: int,
             budget: int | None = None) -> StratumAnnotation:
    """Presence verdict plus divisor data for a single label."""
    ds4 = dio.d_s4(label)
    ds2 = dio.d_s2xs2(label)
    if manifold in (Manifold.DIM2, Manifold.DIM3):
        present = True
    elif manifold is Manifold.S4:
        present = _divides(ds4, c2)
    elif manifold in (Manifold.S2XS2, Manifold.T4):
        present = _divides(ds2, c2)
    else:
        present = dio.cp2_solvable(label, c2, budget=budget)
    return StratumAnnotation(label=label, d_s4=ds4, d_s2xs2=ds2,
                             present=present, criterion=_CRITERION[manifold])


def orbit_types(spec: BundleSpec, budget: int | None = None) -> list[StratumAnnotation]:
    """Annotations for every label of SU(spec.n), sorted by label."""
    return [annotate(label, spec.manifold, spec.c2, budget=budget)
            for label in enumerate_labels(spec.n)]


def type_count(spec: BundleSpec, budget: int | None = None) -> int:
    """Number of orbit types present for the bundle."""
    return sum(1 for ann in orbit_types(spec, budget=budget) if ann.present)


def stratification_graph(spec: BundleSpec, budget: int | None = None) -> HasseDiagram:
    """Covering relation of the induced order on the present labels.

    Presence is not monotone in the subgroup order, so the covering
    relation is recomputed on the subset: (J, J') is an edge iff J < J'
    and no present label lies strictly between.
    """
    present = [ann.label for ann in orbit_types(spec, budget=budget) if ann.present]
    edges = set()
    for a in present:
        above = descendants(a)
        for b in present:
            if b not in above:
                continue
            if any(x != a and x != b and x in above and b in descendants(x)
                   for x in present):
                continue
            edges.add((a, b))
    return HasseDiagram(n=spec.n, nodes=frozenset(present), edges=frozenset(edges))
