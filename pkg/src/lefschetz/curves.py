"""Topological types of essential simple closed curves, and curves themselves.

Up to orientation-preserving homeomorphism, a homologically essential simple
closed curve on a surface of genus g with b boundary circles is either

  * non-separating (one type, needs g >= 1), or
  * separating, classified by the unordered pair of (genus, boundary-count)
    data of its two complementary sides.  Both sides must contain at least
    one boundary circle of the ambient surface, otherwise the curve bounds
    and is null-homologous.

A concrete curve is carried at the resolution (type, homology class, label).
Non-separating curves have primitive classes with nonzero symplectic part;
separating curves have the class of a boundary subset: the sum of the d_j
over the circles on one side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import InputError
from .homology import (
    SurfaceSpec,
    Vector,
    in_radical,
    is_essential,
    vec_gcd,
)


@dataclass(frozen=True)
class CurveClass:
    """Homeomorphism type of an essential simple closed curve.

    ``kind`` is "nonsep" or "sep"; separating types carry the normalized
    unordered pair of sides, ``sides[0] <= sides[1]`` lexicographically.
    """

    kind: str
    sides: tuple[tuple[int, int], tuple[int, int]] | None = None

    def __post_init__(self) -> None:
        if self.kind == "nonsep":
            if self.sides is not None:
                raise InputError("non-separating type carries no side data")
        elif self.kind == "sep":
            if self.sides is None:
                raise InputError("separating type needs side data")
            (g1, b1), (g2, b2) = self.sides
            if min(g1, g2) < 0 or min(b1, b2) < 1:
                raise InputError(
                    f"separating sides {self.sides}: each side needs >= 1 "
                    "boundary circle (else the curve is null-homologous)")
            if self.sides[0] > self.sides[1]:
                raise InputError("separating sides must be normalized")
        else:
            raise InputError(f"unknown curve kind {self.kind!r}")

    @staticmethod
    def nonseparating() -> "CurveClass":
        return CurveClass("nonsep")

    @staticmethod
    def separating(side_a: tuple[int, int], side_b: tuple[int, int]) -> "CurveClass":
        lo, hi = sorted((tuple(side_a), tuple(side_b)))
        return CurveClass("sep", (lo, hi))

    @property
    def is_separating(self) -> bool:
        return self.kind == "sep"

    def validate_for(self, surface: SurfaceSpec) -> None:
        if self.kind == "nonsep":
            if surface.genus < 1:
                raise InputError(f"no non-separating curve on {surface}")
            return
        (g1, b1), (g2, b2) = self.sides
        if g1 + g2 != surface.genus or b1 + b2 != surface.boundary:
            raise InputError(f"sides {self.sides} do not split {surface}")

    def sort_key(self) -> tuple:
        if self.kind == "nonsep":
            return (0,)
        return (1, self.sides)

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        if self.kind == "nonsep":
            return "nonsep"
        (g1, b1), (g2, b2) = self.sides
        return f"sep[({g1},{b1})|({g2},{b2})]"


def enumerate_classes(surface: SurfaceSpec) -> tuple[CurveClass, ...]:
    """All curve types on the surface, duplicate-free, canonically sorted."""
    out: list[CurveClass] = []
    if surface.genus >= 1:
        out.append(CurveClass.nonseparating())
    g, b = surface.genus, surface.boundary
    seen = set()
    for g1 in range(g + 1):
        for b1 in range(1, b):
            side_a = (g1, b1)
            side_b = (g - g1, b - b1)
            cls = CurveClass.separating(side_a, side_b)
            if cls not in seen:
                seen.add(cls)
                out.append(cls)
    out.sort(key=CurveClass.sort_key)
    return tuple(out)


def class_count(surface: SurfaceSpec) -> int:
    """Closed-form size of the curve-type census.

    For b >= 1 this is floor(b/2) when g = 0 and floor((gb - g + b)/2) + 1
    when g >= 1.  A closed surface has a single type when g >= 1 (the
    non-separating one; every separating curve bounds) and none on a sphere.
    """
    g, b = surface.genus, surface.boundary
    if b == 0:
        return 1 if g >= 1 else 0
    if g == 0:
        return b // 2
    return (g * b - g + b) // 2 + 1


# ---------------------------------------------------------------------------
# boundary subsets and their classes
# ---------------------------------------------------------------------------

def boundary_subset_class(surface: SurfaceSpec, subset: frozenset[int]) -> Vector:
    """Class of the sum of boundary circles in ``subset`` (1-based numbers).

    This is the homology class of a curve that separates off exactly those
    circles.  The subset must be proper and nonempty.
    """
    b = surface.boundary
    if not subset or not subset <= frozenset(range(1, b + 1)):
        raise InputError(f"bad boundary subset {sorted(subset)} for {surface}")
    if len(subset) == b:
        raise InputError("a curve bounding all of the boundary is null-homologous")
    coords = [0] * surface.rank
    for j in subset:
        if j < b:
            coords[surface.delta_index(j)] += 1
        else:
            for k in range(1, b):
                coords[surface.delta_index(k)] -= 1
    return tuple(coords)


def subset_from_class(surface: SurfaceSpec, hom: Vector) -> frozenset[int] | None:
    """Recover the boundary subset whose class is ``hom``, or None.

    Only radical classes of indicator shape qualify: entries all in {0, 1}
    (last circle outside the subset) or all in {0, -1} (last circle inside).
    """
    if len(hom) != surface.rank or not in_radical(surface, hom):
        return None
    b = surface.boundary
    if b < 2:
        return None
    tail = hom[2 * surface.genus:]
    vals = set(tail)
    if vals <= {0, 1} and 1 in vals:
        subset = frozenset(j for j in range(1, b) if tail[j - 1] == 1)
    elif vals <= {0, -1} and -1 in vals:
        subset = frozenset(j for j in range(1, b) if tail[j - 1] == 0) | {b}
    else:
        return None
    if not subset or len(subset) == b:
        return None
    return subset


@dataclass(frozen=True)
class Curve:
    """Simple closed curve at (type, homology) resolution.

    Labels are provenance metadata and are ignored by equality.
    """

    surface: SurfaceSpec
    cls: CurveClass
    hom: Vector
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "hom", tuple(self.hom))
        if len(self.hom) != self.surface.rank:
            raise InputError(
                f"class of length {len(self.hom)} on {self.surface} "
                f"(rank {self.surface.rank})")
        if not is_essential(self.hom):
            raise InputError("curve class must be essential (nonzero)")
        self.cls.validate_for(self.surface)
        if self.cls.kind == "nonsep":
            if vec_gcd(self.hom) != 1:
                raise InputError("non-separating curves have primitive class")
            if in_radical(self.surface, self.hom):
                raise InputError(
                    "a curve with boundary-type class cannot be non-separating")
        else:
            subset = subset_from_class(self.surface, self.hom)
            if subset is None:
                raise InputError(
                    f"separating class {self.hom} is not a boundary-subset class")
            (g1, b1), (g2, b2) = self.cls.sides
            t = len(subset)
            if sorted((t, self.surface.boundary - t)) != sorted((b1, b2)):
                raise InputError(
                    f"subset size {t} inconsistent with sides {self.cls.sides}")

    def boundary_subset(self) -> frozenset[int] | None:
        """For separating curves, the circles on the side the class sums over."""
        return subset_from_class(self.surface, self.hom)

    def relabel(self, label: str) -> "Curve":
        return Curve(self.surface, self.cls, self.hom, label)

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        name = self.label or "curve"
        return f"{name}:{self.cls}{list(self.hom)}"


def nonseparating_curve(surface: SurfaceSpec, hom: Vector, label: str = "") -> Curve:
    return Curve(surface, CurveClass.nonseparating(), hom, label)


def separating_curve(
    surface: SurfaceSpec,
    subset: frozenset[int] | set[int],
    genus_split: tuple[int, int],
    label: str = "",
) -> Curve:
    """Separating curve cutting off ``subset`` with the given genus on that side."""
    subset = frozenset(subset)
    hom = boundary_subset_class(surface, subset)
    g_in, g_out = genus_split
    cls = CurveClass.separating(
        (g_in, len(subset)), (g_out, surface.boundary - len(subset)))
    return Curve(surface, cls, hom, label)
