"""Regularized multinomial coefficients on the full signed lattice.

The value attached to a point (x1, ..., xd) is

    lim_{h->0+}  Gamma(x1+...+xd+1+h) / prod_i Gamma(xi+1+h)

evaluated exactly through the pole-order algebra of HLimitValue.  On the
non-negative orthant this reproduces the ordinary multinomial numbers; on
the rest of the integer lattice it yields d additional finite "pyramid"
regions (one per axis) separated by a set of exact zeros, d+1 connected
regions in total.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .gammakernel import (
    HLimitValue,
    gamma_leading,
    log_gamma_signed,
    nearest_integer,
)

FINITE = "Finite"
ZERO_BY_POLES = "ZeroByPoles"
DIVERGENT = "Divergent"

NONNEGATIVE = "Nonnegative"
NEGATIVE_PYRAMID = "NegativePyramid"
ZERO_SET = "ZeroSet"
OFF_LATTICE = "OffLattice"

LAYER_ENTRY_CAP = 10_000_000
SCAN_POINT_CAP = 10_000_000


class DivergentValueError(ArithmeticError):
    """A divergent lattice value entered a computation needing a float."""


class ResourceLimitError(RuntimeError):
    """A lattice scan or layer would exceed its configured size cap."""


@dataclass(frozen=True)
class RegularizedValue:
    """Tri-state regularized coefficient: finite, zero-by-poles, divergent."""

    kind: str
    value: float = None

    @classmethod
    def from_limit(cls, limit: HLimitValue) -> "RegularizedValue":
        if limit.order > 0:
            return cls(DIVERGENT)
        if limit.order < 0:
            return cls(ZERO_BY_POLES)
        return cls(FINITE, limit.mantissa)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def finite_or_zero(self) -> float:
        """The float value, with zero-by-poles counting as exact 0."""
        if self.kind == DIVERGENT:
            raise DivergentValueError("divergent value has no float representation")
        return self.value if self.kind == FINITE else 0.0

    def to_json_obj(self):
        obj = {"kind": self.kind}
        obj["value"] = self.value if self.kind == FINITE else (0.0 if self.kind == ZERO_BY_POLES else None)
        return obj


@dataclass(frozen=True)
class RegionTag:
    """Location of a lattice point in the pyramid decomposition."""

    kind: str
    axis: int = None

    def to_json_obj(self):
        return {"tag": self.kind, "axis": self.axis}


def _validate_point(coords: Sequence[float]) -> Tuple[float, ...]:
    pt = tuple(float(c) for c in coords)
    if len(pt) < 2:
        raise ValueError("a lattice point needs at least two coordinates")
    if not all(math.isfinite(c) for c in pt):
        raise ValueError(f"coordinates must be finite, got {pt!r}")
    return pt


def point_value(coords: Sequence[float]) -> RegularizedValue:
    """Regularized coefficient at an arbitrary real lattice point.

    Pole counting is exact: the result is Divergent only when the
    numerator pole survives all denominator poles, which cannot happen at
    integer points.
    """
    pt = _validate_point(coords)
    limit = gamma_leading(math.fsum(pt) + 1.0)
    for c in pt:
        limit = limit / gamma_leading(c + 1.0)
    return RegularizedValue.from_limit(limit)


def multinomial_coefficient(coords: Sequence[float]) -> float:
    """(sum xi)! / prod(xi!) for points with every coordinate > -1.

    Integer inputs take an exact factorial path; everything else goes
    through signed log-Gamma.  Points with a coordinate <= -1 are outside
    the domain (use point_value, which regularizes the poles).
    """
    pt = _validate_point(coords)
    if any(c <= -1.0 for c in pt):
        raise ValueError("coordinates must all exceed -1; use point_value instead")
    ints = [nearest_integer(c) for c in pt]
    if all(i is not None for i in ints):
        num = math.factorial(sum(ints))
        den = 1
        for i in ints:
            den *= math.factorial(i)
        return float(num // den)
    total = math.fsum(pt) + 1.0
    num = log_gamma_signed(total)  # PoleError here means the value diverges
    log_den = math.fsum(math.lgamma(c + 1.0) for c in pt)
    return num.sign * math.exp(num.log_magnitude - log_den)


def recurrence_residual(coords: Sequence[float]) -> float:
    """f(p) minus the sum of f at the d unit decrements of p.

    Zero (to rounding) wherever the construction law holds; zero-by-poles
    participants count as exact 0, divergent participants raise.
    """
    pt = _validate_point(coords)
    center = point_value(pt).finite_or_zero()
    parents = []
    for i in range(len(pt)):
        stepped = pt[:i] + (pt[i] - 1.0,) + pt[i + 1 :]
        parents.append(point_value(stepped).finite_or_zero())
    return center - math.fsum(parents)


def classify_region(coords: Sequence[float]) -> RegionTag:
    """Assign an integer point to its pyramid, the zero set, or off-lattice."""
    pt = _validate_point(coords)
    ints = [nearest_integer(c) for c in pt]
    if any(i is None for i in ints):
        return RegionTag(OFF_LATTICE)
    if all(i >= 0 for i in ints):
        return RegionTag(NONNEGATIVE)
    value = point_value(pt)
    if value.kind == ZERO_BY_POLES:
        return RegionTag(ZERO_SET)
    # finite nonzero off the first orthant: exactly one coordinate <= -1
    negatives = [i for i, v in enumerate(ints) if v <= -1]
    assert len(negatives) == 1, "pole counting guarantees a unique negative axis"
    return RegionTag(NEGATIVE_PYRAMID, negatives[0])


def _compositions_lex(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions_lex(total - first, parts - 1):
            yield (first,) + rest


@dataclass
class LayerTable:
    """All compositions of n into dim non-negative parts with coefficients.

    Entries are kept in lexicographic composition order; the value sum
    equals dim**n (set every variable to 1 in the expansion).
    """

    n: int
    dim: int
    entries: "dict[Tuple[int, ...], float]"

    def to_records(self):
        return [{"composition": list(c), "value": v} for c, v in self.entries.items()]

    def to_csv(self) -> str:
        header = ",".join([f"c{i + 1}" for i in range(self.dim)] + ["value"])
        lines = [header]
        for comp, value in self.entries.items():
            lines.append(",".join([str(c) for c in comp] + [format(value, ".17g")]))
        return "\n".join(lines) + "\n"


def generate_layer(dim: int, n: int, max_entries: int = LAYER_ENTRY_CAP) -> LayerTable:
    """Layer n of the dim-dimensional pyramid, in lexicographic order."""
    if dim < 2:
        raise ValueError("dim must be at least 2")
    if n < 0:
        raise ValueError("n must be non-negative")
    count = math.comb(n + dim - 1, dim - 1)
    if count > max_entries:
        raise ResourceLimitError(
            f"layer would hold {count} entries, above the cap of {max_entries}"
        )
    entries = {}
    for comp in _compositions_lex(n, dim):
        entries[comp] = multinomial_coefficient(comp)
    return LayerTable(n=n, dim=dim, entries=entries)


def _tagged_members(dim: int, window: int):
    """Finite-nonzero points keyed by their region tag.

    The pyramids touch the non-negative orthant along whole axis columns
    (f is 1 on every point (0,..,0,-m,0,..,0) chain), so a raw union of
    the finite set is one connected blob.  Components are therefore
    counted per region tag, which is what the pyramid decomposition means.
    """
    groups = {}
    for tup in itertools.product(range(-window, window + 1), repeat=dim):
        tag = classify_region(tup)
        if tag.kind in (NONNEGATIVE, NEGATIVE_PYRAMID):
            groups.setdefault(tag, set()).add(tup)
    return groups


def _count_components(members) -> int:
    seen = set()
    count = 0
    for start in members:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            for axis in range(len(node)):
                for step in (-1, 1):
                    nbr = node[:axis] + (node[axis] + step,) + node[axis + 1 :]
                    if nbr in members and nbr not in seen:
                        seen.add(nbr)
                        stack.append(nbr)
    return count


def _scan_guard(dim: int, window: int, min_window: int, max_points: int) -> None:
    if not 2 <= dim <= 5:
        raise ValueError("dim must lie in [2, 5] for a window scan")
    if window < min_window:
        raise ValueError(f"window must be at least {min_window}")
    points = (2 * window + 1) ** dim
    if points > max_points:
        raise ResourceLimitError(
            f"window scan would touch {points} points, above the cap of {max_points}"
        )


def region_component_count(dim: int, window: int, max_points: int = SCAN_POINT_CAP) -> int:
    """Number of connected finite-nonzero regions in the [-W, W]^dim box.

    Adjacency is a single +-1 step along one axis (the construction-law
    stencil) restricted to points of the same region tag.  The count is
    dim + 1 once the window clears the region boundaries: the non-negative
    hyper-pyramid plus one mirrored pyramid per axis.
    """
    _scan_guard(dim, window, dim + 2, max_points)
    groups = _tagged_members(dim, window)
    return sum(_count_components(members) for members in groups.values())


def region_map(dim: int, window: int, max_points: int = SCAN_POINT_CAP):
    """Tags for every integer point in the window plus the component count."""
    _scan_guard(dim, window, 1, max_points)
    tagged = []
    groups = {}
    for tup in itertools.product(range(-window, window + 1), repeat=dim):
        tag = classify_region(tup)
        tagged.append((tup, tag))
        if tag.kind in (NONNEGATIVE, NEGATIVE_PYRAMID):
            groups.setdefault(tag, set()).add(tup)
    components = sum(_count_components(members) for members in groups.values())
    return tagged, components
