"""Gluing cusp models into an open curve and certifying power obstructions.

The glued curve carries one cusp model z1^k = z2^(k+1) at each integer
center k = 2, 3, ..., implanted inside the disk of radius 1/3 around k.
A global section is the data of one pullback germ per site, pinned down
only modulo the ideal of the surgery, which at site k is the (k-1)-st
power of the maximal ideal.  Everything here is exact: disk disjointness
is rational arithmetic, power decisions are semigroup membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .curve import CuspCurve
from .errors import NoWitnessInRange
from .germ import Decision, LaurentGerm, aggregate_decisions

_DEFAULT_RADIUS = Fraction(1, 3)


class Site:
    """One surgery site: a cusp model z1^k = z2^(k+1) centered at a base point."""

    __slots__ = ("index", "center", "radius", "curve")

    def __init__(self, index: int, center: Fraction | int | None = None,
                 radius: Fraction = _DEFAULT_RADIUS):
        if index < 2:
            raise ValueError(f"site index must be >= 2, got {index}")
        if radius <= 0:
            raise ValueError(f"disk radius must be positive, got {radius}")
        self.index = index
        self.center = Fraction(index if center is None else center)
        self.radius = Fraction(radius)
        self.curve = CuspCurve(index, index + 1)

    @classmethod
    def standard(cls, k: int) -> "Site":
        """The site at center k with radius 1/3 and local model z1^k = z2^(k+1)."""
        return cls(k)

    def ideal_exponent(self) -> int:
        """Least pullback exponent in the surgery ideal: k(k-1), which is also
        the conductor of <k, k+1>."""
        return self.index * (self.index - 1)

    def ideal_contains(self, e: int) -> bool:
        """Is t^e the pullback of an element of the (k-1)-st maximal-ideal power?

        Such pullback exponents are (k-1)-fold sums of {k, k+1} plus semigroup
        members: e = k(k-1) + j + s with 0 <= j <= k-1, s in <k, k+1>.  By the
        weak-generation property of <k, k+1> this set is exactly [k(k-1), oo),
        but the membership is checked through the representation.
        """
        k = self.index
        base = self.ideal_exponent()
        s = self.curve.semigroup
        return any(s.contains(e - base - j) for j in range(0, k))

    def decision_for_power(self, germ: LaurentGerm, n: int) -> Decision:
        return self.curve.is_holomorphic_at_cusp(germ ** n)

    def __repr__(self) -> str:
        return f"Site(index={self.index}, center={self.center}, radius={self.radius})"


def validate_star(sites: Sequence[Site]) -> bool:
    """Closed disks pairwise disjoint, and no disk reaches another site's center.

    Exact rational arithmetic on the base line; the standard layout
    (integer centers, radius 1/3) passes because gaps of 1 exceed 2/3.
    """
    for i, a in enumerate(sites):
        for b in sites[i + 1:]:
            gap = abs(a.center - b.center)
            if gap <= a.radius + b.radius:
                return False
            if gap <= a.radius or gap <= b.radius:
                return False
    return True


class SurgeryCurve:
    """The open curve with cusp models implanted at sites 2..maxIndex."""

    __slots__ = ("sites", "max_index")

    def __init__(self, sites: Iterable[Site]):
        site_list = list(sites)
        if not site_list:
            raise ValueError("a surgery curve needs at least one site")
        indices = [s.index for s in site_list]
        if indices != list(range(2, 2 + len(indices))):
            raise ValueError(f"site indices must be exactly 2..maxIndex, got {indices}")
        self.sites = tuple(site_list)
        self.max_index = indices[-1]

    @classmethod
    def build_standard(cls, max_k: int) -> "SurgeryCurve":
        """Sites 2..max_k in standard position; the disk layout is validated."""
        if max_k < 2:
            raise ValueError(f"maxK must be >= 2, got {max_k}")
        curve = cls(Site.standard(k) for k in range(2, max_k + 1))
        if not validate_star(curve.sites):
            raise ValueError("surgery disks overlap")  # unreachable for standard layout
        return curve

    def site(self, k: int) -> Site:
        if not 2 <= k <= self.max_index:
            raise ValueError(f"no site with index {k}; sites run 2..{self.max_index}")
        return self.sites[k - 2]

    def __repr__(self) -> str:
        return f"SurgeryCurve(maxIndex={self.max_index})"


@dataclass(frozen=True)
class GlobalSection:
    """One pullback germ per site; the germ is the local normal form of a
    single continuous function on the glued curve, known modulo the ideal."""

    per_site: Mapping[int, LaurentGerm]

    def germ_at(self, k: int) -> LaurentGerm:
        try:
            return self.per_site[k]
        except KeyError:
            raise ValueError(f"section has no germ at site {k}") from None


def make_global_rado(
    curve: SurgeryCurve,
    explicit_tails: Mapping[int, LaurentGerm] | None = None,
) -> GlobalSection:
    """The canonical continuous section: t at each site, modulo the ideal.

    By default the ideal ambiguity stays symbolic, t + O(t^(k(k-1))).  An
    explicit tail germ may be supplied per site; every stored exponent must
    lie in the surgery ideal, and an inexact tail must start at or beyond
    the ideal exponent.
    """
    tails = dict(explicit_tails) if explicit_tails else {}
    unknown_sites = set(tails) - {s.index for s in curve.sites}
    if unknown_sites:
        raise ValueError(f"explicit tails given for unknown sites {sorted(unknown_sites)}")
    per: dict[int, LaurentGerm] = {}
    t = LaurentGerm.monomial(1)
    for site in curve.sites:
        k = site.index
        tail = tails.get(k)
        if tail is None:
            per[k] = t + LaurentGerm.tail_only(site.ideal_exponent())
            continue
        for e in tail.exponents():
            if not site.ideal_contains(e):
                raise ValueError(
                    f"tail exponent {e} at site {k} is outside the surgery ideal"
                    f" (needs k(k-1) = {site.ideal_exponent()} plus an admissible shift)"
                )
        bound = tail.tail_bound
        if bound is not None and bound < site.ideal_exponent():
            raise ValueError(
                f"tail truncation O(t^{bound}) at site {k} reaches below the"
                f" ideal exponent {site.ideal_exponent()}"
            )
        per[k] = t + tail
    return GlobalSection(per)


def no_global_power_witness(
    curve: SurgeryCurve, n: int, section: GlobalSection | None = None
) -> int:
    """Site index certifying that the n-th power of the section fails to be
    holomorphic on the whole glued curve.

    Scans the sites with index above n in increasing order and returns the
    first with a CertainlyNo decision.  Above n the obstruction is
    unconditional: the power has lowest exponent n, and 0 < n < k lies below
    every nonzero member of <k, k+1>, while the ideal tail starts at
    k(k-1) > n and cannot interfere.  Sites at or below n may fail as well
    for particular n, but carry no uniform guarantee, so the certified
    witness is searched above n only.
    """
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if curve.max_index <= n:
        raise NoWitnessInRange(
            f"no site with index above {n}; rebuild with maxK >= {n + 1}"
        )
    if section is None:
        section = make_global_rado(curve)
    for site in curve.sites:
        if site.index <= n:
            continue
        if site.decision_for_power(section.germ_at(site.index), n).is_no:
            return site.index
    raise NoWitnessInRange(
        f"no certainly-failing site above {n} up to maxK = {curve.max_index}"
    )


def n_omega(curve: SurgeryCurve, region_max_index: int) -> int:
    """Uniform power bound for the region holding sites 2..K: the largest
    local conductor, (K-1)K.

    Every germ vanishing at its cusp (lowest exponent >= 1) has all powers
    n >= n_omega holomorphic at every site of the region, because the n-th
    power only carries exponents >= n.  One step lower fails: at site K the
    germ t to the power (K-1)K - 1 hits the Frobenius gap of <K, K+1>.
    """
    K = region_max_index
    if not 2 <= K <= curve.max_index:
        raise ValueError(f"region index must lie in 2..{curve.max_index}, got {K}")
    return max(s.curve.semigroup.conductor() for s in curve.sites if s.index <= K)


@dataclass(frozen=True)
class PowerCheckReport:
    power: int
    per_site: Mapping[int, Decision]
    aggregate: Decision


def check_section_power(
    curve: SurgeryCurve, section: GlobalSection, n: int, region_max_index: int
) -> PowerCheckReport:
    """Per-site holomorphy decisions for the n-th power over sites 2..K."""
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    K = region_max_index
    if not 2 <= K <= curve.max_index:
        raise ValueError(f"region index must lie in 2..{curve.max_index}, got {K}")
    per: dict[int, Decision] = {}
    for site in curve.sites:
        if site.index > K:
            break
        per[site.index] = site.decision_for_power(section.germ_at(site.index), n)
    return PowerCheckReport(
        power=n, per_site=per, aggregate=aggregate_decisions(per.values())
    )
