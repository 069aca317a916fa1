"""Monomial cusp curves and their holomorphy invariants.

The model singularity with parameters p, q is the plane curve
z1^p = z2^q, normalized by t -> (t^q, t^p).  Pulling functions back along
the normalization turns every holomorphy question into arithmetic of
t-exponents in the semigroup <p, q>: an exponent is a restriction of an
ambient holomorphic function exactly when it is a member.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import UndecidableAtTruncation
from .germ import Decision, LaurentGerm
from .semigroup import NumericalSemigroup


class CoveringData(NamedTuple):
    degree: int
    axis: int  # base coordinate of the admissible projection: 1 for z1, 2 for z2


@dataclass(frozen=True)
class RadoGerm:
    """The canonical continuous unit-order germ z1^m / z2^n with mq - np = 1.

    Its pullback is exactly t: continuous on the curve, holomorphic off the
    cusp, but t itself is never a restriction of an ambient holomorphic
    function because 1 is not in <p, q>.
    """

    m: int
    n: int
    pullback: LaurentGerm


@dataclass(frozen=True)
class WeakGenerationReport:
    generator_power_max: int  # r: module generators are the powers 0..r of the unit-order germ
    checked_up_to: int
    generates: bool
    one_fewer_suffices: bool


class CuspCurve:
    """The cusp z1^p = z2^q with coprime p, q >= 2."""

    __slots__ = ("p", "q", "semigroup")

    def __init__(self, p: int, q: int):
        self.semigroup = NumericalSemigroup(p, q)
        self.p = p
        self.q = q

    @classmethod
    def from_spec(cls, spec: str) -> "CuspCurve":
        """Parse the curve spec string "gamma:p,q"."""
        prefix, _, rest = spec.partition(":")
        if prefix != "gamma" or not rest:
            raise ValueError(f"curve spec must look like gamma:p,q, got {spec!r}")
        try:
            p_text, q_text = rest.split(",")
            p, q = int(p_text), int(q_text)
        except ValueError:
            raise ValueError(f"curve spec must look like gamma:p,q, got {spec!r}") from None
        return cls(p, q)

    def spec_str(self) -> str:
        return f"gamma:{self.p},{self.q}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CuspCurve):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((CuspCurve, self.p, self.q))

    def __repr__(self) -> str:
        return f"CuspCurve({self.p}, {self.q})"

    # -- pullbacks -----------------------------------------------------------

    def pullback_monomial(self, a: int, b: int) -> int:
        """t-exponent of z1^a z2^b pulled back along t -> (t^q, t^p)."""
        return a * self.q + b * self.p

    def rado_germ(self) -> RadoGerm:
        """Minimal natural solution (m, n) of m*q - n*p = 1, with 1 <= m <= p."""
        m = pow(self.q, -1, self.p)  # in 1..p-1 since p, q are coprime and p >= 2
        n = (m * self.q - 1) // self.p
        return RadoGerm(m=m, n=n, pullback=LaurentGerm.monomial(1))

    # -- holomorphy decisions -------------------------------------------------

    def is_holomorphic_at_cusp(self, f: LaurentGerm) -> Decision:
        """Is the germ the restriction of an ambient holomorphic function?

        True exactly when every t-exponent lies in <p, q>; hidden tails are
        harmless once they start at or beyond the conductor.
        """
        s = self.semigroup
        c = s.conductor()
        return f.exponents_within(s.contains, tail_satisfies=lambda t: t >= c)

    def is_weakly_holomorphic(self, f: LaurentGerm) -> Decision:
        """Bounded near the cusp and holomorphic off it: all exponents >= 0.

        The normalization is a homeomorphism here, so this coincides with
        being continuous with holomorphic pullback.
        """
        return f.exponents_within(lambda e: e >= 0, tail_satisfies=lambda t: t >= 0)

    def holomorphy_witness(self, f: LaurentGerm) -> int | None:
        """Smallest stored exponent proving non-holomorphy, if any."""
        s = self.semigroup
        for e in f.exponents():
            if not s.contains(e):
                return e
        return None

    def min_power(self, f: LaurentGerm) -> int:
        """Smallest n >= 1 with f^n holomorphic at the cusp.

        The search stops at the conductor: beyond it a germ vanishing at the
        cusp is always holomorphic, and a unit that has not become
        holomorphic by then never will through this scan.
        """
        if f.is_zero():
            raise ValueError("zero germ has no minimal holomorphic power")
        if self.is_weakly_holomorphic(f).is_no:
            raise ValueError("germ is not weakly holomorphic")
        cap = self.semigroup.conductor()
        unknown_at: int | None = None
        power = f
        for n in range(1, cap + 1):
            verdict = self.is_holomorphic_at_cusp(power)
            if verdict.is_yes:
                return n
            if verdict.is_unknown and unknown_at is None:
                unknown_at = n
            power = power * f
        if unknown_at is not None:
            raise UndecidableAtTruncation(
                f"power {unknown_at} undecidable at the germ's truncation"
            )
        raise ValueError(f"no power up to the conductor {cap} is holomorphic")

    def stable_power(self, f: LaurentGerm) -> int:
        """Smallest N such that every power f^n with n >= N is holomorphic."""
        if f.is_zero():
            raise ValueError("zero germ has no stable power")
        lo = f.lowest_exponent()
        if lo is None:
            raise UndecidableAtTruncation("tail-only germ: lowest exponent unknown")
        if lo < 0:
            raise ValueError("germ is not weakly holomorphic")
        c = self.semigroup.conductor()
        if lo >= 1:
            # every exponent of f^n is >= n, so powers from the conductor on
            # are holomorphic; only the window below it needs scanning
            last_no = 0
            unknowns: list[int] = []
            power = f
            for n in range(1, c):
                verdict = self.is_holomorphic_at_cusp(power)
                if verdict.is_no:
                    last_no = n
                elif verdict.is_unknown:
                    unknowns.append(n)
                power = power * f
            if any(n > last_no for n in unknowns):
                raise UndecidableAtTruncation(
                    "undecided powers above the last certain failure"
                )
            return last_no + 1
        # unit at the cusp: a full run of holomorphic powers N..2N-1 settles
        # all n >= N, because products of holomorphic germs stay supported
        # in the semigroup
        cap = c + self.p * self.q
        last_bad = 0
        saw_unknown = False
        power = f
        for n in range(1, cap + 1):
            verdict = self.is_holomorphic_at_cusp(power)
            if verdict.is_yes:
                candidate = last_bad + 1
                if n >= 2 * candidate - 1:
                    if saw_unknown:
                        raise UndecidableAtTruncation(
                            "undecided powers below the certified run"
                        )
                    return candidate
            else:
                if verdict.is_unknown:
                    saw_unknown = True
                last_bad = n
            power = power * f
        if saw_unknown:
            raise UndecidableAtTruncation(
                f"no certified run of holomorphic powers up to {cap}"
            )
        raise ValueError(f"no stable power found up to {cap}")

    # -- multiplier conditions -------------------------------------------------

    def floor_multiplier_check(self, a: int, b: int) -> bool:
        """Floor-form sufficient condition for z1^a z2^b * (unit-order germ)
        to be holomorphic: q*floor((m+a)/p) + b >= n."""
        if a < 0 or b < 0:
            raise ValueError("monomial exponents must be >= 0")
        r = self.rado_germ()
        return self.q * ((r.m + a) // self.p) + b >= r.n

    def exact_multiplier_check(self, a: int, b: int) -> bool:
        """Exact criterion: the pullback exponent a*q + b*p + 1 is a semigroup member."""
        if a < 0 or b < 0:
            raise ValueError("monomial exponents must be >= 0")
        return self.semigroup.contains(self.pullback_monomial(a, b) + 1)

    # -- weak-module structure ---------------------------------------------------

    def weak_generator_count(self) -> int:
        """r = min(p, q) - 1: powers 0..r of the unit-order germ generate the
        weakly holomorphic germs as a module over the holomorphic ones."""
        return min(self.p, self.q) - 1

    def weak_generation_report(self) -> WeakGenerationReport:
        """Monomial-level generation check.

        Every t^e with 0 <= e <= conductor + r must factor as t^s * t^j with
        s a semigroup member and 0 <= j <= r; larger e lie in the semigroup
        outright.  Also reports whether r-1 powers would have sufficed,
        without asserting minimality either way.
        """
        s = self.semigroup
        r = self.weak_generator_count()
        bound = s.conductor() + r

        def covered(e: int, max_j: int) -> bool:
            return any(s.contains(e - j) for j in range(0, max_j + 1))

        generates = all(covered(e, r) for e in range(0, bound + 1))
        fewer = all(covered(e, r - 1) for e in range(0, bound + 1)) if r >= 1 else generates
        return WeakGenerationReport(
            generator_power_max=r,
            checked_up_to=bound,
            generates=generates,
            one_fewer_suffices=fewer,
        )

    # -- local geometry ------------------------------------------------------------

    def covering_degree(self) -> CoveringData:
        """Degree and base axis of the admissible branched-covering projection.

        Projecting onto the coordinate with the smaller pullback exponent
        gives fibers of min(p, q) points, and the projection's kernel (the
        other axis) meets the secant cone only at the origin.
        """
        if self.p < self.q:
            return CoveringData(degree=self.p, axis=2)
        return CoveringData(degree=self.q, axis=1)

    def whitney_cone(self) -> int:
        """Coordinate axis of limiting secant directions at the cusp.

        The component with the smaller pullback exponent dominates as t -> 0,
        so the cone is the z2-axis for p < q and the z1-axis for q < p.
        """
        return 2 if self.p < self.q else 1

    def order_of_flatness(self, f: LaurentGerm) -> Fraction:
        """Largest a with |f| = O(||x||^a) near the cusp, in the max-norm.

        ||(t^q, t^p)|| behaves like |t|^min(p,q) for small t, so a germ of
        t-order e has order of flatness e / min(p, q), never below
        1 / covering degree.
        """
        lo = f.lowest_exponent()
        if lo is None:
            raise ValueError("order of flatness needs a germ with known lowest exponent")
        if lo < 1:
            raise ValueError(f"germ must vanish at the cusp, lowest exponent {lo}")
        return Fraction(lo, min(self.p, self.q))

    def weierstrass(self, e: int) -> "WeierstrassPoly":
        """Monic annihilating polynomial of the monomial germ t^e over the
        admissible degree-min(p,q) projection."""
        return WeierstrassPoly.for_monomial(self.covering_degree().degree, e)


@dataclass(frozen=True)
class RootBoundReport:
    constant: float  # fitted M with |T| <= M * |z|^(1/d) on the sampled range
    stable: bool  # fine-scale samples stay below the coarse-scale fit
    worst_ratio: float


class WeierstrassPoly:
    """(T^{d/g} - z^{e/g})^g, the monic degree-d polynomial in T vanishing on
    the graph T = t^e over the base z = t^d, where g = gcd(d, e)."""

    __slots__ = ("degree", "inner_degree", "z_exponent", "multiplicity", "_coeffs")

    def __init__(self, degree: int, inner_degree: int, z_exponent: int, multiplicity: int,
                 coeffs: dict[int, dict[int, int]]):
        self.degree = degree
        self.inner_degree = inner_degree
        self.z_exponent = z_exponent
        self.multiplicity = multiplicity
        self._coeffs = coeffs

    @classmethod
    def for_monomial(cls, d: int, e: int) -> "WeierstrassPoly":
        """Expand the product of (T - f(t')) over the d points t' of the fiber,
        for f = t^e: the d-th roots of unity collapse it to (T^{d/g} - z^{e/g})^g."""
        if d < 1:
            raise ValueError(f"covering degree must be >= 1, got {d}")
        if e < 1:
            raise ValueError(f"germ exponent must be >= 1, got {e}")
        g = math.gcd(d, e)
        m = d // g
        s = e // g
        coeffs: dict[int, dict[int, int]] = {}
        for i in range(1, g + 1):
            coeffs[m * i] = {s * i: (-1) ** i * math.comb(g, i)}
        return cls(degree=d, inner_degree=m, z_exponent=s, multiplicity=g, coeffs=coeffs)

    def coefficient_poly(self, j: int) -> dict[int, int]:
        """a_j as a map z-power -> integer coefficient, for W = T^d + sum a_j T^(d-j)."""
        if j == 0:
            return {0: 1}
        return dict(self._coeffs.get(j, {}))

    def coefficients_at(self, z: complex) -> list[complex]:
        """[1, a_1(z), ..., a_d(z)], highest T-power first."""
        out: list[complex] = [1.0 + 0j]
        for j in range(1, self.degree + 1):
            out.append(sum(c * z**k for k, c in self._coeffs.get(j, {}).items()))
        return out

    def annihilates_pullback(self) -> bool:
        """Substitute z = t^d, T = t^e and check exact cancellation."""
        d = self.degree
        e = self.z_exponent * self.multiplicity
        acc: dict[int, int] = {}
        for j in range(0, d + 1):
            for zpow, c in self.coefficient_poly(j).items():
                t_exp = d * zpow + e * (d - j)
                acc[t_exp] = acc.get(t_exp, 0) + c
        return all(v == 0 for v in acc.values())

    def factored_str(self) -> str:
        inner = "T" if self.inner_degree == 1 else f"T^{self.inner_degree}"
        zpart = "z" if self.z_exponent == 1 else f"z^{self.z_exponent}"
        base = f"{inner} - {zpart}"
        if self.multiplicity == 1:
            return base
        return f"({base})^{self.multiplicity}"

    def root_bound_check(
        self,
        moduli: list[float] | None = None,
        angles: int = 4,
    ) -> RootBoundReport:
        """Numeric check that roots satisfy |T| <= M * |z|^(1/d) near 0.

        M is fitted on the coarser (larger |z|) half of the samples and the
        finer half must stay below it, up to float fuzz.
        """
        import numpy as np

        d = self.degree
        if moduli is None:
            moduli = [10.0 ** (-k / 2.0) for k in range(4, 13)]  # 1e-2 .. 1e-6
        moduli = sorted(moduli, reverse=True)
        ratios: list[float] = []
        for r in moduli:
            worst = 0.0
            for a in range(angles):
                z = r * complex(math.cos(2 * math.pi * a / angles),
                                math.sin(2 * math.pi * a / angles))
                roots = np.roots(self.coefficients_at(z))
                worst = max(worst, float(max(abs(roots))))
            ratios.append(worst / r ** (1.0 / d))
        half = max(1, len(ratios) // 2)
        fitted = max(ratios[:half])
        worst_ratio = max(ratios)
        stable = all(rat <= fitted * (1.0 + 1e-6) for rat in ratios[half:])
        return RootBoundReport(constant=fitted, stable=stable, worst_ratio=worst_ratio)

    def __repr__(self) -> str:
        return f"WeierstrassPoly({self.factored_str()!r})"
