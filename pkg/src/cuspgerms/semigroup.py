"""Two-generator numerical semigroups.

A pair of coprime integers p, q >= 2 generates the semigroup
S = {a*p + b*q : a, b >= 0}.  Membership in S is what decides whether a
power of the normalization parameter is the restriction of an ambient
holomorphic function, so everything downstream funnels into `contains`.
"""

from __future__ import annotations

from math import gcd


class NumericalSemigroup:
    """The semigroup <p, q> generated by two coprime integers >= 2."""

    __slots__ = ("p", "q", "_inv_q_mod_p", "_inv_p_mod_q")

    def __init__(self, p: int, q: int):
        if p < 2 or q < 2:
            raise ValueError(f"generators must be >= 2, got ({p}, {q})")
        if gcd(p, q) != 1:
            raise ValueError(f"generators must be coprime, got ({p}, {q})")
        # coprimality already forces p != q for p, q >= 2
        self.p = p
        self.q = q
        self._inv_q_mod_p = pow(q, -1, p)
        self._inv_p_mod_q = pow(p, -1, q)

    def contains(self, n: int) -> bool:
        """Whether n = a*p + b*q for some a, b >= 0.

        Closed form: n is a member iff the unique b in [0, p) with
        b*q = n (mod p) satisfies b*q <= n.
        """
        if n < 0:
            return False
        b = n * self._inv_q_mod_p % self.p
        return b * self.q <= n

    def conductor(self) -> int:
        """Least N such that every integer >= N is a member: (p-1)(q-1)."""
        return (self.p - 1) * (self.q - 1)

    def frobenius(self) -> int:
        """Largest integer not in the semigroup: pq - p - q."""
        return self.p * self.q - self.p - self.q

    def representation(self, n: int) -> tuple[int, int] | None:
        """Some (a, b) with a*p + b*q = n, a, b >= 0, smallest a; None if n is not a member.

        Candidates for a differ by multiples of q, so the smallest
        nonnegative residue of n * p^{-1} mod q is the smallest possible a;
        if it overshoots n, no larger candidate can help.
        """
        if n < 0:
            return None
        a = n * self._inv_p_mod_q % self.q
        rest = n - a * self.p
        if rest < 0:
            return None
        return a, rest // self.q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((NumericalSemigroup, self.p, self.q))

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self.p}, {self.q})"
