"""Exact cyclic-sieving verification.

Whether f(zeta^d) equals an integer N, for zeta a primitive r-th root of
unity, is decided inside Z[q]: fold f(q^d) modulo q^r - 1 and test
divisibility of the difference by the r-th cyclotomic polynomial.  The
verdicts are equalities of algebraic integers, so nothing here may
approximate.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import (
    AlgorithmInvariantViolated,
    NotInRootLattice,
    PolynomialUnavailable,
    SequenceNotPeriodic,
)
from .kostka import kostka_foulkes
from .paths import WeightSequence, orbit_structure
from .poly import IntPolynomial
from .rootsys import in_root_lattice, two_rho_pairing


@functools.lru_cache(maxsize=None)
def cyclotomic(r: int) -> IntPolynomial:
    """The r-th cyclotomic polynomial, by exact recursive division."""
    if r < 1:
        raise ValueError("cyclotomic index must be positive")
    # q^r - 1 divided by the cyclotomic polynomials of the proper divisors
    out = IntPolynomial((-1,) + (0,) * (r - 1) + (1,))
    for d in range(1, r):
        if r % d == 0:
            out = out // cyclotomic(d)
    return out


def eval_matches(f: IntPolynomial, r: int, d: int, value: int) -> bool:
    """True iff f(zeta^d) == value for zeta a primitive r-th root of unity."""
    folded = [0] * r
    for k, c in enumerate(f.coeffs):
        folded[(k * d) % r] += c
    folded[0] -= value
    h = IntPolynomial(folded)
    if h.is_zero():
        return True
    _, rem = divmod(h, cyclotomic(r))
    return rem.is_zero()


def _type_a_content(seq: WeightSequence) -> tuple[int, ...]:
    if seq.rs.family != "A":
        raise PolynomialUnavailable(f"no automatic sieving polynomial for {seq.rs}")
    return tuple(w.index(1) + 1 for w in seq.weights)


def type_a_csp_polynomial(seq: WeightSequence) -> IntPolynomial:
    """q-power times Kostka-Foulkes, the sieving polynomial in type A.

    For content (i_1..i_m) with sum n*b the exponent is
    (n^2 b - sum i_j^2)/2, which equals the pairing of the total weight
    with the half-sum of positive coroots; both are computed and compared.
    """
    content = _type_a_content(seq)
    n = seq.rs.rank + 1
    total_boxes = sum(content)
    b, rem = divmod(total_boxes, n)
    if rem:
        raise NotInRootLattice(
            f"content sum {total_boxes} is not a multiple of {n}; no invariants exist")
    exponent2 = n * n * b - sum(i * i for i in content)
    pairing = two_rho_pairing(seq.rs, seq.total())
    if exponent2 != pairing or exponent2 % 2 or exponent2 < 0:
        raise AlgorithmInvariantViolated(
            f"exponent identity failed: {exponent2} vs <total, 2 rho_vee> = {pairing}")
    shape = (n,) * b
    return kostka_foulkes(shape, content).shift(exponent2 // 2)


@dataclass(frozen=True)
class CSPInstance:
    seq: WeightSequence
    ell: int
    r: int
    poly: IntPolynomial

    def __post_init__(self):
        m = len(self.seq)
        if not 1 <= self.ell <= m or m % self.ell:
            raise SequenceNotPeriodic(f"ell={self.ell} does not divide m={m}")
        if self.seq.rotated(self.ell).weights != self.seq.weights:
            raise SequenceNotPeriodic(
                f"sequence is not invariant under rotation by {self.ell}")
        if not in_root_lattice(self.seq.rs, self.seq.total()):
            raise NotInRootLattice(
                "total weight outside the root lattice; the instance is empty")


@dataclass(frozen=True)
class CSPReport:
    instance: CSPInstance
    fixed_counts: tuple[int, ...]
    evaluations_ok: tuple[bool, ...]
    sign_diagnostic: int

    @property
    def verdict(self) -> str:
        return "pass" if all(self.evaluations_ok) else "fail"

    def to_json_dict(self):
        return {
            "r": self.instance.r,
            "ell": self.instance.ell,
            "fixed_counts": list(self.fixed_counts),
            "polynomial": list(self.instance.poly.coeffs),
            "evaluations_ok": list(self.evaluations_ok),
            "sign_diagnostic": self.sign_diagnostic,
            "verdict": self.verdict,
        }


def csp_check(seq: WeightSequence, ell: int, poly: IntPolynomial | None = None) -> CSPReport:
    """Verify the sieving triple for the ell-fold rotation on the path set.

    ``poly=None`` requests the automatic type-A polynomial; outside type A
    a polynomial must be supplied, never fabricated.  The reported sign is
    the parity of the pairing of the first ell weights with the
    positive-coroot sum; it is diagnostic only and does not enter the
    verdict.
    """
    if poly is None:
        poly = type_a_csp_polynomial(seq)
    structure = orbit_structure(seq, ell)
    instance = CSPInstance(seq, ell, structure.r, poly)
    ok = tuple(
        eval_matches(poly, structure.r, d, count)
        for d, count in enumerate(structure.fixed_counts)
    )
    window = seq.rs.zero()
    for w in seq.weights[:ell]:
        window = tuple(a + b for a, b in zip(window, w))
    sign = -1 if two_rho_pairing(seq.rs, window) % 2 else 1
    return CSPReport(instance, structure.fixed_counts, ok, sign)
