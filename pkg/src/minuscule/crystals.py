"""Tensor products of minuscule crystals and the commutor form of rotation.

Each factor of a tensor element is just a weight in the orbit of its type,
since a minuscule crystal is its weight orbit.  Tensor convention, fixed
once: per-factor statistics are eps_i = max(0, -<mu, alpha_i_vee>) and
phi_i = max(0, <mu, alpha_i_vee>); lowering routes to the left factor when
phi(left) > eps(right), raising routes left when phi(left) >= eps(right).
Equivalently: write '-' for a factor pairing to -1 and '+' for +1, cancel
adjacent "+-" pairs, then lowering acts at the leftmost surviving '+' and
raising at the rightmost surviving '-'.  The crystal zero is represented
by ``None``; it is a value, never an error.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .errors import (
    AlgorithmInvariantViolated,
    EnumerationTooLarge,
    InvalidIndex,
    InvalidPath,
    NotInvariant,
)
from .paths import LittelmannPath, WeightSequence, _add, _sub
from .rootsys import Weight, dual_index, simple_reflection, two_rho_pairing, weyl_orbit

DEFAULT_NODE_CAP = 5_000_000


@functools.lru_cache(maxsize=None)
def _orbit_set(rs, lam):
    return frozenset(weyl_orbit(rs, lam))


@dataclass(frozen=True)
class TensorCrystalElement:
    """An element b_1 (x) ... (x) b_m, one orbit weight per tensor factor."""

    seq: WeightSequence
    factors: tuple[Weight, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))
        if len(self.factors) != len(self.seq):
            raise InvalidPath("factor count does not match the type sequence")
        for f, lam in zip(self.factors, self.seq.weights):
            if f not in _orbit_set(self.seq.rs, lam):
                raise InvalidPath(f"factor {f} is not in the orbit of {lam}")

    def weight(self) -> Weight:
        total = self.seq.rs.zero()
        for f in self.factors:
            total = _add(total, f)
        return total

    def to_json_dict(self):
        return {"factors": [list(f) for f in self.factors]}


def _signature(b: TensorCrystalElement, i: int):
    """Surviving signs after cancelling "+-": list of (factor index, sign)."""
    stack: list[tuple[int, int]] = []
    for k, f in enumerate(b.factors):
        a = f[i - 1]
        if a == 1:
            stack.append((k, 1))
        elif a == -1:
            if stack and stack[-1][1] == 1:
                stack.pop()
            else:
                stack.append((k, -1))
    return stack


def crystal_op(direction: str, i: int, b: TensorCrystalElement):
    """Apply a raising or lowering operator; ``None`` is the crystal zero."""
    rs = b.seq.rs
    if not 1 <= i <= rs.rank:
        raise InvalidIndex(f"index {i} out of range for {rs}")
    if direction not in ("raise", "lower"):
        raise InvalidIndex(f"unknown direction {direction!r}")
    stack = _signature(b, i)
    if direction == "lower":
        k = next((k for k, s in stack if s == 1), None)
    else:
        k = next((k for k, s in reversed(stack) if s == -1), None)
    if k is None:
        return None
    factors = list(b.factors)
    factors[k] = simple_reflection(rs, i, factors[k])
    return TensorCrystalElement(b.seq, tuple(factors))


def raise_op(i, b):
    return crystal_op("raise", i, b)


def lower_op(i, b):
    return crystal_op("lower", i, b)


def epsilon(i: int, b: TensorCrystalElement) -> int:
    return sum(1 for _, s in _signature(b, i) if s == -1)


def phi(i: int, b: TensorCrystalElement) -> int:
    return sum(1 for _, s in _signature(b, i) if s == 1)


def is_highest_weight(b: TensorCrystalElement) -> bool:
    return all(epsilon(i, b) == 0 for i in range(1, b.seq.rs.rank + 1))


def is_invariant(b: TensorCrystalElement) -> bool:
    return not any(b.weight()) and is_highest_weight(b)


def all_elements(seq: WeightSequence):
    """Iterate the full tensor crystal in lexicographic factor order."""
    orbits = [weyl_orbit(seq.rs, lam) for lam in seq.weights]
    for combo in itertools.product(*orbits):
        yield TensorCrystalElement(seq, combo)


def crystal_size(seq: WeightSequence) -> int:
    size = 1
    for lam in seq.weights:
        size *= len(weyl_orbit(seq.rs, lam))
    return size


def invariant_elements(seq: WeightSequence, cap: int = DEFAULT_NODE_CAP) -> tuple[TensorCrystalElement, ...]:
    """All highest-weight elements of weight zero, in deterministic order.

    Searches factor by factor; partial weights are bounded through the
    positive-coroot sum, and the last factor is forced to whatever cancels
    the running total.
    """
    rs = seq.rs
    m = len(seq)
    orbits = [weyl_orbit(rs, lam) for lam in seq.weights]
    budget = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        budget[k] = budget[k + 1] + two_rho_pairing(rs, seq.weights[k])

    visited = 0
    out = []
    prefix: list[Weight] = []

    def search(k: int, partial: Weight):
        nonlocal visited
        visited += 1
        if visited > cap:
            raise EnumerationTooLarge(f"crystal search exceeded {cap} nodes")
        if abs(two_rho_pairing(rs, partial)) > budget[k]:
            return
        if k == m - 1:
            last = _sub(rs.zero(), partial)
            if last in _orbit_set(rs, seq.weights[k]):
                candidate = TensorCrystalElement(seq, tuple(prefix) + (last,))
                if is_highest_weight(candidate):
                    out.append(candidate)
            return
        for f in orbits[k]:
            prefix.append(f)
            search(k + 1, _add(partial, f))
            prefix.pop()

    search(0, rs.zero())
    out.sort(key=lambda b: b.factors)
    return tuple(out)


def _to_highest(b, policy=None):
    """Raise to the top of the connected component, recording the indices
    in application order."""
    rank = b.seq.rs.rank
    record = []
    while True:
        options = [i for i in range(1, rank + 1) if epsilon(i, b) > 0]
        if not options:
            return b, record
        i = options[0] if policy is None else policy(options, b)
        record.append(i)
        b = crystal_op("raise", i, b)


def _to_lowest(b):
    rank = b.seq.rs.rank
    while True:
        i = next((i for i in range(1, rank + 1) if phi(i, b) > 0), None)
        if i is None:
            return b
        b = crystal_op("lower", i, b)


def schutzenberger(b: TensorCrystalElement, policy=None) -> TensorCrystalElement:
    """The involution swapping highest and lowest weight elements.

    Raise ``b`` to the top of its component recording indices i_1..i_k in
    application order, descend to the component's bottom, then replay the
    record backwards through raising operators at the dual indices.  The
    result does not depend on the recorded route; ``policy`` exists so
    tests can randomize it.
    """
    rs = b.seq.rs
    top, record = _to_highest(b, policy)
    x = _to_lowest(top)
    for i in reversed(record):
        x = crystal_op("raise", dual_index(rs, i), x)
        if x is None:  # pragma: no cover - would signal a bug
            raise AlgorithmInvariantViolated("replay of the raising record left the crystal")
    return x


def commutor_rotate(b: TensorCrystalElement) -> TensorCrystalElement:
    """Send b_1 (x) rest to xi(rest) (x) xi(b_1), staying inside invariants."""
    if not is_invariant(b):
        raise NotInvariant("commutor rotation is defined on invariant elements only")
    seq = b.seq
    rs = seq.rs
    head = TensorCrystalElement(WeightSequence(rs, seq.weights[:1]), b.factors[:1])
    tail = TensorCrystalElement(WeightSequence(rs, seq.weights[1:]), b.factors[1:])
    out = TensorCrystalElement(
        seq.rotated(1), schutzenberger(tail).factors + schutzenberger(head).factors)
    if not is_invariant(out):  # pragma: no cover - would signal a bug
        raise AlgorithmInvariantViolated("rotated element is no longer invariant")
    return out


def path_bijection(p: LittelmannPath) -> TensorCrystalElement:
    """Successive differences of a dominant path, as a tensor element."""
    prev = p.seq.rs.zero()
    factors = []
    for point in p.points:
        factors.append(_sub(point, prev))
        prev = point
    return TensorCrystalElement(p.seq, tuple(factors))
