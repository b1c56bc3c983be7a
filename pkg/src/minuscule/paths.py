"""Dominant lattice paths with minuscule steps, and their rotation.

A path is stored as its list of points (the origin is implicit), because
rotation manipulates points, not steps.  Orbit membership of the
successive differences is re-checked whenever a path is built.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlgorithmInvariantViolated,
    EnumerationTooLarge,
    InvalidPath,
    InvalidSequence,
    NotApplicable,
    SequenceNotPeriodic,
)
from .rootsys import (
    RootSystem,
    Weight,
    apply_word,
    minuscule_weights,
    to_dominant,
    two_rho_pairing,
    weyl_orbit,
)

DEFAULT_PATH_CAP = 100_000


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _is_dominant(w):
    return all(x >= 0 for x in w)


@dataclass(frozen=True)
class WeightSequence:
    """A sequence of dominant minuscule weights over a fixed root system."""

    rs: RootSystem
    weights: tuple[Weight, ...]

    def __post_init__(self):
        if len(self.weights) < 1:
            raise InvalidSequence("weight sequence must be non-empty")
        allowed = set(minuscule_weights(self.rs))
        for w in self.weights:
            if tuple(w) not in allowed:
                raise InvalidSequence(f"{w} is not a dominant minuscule weight of {self.rs}")
        object.__setattr__(self, "weights", tuple(tuple(w) for w in self.weights))

    def __len__(self):
        return len(self.weights)

    def rotated(self, j: int = 1) -> "WeightSequence":
        j %= len(self.weights)
        return WeightSequence(self.rs, self.weights[j:] + self.weights[:j])

    def total(self) -> Weight:
        total = self.rs.zero()
        for w in self.weights:
            total = _add(total, w)
        return total


@dataclass(frozen=True)
class MinusculePath:
    """Points gamma_1..gamma_m; the step into each must stay in its orbit."""

    seq: WeightSequence
    points: tuple[Weight, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))
        if len(self.points) != len(self.seq):
            raise InvalidPath("point count does not match the type sequence")
        prev = self.seq.rs.zero()
        for point, lam in zip(self.points, self.seq.weights):
            if _sub(point, prev) not in weyl_orbit(self.seq.rs, lam):
                raise InvalidPath(f"step into {point} leaves the orbit of {lam}")
            prev = point

    def __len__(self):
        return len(self.points)

    def is_dominant(self) -> bool:
        return all(_is_dominant(p) for p in self.points)


class LittelmannPath(MinusculePath):
    """A dominant path returning to the origin."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_dominant():
            raise InvalidPath("all points of the path must be dominant")
        if any(self.points[-1]):
            raise InvalidPath("the path must end at the origin")

    def to_json_dict(self):
        return {
            "type": [list(w) for w in self.seq.weights],
            "points": [list(p) for p in self.points],
        }


def enumerate_paths(seq: WeightSequence, cap: int = DEFAULT_PATH_CAP) -> tuple[LittelmannPath, ...]:
    """All dominant paths of the given type from the origin back to itself.

    Depth-first search in sorted step order, which already emits paths in
    lexicographic order of their concatenated coordinates.  A branch dies
    when the pairing of the current point with the positive-coroot sum
    exceeds what the remaining steps can cancel; that potential drops by
    at most <lambda_j, 2 rho_vee> per step, in every type.
    """
    rs = seq.rs
    m = len(seq)
    orbits = [weyl_orbit(rs, lam) for lam in seq.weights]
    budget = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        budget[k] = budget[k + 1] + two_rho_pairing(rs, seq.weights[k])

    found: list[tuple[Weight, ...]] = []
    prefix: list[Weight] = []

    def extend(k: int, point: Weight):
        if two_rho_pairing(rs, point) > budget[k]:
            return
        if k == m - 1:
            # final step forced: it must land exactly on the origin
            last = _sub(rs.zero(), point)
            if last in orbits[k]:
                found.append(tuple(prefix) + (rs.zero(),))
                if len(found) > cap:
                    raise EnumerationTooLarge(f"more than {cap} paths of type {seq.weights}")
            return
        for step in orbits[k]:
            nxt = _add(point, step)
            if _is_dominant(nxt):
                prefix.append(nxt)
                extend(k + 1, nxt)
                prefix.pop()

    extend(0, rs.zero())
    found.sort()
    return tuple(LittelmannPath(seq, pts) for pts in found)


def first_nondominant(p) -> int:
    """0-based index of the first non-dominant point (the straightening locus).

    Accepts a path or a bare list of points.
    """
    points = p.points if isinstance(p, MinusculePath) else p
    for k, point in enumerate(points):
        if not _is_dominant(point):
            return k
    raise NotApplicable("path is already dominant")


def raise_once_points(rs, points) -> tuple[Weight, ...]:
    """One straightening step on bare points: shift the tail of the list so
    the first non-dominant point becomes the dominant member of its orbit."""
    points = tuple(tuple(q) for q in points)
    k = first_nondominant(points)
    bad = points[k]
    dom, _ = to_dominant(rs, bad)
    shift = _sub(dom, bad)
    return points[:k] + tuple(_add(q, shift) for q in points[k:])


def raise_once(p: MinusculePath) -> MinusculePath:
    """One straightening step; successive differences stay in their orbits."""
    return MinusculePath(p.seq, raise_once_points(p.seq.rs, p.points))


def straighten(p: MinusculePath) -> MinusculePath:
    """Apply raise_once until dominant; the bad index strictly increases."""
    for _ in range(len(p) + 1):
        if p.is_dominant():
            return p
        p = raise_once(p)
    raise AlgorithmInvariantViolated("straightening failed to terminate")


def rotate(p: LittelmannPath) -> LittelmannPath:
    """The rotation bijection onto the paths of the once-rotated type."""
    seq = p.seq
    mu1 = p.points[0]
    tail_seq = WeightSequence(seq.rs, seq.weights[1:])
    tail = MinusculePath(tail_seq, tuple(_sub(q, mu1) for q in p.points[1:]))
    flat = straighten(tail)
    try:
        return LittelmannPath(seq.rotated(1), flat.points + (seq.rs.zero(),))
    except InvalidPath as exc:  # pragma: no cover - would signal a bug
        raise AlgorithmInvariantViolated(str(exc)) from exc


@dataclass(frozen=True)
class OrbitStructure:
    seq: WeightSequence
    ell: int
    r: int
    orbits: tuple[tuple[LittelmannPath, ...], ...]
    fixed_counts: tuple[int, ...]

    def to_json_dict(self):
        return {
            "ell": self.ell,
            "r": self.r,
            "fixed_counts": list(self.fixed_counts),
            "orbits": [[p.to_json_dict()["points"] for p in orbit] for orbit in self.orbits],
        }


def orbit_structure(seq: WeightSequence, ell: int) -> OrbitStructure:
    """Orbits of the ell-fold rotation and fixed-point counts of its powers."""
    m = len(seq)
    if not 1 <= ell <= m or m % ell:
        raise SequenceNotPeriodic(f"ell={ell} does not divide m={m}")
    if seq.rotated(ell).weights != seq.weights:
        raise SequenceNotPeriodic(f"sequence is not invariant under rotation by {ell}")
    r = m // ell
    paths = enumerate_paths(seq)
    index = {p.points: i for i, p in enumerate(paths)}

    def rot_ell(p):
        for _ in range(ell):
            p = rotate(p)
        return p

    perm = [index[rot_ell(p).points] for p in paths]

    orbits = []
    seen = set()
    for i in range(len(paths)):
        if i in seen:
            continue
        cycle = []
        j = i
        while j not in seen:
            seen.add(j)
            cycle.append(paths[j])
            j = perm[j]
        orbits.append(tuple(cycle))

    fixed_counts = []
    power = list(range(len(paths)))
    for _ in range(r):
        fixed_counts.append(sum(1 for i, j in enumerate(power) if i == j))
        power = [perm[j] for j in power]
    return OrbitStructure(seq, ell, r, tuple(orbits), tuple(fixed_counts))


def stabilizer_word_fixes_base(rs: RootSystem, beta: Weight, x: Weight) -> bool:
    """Check the straightening word of beta+x fixes the dominant weight beta.

    ``x`` must come from a minuscule orbit; the minimal word carrying
    beta+x to dominance then lies in the stabilizer of beta.
    """
    gamma = _add(beta, x)
    _, word = to_dominant(rs, gamma)
    return apply_word(rs, word, beta) == tuple(beta)
