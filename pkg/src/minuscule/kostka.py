"""Kostka-Foulkes polynomials and two independent dimension oracles.

The charge route enumerates column-strict tableaux and sums q^charge over
their reading words (rows left to right, bottom row first).  The second
route is a brute-force alternating sum over the symmetric group against a
q-deformed partition function; the two must agree, and the test suite
holds them to that.  A third routine computes invariant dimensions for
arbitrary types by iterated tensoring with reflection signs, so path and
crystal counts can be checked against something that shares no code with
them.

Charge convention used throughout: within an extracted standard subword
the index of 1 is 0 and the index of k+1 increments exactly when k+1
sits to the right of k; subwords are extracted right to left with cyclic
wrap-around.
"""
from __future__ import annotations

import functools
import itertools

from .errors import InvalidContent, OracleTooLarge, SizeMismatch
from .poly import IntPolynomial
from .rootsys import to_dominant, weyl_orbit
from .paths import WeightSequence, _add

DEFAULT_WEYL_SUM_CAP = 8


def _as_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    trimmed = tuple(p for p in parts if p != 0)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(trimmed, trimmed[1:])):
        raise InvalidContent(f"{parts} is not a partition")
    return trimmed


def charge(word) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    word = tuple(int(x) for x in word)
    if not word:
        return 0
    top = max(word)
    mult = [0] * top
    for x in word:
        if x < 1:
            raise InvalidContent("letters must be positive integers")
        mult[x - 1] += 1
    if any(mult[i] < mult[i + 1] for i in range(top - 1)) or 0 in mult:
        raise InvalidContent(f"content {tuple(mult)} is not a partition")

    entries = list(enumerate(word))  # (position, letter), position order
    total = 0
    while entries:
        top = max(letter for _, letter in entries)
        # letter 1: first found reading right to left
        pos = {1: next(p for p, letter in reversed(entries) if letter == 1)}
        for target in range(2, top + 1):
            here = pos[target - 1]
            before = [p for p, letter in entries if letter == target and p < here]
            after = [p for p, letter in entries if letter == target and p > here]
            # continue leftward, wrapping to the right end if needed
            pos[target] = max(before) if before else max(after)
        index = 0
        for target in range(2, top + 1):
            if pos[target] > pos[target - 1]:
                index += 1
            total += index
        chosen = set(pos.values())
        entries = [e for e in entries if e[0] not in chosen]
    return total


def _horizontal_strips(inner, outer_bound, size):
    """Partitions obtained from ``inner`` by adding ``size`` boxes, no two
    in a column, staying under ``outer_bound`` row lengths."""
    n = len(outer_bound)

    def rec(row, remaining, above_prev):
        if row == n:
            if remaining == 0:
                yield ()
            return
        low = inner[row]
        high = min(outer_bound[row], above_prev, low + remaining)
        for length in range(low, high + 1):
            for rest in rec(row + 1, remaining - (length - low), inner[row]):
                yield (length,) + rest

    yield from rec(0, size, outer_bound[0])


def column_strict_tableaux(shape, content):
    """All fillings with weakly increasing rows and strictly increasing
    columns, of the given shape and content, as row tuples."""
    shape = tuple(shape)
    n = len(shape)

    def rec(level, current):
        if level == len(content):
            if current == shape:
                yield (current,)
            return
        for nxt in _horizontal_strips(current, shape, content[level]):
            for chain in rec(level + 1, nxt):
                yield (current,) + chain

    start = (0,) * n
    for chain in rec(0, start):
        rows = [[] for _ in range(n)]
        for value in range(1, len(content) + 1):
            before, after = chain[value - 1], chain[value]
            for r in range(n):
                rows[r].extend([value] * (after[r] - before[r]))
        yield tuple(tuple(r) for r in rows)


def reading_word(rows) -> tuple[int, ...]:
    """Rows left to right, bottom row first."""
    out = []
    for row in reversed(rows):
        out.extend(row)
    return tuple(out)


def kostka_foulkes(nu, gamma) -> IntPolynomial:
    """Charge generating function over column-strict tableaux of shape nu.

    The content is sorted to a partition first; the polynomial only
    depends on the multiset of entries of gamma.
    """
    nu = _as_partition(nu)
    gamma = tuple(int(g) for g in gamma)
    if any(g < 0 for g in gamma):
        raise InvalidContent("content entries must be nonnegative")
    if sum(nu) != sum(gamma):
        raise SizeMismatch(f"|{nu}| != |{gamma}|")
    content = tuple(sorted((g for g in gamma if g), reverse=True))
    coeffs: dict[int, int] = {}
    for rows in column_strict_tableaux(nu, content):
        c = charge(reading_word(rows))
        coeffs[c] = coeffs.get(c, 0) + 1
    if not coeffs:
        return IntPolynomial()
    out = [0] * (max(coeffs) + 1)
    for c, v in coeffs.items():
        out[c] = v
    return IntPolynomial(out)


@functools.lru_cache(maxsize=None)
def _type_a_positive_roots(m):
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            vec = [0] * m
            vec[i], vec[j] = 1, -1
            roots.append((i, j, tuple(vec)))
    return tuple(roots)


def _prefixes_ok(beta):
    total = 0
    for x in beta:
        total += x
        if total < 0:
            return False
    return total == 0


@functools.lru_cache(maxsize=None)
def _q_partition(beta: tuple, idx: int) -> tuple:
    """Coefficients of the q-partition count of ``beta`` using the roots
    from position ``idx`` on; exponent = number of roots used."""
    m = len(beta)
    roots = _type_a_positive_roots(m)
    if idx == len(roots):
        return (1,) if not any(beta) else ()
    i, j, _ = roots[idx]
    # roots from idx on never touch coordinates before i
    if any(beta[t] for t in range(i)):
        return ()
    prefix = list(itertools.accumulate(beta))
    kmax = min(prefix[i:j])
    if kmax < 0:
        return ()
    out: list[int] = []
    for k in range(kmax + 1):
        shifted = list(beta)
        shifted[i] -= k
        shifted[j] += k
        sub = _q_partition(tuple(shifted), idx + 1)
        if sub:
            need = k + len(sub)
            if len(out) < need:
                out.extend([0] * (need - len(out)))
            for e, c in enumerate(sub):
                out[k + e] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _sign_from_decreasing(perm) -> int:
    """Parity of the rearrangement relative to the strictly decreasing
    arrangement of the same entries."""
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] < perm[b]:
                sign = -sign
    return sign


def q_kostant(nu, gamma, cap: int = DEFAULT_WEYL_SUM_CAP) -> IntPolynomial:
    """Alternating Weyl sum against the q-deformed partition function.

    Independent of the charge route; exponential in the number of parts,
    hence the cap.
    """
    nu = _as_partition(nu)
    if any(int(g) < 0 for g in gamma):
        raise InvalidContent("content entries must be nonnegative")
    gamma_sorted = tuple(sorted((int(g) for g in gamma if g), reverse=True))
    if sum(nu) != sum(gamma_sorted):
        raise SizeMismatch(f"|{nu}| != |{tuple(gamma)}|")
    m = max(len(nu), len(gamma_sorted), 1)
    if m > cap:
        raise OracleTooLarge(f"would sum over S_{m}; cap is {cap}")
    lam = nu + (0,) * (m - len(nu))
    mu = gamma_sorted + (0,) * (m - len(gamma_sorted))
    rho = tuple(range(m - 1, -1, -1))
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    target = tuple(a + b for a, b in zip(mu, rho))

    total = IntPolynomial()
    for perm in itertools.permutations(lam_rho):
        beta = tuple(a - b for a, b in zip(perm, target))
        if not _prefixes_ok(beta):
            continue
        part = _q_partition(beta, 0)
        if part:
            total = total + _sign_from_decreasing(perm) * IntPolynomial(part)
    return total


def invariant_dim(seq: WeightSequence) -> int:
    """Dimension of the invariant space of the tensor product of the
    sequence, by iterated orbit sums with dot-action reflection signs.

    Shares no code with path or crystal enumeration, which is the point.
    """
    rs = seq.rs
    rho = (1,) * rs.rank
    state = {rs.zero(): 1}
    for lam in seq.weights:
        orbit = weyl_orbit(rs, lam)
        fresh: dict[tuple, int] = {}
        for mu, mult in state.items():
            for x in orbit:
                shifted = _add(_add(mu, x), rho)
                dom, word = to_dominant(rs, shifted)
                if 0 in dom:
                    continue  # on a wall: the term cancels
                target = tuple(a - b for a, b in zip(dom, rho))
                sign = -1 if len(word) % 2 else 1
                fresh[target] = fresh.get(target, 0) + sign * mult
        state = {k: v for k, v in fresh.items() if v}
    return state.get(rs.zero(), 0)
