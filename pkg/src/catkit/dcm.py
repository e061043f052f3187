"""
The double Catalan monoid: boolean matrices generated by thickened
transpositions.

The i-th generator is the identity matrix with the 2x2 block at rows and
columns i, i+1 filled; equivalently the semiring sum of the identity and
the i-th simple transposition.  The submonoid these generate inside the
binary relations consists of convex matrices and is the image of the
0-Hecke monoid under the projection sending the element of a permutation w
to the interval fill of (prefix maxima, suffix minima) of w.

The projection is computed by two independent routes, generator products
and interval fill, and the two must agree; a mismatch is an internal error,
never user error.

Fibers of the projection are scanned exhaustively over S_n.  Each fiber
carries a unique 4321-avoiding member, which is also its Bruhat minimum;
its Bruhat-maximal members are exactly the 4231-avoiding ones, and fibers
are Bruhat convex.  The analogous statements for the one-sided projection
onto the non-decreasing Catalan monoid (321/312-avoiding witnesses, fibers
are Bruhat intervals) are implemented alongside.

The finite presentation (idempotency, distant commutation, braid moves,
plus one extra length 5 = 6 relation) is verified by bounded congruence
closure over all words up to length n(n-1)/2 + 2, with a stability re-run
one letter longer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import boolmat as bm
from . import permutations as pm
from .boolmat import BoolMat
from .monoid import MonoidTable, generate_monoid
from .permutations import MonotoneMap, Perm

DEFAULT_DEGREE_CAP = 8
DEFAULT_WORD_GUARD = 1 << 26


class InternalInconsistency(AssertionError):
    """The two computation routes for the projection disagreed."""


class WordGuardExceeded(RuntimeError):
    """The bounded word graph would exceed the configured memory guard."""


def generator(i: int, n: int) -> BoolMat:
    """The i-th monoid generator: identity plus the i-th simple transposition."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for degree {n}")
    return bm.union(bm.identity_mat(n),
                    bm.from_perm(pm.simple_transposition(i, n)))


def generators(n: int) -> list[BoolMat]:
    return [generator(i, n) for i in range(1, n)]


def dc_of_perm(w: Perm) -> BoolMat:
    """The image of the 0-Hecke element of w in the double Catalan monoid.

    Computed both as the generator product along a reduced word of w and as
    the interval fill of (prefix maxima, suffix minima); the routes must
    agree.
    """
    n = len(w)
    by_word = bm.identity_mat(n)
    for i in pm.reduced_word(w):
        by_word = bm.mul(by_word, generator(i, n))
    by_fill = bm.from_map_pair(pm.ltr_maxima(w), pm.rtl_minima(w))
    if by_word != by_fill:
        raise InternalInconsistency(
            f"projection routes disagree for {pm.format_perm(w)}")
    return by_fill


@lru_cache(maxsize=None)
def dc_monoid(n: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> MonoidTable:
    """Closure table of the double Catalan monoid of degree n."""
    if n > degree_cap:
        raise ValueError(f"degree {n} above cap {degree_cap}")
    return generate_monoid(generators(n), bm.mul, bm.identity_mat(n))


@lru_cache(maxsize=None)
def projection_fibers(n: int) -> dict[BoolMat, tuple[Perm, ...]]:
    """All fibers of the projection, by exhaustive scan of S_n."""
    fibers: dict[BoolMat, list[Perm]] = {}
    for w in pm.all_perms(n):
        fibers.setdefault(dc_of_perm(w), []).append(w)
    return {x: tuple(ws) for x, ws in fibers.items()}


def fiber(x: BoolMat) -> tuple[Perm, ...]:
    """All permutations whose projection is x; empty means x is not in the monoid."""
    members = projection_fibers(x.n).get(x, ())
    if not members:
        raise ValueError("matrix is not an element of the double Catalan monoid")
    return members


_P4321 = (4, 3, 2, 1)
_P4231 = (4, 2, 3, 1)


@dataclass(frozen=True)
class FiberReport:
    tau: Perm                      # the unique 4321-avoiding member, Bruhat least
    maximal: frozenset[Perm]       # Bruhat-maximal members, all 4231-avoiding
    convex: bool


def fiber_analysis(x: BoolMat) -> FiberReport:
    """Structure of one projection fiber; uniqueness failures raise."""
    members = fiber(x)
    avoiders = [w for w in members if pm.avoids(w, _P4321)]
    if len(avoiders) != 1:
        raise InternalInconsistency(
            f"fiber has {len(avoiders)} 4321-avoiding members")
    tau = avoiders[0]
    if not all(pm.bruhat_leq(tau, w) for w in members):
        raise InternalInconsistency("4321-avoiding member is not the minimum")
    member_set = set(members)
    maximal = frozenset(
        w for w in members
        if not any(v != w and pm.bruhat_leq(w, v) for v in member_set))
    if maximal != frozenset(w for w in members if pm.avoids(w, _P4231)):
        raise InternalInconsistency(
            "maximal members are not exactly the 4231-avoiding ones")
    n = x.n
    convex = all(
        v in member_set
        for u in members for w in members
        if u != w and pm.bruhat_leq(u, w)
        for v in pm.all_perms(n)
        if pm.bruhat_leq(u, v) and pm.bruhat_leq(v, w))
    return FiberReport(tau=tau, maximal=maximal, convex=convex)


def first_multimaximal_fiber(n: int) -> tuple[BoolMat, frozenset[Perm]] | None:
    """First fiber (in closure order) of degree n with several maximal members.

    The smallest degree admitting one is 7, where a single fiber has the
    two maximal members 5276143 and 5472163.
    """
    table = dc_monoid(n)
    fibers = projection_fibers(n)
    for x in table.elements:
        members = fibers[x]
        member_set = set(members)
        maximal = frozenset(
            w for w in members
            if not any(v != w and pm.bruhat_leq(w, v) for v in member_set))
        if len(maximal) > 1:
            return x, maximal
    return None


@dataclass(frozen=True)
class CatalanFiberReport:
    pi: Perm        # unique 321-avoiding member, Bruhat least
    pi_prime: Perm  # unique 312-avoiding member, Bruhat greatest
    interval: bool  # fiber equals the Bruhat interval [pi, pi_prime]


def catalan_fiber_analysis(alpha: MonotoneMap) -> CatalanFiberReport:
    """Structure of the fiber of one prefix-maxima value."""
    n = len(alpha)
    pi = pm.min_perm_with_maxima(alpha)
    members = [w for w in pm.all_perms(n) if pm.ltr_maxima(w) == tuple(alpha)]
    member_set = set(members)
    if pm.ltr_maxima(pi) != tuple(alpha) or not pm.avoids(pi, (3, 2, 1)):
        raise InternalInconsistency("recursion witness invalid")
    if [w for w in members if pm.avoids(w, (3, 2, 1))] != [pi]:
        raise InternalInconsistency("321-avoiding member not unique")
    primes = [w for w in members if pm.avoids(w, (3, 1, 2))]
    if len(primes) != 1:
        raise InternalInconsistency("312-avoiding member not unique")
    pi_prime = primes[0]
    if not all(pm.bruhat_leq(pi, w) and pm.bruhat_leq(w, pi_prime)
               for w in members):
        raise InternalInconsistency("fiber not bounded by its witnesses")
    interval = all((v in member_set) ==
                   (pm.bruhat_leq(pi, v) and pm.bruhat_leq(v, pi_prime))
                   for v in pm.all_perms(n))
    return CatalanFiberReport(pi=pi, pi_prime=pi_prime, interval=interval)


# ---------------------------------------------------------------------------
# Self-dual elements and idempotents.

def is_symmetric(x: BoolMat) -> bool:
    return bm.transpose(x) == x


def self_dual_count(n: int) -> int:
    """Number of symmetric elements; equals the n-th Motzkin number."""
    return sum(1 for x in dc_monoid(n).elements if is_symmetric(x))


def motzkin_number(k: int) -> int:
    """Motzkin numbers by the convolution recurrence, M_0 = M_1 = 1."""
    m = [1, 1]
    while len(m) <= k:
        prev = len(m) - 1
        m.append(m[prev] + sum(m[i] * m[prev - 1 - i] for i in range(prev)))
    return m[k]


def is_block_all_ones(x: BoolMat) -> bool:
    """Block diagonal with every diagonal block entirely filled."""
    i = 0
    while i < x.n:
        row = x.rows[i]
        if not bm._is_interval_mask(row) or not (row >> i) & 1:
            return False
        lo = (row & -row).bit_length() - 1
        hi = row.bit_length()
        if lo != i:
            return False
        if any(x.rows[k] != row for k in range(lo, hi)):
            return False
        i = hi
    return True


def dc_idempotents(n: int) -> list[BoolMat]:
    """All idempotents of the monoid; block all-ones matrices, 2^(n-1) many."""
    table = dc_monoid(n)
    return [table.elements[i] for i in table.idempotent_indices()]


# ---------------------------------------------------------------------------
# Presentation verification by bounded congruence closure.

def presentation_relations(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Defining relation pairs on letters 1..n-1 (words as letter tuples)."""
    rels = []
    for i in range(1, n):
        rels.append(((i, i), (i,)))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(((i, j), (j, i)))
    for i in range(1, n - 1):
        rels.append(((i, i + 1, i), (i + 1, i, i + 1)))
    for i in range(1, n - 2):
        rels.append(((i, i + 1, i + 2, i + 1, i),
                     (i, i + 1, i + 2, i, i + 1, i)))
    return rels


@dataclass(frozen=True)
class PresentationReport:
    presented_size: int
    matches: bool
    stable: bool


def _word_offsets(a: int, max_len: int) -> list[int]:
    """offsets[l] = number of words of length < l over an a-letter alphabet."""
    offsets = [0]
    for length in range(max_len + 1):
        offsets.append(offsets[-1] + a ** length)
    return offsets


def _components_dsu(a: int, rels, max_len: int, short_len: int) -> list[int]:
    """Min-code component labels of all words of length <= short_len."""
    offsets = _word_offsets(a, max_len)
    total = offsets[max_len + 1]
    parent = list(range(total))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(v: int, w: int) -> None:
        rv, rw = find(v), find(w)
        if rv == rw:
            return
        if rv > rw:
            rv, rw = rw, rv
        parent[rw] = rv  # root is the minimal code of its component

    sides = []
    for lhs, rhs in rels:
        sides.append((lhs, rhs))
        sides.append((rhs, lhs))

    def code(word: tuple[int, ...]) -> int:
        v = 0
        for d in word:
            v = v * a + d
        return offsets[len(word)] + v

    for length in range(max_len + 1):
        for word in itertools.product(range(a), repeat=length):
            c = code(word)
            for lhs, rhs in sides:
                k = len(lhs)
                if length - k + len(rhs) > max_len:
                    continue
                for p in range(length - k + 1):
                    if word[p:p + k] == lhs:
                        union(c, code(word[:p] + rhs + word[p + k:]))
    return [find(c) for c in range(offsets[short_len + 1])]


def _components_numpy(a: int, rels, max_len: int, short_len: int) -> list[int]:
    """Same labels as the union-find route, by vectorized label propagation.

    Words of length l are the integer block [offsets[l], offsets[l+1]); a
    substring rewrite at position p is an affine map between such blocks,
    so every edge batch of the rewrite graph is enumerated arithmetically.
    Within one batch sources and targets are pairwise distinct, which makes
    plain fancy-indexed minimum updates safe.
    """
    import numpy as np

    offsets = _word_offsets(a, max_len)
    total = offsets[max_len + 1]
    labels = np.arange(total, dtype=np.int64)

    batches = []
    for lhs, rhs in rels:
        lhs_code = 0
        for d in lhs:
            lhs_code = lhs_code * a + d
        rhs_code = 0
        for d in rhs:
            rhs_code = rhs_code * a + d
        k, k2 = len(lhs), len(rhs)
        for length in range(k, max_len + 1):
            if length - k + k2 > max_len:
                continue
            for p in range(length - k + 1):
                t = length - p - k
                batches.append((length, length - k + k2, p, t,
                                lhs_code, rhs_code, k, k2))

    chunk = 1 << 22
    while True:
        changed = False
        for (l1, l2, p, t, c1, c2, k, k2) in batches:
            pcount = a ** p
            tcount = a ** t
            base1 = offsets[l1] + c1 * tcount
            base2 = offsets[l2] + c2 * tcount
            step1 = a ** (k + t)
            step2 = a ** (k2 + t)
            lo = np.arange(tcount, dtype=np.int64)
            for start in range(0, pcount, max(1, chunk // max(tcount, 1))):
                stop = min(pcount, start + max(1, chunk // max(tcount, 1)))
                hi = np.arange(start, stop, dtype=np.int64)
                src = (base1 + hi[:, None] * step1 + lo[None, :]).ravel()
                dst = (base2 + hi[:, None] * step2 + lo[None, :]).ravel()
                ls = labels[src]
                ld = labels[dst]
                m = np.minimum(ls, ld)
                if not changed and (np.any(m < ls) or np.any(m < ld)):
                    changed = True
                labels[src] = m
                labels[dst] = m
        # pointer jumping to speed up convergence
        for _ in range(2):
            labels = np.minimum(labels, labels[labels])
        if not changed:
            break
    return labels[:offsets[short_len + 1]].tolist()


_DSU_LIMIT = 300_000


def _decode(code: int, a: int, max_len: int) -> tuple[int, ...]:
    offsets = _word_offsets(a, max_len)
    length = 0
    while offsets[length + 1] <= code:
        length += 1
    v = code - offsets[length]
    digits = []
    for _ in range(length):
        digits.append(v % a)
        v //= a
    return tuple(reversed(digits))


def _short_component_count(n: int, max_len: int, short_len: int,
                           word_guard: int, engine: str) -> tuple[int, list[int]]:
    a = n - 1
    rels = [(tuple(x - 1 for x in lhs), tuple(x - 1 for x in rhs))
            for lhs, rhs in presentation_relations(n)]
    offsets = _word_offsets(a, max_len)
    if offsets[max_len + 1] > word_guard:
        raise WordGuardExceeded(
            f"{offsets[max_len + 1]} words exceed guard {word_guard}; "
            "raise word_guard to proceed")
    if engine == "auto":
        engine = "dsu" if offsets[max_len + 1] <= _DSU_LIMIT else "numpy"
    if engine == "dsu":
        short_labels = _components_dsu(a, rels, max_len, short_len)
    elif engine == "numpy":
        short_labels = _components_numpy(a, rels, max_len, short_len)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    reps = sorted(set(short_labels))
    return len(reps), reps


def verify_presentation(n: int, *, word_guard: int = DEFAULT_WORD_GUARD,
                        engine: str = "auto") -> PresentationReport:
    """Check that the relation list presents the degree-n monoid.

    Builds the congruence generated by two-sided substring rewrites on all
    words up to length n(n-1)/2 + 2, counts components that touch a word of
    length <= n(n-1)/2, and compares with the monoid closure; components
    must also evaluate to pairwise distinct monoid elements.  The count is
    then recomputed with the length bound raised by one; a change means the
    truncation was too tight and is reported, never silently accepted.
    """
    if n < 2:
        raise ValueError("presentation needs at least one generator")
    table = dc_monoid(n)
    short_len = n * (n - 1) // 2
    max_len = short_len + 2
    count, reps = _short_component_count(n, max_len, short_len,
                                         word_guard, engine)
    a = n - 1
    evaluations = set()
    for rep in reps:
        word = _decode(rep, a, max_len)
        x = bm.identity_mat(n)
        for letter in word:
            x = bm.mul(x, generator(letter + 1, n))
        evaluations.add(x)
    matches = (count == len(table)) and (len(evaluations) == count)
    count2, _ = _short_component_count(n, max_len + 1, short_len,
                                       word_guard, engine)
    return PresentationReport(presented_size=count,
                              matches=matches,
                              stable=(count2 == count))
