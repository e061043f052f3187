"""
Finite Coxeter systems as concrete permutation groups, with the 0-Hecke
arithmetic and parabolic coset combinatorics built on top.

A system is materialized from involutive generator permutations on a finite
carrier set.  Built-in families: type A (rank k acting on k+1 points),
type B (rank k on 2k signed points, the last generator flipping a sign) and
the dihedral types (rank 2 on the vertices of a polygon).  Lengths come
from breadth-first search of the right Cayley graph, which also hands every
element a reduced word; descent sets, the longest element and its
generator conjugation are read off the tables.

A parabolic subgroup here is always standard (generated by a subset J of
the generators).  Each left coset has a unique longest representative,
characterized by its right descent set containing J, and the 0-Hecke
product with the parabolic's top idempotent projects any element onto its
coset's longest representative.  On those representatives the generators
act by foldings, giving the generalized Catalan quotient (a monoid of
non-decreasing transformations of the coset poset) and, through the
boolean matrices of the coset action, the generalized double Catalan
quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import boolmat as bm
from .monoid import MonoidTable, generate_monoid

CarrierPerm = tuple[int, ...]  # permutation of 0..m-1, value at index


def _compose(u: CarrierPerm, w: CarrierPerm) -> CarrierPerm:
    return tuple(u[x] for x in w)


def _perm_order(p: CarrierPerm, cap: int = 64) -> int:
    n = len(p)
    cur = p
    ident = tuple(range(n))
    for k in range(1, cap + 1):
        if cur == ident:
            return k
        cur = _compose(cur, p)
    raise ValueError("permutation order exceeds cap")


class CoxeterError(ValueError):
    pass


@dataclass(frozen=True)
class CoxeterSystem:
    name: str
    gen_perms: tuple[CarrierPerm, ...]
    matrix: tuple[tuple[int, ...], ...]
    elements: tuple[CarrierPerm, ...]
    index: dict = field(hash=False, compare=False, repr=False)
    length: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    left: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.gen_perms)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> tuple[int, ...]:
        """Element indices of the generators."""
        return tuple(self.index[g] for g in self.gen_perms)

    @property
    def longest(self) -> int:
        """Index of the longest element (unique in a finite system)."""
        top = max(range(self.order), key=lambda i: self.length[i])
        return top

    def right_descents(self, i: int) -> frozenset[int]:
        return frozenset(s for s in range(self.rank)
                         if self.length[self.right[i][s]] < self.length[i])

    def left_descents(self, i: int) -> frozenset[int]:
        return frozenset(s for s in range(self.rank)
                         if self.length[self.left[i][s]] < self.length[i])

    def longest_conjugation(self) -> tuple[int, ...]:
        """The permutation s -> w0 s w0 of generator positions."""
        w0 = self.longest
        out = []
        for s in range(self.rank):
            conj = self.index[_compose(_compose(self.elements[w0],
                                                self.gen_perms[s]),
                                       self.elements[w0])]
            out.append(self.generators.index(conj))
        return tuple(out)

    def group_mul(self, i: int, j: int) -> int:
        return self.index[_compose(self.elements[i], self.elements[j])]


def coxeter_system(gen_perms: list[CarrierPerm],
                   matrix: list[list[int]] | None = None,
                   cap: int = 10_000, name: str = "") -> CoxeterSystem:
    """Build the full element table of the group generated by gen_perms.

    The generators must be involutions and, when a Coxeter matrix is given,
    the product orders must realize it exactly.
    """
    gens = tuple(tuple(g) for g in gen_perms)
    r = len(gens)
    carrier = len(gens[0]) if gens else 0
    if any(len(g) != carrier for g in gens):
        raise CoxeterError("generators act on different carriers")
    for s, g in enumerate(gens):
        if sorted(g) != list(range(carrier)):
            raise CoxeterError(f"generator {s} is not a permutation")
        if _compose(g, g) != tuple(range(carrier)):
            raise CoxeterError(f"generator {s} is not an involution")
    orders = [[1 if s == t else _perm_order(_compose(gens[s], gens[t]))
               for t in range(r)] for s in range(r)]
    if matrix is not None:
        given = [list(row) for row in matrix]
        if given != orders:
            raise CoxeterError(
                f"generators do not satisfy the Coxeter matrix: "
                f"got orders {orders}")
    matrix_t = tuple(tuple(row) for row in orders)

    ident = tuple(range(carrier))
    elements = [ident]
    index = {ident: 0}
    length = [0]
    words: list[tuple[int, ...]] = [()]
    right: list[list[int]] = []
    pos = 0
    while pos < len(elements):
        x = elements[pos]
        row = []
        for s, g in enumerate(gens):
            y = _compose(x, g)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CoxeterError(f"group exceeds element cap {cap}")
                index[y] = j
                elements.append(y)
                length.append(length[pos] + 1)
                words.append(words[pos] + (s,))
            row.append(j)
        right.append(row)
        pos += 1
    left = [[index[_compose(g, x)] for g in gens] for x in elements]

    sys = CoxeterSystem(name=name, gen_perms=gens, matrix=matrix_t,
                        elements=tuple(elements), index=index,
                        length=tuple(length), words=tuple(words),
                        right=tuple(tuple(row) for row in right),
                        left=tuple(tuple(row) for row in left))
    top = sys.longest
    if sum(1 for i in range(sys.order)
           if sys.length[i] == sys.length[top]) != 1:
        raise CoxeterError("longest element is not unique; group not Coxeter?")
    return sys


def type_a(rank: int, cap: int = 10_000) -> CoxeterSystem:
    """Symmetric group of degree rank+1 acting on rank+1 points."""
    n = rank + 1
    gens = []
    for i in range(rank):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    return coxeter_system(gens, cap=cap, name=f"A{rank}")


def type_b(rank: int, cap: int = 10_000) -> CoxeterSystem:
    """Hyperoctahedral group on 2*rank signed points; order 2^rank * rank!."""
    m = 2 * rank
    gens = []
    for i in range(rank - 1):
        p = list(range(m))
        p[i], p[i + 1] = p[i + 1], p[i]
        p[rank + i], p[rank + i + 1] = p[rank + i + 1], p[rank + i]
        gens.append(tuple(p))
    p = list(range(m))
    p[rank - 1], p[2 * rank - 1] = p[2 * rank - 1], p[rank - 1]
    gens.append(tuple(p))
    return coxeter_system(gens, cap=cap, name=f"B{rank}")


def dihedral(m: int, cap: int = 10_000) -> CoxeterSystem:
    """The dihedral system of order 2m on the 2m vertices of a polygon."""
    if m < 2:
        raise CoxeterError("dihedral parameter must be at least 2")
    pts = 2 * m
    s = tuple((1 - v) % pts for v in range(pts))
    t = tuple((-1 - v) % pts for v in range(pts))
    return coxeter_system([s, t], cap=cap, name=f"I2({m})")


def from_type_string(text: str, cap: int = 10_000) -> CoxeterSystem:
    """Parse "A4", "B3", "I2:6" or "I2(6)" into a built system."""
    text = text.strip()
    if text.startswith("I2"):
        token = text[2:].lstrip(":(").rstrip(")")
        return dihedral(int(token), cap=cap)
    family, value = text[0].upper(), int(text[1:])
    if family == "A":
        return type_a(value, cap=cap)
    if family == "B":
        return type_b(value, cap=cap)
    raise CoxeterError(f"unknown type string {text!r}")


# ---------------------------------------------------------------------------
# 0-Hecke arithmetic on element indices.

def e_mul(sys: CoxeterSystem, s: int, i: int, side: str = "left") -> int:
    """Fold by the s-th generator: move to the longer neighbor or stay."""
    if not 0 <= s < sys.rank:
        raise ValueError(f"generator {s} out of range")
    j = sys.left[i][s] if side == "left" else sys.right[i][s]
    return j if sys.length[j] > sys.length[i] else i


def hecke_mul(sys: CoxeterSystem, i: int, j: int) -> int:
    """0-Hecke product, folding j's reduced word into i on the right."""
    cur = i
    for s in sys.words[j]:
        cur = e_mul(sys, s, cur, side="right")
    return cur


def bruhat_leq(sys: CoxeterSystem, u: int, w: int) -> bool:
    """Bruhat order by descent recursion on reduced words."""
    if sys.length[u] > sys.length[w]:
        return False
    if u == w:
        return True
    if sys.length[w] == 0:
        return u == w
    s = min(sys.left_descents(w))
    sw = sys.left[w][s]
    su = sys.left[u][s]
    if sys.length[su] < sys.length[u]:
        return bruhat_leq(sys, su, sw)
    return bruhat_leq(sys, u, sw)


# ---------------------------------------------------------------------------
# Parabolic subgroups and cosets.

@dataclass(frozen=True)
class Parabolic:
    J: frozenset[int]
    members: tuple[int, ...]    # element indices of the subgroup
    longest: int                # index of the subgroup's longest element
    max_reps: tuple[int, ...]   # longest coset representatives, table order


def parabolic(sys: CoxeterSystem, J: frozenset[int] | set[int]) -> Parabolic:
    J = frozenset(J)
    if any(not 0 <= s < sys.rank for s in J):
        raise ValueError("generator index out of range")
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for s in J:
                j = sys.right[i][s]
                if j not in members:
                    members.add(j)
                    nxt.append(j)
        frontier = nxt
    member_tuple = tuple(sorted(members))
    longest = max(member_tuple, key=lambda i: sys.length[i])
    max_reps = tuple(i for i in range(sys.order)
                     if sys.right_descents(i) >= J)
    if len(max_reps) * len(member_tuple) != sys.order:
        raise RuntimeError("coset representative count inconsistent")
    return Parabolic(J=J, members=member_tuple, longest=longest,
                     max_reps=max_reps)


def coset_max_rep(sys: CoxeterSystem, J: frozenset[int] | set[int],
                  i: int) -> int:
    """The longest element of the coset of element i modulo the J-parabolic,
    computed as the 0-Hecke product with the parabolic's top idempotent."""
    para = parabolic(sys, J)
    return hecke_mul(sys, i, para.longest)


def cosets(sys: CoxeterSystem, J: frozenset[int] | set[int]) -> tuple[
        tuple[frozenset[int], ...], tuple[int, ...]]:
    """Left cosets modulo the J-parabolic.

    Returned as (coset member sets, coset id per element); cosets are
    numbered by first appearance when scanning elements in table order,
    i.e. breadth-first by minimal coset length.
    """
    para = parabolic(sys, J)
    coset_id = [-1] * sys.order
    sets: list[frozenset[int]] = []
    for i in range(sys.order):
        if coset_id[i] >= 0:
            continue
        members = frozenset(sys.group_mul(i, u) for u in para.members)
        cid = len(sets)
        sets.append(members)
        for x in members:
            coset_id[x] = cid
    return tuple(sets), tuple(coset_id)


def coset_action(sys: CoxeterSystem, J: frozenset[int] | set[int]) -> list[CarrierPerm]:
    """For each generator, its left-multiplication permutation of the cosets."""
    sets, coset_id = cosets(sys, J)
    out = []
    for s in range(sys.rank):
        images = []
        for members in sets:
            rep = next(iter(members))
            images.append(coset_id[sys.left[rep][s]])
        out.append(tuple(images))
    return out


def vertex_count(sys: CoxeterSystem) -> int:
    """Sum of the indices of the maximal parabolic subgroups."""
    total = 0
    for s in range(sys.rank):
        J = frozenset(range(sys.rank)) - {s}
        total += sys.order // len(parabolic(sys, J).members)
    return total


# ---------------------------------------------------------------------------
# Generalized Catalan and double Catalan quotients.

def _compose_transformation(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x[v] for v in y)


def catalan_quotient(sys: CoxeterSystem,
                     J: frozenset[int] | set[int]) -> MonoidTable:
    """The transformation monoid of the folding action on the longest coset
    representatives (equivalently on the left ideal of the J idempotent)."""
    para = parabolic(sys, J)
    position = {w: k for k, w in enumerate(para.max_reps)}
    gens = []
    for s in range(sys.rank):
        gens.append(tuple(position[e_mul(sys, s, w, side="left")]
                          for w in para.max_reps))
    ident = tuple(range(len(para.max_reps)))
    return generate_monoid(gens, _compose_transformation, ident)


def double_catalan_quotient(sys: CoxeterSystem,
                            J: frozenset[int] | set[int]) -> MonoidTable:
    """Boolean-matrix monoid generated by identity + coset permutation, one
    generator per Coxeter generator, acting on the cosets of the J-parabolic."""
    action = coset_action(sys, J)
    m = len(action[0]) if action else 1
    gens = []
    for sigma in action:
        rows = [1 << c for c in range(m)]
        for j, image in enumerate(sigma):
            rows[image] |= 1 << j
        gens.append(bm.BoolMat(m, tuple(rows)))
    return generate_monoid(gens, bm.mul, bm.identity_mat(m))
