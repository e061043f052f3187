"""
Exact linear algebra for 0-Hecke modules and minimal effective dimensions.

The projective module attached to a generator s has basis the longest coset
representatives modulo the complementary maximal parabolic; each generator
acts by folding, so its matrix is 0/1 with at most one 1 per column and is
stored as a column map (basis index to basis index, or None once the
longest element has been projected away).  Dropping the one-dimensional
span of the longest element leaves the interesting summand, whose socle is
one-dimensional.

All eigenspace and socle computations run over the rationals via
fraction-free (Bareiss) elimination with deterministic pivoting, so reports
are reproducible; an optional prime modulus reruns the same elimination in
characteristic p as a spot check (the action matrices are 0/1, so the
answers are characteristic-free).

Effectiveness checks multiply column maps along reduced words, caching one
matrix per group element by dynamic programming over the element table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import coxeter as cx
from .coxeter import CoxeterSystem

ColumnMap = tuple  # tuple[int | None, ...]


def _compose_colmap(outer: ColumnMap, inner: ColumnMap) -> ColumnMap:
    return tuple(None if v is None else outer[v] for v in inner)


@dataclass(frozen=True)
class HeckeModule:
    sys: CoxeterSystem
    labels: tuple            # one label per basis vector
    action: tuple[ColumnMap, ...]   # one column map per generator

    @property
    def dim(self) -> int:
        return len(self.labels)

    def matrix(self, s: int) -> list[list[int]]:
        """Dense 0/1 matrix of the s-th generator."""
        m = [[0] * self.dim for _ in range(self.dim)]
        for j, i in enumerate(self.action[s]):
            if i is not None:
                m[i][j] = 1
        return m


def projective_module(sys: CoxeterSystem, s: int) -> HeckeModule:
    """The left ideal of the idempotent complementary to s, as a module.

    Basis: longest coset representatives modulo the parabolic on the other
    generators; dimension is the index of that parabolic.
    """
    J = frozenset(range(sys.rank)) - {s}
    para = cx.parabolic(sys, J)
    position = {w: k for k, w in enumerate(para.max_reps)}
    action = []
    for t in range(sys.rank):
        action.append(tuple(position[cx.e_mul(sys, t, w, side="left")]
                            for w in para.max_reps))
    return HeckeModule(sys=sys, labels=para.max_reps, action=tuple(action))


def drop_trivial_summand(module: HeckeModule) -> tuple[HeckeModule, HeckeModule]:
    """Split off the span of the longest element.

    Returns (reduced, trivial): the reduced module has basis the differences
    label - longest, with the image of a basis vector hitting the longest
    element becoming zero (None in the column map).
    """
    sys = module.sys
    w0 = sys.longest
    if w0 not in module.labels:
        raise ValueError("module basis does not contain the longest element")
    keep = [k for k, w in enumerate(module.labels) if w != w0]
    renumber = {old: new for new, old in enumerate(keep)}
    action = []
    for colmap in module.action:
        new_map = []
        for old in keep:
            img = colmap[old]
            new_map.append(None if img not in renumber else renumber[img])
        action.append(tuple(new_map))
    reduced = HeckeModule(sys=sys,
                          labels=tuple(module.labels[k] for k in keep),
                          action=tuple(action))
    trivial = HeckeModule(sys=sys, labels=(w0,),
                          action=tuple((0,) for _ in range(sys.rank)))
    return reduced, trivial


def direct_sum(modules: Sequence[HeckeModule]) -> HeckeModule:
    if not modules:
        raise ValueError("empty direct sum")
    sys = modules[0].sys
    if any(m.sys is not sys for m in modules):
        raise ValueError("summands over different systems")
    labels = []
    action = [[] for _ in range(sys.rank)]
    offset = 0
    for mod in modules:
        labels.extend((offset, lab) for lab in mod.labels)
        for t in range(sys.rank):
            for v in mod.action[t]:
                action[t].append(None if v is None else v + offset)
        offset += mod.dim
    return HeckeModule(sys=sys, labels=tuple(labels),
                       action=tuple(tuple(col) for col in action))


# ---------------------------------------------------------------------------
# Eigenspace split of one generator.

@dataclass(frozen=True)
class EigenSplit:
    fixed: tuple[int, ...]                 # basis indices spanning the 1-eigenspace
    kernel_pairs: tuple[tuple[int, int], ...]  # (j, tj): vectors e_j - e_tj span ker

    @property
    def fixed_dim(self) -> int:
        return len(self.fixed)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_pairs)


def eigen_split(module: HeckeModule, t: int) -> EigenSplit:
    """Fixed space and kernel of an idempotent generator action.

    The fixed space is spanned by the basis vectors the generator fixes;
    the kernel by the differences along its two-element basis orbits.  The
    two always fill the module, which is re-checked by exact rank.
    """
    colmap = module.action[t]
    fixed = tuple(j for j, img in enumerate(colmap) if img == j)
    pairs = []
    for j, img in enumerate(colmap):
        if img != j and img is not None:
            if colmap[img] != img:
                raise RuntimeError("generator action not idempotent")
            pairs.append((j, img))
        elif img is None:
            # projected-away image: e_t e_j = 0 vector, contributes to kernel
            pairs.append((j, None))
    kernel_pairs = tuple(pairs)
    vectors = [_unit(module.dim, j) for j in fixed]
    for j, img in kernel_pairs:
        v = _unit(module.dim, j)
        if img is not None:
            v[img] = -1
        vectors.append(v)
    if len(vectors) != module.dim or matrix_rank(vectors) != module.dim:
        raise RuntimeError("eigenspaces do not span the module")
    return EigenSplit(fixed=fixed, kernel_pairs=kernel_pairs)


def _unit(n: int, j: int) -> list[int]:
    v = [0] * n
    v[j] = 1
    return v


# ---------------------------------------------------------------------------
# Fraction-free elimination, nullspaces, socles.

def _echelon(rows: list[list], p: int | None) -> tuple[list[list], list[int]]:
    """Row echelon form with pivots at (first nonzero column, smallest row).

    Over the integers this is Bareiss fraction-free elimination; with a
    prime modulus the same sweep runs in GF(p).
    """
    m = [list(row) for row in rows]
    if p is not None:
        m = [[x % p for x in row] for row in m]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    prev_pivot = 1
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            m[r], m[sel] = m[sel], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            factor = m[i][c]
            if p is None:
                for jc in range(c, ncols):
                    m[i][jc] = (pivot * m[i][jc] - factor * m[r][jc]) // prev_pivot
            else:
                inv = pow(pivot, -1, p)
                coef = factor * inv % p
                for jc in range(c, ncols):
                    m[i][jc] = (m[i][jc] - coef * m[r][jc]) % p
        prev_pivot = pivot if p is None else 1
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def matrix_rank(rows: list[list], p: int | None = None) -> int:
    if not rows:
        return 0
    _, pivots = _echelon(rows, p)
    return len(pivots)


def nullspace(rows: list[list], ncols: int, p: int | None = None) -> list[list]:
    """Canonical nullspace basis, one vector per free column.

    Over the rationals each vector is scaled to primitive integers with a
    positive leading entry; in characteristic p entries are reduced mod p.
    """
    if not rows:
        rows = [[0] * ncols]
    ech, pivots = _echelon(rows, p)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v: list = [Fraction(0)] * ncols if p is None else [0] * ncols
        v[fc] = Fraction(1) if p is None else 1
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            if p is None:
                s = sum(Fraction(ech[r][c]) * v[c]
                        for c in range(pc + 1, ncols) if v[c])
                v[pc] = -s / ech[r][pc]
            else:
                s = sum(ech[r][c] * v[c] for c in range(pc + 1, ncols)) % p
                v[pc] = (-s * pow(ech[r][pc], -1, p)) % p
        if p is None:
            denom_lcm = 1
            for x in v:
                denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm,
                                                             x.denominator)
            ints = [int(x * denom_lcm) for x in v]
            g = 0
            for x in ints:
                g = gcd(g, abs(x))
            if g > 1:
                ints = [x // g for x in ints]
            lead = next((x for x in ints if x != 0), 1)
            if lead < 0:
                ints = [-x for x in ints]
            basis.append(ints)
        else:
            basis.append(v)
    return basis


SocleReport = dict  # frozenset of generator indices -> list of basis vectors


def socle(module: HeckeModule, p: int | None = None) -> SocleReport:
    """For each generator subset J, the space of vectors fixed by the
    J-generators and killed by the rest; nonzero pieces assembled into the
    socle report."""
    sys = module.sys
    d = module.dim
    report: SocleReport = {}
    for mask in range(1 << sys.rank):
        J = frozenset(s for s in range(sys.rank) if mask >> s & 1)
        rows = []
        for t in range(sys.rank):
            mat = module.matrix(t)
            for i in range(d):
                row = list(mat[i])
                if t in J:
                    row[i] -= 1
                rows.append(row)
        basis = nullspace(rows, d, p)
        if basis:
            report[J] = basis
    return report


def socle_dimension(report: SocleReport) -> int:
    return sum(len(v) for v in report.values())


# ---------------------------------------------------------------------------
# Element matrices and effectiveness.

def element_column_maps(sys: CoxeterSystem, module: HeckeModule) -> list[ColumnMap]:
    """Column map of every 0-Hecke element, by DP along the element table."""
    ident = tuple(range(module.dim))
    maps: list[ColumnMap] = [ident] * sys.order
    for i in range(1, sys.order):
        word = sys.words[i]
        parent = sys.index[cx._compose(sys.elements[i],
                                       sys.gen_perms[word[-1]])]
        maps[i] = _compose_colmap(maps[parent], module.action[word[-1]])
    return maps


def is_effective(sys: CoxeterSystem, module: HeckeModule) -> bool:
    """Distinct 0-Hecke elements act by distinct matrices."""
    maps = element_column_maps(sys, module)
    return len(set(maps)) == sys.order


def simple_socle_check(sys: CoxeterSystem, s: int,
                       p: int | None = None) -> dict:
    """Verify the reduced projective of s has the predicted simple socle.

    Expected: one-dimensional, spanned by (longest * s) - longest, of type
    indexed by the complement of the conjugated generator.
    """
    reduced, _ = drop_trivial_summand(projective_module(sys, s))
    report = socle(reduced, p)
    w0 = sys.longest
    w0s = sys.right[w0][s]
    conj = sys.longest_conjugation()[s]
    expected_J = frozenset(range(sys.rank)) - {conj}
    expected_vec = [0] * reduced.dim
    expected_vec[reduced.labels.index(w0s)] = 1
    ok = (socle_dimension(report) == 1
          and set(report) == {expected_J}
          and len(report[expected_J]) == 1)
    if ok and p is None:
        ok = report[expected_J][0] == expected_vec
    return {
        "generator": s,
        "dimension": socle_dimension(report),
        "type": sorted(expected_J),
        "vector_label": w0s,
        "ok": bool(ok),
        "report": report,
    }


def min_dim_report(sys: CoxeterSystem, p: int | None = None) -> dict:
    """Build the direct sum of reduced projectives and certify it.

    claimed: vertex count minus rank; the construction must hit exactly
    that dimension, act effectively, and have all the predicted socles.
    """
    reduced_modules = []
    socle_ok = True
    for s in range(sys.rank):
        check = simple_socle_check(sys, s, p)
        socle_ok = socle_ok and check["ok"]
        reduced_modules.append(
            drop_trivial_summand(projective_module(sys, s))[0])
    total = direct_sum(reduced_modules)
    claimed = cx.vertex_count(sys) - sys.rank
    return {
        "type": sys.name,
        "claimed": claimed,
        "constructed_dim": total.dim,
        "effective": is_effective(sys, total),
        "socle_verified": socle_ok,
    }


def dc_min_dim(n: int) -> dict:
    """The minimal effective module of the double Catalan monoid.

    Direct sum of the reduced projectives of the first and last generators
    of the degree-n symmetric system; the action is constant on projection
    fibers (checked), so it is a module over the quotient, of dimension
    2n - 2, and distinct quotient elements must act by distinct matrices.
    """
    from . import dcm

    if n < 2:
        raise ValueError("degree must be at least 2")
    sys = cx.type_a(n - 1)
    first = drop_trivial_summand(projective_module(sys, 0))[0]
    last = drop_trivial_summand(projective_module(sys, sys.rank - 1))[0]
    total = direct_sum([first, last])
    maps = element_column_maps(sys, total)
    by_image: dict = {}
    for i in range(sys.order):
        w = tuple(x + 1 for x in sys.elements[i])
        x = dcm.dc_of_perm(w)
        if by_image.setdefault(x, maps[i]) != maps[i]:
            raise RuntimeError("action does not factor through the projection")
    effective = len(set(by_image.values())) == len(by_image) == len(dcm.dc_monoid(n))
    return {"n": n, "dim": total.dim, "effective": effective}
