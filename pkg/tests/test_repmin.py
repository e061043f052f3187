import pytest

from catkit import coxeter as cx
from catkit import repmin as rm


def test_projective_module_dimensions():
    a2 = cx.type_a(2)
    P = rm.projective_module(a2, 0)
    assert P.dim == 3
    reduced, trivial = rm.drop_trivial_summand(P)
    assert reduced.dim == 2
    assert trivial.dim == 1
    a3 = cx.type_a(3)
    for s in range(3):
        P = rm.projective_module(a3, s)
        J = frozenset(range(3)) - {s}
        expected = a3.order // len(cx.parabolic(a3, J).members)
        assert P.dim == expected
        assert rm.drop_trivial_summand(P)[0].dim == expected - 1


def test_generator_matrices_idempotent_and_braid():
    for sys in (cx.type_a(2), cx.type_b(2), cx.dihedral(5)):
        for s in range(sys.rank):
            module = rm.projective_module(sys, s)
            mats = [module.action[t] for t in range(sys.rank)]
            for t, mt in enumerate(mats):
                assert rm._compose_colmap(mt, mt) == mt
                for u in range(t + 1, sys.rank):
                    m_ = sys.matrix[t][u]
                    a = _alternate(mats[t], mats[u], m_, module.dim)
                    b = _alternate(mats[u], mats[t], m_, module.dim)
                    assert a == b


def _alternate(x, y, times, dim):
    cur = tuple(range(dim))
    use_x = True
    for _ in range(times):
        cur = rm._compose_colmap(x if use_x else y, cur)
        use_x = not use_x
    return cur


def test_trivial_summand_splits_off():
    a2 = cx.type_a(2)
    P = rm.projective_module(a2, 0)
    w0_pos = P.labels.index(a2.longest)
    for t in range(a2.rank):
        assert P.action[t][w0_pos] == w0_pos  # top row is fixed by everyone


def test_eigen_split_example():
    a2 = cx.type_a(2)
    P = rm.projective_module(a2, 0)  # basis {132, 231, 321}
    split = rm.eigen_split(P, 1)
    assert split.fixed_dim == 2
    assert split.kernel_dim == 1
    fixed_labels = {a2.elements[P.labels[j]] for j in split.fixed}
    assert fixed_labels == {(0, 2, 1), (2, 1, 0)}
    (j, tj), = split.kernel_pairs
    assert a2.elements[P.labels[j]] == (1, 2, 0)
    assert a2.elements[P.labels[tj]] == (2, 1, 0)


@pytest.mark.parametrize("make", [lambda: cx.type_a(2), lambda: cx.type_a(3),
                                  lambda: cx.type_b(2), lambda: cx.dihedral(4),
                                  lambda: cx.dihedral(6)])
def test_eigen_split_spans(make):
    sys = make()
    for s in range(sys.rank):
        for module in (rm.projective_module(sys, s),
                       rm.drop_trivial_summand(
                           rm.projective_module(sys, s))[0]):
            for t in range(sys.rank):
                split = rm.eigen_split(module, t)
                assert split.fixed_dim + split.kernel_dim == module.dim


def test_nullspace_exactness():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = rm.nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(r * x for r, x in zip(rows[0], v)) == 0
    assert rm.matrix_rank(rows) == 1
    # mod-p route
    basis_p = rm.nullspace(rows, 3, p=5)
    assert len(basis_p) == 2


def test_socle_of_reduced_projective_a2():
    a2 = cx.type_a(2)
    check = rm.simple_socle_check(a2, 0)
    assert check["ok"]
    assert check["dimension"] == 1
    # spanning vector is the difference of 231 and the top element
    reduced, _ = rm.drop_trivial_summand(rm.projective_module(a2, 0))
    (J, vectors), = check["report"].items()
    assert J == frozenset({0})
    vec = vectors[0]
    assert vec == [0, 1]
    assert a2.elements[reduced.labels[1]] == (1, 2, 0)


def test_socle_of_trivial_summand():
    a2 = cx.type_a(2)
    _, trivial = rm.drop_trivial_summand(rm.projective_module(a2, 0))
    report = rm.socle(trivial)
    assert set(report) == {frozenset({0, 1})}
    assert report[frozenset({0, 1})] == [[1]]


@pytest.mark.parametrize("make", [
    lambda: cx.type_a(2), lambda: cx.type_a(3), lambda: cx.type_a(4),
    lambda: cx.type_b(2), lambda: cx.type_b(3),
    lambda: cx.dihedral(3), lambda: cx.dihedral(4),
    lambda: cx.dihedral(5), lambda: cx.dihedral(6),
])
def test_simple_socles_everywhere(make):
    sys = make()
    for s in range(sys.rank):
        assert rm.simple_socle_check(sys, s)["ok"]


def test_socle_unchanged_mod_p():
    b2 = cx.type_b(2)
    for s in range(2):
        for p in (2, 3, 7):
            check = rm.simple_socle_check(b2, s, p=p)
            assert check["ok"]


def test_effectiveness():
    a2 = cx.type_a(2)
    modules = [rm.drop_trivial_summand(rm.projective_module(a2, s))[0]
               for s in range(2)]
    total = rm.direct_sum(modules)
    assert total.dim == 4
    assert rm.is_effective(a2, total)
    _, trivial = rm.drop_trivial_summand(rm.projective_module(a2, 0))
    assert not rm.is_effective(a2, trivial)


@pytest.mark.parametrize("make,expected", [
    (lambda: cx.type_a(2), 4), (lambda: cx.type_a(3), 11),
    (lambda: cx.type_a(4), 26), (lambda: cx.type_b(2), 6),
    (lambda: cx.type_b(3), 23), (lambda: cx.dihedral(4), 6),
])
def test_min_dim_reports(make, expected):
    rep = rm.min_dim_report(make())
    assert rep["claimed"] == rep["constructed_dim"] == expected
    assert rep["effective"]
    assert rep["socle_verified"]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_dc_min_dim(n):
    rep = rm.dc_min_dim(n)
    assert rep["dim"] == 2 * n - 2
    assert rep["effective"]


def test_basis_permutation_agrees_with_coset_projection():
    """Right multiplication by the parabolic idempotent moves basis labels
    the same way the coset projection does."""
    sys = cx.type_a(3)
    for s in range(sys.rank):
        J = frozenset(range(sys.rank)) - {s}
        para = cx.parabolic(sys, J)
        for i in range(sys.order):
            assert cx.hecke_mul(sys, i, para.longest) == \
                cx.coset_max_rep(sys, J, i)


@pytest.mark.parametrize("make", [lambda: cx.type_a(2), lambda: cx.type_a(3),
                                  lambda: cx.type_b(2)])
def test_socle_components_are_independent(make):
    sys = make()
    for s in range(sys.rank):
        module = rm.projective_module(sys, s)
        report = rm.socle(module)
        stacked = [vec for vectors in report.values() for vec in vectors]
        assert rm.matrix_rank(stacked) == len(stacked)
        # every reported vector is genuinely of its type
        for J, vectors in report.items():
            for vec in vectors:
                for t in range(sys.rank):
                    mat = module.matrix(t)
                    image = [sum(mat[i][j] * vec[j] for j in range(module.dim))
                             for i in range(module.dim)]
                    expected = vec if t in J else [0] * module.dim
                    assert image == list(expected)
