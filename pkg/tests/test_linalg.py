from hopfext.core.linalg import EchelonBasis, combine, dense_rank, kernel, rank, same_span, solve_dense


def test_rank_and_kernel(f3):
    vecs = [{"a": 1, "b": 1}, {"b": 1, "c": 2}, {"a": 1, "c": 1}]
    # v0 - v1 = v2 over F_3
    assert rank(f3, vecs) == 2
    relations = kernel(f3, vecs)
    assert len(relations) == 1
    rel = relations[0]
    assert combine(f3, *((c, vecs[i]) for i, c in rel.items())) == {}


def test_echelon_express(f3):
    basis = EchelonBasis(f3)
    basis.extend([{0: 1, 1: 2}, {1: 1}])
    assert basis.contains({0: 2})
    assert not basis.contains({2: 1})
    assert basis.rank == 2


def test_same_span(f5):
    a = [{0: 1}, {1: 1}]
    b = [{0: 1, 1: 1}, {0: 1, 1: 4}]
    assert same_span(f5, a, b)
    assert not same_span(f5, a, [{0: 1}])


def test_dense_helpers(f5):
    assert dense_rank(f5, [[1, 2], [2, 4]]) == 1
    assert solve_dense(f5, [[1, 1], [0, 2]], [3, 4]) == [1, 2]
