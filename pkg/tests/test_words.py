import numpy as np

from hopfext.services.algebra.words import MonomialOrder

ORDER_SAMPLES = 1000


def _word(rng, ngens: int) -> tuple[int, ...]:
    return tuple(int(g) for g in rng.integers(0, ngens, size=int(rng.integers(0, 6))))


def test_order_refines_degree():
    order = MonomialOrder((2, 0, 1))
    assert order.less((1, 1), (2, 2, 2))
    assert order.less((2,), (0,))
    assert order.less((0, 2), (0, 1))
    assert order.leading([(2, 2), (1,), (0, 1)]) == (0, 1)


def test_order_is_multiplicative():
    order = MonomialOrder((2, 0, 1))
    rng = np.random.default_rng(5)
    for _ in range(ORDER_SAMPLES):
        u, v, w = _word(rng, 3), _word(rng, 3), _word(rng, 3)
        if order.less(v, u):
            u, v = v, u
        if u == v:
            continue
        assert order.less(u, v)
        assert order.less(w + u, w + v)
        assert order.less(u + w, v + w)


def test_heap_key_reverses_order():
    order = MonomialOrder((1, 0))
    words = [(0,), (1,), (0, 1), (1, 1, 0), ()]
    assert sorted(words, key=order.heap_key) == sorted(words, key=order.key, reverse=True)
