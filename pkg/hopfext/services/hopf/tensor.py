"""
Elements of A ⊗ B as sparse dicts ``(a_key, b_key) -> coefficient``.

Both components are always basis keys of their algebras; products are
normalized per component through each algebra's ``mul_basis`` cache, so no
basis of A ⊗ B is ever materialized.
"""
from __future__ import annotations

from typing import Callable

from hopfext.core.field import FieldSpec
from hopfext.core.linalg import axpy

Tensor = dict


def tensor_multiply(field: FieldSpec, left, right, s: Tensor, t: Tensor) -> Tensor:
    """(u ⊗ v)(u' ⊗ v') = uu' ⊗ vv'."""
    out: Tensor = {}
    add, mul = field.add, field.mul
    for (u, v), c in s.items():
        for (u2, v2), c2 in t.items():
            c12 = mul(c, c2)
            for a, ca in left.mul_basis(u, u2).items():
                cac = mul(c12, ca)
                for b, cb in right.mul_basis(v, v2).items():
                    key = (a, b)
                    val = add(out.get(key, 0), mul(cac, cb))
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
    return out


def tensor_apply(field: FieldSpec, t: Tensor, f_left: Callable | None = None, f_right: Callable | None = None) -> Tensor:
    """(f ⊗ g)(t); each map takes a basis key and returns a sparse vector."""
    out: Tensor = {}
    add, mul = field.add, field.mul
    for (u, v), c in t.items():
        left = f_left(u) if f_left else {u: 1}
        right = f_right(v) if f_right else {v: 1}
        for a, ca in left.items():
            cac = mul(c, ca)
            for b, cb in right.items():
                key = (a, b)
                val = add(out.get(key, 0), mul(cac, cb))
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return out


def flip(t: Tensor) -> Tensor:
    return {(v, u): c for (u, v), c in t.items()}


def pure(field: FieldSpec, a: dict, b: dict) -> Tensor:
    """a ⊗ b for sparse vectors a, b."""
    out: Tensor = {}
    for u, cu in a.items():
        for v, cv in b.items():
            c = field.mul(cu, cv)
            if c:
                out[(u, v)] = c
    return out


def coassoc_left(field: FieldSpec, t: Tensor, delta: Callable) -> dict:
    """(Δ ⊗ id)(t) as a dict over triples."""
    out: dict = {}
    for (u, v), c in t.items():
        for (a, b), cab in delta(u).items():
            key = (a, b, v)
            val = field.add(out.get(key, 0), field.mul(c, cab))
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def coassoc_right(field: FieldSpec, t: Tensor, delta: Callable) -> dict:
    """(id ⊗ Δ)(t) as a dict over triples."""
    out: dict = {}
    for (u, v), c in t.items():
        for (a, b), cab in delta(v).items():
            key = (u, a, b)
            val = field.add(out.get(key, 0), field.mul(c, cab))
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out
