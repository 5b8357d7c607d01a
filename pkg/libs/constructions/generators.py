# libs/constructions/generators.py
"""
Example structures as concrete tables.

Encodings are fixed:
  powerset   subset of {0..s-1} -> bitmask
  affine     pair (a, b) over Z_q -> q*a + b
  product    pair (x, y)          -> k2*x + y
"""
from __future__ import annotations

from functools import reduce

import numpy as np

from libs.carrier.optable import OpTable
from libs.carrier.structure import FinStructure
from libs.carrier.sweep import Cols
from libs.config.settings import get_settings
from libs.errors import ArityMismatchError, SizeCapError, SnrError


def _carrier_cap(k: int, what: str) -> None:
    cap = get_settings().max_carrier
    if k > cap:
        raise SizeCapError(f"{what} needs carrier {k} > {cap}")


def gen_powerset(base_size: int, m: int, n: int) -> FinStructure:
    """(2^A, union, intersection) with |A| = base_size."""
    if base_size < 0:
        raise SnrError("base_size must be >= 0")
    if base_size > 6:
        raise SizeCapError(f"powerset of a {base_size}-set exceeds the carrier cap")
    k = 2**base_size
    _carrier_cap(k, "powerset")

    f = OpTable.from_function(k, m, lambda cols: reduce(np.bitwise_or, cols))
    g = OpTable.from_function(k, n, lambda cols: reduce(np.bitwise_and, cols))
    return FinStructure.from_tables(f"powerset_{base_size}_{m}_{n}", f, g)


def gen_modring(q: int, m: int, n: int) -> FinStructure:
    """Z_q with f = m-fold sum and g = n-fold product."""
    if q < 1:
        raise SnrError("modulus must be >= 1")
    _carrier_cap(q, "modring")

    f = OpTable.from_function(q, m, lambda cols: cols.sum(axis=0) % q)

    def product(cols: Cols) -> np.ndarray:
        acc = np.ones(cols.shape[1], dtype=np.int64)
        for c in cols:
            acc = (acc * c) % q
        return acc

    g = OpTable.from_function(q, n, product)
    return FinStructure.from_tables(f"modring_{q}_{m}_{n}", f, g)


def gen_affine(q: int) -> FinStructure:
    """
    Pairs over Z_q, m = 2, n = 3:
        f((a1,b1),(a2,b2))        = (a1+a2, b1+b2)
        g((a1,b1),(a2,b2),(a3,b3)) = (a1 a2 a3, b1 a2 a3 + b2 a3 + b3)
    """
    if q < 2:
        raise SnrError("modulus must be >= 2")
    k = q * q
    _carrier_cap(k, "affine")

    def f(cols: Cols) -> np.ndarray:
        a = cols // q
        b = cols % q
        return q * (a.sum(axis=0) % q) + b.sum(axis=0) % q

    def g(cols: Cols) -> np.ndarray:
        (a1, a2, a3), (b1, b2, b3) = cols // q, cols % q
        first = (a1 * a2 * a3) % q
        second = (b1 * a2 * a3 + b2 * a3 + b3) % q
        return q * first + second

    return FinStructure.from_tables(
        f"affine_{q}", OpTable.from_function(k, 2, f), OpTable.from_function(k, 3, g)
    )


def direct_product(s1: FinStructure, s2: FinStructure) -> FinStructure:
    if s1.m != s2.m or s1.n != s2.n:
        raise ArityMismatchError(
            f"cannot multiply ({s1.m},{s1.n}) by ({s2.m},{s2.n}) structures"
        )
    k1, k2 = s1.k, s2.k
    k = k1 * k2
    _carrier_cap(k, "direct product")

    def componentwise(op1: OpTable, op2: OpTable):
        def fn(cols: Cols) -> np.ndarray:
            x, y = cols // k2, cols % k2
            return k2 * op1.eval_many(x).astype(np.int64) + op2.eval_many(y)

        return fn

    f = OpTable.from_function(k, s1.m, componentwise(s1.f, s2.f))
    g = OpTable.from_function(k, s1.n, componentwise(s1.g, s2.g))
    return FinStructure.from_tables(f"{s1.name}_x_{s2.name}", f, g)
