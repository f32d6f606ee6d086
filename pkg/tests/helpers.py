"""Shared fixtures and random generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from superleibniz.algebra import (AssociativeSuperalgebra, LeibnizSuperalgebra,
                                  SuperBimodule, SuperSpace, abelian,
                                  adjoint_module, free_truncated,
                                  from_associative, nonlie_example, zero_module)
from superleibniz.cochain import Cochain, all_tuples
from superleibniz.linalg import F0, F1, basis_vec, zeros


def matrix_1_1_associative() -> AssociativeSuperalgebra:
    """2x2 matrix units with the checkerboard grading: E12, E21 odd."""
    names = ("e11", "e22", "e12", "e21")
    pos = {"e11": (1, 1), "e22": (2, 2), "e12": (1, 2), "e21": (2, 1)}
    space = SuperSpace("m11", names, (0, 0, 1, 1))
    table = []
    for a in names:
        row = []
        for b in names:
            (r1, c1), (r2, c2) = pos[a], pos[b]
            v = zeros(4)
            if c1 == r2:
                v[names.index(f"e{r1}{c2}")] = F1
            row.append(v)
        table.append(row)
    return AssociativeSuperalgebra(space, table)


def corner_projection_algebra() -> LeibnizSuperalgebra:
    """Non-Lie super Leibniz algebra from matrix units with T = e11-projection."""
    assoc = matrix_1_1_associative()
    t_map = [basis_vec(4, 0), zeros(4), zeros(4), zeros(4)]
    return from_associative(assoc, t_map)


def upper_triangular_associative() -> AssociativeSuperalgebra:
    """Upper triangular 2x2 matrices, all even: basis e=E11, f=E22, n=E12."""
    space = SuperSpace("tri2", ("e", "f", "n"), (0, 0, 0))
    E = {"e": (0, 0), "f": (1, 1), "n": (0, 1)}
    names = ("e", "f", "n")
    rev = {v: k for k, v in E.items()}
    table = []
    for a in names:
        row = []
        for b in names:
            (r1, c1), (r2, c2) = E[a], E[b]
            v = zeros(3)
            if c1 == r2 and (r1, c2) in rev:
                v[names.index(rev[(r1, c2)])] = F1
            row.append(v)
        table.append(row)
    return AssociativeSuperalgebra(space, table)


def standard_fixtures() -> list[LeibnizSuperalgebra]:
    """The algebra zoo used across the suite."""
    odd_gen = SuperSpace("V1", ("v",), (1,))
    even_gen = SuperSpace("V0", ("u",), (0,))
    return [
        nonlie_example(),
        abelian(1, 1),
        abelian(2, 1),
        free_truncated(even_gen, 2),
        free_truncated(odd_gen, 3),
        corner_projection_algebra(),
    ]


def modules_for(alg: LeibnizSuperalgebra) -> list[SuperBimodule]:
    return [adjoint_module(alg), zero_module(alg)]


def random_coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 2, 3)))


def random_cochain(alg: LeibnizSuperalgebra, mod: SuperBimodule, n: int,
                   degree: int, rng: random.Random) -> Cochain:
    """Random homogeneous cochain with small rational coefficients."""
    f = Cochain.zero(alg, mod, n, degree)
    mpar = mod.space.parities
    for idx, t in enumerate(all_tuples(alg.dim, n)):
        want = (degree + alg.space.tuple_parity(t)) & 1
        f.coeffs[idx] = [random_coeff(rng) if mpar[k] == want else F0
                         for k in range(mod.dim)]
    return f


def random_homogeneous_vector(space: SuperSpace, parity: int,
                              rng: random.Random) -> list[Fraction]:
    """Random nonzero vector supported on one parity (when it exists)."""
    idxs = [i for i, p in enumerate(space.parities) if p == parity]
    v = zeros(space.dim)
    for i in idxs:
        v[i] = Fraction(rng.randint(-3, 3))
    if idxs and all(not v[i] for i in idxs):
        v[rng.choice(idxs)] = F1
    return v
