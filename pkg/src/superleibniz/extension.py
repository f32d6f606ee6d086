"""Extensions of a Leibniz superalgebra by a bimodule from 2-cocycles.

The total space is L + M with basis labels tagged "L:" / "M:"; the
product of lifted elements is

    [(x,m),(y,n)] = ([x,y], [x,n] + [m,y] + h(x,y))

for a degree-0 2-cochain h.  The total is a Leibniz superalgebra exactly
when h is a cocycle, and two cocycles give equivalent extensions exactly
when their difference is a coboundary, via (x,m) -> (x, m + f(x)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (CheckReport, LeibnizSuperalgebra, SuperBimodule,
                      SuperSpace)
from .cochain import Cochain
from .cohomology import (DEFAULT_MAX_ARITY, cochain_from_coords,
                         delta_matrix, enumerate_basis, is_coboundary,
                         kernel_basis)
from .linalg import RatMatrix, basis_vec, extend_to_basis, row_space_basis, vec_is_zero, zeros


@dataclass
class Extension:
    base: LeibnizSuperalgebra
    coeffs: SuperBimodule
    cocycle: Cochain
    total: LeibnizSuperalgebra

    def __repr__(self) -> str:
        return f"Extension({self.total.space.name!r})"


def _total_space(alg: LeibnizSuperalgebra, mod: SuperBimodule) -> SuperSpace:
    labels = tuple(f"L:{lab}" for lab in alg.space.labels) + \
        tuple(f"M:{lab}" for lab in mod.space.labels)
    parities = alg.space.parities + mod.space.parities
    return SuperSpace(f"ext({alg.space.name};{mod.space.name})", labels, parities)


def build_extension(alg: LeibnizSuperalgebra, mod: SuperBimodule,
                    h: Cochain) -> Extension:
    """Total algebra on L + M with the product twisted by h.

    h must be a degree-0 2-cochain on L with values in M.  The table is
    always built; whether it satisfies the Leibniz identity is exactly the
    cocycle condition on h, which check_extension reports.
    """
    if h.arity != 2 or h.degree != 0:
        raise ValueError("the twisting cochain must have arity 2 and degree 0")
    if h.algebra != alg or h.module != mod:
        raise ValueError("cochain is not an L-cochain with values in M")
    dl, dm = alg.dim, mod.dim
    dim = dl + dm
    space = _total_space(alg, mod)
    table = [[zeros(dim) for _ in range(dim)] for _ in range(dim)]
    for i in range(dl):
        for j in range(dl):
            vec = zeros(dim)
            for k, c in enumerate(alg.bracket(i, j)):
                vec[k] = c
            for k, c in enumerate(h.value((i, j))):
                vec[dl + k] = c
            table[i][j] = vec
    for i in range(dl):
        for k in range(dm):
            vec = zeros(dim)
            for t, c in enumerate(mod.left[i][k]):
                vec[dl + t] = c
            table[i][dl + k] = vec
            vec = zeros(dim)
            for t, c in enumerate(mod.right[k][i]):
                vec[dl + t] = c
            table[dl + k][i] = vec
    total = LeibnizSuperalgebra(space, table)
    return Extension(alg, mod, h, total)


def check_extension(ext: Extension) -> CheckReport:
    """Structural conditions plus the Leibniz identity on the total.

    Checked: the projection to L is an algebra map, the fiber copy of M
    is abelian, brackets mixing L and M reproduce the module actions, the
    L x L brackets carry exactly the declared cocycle, and the total
    passes grading and the Leibniz identity (the last is equivalent to
    the cocycle condition on h).
    """
    alg, mod, h, total = ext.base, ext.coeffs, ext.cocycle, ext.total
    dl, dm = alg.dim, mod.dim
    sp = total.space
    bad = []
    for i in range(dl + dm):
        for j in range(dl + dm):
            vec = total.bracket(i, j)
            lpart = vec[:dl]
            mpart = vec[dl:]
            if i < dl and j < dl:
                if lpart != alg.bracket(i, j):
                    bad.append({"kind": "projection",
                                "pair": (sp.labels[i], sp.labels[j]),
                                "detail": "L-part differs from base bracket"})
                if mpart != h.value((i, j)):
                    bad.append({"kind": "cocycle-part",
                                "pair": (sp.labels[i], sp.labels[j]),
                                "detail": "M-part differs from the declared cocycle"})
            else:
                if not vec_is_zero(lpart):
                    bad.append({"kind": "projection",
                                "pair": (sp.labels[i], sp.labels[j]),
                                "detail": "bracket leaves the fiber"})
                if i < dl and j >= dl:
                    if mpart != mod.left[i][j - dl]:
                        bad.append({"kind": "action-left",
                                    "pair": (sp.labels[i], sp.labels[j]),
                                    "detail": "differs from the left action"})
                elif i >= dl and j < dl:
                    if mpart != mod.right[i - dl][j]:
                        bad.append({"kind": "action-right",
                                    "pair": (sp.labels[i], sp.labels[j]),
                                    "detail": "differs from the right action"})
                else:
                    if not vec_is_zero(mpart):
                        bad.append({"kind": "fiber-abelian",
                                    "pair": (sp.labels[i], sp.labels[j]),
                                    "detail": "fiber brackets must vanish"})
    rep = total.check_grading()
    for v in rep.violations:
        bad.append({"kind": "grading", **v})
    rep = total.check_leibniz()
    for v in rep.violations:
        bad.append({"kind": "leibniz", **v})
    return CheckReport(not bad, bad)


def _psi_matrix(ext_dim: int, dl: int, f: Cochain) -> list[list[Fraction]]:
    """Matrix of (x,m) -> (x, m + f(x)) on the total space, column-wise."""
    cols = [basis_vec(ext_dim, c) for c in range(ext_dim)]
    for i in range(dl):
        for k, c in enumerate(f.coeffs[i]):
            if c:
                cols[i][dl + k] += c
    return cols


def extensions_equivalent(e1: Extension, e2: Extension,
                          max_arity: int = DEFAULT_MAX_ARITY) -> Cochain | None:
    """A degree-0 1-cochain f with delta(f) = h1 - h2, or None.

    When f exists, (x,m) -> (x, m + f(x)) is verified to be an algebra
    isomorphism of the totals commuting with the inclusion and the
    projection.
    """
    if e1.base != e2.base or e1.coeffs != e2.coeffs:
        raise ValueError("extensions have different base or coefficients")
    f = is_coboundary(e1.cocycle - e2.cocycle, max_arity=max_arity)
    if f is None:
        return None
    alg, mod = e1.base, e1.coeffs
    dl = alg.dim
    dim = dl + mod.dim
    cols = _psi_matrix(dim, dl, f)

    def apply(v: list[Fraction]) -> list[Fraction]:
        out = zeros(dim)
        for j, c in enumerate(v):
            if c:
                for t, w in enumerate(cols[j]):
                    if w:
                        out[t] += c * w
        return out

    for i in range(dim):
        for j in range(dim):
            lhs = apply(e1.total.bracket(i, j))
            rhs = e2.total.bracket_vec(cols[i], cols[j])
            if lhs != rhs:
                raise AssertionError(
                    "delta(f) = h1 - h2 but the induced map is not "
                    f"multiplicative at pair ({i},{j}); sign conventions broken")
    return f


def classify_extensions(alg: LeibnizSuperalgebra, mod: SuperBimodule,
                        max_arity: int = DEFAULT_MAX_ARITY) -> list[Extension]:
    """One extension per basis class of the degree-0 2-cohomology.

    Representative cocycles extend the canonical image basis to a kernel
    basis; the representatives are pairwise inequivalent by construction.
    """
    enum = enumerate_basis(alg, mod, 2, 0)
    mat = delta_matrix(alg, mod, 2, 0, max_arity=max_arity)
    ker = kernel_basis(mat)
    zrows = row_space_basis(RatMatrix.from_rows(ker)) if ker else []
    prev = delta_matrix(alg, mod, 1, 0, max_arity=max_arity)
    img_rows = row_space_basis(prev.transpose())
    reps = extend_to_basis(img_rows, zrows, len(enum))
    out = []
    for v in reps:
        h = cochain_from_coords(alg, mod, 2, 0, v, enum)
        out.append(build_extension(alg, mod, h))
    return out
