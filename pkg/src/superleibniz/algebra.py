"""Z2-graded vector spaces, Leibniz superalgebras, and bimodules over them.

Everything is stored as structure constants over an ordered, parity-tagged
basis.  Validity (grading, the Leibniz identity, the module axioms) is a
checked property, not a construction-time guarantee: invalid tables load
fine and the checkers report counterexamples.

Conventions: parity is 0 (even) or 1 (odd); every sign is (-1)**(a*b) with
a, b parities.  The bracket satisfies the left Leibniz identity

    [[a,b],c] = [a,[b,c]] - (-1)**(ab) [b,[a,c]].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import F0, F1, add_scaled, basis_vec, vec_is_zero, zeros

EVEN = 0
ODD = 1


class MixedParityError(ValueError):
    """Raised when an operation needs a homogeneous vector but got a mix."""


def koszul(p: int, q: int) -> Fraction:
    """(-1)**(p*q) for parities p, q."""
    return -F1 if (p * q) & 1 else F1


@dataclass(frozen=True)
class SuperSpace:
    """Ordered basis of a finite-dimensional Z2-graded rational vector space."""

    name: str
    labels: tuple[str, ...]
    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.parities):
            raise ValueError("labels and parities differ in length")
        if any(not lab for lab in self.labels):
            raise ValueError("basis labels must be nonempty")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be unique")
        if any(p not in (0, 1) for p in self.parities):
            raise ValueError("parities must be 0 or 1")

    @classmethod
    def from_pairs(cls, name: str, pairs: list[tuple[str, int]]) -> "SuperSpace":
        return cls(name, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def even_dim(self) -> int:
        return sum(1 for p in self.parities if p == EVEN)

    @property
    def odd_dim(self) -> int:
        return sum(1 for p in self.parities if p == ODD)

    def parity(self, i: int) -> int:
        return self.parities[i]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element labelled {label!r} in space {self.name!r}")

    def tuple_parity(self, indices: tuple[int, ...]) -> int:
        return sum(self.parities[i] for i in indices) & 1

    def vector_parity(self, v: list[Fraction]) -> int | None:
        """Parity of a homogeneous vector, None for the zero vector."""
        par = None
        for i, c in enumerate(v):
            if c:
                p = self.parities[i]
                if par is None:
                    par = p
                elif par != p:
                    raise MixedParityError(
                        f"vector mixes parities in space {self.name!r}")
        return par

    def describe(self, v: list[Fraction]) -> str:
        """Human-readable linear combination, canonical term order."""
        terms = []
        for i, c in enumerate(v):
            if c:
                terms.append(f"{c}*{self.labels[i]}")
        return " + ".join(terms) if terms else "0"


@dataclass
class CheckReport:
    """Outcome of an axiom check: ok, or a list of structured violations."""

    ok: bool
    violations: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


class LeibnizSuperalgebra:
    """A super vector space with a bracket given by structure constants.

    table[i][j] is the coefficient vector of [e_i, e_j] over the basis.
    """

    def __init__(self, space: SuperSpace, table: list[list[list[Fraction]]]):
        dim = space.dim
        if len(table) != dim or any(len(row) != dim for row in table):
            raise ValueError("bracket table must be dim x dim")
        for row in table:
            for v in row:
                if len(v) != dim:
                    raise ValueError("bracket values must have length dim")
        self.space = space
        self.table = table

    @property
    def dim(self) -> int:
        return self.space.dim

    def bracket(self, i: int, j: int) -> list[Fraction]:
        return self.table[i][j]

    def bracket_vec(self, u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        """Bilinear extension of the structure constants."""
        dim = self.dim
        if len(u) != dim or len(v) != dim:
            raise ValueError("vector length does not match algebra dimension")
        out = zeros(dim)
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if b:
                    add_scaled(out, a * b, row[j])
        return out

    def check_grading(self) -> CheckReport:
        """All nonzero c_ijk must satisfy parity(k) = parity(i) + parity(j)."""
        sp = self.space
        bad = []
        for i in range(self.dim):
            for j in range(self.dim):
                want = (sp.parities[i] + sp.parities[j]) & 1
                for k, c in enumerate(self.table[i][j]):
                    if c and sp.parities[k] != want:
                        bad.append({
                            "pair": (sp.labels[i], sp.labels[j]),
                            "component": sp.labels[k],
                            "coeff": c,
                        })
        return CheckReport(not bad, bad)

    def leibniz_defect(self, i: int, j: int, k: int) -> list[Fraction]:
        """[[a,b],c] - [a,[b,c]] + (-1)**(ab) [b,[a,c]] on basis elements."""
        sp = self.space
        d = self.bracket_vec(self.bracket(i, j), basis_vec(self.dim, k))
        d = [x - y for x, y in zip(d, self.bracket_vec(basis_vec(self.dim, i), self.bracket(j, k)))]
        add_scaled(d, koszul(sp.parities[i], sp.parities[j]),
                   self.bracket_vec(basis_vec(self.dim, j), self.bracket(i, k)))
        return d

    def check_leibniz(self) -> CheckReport:
        sp = self.space
        bad = []
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            d = self.leibniz_defect(i, j, k)
            if not vec_is_zero(d):
                bad.append({
                    "triple": (sp.labels[i], sp.labels[j], sp.labels[k]),
                    "defect": sp.describe(d),
                })
        return CheckReport(not bad, bad)

    def is_lie(self) -> bool:
        """Graded antisymmetry [a,b] = -(-1)**(ab) [b,a] on all basis pairs."""
        sp = self.space
        for i in range(self.dim):
            for j in range(self.dim):
                sgn = -koszul(sp.parities[i], sp.parities[j])
                if self.table[i][j] != [sgn * c for c in self.table[j][i]]:
                    return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, LeibnizSuperalgebra)
                and self.space == other.space and self.table == other.table)

    def __repr__(self) -> str:
        return f"LeibnizSuperalgebra({self.space.name!r}, dim={self.dim})"


class SuperBimodule:
    """Module over a Leibniz superalgebra: two action tables.

    left[i][k]  = coefficients of [e_i, m_k]  (algebra x module),
    right[k][i] = coefficients of [m_k, e_i]  (module x algebra).
    """

    def __init__(self, algebra: LeibnizSuperalgebra, space: SuperSpace,
                 left: list[list[list[Fraction]]], right: list[list[list[Fraction]]]):
        dl, dm = algebra.dim, space.dim
        if len(left) != dl or any(len(row) != dm for row in left):
            raise ValueError("left action table must be dimL x dimM")
        if len(right) != dm or any(len(row) != dl for row in right):
            raise ValueError("right action table must be dimM x dimL")
        for rows in (left, right):
            for row in rows:
                for v in row:
                    if len(v) != dm:
                        raise ValueError("action values must have length dimM")
        self.algebra = algebra
        self.space = space
        self.left = left
        self.right = right

    @property
    def dim(self) -> int:
        return self.space.dim

    def act_left_vec(self, a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
        out = zeros(self.dim)
        for i, c in enumerate(a):
            if not c:
                continue
            row = self.left[i]
            for k, d in enumerate(m):
                if d:
                    add_scaled(out, c * d, row[k])
        return out

    def act_right_vec(self, m: list[Fraction], a: list[Fraction]) -> list[Fraction]:
        out = zeros(self.dim)
        for k, d in enumerate(m):
            if not d:
                continue
            row = self.right[k]
            for i, c in enumerate(a):
                if c:
                    add_scaled(out, d * c, row[i])
        return out

    def check_grading(self) -> CheckReport:
        asp, msp = self.algebra.space, self.space
        bad = []
        for i in range(self.algebra.dim):
            for k in range(self.dim):
                want = (asp.parities[i] + msp.parities[k]) & 1
                for t, c in enumerate(self.left[i][k]):
                    if c and msp.parities[t] != want:
                        bad.append({"action": "left",
                                    "pair": (asp.labels[i], msp.labels[k]),
                                    "component": msp.labels[t], "coeff": c})
                for t, c in enumerate(self.right[k][i]):
                    if c and msp.parities[t] != want:
                        bad.append({"action": "right",
                                    "pair": (msp.labels[k], asp.labels[i]),
                                    "component": msp.labels[t], "coeff": c})
        return CheckReport(not bad, bad)

    def check_axioms(self) -> CheckReport:
        """The three compatibility axioms, exhaustively on basis triples.

        1. [[a,b],m] = [a,[b,m]] - (-1)**(ab) [b,[a,m]]
        2. [[a,m],b] = [a,[m,b]] - (-1)**(am) [m,[a,b]]
        3. [[m,a],b] = [m,[a,b]] - (-1)**(ma) [a,[m,b]]
        """
        alg = self.algebra
        asp, msp = alg.space, self.space
        da, dm = alg.dim, self.dim
        bad = []
        for i, j in itertools.product(range(da), repeat=2):
            br = alg.bracket(i, j)
            ei = basis_vec(da, i)
            ej = basis_vec(da, j)
            pi, pj = asp.parities[i], asp.parities[j]
            for k in range(dm):
                mk = basis_vec(dm, k)
                pk = msp.parities[k]
                # axiom 1
                lhs = self.act_left_vec(br, mk)
                rhs = self.act_left_vec(ei, self.act_left_vec(ej, mk))
                add_scaled(rhs, -koszul(pi, pj),
                           self.act_left_vec(ej, self.act_left_vec(ei, mk)))
                if lhs != rhs:
                    bad.append({"axiom": 1,
                                "triple": (asp.labels[i], asp.labels[j], msp.labels[k]),
                                "defect": msp.describe([x - y for x, y in zip(lhs, rhs)])})
                # axiom 2: a = e_i, m = m_k, b = e_j
                lhs = self.act_right_vec(self.act_left_vec(ei, mk), ej)
                rhs = self.act_left_vec(ei, self.act_right_vec(mk, ej))
                add_scaled(rhs, -koszul(pi, pk), self.act_right_vec(mk, br))
                if lhs != rhs:
                    bad.append({"axiom": 2,
                                "triple": (asp.labels[i], msp.labels[k], asp.labels[j]),
                                "defect": msp.describe([x - y for x, y in zip(lhs, rhs)])})
                # axiom 3: m = m_k, a = e_i, b = e_j
                lhs = self.act_right_vec(self.act_right_vec(mk, ei), ej)
                rhs = self.act_right_vec(mk, br)
                add_scaled(rhs, -koszul(pk, pi),
                           self.act_left_vec(ei, self.act_right_vec(mk, ej)))
                if lhs != rhs:
                    bad.append({"axiom": 3,
                                "triple": (msp.labels[k], asp.labels[i], asp.labels[j]),
                                "defect": msp.describe([x - y for x, y in zip(lhs, rhs)])})
        return CheckReport(not bad, bad)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SuperBimodule)
                and self.algebra == other.algebra and self.space == other.space
                and self.left == other.left and self.right == other.right)

    def __repr__(self) -> str:
        return f"SuperBimodule({self.space.name!r} over {self.algebra.space.name!r})"


class AssociativeSuperalgebra:
    """Associative superalgebra by structure constants; table[i][j] = e_i e_j."""

    def __init__(self, space: SuperSpace, table: list[list[list[Fraction]]]):
        dim = space.dim
        if len(table) != dim or any(len(row) != dim for row in table):
            raise ValueError("multiplication table must be dim x dim")
        self.space = space
        self.table = table

    @property
    def dim(self) -> int:
        return self.space.dim

    def mul_vec(self, u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        out = zeros(self.dim)
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if b:
                    add_scaled(out, a * b, row[j])
        return out

    def check_grading(self) -> CheckReport:
        sp = self.space
        bad = []
        for i in range(self.dim):
            for j in range(self.dim):
                want = (sp.parities[i] + sp.parities[j]) & 1
                for k, c in enumerate(self.table[i][j]):
                    if c and sp.parities[k] != want:
                        bad.append({"pair": (sp.labels[i], sp.labels[j]),
                                    "component": sp.labels[k], "coeff": c})
        return CheckReport(not bad, bad)

    def check_associative(self) -> CheckReport:
        sp = self.space
        bad = []
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            ei, ej, ek = (basis_vec(self.dim, t) for t in (i, j, k))
            lhs = self.mul_vec(self.mul_vec(ei, ej), ek)
            rhs = self.mul_vec(ei, self.mul_vec(ej, ek))
            if lhs != rhs:
                bad.append({"triple": (sp.labels[i], sp.labels[j], sp.labels[k]),
                            "defect": sp.describe([x - y for x, y in zip(lhs, rhs)])})
        return CheckReport(not bad, bad)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def abelian(p: int, q: int, name: str | None = None) -> LeibnizSuperalgebra:
    """Abelian Leibniz superalgebra with p even and q odd generators."""
    labels = [f"a{i}" for i in range(p)] + [f"b{i}" for i in range(q)]
    parities = [EVEN] * p + [ODD] * q
    space = SuperSpace(name or f"abelian({p},{q})", tuple(labels), tuple(parities))
    dim = p + q
    table = [[zeros(dim) for _ in range(dim)] for _ in range(dim)]
    return LeibnizSuperalgebra(space, table)


def nonlie_example() -> LeibnizSuperalgebra:
    """Three-dimensional non-Lie example: x, y even, z odd, [y,x]=[y,y]=x.

    The bracket lands in span{x}, x and z act trivially on the left, and
    graded antisymmetry fails ([y,y]=x would force x=-x), so this is a
    Leibniz superalgebra that is not a Lie superalgebra.
    """
    space = SuperSpace("nonlie3", ("x", "y", "z"), (EVEN, EVEN, ODD))
    table = [[zeros(3) for _ in range(3)] for _ in range(3)]
    table[1][0] = basis_vec(3, 0)   # [y,x] = x
    table[1][1] = basis_vec(3, 0)   # [y,y] = x
    return LeibnizSuperalgebra(space, table)


def adjoint_module(alg: LeibnizSuperalgebra) -> SuperBimodule:
    """The algebra acting on itself by its bracket on both sides."""
    dim = alg.dim
    left = [[list(alg.table[i][k]) for k in range(dim)] for i in range(dim)]
    right = [[list(alg.table[k][i]) for i in range(dim)] for k in range(dim)]
    return SuperBimodule(alg, alg.space, left, right)


def zero_module(alg: LeibnizSuperalgebra, space: SuperSpace | None = None) -> SuperBimodule:
    """Module with both actions zero; defaults to the algebra's own space."""
    sp = space if space is not None else alg.space
    left = [[zeros(sp.dim) for _ in range(sp.dim)] for _ in range(alg.dim)]
    right = [[zeros(sp.dim) for _ in range(alg.dim)] for _ in range(sp.dim)]
    return SuperBimodule(alg, sp, left, right)


def from_associative(assoc: AssociativeSuperalgebra,
                     t_map: list[list[Fraction]]) -> LeibnizSuperalgebra:
    """Leibniz superalgebra [a,b] = (Ta)b - (-1)**(ab) b(Ta).

    t_map[j] is the image of basis element j under T.  T must be
    homogeneous of degree 0 and satisfy T(a(Tb)) = (Ta)(Tb) = T((Ta)b);
    all three requirements are verified on basis pairs before the bracket
    table is built, so a bad input fails with a witness.
    """
    dim = assoc.dim
    sp = assoc.space
    if len(t_map) != dim or any(len(v) != dim for v in t_map):
        raise ValueError("t_map must list one image vector per basis element")
    rep = assoc.check_grading()
    if not rep.ok:
        raise ValueError(f"input algebra is not graded: {rep.violations[0]}")
    rep = assoc.check_associative()
    if not rep.ok:
        raise ValueError(f"input algebra is not associative: {rep.violations[0]}")
    for j, img in enumerate(t_map):
        for k, c in enumerate(img):
            if c and sp.parities[k] != sp.parities[j]:
                raise ValueError(
                    f"T is not homogeneous of degree 0 at {sp.labels[j]!r}")

    def t_vec(v: list[Fraction]) -> list[Fraction]:
        out = zeros(dim)
        for j, c in enumerate(v):
            if c:
                add_scaled(out, c, t_map[j])
        return out

    for i in range(dim):
        for j in range(dim):
            a, b = basis_vec(dim, i), basis_vec(dim, j)
            ta, tb = t_vec(a), t_vec(b)
            mid = assoc.mul_vec(ta, tb)
            lhs = t_vec(assoc.mul_vec(a, tb))
            rhs = t_vec(assoc.mul_vec(ta, b))
            if lhs != mid or rhs != mid:
                raise ValueError(
                    "T(a(Tb)) = (Ta)(Tb) = T((Ta)b) fails on pair "
                    f"({sp.labels[i]!r}, {sp.labels[j]!r})")

    table = []
    for i in range(dim):
        row = []
        ta = t_vec(basis_vec(dim, i))
        for j in range(dim):
            b = basis_vec(dim, j)
            val = assoc.mul_vec(ta, b)
            add_scaled(val, -koszul(sp.parities[i], sp.parities[j]),
                       assoc.mul_vec(b, ta))
            row.append(val)
        table.append(row)
    return LeibnizSuperalgebra(sp, table)


def free_truncated(generators: SuperSpace, depth: int) -> LeibnizSuperalgebra:
    """Nilpotent truncation of the free Leibniz superalgebra on a space.

    The underlying space has one basis word per tuple of generators of
    length 1..depth (word parity = sum of letter parities).  The product
    is defined inductively by

        [v, x]    = v (x)                      for a single letter v,
        [y (v), x] = [y, v (x)] - (-1)**(yv) v ([y, x]),

    where (.) prepends/appends a letter, and every component of tensor
    length > depth is truncated to zero.
    """
    if generators.dim < 1:
        raise ValueError("need at least one generator")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    letters = generators.dim
    lpar = generators.parities

    words: list[tuple[int, ...]] = []
    for n in range(1, depth + 1):
        words.extend(itertools.product(range(letters), repeat=n))
    windex = {w: i for i, w in enumerate(words)}
    dim = len(words)

    def word_parity(w: tuple[int, ...]) -> int:
        return sum(lpar[c] for c in w) & 1

    def bracket_words(w: tuple[int, ...], u: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        if len(w) == 1:
            return {w + u: F1}
        y, v = w[:-1], w[-1]
        out: dict[tuple[int, ...], Fraction] = {}
        for word, c in bracket_words(y, (v,) + u).items():
            out[word] = out.get(word, F0) + c
        sgn = koszul(word_parity(y), lpar[v])
        for word, c in bracket_words(y, u).items():
            key = (v,) + word
            out[key] = out.get(key, F0) - sgn * c
        return {k: c for k, c in out.items() if c}

    labels = tuple("⊗".join(generators.labels[c] for c in w) for w in words)
    parities = tuple(word_parity(w) for w in words)
    space = SuperSpace(f"free({generators.name},{depth})", labels, parities)

    table = [[zeros(dim) for _ in range(dim)] for _ in range(dim)]
    for i, w in enumerate(words):
        for j, u in enumerate(words):
            vec = zeros(dim)
            for word, c in bracket_words(w, u).items():
                if len(word) <= depth:
                    vec[windex[word]] += c
            table[i][j] = vec
    return LeibnizSuperalgebra(space, table)
