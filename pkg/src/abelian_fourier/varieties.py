"""Abelian varieties as polarized lattices with optional complex structure.

A complex abelian variety of dimension ``g`` is modeled by its first
homology lattice ``Z^{2g}`` together with

* an alternating nondegenerate form ``E`` (the polarization),
* optionally an exact rational complex structure ``J`` on homology with
  ``J^2 = -1`` satisfying the Riemann relations (``E(Jx, Jy) = E(x, y)``
  and ``E(x, Jy)`` symmetric positive definite),
* an orientation sign fixing the fundamental class so that the top
  self-intersection of the polarization class integrates to the product
  of the polarization divisors.

Cohomology is the exterior algebra on the dual lattice, carried by
:class:`~abelian_fourier.exterior.Multivector` with one generator per
lattice basis vector.

The dual variety is modeled on the dual lattice.  Its complex structure
is the sign choice among the transposed conjugates for which the mixed
Kunneth pairing class on the product is a Hodge class; the chosen sign is
computed once at construction time and recorded.  Duality also flips a
recorded sign that the Fourier machinery attaches to the pairing class of
each factor; see :mod:`abelian_fourier.fourier` for why a single global
sign cannot satisfy the transform inversion identity on odd cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod

from . import intlinalg
from .errors import (
    ComplexStructureInvalid,
    InvalidType,
    NotAlternating,
    NotIsogeny,
    NotSymmetric,
    RankMismatch,
    RiemannRelationViolated,
    SingularPolarization,
)
from .exterior import Multivector, _apply_generator_images, integrate, wedge_sign

# Default Gaussian-prime parameter (a, b): the Hodge projector uses the
# group element a + bJ, whose norm a^2 + b^2 must be an odd prime.
HODGE_DEFAULT_AB = (1, 2)


@dataclass(frozen=True)
class Leaf:
    """One indecomposable block of generators inside a product.

    ``sign`` is the recorded pairing-class sign of this block: +1 for a
    variety as originally constructed, flipped by dualization.
    """

    offset: int
    genus: int
    sign: int


@dataclass(frozen=True)
class AbelianVariety:
    name: str
    genus: int
    E: tuple[tuple[int, ...], ...]
    J: tuple[tuple[Fraction, ...], ...] | None
    orientation: int
    polarization_type: tuple[int, ...]
    leaves: tuple[Leaf, ...]

    @property
    def rank(self) -> int:
        return 2 * self.genus

    @property
    def is_principal(self) -> bool:
        return all(d == 1 for d in self.polarization_type)

    def theta_class(self) -> Multivector:
        """Polarization class: the 2-form of E on the dual basis.

        Integrates in top power to the product of the polarization
        divisors: ``integrate(theta^g / g!) = d_1 * ... * d_g``.
        """
        n = self.rank
        terms = {}
        for i in range(n):
            for j in range(i + 1, n):
                if self.E[i][j]:
                    terms[(1 << i) | (1 << j)] = self.E[i][j]
        return Multivector(n, terms)

    def point_class(self) -> Multivector:
        """Top-degree class integrating to 1 (the class of a point)."""
        full = (1 << self.rank) - 1
        return Multivector(self.rank, {full: self.orientation})

    def fundamental_class(self) -> Multivector:
        return Multivector.unit(self.rank)

    def integrate(self, x: Multivector):
        if x.rank != self.rank:
            raise RankMismatch(f"class rank {x.rank} != variety rank {self.rank}")
        return integrate(x, self.orientation)

    def __repr__(self):
        return f"AbelianVariety({self.name!r}, g={self.genus}, type={self.polarization_type})"


def _as_int_matrix(E):
    out = []
    for row in E:
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def _as_frac_matrix(J):
    return tuple(tuple(Fraction(x) for x in row) for row in J)


def _paired_type(E) -> tuple[int, ...]:
    """Polarization type from the elementary divisors of E, paired off."""
    divisors = intlinalg.smith_normal_form([list(r) for r in E]).divisors
    if any(d == 0 for d in divisors):
        raise SingularPolarization("polarization form is degenerate")
    paired = []
    for k in range(0, len(divisors), 2):
        if divisors[k] != divisors[k + 1]:
            raise NotAlternating("elementary divisors do not pair off")
        paired.append(divisors[k])
    return tuple(paired)


def _theta_orientation(E, g, delta) -> int:
    """Orientation making the polarization integrate positively.

    The coefficient of the full monomial in ``theta^g / g!`` is (up to
    sign) the Pfaffian of E, whose absolute value is the product of the
    polarization divisors.
    """
    n = 2 * g
    terms = {}
    for i in range(n):
        for j in range(i + 1, n):
            if E[i][j]:
                terms[(1 << i) | (1 << j)] = E[i][j]
    theta = Multivector(n, terms)
    top = theta.wedge_power(g).divide_exact(prod(range(1, g + 1)) if g else 1)
    coeff = top.coefficient((1 << n) - 1)
    if abs(coeff) != prod(delta):
        raise SingularPolarization(
            f"Pfaffian {coeff} does not match polarization type {delta}"
        )
    return 1 if coeff > 0 else -1


def make_variety(E, J=None, name: str = "A", leaves=None) -> AbelianVariety:
    """Validated abelian variety from a polarization and optional J.

    Raises :class:`NotAlternating`, :class:`SingularPolarization`,
    :class:`ComplexStructureInvalid` (``J^2 != -1``) or
    :class:`RiemannRelationViolated` (compatibility or positivity).
    """
    Et = _as_int_matrix(E)
    n = len(Et)
    if n % 2 or any(len(row) != n for row in Et):
        raise NotAlternating(f"polarization matrix must be square of even size, got {n}")
    g = n // 2
    for i in range(n):
        for j in range(n):
            if Et[i][j] != -Et[j][i]:
                raise NotAlternating(f"E[{i}][{j}] != -E[{j}][{i}]")
    delta = _paired_type(Et)
    Jt = None
    if J is not None:
        Jt = _as_frac_matrix(J)
        if len(Jt) != n or any(len(row) != n for row in Jt):
            raise ComplexStructureInvalid("J has wrong dimensions")
        J2 = intlinalg.mat_mul([list(r) for r in Jt], [list(r) for r in Jt])
        if not intlinalg.mat_eq(J2, intlinalg.scalar_matrix(n, Fraction(-1))):
            raise ComplexStructureInvalid("J^2 != -identity")
        S = intlinalg.mat_mul([list(r) for r in Et], [list(r) for r in Jt])
        try:
            if not intlinalg.is_positive_definite(S):
                raise RiemannRelationViolated("E(x, Jx) is not positive definite")
        except NotSymmetric as exc:
            raise RiemannRelationViolated(f"E(Jx, Jy) != E(x, y): {exc}") from exc
    orientation = _theta_orientation(Et, g, delta)
    if leaves is None:
        leaves = (Leaf(offset=0, genus=g, sign=1),)
    return AbelianVariety(
        name=name,
        genus=g,
        E=Et,
        J=Jt,
        orientation=orientation,
        polarization_type=delta,
        leaves=tuple(leaves),
    )


def gaussian_elliptic_curve(name: str = "E_i") -> AbelianVariety:
    """The elliptic curve with complex multiplication by the Gaussian integers."""
    return make_variety(
        E=[[0, 1], [-1, 0]],
        J=[[0, -1], [1, 0]],
        name=name,
    )


def elliptic_product(delta, name: str | None = None) -> AbelianVariety:
    """Power of the Gaussian elliptic curve with polarization type ``delta``.

    The polarization is written in Frobenius form (x-generators first,
    then y-generators) with ``E = [[0, D], [-D, 0]]``; the compatible
    complex structure ``J = [[0, -I], [I, 0]]`` gives every factor
    complex multiplication by the Gaussian integers.
    """
    delta = tuple(int(d) for d in delta)
    g = len(delta)
    if g == 0 or any(d <= 0 for d in delta):
        raise InvalidType(f"polarization type must be positive, got {delta}")
    for a, b in zip(delta, delta[1:]):
        if b % a:
            raise InvalidType(f"{a} does not divide {b} in type {delta}")
    n = 2 * g
    E = [[0] * n for _ in range(n)]
    Jm = [[0] * n for _ in range(n)]
    for i in range(g):
        E[i][g + i] = delta[i]
        E[g + i][i] = -delta[i]
        Jm[i][g + i] = -1
        Jm[g + i][i] = 1
    if name is None:
        name = f"E_i^{g}" if all(d == 1 for d in delta) else f"E_i^{g}{delta}"
    return make_variety(E=E, J=Jm, name=name)


def standard_ppav(g: int, name: str | None = None) -> AbelianVariety:
    """Principally polarized power of the Gaussian elliptic curve."""
    return elliptic_product((1,) * g, name=name or f"E_i^{g}")


# ---------------------------------------------------------------------------
# duality


def _hodge_rows(J_blocks, a: int, b: int):
    """Generator images of the projector element a + bJ on 1-forms.

    The induced action on the dual basis sends generator i to
    ``a e_i + b sum_j J[i][j] e_j``, i.e. row i of ``a I + b J``.
    """
    n = len(J_blocks)
    rows = []
    for i in range(n):
        row = [(j, Fraction(b) * J_blocks[i][j]) for j in range(n) if J_blocks[i][j]]
        row.append((i, Fraction(a)))
        rows.append(row)
    return rows


def _pairing_class_is_hodge(JA, JB, a: int = 1, b: int = 2) -> bool:
    """Whether ``sum_i e_i ^ ehat_i`` is fixed by the Hodge projector.

    ``JA`` acts on the first block of generators, ``JB`` on the second;
    the class is of type (1,1) exactly when the projector scales it by
    ``a^2 + b^2``.
    """
    nA = len(JA)
    n = nA + len(JB)
    blocks = [[Fraction(0)] * n for _ in range(n)]
    for i in range(nA):
        for j in range(nA):
            blocks[i][j] = Fraction(JA[i][j])
    for i in range(len(JB)):
        for j in range(len(JB)):
            blocks[nA + i][nA + j] = Fraction(JB[i][j])
    ell = Multivector(n, {(1 << i) | (1 << (nA + i)): 1 for i in range(nA)})
    rows = _hodge_rows(blocks, a, b)
    image = _apply_rows_rational(ell, rows, n)
    return image == {m: Fraction((a * a + b * b) * c) for m, c in ell.items()}


def _apply_rows_rational(x: Multivector, rows, target_rank: int):
    """Like the exterior algebra map but keeping rational output."""
    from .exterior import wedge_sign as _ws

    acc: dict[int, Fraction] = {}
    for mask, coeff in x.items():
        partial = {0: Fraction(coeff)}
        m = mask
        while m:
            low = m & -m
            m ^= low
            row = rows[low.bit_length() - 1]
            nxt: dict[int, Fraction] = {}
            for pmask, pc in partial.items():
                for j, cj in row:
                    bit = 1 << j
                    if pmask & bit:
                        continue
                    s = _ws(pmask, bit)
                    key = pmask | bit
                    val = nxt.get(key, Fraction(0)) + s * pc * cj
                    if val:
                        nxt[key] = val
                    elif key in nxt:
                        del nxt[key]
            partial = nxt
            if not partial:
                break
        for k, v in partial.items():
            nv = acc.get(k, Fraction(0)) + v
            if nv:
                acc[k] = nv
            elif k in acc:
                del acc[k]
    return acc


@lru_cache(maxsize=None)
def dual(A: AbelianVariety) -> AbelianVariety:
    """Dual abelian variety, modeled on the dual lattice.

    The dual polarization is ``-(d_1 d_g) E^{-1}``, the unique rescaled
    inverse that is integral, satisfies the Riemann relations against the
    dual complex structure, and makes the double dual reproduce ``E``
    exactly.  The dual complex structure is the sign choice among the
    transposed conjugates ``+-J^T`` passing the Hodge-membership test for
    the pairing class; the passing sign is selected at construction time.
    """
    c = A.polarization_type[0] * A.polarization_type[-1]
    Einv = intlinalg.rational_inverse([list(r) for r in A.E])
    E_hat = []
    for row in Einv:
        out_row = []
        for x in row:
            v = -c * x
            if v.denominator != 1:
                raise SingularPolarization("dual polarization is not integral")
            out_row.append(int(v))
        E_hat.append(out_row)
    J_hat = None
    if A.J is not None:
        Jt = [list(r) for r in zip(*A.J)]
        for sign in (-1, 1):
            cand = [[sign * x for x in row] for row in Jt]
            if _pairing_class_is_hodge(A.J, cand, *HODGE_DEFAULT_AB):
                J_hat = cand
                break
        if J_hat is None:
            raise ComplexStructureInvalid(
                "no transposed conjugate of J makes the pairing class Hodge"
            )
    hatted = tuple(Leaf(lf.offset, lf.genus, -lf.sign) for lf in A.leaves)
    # Strip rather than stack dual markers so the double dual is A on the
    # nose (every other field already reproduces exactly).
    hat_name = A.name[:-1] if A.name.endswith("^") else A.name + "^"
    return make_variety(E_hat, J_hat, name=hat_name, leaves=hatted)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class Homomorphism:
    """Integral matrix acting on first homology, source to target.

    The matrix is ``2g_target x 2g_source`` in column convention: the
    image of source basis vector ``j`` is ``sum_i M[i][j] w_i``.
    """

    source: AbelianVariety
    target: AbelianVariety
    matrix: tuple[tuple[int, ...], ...]
    holomorphic: bool

    def __post_init__(self):
        if len(self.matrix) != self.target.rank or any(
            len(row) != self.source.rank for row in self.matrix
        ):
            raise RankMismatch(
                f"matrix shape {len(self.matrix)}x{len(self.matrix[0]) if self.matrix else 0}"
                f" does not map rank {self.source.rank} to rank {self.target.rank}"
            )
        if self.holomorphic and self.source.J is not None and self.target.J is not None:
            MJ = intlinalg.mat_mul([list(r) for r in self.matrix], [list(r) for r in self.source.J])
            JM = intlinalg.mat_mul([list(r) for r in self.target.J], [list(r) for r in self.matrix])
            if not intlinalg.mat_eq(MJ, JM):
                raise ComplexStructureInvalid(
                    "homomorphism flagged holomorphic does not intertwine J"
                )

    def pullback(self, x: Multivector) -> Multivector:
        """Ring map on cohomology: generator i of the target pulls back to
        row i of the matrix, read as a 1-form on the source."""
        if x.rank != self.target.rank:
            raise RankMismatch(f"class lives on rank {x.rank}, target is {self.target.rank}")
        rows = [
            [(j, Fraction(e)) for j, e in enumerate(row) if e]
            for row in self.matrix
        ]
        return _apply_generator_images(x, rows, self.source.rank)

    def pushforward(self, x: Multivector) -> Multivector:
        """Poincare-duality adjoint of the pullback.

        Defined by ``integrate_target(f_*(x) ^ y) = integrate_source(x ^ f^*(y))``
        for every y, so all Koszul signs come from the wedge itself.
        Raises the class degree by ``2(g_target - g_source)``.
        """
        if x.rank != self.source.rank:
            raise RankMismatch(f"class lives on rank {x.rank}, source is {self.source.rank}")
        nA, nB = self.source.rank, self.target.rank
        oA, oB = self.source.orientation, self.target.orientation
        full_A = (1 << nA) - 1
        full_B = (1 << nB) - 1
        out: dict[int, int] = {}
        for k in sorted(x.degrees()):
            xk = x.graded_component(k)
            u_size = nA - k
            if u_size < 0 or k + nB - nA < 0:
                continue
            for combo in combinations(range(nB), u_size):
                u_mask = 0
                for i in combo:
                    u_mask |= 1 << i
                pulled = self.pullback(Multivector(nB, {u_mask: 1}))
                if pulled.is_zero() and u_size:
                    continue
                val = oA * xk.wedge(pulled).coefficient(full_A)
                if val:
                    w = full_B ^ u_mask
                    out[w] = out.get(w, 0) + oB * wedge_sign(w, u_mask) * val
        return Multivector(nB, out)

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """self after other (``self . other``)."""
        if other.target != self.source:
            raise RankMismatch("composition mismatch: inner target != outer source")
        M = intlinalg.mat_mul([list(r) for r in self.matrix], [list(r) for r in other.matrix])
        return Homomorphism(
            source=other.source,
            target=self.target,
            matrix=tuple(tuple(row) for row in M),
            holomorphic=self.holomorphic and other.holomorphic,
        )

    def degree(self) -> int:
        """Degree of an isogeny: absolute determinant on homology."""
        if self.source.rank != self.target.rank:
            raise NotIsogeny("source and target have different dimension")
        d = intlinalg.det_bareiss([list(r) for r in self.matrix])
        if d == 0:
            raise NotIsogeny("matrix is singular")
        return abs(d)

    def dual_hom(self) -> "Homomorphism":
        """Dual homomorphism between the dual varieties (transposed matrix)."""
        return Homomorphism(
            source=dual(self.target),
            target=dual(self.source),
            matrix=tuple(tuple(row) for row in zip(*self.matrix)),
            holomorphic=self.holomorphic,
        )


def identity_hom(A: AbelianVariety) -> Homomorphism:
    return Homomorphism(A, A, tuple(tuple(r) for r in intlinalg.identity_matrix(A.rank)), True)


def scalar_hom(A: AbelianVariety, n: int) -> Homomorphism:
    """Multiplication by n on the variety (n * identity on homology)."""
    return Homomorphism(
        A, A, tuple(tuple(n if i == j else 0 for j in range(A.rank)) for i in range(A.rank)), True
    )


def polarization_isogeny(A: AbelianVariety) -> Homomorphism:
    """The isogeny to the dual induced by the polarization form.

    On homology it sends v to the functional ``E(. , v)``, i.e. the
    matrix is E itself; the convention is pinned by the requirement that
    the pairing class on the product pulls back along ``(id, lambda)`` to
    twice the polarization class.
    """
    return Homomorphism(
        source=A,
        target=dual(A),
        matrix=tuple(tuple(row) for row in A.E),
        holomorphic=A.J is not None,
    )


# ---------------------------------------------------------------------------
# products


@dataclass(frozen=True)
class ProductStructure:
    """A product variety with its factor projections and zero-section inclusions."""

    factors: tuple[AbelianVariety, AbelianVariety]
    variety: AbelianVariety
    pi1: Homomorphism
    pi2: Homomorphism
    j1: Homomorphism
    j2: Homomorphism

    def pull_first(self, x: Multivector) -> Multivector:
        """Fast pullback along the first projection (masks unchanged)."""
        A = self.factors[0]
        if x.rank != A.rank:
            raise RankMismatch(f"class rank {x.rank} != first factor rank {A.rank}")
        return Multivector(self.variety.rank, dict(x.items()))

    def pull_second(self, x: Multivector) -> Multivector:
        """Fast pullback along the second projection (masks shifted up)."""
        A, B = self.factors
        if x.rank != B.rank:
            raise RankMismatch(f"class rank {x.rank} != second factor rank {B.rank}")
        s = A.rank
        return Multivector(self.variety.rank, {m << s: c for m, c in x.items()})

    def push_second(self, z: Multivector) -> Multivector:
        """Fiber integration over the first factor.

        In factor-major generator order a split monomial is the sorted
        concatenation of its blocks, so no Koszul sign appears: terms
        whose first block is full contribute their second block scaled by
        the first factor's orientation.
        """
        A, B = self.factors
        if z.rank != self.variety.rank:
            raise RankMismatch("class does not live on the product")
        s = A.rank
        full_A = (1 << s) - 1
        out: dict[int, int] = {}
        for m, c in z.items():
            if m & full_A == full_A:
                out[m >> s] = out.get(m >> s, 0) + A.orientation * c
        return Multivector(B.rank, out)

    def push_first(self, z: Multivector) -> Multivector:
        """Fiber integration over the second factor."""
        A, B = self.factors
        if z.rank != self.variety.rank:
            raise RankMismatch("class does not live on the product")
        s = A.rank
        full_A = (1 << s) - 1
        full_B_high = ((1 << B.rank) - 1) << s
        out: dict[int, int] = {}
        for m, c in z.items():
            if m & full_B_high == full_B_high:
                out[m & full_A] = out.get(m & full_A, 0) + B.orientation * c
        return Multivector(A.rank, out)


@lru_cache(maxsize=None)
def product(A: AbelianVariety, B: AbelianVariety) -> ProductStructure:
    """Product variety with block-diagonal polarization and complex structure.

    Generators are factor-major: all of A's first, then B's.  The leaf
    record concatenates both factor decompositions so the pairing class
    of a product is the sum of the factor pairing classes.
    """
    nA, nB = A.rank, B.rank
    n = nA + nB
    E = [[0] * n for _ in range(n)]
    for i in range(nA):
        for j in range(nA):
            E[i][j] = A.E[i][j]
    for i in range(nB):
        for j in range(nB):
            E[nA + i][nA + j] = B.E[i][j]
    J = None
    if A.J is not None and B.J is not None:
        J = [[Fraction(0)] * n for _ in range(n)]
        for i in range(nA):
            for j in range(nA):
                J[i][j] = A.J[i][j]
        for i in range(nB):
            for j in range(nB):
                J[nA + i][nA + j] = B.J[i][j]
    leaves = tuple(A.leaves) + tuple(
        Leaf(lf.offset + nA, lf.genus, lf.sign) for lf in B.leaves
    )
    V = make_variety(E, J, name=f"{A.name} x {B.name}", leaves=leaves)

    def hom(src, tgt, rows):
        return Homomorphism(src, tgt, tuple(tuple(r) for r in rows), True)

    I_A = intlinalg.identity_matrix(nA)
    I_B = intlinalg.identity_matrix(nB)
    pi1 = hom(V, A, [row + [0] * nB for row in I_A])
    pi2 = hom(V, B, [[0] * nA + row for row in I_B])
    j1 = hom(A, V, [row for row in I_A] + [[0] * nA for _ in range(nB)])
    j2 = hom(B, V, [[0] * nB for _ in range(nA)] + [row for row in I_B])
    return ProductStructure(factors=(A, B), variety=V, pi1=pi1, pi2=pi2, j1=j1, j2=j2)


@dataclass(frozen=True)
class StructureMaps:
    """Group-law morphisms of ``A x A`` over a fixed variety A."""

    square: ProductStructure
    m: Homomorphism
    diagonal: Homomorphism
    pi1: Homomorphism
    pi2: Homomorphism
    j1: Homomorphism
    j2: Homomorphism


@lru_cache(maxsize=None)
def structure_homs(A: AbelianVariety) -> StructureMaps:
    """Addition, diagonal, projections and zero-sections of ``A x A``.

    Satisfies ``m . diagonal = [2]`` and ``m . j1 = id`` on homology.
    """
    sq = product(A, A)
    n = A.rank
    I = intlinalg.identity_matrix(n)
    m = Homomorphism(
        sq.variety, A, tuple(tuple(I[i] + I[i]) for i in range(n)), True
    )
    diag = Homomorphism(
        A, sq.variety, tuple(tuple(row) for row in (I + I)), True
    )
    return StructureMaps(
        square=sq, m=m, diagonal=diag, pi1=sq.pi1, pi2=sq.pi2, j1=sq.j1, j2=sq.j2
    )
