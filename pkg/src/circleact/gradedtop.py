"""Integer linear algebra and graded models of circle-bundle orbit spaces.

A model stores, per degree, the free rank and torsion coefficients of the
orbit-space cohomology together with the integer matrices of cup product
with the Euler class t (one map H^j -> H^{j+2} per degree).  That is all
the Gysin sequence consumes: the total-space cohomology is assembled
degreewise from

    0 -> coker(t: H^{j-2} -> H^j) -> H^j(total) -> ker(t: H^{j-1} -> H^{j+1}) -> 0

with kernels and cokernels computed by Smith normal form.  The extension is
resolved as a direct sum and the cokernel is then *asserted* torsion-free;
a model producing torsion errors out rather than guessing the extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = [
    "IntMatrix",
    "SNFResult",
    "smith_normal_form",
    "kernel_rank",
    "cokernel",
    "GradedGroup",
    "Family",
    "OrbitModel",
    "standard_orbit_model",
    "gysin_total_space",
    "check_highly_connected",
    "divisibility_transfer",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; rows x cols, entries[i][j]."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError("entry grid does not match declared dimensions")

    @classmethod
    def from_rows(cls, rows: list[list[int]], cols: int | None = None) -> "IntMatrix":
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), ncols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors d_1 | d_2 | ... | d_rank (all >= 1) of an integer
    matrix; rank is the number of nonzero factors."""

    invariant_factors: tuple[int, ...]
    rank: int


def smith_normal_form(mat: IntMatrix) -> SNFResult:
    """Invariant factors by unimodular row/column operations, pivoting on
    the smallest nonzero entry."""
    a = [list(row) for row in mat.entries]
    nr, nc = mat.rows, mat.cols
    factors: list[int] = []
    t = 0
    while t < nr and t < nc:
        pivot = min(
            ((abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]),
            default=None,
        )
        if pivot is None:
            break
        _, pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            swapped = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        for j in range(t, nc):
                            a[i][j] -= q * a[t][j]
                    if a[i][t]:  # remainder is smaller than the pivot
                        a[t], a[i] = a[i], a[t]
                        swapped = True
            if swapped:
                continue
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        swapped = True
            if not swapped:
                break
        # the pivot must divide every remaining entry; if not, fold the
        # offending row in and re-eliminate
        d = abs(a[t][t])
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(t, nc):
                a[t][j] += a[offender][j]
            continue
        factors.append(d)
        t += 1
    return SNFResult(invariant_factors=tuple(factors), rank=len(factors))


def kernel_rank(mat: IntMatrix, snf: SNFResult | None = None) -> int:
    """Rank of the kernel: cols - rank (kernels over Z are free)."""
    snf = snf or smith_normal_form(mat)
    return mat.cols - snf.rank


def cokernel(mat: IntMatrix, snf: SNFResult | None = None) -> tuple[int, tuple[int, ...]]:
    """Cokernel as (free rank, torsion coefficients): Z^{rows-rank} plus
    Z/d_i for each invariant factor d_i > 1."""
    snf = snf or smith_normal_form(mat)
    torsion = tuple(d for d in snf.invariant_factors if d > 1)
    return mat.rows - snf.rank, torsion


@dataclass(frozen=True)
class GradedGroup:
    """Finitely generated graded abelian group: free rank and torsion
    coefficients per degree 0..top_degree; degrees outside the range are
    trivial."""

    top_degree: int
    ranks: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        ranks = tuple(int(r) for r in self.ranks)
        torsion = tuple(tuple(int(c) for c in t) for t in self.torsion)
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "torsion", torsion)
        if self.top_degree < 0:
            raise ValueError("top degree must be nonnegative")
        if len(ranks) != self.top_degree + 1 or len(torsion) != self.top_degree + 1:
            raise ValueError("need one rank and one torsion list per degree")
        if any(r < 0 for r in ranks):
            raise ValueError("ranks must be nonnegative")
        if any(c < 2 for t in torsion for c in t):
            raise ValueError("torsion coefficients must be >= 2")

    @classmethod
    def from_ranks(
        cls,
        top_degree: int,
        ranks: dict[int, int],
        torsion: dict[int, tuple[int, ...]] | None = None,
    ) -> "GradedGroup":
        torsion = torsion or {}
        return cls(
            top_degree,
            tuple(ranks.get(j, 0) for j in range(top_degree + 1)),
            tuple(tuple(torsion.get(j, ())) for j in range(top_degree + 1)),
        )

    def rank(self, j: int) -> int:
        return self.ranks[j] if 0 <= j <= self.top_degree else 0

    def torsion_at(self, j: int) -> tuple[int, ...]:
        return self.torsion[j] if 0 <= j <= self.top_degree else ()

    def is_trivial_at(self, j: int) -> bool:
        return self.rank(j) == 0 and not self.torsion_at(j)

    def to_json_dict(self) -> dict:
        return {
            "top_degree": self.top_degree,
            "groups": {
                str(j): {"rank": self.ranks[j], "torsion": list(self.torsion[j])}
                for j in range(self.top_degree + 1)
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GradedGroup":
        top = int(data["top_degree"])
        groups = data.get("groups", {})
        ranks = {}
        torsion = {}
        for key, grp in groups.items():
            j = int(key)
            ranks[j] = int(grp.get("rank", 0))
            torsion[j] = tuple(int(c) for c in grp.get("torsion", ()))
        return cls.from_ranks(top, ranks, torsion)


class Family(str, Enum):
    """The two orbit-space cohomology rings that can occur: the projective
    space ring (cup with t hits every even degree) and the ring of a
    half-projective space times a sphere (cup with t dies at degree n-1)."""

    CPN = "CPN"
    CPHALF_TIMES_SPHERE = "CPHALF_TIMES_SPHERE"


@dataclass(frozen=True)
class OrbitModel:
    """Cohomology of a candidate orbit space (a 2n-manifold) together with
    the cup-with-t maps the Gysin sequence needs.

    ``cup_t[j]`` is the matrix of -cup t: H^j -> H^{j+2} (rows = rank of
    the target); degrees without a stored matrix are zero maps.
    """

    n: int
    family: Family
    r: int
    cohomology: GradedGroup
    cup_t: dict[int, IntMatrix]
    euler_primitive: bool = True

    def __post_init__(self) -> None:
        if self.n < 5 or self.n % 2 == 0:
            raise ValueError("dimension out of scope")
        if self.r < 0:
            raise ValueError("handle count must be nonnegative")
        coh = self.cohomology
        if coh.top_degree != 2 * self.n:
            raise ValueError("cohomology must live in degrees 0..2n")
        if any(coh.torsion_at(j) for j in range(coh.top_degree + 1)):
            raise ValueError("orbit-space cohomology must be torsion free")
        if coh.rank(0) != 1 or coh.rank(1) != 0 or coh.rank(2) != 1:
            raise ValueError("H^0 = Z, H^1 = 0, H^2 = Z are required")
        if coh.rank(self.n) % 2:
            raise ValueError("middle rank must be even")
        for j in range(2 * self.n + 1):
            if coh.rank(j) != coh.rank(2 * self.n - j):
                raise ValueError("ranks must satisfy Poincare duality")
        for j, mat in self.cup_t.items():
            if mat.cols != coh.rank(j) or mat.rows != coh.rank(j + 2):
                raise ValueError(f"cup map at degree {j} has wrong shape")

    def cup_map(self, j: int) -> IntMatrix:
        """Matrix of -cup t: H^j -> H^{j+2}; zero map when not stored."""
        mat = self.cup_t.get(j)
        if mat is None:
            mat = IntMatrix.zeros(self.cohomology.rank(j + 2), self.cohomology.rank(j))
        return mat

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family.value,
            "r": self.r,
            "euler_primitive": self.euler_primitive,
            "cohomology": self.cohomology.to_json_dict(),
            "cup_t": {str(j): m.to_lists() for j, m in sorted(self.cup_t.items())},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "OrbitModel":
        coh = GradedGroup.from_json_dict(data["cohomology"])
        cup: dict[int, IntMatrix] = {}
        for key, rows in data.get("cup_t", {}).items():
            j = int(key)
            cup[j] = IntMatrix.from_rows([list(r) for r in rows], cols=coh.rank(j))
        return cls(
            n=int(data["n"]),
            family=Family(data["family"]),
            r=int(data["r"]),
            cohomology=coh,
            cup_t=cup,
            euler_primitive=bool(data.get("euler_primitive", True)),
        )


def standard_orbit_model(n: int, family: Family | str, r: int) -> OrbitModel:
    """The orbit-space model with r handles: connected sum of r copies of
    S^n x S^n with either CP^n or CP^{(n-1)/2} x S^{n+1}.

    Both families have Z in every even degree plus Z^{2r} in degree n; they
    differ in the cup-with-t map H^{n-1} -> H^{n+1}, which is an
    isomorphism for the projective family and zero for the product family
    (t^{(n+1)/2} vanishes there and the sphere class is not a t-multiple).
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("dimension out of scope")
    if r < 0:
        raise ValueError("handle count must be nonnegative")
    family = Family(family)
    half = (n - 1) // 2

    ranks = [0] * (2 * n + 1)
    if family is Family.CPN:
        # H*(CP^n): Z t^a in degree 2a, 0 <= a <= n
        for a in range(n + 1):
            ranks[2 * a] += 1
    else:
        # Kunneth on CP^half x S^{n+1}: Z t^a in degree 2a (a <= half)
        # and Z t^a s in degree n+1+2a (s the sphere class)
        for a in range(half + 1):
            ranks[2 * a] += 1
            ranks[n + 1 + 2 * a] += 1
    ranks[n] += 2 * r  # handles: r copies of S^n x S^n

    cup: dict[int, IntMatrix] = {}
    for j in range(2 * n - 1):
        src, tgt = ranks[j], ranks[j + 2]
        if src == 0 and tgt == 0:
            continue
        if src == 1 and tgt == 1:
            if family is Family.CPN:
                entry = 1  # t^a -> t^{a+1}, always onto a generator
            else:
                # within the projective part (or its sphere translate) cup
                # with t is onto a generator; from degree n-1 it is zero
                entry = 0 if j == n - 1 else 1
            cup[j] = IntMatrix.from_rows([[entry]])
        else:
            # handle classes multiply to zero with t (degree n source);
            # mixed shapes only occur with a zero side
            cup[j] = IntMatrix.zeros(tgt, src)

    cohomology = GradedGroup(
        2 * n, tuple(ranks), tuple(() for _ in range(2 * n + 1))
    )
    return OrbitModel(
        n=n, family=family, r=r, cohomology=cohomology, cup_t=cup, euler_primitive=True
    )


def gysin_total_space(model: OrbitModel) -> GradedGroup:
    """Cohomology of the circle-bundle total space over the model, assembled
    degreewise from the cokernel/kernel short exact sequences."""
    if not model.euler_primitive:
        raise ValueError("Euler class must generate H^2")
    n = model.n
    ranks: list[int] = []
    for j in range(2 * n + 2):
        coker_free, coker_torsion = cokernel(model.cup_map(j - 2))
        if coker_torsion:
            raise ArithmeticError(
                f"cup-with-t cokernel at degree {j} has torsion {coker_torsion}; "
                "extension undetermined for this model"
            )
        ranks.append(coker_free + kernel_rank(model.cup_map(j - 1)))
    return GradedGroup(
        2 * n + 1, tuple(ranks), tuple(() for _ in range(2 * n + 2))
    )


def check_highly_connected(h: GradedGroup, n: int) -> bool:
    """True iff H^j = 0 for 1 <= j <= n-1 and H^n, H^{n+1} are torsion
    free (the cohomological shape of an (n-1)-connected (2n+1)-manifold
    with torsion-free homology)."""
    for j in range(1, n):
        if not h.is_trivial_at(j):
            return False
    return not h.torsion_at(n) and not h.torsion_at(n + 1)


def _is_isomorphism(mat: IntMatrix) -> bool:
    if mat.rows != mat.cols:
        return False
    snf = smith_normal_form(mat)
    return snf.rank == mat.rows and all(d == 1 for d in snf.invariant_factors)


def divisibility_transfer(model: OrbitModel, d: int) -> int:
    """Divisibility of the pulled-back middle Pontrjagin class on the total
    space, given divisibility d on the orbit space.

    The vertical bundle of the circle bundle is trivial, so the class on
    the total space is the pullback.  If cup with t on degree n-1 is an
    isomorphism the pullback map on H^{n+1} is trivial and the answer is 0;
    if it is zero the pullback is a split injection onto a summand and the
    divisibility transfers unchanged.
    """
    if model.n % 8 != 7:
        raise ValueError("transfer defined only for n = 7 (mod 8)")
    if d < 0:
        raise ValueError("divisibility must be nonnegative")
    mat = model.cup_map(model.n - 1)
    if _is_isomorphism(mat):
        return 0
    if mat.is_zero():
        return d
    raise ValueError(
        "cup with t on degree n-1 is neither zero nor an isomorphism; "
        "model outside the supported dichotomy"
    )
