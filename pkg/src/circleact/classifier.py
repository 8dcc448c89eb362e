"""Decision procedure: does a highly connected odd-dimensional manifold
admit a free circle action, up to almost diffeomorphism?

Input is the almost-diffeomorphism class of an (n-1)-connected
(2n+1)-manifold with torsion-free homology, encoded by the invariants
(n, b_n, l): the dimension parameter n = 5 or 7 mod 8, the middle Betti
number, and (for n = 7 mod 8) the divisibility l of the middle Pontrjagin
class.  The verdict:

* n = 5 (mod 8): always admits an action.
* n = 7 (mod 8): admits iff b_n is even and l = 0, or b_n is odd and l is
  divisible by ((n-1)/2)! * den(B_{(n+1)/4} / (n+1)).

Admitting results carry a witness decomposition (the connected-sum normal
form of the manifold) and an orbit recipe that the Gysin engine can turn
back into the input invariants.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from math import factorial

from .bernoulli import im_j_order
from .gradedtop import Family, OrbitModel, standard_orbit_model

__all__ = [
    "ManifoldInvariants",
    "DivisorReport",
    "ReasonCode",
    "Witness",
    "OrbitRecipe",
    "ClassificationResult",
    "InvalidInvariantsError",
    "kervaire_coefficient",
    "required_divisor",
    "validate",
    "classify",
    "euler_char_cp",
    "surgery_obstruction_vanishes",
]


@dataclass(frozen=True)
class ManifoldInvariants:
    """(n, b_n, l): dimension parameter, middle Betti number, and middle
    Pontrjagin divisibility.  l is meaningless (and ignored) when
    n = 5 mod 8; omitted l means 0."""

    n: int
    b_n: int
    l: int | None = None


def kervaire_coefficient(k: int) -> int:
    """a_k: the index of p_k on stable bundles over S^{4k} is a_k (2k-1)!;
    a_k = 2 for odd k, 1 for even k."""
    if k < 1:
        raise ValueError("index starts at 1")
    return 2 if k % 2 else 1


@dataclass(frozen=True)
class DivisorReport:
    """The divisors governing dimension n = 7 (mod 8), k = (n+1)/4.

    ``kervaire`` is the divisor every realizable l satisfies
    (a_k (2k-1)!, doubled to 12 in dimension 7); ``required`` is the
    divisor l must satisfy for a free circle action to exist:
    ((n-1)/2)! * den(B_k / 4k).
    """

    n: int
    k: int
    a_k: int
    kervaire: int
    j_index: int
    required: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "a_k": self.a_k,
            "kervaire": self.kervaire,
            "j_index": self.j_index,
            "required": self.required,
        }


class ReasonCode(str, Enum):
    N5_ALWAYS = "N5_ALWAYS"
    EVEN_L_ZERO = "EVEN_L_ZERO"
    ODD_DIVISIBLE = "ODD_DIVISIBLE"
    EVEN_L_NONZERO = "EVEN_L_NONZERO"
    ODD_NOT_DIVISIBLE = "ODD_NOT_DIVISIBLE"
    UNREALIZABLE = "UNREALIZABLE"

    @property
    def admits(self) -> bool:
        return self in (
            ReasonCode.N5_ALWAYS,
            ReasonCode.EVEN_L_ZERO,
            ReasonCode.ODD_DIVISIBLE,
        )


@dataclass(frozen=True)
class Witness:
    """Connected-sum normal form of the input manifold: copies of
    S^n x S^{n+1}, plus (when the Pontrjagin class is nonzero) one linear
    S^n-bundle over S^{n+1} with Euler class 0 and p-divisibility l."""

    sphere_product_copies: int
    bundle_divisibility: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "sphere_product_copies": self.sphere_product_copies,
            "bundle_divisibility": self.bundle_divisibility,
        }


@dataclass(frozen=True)
class OrbitRecipe:
    """Symbolic orbit space realizing the action: r handle summands
    S^n x S^n connect-summed with either CP^n or CP^{(n-1)/2} x S^{n+1}
    (the latter carrying middle Pontrjagin divisibility d when n = 7 mod 8),
    with the circle bundle over it classified by a primitive Euler class."""

    n: int
    family: Family
    handles: int
    divisibility: int | None = None
    euler_class: str = "primitive generator of H^2"

    def core_description(self) -> str:
        if self.family is Family.CPN:
            return f"CP^{self.n}"
        desc = f"CP^{(self.n - 1) // 2} x S^{self.n + 1}"
        if self.divisibility is not None:
            desc += f" with middle Pontrjagin divisibility {self.divisibility}"
        return desc

    def describe(self) -> str:
        core = self.core_description()
        n = self.n
        if self.handles:
            core = f"#_{self.handles}(S^{n} x S^{n}) # {core}"
        return f"{core}, circle bundle with Euler class a {self.euler_class}"

    def orbit_model(self) -> OrbitModel:
        """The graded model of this recipe, ready for the Gysin engine."""
        return standard_orbit_model(self.n, self.family, self.handles)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family.value,
            "handles": self.handles,
            "divisibility": self.divisibility,
            "euler_class": self.euler_class,
            "description": self.describe(),
        }


@dataclass(frozen=True)
class ClassificationResult:
    admits: bool
    reason: ReasonCode
    divisors: DivisorReport | None
    witness: Witness | None
    orbit: OrbitRecipe | None
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "admits": self.admits,
            "reason": self.reason.value,
            "divisors": self.divisors.to_json_dict() if self.divisors else None,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "orbit": self.orbit.to_json_dict() if self.orbit else None,
            "notes": list(self.notes),
        }


class InvalidInvariantsError(ValueError):
    """The invariants do not describe a realizable manifold class."""

    def __init__(self, violations: list[str]) -> None:
        super().__init__("; ".join(violations))
        self.violations = list(violations)


def required_divisor(n: int) -> DivisorReport:
    """Divisor report for n = 7 (mod 8): required = ((n-1)/2)! * den(B_k/4k)
    with k = (n+1)/4.  (1440 for n = 7, 2419200 for n = 15, ...)"""
    if n % 8 != 7 or n < 7:
        raise ValueError("divisor defined only for n = 7 (mod 8)")
    k = (n + 1) // 4
    a_k = kervaire_coefficient(k)  # k is even here, so a_k = 1
    kervaire = a_k * factorial(2 * k - 1)
    if n == 7:
        # Hopf-invariant-one dimension: the tangential obstruction is an
        # even multiple of a primitive class, doubling the divisor to 12
        kervaire = 2 * factorial(2 * k - 1)
    j_index = im_j_order(k)
    required = factorial((n - 1) // 2) * j_index
    return DivisorReport(
        n=n, k=k, a_k=a_k, kervaire=kervaire, j_index=j_index, required=required
    )


def _effective_l(inv: ManifoldInvariants) -> int:
    return 0 if inv.l is None else inv.l


def validate(inv: ManifoldInvariants) -> list[str]:
    """Realizability check; returns a list of violations (empty = ok),
    never raises."""
    violations: list[str] = []
    if inv.n < 5 or inv.n % 2 == 0 or inv.n % 8 not in (5, 7):
        violations.append("n must be odd, at least 5, and congruent to 5 or 7 mod 8")
    if inv.b_n < 0:
        violations.append("b_n must be nonnegative")
    if inv.n % 8 == 7 and inv.n >= 7:
        l = _effective_l(inv)
        if l < 0:
            violations.append("l must be nonnegative")
        else:
            kerv = required_divisor(inv.n).kervaire
            if l % kerv:
                violations.append(f"l not divisible by {kerv}")
            if inv.b_n == 0 and l != 0:
                violations.append("l must be 0 when b_n = 0")
    return violations


def _witness(b_n: int, l: int) -> Witness:
    if l == 0:
        return Witness(sphere_product_copies=b_n)
    return Witness(sphere_product_copies=b_n - 1, bundle_divisibility=l)


def _orbit_recipe(n: int, b_n: int, d: int | None) -> OrbitRecipe:
    if b_n % 2 == 0:
        return OrbitRecipe(n=n, family=Family.CPN, handles=b_n // 2)
    return OrbitRecipe(
        n=n, family=Family.CPHALF_TIMES_SPHERE, handles=(b_n - 1) // 2, divisibility=d
    )


def classify(inv: ManifoldInvariants) -> ClassificationResult:
    """Decide whether the manifold class admits a free circle action.

    Raises InvalidInvariantsError (carrying the violation list) on inputs
    that fail ``validate``.
    """
    violations = validate(inv)
    if violations:
        raise InvalidInvariantsError(violations)

    notes: list[str] = []
    if inv.b_n == 0:
        notes.append(
            "b_n = 0: the manifold is a homotopy sphere; the standard free "
            f"action on S^{2 * inv.n + 1} applies"
        )

    if inv.n % 8 == 5:
        if inv.l not in (None, 0):
            warnings.warn(
                "l is ignored for n = 5 (mod 8): the middle Pontrjagin index "
                "(n+1)/4 is not an integer there",
                stacklevel=2,
            )
            notes.append("l ignored for n = 5 (mod 8)")
        return ClassificationResult(
            admits=True,
            reason=ReasonCode.N5_ALWAYS,
            divisors=None,
            witness=_witness(inv.b_n, 0),
            orbit=_orbit_recipe(inv.n, inv.b_n, None),
            notes=tuple(notes),
        )

    report = required_divisor(inv.n)
    l = _effective_l(inv)
    if inv.b_n % 2 == 0:
        reason = ReasonCode.EVEN_L_ZERO if l == 0 else ReasonCode.EVEN_L_NONZERO
    else:
        # 0 is divisible by everything, so l = 0 admits here too
        reason = (
            ReasonCode.ODD_DIVISIBLE
            if l % report.required == 0
            else ReasonCode.ODD_NOT_DIVISIBLE
        )
    orbit = _orbit_recipe(inv.n, inv.b_n, l) if reason.admits else None
    return ClassificationResult(
        admits=reason.admits,
        reason=reason,
        divisors=report,
        witness=_witness(inv.b_n, l),
        orbit=orbit,
        notes=tuple(notes),
    )


def euler_char_cp(m: int) -> int:
    """Euler characteristic of complex projective m-space: m + 1."""
    if m < 0:
        raise ValueError("projective dimension must be nonnegative")
    return m + 1


def surgery_obstruction_vanishes(k: int) -> bool:
    """Whether the product-formula surgery obstruction dies in Z/2: it is
    chi(CP^{2k-1}) times a class, and chi(CP^{2k-1}) = 2k is even.
    Computed from the Euler characteristic rather than hard-coded."""
    if k < 1:
        raise ValueError("index starts at 1")
    return euler_char_cp(2 * k - 1) % 2 == 0
