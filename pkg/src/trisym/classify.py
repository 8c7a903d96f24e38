"""Symmetry classification of rotational / nuclear-spin states.

Maps every (J, K, inversion species, total nuclear spin I) state of a
threefold-symmetric molecule (point group D3h or C3v, nuclear spin 0 or 1/2)
to the invariant subspaces it may occupy, and records what rules it out:
nothing, the symmetrization postulate (SP), the spin-statistics connection
(SS), or both.

The classification follows from two exact phase rules.  A rotation by
+-2pi/3 about the threefold axis, equivalent to a cyclic relabeling of the
nuclei, multiplies the rotational wave function by exp(+-i 2pi K / 3); a
rotation by pi about an in-plane symmetry axis (for K = 0), equivalent to a
two-label exchange, multiplies it by exp(+-i pi J), with an extra sign for
the inversion-antisymmetric species of a non-planar molecule.  Matching
those phases against the ones attainable in each invariant subspace yields
the classification tables; statistical weights come from character
orthogonality over the three conjugacy classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .group_algebra import (
    CHARACTER_TABLE,
    CLASS_SIZES,
    ClassLabel,
    LAMBDA_MINUS,
    LAMBDA_PLUS,
    SubspaceLabel,
)

__all__ = [
    "InversionSpecies",
    "ForbiddenBy",
    "RotationalState",
    "SymmetryAssignment",
    "SPIN_HALF",
    "SPIN_THREE_HALF",
    "rotation_phase_inplane",
    "rotation_phase_axis",
    "classify_spin0_planar",
    "classify_spin_half_planar",
    "classify_c3v_k0",
    "classify_state",
    "spin_space_decomposition",
    "product_decompose",
    "spin_statistical_weight",
    "sector_weights",
]

SPIN_HALF = Fraction(1, 2)
SPIN_THREE_HALF = Fraction(3, 2)

_VALID_I = (SPIN_HALF, SPIN_THREE_HALF)


class InversionSpecies(enum.Enum):
    """Inversion symmetry species of a rotational level.

    NONE for planar (D3h) molecules; S/A for the inversion-symmetric and
    -antisymmetric components of a non-planar (C3v) doublet.
    """

    NONE = "none"
    S = "s"
    A = "a"


class ForbiddenBy(enum.Enum):
    NONE = "none"
    SP = "SP"
    SS = "SS"
    SP_AND_SS = "SP+SS"

    @property
    def sp(self) -> bool:
        return self in (ForbiddenBy.SP, ForbiddenBy.SP_AND_SS)

    @property
    def ss(self) -> bool:
        return self in (ForbiddenBy.SS, ForbiddenBy.SP_AND_SS)


@dataclass(frozen=True)
class RotationalState:
    """Quantum labels of one roto-(nuclear-spin) level."""

    J: int
    K: int
    species: InversionSpecies = InversionSpecies.NONE
    I: Fraction | None = None

    def __post_init__(self):
        if self.J < 0:
            raise ValueError(f"J must be non-negative, got {self.J}")
        if abs(self.K) > self.J:
            raise ValueError(f"|K| <= J required, got K={self.K}, J={self.J}")
        if self.I is not None and self.I not in _VALID_I:
            raise ValueError(f"I must be 1/2 or 3/2, got {self.I}")


@dataclass(frozen=True)
class SymmetryAssignment:
    """Where a state may live and what forbids it."""

    subspaces: frozenset[SubspaceLabel]
    forbidden_by: ForbiddenBy

    @property
    def sp_forbidden(self) -> bool:
        return self.forbidden_by.sp

    @property
    def ss_forbidden(self) -> bool:
        return self.forbidden_by.ss


def _assignment(labels, forbidden) -> SymmetryAssignment:
    return SymmetryAssignment(frozenset(labels), forbidden)


def rotation_phase_inplane(K: int, epsilon: int) -> complex:
    """Phase picked up under a rotation by epsilon * 2pi/3 about the axis.

    Equals exp(i epsilon 2pi K / 3), evaluated exactly from K mod 3.
    """
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +-1, got {epsilon}")
    residue = (epsilon * K) % 3
    if residue == 0:
        return 1.0 + 0.0j
    return LAMBDA_PLUS if residue == 1 else LAMBDA_MINUS


def rotation_phase_axis(
    J: int, epsilon: int, species: InversionSpecies = InversionSpecies.NONE
) -> complex:
    """Phase under a pi rotation about an in-plane axis, for K = 0 states.

    exp(i epsilon pi J) = (-1)^J, with the sign reversed for the
    inversion-antisymmetric species (the physical exchange there is the
    rotation combined with spatial inversion).
    """
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +-1, got {epsilon}")
    phase = complex(1.0 if J % 2 == 0 else -1.0)
    if species is InversionSpecies.A:
        phase = -phase
    return phase


def _check_jk(J: int, K: int):
    if J < 0:
        raise ValueError(f"J must be non-negative, got {J}")
    if abs(K) > J:
        raise ValueError(f"|K| <= J required, got K={K}, J={J}")


def classify_spin0_planar(J: int, K: int) -> SymmetryAssignment:
    """Classify a rotational level of a planar molecule with spin-0 nuclei.

    K = 3q (q != 0): symmetric/antisymmetric pair, allowed.
    K = 3q +- 1:     mixed-symmetry only, SP-forbidden.
    K = 0:           even J symmetric (allowed), odd J antisymmetric
                     (forbidden by the bosonic spin-statistics).
    """
    _check_jk(J, K)
    if K % 3 != 0:
        return _assignment({SubspaceLabel.HPRIME}, ForbiddenBy.SP)
    if K != 0:
        return _assignment(
            {SubspaceLabel.HPLUS, SubspaceLabel.HMINUS}, ForbiddenBy.NONE
        )
    if J % 2 == 0:
        return _assignment({SubspaceLabel.HPLUS}, ForbiddenBy.NONE)
    return _assignment({SubspaceLabel.HMINUS}, ForbiddenBy.SS)


def spin_space_decomposition() -> dict[SubspaceLabel, list[tuple[Fraction, int]]]:
    """Decomposition of the 8-dimensional spin space of three spin-1/2 nuclei.

    The quartet (I = 3/2) is totally symmetric; the two degenerate doublets
    (I = 1/2) are mixed-symmetry.  No non-vanishing totally antisymmetric
    combination exists: each label only takes two values.
    """
    return {
        SubspaceLabel.HPLUS: [(SPIN_THREE_HALF, 4)],
        SubspaceLabel.HMINUS: [],
        SubspaceLabel.HPRIME: [(SPIN_HALF, 2), (SPIN_HALF, 2)],
    }


_PRODUCT_TABLE = {
    (SubspaceLabel.HPLUS, SubspaceLabel.HPLUS): (SubspaceLabel.HPLUS,),
    (SubspaceLabel.HPLUS, SubspaceLabel.HMINUS): (SubspaceLabel.HMINUS,),
    (SubspaceLabel.HPLUS, SubspaceLabel.HPRIME): (SubspaceLabel.HPRIME,),
    (SubspaceLabel.HMINUS, SubspaceLabel.HMINUS): (SubspaceLabel.HPLUS,),
    (SubspaceLabel.HMINUS, SubspaceLabel.HPRIME): (SubspaceLabel.HPRIME,),
    (SubspaceLabel.HPRIME, SubspaceLabel.HPRIME): (
        SubspaceLabel.HPLUS,
        SubspaceLabel.HMINUS,
        SubspaceLabel.HPRIME,
    ),
}


def product_decompose(
    a: SubspaceLabel, b: SubspaceLabel
) -> tuple[SubspaceLabel, ...]:
    """Symmetry types occurring in the product of two sectors.

    Arguments are coarse labels (HPLUS, HMINUS, HPRIME); the product is
    symmetric in its arguments.
    """
    for key in ((a, b), (b, a)):
        if key in _PRODUCT_TABLE:
            return _PRODUCT_TABLE[key]
    raise ValueError(f"labels must be coarse sector labels, got {a}, {b}")


def _spin_half_row(K: int, J: int, I: Fraction) -> SymmetryAssignment:
    if K % 3 != 0:
        if I == SPIN_HALF:
            return _assignment(
                {SubspaceLabel.HPLUS, SubspaceLabel.HMINUS, SubspaceLabel.HPRIME},
                ForbiddenBy.NONE,
            )
        return _assignment({SubspaceLabel.HPRIME}, ForbiddenBy.SP)
    if K != 0:
        if I == SPIN_HALF:
            return _assignment({SubspaceLabel.HPRIME}, ForbiddenBy.SP)
        return _assignment(
            {SubspaceLabel.HPLUS, SubspaceLabel.HMINUS}, ForbiddenBy.NONE
        )
    # K = 0
    if I == SPIN_HALF:
        return _assignment({SubspaceLabel.HPRIME}, ForbiddenBy.SP)
    if J % 2 == 0:
        return _assignment({SubspaceLabel.HPLUS}, ForbiddenBy.SS)
    return _assignment({SubspaceLabel.HMINUS}, ForbiddenBy.NONE)


def classify_spin_half_planar(
    J: int, K: int, I: Fraction | None = None
) -> SymmetryAssignment:
    """Classify a level of a planar molecule with three spin-1/2 nuclei.

    With ``I`` given, returns the assignment of that hyperfine component.
    With ``I=None`` (hyperfine structure unresolved) the union over both I
    values is returned; the level counts as forbidden only when every
    component is.
    """
    _check_jk(J, K)
    if I is not None:
        if I not in _VALID_I:
            raise ValueError(f"I must be 1/2 or 3/2, got {I}")
        return _spin_half_row(K, J, I)

    rows = [_spin_half_row(K, J, i) for i in _VALID_I]
    subspaces = frozenset().union(*(r.subspaces for r in rows))
    if any(r.forbidden_by is ForbiddenBy.NONE for r in rows):
        forbidden = ForbiddenBy.NONE
    else:
        sp = any(r.sp_forbidden for r in rows)
        ss = any(r.ss_forbidden for r in rows)
        forbidden = {
            (True, True): ForbiddenBy.SP_AND_SS,
            (True, False): ForbiddenBy.SP,
            (False, True): ForbiddenBy.SS,
        }[(sp, ss)]
    return SymmetryAssignment(subspaces, forbidden)


def _effective_odd(J: int, species: InversionSpecies) -> bool:
    # The a-species picks up an extra sign under the exchange-equivalent
    # rotation+inversion, which acts like a J-parity flip in the K=0 rules.
    return (J % 2 == 1) != (species is InversionSpecies.A)


def classify_c3v_k0(
    J: int,
    species: InversionSpecies,
    nuclear_spin: Fraction,
    I: Fraction | None = None,
) -> SymmetryAssignment:
    """Classify a K = 0 inversion-doublet component of a C3v molecule."""
    if species not in (InversionSpecies.S, InversionSpecies.A):
        raise ValueError("species must be s or a for a C3v doublet")
    if nuclear_spin not in (Fraction(0), SPIN_HALF):
        raise ValueError(f"nuclear spin must be 0 or 1/2, got {nuclear_spin}")
    if J < 0:
        raise ValueError(f"J must be non-negative, got {J}")

    odd = _effective_odd(J, species)
    if nuclear_spin == 0:
        if I is not None:
            raise ValueError("I is only meaningful for spin-1/2 nuclei")
        if odd:
            return _assignment({SubspaceLabel.HMINUS}, ForbiddenBy.SS)
        return _assignment({SubspaceLabel.HPLUS}, ForbiddenBy.NONE)

    # Spin 1/2: reuse the planar K=0 rules with the effective parity.
    j_eff = 1 if odd else 0
    return classify_spin_half_planar(j_eff, 0, I)


def classify_state(
    J: int,
    K: int,
    nuclear_spin: Fraction,
    species: InversionSpecies = InversionSpecies.NONE,
    I: Fraction | None = None,
) -> SymmetryAssignment:
    """Classify any supported state, dispatching on geometry and spin.

    For C3v levels with K != 0 the planar rules apply per inversion
    component: the threefold-rotation phase argument is unchanged by the
    out-of-plane nuclei.
    """
    _check_jk(J, K)
    if species is InversionSpecies.NONE:
        if nuclear_spin == 0:
            if I is not None:
                raise ValueError("I is only meaningful for spin-1/2 nuclei")
            return classify_spin0_planar(J, K)
        return classify_spin_half_planar(J, K, I)
    if K == 0:
        return classify_c3v_k0(J, species, nuclear_spin, I)
    # K != 0: J parity and inversion species only enter the K = 0 rules,
    # so the planar classification applies per doublet component.
    if nuclear_spin == 0:
        if I is not None:
            raise ValueError("I is only meaningful for spin-1/2 nuclei")
        return classify_spin0_planar(J, K)
    return classify_spin_half_planar(J, K, I)


# ---------------------------------------------------------------------------
# Statistical weights via character orthogonality.
# ---------------------------------------------------------------------------

_SPIN_CHARS = {
    # chi(g) = 2^(number of cycles of g) for three spin-1/2 labels.
    Fraction(1, 2): {
        ClassLabel.IDENTITY: 8,
        ClassLabel.TRANSPOSITION: 4,
        ClassLabel.THREE_CYCLE: 2,
    },
    Fraction(0): {
        ClassLabel.IDENTITY: 1,
        ClassLabel.TRANSPOSITION: 1,
        ClassLabel.THREE_CYCLE: 1,
    },
}


def _rot_chars(J: int, K: int, species: InversionSpecies) -> dict[ClassLabel, int]:
    """Character of the rotational level (the +-K pair for K != 0)."""
    if K == 0:
        swap = -1 if _effective_odd(J, species) else 1
        return {
            ClassLabel.IDENTITY: 1,
            ClassLabel.TRANSPOSITION: swap,
            ClassLabel.THREE_CYCLE: 1,
        }
    # exp(i 2pi K/3) + exp(-i 2pi K/3) is 2 for K = 3q and -1 otherwise.
    cyc = 2 if K % 3 == 0 else -1
    return {
        ClassLabel.IDENTITY: 2,
        ClassLabel.TRANSPOSITION: 0,
        ClassLabel.THREE_CYCLE: cyc,
    }


def _multiplicity(irrep: str, chars: dict[ClassLabel, int]) -> int:
    total = sum(
        CLASS_SIZES[c] * CHARACTER_TABLE[irrep][c] * chars[c] for c in ClassLabel
    )
    assert total % 6 == 0, "character sum must be divisible by the group order"
    return total // 6


def sector_weights(
    J: int,
    K: int,
    nuclear_spin: Fraction,
    species: InversionSpecies = InversionSpecies.NONE,
) -> dict[str, int]:
    """Dimension of each symmetry sector of the (rotation x spin) level.

    Keys "A1", "A2" count one-dimensional symmetric/antisymmetric states;
    "E" is the total dimension hosted by the mixed-symmetry sector.  For
    spin-0 nuclei the mixed sector is counted once per K-sign slot, so that
    forbidden-to-allowed intensity ratios reduce to the bare violation
    fraction.
    """
    _check_jk(J, K)
    nuclear_spin = Fraction(nuclear_spin)
    if nuclear_spin not in _SPIN_CHARS:
        raise ValueError(f"nuclear spin must be 0 or 1/2, got {nuclear_spin}")
    rot = _rot_chars(J, K, species)
    spin = _SPIN_CHARS[nuclear_spin]
    chars = {c: rot[c] * spin[c] for c in ClassLabel}
    weights = {
        "A1": _multiplicity("A1", chars),
        "A2": _multiplicity("A2", chars),
        "E": 2 * _multiplicity("E", chars),
    }
    if nuclear_spin == 0 and K % 3 != 0:
        weights["E"] = 1
    return weights


def spin_statistical_weight(
    J: int,
    K: int,
    molecule=None,
    *,
    nuclear_spin: Fraction | None = None,
    species: InversionSpecies = InversionSpecies.NONE,
) -> int:
    """Number of states of the level carrying the statistics-required symmetry.

    Totally symmetric states for spin-0 (bosonic) nuclei, totally
    antisymmetric for spin-1/2 (fermionic) ones.  Zero means the level is
    completely forbidden under SP plus spin-statistics.  Pass either a
    molecule spec or an explicit ``nuclear_spin``.
    """
    if molecule is not None:
        nuclear_spin = molecule.nuclear_spin
    if nuclear_spin is None:
        raise ValueError("either molecule or nuclear_spin is required")
    weights = sector_weights(J, K, Fraction(nuclear_spin), species)
    return weights["A1"] if Fraction(nuclear_spin) == 0 else weights["A2"]
