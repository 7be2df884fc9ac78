"""Symplectic cocycles and the hard Lefschetz property on invariant models.

The Lefschetz maps are cup products with powers of the symplectic class,
computed as exact rank problems on the model's cohomology.  On models
with vanishing differential the direct rank computation is cross-checked
against the classical argument (injectivity of the wedge map on
invariant forms plus equality of paired Betti numbers); the two routes
must agree or the check aborts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cochain import ExteriorForm, cohomology, wedge_power
from .errors import InternalCheckError, PreconditionError
from .formality import InvariantComplex
from .linalg import Mat, is_zero_vec, rank, unit_vec


@dataclass(frozen=True)
class SymplecticCheck:
    """Exact verification that a 2-form is symplectic on the model."""

    omega: ExteriorForm
    half_dim: int
    closed: bool
    top_power_nonzero: bool

    @property
    def symplectic(self) -> bool:
        return self.closed and self.top_power_nonzero


def verify_symplectic(ic: InvariantComplex, omega: ExteriorForm) -> SymplecticCheck:
    """Check d(omega) = 0 and omega^n != 0 on a 2n-dimensional model."""
    if ic.dim % 2 != 0:
        raise PreconditionError("symplectic checks need an even-dimensional model")
    if omega.degree != 2:
        raise PreconditionError("a symplectic candidate must have degree 2")
    coords = ic.restrict_form(omega)
    if coords is None:
        raise PreconditionError("the 2-form does not lie in the invariant model")
    n = ic.dim // 2
    closed = is_zero_vec(ic.dmat(2).apply(coords))
    top = wedge_power(omega, n)
    return SymplecticCheck(omega, n, closed, not top.is_zero())


@dataclass(frozen=True)
class DegreeLefschetz:
    """Cup with the (n-i)-th power of omega from degree i to 2n-i."""

    degree: int
    matrix: Mat
    iso: bool
    injective_on_forms: Optional[bool] = None
    pairing_perfect: Optional[bool] = None


@dataclass(frozen=True)
class LefschetzReport:
    half_dim: int
    degrees: tuple[DegreeLefschetz, ...]
    holds: bool
    cross_checked: bool


def hard_lefschetz(ic: InvariantComplex, omega: ExteriorForm,
                   check: Optional[SymplecticCheck] = None) -> LefschetzReport:
    """Test whether cup with [omega^(n-i)] is an isomorphism for all i <= n.

    On zero-differential models the verdict is re-derived through
    injectivity of the wedge map on invariant forms together with the
    Poincare pairing, and both routes must agree exactly.
    """
    if check is None:
        check = verify_symplectic(ic, omega)
    if not check.symplectic:
        raise PreconditionError("hard Lefschetz needs a verified symplectic form")
    n = ic.dim // 2
    zero_diff = ic.has_zero_differential()
    pairing = poincare_pairing(ic) if zero_diff else None

    degrees = []
    all_iso = True
    for i in range(n + 1):
        power_form = wedge_power(omega, n - i)
        power_coords = ic.restrict_form(power_form)
        if power_coords is None:
            raise InternalCheckError("omega power escapes the invariant model")
        hi = cohomology(ic, i)
        htarget = cohomology(ic, 2 * n - i)
        cols = []
        for rep in hi.reps:
            prod = ic.wedge_coords(i, rep, 2 * (n - i), power_coords)
            coeffs, _ = htarget.express(prod)
            cols.append(coeffs)
        matrix = Mat.from_cols(cols, rows=htarget.betti)
        iso = hi.betti == htarget.betti and rank(matrix) == hi.betti

        injective = None
        perfect = None
        if zero_diff:
            ni = ic.space_dim(i)
            form_cols = [ic.wedge_coords(i, unit_vec(ni, j), 2 * (n - i), power_coords)
                         for j in range(ni)]
            fmat = Mat.from_cols(form_cols, rows=ic.space_dim(2 * n - i))
            injective = rank(fmat) == ni
            perfect = pairing.degrees[i].perfect
            predicted = injective and hi.betti == htarget.betti
            if predicted != iso:
                raise InternalCheckError(
                    f"Lefschetz routes disagree in degree {i}: "
                    f"direct rank says {iso}, injectivity and duality say {predicted}")
        degrees.append(DegreeLefschetz(i, matrix, iso, injective, perfect))
        all_iso = all_iso and iso
    return LefschetzReport(n, tuple(degrees), all_iso, zero_diff)


@dataclass(frozen=True)
class DegreePairing:
    degree: int
    matrix: Mat
    perfect: bool


@dataclass(frozen=True)
class PairingReport:
    top_betti: int
    degrees: tuple[DegreePairing, ...]
    all_perfect: bool
    note: str = ""


def poincare_pairing(ic: InvariantComplex) -> PairingReport:
    """Cup pairings H^k x H^(dim-k) -> H^dim with perfectness flags.

    When the top cohomology is not one-dimensional the pairing has no
    scalar values; matrices of the first top coordinate are still
    emitted, flagged imperfect, and the anomaly is noted.
    """
    top = cohomology(ic, ic.dim)
    scalar = top.betti == 1
    degrees = []
    all_perfect = True
    for k in range(ic.dim + 1):
        hk = cohomology(ic, k)
        hdual = cohomology(ic, ic.dim - k)
        rows = []
        for rep_k in hk.reps:
            row = []
            for rep_d in hdual.reps:
                prod = ic.wedge_coords(k, rep_k, ic.dim - k, rep_d)
                coeffs, _ = top.express(prod)
                row.append(coeffs[0] if coeffs else Fraction(0))
            rows.append(tuple(row))
        matrix = Mat.from_rows(rows, cols=hdual.betti) if rows else Mat.zero(0, hdual.betti)
        perfect = scalar and hk.betti == hdual.betti and rank(matrix) == hk.betti
        degrees.append(DegreePairing(k, matrix, perfect))
        all_perfect = all_perfect and perfect
    note = "" if scalar else (
        f"top cohomology has dimension {top.betti}, pairing values are "
        "first-coordinate projections only")
    return PairingReport(top.betti, tuple(degrees), all_perfect, note)


def search_symplectic_form(ic: InvariantComplex, attempts: int = 200,
                           height: int = 3, seed: int = 0) -> Optional[ExteriorForm]:
    """Randomized search for a symplectic cocycle in the model.

    Heuristic only: failure to find one proves nothing, and verdicts must
    never depend on this helper.  Coefficients are sampled from
    [-height, height]; every candidate is verified exactly before being
    returned.
    """
    if ic.dim % 2 != 0 or ic.space_dim(2) == 0:
        return None
    rng = random.Random(seed)
    basis2 = ic.basis_forms(2)
    for _ in range(attempts):
        candidate = ExteriorForm.zero(2)
        for b in basis2:
            coeff = rng.randint(-height, height)
            if coeff:
                candidate = candidate + b.scale(coeff)
        if candidate.is_zero():
            continue
        check = verify_symplectic(ic, candidate)
        if check.symplectic:
            return candidate
    return None
