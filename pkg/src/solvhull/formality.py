"""Invariant subcomplexes and formality certificates.

The invariant model intersects two fixed-point computations on each
exterior degree: the joint kernel of the torus derivations (extended to
forms as degree-zero derivations) and the image of the averaging
projector of the finite automorphism group.  The result is checked to be
a subcomplex closed under wedge before any verdict is issued.

Formality itself is certified only through the sound route: a vanishing
restricted differential.  Obstructions come from triple Massey products;
absence of low-degree obstructions yields the honest answer "undecided".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cochain import (
    CochainComplex,
    CohomologyClass,
    ExteriorForm,
    ce_complex,
    cohomology,
    cup,
    wedge,
)
from .errors import InternalCheckError
from .hull import DEFAULT_FINITE_BOUND, HullData, validate_hull_data
from .linalg import (
    Mat,
    Vec,
    is_zero_vec,
    kernel_basis,
    solve,
    unit_vec,
    vadd,
    vscale,
    zero_vec,
)


def _coords_in(basis: Sequence[Vec], w: Vec) -> Optional[Vec]:
    if not basis:
        return () if is_zero_vec(w) else None
    return solve(Mat.from_cols(basis, rows=len(w)), w)


def derivation_extension_matrix(cx: CochainComplex, d: Mat, k: int) -> Mat:
    """Degree-zero derivation action of d on k-forms.

    On dual generators the action is (D alpha)(x) = -alpha(D x), then it
    is extended by the Leibniz rule without signs.
    """
    n = cx.dim
    one_images = [ExteriorForm.make(1, {(j,): -d.entries[i][j] for j in range(n)})
                  for i in range(n)]
    cols = []
    for idx in cx.basis(k):
        total = ExteriorForm.zero(k)
        for t in range(k):
            piece = wedge(ExteriorForm.monomial(idx[:t]), one_images[idx[t]])
            piece = wedge(piece, ExteriorForm.monomial(idx[t + 1:]))
            total = total + piece
        cols.append(cx.coords(total))
    return Mat.from_cols(cols, rows=cx.space_dim(k))


def pullback_matrix(cx: CochainComplex, g: Mat, k: int) -> Mat:
    """Action of an algebra automorphism on k-forms, (g alpha)(x) = alpha(g x)."""
    n = cx.dim
    one_images = [ExteriorForm.make(1, {(j,): g.entries[i][j] for j in range(n)})
                  for i in range(n)]
    cols = []
    for idx in cx.basis(k):
        total = ExteriorForm.monomial(())
        for i in idx:
            total = wedge(total, one_images[i])
        cols.append(cx.coords(total))
    return Mat.from_cols(cols, rows=cx.space_dim(k))


def averaging_projector(cx: CochainComplex, group: Sequence[Mat], k: int) -> Mat:
    """(1/|G|) sum of the pullbacks over the whole finite group."""
    nk = cx.space_dim(k)
    acc = Mat.zero(nk, nk)
    for g in group:
        acc = acc + pullback_matrix(cx, g, k)
    proj = Fraction(1, len(group)) * acc
    if proj @ proj != proj:
        raise InternalCheckError("averaging projector is not idempotent")
    return proj


def torus_invariant_basis(cx: CochainComplex, derivations: Sequence[Mat], k: int) -> list[Vec]:
    """Joint kernel of the derivation actions on degree k."""
    nk = cx.space_dim(k)
    rows = [row for d in derivations
            for row in derivation_extension_matrix(cx, d, k).entries]
    if not rows:
        return [unit_vec(nk, i) for i in range(nk)]
    return kernel_basis(Mat.from_rows(rows, cols=nk))


class InvariantComplex:
    """Subcomplex of a cochain complex cut out by reductive invariance.

    Carries per-degree sub-bases in ambient coordinates, the restricted
    differential, and a wedge that projects back to sub-coordinates.
    Implements the same surface as CochainComplex, so cohomology, cup
    products and all downstream checks run on it unchanged.
    """

    def __init__(self, ambient: CochainComplex, sub_bases: Sequence[tuple[Vec, ...]],
                 dmats: Sequence[Mat]):
        self.ambient = ambient
        self.dim = ambient.dim
        self._sub = list(sub_bases)
        self._dmats = list(dmats)
        self._coh_cache: dict[int, object] = {}

    def sub_basis(self, k: int) -> tuple[Vec, ...]:
        if not 0 <= k <= self.dim:
            return ()
        return self._sub[k]

    def space_dim(self, k: int) -> int:
        return len(self.sub_basis(k))

    def dims(self) -> tuple[int, ...]:
        return tuple(self.space_dim(k) for k in range(self.dim + 1))

    def dmat(self, k: int) -> Mat:
        if not 0 <= k <= self.dim:
            return Mat.zero(0, 0)
        return self._dmats[k]

    def lift(self, k: int, coords: Vec) -> Vec:
        out = zero_vec(self.ambient.space_dim(k))
        for c, b in zip(coords, self.sub_basis(k)):
            if c != 0:
                out = vadd(out, vscale(c, b))
        return out

    def form(self, k: int, coords: Vec) -> ExteriorForm:
        return self.ambient.form(k, self.lift(k, coords))

    def basis_forms(self, k: int) -> tuple[ExteriorForm, ...]:
        return tuple(self.ambient.form(k, b) for b in self.sub_basis(k))

    def restrict(self, k: int, ambient_coords: Vec) -> Optional[Vec]:
        """Sub-coordinates of an ambient vector, or None if outside."""
        return _coords_in(list(self.sub_basis(k)), ambient_coords)

    def restrict_form(self, form: ExteriorForm) -> Optional[Vec]:
        return self.restrict(form.degree, self.ambient.coords(form))

    def wedge_coords(self, p: int, u: Vec, q: int, v: Vec) -> Vec:
        if p + q > self.dim:
            return ()
        w = self.ambient.wedge_coords(p, self.lift(p, u), q, self.lift(q, v))
        coords = self.restrict(p + q, w)
        if coords is None:
            raise InternalCheckError("invariant model is not closed under wedge")
        return coords

    def has_zero_differential(self) -> bool:
        return all(self.dmat(k).is_zero() for k in range(self.dim + 1))


def full_model(cx: CochainComplex) -> InvariantComplex:
    """The whole complex viewed as a (trivially) invariant model."""
    n = cx.dim
    sub = [tuple(unit_vec(cx.space_dim(k), i) for i in range(cx.space_dim(k)))
           for k in range(n + 1)]
    return InvariantComplex(cx, sub, [cx.dmat(k) for k in range(n + 1)])


def invariant_subcomplex(h: HullData, finite_bound: int = DEFAULT_FINITE_BOUND) -> InvariantComplex:
    """Forms fixed by the torus derivations and the finite group.

    Torus invariance is the joint kernel of the generating derivations;
    finite invariance is the image of the averaging projector over the
    enumerated group.  The intersection is verified to be closed under
    the differential and the wedge product.
    """
    group = validate_hull_data(h, finite_bound)
    cx = ce_complex(h.u)
    n = cx.dim

    sub_bases: list[tuple[Vec, ...]] = []
    for k in range(n + 1):
        nk = cx.space_dim(k)
        rows: list[Vec] = []
        for d in h.torus_derivations:
            rows.extend(derivation_extension_matrix(cx, d, k).entries)
        if group:
            proj = averaging_projector(cx, group, k)
            ident = Mat.identity(nk)
            rows.extend((proj - ident).entries)
        if rows:
            basis = kernel_basis(Mat.from_rows(rows, cols=nk))
        else:
            basis = [unit_vec(nk, i) for i in range(nk)]
        sub_bases.append(tuple(basis))

    if len(sub_bases[0]) != 1:
        raise InternalCheckError("invariant model lost the constants in degree zero")

    dmats: list[Mat] = []
    for k in range(n + 1):
        cols = []
        for v in sub_bases[k]:
            w = cx.dmat(k).apply(v)
            target = list(sub_bases[k + 1]) if k + 1 <= n else []
            coords = _coords_in(target, w)
            if coords is None:
                raise InternalCheckError("invariant model is not closed under d")
            cols.append(coords)
        rows_count = len(sub_bases[k + 1]) if k + 1 <= n else 0
        dmats.append(Mat.from_cols(cols, rows=rows_count) if cols
                     else Mat.zero(rows_count, 0))

    ic = InvariantComplex(cx, sub_bases, dmats)
    for p in range(1, n):
        for q in range(1, n - p + 1):
            for u in range(ic.space_dim(p)):
                for v in range(ic.space_dim(q)):
                    ic.wedge_coords(p, unit_vec(ic.space_dim(p), u),
                                    q, unit_vec(ic.space_dim(q), v))
    return ic


# ---------------------------------------------------------------------------
# formality certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroDifferentialCertificate:
    """The invariant model has d = 0, hence equals its own cohomology.

    The model computes the cohomology of the underlying space, so a chain
    of quasi-isomorphisms connects the de Rham algebra to its cohomology:
    the space is formal.
    """

    dims: tuple[int, ...]


def certify_formal_if_zero_differential(ic: InvariantComplex) -> Optional[ZeroDifferentialCertificate]:
    if ic.has_zero_differential():
        return ZeroDifferentialCertificate(ic.dims())
    return None


@dataclass(frozen=True)
class MasseyWitness:
    """All data needed to independently re-check a triple Massey product."""

    degrees: tuple[int, int, int]
    a: Vec
    b: Vec
    c: Vec
    x: Vec
    y: Vec
    representative: Vec
    rep_class: Vec
    indeterminacy: tuple[Vec, ...]


@dataclass(frozen=True)
class MasseyResult:
    status: str  # "vanishes" | "nonvanishing" | "precondition_violation"
    witness: Optional[MasseyWitness] = None
    detail: str = ""

    @property
    def vanishes(self) -> bool:
        return self.status == "vanishes"


def massey_triple(ic: InvariantComplex, a: CohomologyClass, b: CohomologyClass,
                  c: CohomologyClass) -> MasseyResult:
    """Triple Massey product <a, b, c> with explicit primitives.

    Defined when a.b = 0 and b.c = 0 in cohomology.  With dx = A^B and
    dy = B^C the representative is A^y + (-1)^(|a|+1) x^C; the product
    vanishes exactly when its class lies in a.H + H.c.
    """
    p, q, s = a.degree, b.degree, c.degree
    if not cup(ic, a, b).is_zero():
        return MasseyResult("precondition_violation", detail="cup(a, b) is nonzero")
    if not cup(ic, b, c).is_zero():
        return MasseyResult("precondition_violation", detail="cup(b, c) is nonzero")

    ra, rb, rc = a.representative(), b.representative(), c.representative()
    ab = ic.wedge_coords(p, ra, q, rb)
    _, x = cohomology(ic, p + q).express(ab)
    bc = ic.wedge_coords(q, rb, s, rc)
    _, y = cohomology(ic, q + s).express(bc)

    deg_r = p + q + s - 1
    if deg_r > ic.dim:
        return MasseyResult("vanishes", detail="product degree exceeds the top degree")
    term1 = ic.wedge_coords(p, ra, q + s - 1, y)
    sign = -1 if (p + 1) % 2 else 1
    term2 = vscale(sign, ic.wedge_coords(p + q - 1, x, s, rc))
    r = vadd(term1, term2)
    if not is_zero_vec(ic.dmat(deg_r).apply(r)):
        raise InternalCheckError("Massey representative is not closed")
    target = cohomology(ic, deg_r)
    rho, _ = target.express(r)

    indet: list[Vec] = []
    for h in _basis_classes(ic, q + s - 1):
        v = cup(ic, a, h).coeffs
        if not is_zero_vec(v):
            indet.append(v)
    for h in _basis_classes(ic, p + q - 1):
        v = cup(ic, h, c).coeffs
        if not is_zero_vec(v):
            indet.append(v)

    witness = MasseyWitness((p, q, s), a.coeffs, b.coeffs, c.coeffs, x, y, r,
                            rho, tuple(indet))
    if _in_coeff_span(indet, rho):
        return MasseyResult("vanishes", witness)
    return MasseyResult("nonvanishing", witness)


def _basis_classes(ic: InvariantComplex, k: int) -> list[CohomologyClass]:
    if k < 0 or k > ic.dim:
        return []
    basis = cohomology(ic, k)
    return [CohomologyClass(ic, k, unit_vec(basis.betti, i)) for i in range(basis.betti)]


def _in_coeff_span(vectors: Sequence[Vec], v: Vec) -> bool:
    if is_zero_vec(v):
        return True
    if not vectors:
        return False
    return solve(Mat.from_cols(list(vectors), rows=len(v)), v) is not None


def verify_massey_witness(ic: InvariantComplex, w: MasseyWitness, expect_vanishing: bool) -> bool:
    """Independent re-check of a Massey witness from its raw data."""
    p, q, s = w.degrees
    a = CohomologyClass(ic, p, w.a)
    b = CohomologyClass(ic, q, w.b)
    c = CohomologyClass(ic, s, w.c)
    ra, rb, rc = a.representative(), b.representative(), c.representative()
    if ic.dmat(p + q - 1).apply(w.x) != ic.wedge_coords(p, ra, q, rb):
        return False
    if ic.dmat(q + s - 1).apply(w.y) != ic.wedge_coords(q, rb, s, rc):
        return False
    deg_r = p + q + s - 1
    sign = -1 if (p + 1) % 2 else 1
    r = vadd(ic.wedge_coords(p, ra, q + s - 1, w.y),
             vscale(sign, ic.wedge_coords(p + q - 1, w.x, s, rc)))
    if r != w.representative:
        return False
    if not is_zero_vec(ic.dmat(deg_r).apply(r)):
        return False
    rho, _ = cohomology(ic, deg_r).express(r)
    if rho != w.rep_class:
        return False
    return _in_coeff_span(list(w.indeterminacy), rho) == expect_vanishing


@dataclass(frozen=True)
class FormalityVerdict:
    """certified_formal, obstructed_nonformal (with witness), or undecided."""

    status: str
    certificate: Optional[ZeroDifferentialCertificate] = None
    witness: Optional[MasseyWitness] = None
    triples_scanned: int = 0


def _scan_degrees(dim: int, cap: int) -> list[tuple[int, int, int]]:
    # all class-degree triples with total <= cap, plus the always-on
    # low-degree patterns (1,1,1) and permutations of (1,1,2)
    degrees = set()
    for p in range(1, dim + 1):
        for q in range(1, dim + 1):
            for s in range(1, dim + 1):
                total = p + q + s
                if total <= cap or (p, q, s) in ((1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)):
                    if p + q + s - 1 <= dim:
                        degrees.add((p, q, s))
    return sorted(degrees)


def formality_verdict(ic: InvariantComplex, massey_depth: Optional[int] = None) -> FormalityVerdict:
    """Certified formality via d = 0, else a Massey obstruction scan.

    The scan covers all triples of cohomology basis classes whose degree
    pattern is admitted by _scan_degrees (default cap: the algebra
    dimension).  The first nonvanishing product is returned as the
    obstruction witness; if none exists the verdict is undecided, never
    a formality claim.
    """
    cert = certify_formal_if_zero_differential(ic)
    if cert is not None:
        return FormalityVerdict("certified_formal", certificate=cert)
    cap = massey_depth if massey_depth is not None else ic.dim
    scanned = 0
    for (p, q, s) in _scan_degrees(ic.dim, cap):
        for a in _basis_classes(ic, p):
            for b in _basis_classes(ic, q):
                for c in _basis_classes(ic, s):
                    result = massey_triple(ic, a, b, c)
                    if result.status == "precondition_violation":
                        continue
                    scanned += 1
                    if result.status == "nonvanishing":
                        return FormalityVerdict(
                            "obstructed_nonformal",
                            witness=result.witness,
                            triples_scanned=scanned,
                        )
    return FormalityVerdict("undecided", triples_scanned=scanned)


def verify_formality_verdict(ic: InvariantComplex, verdict: FormalityVerdict) -> bool:
    """Re-check a verdict's certificate independently of how it was produced."""
    if verdict.status == "certified_formal":
        return ic.has_zero_differential() and verdict.certificate is not None \
            and verdict.certificate.dims == ic.dims()
    if verdict.status == "obstructed_nonformal":
        return verdict.witness is not None and \
            verify_massey_witness(ic, verdict.witness, expect_vanishing=False)
    return verdict.status == "undecided"
