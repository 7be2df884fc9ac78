"""Input documents: the JSON schema, exact parsing, and rendering.

Documents carry a Lie algebra by sparse brackets (1-based indices,
antisymmetric completion applied when the algebra is built), an optional
hull override (torus derivations and finite generators acting on the
algebra, which is then taken as the unipotent part directly), an
optional 2-form, and options.  Rationals travel as strings like "3/4" or
"0.5" and are parsed exactly; JSON floats are rejected so nothing ever
drifts.  render_document is the exact inverse of parse_document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .cochain import ExteriorForm
from .errors import SolvhullError
from .hull import DEFAULT_FINITE_BOUND, HullData
from .lie import LieAlgebra
from .linalg import Mat, QQ

SCHEMA_VERSION = 1


class ParseError(SolvhullError):
    """Malformed document; carries a JSON path or line/column location."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class BracketSpec:
    i: int  # 1-based
    j: int
    coeffs: tuple[QQ, ...]


@dataclass(frozen=True)
class AlgebraSpec:
    dim: int
    basis: tuple[str, ...]
    brackets: tuple[BracketSpec, ...]


@dataclass(frozen=True)
class HullOverride:
    torus_derivations: tuple[Mat, ...] = ()
    finite_generators: tuple[Mat, ...] = ()


@dataclass(frozen=True)
class OmegaTerm:
    i: int  # 1-based, i < j
    j: int
    coeff: QQ


@dataclass(frozen=True)
class Options:
    massey_depth: Optional[int] = None
    finite_bound: int = DEFAULT_FINITE_BOUND


@dataclass(frozen=True)
class InputDocument:
    schema_version: int
    algebra: AlgebraSpec
    hull_override: Optional[HullOverride] = None
    omega: Optional[tuple[OmegaTerm, ...]] = None
    options: Options = field(default_factory=Options)


def parse_rational(value: Any, where: str) -> QQ:
    """Exact rational from an int or a string like "3/4" or "0.5"."""
    if isinstance(value, bool):
        raise ParseError("expected a rational, got a boolean", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(
            "JSON floats are rejected to keep arithmetic exact; "
            "write the value as a string", where)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed rational {value!r}: {exc}", where) from None
    raise ParseError(f"expected a rational, got {type(value).__name__}", where)


def _expect(obj: Any, typ: type, where: str) -> Any:
    if not isinstance(obj, typ):
        raise ParseError(f"expected {typ.__name__}, got {type(obj).__name__}", where)
    return obj


def _expect_int(obj: Any, where: str, minimum: Optional[int] = None) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ParseError(f"expected an integer, got {type(obj).__name__}", where)
    if minimum is not None and obj < minimum:
        raise ParseError(f"expected an integer >= {minimum}, got {obj}", where)
    return obj


def _parse_matrix(obj: Any, dim: int, where: str) -> Mat:
    rows = _expect(obj, list, where)
    if len(rows) != dim:
        raise ParseError(f"matrix needs {dim} rows, got {len(rows)}", where)
    parsed = []
    for r, row in enumerate(rows):
        row = _expect(row, list, f"{where}[{r}]")
        if len(row) != dim:
            raise ParseError(f"matrix row needs {dim} entries, got {len(row)}",
                             f"{where}[{r}]")
        parsed.append([parse_rational(x, f"{where}[{r}][{c}]") for c, x in enumerate(row)])
    return Mat(parsed)


def parse_document(text: str) -> InputDocument:
    """Parse a document; diagnostics carry line/column or a JSON path."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    root = _expect(raw, dict, "$")

    version = _expect_int(root.get("schema_version"), "$.schema_version", minimum=1)
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {version}", "$.schema_version")

    alg_raw = _expect(root.get("algebra"), dict, "$.algebra")
    dim = _expect_int(alg_raw.get("dim"), "$.algebra.dim", minimum=1)
    basis_raw = _expect(alg_raw.get("basis"), list, "$.algebra.basis")
    if len(basis_raw) != dim:
        raise ParseError(f"basis needs {dim} names, got {len(basis_raw)}", "$.algebra.basis")
    basis = tuple(_expect(b, str, f"$.algebra.basis[{k}]") for k, b in enumerate(basis_raw))
    if len(set(basis)) != dim:
        raise ParseError("basis names must be distinct", "$.algebra.basis")

    brackets = []
    seen_pairs: set[frozenset[int]] = set()
    for k, entry in enumerate(_expect(alg_raw.get("brackets", []), list, "$.algebra.brackets")):
        where = f"$.algebra.brackets[{k}]"
        entry = _expect(entry, dict, where)
        i = _expect_int(entry.get("i"), f"{where}.i")
        j = _expect_int(entry.get("j"), f"{where}.j")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"index pair ({i}, {j}) out of range 1..{dim}", where)
        if i == j:
            raise ParseError("self-bracket must be zero; omit the entry", where)
        key = frozenset((i, j))
        if key in seen_pairs:
            raise ParseError(f"bracket for pair ({i}, {j}) specified twice", where)
        seen_pairs.add(key)
        coeffs_raw = _expect(entry.get("coeffs"), list, f"{where}.coeffs")
        if len(coeffs_raw) != dim:
            raise ParseError(f"coefficient vector needs {dim} entries, got {len(coeffs_raw)}",
                             f"{where}.coeffs")
        coeffs = tuple(parse_rational(x, f"{where}.coeffs[{c}]")
                       for c, x in enumerate(coeffs_raw))
        brackets.append(BracketSpec(i, j, coeffs))
    algebra = AlgebraSpec(dim, basis, tuple(brackets))

    override = None
    if root.get("hull_override") is not None:
        ov_raw = _expect(root["hull_override"], dict, "$.hull_override")
        torus = tuple(
            _parse_matrix(mx, dim, f"$.hull_override.torus_derivations[{k}]")
            for k, mx in enumerate(_expect(ov_raw.get("torus_derivations", []), list,
                                           "$.hull_override.torus_derivations")))
        finite = tuple(
            _parse_matrix(mx, dim, f"$.hull_override.finite_generators[{k}]")
            for k, mx in enumerate(_expect(ov_raw.get("finite_generators", []), list,
                                           "$.hull_override.finite_generators")))
        override = HullOverride(torus, finite)

    omega = None
    if root.get("omega") is not None:
        terms = []
        for k, entry in enumerate(_expect(root["omega"], list, "$.omega")):
            where = f"$.omega[{k}]"
            entry = _expect(entry, dict, where)
            i = _expect_int(entry.get("i"), f"{where}.i")
            j = _expect_int(entry.get("j"), f"{where}.j")
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ParseError(f"index pair ({i}, {j}) out of range 1..{dim}", where)
            if i >= j:
                raise ParseError("omega terms need i < j", where)
            coeff = parse_rational(entry.get("coeff"), f"{where}.coeff")
            terms.append(OmegaTerm(i, j, coeff))
        omega = tuple(terms)

    opts_raw = root.get("options") or {}
    opts_raw = _expect(opts_raw, dict, "$.options")
    depth = opts_raw.get("massey_depth")
    if depth is not None:
        depth = _expect_int(depth, "$.options.massey_depth", minimum=1)
    bound = opts_raw.get("finite_bound", DEFAULT_FINITE_BOUND)
    bound = _expect_int(bound, "$.options.finite_bound", minimum=1)
    options = Options(depth, bound)

    return InputDocument(version, algebra, override, omega, options)


def _rat(x: QQ) -> str:
    return str(x)


def _matrix_json(m: Mat) -> list[list[str]]:
    return [[_rat(x) for x in row] for row in m.entries]


def render_document(doc: InputDocument) -> str:
    """Canonical JSON text; parse_document inverts this exactly."""
    body: dict[str, Any] = {
        "schema_version": doc.schema_version,
        "algebra": {
            "dim": doc.algebra.dim,
            "basis": list(doc.algebra.basis),
            "brackets": [
                {"i": b.i, "j": b.j, "coeffs": [_rat(c) for c in b.coeffs]}
                for b in doc.algebra.brackets
            ],
        },
    }
    if doc.hull_override is not None:
        body["hull_override"] = {
            "torus_derivations": [_matrix_json(m) for m in doc.hull_override.torus_derivations],
            "finite_generators": [_matrix_json(m) for m in doc.hull_override.finite_generators],
        }
    if doc.omega is not None:
        body["omega"] = [{"i": t.i, "j": t.j, "coeff": _rat(t.coeff)} for t in doc.omega]
    body["options"] = {
        "massey_depth": doc.options.massey_depth,
        "finite_bound": doc.options.finite_bound,
    }
    return json.dumps(body, indent=2, ensure_ascii=False) + "\n"


def algebra_of(doc: InputDocument) -> LieAlgebra:
    """Build the Lie algebra, applying the antisymmetric completion."""
    table = {(b.i - 1, b.j - 1): b.coeffs for b in doc.algebra.brackets}
    return LieAlgebra.from_brackets(doc.algebra.dim, table, names=doc.algebra.basis)


def hull_data_of(doc: InputDocument) -> Optional[HullData]:
    """HullData from the override, treating the algebra as the unipotent part."""
    if doc.hull_override is None:
        return None
    return HullData(
        algebra_of(doc),
        doc.hull_override.torus_derivations,
        doc.hull_override.finite_generators,
    )


def omega_of(doc: InputDocument) -> Optional[ExteriorForm]:
    if doc.omega is None:
        return None
    return ExteriorForm.make(2, {(t.i - 1, t.j - 1): t.coeff for t in doc.omega})
