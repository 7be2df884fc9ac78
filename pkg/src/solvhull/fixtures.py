"""Built-in input documents: small solvable algebras and twisted models.

Every fixture is an InputDocument, so it can be printed, piped back in,
and analyzed like any user input.  Parameters (counts and rational
weights) are validated before the document is built.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional, Sequence

from .iodoc import (
    AlgebraSpec,
    BracketSpec,
    HullOverride,
    InputDocument,
    OmegaTerm,
    Options,
    ParseError,
    SCHEMA_VERSION,
)
from .linalg import Mat, QQ, qq


def _unit_bracket(i: int, j: int, k: int, dim: int, coeff=1) -> BracketSpec:
    coeffs = [QQ(0)] * dim
    coeffs[k - 1] = qq(coeff)
    return BracketSpec(i, j, tuple(coeffs))


def _doc(algebra: AlgebraSpec, override: Optional[HullOverride] = None,
         omega: Optional[Sequence[OmegaTerm]] = None) -> InputDocument:
    return InputDocument(SCHEMA_VERSION, algebra, override,
                         tuple(omega) if omega is not None else None, Options())


def abelian(params: Mapping) -> InputDocument:
    n = _int_param(params, "n", 3, minimum=1)
    names = tuple(f"e{k + 1}" for k in range(n))
    return _doc(AlgebraSpec(n, names, ()))


def heisenberg(params: Mapping) -> InputDocument:
    alg = AlgebraSpec(3, ("x1", "x2", "x3"), (_unit_bracket(1, 2, 3, 3),))
    return _doc(alg)


def sol(params: Mapping) -> InputDocument:
    alg = AlgebraSpec(3, ("t", "x", "y"), (
        _unit_bracket(1, 2, 2, 3),
        _unit_bracket(1, 3, 3, 3, coeff=-1),
    ))
    return _doc(alg)


def rotation(params: Mapping) -> InputDocument:
    # R acting on R^2 by rotations: all weights on the imaginary axis
    alg = AlgebraSpec(3, ("t", "z", "w"), (
        _unit_bracket(1, 2, 3, 3),
        _unit_bracket(1, 3, 2, 3, coeff=-1),
    ))
    return _doc(alg)


def filiform4(params: Mapping) -> InputDocument:
    alg = AlgebraSpec(4, ("e1", "e2", "e3", "e4"), (
        _unit_bracket(1, 2, 3, 4),
        _unit_bracket(1, 3, 4, 4),
    ))
    return _doc(alg)


def kodaira_thurston(params: Mapping) -> InputDocument:
    alg = AlgebraSpec(4, ("e1", "e2", "e3", "e4"), (_unit_bracket(1, 2, 3, 4),))
    omega = (OmegaTerm(1, 3, QQ(1)), OmegaTerm(2, 4, QQ(1)))
    return _doc(alg, omega=omega)


def almost_abelian(params: Mapping) -> InputDocument:
    """R acting on R^(2(m+n)+1): m hyperbolic weight pairs a_i, n rotation
    pairs b_j, and a fixed central direction, plus the acting line."""
    m = _int_param(params, "m", 1, minimum=0)
    n = _int_param(params, "n", 1, minimum=0)
    a = _rational_list_param(params, "a", m, default=1)
    b = _rational_list_param(params, "b", n, default=1)
    dim = 2 * (m + n) + 2
    names = ["tau"]
    for i in range(m):
        names += [f"x{i + 1}", f"y{i + 1}"]
    for j in range(n):
        names += [f"z{j + 1}", f"w{j + 1}"]
    names.append("sigma")

    brackets = []
    for i in range(m):
        xi, yi = 2 + 2 * i, 3 + 2 * i
        brackets.append(_unit_bracket(1, xi, xi, dim, coeff=a[i]))
        brackets.append(_unit_bracket(1, yi, yi, dim, coeff=-a[i]))
    for j in range(n):
        zj, wj = 2 + 2 * m + 2 * j, 3 + 2 * m + 2 * j
        brackets.append(_unit_bracket(1, zj, wj, dim, coeff=b[j]))
        brackets.append(_unit_bracket(1, wj, zj, dim, coeff=-b[j]))

    omega = [OmegaTerm(1, dim, QQ(1))]
    for i in range(m):
        omega.append(OmegaTerm(2 + 2 * i, 3 + 2 * i, QQ(1)))
    for j in range(n):
        omega.append(OmegaTerm(2 + 2 * m + 2 * j, 3 + 2 * m + 2 * j, QQ(1)))
    return _doc(AlgebraSpec(dim, tuple(names), tuple(brackets)), omega=omega)


def complex_sol(params: Mapping) -> InputDocument:
    """Realification of C acting on C^2 by diag(exp, exp(-)): the complex
    analogue of sol, with differentials mixing the two real directions."""
    names = ("x1", "x2", "y1", "y2", "z1", "z2")
    brackets = (
        _unit_bracket(1, 3, 3, 6),             # [x1, y1] = y1
        _unit_bracket(1, 4, 4, 6),             # [x1, y2] = y2
        _unit_bracket(2, 3, 4, 6),             # [x2, y1] = y2
        _unit_bracket(2, 4, 3, 6, coeff=-1),   # [x2, y2] = -y1
        _unit_bracket(1, 5, 5, 6, coeff=-1),   # [x1, z1] = -z1
        _unit_bracket(1, 6, 6, 6, coeff=-1),   # [x1, z2] = -z2
        _unit_bracket(2, 5, 6, 6, coeff=-1),   # [x2, z1] = -z2
        _unit_bracket(2, 6, 5, 6),             # [x2, z2] = z1
    )
    omega = (OmegaTerm(1, 2, QQ(1)), OmegaTerm(3, 5, QQ(-1)), OmegaTerm(4, 6, QQ(1)))
    return _doc(AlgebraSpec(6, names, brackets), omega=omega)


def twisted_heisenberg(params: Mapping) -> InputDocument:
    """Heisenberg as the unipotent part, twisted by the order-two
    automorphism fixing the first direction and negating the others."""
    alg = AlgebraSpec(3, ("x1", "x2", "x3"), (_unit_bracket(1, 2, 3, 3),))
    gen = Mat.diag([1, -1, -1])
    return _doc(alg, override=HullOverride((), (gen,)))


def twisted_kodaira_thurston(params: Mapping) -> InputDocument:
    """Heisenberg times a line with the same order-two twist; carries the
    symplectic form pairing the fixed directions."""
    alg = AlgebraSpec(4, ("x1", "x2", "x3", "y"), (_unit_bracket(1, 2, 3, 4),))
    gen = Mat.diag([1, -1, -1, 1])
    omega = (OmegaTerm(1, 4, QQ(1)), OmegaTerm(2, 3, QQ(1)))
    return _doc(alg, override=HullOverride((), (gen,)), omega=omega)


def _int_param(params: Mapping, key: str, default: int, minimum: int) -> int:
    value = params.get(key, default)
    if isinstance(value, str):
        try:
            value = int(value)
        except ValueError:
            raise ParseError(f"parameter {key} must be an integer, got {value!r}") from None
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParseError(f"parameter {key} must be an integer >= {minimum}")
    return value


def _rational_list_param(params: Mapping, key: str, count: int, default) -> list[QQ]:
    value = params.get(key)
    if value is None:
        return [qq(default)] * count
    if isinstance(value, str):
        value = [piece for piece in value.split(",") if piece != ""]
    if not isinstance(value, (list, tuple)):
        raise ParseError(f"parameter {key} must be a list of rationals")
    if len(value) != count:
        raise ParseError(f"parameter {key} needs {count} entries, got {len(value)}")
    try:
        return [qq(x) for x in value]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"parameter {key} has a malformed rational: {exc}") from None


FIXTURES: dict[str, Callable[[Mapping], InputDocument]] = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "sol": sol,
    "rotation": rotation,
    "filiform4": filiform4,
    "kodaira_thurston": kodaira_thurston,
    "almost_abelian": almost_abelian,
    "complex_sol": complex_sol,
    "twisted_heisenberg": twisted_heisenberg,
    "twisted_kodaira_thurston": twisted_kodaira_thurston,
}


def fixture(name: str, params: Optional[Mapping] = None) -> InputDocument:
    """Look up a fixture by name and build it with the given parameters."""
    builder = FIXTURES.get(name)
    if builder is None:
        known = ", ".join(sorted(FIXTURES))
        raise ParseError(f"unknown fixture {name!r}; known fixtures: {known}")
    return builder(params or {})
