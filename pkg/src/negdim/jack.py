"""Jack symmetric functions via the deformed Laplacian on the power-sum algebra.

Everything here lives in the graded algebra freely generated by the power
sums p_1, p_2, ..., with coefficients that are rational functions of the
coupling k and of an extra scalar p0 playing the role of "number of
variables" continued off the integers.  The operator

    L = sum_{a,b>0} p_{a+b} D_a D_b  -  k sum_{a,b>0} p_a p_b D_{a+b}
        - k p0 sum_{a>0} p_a D_a  +  (1+k) sum_{a>0} a p_a D_a,

with D_a = a d/dp_a, preserves degree; in the monomial basis ordered by
any linear extension of dominance it is triangular, which licenses the
construction of its monic eigenfunctions (Jack functions) degree by degree.

Setting p0 = N and substituting each p_l by the N-variable power sum
intertwines L with the exponential-coordinate operator

    sum_i (z_i d/dz_i)^2 - k sum_{i<j} (z_i+z_j)/(z_i-z_j) (z_i d/dz_i - z_j d/dz_j),

and check_diagram verifies that square exactly.

The rescaling map theta multiplies the p_mu coefficient by k^(-#parts).
Composing the map at coupling v with the map at 1/v is the identity, and
conjugating L by it inverts the coupling:

    theta o L_{k, p0} o theta^(-1) = k * L_{1/k, k*p0}.

Note the transformed scalar is k*p0, not p0/k; the one-dimensional degree-1
component already forces that form, and check_conjugation pins it for every
degree.  The same map sends the eigenfunction of lambda at coupling k to a
multiple of the eigenfunction of the transposed diagram at coupling 1/k;
macdonald_duality computes the multiplier and verifies exact proportionality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from negdim.exact_algebra import (
    ExactDivisionError,
    MultiPoly,
    RatFunc,
    poly_exact_div,
    ratfunc_equal,
)
from negdim.partitions import (
    Partition,
    check_partition,
    dominance_leq,
    format_partition,
    partitions_of_weight,
    partitions_up_to_weight,
    transpose,
    weight,
)
from negdim.reporting import CheckResult, VerificationReport

Coupling = Union[None, int, str, Fraction, RatFunc]

K = RatFunc.symbol("k")
P0 = RatFunc.symbol("p0")


def _as_value(v: Coupling, default: RatFunc) -> RatFunc:
    if v is None:
        return default
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, str):
        return default if v == "symbolic" else RatFunc.const(Fraction(v))
    return RatFunc.const(v)


def _as_coupling(k: Coupling) -> RatFunc:
    return _as_value(k, K)


class SingularCouplingError(ArithmeticError):
    """Two eigenvalues collide at a numeric coupling, blocking the solve."""

    def __init__(self, coupling: RatFunc, top: Partition, other: Partition):
        self.coupling = coupling
        self.top = top
        self.other = other
        super().__init__(
            f"eigenvalue collision at coupling k = {coupling}: partitions "
            f"{format_partition(top)} and {format_partition(other)} share an "
            f"eigenvalue, so the eigenfunction is not determined")


# -- expressions in the two bases ------------------------------------------


def _clean_terms(degree: int,
                 terms: Mapping[Partition, RatFunc]) -> Dict[Partition, RatFunc]:
    clean: Dict[Partition, RatFunc] = {}
    for mu, coeff in terms.items():
        mu = check_partition(mu)
        if weight(mu) != degree:
            raise ValueError(f"index {format_partition(mu)} has weight "
                             f"{weight(mu)}, expected {degree}")
        coeff = RatFunc.const(coeff)
        if not coeff.is_zero():
            clean[mu] = coeff
    return clean


@dataclass(frozen=True, eq=False)
class PExpr:
    """Homogeneous element in the power-sum basis: sum of coeff * p_mu."""

    degree: int
    terms: Mapping[Partition, RatFunc]

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean_terms(self.degree, self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, c) -> "PExpr":
        c = RatFunc.const(c)
        return PExpr(self.degree, {mu: v * c for mu, v in self.terms.items()})

    def __add__(self, other: "PExpr") -> "PExpr":
        if self.degree != other.degree:
            raise ValueError("cannot add expressions of different degree")
        merged = dict(self.terms)
        for mu, v in other.terms.items():
            merged[mu] = merged.get(mu, RatFunc.const(0)) + v
        return PExpr(self.degree, merged)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PExpr) and self.degree == other.degree
                and self.terms == other.terms)

    def __str__(self) -> str:
        return format_expr(self.terms, "p")


@dataclass(frozen=True, eq=False)
class MExpr:
    """Homogeneous element in the monomial basis: sum of coeff * m_lambda."""

    degree: int
    terms: Mapping[Partition, RatFunc]

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean_terms(self.degree, self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, MExpr) and self.degree == other.degree
                and self.terms == other.terms)

    def __str__(self) -> str:
        return format_expr(self.terms, "m")


def p_basis_element(mu: Partition) -> PExpr:
    mu = check_partition(mu)
    return PExpr(weight(mu), {mu: RatFunc.const(1)})


def format_expr(terms: Mapping[Partition, RatFunc], letter: str) -> str:
    """Deterministic rendering, indices in descending lexicographic order."""
    if not terms:
        return "0"
    pieces = []
    for mu in sorted(terms, reverse=True):
        coeff = terms[mu]
        name = f"{letter}[{format_partition(mu)}]" if mu else "1"
        text = str(coeff)
        if text == "1" and mu:
            pieces.append(name)
        elif mu:
            wrapped = text if text.startswith("(") else f"({text})"
            pieces.append(f"{wrapped}*{name}")
        else:
            pieces.append(text)
    return " + ".join(pieces)


# -- the infinite-variable operator ----------------------------------------


def apply_L_inf(x: PExpr, k: Coupling = None, p0: Coupling = None) -> PExpr:
    """Apply the deformed Laplacian; degree is preserved term by term."""
    kv = _as_coupling(k)
    pv = _as_value(p0, P0)
    out: Dict[Partition, RatFunc] = {}

    def add(mu: Partition, coeff: RatFunc):
        if mu in out:
            out[mu] = out[mu] + coeff
        else:
            out[mu] = coeff

    for mu, c in x.terms.items():
        parts = list(mu)
        d = x.degree
        # merging term: pick two distinct positions, fuse them
        for i in range(len(parts)):
            for j in range(len(parts)):
                if i == j:
                    continue
                rest = [parts[t] for t in range(len(parts)) if t not in (i, j)]
                rest.append(parts[i] + parts[j])
                add(tuple(sorted(rest, reverse=True)),
                    c * (parts[i] * parts[j]))
        # splitting term: replace one part c0 by an ordered pair (a, c0-a)
        seen = set()
        for idx, c0 in enumerate(parts):
            if c0 in seen:
                continue
            seen.add(c0)
            mult = parts.count(c0)
            base = parts[:idx] + parts[idx + 1:]
            for a in range(1, c0):
                split = tuple(sorted(base + [a, c0 - a], reverse=True))
                add(split, c * kv * (-c0 * mult))
        # scalar part: degree operator twice over
        scalar = kv * (-d) * pv + (1 + kv) * sum(p * p for p in parts)
        add(mu, c * scalar)

    return PExpr(x.degree, out)


def degree_basis(d: int) -> Tuple[Partition, ...]:
    """Partitions of d in descending lexicographic order (refines dominance)."""
    return tuple(partitions_of_weight(d))


def operator_matrix(d: int, k: Coupling = None,
                    p0: Coupling = None) -> List[List[RatFunc]]:
    """Matrix of the operator on the degree-d power-sum basis.

    Row and column order is degree_basis(d); column mu holds the coordinates
    of the image of p_mu.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    basis = degree_basis(d)
    index = {mu: i for i, mu in enumerate(basis)}
    size = len(basis)
    zero = RatFunc.const(0)
    mat = [[zero] * size for _ in range(size)]
    for j, mu in enumerate(basis):
        image = apply_L_inf(p_basis_element(mu), k, p0)
        for nu, coeff in image.terms.items():
            mat[index[nu]][j] = coeff
    return mat


# -- basis change -----------------------------------------------------------

_S_CACHE: Dict[int, List[List[Fraction]]] = {}
_SINV_CACHE: Dict[int, List[List[Fraction]]] = {}
_MM_CACHE: Dict[int, List[List[RatFunc]]] = {}


def _expand_powersum_product(mu: Partition, nvars: int) -> Dict[Tuple[int, ...], int]:
    acc: Dict[Tuple[int, ...], int] = {(0,) * nvars: 1}
    for part in mu:
        nxt: Dict[Tuple[int, ...], int] = {}
        for exps, c in acc.items():
            for i in range(nvars):
                bumped = exps[:i] + (exps[i] + part,) + exps[i + 1:]
                nxt[bumped] = nxt.get(bumped, 0) + c
        acc = nxt
    return acc


def _s_matrix(d: int) -> List[List[Fraction]]:
    """S[nu][mu] = coefficient of m_nu in p_mu, both indexed by degree_basis(d).

    Computed by expanding p_mu in exactly d variables, which is faithful for
    degree d; the coefficient of m_nu is read off the single monomial whose
    exponents are nu itself.  The matrix is triangular: parts only fuse
    upward in dominance.
    """
    if d not in _S_CACHE:
        basis = degree_basis(d)
        rows = []
        cols = [_expand_powersum_product(mu, d) for mu in basis]
        for nu in basis:
            probe = tuple(nu) + (0,) * (d - len(nu))
            rows.append([Fraction(col.get(probe, 0)) for col in cols])
        _S_CACHE[d] = rows
    return _S_CACHE[d]


def _invert_fraction_matrix(mat: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    size = len(mat)
    work = [list(row) + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(mat)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col]), None)
        if pivot is None:
            raise ArithmeticError("basis-change matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[size:] for row in work]


def _s_inverse(d: int) -> List[List[Fraction]]:
    if d not in _SINV_CACHE:
        _SINV_CACHE[d] = _invert_fraction_matrix(_s_matrix(d))
    return _SINV_CACHE[d]


def p_to_m(x: PExpr) -> MExpr:
    d = x.degree
    if d == 0:
        return MExpr(0, dict(x.terms))
    basis = degree_basis(d)
    s = _s_matrix(d)
    coords = [x.terms.get(mu, RatFunc.const(0)) for mu in basis]
    out = {}
    for i, nu in enumerate(basis):
        total = RatFunc.const(0)
        for j, c in enumerate(coords):
            if s[i][j] and not c.is_zero():
                total = total + c * s[i][j]
        out[nu] = total
    return MExpr(d, out)


def m_to_p(x: MExpr) -> PExpr:
    d = x.degree
    if d == 0:
        return PExpr(0, dict(x.terms))
    basis = degree_basis(d)
    sinv = _s_inverse(d)
    coords = [x.terms.get(nu, RatFunc.const(0)) for nu in basis]
    out = {}
    for i, mu in enumerate(basis):
        total = RatFunc.const(0)
        for j, c in enumerate(coords):
            if sinv[i][j] and not c.is_zero():
                total = total + c * sinv[i][j]
        out[mu] = total
    return PExpr(d, out)


def _matrix_m_symbolic(d: int) -> List[List[RatFunc]]:
    """Operator matrix in the monomial basis, k symbolic, p0 = 0 (cached).

    The omitted p0 part is the scalar -k*d*p0 on the whole degree block, so
    nothing is lost by pinning p0 = 0 here.
    """
    if d not in _MM_CACHE:
        mp = operator_matrix(d, None, 0)
        s = _s_matrix(d)
        sinv = _s_inverse(d)
        size = len(mp)
        zero = RatFunc.const(0)
        tmp = [[zero] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                total = zero
                for t in range(size):
                    if s[i][t] and not mp[t][j].is_zero():
                        total = total + mp[t][j] * s[i][t]
                tmp[i][j] = total
        out = [[zero] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                total = zero
                for t in range(size):
                    if sinv[t][j] and not tmp[i][t].is_zero():
                        total = total + tmp[i][t] * sinv[t][j]
                out[i][j] = total
        _MM_CACHE[d] = out
    return _MM_CACHE[d]


# -- Jack functions ----------------------------------------------------------


@dataclass(frozen=True)
class JackFunction:
    """Monic eigenfunction: m_lambda plus dominance-lower monomial terms."""

    lam: Partition
    coupling: RatFunc
    m_expansion: MExpr
    p_expansion: PExpr
    eigenvalue: RatFunc  # includes the -k*|lambda|*p0 scalar, p0 symbolic

    def __str__(self) -> str:
        return str(self.m_expansion)


def jack(lam: Partition, k: Coupling = None) -> JackFunction:
    """Solve the triangular eigenproblem for the monic eigenfunction of lam.

    With k symbolic the solve never degenerates.  At a numeric coupling two
    comparable partitions can share an eigenvalue; that raises
    SingularCouplingError naming the pair.  Incomparable partitions may
    share an eigenvalue even symbolically, which is harmless: their coupling
    coefficient has a vanishing numerator and is set to zero outright.
    """
    lam = check_partition(lam)
    kv = _as_coupling(k)
    d = weight(lam)
    if d == 0:
        one = RatFunc.const(1)
        return JackFunction((), kv, MExpr(0, {(): one}), PExpr(0, {(): one}),
                            RatFunc.const(0))

    basis = degree_basis(d)
    mm = _matrix_m_symbolic(d)
    if kv != K:
        bind = {"k": kv}
        mm = [[entry if entry.is_zero() else entry.substitute(bind)
               for entry in row] for row in mm]

    top = basis.index(lam)
    size = len(basis)
    zero = RatFunc.const(0)
    coords = [zero] * size
    coords[top] = RatFunc.const(1)
    e_top = mm[top][top]
    for row in range(top + 1, size):
        s = zero
        for col in range(top, row):
            if not (coords[col].is_zero() or mm[row][col].is_zero()):
                s = s + mm[row][col] * coords[col]
        if s.is_zero():
            continue
        gap = e_top - mm[row][row]
        if gap.is_zero():
            raise SingularCouplingError(kv, lam, basis[row])
        coords[row] = s / gap

    m_terms = {basis[i]: coords[i] for i in range(size)}
    for mu, coeff in m_terms.items():
        if mu != lam and not coeff.is_zero() and not dominance_leq(mu, lam):
            raise AssertionError(
                f"triangularity violated: {format_partition(mu)} appears in "
                f"the expansion of {format_partition(lam)}")
    m_exp = MExpr(d, m_terms)
    p_exp = m_to_p(m_exp)
    eigen = e_top + kv * (-d) * P0
    return JackFunction(lam, kv, m_exp, p_exp, eigen)


# -- the coupling-inversion map ---------------------------------------------


def theta(x: PExpr, k: Coupling = None) -> PExpr:
    """Scale the p_mu coefficient by k^(-#parts of mu), k the coupling value.

    The map is linear over the coefficient field: coefficients are not
    rewritten.  Applying it at coupling v and then at 1/v is the identity.
    """
    kv = _as_coupling(k)
    if kv.is_zero():
        raise ZeroDivisionError("the rescaling map needs a nonzero coupling")
    return PExpr(x.degree,
                 {mu: coeff * kv ** (-len(mu)) for mu, coeff in x.terms.items()})


def check_conjugation(d: int) -> CheckResult:
    """Conjugating the degree-d block by the rescaling map inverts the coupling.

    Verifies theta o L_{k, p0} o theta^(-1) = k * L_{1/k, k*p0} entrywise
    with k and p0 symbolic.
    """
    basis = degree_basis(d)
    mat = operator_matrix(d)
    inverted = {"k": 1 / K, "p0": K * P0}
    holds = True
    witness = ""
    for i, nu in enumerate(basis):
        for j, mu in enumerate(basis):
            lhs = mat[i][j] * K ** (len(mu) - len(nu))
            rhs = K * mat[i][j].substitute(inverted)
            if not ratfunc_equal(lhs, rhs):
                holds = False
                witness = (f"entry ({format_partition(nu)}, "
                           f"{format_partition(mu)}): {lhs} != {rhs}")
                break
        if not holds:
            break
    return CheckResult(
        check_id=f"jack/conjugation/d={d}",
        holds=holds,
        inputs=(("degree", str(d)),),
        lhs="theta . L(k, p0) . theta^-1",
        rhs="k * L(1/k, k*p0)",
        notes=witness or "transformed scalar is k*p0",
    )


def macdonald_duality(lam: Partition, k: Coupling = None) -> RatFunc:
    """Proportionality scalar between the rescaled eigenfunction of lam and
    the eigenfunction of the transposed diagram at inverted coupling.

    Raises ArithmeticError if the two are not exactly proportional (they
    always are; a failure would falsify the construction).
    """
    lam = check_partition(lam)
    kv = _as_coupling(k)
    if kv.is_zero():
        raise ZeroDivisionError("coupling inversion needs k != 0")
    p_lam = jack(lam, kv)
    q_mu = jack(transpose(lam), 1 / kv)
    lhs = theta(p_lam.p_expansion, kv)
    rhs = q_mu.p_expansion

    c: Optional[RatFunc] = None
    for mu, coeff in rhs.terms.items():
        if mu in lhs.terms:
            c = lhs.terms[mu] / coeff
            break
    if c is None:
        raise ArithmeticError(
            f"no common power-sum term between the images for "
            f"{format_partition(lam)}")
    indices = set(lhs.terms) | set(rhs.terms)
    zero = RatFunc.const(0)
    for mu in indices:
        left = lhs.terms.get(mu, zero)
        right = rhs.terms.get(mu, zero)
        if not ratfunc_equal(left, c * right):
            raise ArithmeticError(
                f"images are not proportional for {format_partition(lam)}: "
                f"term {format_partition(mu)} gives {left} vs {c * right}")
    return c


# -- finite-variable side ----------------------------------------------------


def _zvars(n: int) -> List[str]:
    return [f"z{i}" for i in range(1, n + 1)]


def phi_N(x: PExpr, n: int) -> RatFunc:
    """Substitute each p_l by the n-variable power sum z_1^l + ... + z_n^l."""
    if n < 1:
        raise ValueError("need at least one variable")
    names = _zvars(n)
    sums: Dict[int, MultiPoly] = {}

    def power_sum(l: int) -> MultiPoly:
        if l not in sums:
            sums[l] = MultiPoly(
                names, {tuple(l if i == j else 0 for i in range(n)): Fraction(1)
                        for j in range(n)})
        return sums[l]

    total = RatFunc.const(0)
    for mu, coeff in x.terms.items():
        poly = MultiPoly.const(1)
        for part in mu:
            poly = poly * power_sum(part)
        total = total + coeff * poly
    return total


def _euler_weights(poly: MultiPoly, names: Sequence[str]) -> List[Optional[int]]:
    index = {s: i for i, s in enumerate(poly.symbols)}
    return [index.get(name) for name in names]


def apply_L_N(f: RatFunc, k: Coupling = None, n: int = 1) -> RatFunc:
    """Finite-variable operator in exponential coordinates.

    The input must be polynomial in the z variables (denominator free of
    them); the pairwise term divides by z_i - z_j exactly, and a division
    failure signals a non-symmetric input.
    """
    kv = _as_coupling(k)
    names = _zvars(n)
    if any(s in f.den.symbols for s in names):
        raise ValueError("coefficients must be polynomial in the z variables")
    num = f.num
    pos = _euler_weights(num, names)

    def euler_square(p: MultiPoly) -> MultiPoly:
        terms = {}
        for exps, c in p.terms.items():
            w = sum(exps[t] ** 2 for t in pos if t is not None)
            if w:
                terms[exps] = c * w
        return MultiPoly(p.symbols, terms)

    result = RatFunc(euler_square(num), f.den)
    for i in range(n):
        for j in range(i + 1, n):
            terms = {}
            for exps, c in num.terms.items():
                ei = exps[pos[i]] if pos[i] is not None else 0
                ej = exps[pos[j]] if pos[j] is not None else 0
                if ei != ej:
                    terms[exps] = c * (ei - ej)
            g = MultiPoly(num.symbols, terms)
            if g.is_zero():
                continue
            diff = MultiPoly.linear(0, **{names[i]: 1, names[j]: -1})
            try:
                quot = poly_exact_div(g, diff)
            except ExactDivisionError as exc:
                raise ExactDivisionError(
                    f"pairwise term not divisible by {names[i]} - {names[j]}; "
                    f"the input is not symmetric") from exc
            summ = MultiPoly.linear(0, **{names[i]: 1, names[j]: 1})
            result = result - kv * RatFunc(quot * summ, f.den)
    return result


def check_diagram(mu: Partition, k: Coupling = None, n: int = 1) -> CheckResult:
    """Projecting to n variables commutes with the operator at p0 = n."""
    mu = check_partition(mu)
    kv = _as_coupling(k)
    down = phi_N(apply_L_inf(p_basis_element(mu), kv, n), n)
    across = apply_L_N(phi_N(p_basis_element(mu), n), kv, n)
    holds = ratfunc_equal(down, across)
    return CheckResult(
        check_id=f"jack/diagram/{format_partition(mu)}/N={n}",
        holds=holds,
        inputs=(("mu", format_partition(mu)), ("N", str(n))),
        lhs=str(down),
        rhs=str(across),
    )


# -- report drivers -----------------------------------------------------------


def verify_conjugation(max_degree: int = 6) -> VerificationReport:
    report = VerificationReport(suite="jack-conjugation",
                                config={"maxDegree": max_degree})
    for d in range(1, max_degree + 1):
        report.add(check_conjugation(d))
    report.sort()
    return report


def verify_duality(max_weight: int = 6) -> VerificationReport:
    """Macdonald duality for every partition up to the weight bound, k symbolic."""
    report = VerificationReport(suite="jack-macdonald",
                                config={"maxWeight": max_weight})
    for lam in partitions_up_to_weight(max_weight):
        if not lam:
            continue
        name = f"jack/macdonald/{format_partition(lam)}"
        try:
            c = macdonald_duality(lam, None)
            report.add(CheckResult(
                check_id=name,
                holds=not c.is_zero(),
                inputs=(("lambda", format_partition(lam)),),
                lhs="theta(P(lambda, k))",
                rhs="c * P(lambda', 1/k)",
                notes=f"c = {c}",
            ))
        except ArithmeticError as exc:
            report.add(CheckResult(
                check_id=name,
                holds=False,
                inputs=(("lambda", format_partition(lam)),),
                lhs="theta(P(lambda, k))",
                rhs="c * P(lambda', 1/k)",
                notes=str(exc),
            ))
    report.sort()
    return report


def verify_diagram(max_weight: int = 5, max_n: int = 4) -> VerificationReport:
    report = VerificationReport(
        suite="jack-diagram", config={"maxWeight": max_weight, "maxN": max_n})
    for mu in partitions_up_to_weight(max_weight):
        if not mu:
            continue
        for n in range(1, max_n + 1):
            report.add(check_diagram(mu, None, n))
    report.sort()
    return report

# -- independent cross-checks --------------------------------------------------


def _horizontal_strips(lam: Partition) -> List[Tuple[Partition, int]]:
    """Inner shapes nu with lam/nu a horizontal strip, with the strip size."""
    bounds = []
    for i, part in enumerate(lam):
        low = lam[i + 1] if i + 1 < len(lam) else 0
        bounds.append((low, part))
    out: List[Tuple[Partition, int]] = []

    def rec(i: int, acc: List[int], removed: int):
        if i == len(bounds):
            out.append((check_partition(tuple(acc)), removed))
            return
        low, high = bounds[i]
        for v in range(low, high + 1):
            rec(i + 1, acc + [v], removed + (high - v))

    rec(0, [], 0)
    return out


def kostka_number(lam: Partition, mu: Partition) -> int:
    """Count column-strict fillings of shape lam with content mu."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if weight(lam) != weight(mu):
        return 0

    from functools import lru_cache

    @lru_cache(maxsize=None)
    def count(shape: Partition, entries: Partition) -> int:
        if not entries:
            return 1 if not shape else 0
        last = entries[-1]
        rest = entries[:-1]
        total = 0
        for inner, removed in _horizontal_strips(shape):
            if removed == last:
                total += count(inner, rest)
        return total

    return count(lam, mu)


def schur_m_expansion(lam: Partition) -> MExpr:
    """The Schur function of lam in the monomial basis, by tableau counting.

    Entirely combinatorial: no operator, no eigenproblem; this is the
    independent oracle the coupling -1 specialization is tested against.
    """
    lam = check_partition(lam)
    d = weight(lam)
    terms = {}
    for mu in partitions_of_weight(d):
        c = kostka_number(lam, mu)
        if c:
            terms[mu] = RatFunc.const(c)
    return MExpr(d, terms)


def check_schur(lam: Partition) -> CheckResult:
    """At coupling -1 the eigenfunction is the Schur function."""
    lam = check_partition(lam)
    computed = jack(lam, -1).m_expansion
    expected = schur_m_expansion(lam)
    return CheckResult(
        check_id=f"jack/schur/{format_partition(lam)}",
        holds=computed == expected,
        inputs=(("lambda", format_partition(lam)),),
        lhs=str(computed),
        rhs=str(expected),
    )


def check_triangularity(d: int) -> CheckResult:
    """In the monomial basis the operator only moves weight down in dominance."""
    basis = degree_basis(d)
    mm = _matrix_m_symbolic(d)
    bad = ""
    holds = True
    for i in range(len(basis)):
        for j in range(len(basis)):
            if not mm[i][j].is_zero() and not dominance_leq(basis[i], basis[j]):
                holds = False
                bad = (f"entry ({format_partition(basis[i])}, "
                       f"{format_partition(basis[j])}) = {mm[i][j]}")
                break
        if not holds:
            break
    return CheckResult(
        check_id=f"jack/triangular/d={d}",
        holds=holds,
        inputs=(("degree", str(d)),),
        lhs="support of the monomial-basis matrix",
        rhs="dominance-lower triangle",
        notes=bad,
    )


def check_p0_scalar(d: int) -> CheckResult:
    """The p0 dependence of the degree-d block is the scalar -k*d*p0."""
    with_p0 = operator_matrix(d)
    without = operator_matrix(d, None, 0)
    basis = degree_basis(d)
    scalar = K * (-d) * P0
    holds = True
    for i in range(len(basis)):
        for j in range(len(basis)):
            expected = scalar if i == j else RatFunc.const(0)
            if not ratfunc_equal(with_p0[i][j] - without[i][j], expected):
                holds = False
                break
        if not holds:
            break
    return CheckResult(
        check_id=f"jack/p0-scalar/d={d}",
        holds=holds,
        inputs=(("degree", str(d)),),
        lhs="L(k, p0) - L(k, 0)",
        rhs="-k*d*p0 * identity",
    )


def verify_structure(max_degree: int = 6) -> VerificationReport:
    """Triangularity and the scalar p0 dependence, degree by degree."""
    report = VerificationReport(suite="jack-structure",
                                config={"maxDegree": max_degree})
    for d in range(1, max_degree + 1):
        report.add(check_triangularity(d))
        report.add(check_p0_scalar(d))
    report.sort()
    return report


def verify_schur(max_weight: int = 6) -> VerificationReport:
    report = VerificationReport(suite="jack-schur",
                                config={"maxWeight": max_weight})
    for lam in partitions_up_to_weight(max_weight):
        if lam:
            report.add(check_schur(lam))
    report.sort()
    return report
