"""Linear systems of conics and their scheme-theoretic invariants.

A pencil or net is a linear span of degree-2 forms in X, Y, Z.  The
discriminant of a net is a plane cubic in coordinates A, B, C dual to the
chosen generators; the rank-one locus is the scheme cut out by the six
distinct 2x2 minors (adjugate entries) of the symmetric matrix pencil.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .errors import (
    GenericityFailure,
    Indeterminate,
    InvalidInput,
    NotThreeDimensional,
    ZeroForm,
)
from .forms import HForm, conic_matrix, form_det3, monomial_order
from .scalar import ONE, ZERO, Scalar
from .upoly import distinct_root_count, pgcd, roots_in_qw, trim

GRAM_DIAGONAL = [Scalar(2), Scalar(2), Scalar(2), ONE, ONE, ONE]


class LinearSystem:
    """A linear span of homogeneous forms of a common degree."""

    def __init__(self, forms):
        forms = list(forms)
        assert forms, "a linear system needs at least one generator"
        degree = next((f.degree for f in forms if f), forms[0].degree)
        for f in forms:
            assert f.is_zero() or f.degree == degree
        self.degree = degree
        self.forms = forms
        self.order = monomial_order(degree)
        rows = [f.coeff_vector(self.order) for f in forms]
        pivots, rmat = linalg.rref(rows)
        self._pivots = pivots
        self._rref = rmat
        self.dimension = len(rmat)

    def canonical(self):
        """Reduced-echelon coefficient matrix; equal spans compare equal."""
        return tuple(tuple(row) for row in self._rref)

    def canonical_forms(self):
        return [
            HForm(self.degree, dict(zip(self.order, row)), self.forms[0].vars)
            for row in self._rref
        ]

    def __eq__(self, other):
        if not isinstance(other, LinearSystem):
            return NotImplemented
        return self.degree == other.degree and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.degree, self.canonical()))

    def contains(self, form):
        if form.is_zero():
            return True
        if form.degree != self.degree:
            return False
        rows = [list(r) for r in self._rref] + [form.coeff_vector(self.order)]
        return linalg.rank(rows) == self.dimension

    def substitute(self, g):
        return LinearSystem([f.substitute(g) for f in self.forms])

    def to_json(self):
        return {"degree": self.degree, "forms": [f.to_json() for f in self.forms]}

    @classmethod
    def from_json(cls, data):
        try:
            forms = [HForm.from_json(f) for f in data["forms"]]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad linear system JSON: {exc}") from exc
        if not forms:
            raise InvalidInput("linear system needs at least one form")
        return cls(forms)

    def __repr__(self):
        return "LinearSystem[" + "; ".join(str(f) for f in self.forms) + "]"


def assert_net(system):
    if system.degree != 2 or len(system.forms) != 3 or system.dimension != 3:
        raise NotThreeDimensional(
            "expected three degree-2 generators spanning a 3-dimensional space"
        )


def discriminant_cubic(net):
    """det(A*M1 + B*M2 + C*M3) as a cubic form in A, B, C.

    Uses the generators in the order given, not the canonical basis.
    """
    assert_net(net)
    mats = [conic_matrix(f) for f in net.forms]
    dual_vars = ("A", "B", "C")
    exps = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    entries = [
        [
            HForm(1, {exps[k]: mats[k][i][j] for k in range(3)}, dual_vars)
            for j in range(3)
        ]
        for i in range(3)
    ]
    return form_det3(entries)


def pencil_determinant(pencil):
    """det(s*M1 + t*M2) of a pencil, as binary-cubic coefficients.

    Returns [c0, c1, c2, c3] with c_i the coefficient of s^i t^(3-i).
    """
    assert pencil.degree == 2 and len(pencil.forms) == 2
    mats = [conic_matrix(f) for f in pencil.forms]
    dual_vars = ("A", "B", "C")
    entries = [
        [
            HForm(1, {(1, 0, 0): mats[0][i][j], (0, 1, 0): mats[1][i][j]}, dual_vars)
            for j in range(3)
        ]
        for i in range(3)
    ]
    d = form_det3(entries)
    return [d.coeff((i, 3 - i, 0)) for i in range(4)]


def minor_forms(net):
    """The six adjugate entries of the symmetric matrix pencil, as quadrics
    in A, B, C.  Their zero scheme is the rank <= 1 locus."""
    assert_net(net)
    mats = [conic_matrix(f) for f in net.forms]
    dual_vars = ("A", "B", "C")
    exps = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    m = [
        [
            HForm(1, {exps[k]: mats[k][i][j] for k in range(3)}, dual_vars)
            for j in range(3)
        ]
        for i in range(3)
    ]
    out = []
    for i in range(3):
        for j in range(i, 3):
            i1, i2 = [t for t in range(3) if t != i]
            j1, j2 = [t for t in range(3) if t != j]
            out.append(m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1])
    return out


@dataclass(frozen=True)
class SchemeReport:
    """Hilbert-function probe of a homogeneous ideal in three variables."""

    hilbert: tuple
    dimension: int
    length: object  # int for dimension 0, None (infinite) for dimension 1

    def to_json(self):
        return {
            "hilbert": [int(h) for h in self.hilbert],
            "dimension": self.dimension,
            "length": "infinite" if self.length is None else self.length,
        }


def _span_rows(gens, d, order):
    """Coefficient rows of all degree-d multiples of the generators."""
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        k = d - g.degree
        if k < 0:
            continue
        for exp in monomial_order(k):
            mono = HForm(k, {exp: ONE}, g.vars)
            rows.append((mono * g).coeff_vector(order))
    return rows


def ideal_codimension(gens, d):
    """dim of the degree-d piece of the ideal generated by gens."""
    order = monomial_order(d)
    rows = _span_rows(gens, d, order)
    return linalg.rank(rows)


def hilbert_value(gens, d):
    order = monomial_order(d)
    return len(order) - ideal_codimension(gens, d)


def graded_quotient_report(gens, probe_degree=8):
    """Hilbert function of R/(gens) with early stabilization detection.

    Declares dimension 0 once three consecutive values agree (length is the
    stable value) and dimension 1 once three consecutive first differences
    agree and are positive.  Raises the probe bound once before giving up.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroForm("graded report needs at least one nonzero generator")
    hf = []
    for bound in (probe_degree, 12):
        for d in range(len(hf), bound + 1):
            hf.append(hilbert_value(gens, d))
            n = len(hf)
            if hf[-1] == 0:
                # the quotient vanishes in high degrees: empty scheme
                return SchemeReport(tuple(hf), 0, 0)
            if n >= 3 and hf[-1] == hf[-2] == hf[-3]:
                return SchemeReport(tuple(hf), 0, hf[-1])
            if n >= 4:
                d1, d2, d3 = hf[-1] - hf[-2], hf[-2] - hf[-3], hf[-3] - hf[-4]
                if d1 == d2 == d3 and d1 > 0:
                    return SchemeReport(tuple(hf), 1, None)
        if bound == 12:
            break
    raise Indeterminate(f"Hilbert function did not stabilize by degree 12: {hf}")


def rank_one_report(net, probe_degree=8):
    """Scheme report of the rank-one locus of a net."""
    return graded_quotient_report(minor_forms(net), probe_degree)


def _quotient_basis(gens, d):
    """Monomial basis of (R/I)_d together with a reducer to coordinates."""
    order = monomial_order(d)
    rows = _span_rows(gens, d, order)
    pivots, rmat = linalg.rref(rows)
    free = [c for c in range(len(order)) if c not in pivots]

    def reduce(vec):
        v = list(vec)
        for i, pc in enumerate(pivots):
            if v[pc]:
                f = v[pc]
                v = [v[j] - f * rmat[i][j] for j in range(len(v))]
        return [v[c] for c in free]

    return order, free, reduce


def support_count(gens, seed=0):
    """Number of distinct closed points of a zero-dimensional scheme.

    Builds two generic multiplication operators on a stable graded piece,
    takes the separable degree of the characteristic polynomial of their
    ratio, and requires two consecutive random draws to agree.
    """
    report = graded_quotient_report(gens)
    assert report.dimension == 0, "support count needs a zero-dimensional scheme"
    if report.length == 0:
        return 0
    hf = report.hilbert
    d = next(i for i, h in enumerate(hf) if all(x == report.length for x in hf[i:]))
    order_d, free_d, reduce_d = _quotient_basis(gens, d)
    order_d1, free_d1, reduce_d1 = _quotient_basis(gens, d + 1)
    assert len(free_d) == len(free_d1) == report.length
    vars = gens[0].vars
    rng = random.Random(seed)

    def operator(lform):
        cols = []
        for c in free_d:
            mono = HForm(d, {order_d[c]: ONE}, vars)
            cols.append(reduce_d1((lform * mono).coeff_vector(order_d1)))
        return [[cols[j][i] for j in range(len(cols))] for i in range(len(free_d1))]

    def draw():
        l1 = HForm(
            1,
            {e: Scalar(rng.randint(-20, 20)) for e in monomial_order(1)},
            vars,
        )
        l2 = HForm(
            1,
            {e: Scalar(rng.randint(-20, 20)) for e in monomial_order(1)},
            vars,
        )
        a1 = operator(l1)
        if linalg.rank(a1) != len(a1):
            return None
        a2 = operator(l2)
        cols = []
        for j in range(len(a2)):
            rhs = [a2[i][j] for i in range(len(a2))]
            cols.append(linalg.solve(a1, rhs))
        op = [[cols[j][i] for j in range(len(cols))] for i in range(len(a2))]
        return distinct_root_count(linalg.char_poly(op))

    last = None
    for _ in range(8):
        got = draw()
        if got is None:
            continue
        if last is not None and got == last:
            return got
        last = got
    raise GenericityFailure("support count never agreed across draws")


def _binary_coeffs(form, i0, i1):
    """Coefficients of a form supported on two variables, low var-i1 first."""
    d = form.degree
    out = [ZERO] * (d + 1)
    for exp, c in form.coeffs.items():
        out[exp[i1]] = c
    return out


def rational_points(gens):
    """All Q(w)-points of the zero scheme of gens, normalized projectively.

    Intended for zero-dimensional schemes; a positive-dimensional input can
    raise Indeterminate.  Points are tuples of Scalars with first nonzero
    coordinate 1, sorted deterministically.
    """
    from .forms import eliminate

    gens = [g for g in gens if g]
    assert gens
    involves = [any(e[2] for e in g.coeffs) for g in gens]
    # each pool entry: (coefficients in Y at X^...=rest, binary degree)
    pool = []
    for g, inv in zip(gens, involves):
        if not inv:
            pool.append((trim(_binary_coeffs(g, 0, 1)), g.degree))
    zgens = [g for g, inv in zip(gens, involves) if inv]
    for i in range(len(zgens)):
        for j in range(i + 1, len(zgens)):
            r = eliminate(zgens[i], zgens[j], 2)
            if r:
                pool.append((trim(_binary_coeffs(r, 0, 1)), r.degree))
    pool = [(p, d) for p, d in pool if p]
    if not pool:
        raise Indeterminate("no constraints survive projection; scheme may be positive-dimensional")
    projections = []
    g = pool[0][0]
    for p, _d in pool[1:]:
        g = pgcd(g, p)
    if len(g) > 1:
        for t0 in roots_in_qw(g):
            projections.append((ONE, t0))
    if all(len(p) - 1 < d for p, d in pool):
        projections.append((ZERO, ONE))
    points = set()
    for x0, y0 in projections:
        zpolys = []
        for gform in gens:
            p = [ZERO] * (gform.degree + 1)
            for exp, c in gform.coeffs.items():
                p[exp[2]] = p[exp[2]] + c * (x0 ** exp[0]) * (y0 ** exp[1])
            zpolys.append(trim(p))
        zpolys = [p for p in zpolys if p]
        if not zpolys:
            raise Indeterminate("a whole line lies in the scheme")
        g = zpolys[0]
        for p in zpolys[1:]:
            g = pgcd(g, p)
        if len(g) == 1:
            continue
        for z0 in roots_in_qw(g):
            points.add(_normalize_point((x0, y0, z0)))
    if all(not g.eval((ZERO, ZERO, ONE)) for g in gens):
        points.add((ZERO, ZERO, ONE))
    good = [p for p in points if all(not g.eval(p) for g in gens)]
    good.sort(key=lambda p: tuple((c.a, c.b) for c in p))
    return good


def _normalize_point(pt):
    for c in pt:
        if c:
            inv = ONE / c
            return tuple(x * inv for x in pt)
    raise AssertionError("zero vector is not a projective point")


def orthogonal_complement(system):
    """The conics pairing to zero with every member of the system.

    The pairing of two conics with matrices M, N is 2 * trace(M N); in the
    fixed basis it is diagonal with entries (2, 2, 2, 1, 1, 1).
    """
    assert system.degree == 2
    rows = [
        [v * g for v, g in zip(row, GRAM_DIAGONAL)] for row in system.canonical()
    ]
    basis = linalg.kernel_basis([list(r) for r in rows], 6)
    return LinearSystem(
        [HForm.from_coeff_vector(2, v, system.forms[0].vars) for v in basis]
    )


def orbit_dimension(system):
    """Dimension of the PGL(3)-orbit of the system in its Grassmannian.

    Ranks the infinitesimal action gl(3) -> Hom(V, R_2 / V), where the
    matrix unit E_ab sends F to x_b * dF/dx_a.
    """
    assert system.degree == 2
    basis = system.canonical_forms()
    order = monomial_order(2)
    vrows = [f.coeff_vector(order) for f in basis]
    pivots, rmat = linalg.rref(vrows)

    def reduce(vec):
        v = list(vec)
        for i, pc in enumerate(pivots):
            if v[pc]:
                f = v[pc]
                v = [v[j] - f * rmat[i][j] for j in range(len(v))]
        return [v[c] for c in range(6) if c not in pivots]

    rows = []
    vars = system.forms[0].vars
    for a in range(3):
        for b in range(3):
            xb = [0, 0, 0]
            xb[b] = 1
            xform = HForm(1, {tuple(xb): ONE}, vars)
            row = []
            for f in basis:
                img = xform * f.diff(a)
                row.extend(reduce(img.coeff_vector(order)))
            rows.append(row)
    return linalg.rank(rows)
