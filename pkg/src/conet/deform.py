"""Deformation verifiers for small Artinian algebras.

Two constructions are checked exactly: a length-7 smoothing of an algebra
with Hilbert function (1,3,3), and the (1,r,2) quadric-pencil algebras with
their degree-1 syzygies and one-parameter flat deformation.  Polynomials
here are affine (possibly inhomogeneous), stored as dicts mapping exponent
tuples to Scalars.
"""

from __future__ import annotations

import random
from itertools import combinations

from . import linalg
from .errors import InvalidParameters, VerificationFailure
from .scalar import ONE, W, ZERO, Scalar
from .upoly import distinct_root_count


# --------------------------------------------------------------------------
# affine polynomial helpers
# --------------------------------------------------------------------------


def aterm(nv, exp, coeff):
    return {tuple(exp): coeff} if coeff else {}


def avar(nv, i, coeff=ONE):
    e = [0] * nv
    e[i] = 1
    return {tuple(e): coeff}


def aadd(*ps):
    out = {}
    for p in ps:
        for e, c in p.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def ascale(p, c):
    if not c:
        return {}
    return {e: x * c for e, x in p.items()}


def amul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, ZERO) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def aeval(p, point):
    out = ZERO
    for e, c in p.items():
        t = c
        for i, k in enumerate(e):
            for _ in range(k):
                t = t * point[i]
        out = out + t
    return out


def adiff(p, i):
    out = {}
    for e, c in p.items():
        if e[i]:
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * Scalar(e[i])
    return out


def monomials_upto(nv, d):
    """All exponent tuples of total degree <= d, in a fixed order."""
    out = [()]
    for _ in range(nv):
        new = []
        for e in out:
            used = sum(e)
            for k in range(d - used + 1):
                new.append(e + (k,))
        out = new
    out.sort(key=lambda e: (sum(e), e))
    return out


def monomials_of(nv, d):
    return [e for e in monomials_upto(nv, d) if sum(e) == d]


def _rows_for(gens, nv, bound, cols_index):
    rows = []
    for g in gens:
        dg = max(sum(e) for e in g)
        for q in monomials_upto(nv, bound - dg):
            prod = amul({q: ONE}, g)
            row = [ZERO] * len(cols_index)
            for e, c in prod.items():
                row[cols_index[e]] = c
            rows.append(row)
    return rows


def truncated_codimension(gens, nv, bound):
    """dim of polynomials of degree <= bound modulo generator multiples."""
    cols = monomials_upto(nv, bound)
    index = {e: i for i, e in enumerate(cols)}
    return len(cols) - linalg.rank(_rows_for(gens, nv, bound, index))


def stabilized_length(gens, nv, max_bound=8):
    """Truncated codimension once three consecutive bounds agree."""
    vals = []
    for d in range(1, max_bound + 1):
        vals.append(truncated_codimension(gens, nv, d))
        if len(vals) >= 3 and vals[-1] == vals[-2] == vals[-3]:
            return vals[-1]
    raise VerificationFailure(f"affine length did not stabilize: {vals}")


def graded_hilbert(gens, nv, upto):
    """Graded Hilbert function of homogeneous affine generators."""
    out = []
    for d in range(upto + 1):
        cols = monomials_of(nv, d)
        index = {e: i for i, e in enumerate(cols)}
        rows = []
        for g in gens:
            dg = max(sum(e) for e in g)
            assert all(sum(e) == dg for e in g), "graded_hilbert needs homogeneous input"
            if d < dg:
                continue
            for q in monomials_of(nv, d - dg):
                prod = amul({q: ONE}, g)
                row = [ZERO] * len(cols)
                for e, c in prod.items():
                    row[index[e]] = c
                rows.append(row)
        out.append(len(cols) - linalg.rank(rows))
    return tuple(out)


def affine_support_count(gens, nv, seed=0, max_bound=8):
    """Distinct points of an Artinian affine scheme, via a generic
    multiplication operator on the truncated quotient."""
    vals = []
    stable = None
    for d in range(1, max_bound + 1):
        vals.append(truncated_codimension(gens, nv, d))
        if len(vals) >= 3 and vals[-1] == vals[-2] == vals[-3]:
            stable = d - 2
            break
    assert stable is not None, "length did not stabilize"
    length = vals[-1]
    lo_cols = monomials_upto(nv, stable)
    lo_index = {e: i for i, e in enumerate(lo_cols)}
    lo_pivots, _lo = linalg.rref(_rows_for(gens, nv, stable, lo_index))
    basis = [lo_cols[c] for c in range(len(lo_cols)) if c not in lo_pivots]
    assert len(basis) == length
    cols = monomials_upto(nv, stable + 1)
    index = {e: i for i, e in enumerate(cols)}
    pivots, rmat = linalg.rref(_rows_for(gens, nv, stable + 1, index))
    free = [c for c in range(len(cols)) if c not in pivots]
    assert len(free) == length

    def reduce(poly):
        v = [ZERO] * len(cols)
        for e, c in poly.items():
            v[index[e]] = c
        for i, pc in enumerate(pivots):
            if v[pc]:
                f = v[pc]
                v = [v[j] - f * rmat[i][j] for j in range(len(v))]
        return [v[c] for c in free]

    # transition: classes of the level-D basis in level-(D+1) coordinates
    trans = [reduce({b: ONE}) for b in basis]
    a1 = [[trans[j][i] for j in range(length)] for i in range(length)]
    assert linalg.rank(a1) == length
    rng = random.Random(seed)
    last = None
    for _ in range(8):
        lform = aadd(*[avar(nv, i, Scalar(rng.randint(-20, 20))) for i in range(nv)])
        imgs = [reduce(amul({b: ONE}, lform)) for b in basis]
        a2 = [[imgs[j][i] for j in range(length)] for i in range(length)]
        op_cols = [linalg.solve(a1, [a2[i][j] for i in range(length)]) for j in range(length)]
        op = [[op_cols[j][i] for j in range(length)] for i in range(length)]
        got = distinct_root_count(linalg.char_poly(op))
        if last is not None and got == last:
            return got
        last = got
    raise VerificationFailure("support count never agreed across draws")


# --------------------------------------------------------------------------
# the (1,3,3) smoothing
# --------------------------------------------------------------------------


def _clause(name, ok, detail=""):
    return {"name": name, "pass": bool(ok), "detail": detail}


def verify_smoothing_133(lam, t, strict=False):
    """Check the length-7 smoothing of the (1,3,3) algebra at (lam, t)."""
    lam = lam if isinstance(lam, Scalar) else Scalar(lam)
    t = t if isinstance(t, Scalar) else Scalar(t)
    if not lam or not (lam**3 + ONE):
        raise InvalidParameters("need lambda nonzero with 1 + lambda^3 != 0")
    nv = 3
    unit = ONE / (lam**3 + ONE)

    def gens_at(tval):
        x, y, z = (avar(nv, i) for i in range(3))
        return [
            aadd(amul(y, y), ascale(amul(x, z), lam)),
            aadd(amul(z, z), ascale(amul(x, y), lam)),
            aadd(amul(x, x), ascale(amul(y, z), lam), ascale(x, tval)),
            aadd(amul(x, amul(y, z)), ascale(amul(x, x), lam * lam * tval * unit)),
        ]

    gens = gens_at(t)
    clauses = []
    pts = [(ZERO, ZERO, ZERO)]
    for j in (ONE, W, W * W):
        pts.append((-t * unit, lam * t * unit * j, lam * t * unit * j * j))
    ok = all(not aeval(g, p) for g in gens for p in pts)
    clauses.append(_clause("four-points-vanish", ok))
    jac_ok = True
    if t:
        for p in pts[1:]:
            jac = [[aeval(adiff(g, i), p) for i in range(3)] for g in gens]
            if linalg.rank(jac) != 3:
                jac_ok = False
    clauses.append(_clause("non-origin-points-simple", jac_ok))
    length = stabilized_length(gens, nv)
    clauses.append(_clause("affine-length-7", length == 7, f"length={length}"))
    hf = graded_hilbert(gens_at(ZERO), nv, 3)
    clauses.append(_clause("graded-hf-1330-at-t0", hf == (1, 3, 3, 0), f"hf={hf}"))
    report = {"clauses": clauses, "pass": all(c["pass"] for c in clauses)}
    if strict and not report["pass"]:
        bad = next(c for c in clauses if not c["pass"])
        raise VerificationFailure(f"clause {bad['name']} failed: {bad['detail']}")
    return report


# --------------------------------------------------------------------------
# the (1,r,2) pencils
# --------------------------------------------------------------------------


def _check_params(r, lambdas):
    lambdas = [v if isinstance(v, Scalar) else Scalar(v) for v in lambdas]
    if r < 4 or len(lambdas) != r - 3:
        raise InvalidParameters("need r >= 4 and lambdas for indices 4..r")
    if any(not v for v in lambdas) or len(set((v.a, v.b) for v in lambdas)) != len(lambdas):
        raise InvalidParameters("lambdas must be nonzero and pairwise distinct")
    return lambdas


def _generators_1r2(r, lam, t=ZERO):
    """Named ideal generators of the (1,r,2) algebra; h_r deformed by t*X_r."""
    nv = r
    gens = []
    names = []
    for i, j in combinations(range(r), 2):
        gens.append(amul(avar(nv, i), avar(nv, j)))
        names.append(f"X{i + 1}X{j + 1}")
    sq = [amul(avar(nv, i), avar(nv, i)) for i in range(r)]
    h = aadd(sq[2], ascale(sq[0], Scalar(-1)), ascale(sq[1], Scalar(-1)))
    gens.append(h)
    names.append("h")
    for k in range(4, r + 1):
        hi = aadd(sq[k - 1], ascale(sq[0], Scalar(-1)), ascale(sq[1], -lam[k - 4]))
        if k == r and t:
            hi = aadd(hi, ascale(avar(nv, r - 1), t))
        gens.append(hi)
        names.append(f"h{k}")
    return names, gens


def _printed_relations(r, lam):
    """The listed degree-1 relations, as {generator name: linear coefficient}.

    Coefficients are recorded exactly as printed; validation happens later.
    """
    nv = r
    x = [avar(nv, i) for i in range(r)]
    rels = []
    for i in range(4, r + 1):
        li = lam[i - 4]
        xi = x[i - 1]
        rels.append((f"e_1{i}", {
            f"h{i}": x[0],
            "h": ascale(x[0], Scalar(-1)),
            f"X1X{i}": ascale(xi, Scalar(-1)),
            "X1X3": x[2],
            "X1X2": ascale(x[1], ONE - li),
        }))
        rels.append((f"e_2{i}", {
            f"h{i}": x[1],
            "h": ascale(x[1], -li),
            f"X2X{i}": ascale(xi, Scalar(-1)),
            "X2X3": ascale(x[2], li),
            "X1X2": ascale(x[0], ONE - li),
        }))
        rels.append((f"e_3{i}", {
            "h": xi,
            "X1X3": x[2],  # printed as X3*(X3X1)
            f"X1X{i}": x[0],
            f"X2X{i}": x[1],
        }))
        for s in range(4, r + 1):
            if s == i:
                continue
            a, b = sorted((s, i))
            rels.append((f"e_{s}{i}", {
                f"h{i}": x[s - 1],
                f"X1X{s}": x[0],
                "X1X2": x[1],  # printed as X2*(X2X1)
                f"X{a}X{b}": ascale(xi, Scalar(-1)),
            }))
    for i, j in combinations(range(1, r + 1), 2):
        for k in range(1, r + 1):
            if k in (i, j):
                continue
            a1, b1 = sorted((i, j))
            a2, b2 = sorted((k, i))
            rels.append((f"e_{k}{i}{j}", {
                f"X{a1}X{b1}": x[k - 1],
                f"X{a2}X{b2}": ascale(x[j - 1], Scalar(-1)),
            }))
    return rels


def _residual(rel, names, gens):
    by_name = dict(zip(names, gens))
    out = {}
    for name, coeff in rel.items():
        out = aadd(out, amul(coeff, by_name[name]))
    return out


def _lin_coords(p, nv):
    vec = []
    for i in range(nv):
        e = tuple(1 if j == i else 0 for j in range(nv))
        vec.append(p.get(e, ZERO))
    return vec


def _correct_relation(rel, names, gens, nv):
    """Closest exact syzygy with the printed h-part pinned.

    The coefficients of the quadratic-monomial generators are solved for
    (the printed misprints can move support between those generators), and
    the solution nearest to the printed coefficients is selected.  Returns
    (corrected relation, list of (generator, printed, corrected)) or None
    when no syzygy with the pinned h-part exists.
    """
    by_name = dict(zip(names, gens))
    pinned = {n: c for n, c in rel.items() if n.startswith("h")}
    free = [n for n in names if not n.startswith("h")]
    deg3 = monomials_upto(nv, 3)
    deg3 = [e for e in deg3 if sum(e) == 3]
    index = {e: i for i, e in enumerate(deg3)}

    def to_vec(p):
        v = [ZERO] * len(deg3)
        for e, c in p.items():
            v[index[e]] = c
        return v

    cols = []
    for n in free:
        for v in range(nv):
            cols.append(to_vec(amul(avar(nv, v), by_name[n])))
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(len(deg3))]
    rhs_poly = {}
    for n, c in pinned.items():
        rhs_poly = aadd(rhs_poly, amul(c, by_name[n]))
    rhs = [-c for c in to_vec(rhs_poly)]
    try:
        particular = linalg.solve(mat, rhs)
    except Exception:
        return None, None
    kernel = linalg.kernel_basis(mat, len(cols))
    printed_vec = []
    for n in free:
        printed_vec.extend(_lin_coords(rel.get(n, {}), nv))
    diff = [p - q for p, q in zip(printed_vec, particular)]
    if kernel:
        gram = [[_dot(a, b) for b in kernel] for a in kernel]
        b = [_dot(diff, a) for a in kernel]
        coeffs = linalg.solve(gram, b)
        for c, kv in zip(coeffs, kernel):
            particular = [p + c * k for p, k in zip(particular, kv)]
    corrected = dict(pinned)
    changes = []
    for gi, n in enumerate(free):
        coords = particular[gi * nv : (gi + 1) * nv]
        poly = aadd(*[avar(nv, v, coords[v]) for v in range(nv)])
        if poly:
            corrected[n] = poly
        if coords != _lin_coords(rel.get(n, {}), nv):
            changes.append((n, _lin_coords(rel.get(n, {}), nv), coords))
    return corrected, changes


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


def build_1r2(r, lambdas):
    """The (1,r,2) pencil structure: forms, ideal, validated relations."""
    lam = _check_params(r, lambdas)
    nv = r
    sq = [amul(avar(nv, i), avar(nv, i)) for i in range(r)]
    f = aadd(sq[0], *sq[2:])
    g = aadd(sq[1], sq[2], *[ascale(sq[i + 3], lam[i]) for i in range(r - 3)])
    names, gens = _generators_1r2(r, lam)
    relations = []
    for name, rel in _printed_relations(r, lam):
        res = _residual(rel, names, gens)
        if not res:
            relations.append({"name": name, "printed_ok": True, "relation": rel, "changes": []})
            continue
        corrected, changes = _correct_relation(rel, names, gens, nv)
        assert corrected is not None, f"no syzygy with the support of {name}"
        assert not _residual(corrected, names, gens)
        relations.append(
            {"name": name, "printed_ok": False, "relation": corrected, "changes": changes}
        )
    ncols = len(gens) * nv
    deg3 = monomials_of(nv, 3)
    index = {e: i for i, e in enumerate(deg3)}
    cols = []
    for gpoly in gens:
        for v in range(nv):
            prod = amul(avar(nv, v), gpoly)
            col = [ZERO] * len(deg3)
            for e, c in prod.items():
                col[index[e]] = c
            cols.append(col)
    mat = [[cols[j][i] for j in range(ncols)] for i in range(len(deg3))]
    syzygy_dim = len(linalg.kernel_basis(mat, ncols))
    return {
        "f": f,
        "g": g,
        "names": names,
        "generators": gens,
        "relations": relations,
        "syzygy_dim": syzygy_dim,
        "syzygy_formula": (r**3 - 7 * r) // 3,
    }


def verify_deformation_1r2(r, lambdas, t, seed=0, strict=False):
    """Check that the (1,r,2) relations extend along h_r -> h_r + t*X_r and
    that the total length r+3 is conserved."""
    lam = _check_params(r, lambdas)
    t = t if isinstance(t, Scalar) else Scalar(t)
    nv = r
    built = build_1r2(r, lambdas)
    names, gens_t = _generators_1r2(r, lam, t)
    clauses = []
    bad = []
    for entry in built["relations"]:
        rel = dict(entry["relation"])
        name = entry["name"]
        if f"h{r}" in rel:
            # modified relations: the -X_r coefficient of the (X_? X_r)
            # generator becomes -(X_r + t)
            for gname, coeff in list(rel.items()):
                if gname.startswith("X") and gname.endswith(f"X{r}"):
                    vec = _lin_coords(coeff, nv)
                    if vec[r - 1]:
                        rel[gname] = aadd(coeff, aterm(nv, (0,) * nv, vec[r - 1] * t))
        if _residual(rel, names, gens_t):
            bad.append(name)
    clauses.append(_clause("relations-extend", not bad, f"failed: {bad}"))
    len_t = stabilized_length(gens_t, nv)
    _n0, gens_0 = _generators_1r2(r, lam, ZERO)
    len_0 = stabilized_length(gens_0, nv)
    clauses.append(
        _clause("length-conserved", len_0 == len_t == r + 3, f"t=0: {len_0}, t!=0: {len_t}")
    )
    hf0 = graded_hilbert(gens_0, nv, 3)
    clauses.append(_clause("graded-hf-at-t0", hf0 == (1, r, 2, 0), f"hf={hf0}"))
    if t:
        support = affine_support_count(gens_t, nv, seed)
        clauses.append(_clause("support-count-2", support == 2, f"support={support}"))
    report = {"clauses": clauses, "pass": all(c["pass"] for c in clauses)}
    if strict and not report["pass"]:
        badc = next(c for c in clauses if not c["pass"])
        raise VerificationFailure(f"clause {badc['name']} failed: {badc['detail']}")
    return report
