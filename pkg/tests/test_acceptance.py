"""Acceptance suite: one test per contract criterion, exact arithmetic
throughout, total runtime under a minute."""

import random

from conet import linalg
from conet.classify import EXPECTED_DUALS, classify_net, classify_pencil, dual_pairs_check, verify_family
from conet.cubics import (
    apolar_generators,
    aronhold,
    hesse_cubic,
    hesse_net,
    hessian_cubic,
    jacobian_net,
    jacobian_preimage,
    preimage_dimension,
)
from conet.forms import parse_form
from conet.golden import (
    BASE_POINT_FREE,
    CUBIC_FAMILIES,
    DISCRIMINANT_TABLE,
    NET_FAMILIES,
    ORBIT_DIMENSIONS,
    PENCIL_FAMILIES,
    POLAR_TABLE,
    discriminant_8b,
    discriminant_presentation,
    family_samples,
    net_corpus,
    pencil_corpus,
    same_up_to_permutation,
)
from conet.scalar import ONE, W, ZERO, Scalar
from conet.spaces import (
    LinearSystem,
    discriminant_cubic,
    orbit_dimension,
    orthogonal_complement,
    rational_points,
)
from conet.deform import build_1r2, verify_deformation_1r2, verify_smoothing_133

SINGULAR_CUBICS = (
    "X^3+Y^3+X*Y*Z",
    "X^3+Y^2*Z",
    "Y*(X^2+Y*Z)",
    "Z*(X^2+Y^2-Z^2)",
    "X*Y*Z",
    "X*Y*(X+Y)",
    "X^2*Y",
    "X^3",
)

SMOOTH_CUBICS = (
    "X^3+Y^3+Z^3",
    "X^3+Y^3+Z^3+3*X*Y*Z",
    "Y^2*Z-X^3+X*Z^2",
    "Y^2*Z-X^3-Z^3",
    "X^3+Y^3+Z^3-3*X*Y*Z+Y*Z^2",
)


def random_g(rng):
    while True:
        g = [[Scalar(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
        if linalg.det(g) != ZERO:
            return g


def test_01_normal_form_corpus_and_invariance():
    rng = random.Random(2024)
    for label, net in net_corpus().items():
        assert classify_net(net).orbit == label
        for _ in range(5):
            assert classify_net(net.substitute(random_g(rng))).orbit == label


def test_02_hesse_special_values():
    for lam in (Scalar(-1), -W, -(W * W)):
        assert classify_net(hesse_net(lam)).orbit == "6a"
    for lam in (ZERO, Scalar(2), Scalar(2) * W, Scalar(2) * W * W):
        assert classify_net(hesse_net(lam)).orbit == "6d"
    for lam in (Scalar(1), Scalar(3), Scalar(-2), Scalar(5)):
        assert classify_net(hesse_net(lam)).orbit == "8b"


def test_03_discriminant_table():
    for label, expect in DISCRIMINANT_TABLE.items():
        gamma = discriminant_cubic(discriminant_presentation(label))
        target = parse_form(expect, vars=("A", "B", "C"))
        assert same_up_to_permutation(gamma, target), label
    gamma = discriminant_cubic(discriminant_presentation("8b"))
    assert same_up_to_permutation(gamma, discriminant_8b(ONE))
    # the worked 8a example, up to scalar exactly
    gamma = discriminant_cubic(net_corpus()["8a"])
    assert gamma.proportional(parse_form("2*A*B*C-2*(B^3+C^3)", vars=("A", "B", "C")))


def test_04_polar_nets():
    for text, expect in POLAR_TABLE:
        assert classify_net(jacobian_net(parse_form(text))).orbit == expect


def test_05_orbit_dimensions():
    for label, net in net_corpus().items():
        assert orbit_dimension(net) == ORBIT_DIMENSIONS[label]


def test_06_duality():
    dual_pairs_check(net_corpus())
    assert {EXPECTED_DUALS[k] for k in EXPECTED_DUALS} == set(EXPECTED_DUALS)
    for lam in (Scalar(1), Scalar(3), Scalar(-2)):
        key = classify_net(hesse_net(lam)).key
        comp_key = classify_net(orthogonal_complement(hesse_net(Scalar(-2) / lam))).key
        assert key == comp_key


def test_07_pencils_and_their_families():
    for label, pencil in pencil_corpus().items():
        assert classify_pencil(pencil) == label
    for spec in PENCIL_FAMILIES:
        report = verify_family(spec, family_samples(spec))
        assert report["pass"], report


def test_08_net_specialization_families():
    keys = None
    for spec in NET_FAMILIES:
        report = verify_family(spec, family_samples(spec))
        assert report["pass"], report
        if spec.j_constant:
            keys = report["keys_equal"]
    assert keys is True
    # the j-constant family runs through 8b with one shared key
    jspec = next(s for s in NET_FAMILIES if s.j_constant)
    ks = {classify_net(jspec.build(Scalar(b))).key for b in (1, 2, 3)}
    assert len(ks) == 1 and None not in ks


def test_09_cubic_specialization_families():
    for spec in CUBIC_FAMILIES:
        report = verify_family(spec, family_samples(spec))
        assert report["pass"], report


def test_10_hesse_identities():
    for lam in (Scalar(1), Scalar(3), Scalar(-2)):
        gamma = discriminant_cubic(hesse_net(lam))
        expect = parse_form(
            "(8+2*m^3)*A*B*C-2*m^2*(A^3+B^3+C^3)",
            vars=("A", "B", "C"),
            params={"m": lam},
        )
        assert gamma.proportional(expect)
        lam2 = -(Scalar(4) + lam**3) / (Scalar(3) * lam**2)
        h = hessian_cubic(hesse_cubic(lam))
        # normalize so the X^3 coefficient is 1: the XYZ coefficient is 3*lam2
        h = h.scale(ONE / h.coeff((3, 0, 0)))
        assert h.coeff((1, 1, 1)) == Scalar(3) * lam2


def test_11_jacobian_preimage():
    for alpha in (Scalar(2), Scalar(3)):
        net = LinearSystem(
            [
                parse_form("Y*Z-X^2"),
                parse_form("(Y-Z)*(Y-a*Z)", params={"a": alpha}),
                parse_form("X*Y"),
            ]
        )
        pre = jacobian_preimage(net)
        assert pre.dimension == 1
        expect = parse_form(
            "3*(a-1)^2*X^2*Y+2*a^2*Z^3-3*a*(a+1)*Y*Z^2+6*a*Y^2*Z-(a+1)*Y^3",
            params={"a": alpha},
        )
        assert pre.forms[0].proportional(expect)
    triangle_net = LinearSystem([parse_form("Y*Z"), parse_form("X*Z"), parse_form("X*Y")])
    pre = jacobian_preimage(triangle_net)
    assert pre.dimension == 1
    assert pre.forms[0].proportional(parse_form("X*Y*Z"))
    assert preimage_dimension(LinearSystem([parse_form("X^2"), parse_form("Y^2"), parse_form("Z^2")])) == 3
    for lam in (Scalar(1), Scalar(3), Scalar(5)):
        assert preimage_dimension(hesse_net(lam)) == 1


def test_12_aronhold_invariance_and_discriminant():
    rng = random.Random(99)
    f = parse_form("X^3+2*Y^3+Z^3+X*Y*Z+X^2*Z")
    rep = aronhold(f)
    for _ in range(5):
        g = random_g(rng)
        d = linalg.det(g)
        rg = aronhold(f.substitute(g))
        assert rg.S == d**4 * rep.S
        assert rg.T == d**6 * rep.T
    for text in SINGULAR_CUBICS:
        assert aronhold(parse_form(text)).disc_zero, text
    for text in SMOOTH_CUBICS:
        assert not aronhold(parse_form(text)).disc_zero, text


def test_13_apolar_semicontinuity():
    xyz = apolar_generators(parse_form("X*Y*Z"))
    assert xyz.get(2, 0) == 3 and xyz.get(3, 0) == 0
    fermat = apolar_generators(parse_form("X^3+Y^3+Z^3"))
    assert fermat.get(2, 0) == 3 and fermat.get(3, 0) == 2
    cusp = apolar_generators(parse_form("X^3+Y^2*Z"))
    assert cusp.get(2, 0) == 3 and cusp.get(3, 0) == 2


def test_14_smoothing_133():
    report = verify_smoothing_133(ONE, ONE)
    assert all(c["pass"] for c in report["clauses"]), report


def test_15_deformation_1r2():
    b4 = build_1r2(4, [Scalar(2)])
    assert b4["syzygy_dim"] == b4["syzygy_formula"] == 12
    b5 = build_1r2(5, [Scalar(2), Scalar(3)])
    assert b5["syzygy_dim"] == b5["syzygy_formula"] == 30
    for b in (b4, b5):
        kij = [rel for rel in b["relations"] if len(rel["name"]) == 5]
        assert kij and all(rel["printed_ok"] for rel in kij)
    for r, lams in ((4, [Scalar(2)]), (5, [Scalar(2), Scalar(3)])):
        report = verify_deformation_1r2(r, lams, ONE)
        assert all(c["pass"] for c in report["clauses"]), report
        detail = next(c["detail"] for c in report["clauses"] if c["name"] == "length-conserved")
        assert str(r + 3) in detail


def test_16_base_locus_criterion():
    free = set()
    for label, net in net_corpus().items():
        rep = classify_net(net)
        if rep.scheme_length == 0:
            free.add(label)
    assert free == BASE_POINT_FREE
    pts = rational_points(net_corpus()["8a"].forms)
    assert pts == [(ZERO, ZERO, ONE)]
