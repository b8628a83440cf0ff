"""Embedded golden data: the 15-orbit normal-form corpus, the pencil
normal forms, the expected discriminant cubics and polar nets, and every
one-parameter specialization family the verifier ships with."""

from __future__ import annotations

from .classify import FamilySpec
from .forms import parse_form
from .scalar import Scalar
from .spaces import LinearSystem

# --------------------------------------------------------------------------
# normal forms
# --------------------------------------------------------------------------

NET_CORPUS_STRINGS = {
    "8a": ("X*Y", "X^2+Y*Z", "Y^2+X*Z"),
    "8b": ("X^2+Y*Z", "Y^2+X*Z", "Z^2+X*Y"),  # Hesse net at lambda = 1
    "8c": ("Z^2", "X^2-Y*Z", "Y^2-X*Z"),
    "7a": ("X^2+Y*Z", "X*Y", "X*Z"),
    "7b": ("X*Y", "X^2+Y*Z", "Z^2"),
    "7c": ("X^2", "Y^2", "X*Y+Z^2"),
    "6a": ("X*Y", "X*Z", "Y*Z"),
    "6b": ("X*Y", "X^2", "Z^2+Y*Z"),
    "6c": ("X*Y", "X^2+Y*Z", "X^2+Y^2"),
    "6d": ("X^2", "Y^2", "Z^2"),
    "5a": ("X*Y", "X*Z", "Z^2"),
    "5b": ("Y^2", "X*Y", "Z^2"),
    "4": ("Y^2", "X*Y", "Y*Z-X^2"),
    "2a": ("X^2", "X*Y", "X*Z"),
    "2b": ("X^2", "Y^2", "(X+Y)^2"),
}

PENCIL_CORPUS_STRINGS = {
    "a": ("X^2-Z^2", "Y^2-Z^2"),
    "b": ("X^2-Z^2", "Z*Y"),
    "c": ("X*Y", "Z^2"),
    "d": ("X*Y", "X*Z-Y^2"),
    "e": ("X^2", "X*Z-Y^2"),
    "f": ("X*Y", "X*Z"),
    "g": ("X^2", "X*Y"),
    "h": ("X^2", "Y^2"),
}

ORBIT_DIMENSIONS = {
    "8a": 8, "8b": 8, "8c": 8,
    "7a": 7, "7b": 7, "7c": 7,
    "6a": 6, "6b": 6, "6c": 6, "6d": 6,
    "5a": 5, "5b": 5,
    "4": 4,
    "2a": 2, "2b": 2,
}

# orbits whose nets are base-point free (the regular-map classes)
BASE_POINT_FREE = {"8b", "8c", "7c", "6d"}

# expected discriminant cubics, up to scalar and permutation of (A, B, C);
# the 8b entry depends on the Hesse parameter
DISCRIMINANT_TABLE = {
    "8a": "B^3+C^3-A*B*C",
    "8c": "B^3+C^3-A*B*C",
    "7a": "A*(A^2-B*C)",
    "7b": "A^3+B^2*C",
    "7c": "A*(A^2-B*C)",
    "6a": "A*B*C",
    "6b": "B*(A*B+C^2)",
    "6c": "B*C^2",
    "6d": "A*B*C",
    "5a": "A^2*(A+C)",
    "5b": "B*C^2",
    "4": "A^3",
}


# bases (of the same spaces as the corpus) whose ordered generators
# reproduce the tabulated discriminant equations on the nose
DISCRIMINANT_BASES = {
    "8c": ("Z^2", "4*X^2-4*Y*Z", "4*Y^2-4*X*Z"),
    "7c": ("X^2", "Y^2", "2*X*Y+2*Z^2"),
    "6c": ("X*Y", "X^2+Y^2", "Y*Z-Y^2"),
    "5a": ("X*Y+Z^2", "X*Z", "Z^2"),
}


def discriminant_presentation(label):
    """The net of the given orbit, in the basis the discriminant table uses."""
    strings = DISCRIMINANT_BASES.get(label, NET_CORPUS_STRINGS[label])
    return LinearSystem([parse_form(s) for s in strings])


def discriminant_8b(lam):
    lam = lam if isinstance(lam, Scalar) else Scalar(lam)
    return parse_form(
        "m^2*(A^3+B^3+C^3)-(m^3+4)*A*B*C", vars=("A", "B", "C"), params={"m": lam}
    )


# the seven polar cubics and the orbits of their Jacobian nets
POLAR_TABLE = (
    ("X^3+Y^3+3*X*Y*Z", "8a"),
    ("X^3+Y^3+Z^3+3*X*Y*Z", "8b"),
    ("X^3+3*X*Y*Z", "7a"),
    ("X*Y*Z", "6a"),
    ("X^3+Y^3+Z^3", "6d"),
    ("X*Y^2+Z^3", "5b"),
    ("X^2*Y+Y^2*Z", "4"),
)


def net_corpus():
    return {k: LinearSystem([parse_form(s) for s in v]) for k, v in NET_CORPUS_STRINGS.items()}


def pencil_corpus():
    return {k: LinearSystem([parse_form(s) for s in v]) for k, v in PENCIL_CORPUS_STRINGS.items()}


# --------------------------------------------------------------------------
# specialization families
# --------------------------------------------------------------------------

PENCIL_FAMILIES = (
    FamilySpec("pencil-a-b", "pencil", "t",
               ("(X-Z)*(X+t*Z)", "Y^2-X^2"), "a", "b", excluded=(Scalar(-1),)),
    FamilySpec("pencil-b-c", "pencil", "t", ("X^2-t*Z^2", "Z*Y"), "b", "c"),
    FamilySpec("pencil-b-d", "pencil", "t", ("Z*(X+t*Y)", "Z*Y-X^2"), "b", "d"),
    FamilySpec("pencil-c-e", "pencil", "t", ("Y*Z-X^2-t*Z^2", "Y^2"), "c", "e"),
    FamilySpec("pencil-d-e", "pencil", "t", ("Y*(t*X+Y)", "Y*Z-X^2"), "d", "e"),
    FamilySpec("pencil-e-h", "pencil", "t", ("X^2", "t*X*Z-Y^2"), "e", "h"),
    FamilySpec("pencil-d-f", "pencil", "t", ("X*Y", "Y*Z-t*X^2"), "d", "f"),
    FamilySpec("pencil-h-g", "pencil", "t", ("X^2", "X*Y+t*Y^2"), "h", "g"),
    FamilySpec("pencil-f-g", "pencil", "t", ("X*Y", "X*(t*Z+X)"), "f", "g"),
)

NET_FAMILIES = (
    FamilySpec("net-8a-7a", "net", "m",
               ("X*Y", "Z*Y-m*X^2", "Z*X-Y^2"), "8a", "7a"),
    FamilySpec("net-8c-7c", "net", "m",
               ("X^2+2*m*Y*Z", "Y^2+2*X*Z", "Z^2"), "8c", "7c"),
    FamilySpec("net-8b-7b", "net", "b",
               ("Z*X", "Y*Z-X^2", "(Y-b*Z)*(Y-4*b*Z)"), "8b", "7b",
               j_constant=True),
    FamilySpec("net-7a-6a", "net", "m",
               ("X*Y", "Z*Y", "Z*X-m*Y^2"), "7a", "6a"),
    FamilySpec("net-7a-6b", "net", "m",
               ("X*(X-Z)", "Y*(Y-m*X)", "Y*Z"), "7a", "6b"),
    FamilySpec("net-7b-6b", "net", "m",
               ("X*Y", "Z^2", "(Y+X)*Z-m*X^2"), "7b", "6b"),
    FamilySpec("net-7c-6b", "net", "m",
               ("X*(X-Z)", "(Y-m*Z)^2", "Y*Z"), "7c", "6b"),
    FamilySpec("net-6a-5a", "net", "a",
               ("X^2-a*X*Z", "X*Y", "Y*Z"), "6a", "5a"),
    FamilySpec("net-6b-5a", "net", "a",
               ("Y^2", "(X-a*Z)*(a*X-Z)", "Y*Z"), "6b", "5a",
               excluded=(Scalar(1), Scalar(-1))),
    FamilySpec("net-6c-5a", "net", "a",
               ("X^2", "Y*(X-a*Y)", "Y*Z"), "6c", "5a"),
    FamilySpec("net-5a-4", "net", "a",
               ("Y*Z-X^2", "(Y-a*X)*X", "(Y-a*X)*Y"), "5a", "4"),
    FamilySpec("net-4-2a", "net", "a",
               ("Y^2", "Y*Z+a*X^2", "X*Y"), "4", "2a"),
)

CUBIC_FAMILIES = (
    FamilySpec("cubic-smooth-cusp", "cubic", "b",
               ("Y^2*Z-X*(X-b^2*Z)*(X-2*b^2*Z)",), "Smooth", "Cusp",
               j_constant=True),
    FamilySpec("cubic-node-cusp", "cubic", "a",
               ("X^3+Y*(Y+a*X)*Z",), "Node", "Cusp"),
    FamilySpec("cubic-node-secant", "cubic", "a",
               ("Z*X*Y+a*X^3+X^2*Y+Y^3",), "Node", "ConicSecant"),
    FamilySpec("cubic-secant-tangent", "cubic", "b",
               ("(X^2+Y^2-Z^2)*(Y-b*Z)",), "ConicSecant", "ConicTangent",
               special_value=Scalar(1), excluded=(Scalar(-1),)),
    FamilySpec("cubic-cusp-tangent", "cubic", "a",
               ("a*X^3+Y*X^2+Y^2*Z",), "Cusp", "ConicTangent"),
    FamilySpec("cubic-secant-triangle", "cubic", "a",
               ("Y*(X^2+a*Y^2-Z^2)",), "ConicSecant", "Triangle"),
    FamilySpec("cubic-tangent-concurrent", "cubic", "a",
               ("(X^2-Y^2-a*Y*Z)*Y",), "ConicTangent", "ConcurrentLines"),
    FamilySpec("cubic-triangle-concurrent", "cubic", "a",
               ("X*Y*(X+Y+a*Z)",), "Triangle", "ConcurrentLines"),
    FamilySpec("cubic-concurrent-doubleline", "cubic", "a",
               ("X*Y*(X+a*Y)",), "ConcurrentLines", "DoubleLinePlusLine"),
    FamilySpec("cubic-doubleline-tripleline", "cubic", "a",
               ("X^2*(X+a*Y)",), "DoubleLinePlusLine", "TripleLine"),
)

DEFAULT_SAMPLES = (Scalar(1), Scalar(2), Scalar(3))


def family_samples(spec, count=3):
    """The first `count` positive integers usable as generic samples."""
    out = []
    v = 0
    while len(out) < count:
        v += 1
        s = Scalar(v)
        if s == spec.special_value or s in spec.excluded:
            continue
        out.append(s)
    return tuple(out)


def all_families():
    return PENCIL_FAMILIES + NET_FAMILIES + CUBIC_FAMILIES


def same_up_to_permutation(f, g):
    """True when f is proportional to g after some permutation of the
    three variables."""
    from itertools import permutations

    one, zero = Scalar(1), Scalar(0)
    for perm in permutations(range(3)):
        mat = [[one if perm[i] == j else zero for j in range(3)] for i in range(3)]
        if f.substitute(mat).proportional(g):
            return True
    return False
