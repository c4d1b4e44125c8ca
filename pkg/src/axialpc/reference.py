"""Published reference values used by golden tests and ``repro`` checks.

Matrices are written row-major as polynomial strings in alpha, beta,
gamma, psi; columns are images of the basis a, b, c, ab, bc, ac, a(bc),
b(ac).
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import ExactMatrix
from .polynomials import ParamPoly, UniPoly

XI = "8/3*beta*gamma + 1/3*alpha - 2/3*psi"

TAU_A = [
    ["1", "8/3*alpha", "8/3*gamma", "4/3*alpha", "8/3*psi", "4/3*gamma", "4/3*psi", "8/3*alpha*gamma + beta - 2/3*psi"],
    ["0", "-1/3", "0", "-2/3", "0", "0", "0", "-1/3*gamma"],
    ["0", "0", "-1/3", "0", "0", "-2/3", "0", "alpha"],
    ["0", "-4/3", "0", "1/3", "0", "0", "0", "2/3*gamma"],
    ["0", "0", "0", "0", "-1/3", "0", "-2/3", "1/3"],
    ["0", "0", "-4/3", "0", "0", "1/3", "0", "-2*alpha"],
    ["0", "0", "0", "0", "-4/3", "0", "1/3", "-2/3"],
    ["0", "0", "0", "0", "0", "0", "0", "-1"],
]

TAU_B = [
    ["-1/3", "0", "0", "-2/3", "0", "0", "-1/3*beta", "0"],
    ["8/3*alpha", "1", "8/3*beta", "4/3*alpha", "4/3*beta", "8/3*psi", "8/3*alpha*beta + gamma - 2/3*psi", "4/3*psi"],
    ["0", "0", "-1/3", "0", "-2/3", "0", "alpha", "0"],
    ["-4/3", "0", "0", "1/3", "0", "0", "2/3*beta", "0"],
    ["0", "0", "-4/3", "0", "1/3", "0", "-2*alpha", "0"],
    ["0", "0", "0", "0", "0", "-1/3", "1/3", "-2/3"],
    ["0", "0", "0", "0", "0", "0", "-1", "0"],
    ["0", "0", "0", "0", "0", "-4/3", "-2/3", "1/3"],
]

TAU_C = [
    ["-1/3", "0", "0", "-4/3*beta", "0", "-2/3", "-beta", "1/3*beta"],
    ["0", "-1/3", "0", "-4/3*gamma", "-2/3", "0", "1/3*gamma", "-gamma"],
    ["8/3*gamma", "8/3*beta", "1", "-4/3*alpha + 8/3*psi", "4/3*beta", "4/3*gamma", XI, XI],
    ["0", "0", "0", "-1/3", "0", "0", "1/3", "1/3"],
    ["0", "-4/3", "0", "0", "1/3", "0", "-2*gamma", "2/3*gamma"],
    ["-4/3", "0", "0", "0", "0", "1/3", "2/3*beta", "-2*beta"],
    ["0", "0", "0", "4/3", "0", "0", "-1/3", "2/3"],
    ["0", "0", "0", "4/3", "0", "0", "2/3", "-1/3"],
]

# entries of TAU_C that repeat one symbol in both of the last two columns
TAU_C_FLAGGED = [(2, 6), (2, 7)]

# 3x3 product tau_a tau_b on the subalgebra basis a, b, ab
TAU_AB_3 = [
    ["(64*alpha^2 - 16*alpha - 3)/9", "24*alpha/9", "(32*alpha^2 + 4*alpha - 6)/9"],
    ["(8 - 8*alpha)/9", "-3/9", "(-4*alpha - 2)/9"],
    ["(-32*alpha - 4)/9", "-12/9", "(-16*alpha + 1)/9"],
]

# 8x8 product tau_a tau_b
TAU_AB_8 = [
    [
        "64/9*alpha^2 - 16/9*alpha - 1/3",
        "8/3*alpha",
        "64/9*alpha*beta - 8/9*gamma - 32/9*psi",
        "32/9*alpha^2 + 4/9*alpha - 2/3",
        "32/9*alpha*beta - 16/9*gamma + 8/9*psi",
        "-32/9*alpha*gamma + 64/9*alpha*psi - 4/3*beta - 4/9*gamma + 8/9*psi",
        "64/9*alpha^2*beta + 8/9*alpha*beta + 32/9*alpha*gamma - 64/9*alpha*psi - beta + 4/9*gamma - 8/9*psi",
        "8/9*alpha*gamma + 32/9*alpha*psi + 1/3*beta - 8/9*gamma - 2/9*psi",
    ],
    [
        "-8/9*alpha + 8/9", "-1/3", "-8/9*beta", "-4/9*alpha - 2/9", "-4/9*beta",
        "4/9*gamma - 8/9*psi", "-8/9*alpha*beta - 4/9*beta - 1/9*gamma + 2/9*psi", "-1/9*gamma - 4/9*psi",
    ],
    ["0", "0", "1/9", "0", "2/9", "-4/3*alpha + 2/9", "-alpha - 2/9", "1/3*alpha + 4/9"],
    [
        "-32/9*alpha - 4/9", "-4/3", "-32/9*beta", "-16/9*alpha + 1/9", "-16/9*beta",
        "-8/9*gamma - 32/9*psi", "-32/9*alpha*beta + 2/9*beta - 16/9*gamma + 8/9*psi", "2/9*gamma - 16/9*psi",
    ],
    ["0", "0", "4/9", "0", "-1/9", "-4/9", "2/3*alpha + 4/9", "1/9"],
    ["0", "0", "4/9", "0", "8/9", "8/3*alpha - 1/9", "1/9", "-2/3*alpha - 2/9"],
    ["0", "0", "16/9", "0", "-4/9", "8/9", "8/3*alpha + 1/9", "-2/9"],
    ["0", "0", "0", "0", "0", "4/3", "2/3", "-1/3"],
]

# characteristic polynomial of tau_a tau_b, coefficients of x^8 .. x^0
_C7 = "-8/9*(8*alpha^2 + 2*alpha + 1)"
_C6 = "4/27*(256*alpha^3 - 48*alpha^2 - 24*alpha + 5)"
_C5 = "-4/81*(1024*alpha^4 + 512*alpha^3 - 336*alpha^2 - 100*alpha + 34)"
_C4 = "2/81*(4096*alpha^4 - 1024*alpha^3 - 192*alpha^2 + 32*alpha - 77)"
CHARPOLY_TAU_AB = ["1", _C7, _C6, _C5, _C4, _C5, _C6, _C7, "1"]

# minimal polynomial of tau_a tau_b^tau_c at alpha = beta = gamma = -1/8, x^5 .. x^0
_Q4 = "1/81*(-1024*psi^2 + 32*psi + 101)"
_Q3 = "1/243*(-32768/3*psi^3 - 1024*psi^2 + 1120*psi + 404/3)"
MINPOLY_CONJ = ["1", _Q4, _Q3, _Q3, _Q4, "-1"]

# 9 * (tau_ab^2 x_i - x_i) at alpha = 1/4; row i belongs to basis vector i
DEFECT_X9 = [
    ["0"] * 8,
    ["0"] * 8,
    [
        "-16/3*beta + 32/3*gamma - 64/3*psi", "32/3*beta - 16/3*gamma - 64/3*psi", "-16",
        "-64/3*beta - 64/3*gamma + 128/3*psi", "8", "8", "16", "16",
    ],
    ["0"] * 8,
    [
        "-20/3*beta - 32/3*gamma + 64/3*psi", "40/3*beta - 20/3*gamma - 8/3*psi", "1",
        "-8/3*beta + 64/3*gamma - 128/3*psi", "-14", "4", "8", "8",
    ],
    [
        "-20/3*beta + 40/3*gamma - 8/3*psi", "-32/3*beta - 20/3*gamma + 64/3*psi", "1",
        "64/3*beta - 8/3*gamma - 128/3*psi", "4", "-14", "8", "8",
    ],
    [
        "-16/3*beta - 4/3*gamma + 44/3*psi", "-4/3*beta + 38/3*gamma - 64/3*psi", "1/2",
        "44/3*beta - 64/3*gamma + 56/3*psi", "2", "2", "-14", "4",
    ],
    [
        "38/3*beta - 4/3*gamma - 64/3*psi", "-4/3*beta - 16/3*gamma + 44/3*psi", "1/2",
        "-64/3*beta + 44/3*gamma + 56/3*psi", "2", "2", "4", "-14",
    ],
]

# row echelon form of the last four columns of DEFECT_X9
DEFECT_ECHELON = [
    [8, 8, 16, 16],
    [0, 18, 36, 36],
    [0, 0, 36, 36],
    [0, 0, 0, 18],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
]

# order of the 3x3 tau_ab at alpha in F_p, indexed by alpha = 0..p-1
ORDERS_F7 = [4, 7, 2, 7, 4, 3, 3]
ORDERS_F11 = [5, 11, 3, 2, 3, 11, 5, 5, 6, 6, 5]

# minimal polynomials over Q of the values of alpha for each order of the
# 3x3 tau_ab; radical rows are written as explicit polynomials
_Q = Fraction
ORDER_MINPOLYS = {
    2: ["x - 1/4"],
    3: ["x + 1/8", "x - 5/8"],
    4: ["32*x^2 - 16*x - 7"],
    5: ["(x - 7/16)^2 - 45/256", "(x - 1/16)^2 - 45/256"],
    6: ["(x - 1/4)^2 - 27/64"],
    7: ["x^3 - 3/8*x^2 - 9/32*x + 13/512", "x^3 - 9/8*x^2 + 3/32*x + 43/512"],
    8: ["((x - 1/4)^2*64/9 - 2)^2 - 2"],
    9: ["x^3 - 3/4*x^2 - 15/64*x + 19/512", "x^3 - 3/4*x^2 - 15/64*x + 73/512"],
    10: ["((x - 1/4)^2*256/9 - 10)^2 - 20"],
    11: [
        "x^5 - 7/8*x^4 - 5/16*x^3 + 127/512*x^2 + 119/4096*x - 263/32768",
        "x^5 - 13/8*x^4 + 7/16*x^3 + 145/512*x^2 - 337/4096*x - 197/32768",
    ],
    12: ["((x - 1/4)^2*64/9 - 2)^2 - 3"],
}

# alpha values (as minimal polynomials) and the order that the 8x8 tau_ab
# must divide there; the same values serve beta for tau_bc and gamma for tau_ac
STMT_ORDERS = [
    ("x + 1/8", 3),
    ("x - 1/4", 4),
    ("x^2 - 1/8*x - 11/64", 5),
    ("x - 5/8", 6),
    ("x^2 - 7/8*x + 1/64", 10),
]
STMT_WORDS = [("ab", "alpha"), ("bc", "beta"), ("ac", "gamma")]

# psi giving |tau_a tau_b^tau_c| = k at alpha = beta = gamma = -1/8, for the group-order check
PROP4_POINTS = [(_Q(5, 32), 3), (_Q(-1, 8), 4)]

# psi values (in Q(sqrt 5) coordinates [rational, sqrt5]) at alpha = beta = gamma = -1/8
# giving |tau_a tau_b^tau_c| dividing 3, 4, 5, 6
CONJ_PSI = {
    3: (_Q(5, 32), _Q(0)),
    4: (_Q(-1, 8), _Q(0)),
    5: (_Q(1, 64), _Q(-9, 64)),
    6: (_Q(-13, 32), _Q(0)),
}

# A5 obstruction: alpha = beta = -1/8, gamma = 1/16 - 3 sqrt5/16
A5_GAMMA = (_Q(1, 16), _Q(-3, 16))
A5_ANGLE = {"psi": _Q(-4, 3), "const": (_Q(1, 48), _Q(3, 48))}
A5_TARGETS = [(_Q(1, 16), _Q(3, 16)), (_Q(1, 16), _Q(-3, 16)), (_Q(7, 16), _Q(3, 16)), (_Q(7, 16), _Q(-3, 16))]
A5_PSI = [(_Q(-1, 32), _Q(-3, 32)), (_Q(-1, 32), _Q(6, 32)), (_Q(-10, 32), _Q(-3, 32)), (_Q(-5, 16), _Q(3, 16))]
A5_OUTCOMES = [(5, "exceeded"), (5, "exceeded"), (10, 8), (10, 8)]

PSL27_POINT = (_Q(1, 4), _Q(1, 4), _Q(1, 4), _Q(5, 32))
PSL27_ORDERS = (4, 4, 4, 3)

# (alpha, beta, gamma, psi) over F_5 -> (group name, order, Gram rank)
CHAR5_ROWS = [
    ((3, 4, 1, 1), "5^2:(5^2:(SL(2,5):2))", 150000, 4),
    ((3, 1, 3, 2), "5^5:A5", 187500, 5),
    ((3, 0, 4, 4), "5^5:S5", 375000, 5),
    ((3, 3, 4, 4), "PSL(2,7)", 168, 8),
    ((3, 3, 1, 0), "PSL(3,5)", 372000, 8),
    ((1, 3, 1, 0), "PSU(3,5)", 126000, 8),
    ((3, 3, 1, 1), "A6", 360, 8),
    ((3, 3, 1, 4), "A7", 2520, 8),
]

# (q, alpha, beta, gamma, psi)
PSL3_ROWS = [(7, 6, 2, 1, 5), (11, 1, 1, 3, 0), (13, 8, 10, 4, 2)]
PSU3_ROWS = [(7, 6, 2, 1, 1), (11, 1, 1, 3, 1), (13, 8, 10, 4, 1)]


def matrix(rows) -> ExactMatrix:
    return ExactMatrix([[ParamPoly.from_text(str(x)) for x in r] for r in rows])


def poly_in(coeffs_high_first, var: str) -> UniPoly:
    """UniPoly in x whose coefficients are ParamPoly, from high-first strings."""
    return UniPoly([ParamPoly.from_text(c) for c in reversed(coeffs_high_first)])


def order_minpolys(k: int) -> list[UniPoly]:
    return [UniPoly.from_text(s).monic() for s in ORDER_MINPOLYS[k]]
