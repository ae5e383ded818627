"""Reference data transcribed by hand, plus brute-force oracles that avoid
the package's own code paths (Kronecker products instead of tensordot,
cmath.exp instead of the package's root-of-unity helper)."""

import cmath
import math
from functools import reduce

import numpy as np

W = cmath.exp(2j * math.pi / 3)  # e^{2 pi i / 3}
W2 = cmath.exp(4j * math.pi / 3)  # e^{4 pi i / 3}
S3 = 1 / math.sqrt(3)

# d = 3, two parties, label (n, m) -> {ket: coefficient}.
BELL_D3 = {
    (0, 0): {"00": 1, "11": 1, "22": 1},
    (1, 0): {"00": 1, "11": W, "22": W2},
    (2, 0): {"00": 1, "11": W2, "22": W},
    (0, 1): {"01": 1, "12": 1, "20": 1},
    (1, 1): {"01": 1, "12": W, "20": W2},
    (2, 1): {"01": 1, "12": W2, "20": W},
    (0, 2): {"02": 1, "10": 1, "21": 1},
    (1, 2): {"02": 1, "10": W, "21": W2},
    (2, 2): {"02": 1, "10": W2, "21": W},
}

# d = 3, three parties, (k, (i1, i2)) -> {ket: coefficient}; the states written out explicitly.
BELL_D3_THREE = {
    (0, (0, 0)): {"000": 1, "111": 1, "222": 1},
    (0, (0, 1)): {"001": 1, "112": 1, "220": 1},
    (0, (0, 2)): {"002": 1, "110": 1, "221": 1},
    (2, (2, 2)): {"022": 1, "100": W2, "211": W},
}

# d = 3 operators, (n, m) -> rows.
WEYL_D3 = {
    (0, 0): [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    (1, 0): [[1, 0, 0], [0, W, 0], [0, 0, W2]],
    (2, 0): [[1, 0, 0], [0, W2, 0], [0, 0, W]],
    (0, 1): [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    (1, 1): [[0, 0, W2], [1, 0, 0], [0, W, 0]],
    (2, 1): [[0, 0, W], [1, 0, 0], [0, W2, 0]],
    (0, 2): [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    (1, 2): [[0, W, 0], [0, 0, W2], [1, 0, 0]],
    (2, 2): [[0, W2, 0], [0, 0, W], [1, 0, 0]],
}

# Transformation table as printed, including the duplicated "U_{20}" row label
# (seventh row); its entries belong to U_{02}.
TABLE_COLUMNS = ["U_{00}", "U_{10}", "U_{20}", "U_{01}", "U_{11}", "U_{21}", "U_{02}", "U_{12}", "U_{22}"]
TABLE_PRINTED = [
    ("U_{00}", "Psi^0_{00} Psi^1_{00} Psi^2_{00} Psi^0_{01} Psi^1_{01} Psi^2_{01} Psi^0_{02} Psi^1_{02} Psi^2_{02}"),
    ("U_{10}", "Psi^1_{00} Psi^2_{00} Psi^0_{00} Psi^1_{01} Psi^2_{01} Psi^0_{01} Psi^1_{02} Psi^2_{02} Psi^0_{02}"),
    ("U_{20}", "Psi^2_{00} Psi^0_{00} Psi^1_{00} Psi^2_{01} Psi^0_{01} Psi^1_{01} Psi^2_{02} Psi^0_{02} Psi^1_{02}"),
    ("U_{01}", "Psi^0_{10} Psi^1_{10} Psi^2_{10} Psi^0_{11} Psi^1_{11} Psi^2_{11} Psi^0_{12} Psi^1_{12} Psi^2_{12}"),
    ("U_{11}", "Psi^1_{10} Psi^2_{10} Psi^0_{10} Psi^1_{11} Psi^2_{11} Psi^0_{11} Psi^1_{12} Psi^2_{12} Psi^0_{12}"),
    ("U_{21}", "Psi^2_{10} Psi^0_{10} Psi^1_{10} Psi^2_{11} Psi^0_{11} Psi^1_{11} Psi^2_{12} Psi^0_{12} Psi^1_{12}"),
    ("U_{20}", "Psi^0_{20} Psi^1_{20} Psi^2_{20} Psi^0_{21} Psi^1_{21} Psi^2_{21} Psi^0_{22} Psi^1_{22} Psi^2_{22}"),
    ("U_{12}", "Psi^1_{20} Psi^2_{20} Psi^0_{20} Psi^1_{21} Psi^2_{21} Psi^0_{21} Psi^1_{22} Psi^2_{22} Psi^0_{22}"),
    ("U_{22}", "Psi^2_{20} Psi^0_{20} Psi^1_{20} Psi^2_{21} Psi^0_{21} Psi^1_{21} Psi^2_{22} Psi^0_{22} Psi^1_{22}"),
]
MISPRINTED_ROW = 6
CORRECTED_ROW_LABEL = "U_{02}"


def table_corrected():
    rows = [(label, cells.split()) for label, cells in TABLE_PRINTED]
    rows[MISPRINTED_ROW] = (CORRECTED_ROW_LABEL, rows[MISPRINTED_ROW][1])
    return rows


def ket_vector(terms, d, scale):
    """Dense vector from ``{"012": coeff}``; leftmost digit most significant."""
    parties = len(next(iter(terms)))
    v = np.zeros(d**parties, dtype=complex)
    for ket, c in terms.items():
        v[int(ket, d)] = c * scale
    return v


def kron_all(mats):
    return reduce(np.kron, mats)


def oracle_weyl(d, n, m):
    u = np.zeros((d, d), dtype=complex)
    for j in range(d):
        u[(j + m) % d, j] = cmath.exp(2j * math.pi * j * n / d)
    return u


def oracle_ghz_bell(d, n, shifts):
    """Bell state assembled from Kronecker products of one-hot vectors."""
    eye = np.eye(d)
    v = 0
    for j in range(d):
        factors = [eye[j]] + [eye[(j + s) % d] for s in shifts]
        v = v + cmath.exp(2j * math.pi * j * n / d) * kron_all(factors)
    return v / math.sqrt(d)


def oracle_encode(d, parties, ops):
    """(I x U_1 x ... x U_N) applied to the shared state via full Kronecker operator."""
    psi = oracle_ghz_bell(d, 0, [0] * (parties - 1))
    full = kron_all([np.eye(d)] + [oracle_weyl(d, n, m) for n, m in ops])
    return full @ psi


def oracle_identify(d, parties, vec):
    """Brute force: (n, shifts) of the Bell state with the largest overlap."""
    import itertools

    best, best_p = None, -1.0
    for shifts in itertools.product(range(d), repeat=parties - 1):
        for n in range(d):
            p = abs(np.vdot(oracle_ghz_bell(d, n, shifts), vec)) ** 2
            if p > best_p:
                best, best_p = (n, tuple(shifts)), p
    return best, best_p
