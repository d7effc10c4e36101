# Regression constants from independent mpmath evaluations at 40-80 digits
# (direct quadrature of the defining integrals, mpmath.zeta, mpmath.beta).
# The generating script lives outside the package; nothing below was
# produced by zetaint itself.

FROZEN = {
    "I(2.5,3.5)": 0.33659490290036687,
    "I(1.5+2i,1.5-2i)": 0.3234653380909917,
    "I(1.3+0.5i,2.4)": (0.7059645394730477 - 1.0509874770098269j),
    "J(2.5,3.5)": 0.20986627105491082,
    "J(0.5,0.2)": 2.4179733332763123,
    "J(1.7,4.5)": 0.3522615177658034,
    "I(2,2)": 1.0754439103502031,
    "I(3,3)": 0.3203100688250227,
    "I(4,4)": 0.17616236041259228,
    "I(5,5)": 0.12246447963157665,
    "I(6,6)": 0.09521772683173847,
    "J(2,2)": 0.9320034665178336,
    "J(3,3)": 0.19323020997922682,
    "J(4,4)": 0.06514067126212505,
    "J(5,5)": 0.025923896644926767,
    "J(6,6)": 0.011108966103329856,
    # direct quadrature of the film integral at alpha = 2, 1.5 (80 digits)
    "K(2)": 11.48989900377805,
    "K(1.5)": 1.9790747801068842,
}

C1 = {
    0.1: 5.322071439561687e-05,
    0.2: 5.1154083293064135e-05,
    0.3: 4.711649419691503e-05,
    0.4: 3.960665476166445e-05,
    0.5: 2.612515908280252e-05,
    0.6: 2.3677011586768953e-06,
    0.7: -3.9352361290257665e-05,
    0.8: -0.00011336820841088747,
    0.9: -0.0002478982634364486,
}

C0 = {
    0.0: -0.0068538919452009435,
    0.1: -0.007672943197898157,
    0.2: -0.008609527480351757,
    0.3: -0.00968372938722541,
    0.4: -0.01091970373771124,
    0.5: -0.01234665023636698,
    0.6: -0.014000062726951293,
    0.7: -0.01592334359517031,
    0.8: -0.018169908645380484,
    0.9: -0.020805958007566176,
}

HURWITZ = {
    (1.5 + 2j, 0.3): (-4.247818253799582 + 3.528638533246656j),
    (-2.5 + 1j, 1.7): (-0.38892570370568214 - 0.1239905181267591j),
}

ZETA_PRIME = {
    3.0: -0.19812624288563685,
    0.5 + 14j: (0.7482336961200863 + 0.20443653378499743j),
}


def rel_err(got, want) -> float:
    got, want = complex(got), complex(want)
    return abs(got - want) / max(abs(want), 1e-300)


def close(got, want, tol: float) -> bool:
    """``|got - want| <= tol * (1 + |want|)``, the comparison used by the suites."""
    return abs(complex(got) - complex(want)) <= tol * (1.0 + abs(complex(want)))
