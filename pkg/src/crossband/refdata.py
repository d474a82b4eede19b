"""Published reference values reproduced by this package.

Degree-convergence columns for the band function at (0, 0) and near the
minimizer, the refined minimizer itself, and the ground eigenvalue ladder of
the 2D crossing operator at epsilon_l = 2^(-1-l/2). Acceptance runs check
computed numbers against these, offline.
"""

# degree Q -> (rho1(0, 0), alpha column value, rho1(alpha, 0))
DEGREE_STUDY = {
    1: (0.716813090776313, 0.794, 0.549407920248045),
    2: (0.665333352584016, 0.790, 0.495300498319300),
    3: (0.660969098915948, 0.786, 0.494298816339735),
    4: (0.660960180256631, 0.786, 0.494116056132206),
    5: (0.660952197968529, 0.786, 0.494109730708665),
    6: (0.660952010967773, 0.786, 0.494109338690037),
    7: (0.660952005398424, 0.786, 0.494109316007370),
    8: (0.660952004871061, 0.786, 0.494109315475798),
    9: (0.660952004869326, 0.786, 0.494109315436505),
    10: (0.660952004868639, 0.786, 0.494109315435604),
    11: (0.660952004868671, 0.786, 0.494109315435619),
    12: (0.660952004868692, 0.786, 0.494109315435650),
}

RHO1_00 = DEGREE_STUDY[10][0]

ALPHA0 = 0.78628
S0 = 0.49410921120

# l -> kappa_1(epsilon_l)
KAPPA1 = {
    0: 0.7039,
    1: 0.6563,
    2: 0.6266,
    3: 0.6063,
    4: 0.5892,
    5: 0.5712,
    6: 0.5531,
    7: 0.5377,
    8: 0.5260,
    9: 0.5171,
    10: 0.5106,
}
