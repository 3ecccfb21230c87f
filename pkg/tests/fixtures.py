"""Reference values frozen from ``oracles.py`` before the production build."""

# f = x^2 + 1/(1+x^2), v = 1; LAPACK on L = 12, n = 20001
E_STAR = 1.7468177366211863

# A(x) - f(x) for the same shape, fbar found by root-finding the coupling
RECONSTRUCTION_GAP = {
    0.5: 0.041665975137060274,
    1.0: 0.1543964259305881,
    2.0: 0.237623307069029,
    3.0: 0.22607867385961455,
}
