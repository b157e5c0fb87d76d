"""Chebyshev tables for the Fresnel auxiliary functions (generated).

Produced by scripts/gen_fresnel_coeffs.py; do not edit by hand.
Max fit error over x in [3.0, 2000]: 3.244e-16.
"""

XCUT = 3.0
TMAX = XCUT ** -4.0

# x*f(x) as Chebyshev series in u = 2*x**-4/TMAX - 1
F_CHEB = (
    0.49783946845308236,
    -0.0021136232185952923,
    4.452138221746994e-05,
    -2.1899688935406534e-06,
    1.7465970269849133e-07,
    -1.9148118222104352e-08,
    2.6357169903337303e-09,
    -4.3094703657823023e-10,
    8.068834614494978e-11,
    -1.6864898181864812e-11,
    3.862661304147959e-12,
    -9.560153828690095e-13,
    2.529368494490929e-13,
    -7.094351710511369e-14,
    2.0935699200007868e-14,
    -6.477550260773146e-15,
    2.076431771370922e-15,
)

# x**3*g(x) as Chebyshev series in the same variable
G_CHEB = (
    0.2448586659449789,
    -0.004951701735231856,
    0.00017653147349519426,
    -1.1769917568992802e-05,
    1.154932468707876e-06,
    -1.4776788123982425e-07,
    2.2976614578342063e-08,
    -4.152062945003182e-09,
    8.459995660204828e-10,
    -1.9022259926271176e-10,
    4.6455915841305666e-11,
    -1.2174523539761794e-11,
    3.3915179241713788e-12,
    -9.967428400600395e-13,
    3.0718530526416575e-13,
    -9.874696004700803e-14,
    3.300025930168381e-14,
)
