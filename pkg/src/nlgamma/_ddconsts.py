"""Double-double constants (generated by tools/gen_ddconsts.py).

Each entry is an (hi, lo) pair with hi + lo accurate to ~1e-32.
"""

EULER_GAMMA_DD = (0.5772156649015329, -4.942915152430645e-18)

# ZETA_DD[k] = zeta(k) for k = 2..64; indices 0, 1 are placeholders.
ZETA_DD = (
    (0.0, 0.0),
    (0.0, 0.0),
    (1.6449340668482264, 3.040672350398476e-17),
    (1.2020569031595942, 4.875891010379532e-17),
    (1.0823232337111381, 4.748512042855365e-17),
    (1.03692775514337, -6.276789020377768e-17),
    (1.0173430619844492, -9.758599166441531e-17),
    (1.008349277381923, -9.91714730971456e-17),
    (1.0040773561979444, -2.0171748307737844e-17),
    (1.0020083928260821, 9.730706638450415e-17),
    (1.000994575127818, 1.0936913170647002e-16),
    (1.0004941886041194, 3.6892951619089984e-17),
    (1.000246086553308, 3.556599124383171e-18),
    (1.0001227133475785, -2.8892675017121097e-17),
    (1.0000612481350588, -1.0638574497072141e-16),
    (1.000030588236307, 4.844379113994946e-17),
    (1.0000152822594086, 4.081759142430904e-17),
    (1.0000076371976379, 4.445368846945116e-17),
    (1.000003817293265, -4.059356892188128e-17),
    (1.0000019082127165, 4.7953030346953085e-17),
    (1.0000009539620338, 6.109003488414959e-17),
    (1.0000004769329869, -9.364445234503575e-17),
    (1.0000002384505027, 5.127581332745354e-17),
    (1.000000119219926, 3.3864704218068844e-17),
    (1.000000059608189, -1.1495873729944047e-19),
    (1.0000000298035034, 7.1703371444536e-17),
    (1.0000000149015549, -5.056714709585073e-17),
    (1.0000000074507118, -3.5449909326522075e-17),
    (1.000000003725334, -1.646062723884849e-17),
    (1.0000000018626598, -8.066183307691242e-17),
    (1.0000000009313275, -2.7177118683442012e-17),
    (1.0000000004656628, 6.488340467426726e-17),
    (1.000000000232831, 9.562457107023127e-17),
    (1.0000000001164155, -4.214453454172514e-17),
    (1.0000000000582077, 5.996555960166587e-17),
    (1.0000000000291038, 1.9988237293256014e-17),
    (1.000000000014552, 6.662675132429289e-18),
    (1.000000000007276, 2.2208740551112005e-18),
    (1.000000000003638, 7.40286938238577e-19),
    (1.000000000001819, 2.4676120947175475e-19),
    (1.0000000000009095, 8.225346069033828e-20),
    (1.0000000000004547, 2.741775128372239e-20),
    (1.0000000000002274, 9.139233192043922e-21),
    (1.0000000000001137, 3.0464067551955306e-21),
    (1.0000000000000568, 1.0154678412230818e-21),
    (1.0000000000000284, 3.384890111197058e-22),
    (1.0000000000000142, 1.1282960305241183e-22),
    (1.000000000000007, 3.760985085416611e-23),
    (1.0000000000000036, 1.2536612743942848e-23),
    (1.0000000000000018, 4.1788698627955386e-24),
    (1.0000000000000009, 1.3929563579707038e-24),
    (1.0000000000000004, 4.643187202503244e-25),
    (1.0000000000000002, 1.5477289031520569e-25),
    (1.0000000000000002, -1.1102230241092469e-16),
    (1.0, 5.551115124845481e-17),
    (1.0, 2.775557562136124e-17),
    (1.0, 1.3877787809725232e-17),
    (1.0, 6.938893904544153e-18),
    (1.0, 3.4694469521659225e-18),
    (1.0, 1.7347234760475765e-18),
    (1.0, 8.673617380119933e-19),
    (1.0, 4.336808690020651e-19),
    (1.0, 2.16840434499722e-19),
    (1.0, 1.0842021724942414e-19),
    (1.0, 5.421010862456646e-20),
)
