"""
Scanning the Dur-Cirac-Tarrach family
=====================================

Sweep the GHZ weight ``a`` with ``b = e = 0`` and ``c = d = (1 - a) / 4``
and compare the certificate with the PPT flags. The same sweep is available
from the command line as ``sep3q scan-dct --a 0:1:11``.
"""

import numpy as np

import sep3q

cfg = sep3q.SearchConfig(samples=20_000, refine_iters=100)
print("   a      C(rho)   PPT(A,B,C)")
for a in np.linspace(0, 1, 11):
    c = (1 - a) / 4
    rho = sep3q.dct_state(sep3q.DCTParams(a, 0, c, c, 0))
    cert = sep3q.c_mixed(rho, cfg).certificate
    flags = "".join("y" if f else "n" for f in sep3q.ppt_report(rho).flags.values())
    print(f"{a:5.2f}  {cert:8.4f}   {flags}")

# At a = 1/3, c = d = 1/6 the state is PPT across the B and C cuts but not
# across A. Along this line the refined certificate tracks sqrt(2) * a for
# small a; at a = 1/3 that is sqrt(2)/3.
rho = sep3q.dct_state(sep3q.DCTParams(1 / 3, 0, 1 / 6, 1 / 6, 0))
print("\na=1/3:", sep3q.c_mixed(rho).certificate, " sqrt(2)/3 =", np.sqrt(2) / 3)
