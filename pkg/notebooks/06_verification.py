"""
Checking closed forms against brute force
=========================================

Every closed form is paired with an enumeration oracle.  The same runs are
available from the shell as ``regint verify NAME --max-n N``.
"""

from regint import CATALOG, run_identity

for name in ("prop4_power_sums", "prop9_menon", "prop13_gamma", "prop15_sin_cos"):
    report = run_identity(name, max_n=200)
    print(f"{name:20s} {report.status}  cases={report.cases}  worst error={report.error}")

print(len(CATALOG), "identities in the catalog")
