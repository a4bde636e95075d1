"""Regenerates fixture.csv: a synthetic 48-month dataset with the replication schema.

The values are made up (seeded random walks in logs); they only exercise the
pipeline. oil_income is price * production * 0.03 so the consistency check
reports a common unit ratio.
"""
import numpy as np

rng = np.random.default_rng(20250301)
T = 48
log_enc = np.log(4000.0) + np.cumsum(rng.normal(0.03, 0.35, T))
log_price = np.log(55.0) + np.cumsum(rng.normal(0.01, 0.08, T))
log_prod = np.log(650.0) + np.cumsum(rng.normal(0.005, 0.05, T))

with open("fixture.csv", "w", newline="\n") as f:
    f.write("date,encounters,oil_income,oil_price,oil_production\n")
    for t in range(T):
        year, month = 2021 + t // 12, t % 12 + 1
        enc = round(float(np.exp(log_enc[t])))
        price = round(float(np.exp(log_price[t])), 2)
        prod = round(float(np.exp(log_prod[t])), 1)
        income = price * prod * 0.03
        f.write(f"{year:04d}-{month:02d},{enc},{income!r},{price!r},{prod!r}\n")
