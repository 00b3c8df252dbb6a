"""Whole-weight sweeps with the batch driver, compared with the closed-form table."""
import json

from sl21.cli import emit, sweep

table = sweep(5, ["zero"], ["kac", "simple"])
print(json.dumps(table["summary"]))
for row in table["rows"]:
    if row["dim_h1"] or row["predicted"]:
        flag = "" if row["match"] else "   <- differs from the closed-form table"
        print(f"{row['module']:6} lam=({row['lambda'][0]},{row['lambda'][1]}) dim {row['dim_h1']}"
              f" predicted {row['predicted']}{flag}")

# nonzero characters live over the Artin-Schreier field; H^1 vanishes
table = sweep(5, ["nilp:1"], ["kac"], lam="t,t+3")
print(emit(table, "csv").decode())
