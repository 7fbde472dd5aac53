"""
Sizes of Sidon sets by dimension
================================

Upper bounds next to what the constructions actually reach.  Entries for
n <= 10 are built and verified; larger ones come from closed forms and carry
a star.
"""

from sidonkit import cli

cli.main(["table", "--t-max", "25"])

# the same rows as data
rows = cli.table_rows(t_min=7, t_max=19)
for row in rows:
    built = {k: v["size"] for k, v in row.items() if isinstance(v, dict)}
    print(row["t"], row["bound"], row["classical"], built)
