"""
Counting and certifying every datum in a range
==============================================

The correspondence is a finite statement for each matrix size, so it
can be certified by sheer enumeration.  This sweep covers every datum
with f <= 3, r <= 3 and m <= 5; the library's own acceptance gate runs
the same loop up to f <= 6, r <= 4, m <= 7.
"""

from embtypes import VerifyRange, count_data, enumerate_data, run_verify

# Closed-form counts agree with the enumeration before anything runs.
for f, r, m in ((2, 1, 3), (2, 2, 4), (3, 2, 5)):
    pool = list(enumerate_data(f, r, m))
    print(f"M({f},{r};{m}) holds {count_data(f, r, m)} data, enumerated {len(pool)}")

# A few members of the last pool, in enumeration order.
for d in pool[:4]:
    print("  ", d.rows)

# The sweep prints one line per configuration and a total; exit code 0
# means every datum passed all three checks.
rng = VerifyRange(f_max=3, r_max=3, m_max=5, fr_max=9)
code = run_verify(rng)
print("exit code", code)
