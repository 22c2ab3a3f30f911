"""
Products and quotients of weight sequences
==========================================

Multiplying two weight sequences corresponds to a lower conjugate of their
associated weight functions, and dividing them to an upper conjugate.  This
walk-through computes both sides for Gevrey sequences and prints the gap.
"""

import numpy as np

from weightconj.conjugate import lower_conj_assoc, lower_conj_log, upper_conj_assoc, upper_conj_log
from weightconj.sequences import make_gevrey
from weightconj.weightfn import Associated

# Gevrey sequences p!^s, stored to depth 512
G1, G2 = make_gevrey(1.0), make_gevrey(2.0)
t = np.array([0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0])
lt = np.log(t)

# the product G1 * G2 is G3, whose associated function behaves like t^(1/3)
exact = lower_conj_assoc(G1, G2).eval_log(lt)
grid = lower_conj_log(Associated.of(G1), Associated.of(G2), lt)
print("t        omega_(G1.G2)   grid lower conjugate")
for row in zip(t, exact, grid):
    print("%-8g %-15.10f %.10f" % row)
print("max gap", np.max(np.abs(exact - grid)))

# the quotient G2 / G1 is G1 again; the upper conjugate recovers it
f, exactness = upper_conj_assoc(G2, G1)
vals, divergent = upper_conj_log(Associated.of(G2), Associated.of(G1), lt)
print()
print("quotient flagged", exactness, "| divergent points:", int(divergent.sum()))
print("max gap", np.max(np.abs(f.eval_log(lt) - vals)))
