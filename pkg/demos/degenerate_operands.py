"""
Finite radii and degenerate operands
====================================

Sequences with (M_p)^(1/p) bounded have associated functions that jump to
+inf at a finite radius.  The conjugates inherit that radius: the lower one
is finite below the product of radii, the upper one below their quotient.
"""

from weightconj.conjugate import lower_conj_assoc, upper_conj_assoc, upper_welldef_check
from weightconj.sequences import iota, make_gevrey, make_zero
from weightconj.verify import finite_iota_sequence
from weightconj.weightfn import Associated, Monomial

F2, F3, Z = finite_iota_sequence(2.0), finite_iota_sequence(3.0), make_zero()
print("radii:", float(iota(F2).iota), float(iota(F3).iota), float(iota(Z).iota))

# lower conjugate of radii 2 and 3: finite on [0, 6)
L = lower_conj_assoc(F2, F3)
for t in (1.0, 5.9, 6.1):
    print("lower  t=%-4g %s" % (t, float(L(t))))

# upper conjugate of radii 3 and 2: finite on [0, 1.5)
U = upper_conj_assoc(F3, F2).function
for t in (1.0, 1.4, 1.6):
    print("upper  t=%-4g %s" % (t, float(U(t))))

# a zero sequence gives 0 at the origin and +inf everywhere else
print("lower with zero operand at 0 and 1:", float(lower_conj_assoc(Z, F2)(0.0)), float(lower_conj_assoc(Z, F2)(1.0)))

# finiteness of the upper conjugate can be decided before evaluating it
print("(t^2, t):", upper_welldef_check(Monomial(0.5), Monomial(1.0)).status)
G1 = Associated.of(make_gevrey(1.0))
print("(G1, G1):", upper_welldef_check(G1, G1).status)
