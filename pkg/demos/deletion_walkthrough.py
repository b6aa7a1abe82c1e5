"""Walk through the deletion recursion for the rank-4 example.

Start from the free arrangement x3 (10 hyperplanes in Q^4, exponents
(1,3,3,3)), delete y = 0, and compute Psi of the deletion from the free
parent and the restriction.  The result is cross-checked against chi.
"""

from arrinv import builtin, certify_inductively_free, psi_auto, psi_free
from arrinv.stengine import psi_deletion


def main():
    arr = builtin("x3")
    cert = certify_inductively_free(arr)
    print("parent:", arr.label, "free with exponents", cert.exponents)

    h = 1  # the hyperplane y = 0
    deleted = arr.delete(h)
    restricted = arr.restrict(h)
    d = len(deleted) - len(restricted)
    print("deleting form", arr.forms[h], "-> %d hyperplanes left" %
          len(deleted))
    print("restriction has %d hyperplanes; degree shift d = %d" %
          (len(restricted), d))

    psi_parent = psi_free(cert.exponents)
    psi_restricted = psi_auto(restricted).psi
    psi = psi_deletion(psi_parent, psi_restricted, d)
    print()
    print("Psi(A';x,t) by the deletion rule:")
    for j in range(psi.degree_t + 1):
        print("  t^%d:" % j, psi.coeff_of_t(j))

    auto = psi_auto(deleted, parent_hint=arr.forms[h])
    assert auto.psi == psi
    print()
    print("psi_auto agrees; search trace:")
    for op, witness, detail in auto.method_trace:
        print("  %-9s %s  %s" % (op, witness, detail))
    print()
    print("reduced Psi(A';x,-1) =", auto.reduced)


if __name__ == "__main__":
    main()
