"""Show an inductive freeness certificate and a disproof by chi.

The search works by deletion: it removes hyperplanes looking for a chain
down to rank-2 base cases in which every step satisfies the
addition-deletion exponent condition.  The only way it declares NotFree
is a characteristic polynomial that fails to factor over the
nonnegative integers.
"""

from arrinv import FlatLattice, builtin, certify_inductively_free


def main():
    arr = builtin("x3")
    cert = certify_inductively_free(arr)
    print(arr.label, "->", cert.status, cert.exponents)
    print("nodes explored:", cert.nodes)
    for op, witness, detail in cert.trace:
        print("  %-12s %s" % (op, detail))

    print()
    deleted = builtin("x3_h_y")
    cert = certify_inductively_free(deleted)
    chi = FlatLattice(deleted).characteristic_polynomial()
    print(deleted.label, "->", cert.status)
    print("  chi coefficients:", chi)
    print("  witness:", cert.witness)


if __name__ == "__main__":
    main()
