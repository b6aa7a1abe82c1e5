"""Recompute Psi from raw kernel dimensions and compare with the engine.

The oracle knows nothing about freeness or recursions: it assembles the
divisibility conditions defining D^p(A) degree by degree and computes
exact kernel dimensions.  Summing Hilb(D^p)(x) (t(x-1)-1)^p as a
truncated series and spotting the zero tail reconstructs Psi.
"""

from arrinv import builtin, hilbert_table, psi_auto
from arrinv.oracle import promote_to_polynomial, psi_truncated_from_table


def main():
    for name in ("boolean2", "boolean3", "three_generic"):
        arr = builtin(name)
        table = hilbert_table(arr)
        print("%s: dims[1] =" % name, table.dims[1])
        series = psi_truncated_from_table(table)
        poly = promote_to_polynomial(series)
        engine = psi_auto(arr).psi
        status = "MATCH" if poly == engine else "MISMATCH"
        print("  oracle Psi:", poly)
        print("  engine Psi:", engine, "->", status)
        assert poly == engine


if __name__ == "__main__":
    main()
