"""Small sparse multivariate polynomials over Q.

Used for residue polynomials on a restricted hyperplane: products of
linear forms, reduction modulo a linear form, and exact division by a
linear form.  Keys are exponent tuples, values nonzero Fractions.
"""

from __future__ import annotations

from fractions import Fraction


class MultiPoly:
    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars, coeffs=None):
        self.nvars = nvars
        clean = {}
        if coeffs:
            for m, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[m] = c
        self.coeffs = clean

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {tuple([0] * nvars): Fraction(c)})

    @classmethod
    def from_linear(cls, coefs):
        """Linear form sum(coefs[i] * v_i)."""
        n = len(coefs)
        coeffs = {}
        for i, c in enumerate(coefs):
            if c:
                m = [0] * n
                m[i] = 1
                coeffs[tuple(m)] = Fraction(c)
        return cls(n, coeffs)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return MultiPoly(self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return MultiPoly(self.nvars,
                         {m: v * c for m, v in self.coeffs.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultiPoly(self.nvars, out)

    def degree(self):
        return max((sum(m) for m in self.coeffs), default=-1)

    def substitute_var(self, k, combo):
        """Substitute v_k := sum(combo[i] * v_i) (combo[k] must be 0)."""
        repl = MultiPoly.from_linear(combo)
        out = MultiPoly(self.nvars, {})
        powers = {0: MultiPoly.constant(self.nvars, 1)}
        for m, c in self.coeffs.items():
            e = m[k]
            if e not in powers:
                p = powers[max(powers)]
                for _ in range(max(powers), e):
                    p = p * repl
                    powers[max(powers) + 1] = p
            rest = list(m)
            rest[k] = 0
            term = MultiPoly(self.nvars, {tuple(rest): c}) * powers[e]
            out = out + term
        return out

    def divide_by_linear(self, coefs):
        """Exact division by a linear form; returns None if not divisible."""
        k = next((i for i, c in enumerate(coefs) if c), None)
        if k is None:
            raise ZeroDivisionError("division by zero form")
        lead = Fraction(coefs[k])
        divisor = MultiPoly.from_linear(coefs)
        rem = self
        quot = MultiPoly(self.nvars, {})
        while not rem.is_zero():
            # pick a term with maximal exponent in v_k
            m = max(rem.coeffs, key=lambda mm: (mm[k], mm))
            if m[k] == 0:
                return None
            qm = list(m)
            qm[k] -= 1
            qc = rem.coeffs[m] / lead
            qterm = MultiPoly(self.nvars, {tuple(qm): qc})
            quot = quot + qterm
            rem = rem - qterm * divisor
        return quot

    def __eq__(self, other):
        return (isinstance(other, MultiPoly)
                and self.nvars == other.nvars
                and self.coeffs == other.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            mono = "*".join("v%d^%d" % (i, e) for i, e in enumerate(m) if e)
            parts.append("%s%s" % (c, "*" + mono if mono else ""))
        return " + ".join(parts)
