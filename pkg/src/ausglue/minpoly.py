"""Minimal polynomials of module endomorphisms, factored exactly.

Used by fincat.decompose to find Fitting splittings.  Factorization is
delegated to sympy over QQ or GF(p).
"""

from fractions import Fraction

import sympy

from .linalg import Mat, NoSolution


def _operator_matrix(a):
    f = a.src.cat.field
    return Mat.block_diag(f, [a.mats[x] for x in a.src.cat.objects])


def min_poly_coeffs(A, field):
    """Monic minimal polynomial of the square Mat A, as a low-to-high
    coefficient list over the field."""
    n = A.nrows
    if n == 0:
        return [field.zero, field.one]
    flat_len = n * n
    powers = [Mat.identity(field, n)]
    vecs = [_flatten(powers[0])]
    while True:
        nxt = powers[-1] * A
        v = _flatten(nxt)
        # does v lie in span(vecs)?
        B = Mat.from_cols(field, vecs)
        try:
            sol = B.solve(Mat.from_cols(field, [v]))
        except NoSolution:
            sol = None
        if sol is not None:
            coeffs = [-sol[i, 0] for i in range(len(vecs))]
            if field.p is not None:
                coeffs = [c % field.p for c in coeffs]
            coeffs.append(field.one)
            return coeffs
        powers.append(nxt)
        vecs.append(v)
        if len(vecs) > flat_len + 1:
            raise RuntimeError("minimal polynomial search did not terminate")


def _flatten(m):
    out = []
    for r in m.rows:
        out.extend(r)
    return out


def factor_poly(coeffs, field):
    """Factor a monic polynomial (low-to-high coeffs) into irreducibles.
    Returns a list of (coeffs_low_to_high, multiplicity)."""
    x = sympy.Symbol("x")
    if field.p is None:
        expr = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * x ** i
                   for i, c in enumerate(coeffs))
        poly = sympy.Poly(expr, x, domain="QQ")
    else:
        expr = sum(int(c) * x ** i for i, c in enumerate(coeffs))
        poly = sympy.Poly(expr, x, domain=sympy.GF(field.p))
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        cs = fac.all_coeffs()[::-1]  # low-to-high
        lead = cs[-1]
        conv = []
        for c in cs:
            if field.p is None:
                q = sympy.Rational(c, lead)
                conv.append(field(Fraction(int(q.p), int(q.q))))
            else:
                conv.append(field(int(c) * field.inv(int(lead) % field.p)))
        out.append((conv, int(mult)))
    return out


def operator_min_poly_factors(a, field):
    """Irreducible factors (with multiplicity) of the minimal polynomial of
    the module endomorphism a."""
    A = _operator_matrix(a)
    coeffs = min_poly_coeffs(A, field)
    return factor_poly(coeffs, field)
