"""Sparse exact polynomials in up to three variables.

Coefficients are Fraction, exponents are tuples with one slot per variable.
The toolkit covers what plane-curve work needs: arithmetic, exact division,
multivariate gcd (primitive remainder sequences), Sylvester resultants,
Sturm sequences, and a complete decision procedure for "do these bivariate
polynomials share a complex zero", built from resultants plus gcd analysis
on the candidate locus (splitting the modulus whenever a zero divisor turns
up, so no factorization is ever required).
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    """Immutable sparse polynomial over Q in at most three named variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        if len(variables) > 3:
            raise ValueError("at most three variables are supported")
        clean = {}
        for exponents, coefficient in terms.items():
            if len(exponents) != len(variables):
                raise ValueError("exponent length does not match variable count")
            coefficient = Fraction(coefficient)
            if coefficient != 0:
                clean[tuple(exponents)] = coefficient
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def const(cls, variables, value):
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def gens(cls, variables):
        """The variables themselves as polynomials, in order."""
        variables = tuple(variables)
        out = []
        for i in range(len(variables)):
            exponents = [0] * len(variables)
            exponents[i] = 1
            out.append(cls(variables, {tuple(exponents): Fraction(1)}))
        return tuple(out)

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def _var_index(self, var):
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}") from None

    def degree(self, var=None):
        """Total degree, or degree in one variable; zero polynomial has -1."""
        if self.is_zero:
            return -1
        if var is None:
            return max(sum(exps) for exps in self.terms)
        idx = self._var_index(var)
        return max(exps[idx] for exps in self.terms)

    def coefficient(self, var, power):
        """Coefficient of var**power, as a polynomial in the same ring."""
        idx = self._var_index(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[idx] == power:
                reduced = list(exps)
                reduced[idx] = 0
                terms[tuple(reduced)] = c
        return Poly(self.variables, terms)

    def as_univariate(self, var):
        """Coefficient list in ``var``, ascending, entries in the same ring."""
        deg = self.degree(var)
        if deg < 0:
            return []
        return [self.coefficient(var, k) for k in range(deg + 1)]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero:
            return "0"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.variables, exps)
                if e > 0
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.variables, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return Poly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Poly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(self.variables, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def subs(self, var, value):
        """Substitute a Fraction/int or a polynomial of the same ring for var."""
        idx = self._var_index(var)
        if isinstance(value, (int, Fraction)):
            value = Poly.const(self.variables, value)
        elif value.variables != self.variables:
            raise ValueError("substitution value lives in a different ring")
        result = Poly.zero(self.variables)
        powers = {0: Poly.const(self.variables, 1)}
        for exps, c in sorted(self.terms.items()):
            k = exps[idx]
            if k not in powers:
                powers[k] = value**k
            rest = list(exps)
            rest[idx] = 0
            result = result + Poly(self.variables, {tuple(rest): c}) * powers[k]
        return result

    def derivative(self, var):
        idx = self._var_index(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[idx] == 0:
                continue
            reduced = list(exps)
            reduced[idx] -= 1
            terms[tuple(reduced)] = c * exps[idx]
        return Poly(self.variables, terms)

    def drop_variable(self, var):
        """Remove a variable the polynomial does not involve."""
        idx = self._var_index(var)
        if self.degree(var) > 0:
            raise ValueError(f"polynomial still involves {var!r}")
        remaining = tuple(v for v in self.variables if v != var)
        terms = {
            tuple(e for i, e in enumerate(exps) if i != idx): c
            for exps, c in self.terms.items()
        }
        return Poly(remaining, terms)

    def is_homogeneous(self, degree):
        return all(sum(exps) == degree for exps in self.terms)


# -- exact division and gcd ------------------------------------------------


def _lex_leading(poly):
    exps = max(poly.terms)
    return exps, poly.terms[exps]


def divexact(f, g):
    """Exact division f/g; raises ValueError when g does not divide f."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero:
        return f
    if f.variables != g.variables:
        raise ValueError("polynomials live in different rings")
    quotient = {}
    remainder = f
    g_exps, g_coeff = _lex_leading(g)
    while not remainder.is_zero:
        r_exps, r_coeff = _lex_leading(remainder)
        q_exps = tuple(a - b for a, b in zip(r_exps, g_exps))
        if any(e < 0 for e in q_exps):
            raise ValueError("division is not exact")
        q_coeff = r_coeff / g_coeff
        quotient[q_exps] = quotient.get(q_exps, Fraction(0)) + q_coeff
        remainder = remainder - Poly(f.variables, {q_exps: q_coeff}) * g
    return Poly(f.variables, quotient)


def _int_normalize(poly):
    """Scale to integer-primitive coefficients with positive lex-leading one."""
    if poly.is_zero:
        return poly
    from math import gcd as int_gcd

    denominator = 1
    for c in poly.terms.values():
        denominator = denominator * c.denominator // int_gcd(denominator, c.denominator)
    numerators = [c.numerator * (denominator // c.denominator) for c in poly.terms.values()]
    content = 0
    for n in numerators:
        content = int_gcd(content, abs(n))
    scale = Fraction(denominator, content)
    if _lex_leading(poly)[1] < 0:
        scale = -scale
    return poly * scale


def _active_vars(f, g):
    out = []
    for v in f.variables:
        if f.degree(v) > 0 or g.degree(v) > 0:
            out.append(v)
    return out


def _pseudo_rem(f, g, var):
    """Pseudo-remainder of f by g with respect to var (prem)."""
    n, m = f.degree(var), g.degree(var)
    lead_g = g.coefficient(var, m)
    v = Poly(f.variables, {tuple(1 if w == var else 0 for w in f.variables): Fraction(1)})
    r = f
    while not r.is_zero and r.degree(var) >= m:
        k = r.degree(var)
        lead_r = r.coefficient(var, k)
        r = r * lead_g - g * lead_r * v ** (k - m)
    return r


def poly_gcd(f, g):
    """Greatest common divisor, integer-primitive with positive leading sign."""
    if f.variables != g.variables:
        raise ValueError("polynomials live in different rings")
    if f.is_zero:
        return _int_normalize(g)
    if g.is_zero:
        return _int_normalize(f)
    active = _active_vars(f, g)
    if not active:
        return Poly.const(f.variables, 1)
    var = active[0]
    if len(active) == 1:
        return _univariate_gcd(f, g, var)
    return _prs_gcd(f, g, var)


def _univariate_gcd(f, g, var):
    a, b = f, g
    while not b.is_zero:
        a, b = b, _poly_rem(a, b, var)
    return _int_normalize(a)


def _poly_rem(f, g, var):
    """Remainder of univariate division over Q (leading coefficients invertible)."""
    m = g.degree(var)
    lead_g = g.coefficient(var, m).constant_value()
    v = Poly(f.variables, {tuple(1 if w == var else 0 for w in f.variables): Fraction(1)})
    r = f
    while not r.is_zero and r.degree(var) >= m:
        k = r.degree(var)
        lead_r = r.coefficient(var, k).constant_value()
        r = r - g * (lead_r / lead_g) * v ** (k - m)
    return r


def _content_wrt(poly, var):
    """Gcd of the coefficient polynomials with respect to var."""
    coeffs = [c for c in poly.as_univariate(var) if not c.is_zero]
    content = coeffs[0]
    for c in coeffs[1:]:
        content = poly_gcd(content, c)
        if content.is_constant:
            break
    return content


def _prs_gcd(f, g, var):
    """Primitive pseudo-remainder sequence gcd with main variable var."""
    content = poly_gcd(_content_wrt(f, var), _content_wrt(g, var))
    a = divexact(f, _content_wrt(f, var))
    b = divexact(g, _content_wrt(g, var))
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while not b.is_zero and b.degree(var) > 0:
        r = _pseudo_rem(a, b, var)
        if not r.is_zero:
            r = divexact(r, _content_wrt(r, var))
        a, b = b, r
    if b.is_zero:
        return _int_normalize(a * content)
    # the sequence ended in a nonzero polynomial free of var, so the primitive
    # parts are coprime in the main variable and only the content survives
    return _int_normalize(content)


def gcd_list(polys):
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        raise ValueError("gcd of an empty family")
    acc = polys[0]
    for p in polys[1:]:
        acc = poly_gcd(acc, p)
        if acc.is_constant:
            break
    return _int_normalize(acc)


# -- resultants --------------------------------------------------------------


def resultant(f, g, var):
    """Sylvester resultant of f and g with respect to var.

    Zero exactly when f and g share a factor involving var.  Entries of the
    Sylvester matrix are polynomials in the remaining variables; the
    determinant is taken with fraction-free Bareiss elimination, whose
    divisions are exact in the polynomial ring.
    """
    if f.variables != g.variables:
        raise ValueError("polynomials live in different rings")
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of a zero polynomial")
    n, m = f.degree(var), g.degree(var)
    if n <= 0 and m <= 0:
        raise ValueError(f"variable {var!r} occurs in neither polynomial")
    if n == 0:
        return f**m
    if m == 0:
        return g**n
    fc = f.as_univariate(var)
    gc = g.as_univariate(var)
    size = n + m
    zero = Poly.zero(f.variables)
    rows = []
    for shift in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[shift + k] = c
        rows.append(row)
    for shift in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[shift + k] = c
        rows.append(row)
    return _poly_determinant(rows)


def _poly_determinant(rows):
    """Bareiss determinant of a square matrix of polynomials."""
    n = len(rows)
    work = [list(r) for r in rows]
    variables = work[0][0].variables
    sign = 1
    prev = Poly.const(variables, 1)
    for k in range(n - 1):
        if work[k][k].is_zero:
            swap = next((r for r in range(k + 1, n) if not work[r][k].is_zero), None)
            if swap is None:
                return Poly.zero(variables)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = divexact(work[i][j] * pivot - work[i][k] * work[k][j], prev)
        prev = pivot
    result = work[n - 1][n - 1]
    return -result if sign < 0 else result


# -- univariate real root counting (Sturm) ----------------------------------


def _uni_coeffs(f, var):
    return [c.constant_value() for c in f.as_univariate(var)]


def _horner(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _the_variable(f):
    active = [v for v in f.variables if f.degree(v) > 0]
    if len(active) > 1:
        raise ValueError("polynomial is not univariate")
    return active[0] if active else None


def squarefree_part(f):
    """f divided by gcd(f, f'), univariate."""
    var = _the_variable(f)
    if var is None:
        return f
    return divexact(f, poly_gcd(f, f.derivative(var)))


def real_root_count(f, interval):
    """Distinct real roots of a univariate polynomial in (lo, hi], by Sturm.

    Exact: boundary roots are handled by the half-open convention (a root at
    lo is excluded, a root at hi is included).
    """
    if f.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    var = _the_variable(f)
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if lo > hi:
        raise ValueError("empty interval")
    if var is None:
        return 0
    reduced = squarefree_part(f)
    chain = [_uni_coeffs(reduced, var)]
    derivative = _uni_coeffs(reduced.derivative(var), var)
    if derivative:
        chain.append(derivative)
        while len(chain[-1]) > 1:
            chain.append(_neg_rem(chain[-2], chain[-1]))
            if chain[-1] == [Fraction(0)] or not chain[-1]:
                chain.pop()
                break

    def variations(x):
        signs = []
        for coeffs in chain:
            value = _horner(coeffs, x)
            if value != 0:
                signs.append(value > 0)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(lo) - variations(hi)


def _neg_rem(a, b):
    """Negated remainder of univariate coefficient lists (ascending)."""
    a = list(a)
    while len(a) >= len(b) and any(c != 0 for c in a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        while a and a[-1] == 0:
            a.pop()
    return [-c for c in a] if a else [Fraction(0)]


# -- common complex zeros of bivariate systems -------------------------------
#
# has_common_affine_zero decides, completely and exactly, whether a family of
# bivariate polynomials has a common zero over the complex numbers.  Shape:
#   1. a nonconstant common gcd means a whole curve of common zeros;
#   2. otherwise the zero set is finite and its x-coordinates are roots of
#      g = gcd of the resultants against a chosen partner, so
#   3. the candidate locus {g = 0} is examined fiber by fiber, working in
#      Q[x]/(m) and splitting m whenever a zero divisor blocks an inversion.


def has_common_affine_zero(polys):
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        return True
    variables = polys[0].variables
    if len(variables) != 2:
        raise ValueError("expected polynomials in exactly two variables")
    if any(p.is_constant for p in polys):
        return False
    overall = gcd_list(polys)
    if not overall.is_constant:
        return True
    x, y = variables
    with_y = [p for p in polys if p.degree(y) > 0]
    without_y = [p for p in polys if p.degree(y) == 0]
    if not with_y:
        # all constraints involve x alone and their gcd is constant
        return False
    p = min(with_y, key=lambda q: (q.degree(y), q.degree()))
    projections = list(without_y)
    for q in with_y:
        if q is p:
            continue
        res = resultant(p, q, y)
        if res.is_zero:
            # p and q share a curve; split off the common factor
            h = poly_gcd(p, q)
            rest = [r for r in polys if r is not p and r is not q]
            if has_common_affine_zero(rest + [h]):
                return True
            return has_common_affine_zero(rest + [divexact(p, h), divexact(q, h)])
        projections.append(res)
    if not projections:
        # single curve with gcd handling above; nonconstant => zeros exist
        return True
    g = gcd_list(projections)
    if g.is_constant:
        return False
    return _common_root_on_locus(polys, _monic_in(g, x), x, y)


def _monic_in(f, var):
    lead = f.coefficient(var, f.degree(var)).constant_value()
    return f * (Fraction(1) / lead)


def _uni_divmod(a, b, var):
    """Univariate division over Q: returns (quotient, remainder)."""
    variables = a.variables
    v = Poly(variables, {tuple(1 if w == var else 0 for w in variables): Fraction(1)})
    q = Poly.zero(variables)
    r = a
    m = b.degree(var)
    lead_b = b.coefficient(var, m).constant_value()
    while not r.is_zero and r.degree(var) >= m:
        k = r.degree(var)
        lead_r = r.coefficient(var, k).constant_value()
        t = (lead_r / lead_b) * v ** (k - m)
        q = q + t
        r = r - t * b
    return q, r


def _mod(a, m, var):
    return _uni_divmod(a, m, var)[1]


def _uni_gcd_monic(a, b, var):
    while not b.is_zero:
        a, b = b, _mod(a, b, var)
    if a.is_zero:
        return a
    return _monic_in(a, var) if a.degree(var) > 0 else Poly.const(a.variables, 1)


def _inv_mod(u, m, var):
    """Inverse of u modulo m; caller guarantees gcd(u, m) = 1."""
    variables = u.variables
    r0, r1 = m, _mod(u, m, var)
    s0, s1 = Poly.zero(variables), Poly.const(variables, 1)
    while not r1.is_zero:
        q, r = _uni_divmod(r0, r1, var)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    scale = r0.constant_value() if r0.degree(var) <= 0 else None
    if scale is None or scale == 0:
        raise ValueError("element is not invertible")
    return _mod(s0 * (Fraction(1) / scale), m, var)


def _reduce_fiber(poly, m, x, y):
    """Reduce every x-coefficient of poly modulo m."""
    acc = Poly.zero(poly.variables)
    v = Poly(poly.variables, {tuple(1 if w == y else 0 for w in poly.variables): Fraction(1)})
    for k, c in enumerate(poly.as_univariate(y)):
        acc = acc + _mod(c, m, x) * v**k
    return acc


def _common_root_on_locus(polys, m, x, y):
    """Is there x0 with m(x0) = 0 and y0 with every poly vanishing at (x0, y0)?

    Arithmetic happens in Q[x]/(m).  Whenever a leading coefficient is a zero
    divisor the modulus splits and both branches are searched, so composite
    moduli are handled without factoring.
    """
    if m.degree(x) == 0:
        return False
    reduced = [q for q in (_reduce_fiber(p, m, x, y) for p in polys) if not q.is_zero]
    if not reduced:
        return True
    for q in reduced:
        if q.degree(y) == 0:
            # y-free constraint c(x): common zeros force c = 0, shrink modulus
            d = _uni_gcd_monic(q, m, x)
            if d.degree(x) == 0:
                return False
            return _common_root_on_locus(polys, d, x, y)
    p = min(reduced, key=lambda q: q.degree(y))
    u = p.coefficient(y, p.degree(y))
    d = _uni_gcd_monic(u, m, x)
    if d.degree(x) > 0:
        quotient, rem = _uni_divmod(m, d, x)
        assert rem.is_zero
        if _common_root_on_locus(polys, d, x, y):
            return True
        return _common_root_on_locus(polys, _monic_in(quotient, x), x, y)
    if len(reduced) == 1:
        return True  # one curve, positive y-degree over every root of m
    others = [q for q in reduced if q is not p]
    u_inv = _inv_mod(u, m, x)
    target = others[0]
    v = Poly(p.variables, {tuple(1 if w == y else 0 for w in p.variables): Fraction(1)})
    while not target.is_zero and target.degree(y) >= p.degree(y):
        k = target.degree(y)
        lead = target.coefficient(y, k)
        factor = _mod(lead * u_inv, m, x)
        target = _reduce_fiber(target - factor * v ** (k - p.degree(y)) * p, m, x, y)
    slim = [p] + [q for q in others[1:]]
    if not target.is_zero:
        slim.append(target)
    return _common_root_on_locus(slim, m, x, y)


def certify_no_common_affine_zero_3(polys):
    """Sound emptiness certificate for a trivariate polynomial system.

    True means the system provably has no common complex zero (projection by
    resultants is a necessary condition, and the projected bivariate system
    is decided completely).  False means no certificate, not nonemptiness.
    """
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        return False
    variables = polys[0].variables
    if len(variables) != 3:
        raise ValueError("expected polynomials in exactly three variables")
    if any(p.is_constant for p in polys):
        return True
    overall = gcd_list(polys)
    if not overall.is_constant:
        return False
    w = variables[2]
    with_w = [p for p in polys if p.degree(w) > 0]
    if not with_w:
        flat = [p.drop_variable(w) for p in polys]
        return not has_common_affine_zero(flat)
    constant_lead = [
        p for p in with_w if p.coefficient(w, p.degree(w)).is_constant
    ]
    p = min(constant_lead or with_w, key=lambda q: (q.degree(w), q.degree()))
    projections = [q for q in polys if q.degree(w) == 0]
    for q in with_w:
        if q is p:
            continue
        res = resultant(p, q, w)
        if res.is_zero:
            h = poly_gcd(p, q)
            rest = [r for r in polys if r is not p and r is not q]
            return certify_no_common_affine_zero_3(
                rest + [h]
            ) and certify_no_common_affine_zero_3(
                rest + [divexact(p, h), divexact(q, h)]
            )
        projections.append(res)
    if not projections:
        return False
    flat = [r.drop_variable(w) for r in projections]
    return not has_common_affine_zero(flat)
