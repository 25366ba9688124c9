"""
Exact polynomials used by the bracket state sums

LaurentPoly: integer polynomial in A with exponents of any sign,
             backed by a sympy Poly over ZZ
PseudoPoly: polynomial in V whose coefficients are LaurentPoly
"""
from functools import lru_cache
from types import MappingProxyType
import sympy as sp
from sympy.polys.polyerrors import ExactQuotientFailed

_A = sp.Symbol("A")
_ZERO = sp.Poly(0, _A, domain=sp.ZZ)


@lru_cache(maxsize=None)
def _power(k):
    return sp.Poly(_A ** k, _A, domain=sp.ZZ)


class NotDivisible(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def _render_terms(terms):
    """
    Render (coefficient, a_exponent, v_degree) triples already in
    output order as 'A^-6 + A^-8*V - A^4*V'
    """
    if not terms:
        return "0"
    out = []
    for coeff, a_exp, v_deg in terms:
        factors = []
        if a_exp == 1:
            factors.append("A")
        elif a_exp != 0:
            factors.append(f"A^{a_exp}")
        if v_deg == 1:
            factors.append("V")
        elif v_deg > 1:
            factors.append(f"V^{v_deg}")
        body = "*".join(factors)
        magnitude = abs(coeff)
        if not body:
            body = str(magnitude)
        elif magnitude != 1:
            body = f"{magnitude}*{body}"
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(out)


class LaurentPoly(object):
    """
    Laurent polynomial in A over the integers, held as A^shift * P(A)
    with P a sympy Poly over ZZ whose constant term is nonzero. The
    zero polynomial has shift 0, so equal polynomials compare equal.
    """
    __slots__ = ("_shift", "_poly")

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        merged = {}
        for exp, coeff in terms:
            merged[int(exp)] = merged.get(int(exp), 0) + int(coeff)
        merged = {e: c for e, c in merged.items() if c != 0}
        if not merged:
            self._shift, self._poly = 0, _ZERO
            return
        low = min(merged)
        self._shift = low
        self._poly = sp.Poly.from_dict({(e - low,): c for e, c in merged.items()},
                                       _A, domain=sp.ZZ)

    @classmethod
    def _from_poly(cls, poly, shift):
        """
        Canonical A^shift * poly, moving any power of A out of poly
        """
        self = cls.__new__(cls)
        if poly.is_zero:
            self._shift, self._poly = 0, _ZERO
            return self
        (low,), poly = poly.terms_gcd()
        self._shift, self._poly = shift + low, poly
        return self

    @classmethod
    def monomial(cls, coeff, exp):
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, sp.Integer)):
            return cls.constant(int(value))
        raise TypeError(f"Cannot use {type(value).__name__} as a Laurent polynomial")

    @classmethod
    def from_expr(cls, expr):
        """
        LaurentPoly of a sympy expression in the symbol A,
        e.g. sympify("A**-7 - A**-3 - A**5")
        """
        expr = sp.expand(sp.sympify(expr, locals={"A": _A}))
        if expr.free_symbols - {_A}:
            raise ValueError(f"{expr} is not a polynomial in A alone")
        terms = []
        for term in sp.Add.make_args(expr):
            coeff, rest = term.as_coeff_Mul()
            base, exp = (_A, sp.Integer(0)) if rest == 1 else rest.as_base_exp()
            if base != _A or not exp.is_integer or not coeff.is_integer:
                raise ValueError(f"{term} is not an integer monomial in A")
            terms.append((int(exp), int(coeff)))
        return cls(terms)

    def as_expr(self):
        """
        The polynomial as a sympy expression in A
        """
        return self._poly.as_expr() * _A ** self._shift

    @property
    def terms(self):
        return MappingProxyType({self._shift + e: int(c) for (e,), c in self._poly.terms()})

    def exponent_range(self):
        """
        (lowest, highest) exponent, undefined for the zero polynomial
        """
        if not self:
            raise ValueError("The zero polynomial has no exponent range")
        return self._shift, self._shift + self._poly.degree()

    def is_monomial(self):
        return bool(self) and len(self._poly.monoms()) == 1

    def mirror(self):
        """
        Substitute A -> A^-1
        """
        if not self:
            return self
        reversed_poly = sp.Poly.from_list(self._poly.all_coeffs()[::-1], _A, domain=sp.ZZ)
        return LaurentPoly._from_poly(reversed_poly, -self._shift - self._poly.degree())

    def __bool__(self):
        return not self._poly.is_zero

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, PseudoPoly):
            return PseudoPoly.lift(self) == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._shift == other._shift and self._poly == other._poly

    def __hash__(self):
        return hash((self._shift, tuple(self._poly.all_coeffs())))

    def __neg__(self):
        return LaurentPoly._from_poly(-self._poly, self._shift)

    def __add__(self, other):
        if isinstance(other, PseudoPoly):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        if not other:
            return self
        if not self:
            return other
        low = min(self._shift, other._shift)
        summed = (self._poly * _power(self._shift - low)
                  + other._poly * _power(other._shift - low))
        return LaurentPoly._from_poly(summed, low)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PseudoPoly):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, PseudoPoly):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        if not self or not other:
            return LaurentPoly()
        # Constant terms of both factors are nonzero, so is their product's
        return LaurentPoly._from_poly(self._poly * other._poly, self._shift + other._shift)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            if not self.is_monomial() or abs(self._poly.LC()) != 1:
                raise ValueError(f"{self} is not a unit and has no negative powers")
            return LaurentPoly({self._shift * power: int(self._poly.LC()) ** abs(power)})
        if not self:
            return LaurentPoly.constant(1) if power == 0 else LaurentPoly()
        return LaurentPoly._from_poly(self._poly ** power, self._shift * power)

    def items(self):
        """
        Terms sorted by ascending exponent
        """
        return sorted(self.terms.items())

    def to_json(self):
        return [[e, str(c)] for e, c in self.items()]

    def __str__(self):
        return _render_terms([(c, e, 0) for e, c in self.items()])

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


class PseudoPoly(object):
    """
    Polynomial in V over the Laurent ring in A. Holds the pseudo
    bracket and its normalization.
    """
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        merged = {}
        for deg, coeff in coeffs:
            if deg < 0:
                raise ValueError(f"Negative V-degree {deg}")
            coeff = LaurentPoly.coerce(coeff)
            merged[deg] = merged.get(deg, LaurentPoly()) + coeff
        self._coeffs = {d: c for d, c in merged.items() if c}

    @classmethod
    def lift(cls, value):
        """
        View a LaurentPoly or an int as a V-free PseudoPoly
        """
        if isinstance(value, PseudoPoly):
            return value
        return cls({0: LaurentPoly.coerce(value)})

    @property
    def coeffs(self):
        return MappingProxyType(self._coeffs)

    def coefficient(self, degree):
        return self._coeffs.get(degree, LaurentPoly())

    @property
    def v_degree(self):
        return max(self._coeffs, default=0)

    def is_v_free(self):
        return all(d == 0 for d in self._coeffs)

    def v_part(self):
        return PseudoPoly({d: c for d, c in self._coeffs.items() if d > 0})

    def mirror(self):
        return PseudoPoly({d: c.mirror() for d, c in self._coeffs.items()})

    def scale(self, factor):
        factor = LaurentPoly.coerce(factor)
        return PseudoPoly({d: c * factor for d, c in self._coeffs.items()})

    def exact_divide(self, divisor):
        """
        Divide every coefficient exactly by a LaurentPoly
        """
        return PseudoPoly({d: exact_divide(c, divisor)
                           for d, c in self._coeffs.items()})

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = PseudoPoly.lift(other)
        if not isinstance(other, PseudoPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self):
        return PseudoPoly({d: -c for d, c in self._coeffs.items()})

    def __add__(self, other):
        other = PseudoPoly.lift(other)
        summed = dict(self._coeffs)
        for d, c in other._coeffs.items():
            summed[d] = summed[d] + c if d in summed else c
        return PseudoPoly(summed)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-PseudoPoly.lift(other))

    def __rsub__(self, other):
        return PseudoPoly.lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, PseudoPoly):
            return NotImplemented
        product = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                term = c1 * c2
                product[d1 + d2] = product[d1 + d2] + term if d1 + d2 in product else term
        return PseudoPoly(product)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            raise ValueError("PseudoPoly only has non-negative powers")
        result = PseudoPoly.lift(1)
        for _ in range(power):
            result = result * self
        return result

    def items(self):
        """
        (coefficient, a_exponent, v_degree) in canonical order
        """
        return [(c, e, d)
                for d in sorted(self._coeffs)
                for e, c in self._coeffs[d].items()]

    def to_json(self):
        return {str(d): self._coeffs[d].to_json() for d in sorted(self._coeffs)}

    def __str__(self):
        return _render_terms(self.items())

    def __repr__(self):
        return f"PseudoPoly({str(self)!r})"


A = LaurentPoly({1: 1})
A_INV = LaurentPoly({-1: 1})
# Loop value d
LOOP_VALUE = LaurentPoly({2: -1, -2: -1})
V = PseudoPoly({1: 1})
# Horizontal pseudo weight H = 1 - Vd
H = PseudoPoly({0: 1, 1: -LOOP_VALUE})


def lp_add(p, q):
    return LaurentPoly.coerce(p) + q


def lp_mul(p, q):
    return LaurentPoly.coerce(p) * q


def lp_pow_writhe(w):
    """
    (-A^-3)^w as a monomial, for any integer w
    """
    return LaurentPoly({-3 * w: 1 if w % 2 == 0 else -1})


def pp_add(p, q):
    return PseudoPoly.lift(p) + q


def pp_mul(p, q):
    return PseudoPoly.lift(p) * PseudoPoly.lift(q)


def pp_scale(p, s):
    return PseudoPoly.lift(p).scale(s)


def v_part(p):
    return PseudoPoly.lift(p).v_part()


def mirror(p):
    return p.mirror()


def exact_divide(p, q):
    """
    Return r with q*r == p in Z[A, A^-1]
    Raises NotDivisible when no such r exists
    """
    p = LaurentPoly.coerce(p)
    q = LaurentPoly.coerce(q)
    if not q:
        raise DivisionByZero("Division by the zero polynomial")
    if not p:
        return LaurentPoly()
    # Neither constant term is zero, so A^k never divides q and
    # Laurent divisibility is divisibility in Z[A]
    try:
        quotient = p._poly.exquo(q._poly, auto=False)
    except ExactQuotientFailed:
        raise NotDivisible(f"{q} does not divide {p}")
    return LaurentPoly._from_poly(quotient, p._shift - q._shift)
