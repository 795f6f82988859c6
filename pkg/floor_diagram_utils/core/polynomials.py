############################################################
# polynomials.py contains the exact multivariate polynomial
# type (MultiPoly) in the formal variables D, S, a_i, b_i, k
# and x, plus discrete summation, interpolation, falling and
# rising products and Stirling numbers
############################################################

### IMPORTING PACKAGES ###

# Default packages
import functools
from fractions import Fraction
# Math packages
import sympy
from sympy.polys.rings import ring, PolyElement
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.parsing.sympy_parser import parse_expr
from sympy.functions.combinatorial.numbers import stirling
# The information contained in our helper scripts (validation)
from .. import config
from ..errors import DegreeOverflowError
from ..validation import polynomials as pyv

### ALL ###
# This code tells other packages what to import if not explicitly stated
__all__ = ["MultiPoly", "VARIABLES", "poly_arith",
           "discrete_sum", "interpolate", "falling_product", "rising_product",
           "stirling_first", "stirling_expansion"]

### RING ###
# Fixed variable order D < S < a_1 < ... < b_1 < ... < k < x, graded lexicographic
# Every MultiPoly lives in this one ring so that canonical forms are comparable

VARIABLES = ("D", "S",
             *[f"a{i}" for i in range(1, config.MAX_VARIABLE_INDEX + 1)],
             *[f"b{i}" for i in range(1, config.MAX_VARIABLE_INDEX + 1)],
             "k", "x")
RING, *_GENERATORS = ring(",".join(VARIABLES), QQ, grlex)
_GENERATOR = dict(zip(VARIABLES, _GENERATORS))
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_SYMBOLS = {name: sympy.Symbol(name) for name in VARIABLES}

# Names used by the human-readable renderer
_TEXT_NAMES = {"D": "d", "S": "|beta|", "k": "k", "x": "x"}
for _i in range(1, config.MAX_VARIABLE_INDEX + 1):
    _TEXT_NAMES[f"a{_i}"] = f"alpha_{_i}"
    _TEXT_NAMES[f"b{_i}"] = f"beta_{_i}"

### HELPING FUNCTIONS ###

def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))

def _to_ground(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)

def _variable_index(name: str) -> int:
    if name not in _INDEX:
        raise ValueError(f"Unknown variable '{name}', expected one of {list(VARIABLES)}")
    return _INDEX[name]

def _coerce(value) -> PolyElement:
    if isinstance(value, MultiPoly):
        return value._poly
    if isinstance(value, PolyElement):
        return value
    if isinstance(value, str):
        return RING(parse_expr(value, local_dict=_SYMBOLS))
    if isinstance(value, sympy.Expr):
        return RING(value)
    if isinstance(value, (int, Fraction)):
        return RING(_to_ground(value))
    raise TypeError(f"Cannot build a polynomial from {type(value).__name__}")

### CLASSES ###

class MultiPoly:
    """
    Exact polynomial with rational coefficients in D, S, a_1.., b_1.., k and x.

    D stands for the degree d and S for |beta|; all variables have degree 1.
    Instances are immutable and compare equal exactly when their term maps agree.
    """

    ## INITIALIZATION ##
    def __init__(self, value=0):
        self._poly = _coerce(value)

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        _variable_index(name)
        return cls(_GENERATOR[name])

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        validated = pyv.PolynomialJsonModel(**data)
        positions = [_variable_index(name) for name in validated.vars]
        terms = {}
        for term in validated.terms:
            monomial = [0] * len(VARIABLES)
            for position, exponent in zip(positions, term.exps):
                monomial[position] = exponent
            terms[tuple(monomial)] = _to_ground(term.coeff)
        return cls(RING.from_dict(terms))

    ## INTERNAL PROPERTIES ##
    @property
    def variables(self) -> list:
        used = set()
        for monomial in self._poly.keys():
            used.update(i for i, e in enumerate(monomial) if e)
        return [VARIABLES[i] for i in sorted(used)]

    @property
    def total_degree(self) -> int:
        # The zero polynomial reports -1
        return max((sum(monomial) for monomial in self._poly.keys()), default=-1)

    @property
    def is_zero(self) -> bool:
        return not self._poly

    def degree(self, name: str) -> int:
        i = _variable_index(name)
        return max((monomial[i] for monomial in self._poly.keys()), default=-1)

    def terms(self) -> list:
        """Returns (exponents by variable name, Fraction) pairs in canonical order."""
        output = []
        for monomial, coeff in self._poly.terms(order=grlex):
            exponents = {VARIABLES[i]: e for i, e in enumerate(monomial) if e}
            output.append((exponents, _to_fraction(coeff)))
        return output

    def coeff(self, **exponents) -> Fraction:
        monomial = [0] * len(VARIABLES)
        for name, e in exponents.items():
            monomial[_variable_index(name)] = e
        return _to_fraction(self._poly.get(tuple(monomial), QQ.zero))

    def __len__(self):
        return len(self._poly)

    ## ARITHMETIC ##
    def __add__(self, other):
        return MultiPoly(self._poly + _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return MultiPoly(self._poly - _coerce(other))

    def __rsub__(self, other):
        return MultiPoly(_coerce(other) - self._poly)

    def __mul__(self, other):
        return MultiPoly(self._poly * _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly(-self._poly)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("only non-negative powers are polynomials")
        return MultiPoly(self._poly ** exponent)

    def scale(self, factor) -> "MultiPoly":
        return MultiPoly(self._poly * _to_ground(factor))

    def __eq__(self, other) -> bool:
        try:
            return dict(self._poly) == dict(_coerce(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._poly.items()))

    ## SUBSTITUTION ##
    def compose(self, name: str, other) -> "MultiPoly":
        """Replaces the variable `name` by the polynomial `other`."""
        _variable_index(name)
        return MultiPoly(self._poly.compose(_GENERATOR[name], _coerce(other)))

    def subs(self, values: dict) -> "MultiPoly":
        """Substitutes rational values for variables, keeping the result a MultiPoly."""
        if not values:
            return self
        pairs = []
        for name, value in values.items():
            _variable_index(name)
            pairs.append((_GENERATOR[name], _to_ground(value)))
        return MultiPoly(self._poly.subs(pairs))

    def evaluate(self, values: dict) -> Fraction:
        result = self.subs(values)
        remaining = result.variables
        if remaining:
            raise ValueError(f"no values supplied for {remaining}")
        return result.constant

    @property
    def constant(self) -> Fraction:
        return _to_fraction(self._poly.get(RING.zero_monom, QQ.zero))

    def truncate(self, min_degree: int) -> "MultiPoly":
        """Keeps only the terms of total degree >= min_degree."""
        kept = {m: c for m, c in self._poly.items() if sum(m) >= min_degree}
        return MultiPoly(RING.from_dict(kept) if kept else RING.zero)

    def split(self, name: str) -> dict:
        """Groups terms by the exponent of `name`, returning {power: coefficient polynomial}."""
        i = _variable_index(name)
        groups = {}
        for monomial, coeff in self._poly.items():
            rest = monomial[:i] + (0,) + monomial[i + 1:]
            groups.setdefault(monomial[i], {})[rest] = coeff
        return {power: MultiPoly(RING.from_dict(terms)) for power, terms in sorted(groups.items())}

    ## OUTPUT ##
    def to_json(self) -> dict:
        names = self.variables
        positions = [_INDEX[name] for name in names]
        terms = []
        for monomial, coeff in self._poly.terms(order=grlex):
            c = _to_fraction(coeff)
            terms.append({"coeff": str(c), "exps": [monomial[p] for p in positions]})
        return {"vars": names, "terms": terms}

    def to_expr(self) -> sympy.Expr:
        return self._poly.as_expr()

    def to_string(self) -> str:
        """Machine-readable form such as '3*D**2*S - 8*D*S', accepted back by MultiPoly()."""
        if self.is_zero:
            return "0"
        pieces = []
        for exponents, c in self.terms():
            factors = [name if e == 1 else f"{name}**{e}" for name, e in exponents.items()]
            magnitude = abs(c)
            if magnitude != 1 or not factors:
                factors.insert(0, f"({magnitude})" if magnitude.denominator != 1 else str(magnitude))
            pieces.append(("-" if c < 0 else "+", "*".join(factors)))
        return _join(pieces)

    def to_text(self) -> str:
        """Human-readable form in the notation d, |beta|, alpha_i, beta_i."""
        if self.is_zero:
            return "0"
        pieces = []
        for exponents, c in self.terms():
            factors = [_TEXT_NAMES[name] if e == 1 else f"{_TEXT_NAMES[name]}^{e}" for name, e in exponents.items()]
            magnitude = abs(c)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            pieces.append(("-" if c < 0 else "+", " ".join(factors)))
        return _join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_string()!r})"

def _join(pieces: list) -> str:
    sign, body = pieces[0]
    text = f"-{body}" if sign == "-" else body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text

### FUNCTIONS ###

def poly_arith(p: MultiPoly, q, op: str = "add") -> MultiPoly:
    """Adds or multiplies two polynomials, or scales p by the rational q."""
    if op == "add":
        return p + q
    elif op == "mul":
        return p * q
    elif op == "scale":
        return p.scale(q)
    else:
        raise ValueError(f"Invalid operation ({op}), try one of ['add', 'mul', 'scale']")

@functools.lru_cache(maxsize=None)
def _power_sum(n: int, var: str) -> MultiPoly:
    # F_n(x) = sum_{j=0}^{x} j^n, via Bernoulli polynomials
    symbol = _SYMBOLS[var]
    bernoulli = MultiPoly(sympy.expand(sympy.bernoulli(n + 1, symbol)))
    shifted = bernoulli.compose(var, MultiPoly.var(var) + 1)
    return (shifted - bernoulli.subs({var: 0})).scale(Fraction(1, n + 1))

def discrete_sum(p: MultiPoly, c: int, var: str = "k", into: str = "x") -> MultiPoly:
    """
    Returns F in the variable `into` with F(x) = sum_{var=c}^{x} p(var).

    The identity holds for every integer x >= c - 1, in particular F(c - 1) = 0.
    Other variables of p are carried along as coefficients.
    """
    if into in p.variables:
        raise ValueError(f"the summand already uses the output variable '{into}'")
    total = MultiPoly(0)
    for power, coefficient in p.split(var).items():
        antiderivative = _power_sum(power, into)
        total = total + coefficient * (antiderivative - antiderivative.evaluate({into: c - 1}))
    return total

def interpolate(points: list, degree: int, var: str = "k") -> MultiPoly:
    """
    Fits the polynomial of the given degree through the first degree+1 points.

    Every further point is used as a check: a miss raises DegreeOverflowError,
    which means the degree bound supplied upstream was too small.
    """
    validated = pyv.InterpolationModel(points=points, degree=degree)
    points = validated.fractions
    symbol = _SYMBOLS[var]
    data = [(x, sympy.Rational(y.numerator, y.denominator)) for x, y in points[:degree + 1]]
    if degree == 0:
        fitted = MultiPoly(data[0][1])
    else:
        fitted = MultiPoly(sympy.expand(sympy.interpolate(data, symbol)))
    for x, y in points[degree + 1:]:
        value = fitted.evaluate({var: x})
        if value != y:
            raise DegreeOverflowError(f"degree {degree} fit through {data} gives {value} at {var}={x}, expected {y}")
    return fitted

def falling_product(var, c: int, delta: int) -> MultiPoly:
    """Expanded product of (var - i) over i = c .. delta-1; 1 when c == delta."""
    if not 0 <= c <= delta:
        raise ValueError(f"falling products need 0 <= c <= delta, got c={c}, delta={delta}")
    base = MultiPoly.var(var) if isinstance(var, str) else MultiPoly(var)
    product = MultiPoly(1)
    for i in range(c, delta):
        product = product * (base - i)
    return product

def rising_product(base, r: int) -> MultiPoly:
    """Expanded product of (base + u) over u = 1 .. r."""
    base = MultiPoly.var(base) if isinstance(base, str) else MultiPoly(base)
    product = MultiPoly(1)
    for u in range(1, r + 1):
        product = product * (base + u)
    return product

def stirling_first(n: int, m: int) -> int:
    """Signed Stirling number of the first kind s(n, m)."""
    if n < 0 or m < 0:
        raise ValueError(f"Stirling numbers need n, m >= 0, got n={n}, m={m}")
    return int(stirling(n, m, kind=1, signed=True))

def stirling_expansion(var, c: int, delta: int, depth: int = None) -> MultiPoly:
    """
    The falling product of (var - i), i = c .. delta-1, expanded in powers of (var - c).

    Only the powers (var - c)^(n - t) with t <= depth are kept, which is enough to
    read off the leading terms of a product; depth=None keeps everything.
    """
    if not 0 <= c <= delta:
        raise ValueError(f"falling products need 0 <= c <= delta, got c={c}, delta={delta}")
    base = (MultiPoly.var(var) if isinstance(var, str) else MultiPoly(var)) - c
    n = delta - c
    depth = n if depth is None else min(depth, n)
    total = MultiPoly(0)
    for t in range(depth + 1):
        total = total + base ** (n - t) * stirling_first(n, n - t)
    return total
