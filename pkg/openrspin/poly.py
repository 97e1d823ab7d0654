from .base import RegistryMismatchError, SeriesInversionError, format_rational, latex_rational, rational

from fractions import Fraction
import collections
import logging
import re


log = logging.getLogger(__name__)

FORMAL_X = 'x'
DEFORMATION_ROLES = ('t', 'y', 'b')

_NAME_RE = re.compile(r'^([a-z]+)(\d+(?:_\d+)*)?$')


class Variable (collections.namedtuple('Variable', 'role index')):
    """
    A registry slot. ``index`` is None for the lone formal variable x, an int for
    t_d, y_d, b_i and x_i, and a tuple for the Fermat versal coordinates y_delta.
    """

    @property
    def name(self):
        if self.index is None:
            return self.role
        if isinstance(self.index, tuple):
            return '%s%s' % (self.role, '_'.join(str(i) for i in self.index))
        return '%s%d' % (self.role, self.index)

    @property
    def latex(self):
        if self.index is None:
            return self.role
        if isinstance(self.index, tuple):
            return '%s_{%s}' % (self.role, ','.join(str(i) for i in self.index))
        return '%s_{%d}' % (self.role, self.index)

    @property
    def is_formal(self):
        return self.role == FORMAL_X

    @classmethod
    def parse(cls, name):
        match = _NAME_RE.match(name)
        if not match:
            raise RegistryMismatchError('Not a variable name: %r' % name)
        role, digits = match.groups()
        if digits is None:
            return cls(role, None)
        parts = tuple(int(p) for p in digits.split('_'))
        return cls(role, parts[0] if len(parts) == 1 else parts)


class VarRegistry (object):
    """
    An ordered, explicit list of variables. Every Poly carries one, and arithmetic
    between Polys over different registries is refused rather than unioned.
    """

    def __init__(self, variables):
        self.variables = tuple(Variable(*v) for v in variables)
        self.names = tuple(v.name for v in self.variables)
        if len(set(self.names)) != len(self.names):
            raise RegistryMismatchError('Duplicate variable names in %r' % (self.names,))
        self._positions = dict((name, i) for i, name in enumerate(self.names))
        self.x_positions = tuple(i for i, v in enumerate(self.variables) if v.is_formal)
        self.deformation_positions = tuple(i for i, v in enumerate(self.variables) if not v.is_formal)

    @classmethod
    def potential(cls, r):
        return cls([(FORMAL_X, None)] + [('t', d) for d in range(r - 1)])

    @classmethod
    def versal(cls, r):
        return cls([(FORMAL_X, None)] + [('y', d) for d in range(r - 1)])

    @classmethod
    def twists(cls, l):
        return cls([('b', i) for i in range(1, l + 1)])

    @classmethod
    def fermat(cls, basis, role='y'):
        """
        Registry x1..xn plus one deformation variable per basis exponent vector.
        """
        n = len(basis[0])
        return cls([(FORMAL_X, i) for i in range(1, n + 1)] + [(role, tuple(delta)) for delta in basis])

    @classmethod
    def from_names(cls, names):
        return cls([Variable.parse(name) for name in names])

    def __len__(self):
        return len(self.variables)

    def __iter__(self):
        return iter(self.variables)

    def __contains__(self, name):
        return name in self._positions

    def __eq__(self, other):
        return isinstance(other, VarRegistry) and self.variables == other.variables

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return 'VarRegistry(%s)' % ', '.join(self.names)

    def position(self, name):
        try:
            return self._positions[name]
        except KeyError:
            raise RegistryMismatchError('Variable %r is not in %r' % (name, self))

    @property
    def deformation_names(self):
        return tuple(self.names[i] for i in self.deformation_positions)

    @property
    def x_names(self):
        return tuple(self.names[i] for i in self.x_positions)

    def deformation_degree(self, exps):
        return sum(exps[i] for i in self.deformation_positions)

    def x_degree(self, exps):
        return sum(exps[i] for i in self.x_positions)

    def sort_key(self, exps):
        # Deformation degree ascending, then x-degree descending, then the
        # deformation exponents read from the highest index down, descending.
        return (
            self.deformation_degree(exps),
            -self.x_degree(exps),
            tuple(-exps[i] for i in reversed(self.deformation_positions)),
            tuple(-exps[i] for i in self.x_positions),
        )


class Poly (object):
    """
    Sparse polynomial over the rationals: a map from exponent vectors (one entry
    per registry variable) to nonzero Fractions.
    """

    __slots__ = ('registry', 'terms')

    def __init__(self, registry, terms=None):
        self.registry = registry
        arity = len(registry)
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise RegistryMismatchError('Exponent vector %r does not match %r' % (exps, registry))
            if any(e < 0 for e in exps):
                raise ValueError('Negative exponent in %r' % (exps,))
            coeff = rational(coeff)
            if coeff:
                clean[exps] = coeff
        self.terms = clean

    @classmethod
    def _build(cls, registry, terms):
        # Trusted constructor for terms already known to be canonical.
        poly = cls.__new__(cls)
        poly.registry = registry
        poly.terms = terms
        return poly

    @classmethod
    def zero(cls, registry):
        return cls._build(registry, {})

    @classmethod
    def constant(cls, registry, value):
        value = rational(value)
        if not value:
            return cls.zero(registry)
        return cls._build(registry, {(0,) * len(registry): value})

    @classmethod
    def one(cls, registry):
        return cls.constant(registry, 1)

    @classmethod
    def monomial(cls, registry, powers=None, coefficient=1):
        exps = [0] * len(registry)
        for name, power in (powers or {}).items():
            exps[registry.position(name)] += power
        return cls(registry, {tuple(exps): coefficient})

    @classmethod
    def variable(cls, registry, name):
        return cls.monomial(registry, {name: 1})

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.registry != self.registry:
                raise RegistryMismatchError('Mixing %r with %r' % (self.registry, other.registry))
            return other
        return Poly.constant(self.registry, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = terms.get(exps, 0) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return Poly._build(self.registry, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._build(self.registry, dict((exps, -c) for exps, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            factor = rational(other)
            if not factor:
                return Poly.zero(self.registry)
            return Poly._build(self.registry, dict((exps, c * factor) for exps, c in self.terms.items()))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        return poly_pow(self, n)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.registry == other.registry and self.terms == other.terms
        try:
            return self.terms == Poly.constant(self.registry, other).terms
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return 'Poly(%s)' % self.text()

    def __str__(self):
        return self.text()

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * len(self.registry), Fraction(0))

    def coefficient(self, powers=None):
        exps = [0] * len(self.registry)
        for name, power in (powers or {}).items():
            exps[self.registry.position(name)] = power
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self, names=None):
        """
        Total degree in the given variables (all deformation variables by
        default); -1 for the zero polynomial.
        """
        positions = _positions(self.registry, names)
        return max([sum(exps[i] for i in positions) for exps in self.terms] or [-1])

    def x_degree(self):
        return max([self.registry.x_degree(exps) for exps in self.terms] or [-1])

    def variables_used(self):
        used = set()
        for exps in self.terms:
            used.update(self.registry.names[i] for i, e in enumerate(exps) if e)
        return used

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: self.registry.sort_key(item[0]))

    def _factors(self, exps):
        # Deformation variables first (registry order), x last.
        order = self.registry.deformation_positions + self.registry.x_positions
        return [(self.registry.variables[i], exps[i]) for i in order if exps[i]]

    def text(self):
        if not self.terms:
            return '0'
        pieces = []
        for n, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = ['%s^%d' % (v.name, e) if e > 1 else v.name for v, e in self._factors(exps)]
            magnitude = abs(coeff)
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([format_rational(magnitude)] + factors)
            if n == 0:
                pieces.append(('-' if coeff < 0 else '') + body)
            else:
                pieces.append((' - ' if coeff < 0 else ' + ') + body)
        return ''.join(pieces)

    def latex(self):
        if not self.terms:
            return '0'
        pieces = []
        for n, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = ''.join('%s^{%d}' % (v.latex, e) if e > 1 else v.latex for v, e in self._factors(exps))
            magnitude = abs(coeff)
            if not factors:
                body = latex_rational(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = latex_rational(magnitude) + factors
            if n == 0:
                pieces.append(('-' if coeff < 0 else '') + body)
            else:
                pieces.append((' - ' if coeff < 0 else ' + ') + body)
        return ''.join(pieces)

    def to_json(self):
        names = self.registry.names
        return {
            'registry': list(names),
            'terms': [
                {
                    'monomial': dict((names[i], e) for i, e in enumerate(exps) if e),
                    'coefficient': format_rational(coeff),
                }
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        registry = VarRegistry.from_names(data['registry'])
        poly = cls.zero(registry)
        for term in data['terms']:
            poly = poly + cls.monomial(registry, term['monomial'], rational(term['coefficient']))
        return poly


def _positions(registry, names):
    if names is None:
        return registry.deformation_positions
    return tuple(registry.position(name) for name in names)


def _check_same(p, q):
    if p.registry != q.registry:
        raise RegistryMismatchError('Mixing %r with %r' % (p.registry, q.registry))


def poly_add(p, q):
    _check_same(p, q)
    return p + q


def poly_mul(p, q, degree_cap=None, names=None):
    """
    Distributive product. With ``degree_cap`` set, products whose total degree in
    ``names`` (deformation variables by default) exceeds the cap are never formed,
    which is the same as multiplying and then calling truncate_degree.
    """
    _check_same(p, q)
    registry = p.registry
    positions = _positions(registry, names) if degree_cap is not None else ()
    right = [(exps, coeff, sum(exps[i] for i in positions)) for exps, coeff in q.terms.items()]
    out = {}
    for e1, c1 in p.terms.items():
        d1 = sum(e1[i] for i in positions)
        for e2, c2, d2 in right:
            if degree_cap is not None and d1 + d2 > degree_cap:
                continue
            exps = tuple(a + b for a, b in zip(e1, e2))
            out[exps] = out.get(exps, 0) + c1 * c2
    return Poly._build(registry, dict((exps, c) for exps, c in out.items() if c))


def poly_pow(p, n, degree_cap=None, names=None):
    if n < 0:
        raise ValueError('Negative power of a polynomial: %d' % n)
    result = Poly.one(p.registry)
    base = p
    while n:
        if n & 1:
            result = poly_mul(result, base, degree_cap, names)
        n >>= 1
        if n:
            base = poly_mul(base, base, degree_cap, names)
    return result


def truncate_degree(p, names, degree):
    """
    Returns p modulo the ideal generated by the monomials of degree ``degree + 1``
    in the chosen variables.
    """
    if degree < 0:
        raise ValueError('Truncation degree must be non-negative, got %d' % degree)
    positions = _positions(p.registry, names)
    return Poly._build(p.registry, dict(
        (exps, c) for exps, c in p.terms.items() if sum(exps[i] for i in positions) <= degree))


def substitute(p, assignment, target=None, degree_cap=None):
    """
    Simultaneously replaces variables of p by Polys over ``target``. Variables of
    p without an assignment are carried over by name and must exist in the
    target registry. With ``degree_cap`` the result is truncated in the target's
    deformation variables as it is built.
    """
    images = dict((name, value) for name, value in assignment.items())
    if target is None:
        registries = set(v.registry for v in images.values() if isinstance(v, Poly))
        if len(registries) > 1:
            raise RegistryMismatchError('Substituted polynomials do not share a registry.')
        target = registries.pop() if registries else p.registry
    for name in images:
        if name not in p.registry:
            raise RegistryMismatchError('Cannot substitute for %r: not a variable of %r' % (name, p.registry))
        if isinstance(images[name], Poly):
            if images[name].registry != target:
                raise RegistryMismatchError('Image of %r is not over %r' % (name, target))
        else:
            images[name] = Poly.constant(target, images[name])

    carried = {}
    for i, name in enumerate(p.registry.names):
        if name not in images and name in target:
            carried[i] = target.position(name)
    for name in p.variables_used():
        if name not in images and name not in target:
            raise RegistryMismatchError('Variable %r has no image in %r' % (name, target))

    powers = {}

    def power(name, e):
        key = (name, e)
        if key not in powers:
            powers[key] = poly_pow(images[name], e, degree_cap)
        return powers[key]

    result = Poly.zero(target)
    for exps, coeff in p.terms.items():
        base = [0] * len(target)
        for i, e in enumerate(exps):
            if e and i in carried:
                base[carried[i]] += e
        term = Poly._build(target, {tuple(base): coeff})
        if degree_cap is not None:
            term = truncate_degree(term, None, degree_cap)
        for i, e in enumerate(exps):
            if e and i not in carried:
                term = poly_mul(term, power(p.registry.names[i], e), degree_cap)
            if not term:
                break
        result = result + term
    return result


def series_invert(maps, target, degree):
    """
    Inverts a coordinate change t_d = F_d(y), F_d = y_d + higher order, modulo
    the degree ``degree + 1`` ideal. ``maps`` are x-free Polys over the source
    registry, one per deformation variable; the inverse y_d = G_d(t) is returned
    as Polys over ``target``, matched to the source by deformation order.
    """
    if degree < 1:
        raise ValueError('Inversion degree must be at least 1, got %d' % degree)
    source = maps[0].registry
    source_names = source.deformation_names
    target_names = target.deformation_names
    if not (len(maps) == len(source_names) == len(target_names)):
        raise SeriesInversionError('Expected %d maps onto %d target coordinates, got %d'
                                   % (len(source_names), len(target_names), len(maps)))

    tails = []
    for name, f in zip(source_names, maps):
        if f.registry != source:
            raise RegistryMismatchError('Coordinate maps do not share a registry.')
        if f.x_degree() > 0:
            raise SeriesInversionError('Coordinate map for %s depends on x: %s' % (name, f))
        linear = truncate_degree(f, None, 1)
        if linear != Poly.variable(source, name):
            raise SeriesInversionError('Linear part of the map for %s is %s, not the identity' % (name, linear))
        tails.append(f - Poly.variable(source, name))

    identity = [Poly.variable(target, name) for name in target_names]
    inverse = list(identity)
    # Each pass fixes one more degree of G = t - N(G).
    for step in range(degree):
        assignment = dict(zip(source_names, inverse))
        updated = [t - substitute(tail, assignment, target, degree) for t, tail in zip(identity, tails)]
        if updated == inverse:
            log.debug('series_invert converged after %d passes', step)
            break
        inverse = updated
    return [truncate_degree(g, None, degree) for g in inverse]


class HbarSeries (object):
    """
    The expansion sum_j phi_j hbar^(-j): a finite map from the order j to an
    x-free Poly.
    """

    def __init__(self, registry, coefficients=None):
        self.registry = registry
        self.coefficients = {}
        for order, poly in (coefficients or {}).items():
            if poly.registry != registry:
                raise RegistryMismatchError('Series coefficient over %r, expected %r' % (poly.registry, registry))
            if poly.x_degree() > 0:
                raise ValueError('Series coefficient of hbar^%d depends on x: %s' % (-order, poly))
            if poly:
                self.coefficients[int(order)] = poly

    def __getitem__(self, order):
        return self.coefficients.get(order, Poly.zero(self.registry))

    def __eq__(self, other):
        return isinstance(other, HbarSeries) and self.registry == other.registry and \
            self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def orders(self):
        return sorted(self.coefficients)

    def negative_orders(self):
        return [j for j in self.orders() if j < 0]

    def text(self):
        if not self.coefficients:
            return '0'
        pieces = []
        for j in self.orders():
            body = self.coefficients[j].text()
            if j == 0:
                pieces.append(body)
            else:
                pieces.append('(%s)*hbar^%d' % (body, -j))
        return ' + '.join(pieces)

    def __repr__(self):
        return 'HbarSeries(%s)' % self.text()
