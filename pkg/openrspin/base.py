__version__ = '1.0.1'
__version_info__ = tuple(int(v) for v in __version__.split('.'))

from fractions import Fraction
import math
import numbers


class OpenRSpinError (Exception):
    pass


class RegistryMismatchError (OpenRSpinError, ValueError):
    pass


class SeriesInversionError (OpenRSpinError, ValueError):
    pass


class PartitionError (OpenRSpinError, ValueError):
    pass


class InadmissibleTwistsError (OpenRSpinError, ValueError):
    pass


class ExpansionError (OpenRSpinError, ValueError):
    pass


class QuadratureError (OpenRSpinError, ArithmeticError):
    pass


def rational(value):
    """
    Coerces ints, Fractions and "p/q" strings to a Fraction. Floats are refused,
    since nothing exact survives a round trip through them.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('Refusing to read a boolean as a rational.')
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError('Cannot read %r as an exact rational.' % (value,))


def format_rational(value):
    """
    Returns the canonical "p/q" spelling, with "/1" omitted.
    """
    return str(rational(value))


def latex_rational(value):
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = '-' if value < 0 else ''
    return '%s\\tfrac{%d}{%d}' % (sign, abs(value.numerator), value.denominator)


def sign(exponent):
    """
    (-1)**exponent for any integer exponent, negative ones included.
    """
    return -1 if exponent % 2 else 1


def rising_product(start, count):
    """
    start * (start + 1) * ... * (start + count - 1), exactly; 1 when count is 0.
    """
    start = rational(start)
    result = Fraction(1)
    for i in range(count):
        result *= start + i
    return result


def factorial(n):
    if n < 0:
        raise ValueError('Factorial of a negative integer: %d' % n)
    return math.factorial(n)
