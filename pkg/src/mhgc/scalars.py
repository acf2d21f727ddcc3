"""Exact rational scalars.

All arithmetic in the engine is exact.  gmpy2's mpq is used when available
(it is considerably faster); fractions.Fraction is a drop-in fallback.
Both keep fractions in lowest terms with a positive denominator.
"""

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

from .errors import BadRational

QZERO = Q(0)
QONE = Q(1)


def parse_rational(text):
    """Parse a canonical rational string "num" or "num/den"."""
    if not isinstance(text, str):
        raise BadRational("rational must be a string, got %r" % (text,))
    s = text.strip()
    num_s, sep, den_s = s.partition("/")
    try:
        num = int(num_s)
        den = int(den_s) if sep else 1
    except ValueError:
        raise BadRational("malformed rational %r" % (text,)) from None
    if den == 0:
        raise BadRational("zero denominator in %r" % (text,))
    return Q(num, den)


def format_rational(x):
    """Canonical string form: lowest terms, "/den" omitted when den = 1."""
    num, den = x.numerator, x.denominator
    if den == 1:
        return str(num)
    return "%d/%d" % (num, den)
