"""Exact rational scalars.

gmpy2.mpq is the workhorse when available (C-backed, far faster for the
dense cyclotomic arithmetic); fractions.Fraction is a drop-in fallback.
Both keep values in lowest terms with a positive denominator and hash
consistently, which is all the rest of the package assumes.  No floating
point enters anywhere.
"""

try:
    from gmpy2 import mpq as Rat
    from gmpy2 import mpz as Int

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

    Int = int
    HAVE_GMPY2 = False

ZERO = Rat(0)
ONE = Rat(1)


def as_rat(value) -> Rat:
    """Coerce an int, string ("3", "-1/2") or rational type to Rat."""
    if isinstance(value, Rat):
        return value
    return Rat(value)


def rat_str(q) -> str:
    """Canonical decimal-string form: "n" for integers, "n/d" otherwise."""
    q = as_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integral(q) -> bool:
    return as_rat(q).denominator == 1
