"""Base rings for all exact computations: Q, F_p (p prime) and Z.

Every scalar in the package is either a ``fractions.Fraction`` (over Q),
an ``int`` in the range ``0..p-1`` (over F_p) or a plain ``int`` (over Z).
A ``BaseRing`` instance bundles the arithmetic so matrix code can stay
generic.  Instances are immutable and interned, so ``Rationals() is
Rationals()`` holds and rings compare by identity.
"""

from fractions import Fraction

from sympy import isprime

_INTERNED = {}


class BaseRing:
    """Common interface: exact arithmetic plus parsing/formatting.

    ``is_field`` distinguishes the two linear-algebra regimes: Gaussian
    elimination over Q and F_p versus Smith normal form over Z.
    """

    is_field = False
    char = 0

    def __new__(cls, *args):
        key = (cls, args)
        if key not in _INTERNED:
            _INTERNED[key] = super().__new__(cls)
        return _INTERNED[key]

    # -- arithmetic ---------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        return self.sub(self.zero, a)

    def div(self, a, b):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def is_unit(self, a):
        raise NotImplementedError

    # -- serialization ------------------------------------------------
    def format(self, a):
        return str(a)

    def parse(self, s):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class Rationals(BaseRing):
    is_field = True
    name = "Q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def is_unit(self, a):
        return a != 0

    def format(self, a):
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)

    def parse(self, s):
        return Fraction(str(s))


class PrimeField(BaseRing):
    """F_p for a prime p.  Elements are ints reduced to 0..p-1."""

    is_field = True

    def __init__(self, p):
        if not isprime(p):
            raise ValueError("PrimeField needs a prime, got %r" % (p,))
        self.p = p
        self.char = p
        self.name = "F%d" % p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return (a * pow(b, -1, self.p)) % self.p

    def from_int(self, n):
        return n % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def parse(self, s):
        return int(str(s)) % self.p


class Integers(BaseRing):
    is_field = False
    name = "Z"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ValueError("%d does not divide %d in Z" % (b, a))
        return q

    def from_int(self, n):
        return n

    def is_unit(self, a):
        return a in (1, -1)

    def parse(self, s):
        return int(str(s))


QQ = Rationals()
ZZ = Integers()


def GF(p):
    return PrimeField(p)


def ring_from_json(tag):
    """Decode the wire format: "Q", "Z", or {"Fp": p}."""
    if tag == "Q":
        return QQ
    if tag == "Z":
        return ZZ
    if isinstance(tag, dict) and set(tag) == {"Fp"}:
        return PrimeField(int(tag["Fp"]))
    raise ValueError("unrecognized base ring %r" % (tag,))


def ring_to_json(ring):
    if ring is QQ:
        return "Q"
    if ring is ZZ:
        return "Z"
    if isinstance(ring, PrimeField):
        return {"Fp": ring.p}
    raise ValueError("cannot serialize %r" % (ring,))
