"""Exact arithmetic in the p-th cyclotomic field and its cubic-index subfield.

For a prime p = 3k + 1 the field L = Q(zeta_p) is represented in the power
basis {1, zeta, ..., zeta^(p-2)}; every element is a length-(p-1) vector of
exact rationals, kept in the unique reduced form where zeta^(p-1) has been
rewritten as -(1 + zeta + ... + zeta^(p-2)).  The Galois group acts by
zeta^i -> zeta^(t*i mod p).  The residue d of multiplicative order 3 picks
out the automorphism s = (zeta -> zeta^d) whose fixed field K has index 3
in L; Gaussian periods over the cosets of {1, d, d^2} give a Q-basis of K,
and {1, zeta, zeta^2} is a K-basis of L used to split elements into their
three K-coordinates.

All values are immutable and every operation is pure, so everything here
is safe to share between threads.
"""

import functools
from math import gcd, isqrt

from . import linalg
from .errors import BadResidue, DivisionByZero, NotPrime, SingularBasis, WrongResidue
from .rationals import ONE, ZERO, Rat, as_rat


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk scale, p <= ~10^4)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    top = isqrt(n)
    while f <= top:
        if n % f == 0:
            return False
        f += 2
    return True


class CycloField:
    """The field Q(zeta_p) for a prime p = 3k + 1, with its order-3 twist d.

    Use make_field() to construct; it validates p and selects d
    deterministically as the smallest residue of multiplicative order 3.
    """

    __slots__ = ("p", "d", "k")

    def __init__(self, p: int, d: int, k: int):
        self.p = p
        self.d = d
        self.k = k

    def __eq__(self, other):
        return isinstance(other, CycloField) and self.p == other.p

    def __hash__(self):
        return hash(("CycloField", self.p))

    def __repr__(self):
        return f"CycloField(p={self.p}, d={self.d}, k={self.k})"

    @property
    def degree(self) -> int:
        return self.p - 1

    # -- element constructors -------------------------------------------

    def element(self, coords) -> "FieldElem":
        coords = tuple(as_rat(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElem(self, coords)

    def zero(self) -> "FieldElem":
        return FieldElem(self, (ZERO,) * self.degree)

    def one(self) -> "FieldElem":
        return self.from_rational(ONE)

    def from_rational(self, q) -> "FieldElem":
        coords = [ZERO] * self.degree
        coords[0] = as_rat(q)
        return FieldElem(self, tuple(coords))

    def zeta(self, e: int = 1) -> "FieldElem":
        """The root of unity zeta^e, reduced."""
        e %= self.p
        coords = [ZERO] * self.degree
        if e == self.p - 1:
            # forced by the minimal polynomial 1 + zeta + ... + zeta^(p-1) = 0
            return FieldElem(self, (-ONE,) * self.degree)
        coords[e] = ONE
        return FieldElem(self, tuple(coords))

    def xi(self) -> "FieldElem":
        """The distinguished primitive root zeta itself."""
        return self.zeta(1)

    def gaussian_periods(self):
        """The k period sums over the cosets of {1, d, d^2}; a Q-basis of K."""
        return _gaussian_periods(self)

    def cosets(self):
        """Cosets of the subgroup {1, d, d^2} of (Z/p)*, smallest-rep first."""
        return _cosets(self)


def make_field(p: int) -> CycloField:
    """Validate p and build the field; d is the smallest order-3 residue."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p % 3 != 1:
        raise WrongResidue(f"p = {p} has p mod 3 = {p % 3}, need p = 1 (mod 3)")
    d = next(t for t in range(2, p) if pow(t, 3, p) == 1)
    return CycloField(p, d, (p - 1) // 3)


class FieldElem:
    """An element of Q(zeta_p) as a reduced power-basis coordinate vector."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: CycloField, coords: tuple):
        self.field = field
        self.coords = coords
        self._hash = None

    # -- ring structure ---------------------------------------------------

    def _check(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other
        return self.field.from_rational(other)

    def __add__(self, other):
        other = self._check(other)
        return FieldElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldElem(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            q = as_rat(other)
            return FieldElem(self.field, tuple(a * q for a in self.coords))
        other = self._check(other)
        p = self.field.p
        n = p - 1
        conv = [ZERO] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a:
                yc = other.coords
                for j in range(n):
                    b = yc[j]
                    if b:
                        conv[i + j] += a * b
        # exponents >= p wrap (zeta^p = 1); exponent p-1 folds via Phi_p
        out = conv[:n]
        for e in range(p, 2 * n - 1):
            out[e - p] += conv[e]
        top = conv[n]
        if top:
            out = [c - top for c in out]
        return FieldElem(self.field, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            q = as_rat(other)
            if not q:
                raise DivisionByZero("division by zero rational")
            return FieldElem(self.field, tuple(a / q for a in self.coords))
        return self * self._check(other).inv()

    def __rtruediv__(self, other):
        return self._check(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Rat)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __bool__(self):
        return any(self.coords)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field.p, self.coords))
            self._hash = h
        return h

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                if i == 0:
                    terms.append(str(c))
                elif i == 1:
                    terms.append(f"{c}*z")
                else:
                    terms.append(f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"

    # -- field-specific operations -----------------------------------------

    def inv(self) -> "FieldElem":
        """Multiplicative inverse via extended gcd against Phi_p over Q."""
        if not self:
            raise DivisionByZero("inverse of zero")
        p = self.field.p
        # r0 = Phi_p (all-ones, degree p-1), r1 = self; track Bezout factor of r1
        r0 = [ONE] * p
        r1 = list(self.coords)
        while r1 and not r1[-1]:
            r1.pop()
        t0: list = []
        t1 = [ONE]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            t_next = _poly_sub(t0, _poly_mul(q, t1))
            r0, r1 = r1, rem
            t0, t1 = t1, t_next
        if not r1:
            raise DivisionByZero("element shares a factor with Phi_p")  # unreachable: Phi_p irreducible
        c = r1[0]
        coords = [ZERO] * self.field.degree
        for i, t in enumerate(t1):
            coords[i] = t / c
        return FieldElem(self.field, tuple(coords))

    def apply_aut(self, t: int) -> "FieldElem":
        """The ring automorphism zeta^i -> zeta^(t*i mod p)."""
        p = self.field.p
        t %= p
        if gcd(t, p) != 1:
            raise BadResidue(f"t = {t} is not a unit modulo {p}")
        if t == 1:
            return self
        acc = [ZERO] * p
        for i, c in enumerate(self.coords):
            if c:
                acc[(t * i) % p] += c
        top = acc[p - 1]
        if top:
            return FieldElem(self.field, tuple(acc[i] - top for i in range(p - 1)))
        return FieldElem(self.field, tuple(acc[: p - 1]))

    def sigma(self, power: int = 1) -> "FieldElem":
        """The distinguished order-3 automorphism s = apply_aut(d), iterated."""
        return self.apply_aut(pow(self.field.d, power % 3, self.field.p))

    def relative_norm(self) -> "FieldElem":
        """x * s(x) * s^2(x); always lands in the fixed field K."""
        s1 = self.sigma(1)
        s2 = s1.sigma(1)
        return self * s1 * s2

    def is_in_K(self) -> bool:
        """True iff the element is fixed by s, i.e. lies in the index-3 subfield."""
        return self.sigma(1) == self

    def decompose_over_K(self):
        """Split x = k0 + k1*zeta + k2*zeta^2 with each ki in K.

        Solved against the precomputed inverse of the Q-basis matrix
        {eta_i * zeta^j}; raises SingularBasis if that matrix degenerates
        (it cannot for prime p >= 7).
        """
        sol = k_coordinate_vector(self.field, self.coords)
        k = self.field.k
        return tuple(
            k_elem_from_period_coords(self.field, sol[j * k : (j + 1) * k])
            for j in range(3)
        )


def _poly_divmod(num, den):
    # schoolbook division of rational coefficient lists (ascending order)
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [ZERO] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q = c / lead
            quot[i - dn] = q
            for j in range(dn + 1):
                num[i - dn + j] -= q * den[j]
    while num and not num[-1]:
        num.pop()
    return quot, num


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    while out and not out[-1]:
        out.pop()
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else ZERO) - (b[i] if i < len(b) else ZERO) for i in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


@functools.lru_cache(maxsize=None)
def _cosets(field: CycloField):
    p, d = field.p, field.d
    used = [False] * p
    cosets = []
    for r in range(1, p):
        if not used[r]:
            orbit = tuple(sorted({r, (r * d) % p, (r * d * d) % p}))
            for m in orbit:
                used[m] = True
            cosets.append(orbit)
    return tuple(cosets)


@functools.lru_cache(maxsize=None)
def _gaussian_periods(field: CycloField):
    periods = []
    for coset in _cosets(field):
        acc = field.zero()
        for m in coset:
            acc = acc + field.zeta(m)
        periods.append(acc)
    return tuple(periods)


@functools.lru_cache(maxsize=None)
def _k_basis_inverse(field: CycloField):
    """Columns of the inverse of the basis matrix {eta_i * zeta^j}.

    Returned transposed (index [input coordinate][unknown]) so decomposition
    is a sparse column accumulation.  Unknown order is (j, i): block j holds
    the period coordinates of the K-component multiplying zeta^j.
    """
    n = field.degree
    periods = _gaussian_periods(field)
    cols = []
    for j in range(3):
        zj = field.zeta(j) if j else field.one()
        for eta in periods:
            cols.append((eta * zj).coords)
    matrix = [[cols[c][r] for c in range(n)] for r in range(n)]
    try:
        inv = linalg.invert(matrix)
    except linalg.SingularMatrix as exc:  # pragma: no cover - impossible for prime p
        raise SingularBasis(str(exc)) from exc
    # transpose: row index = power-basis coordinate of the input
    return tuple(tuple(inv[i][j] for i in range(n)) for j in range(n))


def k_coordinate_vector(field: CycloField, coords) -> tuple:
    """Coordinates of an element in the basis {eta_i * zeta^j}, blocks by j."""
    binv = _k_basis_inverse(field)
    n = field.degree
    sol = [ZERO] * n
    for j, c in enumerate(coords):
        if c:
            col = binv[j]
            for i in range(n):
                sol[i] += c * col[i]
    return tuple(sol)


def k_elem_from_period_coords(field: CycloField, vec) -> FieldElem:
    """The fixed-field element sum(vec[i] * eta_i)."""
    periods = _gaussian_periods(field)
    acc = field.zero()
    for coeff, eta in zip(vec, periods):
        if coeff:
            acc = acc + eta * coeff
    return acc


@functools.lru_cache(maxsize=None)
def _period_mult_matrices(field: CycloField):
    """Per-period multiplication matrices in the period basis.

    M_i[l][j] = coefficient of eta_l in eta_i * eta_j, so multiplication by
    sum(c_i eta_i) acts on period coordinates as sum(c_i M_i).
    """
    k = field.k
    periods = _gaussian_periods(field)
    mats = []
    for i in range(k):
        cols = [
            k_coordinate_vector(field, (periods[i] * periods[j]).coords)[:k]
            for j in range(k)
        ]
        mats.append(tuple(tuple(cols[j][l] for j in range(k)) for l in range(k)))
    return tuple(mats)


@functools.lru_cache(maxsize=None)
def _one_period_coords(field: CycloField):
    return k_coordinate_vector(field, field.one().coords)[: field.k]


def k_inverse_from_period_coords(field: CycloField, vec) -> FieldElem:
    """Inverse of the fixed-field element with the given period coordinates.

    Solves the k x k rational system (mult-by-c) y = 1 instead of running a
    degree-(p-2) polynomial gcd; the small solve is what keeps projective
    canonicalization fast.
    """
    if not any(vec):
        raise DivisionByZero("inverse of zero in the fixed field")
    k = field.k
    mats = _period_mult_matrices(field)
    mc = [[ZERO] * k for _ in range(k)]
    for i, c in enumerate(vec):
        if c:
            mi = mats[i]
            for l in range(k):
                row = mi[l]
                target = mc[l]
                for j in range(k):
                    if row[j]:
                        target[j] += c * row[j]
    sol = linalg.solve(mc, list(_one_period_coords(field)))
    return k_elem_from_period_coords(field, sol)


def k_inverse(x: FieldElem) -> FieldElem:
    """Inverse of x, taking the fast period-basis route when x lies in K."""
    if x.is_in_K():
        coords = k_coordinate_vector(x.field, x.coords)
        return k_inverse_from_period_coords(x.field, coords[: x.field.k])
    return x.inv()
