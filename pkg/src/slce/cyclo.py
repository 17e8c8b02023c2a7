"""Exact arithmetic in rings of cyclotomic integers, multiplicative
characters, Gauss and Jacobi sums, and reduction modulo a prime over 2.

A cyclotomic integer of conductor N is stored by its coordinates in the
power basis 1, z, ..., z^(phi(N)-1) where z is a fixed primitive N-th root
of unity; products are reduced modulo the N-th cyclotomic polynomial, so
equal algebraic numbers always have identical coordinate vectors.

The exactness split: Jacobi sums (and the K sums built from them) are
computed exactly here, because the divisibility criteria are congruences
between Jacobi sums. Gauss sums are evaluated numerically only, plus the
two closed forms (quadratic and semiprimitive) that the criteria consume;
an exact Gauss sum would drag in the conductor lcm(p, q-1) for no benefit.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from . import polybin
from .errors import ConductorMismatch, NotSemiprimitive, SizeExceeded
from .ff import build_field
from .numth import divisors

CONDUCTOR_CAP = 1 << 16


# ---------------------------------------------------------------------------
# cyclotomic polynomials over Z


def _int_poly_div_exact(a, b):
    # exact division of integer polynomials, b monic; coefficient lists,
    # constant term first
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    assert all(c == 0 for c in a), "division was not exact"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N):
    """Exact integer coefficients of the N-th cyclotomic polynomial,
    constant term first."""
    if N < 1:
        raise ValueError("N must be positive")
    if N > CONDUCTOR_CAP:
        raise SizeExceeded(f"conductor {N} exceeds the cap {CONDUCTOR_CAP}")
    if N == 1:
        return (-1, 1)
    rem = [-1] + [0] * (N - 1) + [1]
    for d in divisors(N)[:-1]:
        rem = _int_poly_div_exact(rem, cyclotomic_polynomial(d))
    return tuple(rem)


@lru_cache(maxsize=None)
def _conductor_data(N):
    # (phi, pow_table): pow_table[e] = coordinates of z^e for every exponent
    # that can appear while folding sums (e < N) or schoolbook products
    # (e < 2 phi - 1)
    cyc = cyclotomic_polynomial(N)
    phi = len(cyc) - 1
    limit = max(N, 2 * phi - 1)
    pows = []
    for e in range(phi):
        v = [0] * phi
        v[e] = 1
        pows.append(tuple(v))
    cur = list(pows[-1])
    for _ in range(phi, limit):
        top = cur[phi - 1]
        nxt = [0] + cur[: phi - 1]
        if top:
            for i in range(phi):
                nxt[i] -= top * cyc[i]
        pows.append(tuple(nxt))
        cur = nxt
    return phi, tuple(pows)


# ---------------------------------------------------------------------------
# cyclotomic integers


class CycInt:
    """Exact element of Z[z_N] in the power basis."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        phi, _ = _conductor_data(conductor)
        coeffs = tuple(coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coordinates for conductor {conductor}")
        self.conductor = conductor
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, N):
        phi, _ = _conductor_data(N)
        return cls(N, (0,) * phi)

    @classmethod
    def from_int(cls, N, c):
        phi, _ = _conductor_data(N)
        return cls(N, (c,) + (0,) * (phi - 1))

    @classmethod
    def root(cls, N, e):
        """z_N^e."""
        phi, pows = _conductor_data(N)
        return cls(N, pows[e % N])

    @classmethod
    def from_exponent_counts(cls, N, counts):
        """sum counts[e] * z_N^e for e in [0, N)."""
        phi, pows = _conductor_data(N)
        if len(counts) != N:
            raise ValueError("counts must have length N")
        out = list(counts[:phi])
        for e in range(phi, N):
            c = counts[e]
            if c:
                pe = pows[e]
                for i in range(phi):
                    out[i] += c * pe[i]
        return cls(N, out)

    # -- ring operations ------------------------------------------------------

    def _match(self, other):
        if isinstance(other, int):
            return CycInt.from_int(self.conductor, other)
        if isinstance(other, CycInt):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductors {self.conductor} and {other.conductor} differ"
                )
            return other
        return None

    def __add__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return CycInt(self.conductor, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return CycInt(self.conductor, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.conductor, tuple(a * other for a in self.coeffs))
        o = self._match(other)
        if o is None:
            return NotImplemented
        phi, pows = _conductor_data(self.conductor)
        a, b = self.coeffs, o.coeffs
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = list(conv[:phi])
        for e in range(phi, 2 * phi - 1):
            c = conv[e]
            if c:
                pe = pows[e]
                for i in range(phi):
                    out[i] += c * pe[i]
        return CycInt(self.conductor, out)

    __rmul__ = __mul__

    def conj(self):
        """Complex conjugation z -> z^(-1)."""
        N = self.conductor
        counts = [0] * N
        for i, c in enumerate(self.coeffs):
            if c:
                counts[(N - i) % N] += c
        return CycInt.from_exponent_counts(N, counts)

    def embed(self, N2):
        """Image under z_N -> z_N2^(N2/N); requires N | N2."""
        N = self.conductor
        if N2 % N != 0:
            raise ConductorMismatch(f"{N} does not divide {N2}")
        if N2 == N:
            return self
        ratio = N2 // N
        counts = [0] * N2
        for i, c in enumerate(self.coeffs):
            if c:
                counts[(i * ratio) % N2] += c
        return CycInt.from_exponent_counts(N2, counts)

    # -- predicates / conversions ---------------------------------------------

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def as_int(self):
        """The rational integer this element equals, if it is one."""
        if any(c for c in self.coeffs[1:]):
            raise ValueError("not a rational integer")
        return self.coeffs[0]

    def to_complex(self):
        N = self.conductor
        return sum(
            c * cmath.exp(2j * math.pi * i / N) for i, c in enumerate(self.coeffs) if c
        )

    def to_json(self):
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"CycInt(N={self.conductor}, {list(self.coeffs)})"


# ---------------------------------------------------------------------------
# multiplicative characters


class Character:
    """Multiplicative character of GF(q)* determined by its value at alpha.

    Index a in [0, q-1) means the character maps alpha to z_{q-1}^a; the
    value at 0 is 0 by convention, which makes all the character-sum
    bookkeeping uniform. Values are reported in the conductor equal to the
    character order.
    """

    __slots__ = ("field", "a", "order", "_stride", "_c")

    def __init__(self, field, a):
        qm1 = field.q - 1
        self.field = field
        self.a = a % qm1
        g = math.gcd(self.a, qm1)
        self.order = qm1 // g
        self._stride = g
        self._c = self.a // g  # value at alpha^n is z_order^(c n)

    @classmethod
    def eta(cls, field, num, den):
        """eta_{num/den}: requires den | q - 1."""
        qm1 = field.q - 1
        if qm1 % den != 0:
            raise ValueError(f"{den} does not divide q - 1 = {qm1}")
        return cls(field, num * (qm1 // den) % qm1)

    @classmethod
    def trivial(cls, field):
        return cls(field, 0)

    @classmethod
    def quadratic(cls, field):
        return cls.eta(field, 1, 2)

    @property
    def is_trivial(self):
        return self.a == 0

    def __mul__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        if other.field is not self.field:
            raise ValueError("characters of different fields")
        return Character(self.field, self.a + other.a)

    def conj(self):
        return Character(self.field, -self.a)

    def exponent_at(self, n):
        """Exponent e with value z_order^e at alpha^n."""
        return (self._c * n) % self.order

    def value(self, x):
        """chi(x) as an exact CycInt of conductor order(chi); chi(0) = 0."""
        code = self.field.coerce_code(x)
        if code == 0:
            return CycInt.zero(self.order)
        return CycInt.root(self.order, self.exponent_at(self.field.dlog_code(code)))

    def __repr__(self):
        return f"Character(GF({self.field.q}), a={self.a}, order={self.order})"


def char_value(chi, x):
    return chi.value(x)


# ---------------------------------------------------------------------------
# Jacobi and Gauss sums


def jacobi_sum(chi1, chi2):
    """J(chi1, chi2) = sum over x of chi1(x) chi2(1-x), exactly.

    The terms at x = 0 and x = 1 vanish by the chi(0) = 0 convention; the
    result lives in conductor lcm(order chi1, order chi2).
    """
    if chi1.field is not chi2.field:
        raise ValueError("characters of different fields")
    field = chi1.field
    N = math.lcm(chi1.order, chi2.order)
    b1 = (N // chi1.order) * chi1._c
    b2 = (N // chi2.order) * chi2._c
    one_minus = field.one_minus_dlog()
    counts = [0] * N
    for dx in range(field.q - 1):
        dy = one_minus[dx]
        if dy is None:
            continue
        counts[(b1 * dx + b2 * dy) % N] += 1
    return CycInt.from_exponent_counts(N, counts)


def k_sum_counts(chi, conductor):
    """Raw root-of-unity multiplicities of K(chi) = J(rho, chi): entry e
    counts (with sign from rho) the terms equal to z_conductor^e.

    Callers that combine many K sums stay in this representation, where
    multiplying by a root of unity is a cyclic rotation, and fold to the
    power basis only when a congruence is finally tested."""
    field = chi.field
    o = chi.order
    if conductor % o != 0:
        raise ConductorMismatch(
            f"conductor {conductor} does not contain order {o} values"
        )
    b = (conductor // o) * chi._c
    one_minus = field.one_minus_dlog()
    counts = [0] * conductor
    for dx in range(field.q - 1):
        dy = one_minus[dx]
        if dy is None:
            continue
        if dx & 1:
            counts[(b * dy) % conductor] -= 1
        else:
            counts[(b * dy) % conductor] += 1
    return counts


def k_sum(chi, conductor=None):
    """K(chi) = J(rho, chi) with rho the quadratic character.

    rho only contributes signs, so the sum can be carried out in any
    conductor that is a multiple of order(chi), odd ones included; the
    default matches jacobi_sum's lcm(2, order chi).
    """
    N = math.lcm(2, chi.order) if conductor is None else conductor
    return CycInt.from_exponent_counts(N, k_sum_counts(chi, N))


def gauss_sum_numeric(chi):
    """G(chi) = sum over x of chi(x) e^(2 pi i Tr(x)/p), as a complex float.

    Accuracy is bounded by q times machine epsilon; fine for sign and
    magnitude checks at desk scale.
    """
    field = chi.field
    q, p = field.q, field.p
    qm1 = q - 1
    zq = [cmath.exp(2j * math.pi * n / qm1) for n in range(qm1)]
    zp = [cmath.exp(2j * math.pi * c / p) for c in range(p)]
    a = chi.a
    total = 0j
    for dx in range(qm1):
        total += zq[(a * dx) % qm1] * zp[field.trace_code(field._pow[dx])]
    return total


@dataclass(frozen=True)
class QuadraticGaussValue:
    """Closed form of the quadratic Gauss sum: sign * sqrt(q), possibly
    times i."""

    sign: int
    imaginary: bool
    q: int

    def to_complex(self):
        v = self.sign * math.sqrt(self.q)
        return complex(0, v) if self.imaginary else complex(v, 0)

    @property
    def is_rational_integer(self):
        return not self.imaginary and math.isqrt(self.q) ** 2 == self.q

    def as_int(self):
        if not self.is_rational_integer:
            raise ValueError("value is irrational")
        return self.sign * math.isqrt(self.q)

    def __str__(self):
        core = f"sqrt({self.q})" if not self.is_rational_integer else str(math.isqrt(self.q))
        s = "-" if self.sign < 0 else "+"
        return f"{s}{'i*' if self.imaginary else ''}{core}"


def quadratic_gauss_closed(p, m):
    """G(rho) for GF(p^m): (-1)^(m-1) sqrt(q) when p = 1 mod 4, and
    (-1)^(m-1) i^m sqrt(q) when p = 3 mod 4."""
    if p % 2 == 0:
        raise ValueError("p must be odd")
    q = p**m
    if p % 4 == 1:
        return QuadraticGaussValue(1 if m % 2 == 1 else -1, False, q)
    r = m % 4
    sign, imag = {0: (-1, False), 1: (1, True), 2: (1, False), 3: (-1, True)}[r]
    return QuadraticGaussValue(sign, imag, q)


@dataclass(frozen=True)
class SemiprimitiveGaussValue:
    """G(chi) in the semiprimitive case: a rational integer of magnitude
    sqrt(q). The printed sign rule is validated against the numeric sum;
    on disagreement the numeric sign wins and the mismatch is flagged."""

    value: int
    magnitude: int
    formula_sign: int
    numeric_sign: int
    v: int
    w: int

    @property
    def formula_mismatch(self):
        return self.formula_sign != self.numeric_sign


def _minimal_v(p, N, bound):
    for v in range(1, bound + 1):
        if (pow(p, v) + 1) % N == 0:
            return v
    return None


def semiprimitive_gauss_closed(p, m, N, size_cap=None):
    """Closed form for G(chi), ord(chi) = N > 2, when some p^v = -1 mod N.

    v is minimal; requires m = 2vw. The sign comes from the parity of
    w - 1 + p w (p^v + 1)/N and is cross-checked against the numeric Gauss
    sum of the canonical character of order N.
    """
    if N <= 2:
        raise ValueError("N must exceed 2")
    v = _minimal_v(p, N, m)
    if v is None:
        raise NotSemiprimitive(f"no v <= {m} with p^v = -1 mod {N}")
    if m % (2 * v) != 0:
        raise NotSemiprimitive(f"m = {m} is not 2vw for v = {v}")
    w = m // (2 * v)
    magnitude = p ** (m // 2)
    exponent = (w - 1) + p * w * ((p**v + 1) // N)
    formula_sign = -1 if exponent % 2 else 1
    field = build_field(p, m) if size_cap is None else build_field(p, m, size_cap)
    g = gauss_sum_numeric(Character(field, (field.q - 1) // N))
    assert abs(g.imag) < 1e-6 * magnitude and abs(abs(g.real) - magnitude) < 1e-6 * magnitude
    numeric_sign = 1 if g.real > 0 else -1
    value = numeric_sign * magnitude
    return SemiprimitiveGaussValue(value, magnitude, formula_sign, numeric_sign, v, w)


# ---------------------------------------------------------------------------
# the prime over 2 and its ideals


@dataclass(frozen=True)
class IdealSpec:
    """The modulus 2^(h+1) P O_L, where P = (2, f_can(z_k)) is the canonical
    prime over 2 in Z[z_k] and O_L = Z[z_{2^h k}] is the working ring."""

    rf: object  # ResidueField
    h: int

    @property
    def k(self):
        return self.rf.k

    @property
    def fcan(self):
        return self.rf.modulus

    @property
    def conductor(self):
        return self.k if self.h == 0 else (1 << self.h) * self.k

    @property
    def power(self):
        return 1 << (self.h + 1)


def reduce_mod_P(x, spec):
    """Image of x in O_K/P = GF(2^f): z_k -> gamma, coefficients mod 2."""
    if spec.h != 0:
        raise ConductorMismatch("reduction modulo P uses the h = 0 spec")
    if x.conductor != spec.k:
        raise ConductorMismatch(f"conductor {x.conductor} != k = {spec.k}")
    bits = 0
    for i, c in enumerate(x.coeffs):
        if c & 1:
            bits |= 1 << i
    return spec.rf.element(bits)


def ideal_membership(x, spec, two_exponent=None):
    """Is x in 2^c P O_L, with O_L = Z[z_{2^h k}] and c = two_exponent
    (default h + 1)?

    Since O_L is torsion-free this splits as: every power-basis coordinate
    divisible by 2^c, and y = x / 2^c lying in P O_L. The latter only
    depends on y mod 2: in GF(2)[X]/(Phi_N mod 2) the image of P O_L is
    generated by f_can(X)^(2^h), so membership is divisibility of the
    residue polynomial by gcd(f_can^(2^h), Phi_N mod 2).
    """
    N = spec.conductor
    if x.conductor != N:
        raise ConductorMismatch(f"conductor {x.conductor} != working ring {N}")
    c = spec.h + 1 if two_exponent is None else two_exponent
    mod = 1 << c
    if any(coef % mod for coef in x.coeffs):
        return False
    ybits = 0
    for i, coef in enumerate(x.coeffs):
        if (coef >> c) & 1:
            ybits |= 1 << i
    if ybits == 0:
        return True
    lift = polybin._frobenius_pow(spec.fcan, 1 << spec.h)
    g = polybin._gcd2(lift, polybin.phi_mod2(N))
    return polybin._mod2(ybits, g) == 0
