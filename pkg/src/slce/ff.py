"""Finite fields: GF(p^m) with a dense dlog table, and GF(2^f) residue fields.

GF(p^m) elements are encoded as ints in [0, q): the element with
polynomial-basis coefficients (c_0, ..., c_{m-1}) gets the code
c_0 + c_1 p + ... + c_{m-1} p^(m-1). The code order doubles as the
canonical "lexicographic" order (low coefficients weigh least), which pins
the modulus and the primitive element deterministically:

  * modulus: first irreducible monic polynomial of degree m in code order;
  * alpha:   first element of multiplicative order q - 1 in code order.

Construction fills a full power/dlog table, so multiplication, inversion
and discrete logs are O(1) lookups afterwards. The default size cap keeps
tables desk-sized; callers may raise it explicitly.

GF(2^f) residue fields are built as GF(2)[X]/(f_can) where f_can is the
canonical irreducible factor of the k-th cyclotomic polynomial mod 2, so
the class gamma of X has multiplicative order exactly k. This is the
concrete home for odd-order roots of X^T - 1 and for reductions of
cyclotomic integers modulo a prime over 2.
"""

import math
from functools import lru_cache

from . import polybin
from .errors import CompositeP, DivisionByZero, EvenK, KisOne, LogOfZero, SizeExceeded
from .numth import is_prime, multiplicative_order, prime_factors

DEFAULT_SIZE_CAP = 1 << 16


# ---------------------------------------------------------------------------
# dense GF(p) polynomial helpers used only during field construction


def _pp_mulmod(a, b, modulus, p):
    # a, b, modulus: coefficient lists (constant first), modulus monic
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(len(prod) - 1, m - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(m + 1):
                prod[i - m + j] = (prod[i - m + j] - c * modulus[j]) % p
    out = prod[:m]
    out += [0] * (m - len(out))
    return out


def _pp_powmod(a, e, modulus, p):
    m = len(modulus) - 1
    out = [1] + [0] * (m - 1)
    base = a[:]
    while e:
        if e & 1:
            out = _pp_mulmod(out, base, modulus, p)
        base = _pp_mulmod(base, base, modulus, p)
        e >>= 1
    return out


def _pp_gcd(a, b, p):
    a, b = a[:], b[:]

    def strip(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = strip(a), strip(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            s = len(a) - len(b)
            for j in range(len(b)):
                a[s + j] = (a[s + j] - c * b[j]) % p
            strip(a)
            if not a:
                break
        a, b = b, a
    return a


def _is_irreducible(coeffs, p):
    """Monic f of degree m is irreducible iff it shares no factor with any
    X^(p^d) - X for d <= m/2 (i.e. no factor of degree <= m/2)."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False  # divisible by X
    for d in range(1, m // 2 + 1):
        diff = _pp_powmod([0, 1], p**d, coeffs, p)  # X^(p^d) mod f, length m >= 2
        diff[1] = (diff[1] - 1) % p
        if len(_pp_gcd(coeffs[:], diff, p)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# GF(p^m)


class FieldElement:
    """Element of an ExtField, identified by its int code."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    @property
    def coeffs(self):
        """Polynomial-basis coefficients, constant term first."""
        p, m, c = self.field.p, self.field.m, self.code
        out = []
        for _ in range(m):
            c, r = divmod(c, p)
            out.append(r)
        return tuple(out)

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.element_from_int(other).code
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_codes(self.code, self.field.coerce_code(other)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __sub__(self, other):
        return self + (-FieldElement(self.field, self.field.coerce_code(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.coerce_code(other)) - self

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_codes(self.code, self.field.coerce_code(other)))

    __rmul__ = __mul__

    def inverse(self):
        if self.code == 0:
            raise DivisionByZero("inverse of zero")
        F = self.field
        n = F.dlog_code(self.code)
        return FieldElement(F, F.pow_alpha((-n) % (F.q - 1)))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self.field.coerce_code(other)).inverse()

    def __pow__(self, n):
        F = self.field
        if self.code == 0:
            if n < 0:
                raise DivisionByZero("inverse of zero")
            return F.one if n == 0 else F.zero
        d = F.dlog_code(self.code)
        return FieldElement(F, F.pow_alpha((d * n) % (F.q - 1)))

    def __repr__(self):
        return f"FieldElement(GF({self.field.q}), code={self.code})"


class ExtField:
    """GF(p^m) with canonical modulus, canonical primitive element, and a
    dense power/dlog table. Immutable after construction."""

    __slots__ = (
        "p", "m", "q", "modulus", "alpha_code",
        "_pow", "_dlog", "_p_minus_1", "_trace_basis", "_one_minus_dlog",
    )

    def __init__(self, p, m, size_cap=DEFAULT_SIZE_CAP):
        if not is_prime(p) or p == 2:
            raise CompositeP(f"p must be an odd prime, got {p}")
        if m < 1:
            raise ValueError("m must be >= 1")
        q = p**m
        if q > size_cap:
            raise SizeExceeded(f"q = {q} exceeds the size cap {size_cap}")
        self.p, self.m, self.q = p, m, q
        self._p_minus_1 = p - 1
        self.modulus = self._find_modulus()
        self.alpha_code = self._find_alpha()
        self._build_tables()
        self._trace_basis = None
        self._one_minus_dlog = None

    # -- construction -------------------------------------------------------

    def _find_modulus(self):
        p, m = self.p, self.m
        if m == 1:
            return (0, 1)  # X itself: GF(p)[X]/(X) = GF(p)
        for code in range(p**m):
            coeffs = []
            c = code
            for _ in range(m):
                c, r = divmod(c, p)
                coeffs.append(r)
            coeffs.append(1)
            if _is_irreducible(coeffs, p):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")

    def _raw_mul(self, a, b):
        # code-level multiply straight from the modulus; used only before
        # the dlog table exists
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da = [0] * m
        c = a
        for i in range(m):
            c, da[i] = divmod(c, p)
        db = [0] * m
        c = b
        for i in range(m):
            c, db[i] = divmod(c, p)
        prod = _pp_mulmod(da, db, list(self.modulus), p)
        code = 0
        for r in reversed(prod):
            code = code * p + r
        return code

    def _raw_pow(self, a, e):
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def _find_alpha(self):
        q = self.q
        rs = prime_factors(q - 1)
        for code in range(2, q):
            if all(self._raw_pow(code, (q - 1) // r) != 1 for r in rs):
                return code
        raise AssertionError("no primitive element found")

    def _build_tables(self):
        q = self.q
        pow_table = [0] * (q - 1)
        dlog = [-1] * q
        x = 1
        for n in range(q - 1):
            pow_table[n] = x
            dlog[x] = n
            x = self._raw_mul(x, self.alpha_code)
        assert x == 1, "alpha does not have order q - 1"
        self._pow = pow_table
        self._dlog = dlog

    # -- code-level arithmetic ----------------------------------------------

    def coerce_code(self, x):
        if isinstance(x, FieldElement):
            if x.field is not self:
                raise ValueError("elements belong to different fields")
            return x.code
        if isinstance(x, int):
            return self.element_from_int(x).code
        raise TypeError(f"cannot coerce {x!r} into GF({self.q})")

    def add_codes(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return (a + b) % p
        out, mult = 0, 1
        for _ in range(m):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += (ra + rb) % p * mult
            mult *= p
        return out

    def neg_code(self, a):
        p, m = self.p, self.m
        if m == 1:
            return (-a) % p
        out, mult = 0, 1
        for _ in range(m):
            a, ra = divmod(a, p)
            out += (-ra) % p * mult
            mult *= p
        return out

    def add_one_code(self, a):
        # adding the constant 1 only touches digit 0
        return a - self._p_minus_1 if a % self.p == self._p_minus_1 else a + 1

    def mul_codes(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._pow[(self._dlog[a] + self._dlog[b]) % (self.q - 1)]

    def dlog_code(self, a):
        if a == 0:
            raise LogOfZero("discrete log of zero")
        return self._dlog[a]

    def pow_alpha(self, n):
        return self._pow[n % (self.q - 1)]

    # -- public element API --------------------------------------------------

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def alpha(self):
        return FieldElement(self, self.alpha_code)

    def element(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"code out of range for GF({self.q})")
        return FieldElement(self, code)

    def element_from_int(self, n):
        # embed a rational integer via the prime subfield
        return FieldElement(self, n % self.p)

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError("too many coefficients")
        code, mult = 0, 1
        for c in coeffs:
            code += (c % self.p) * mult
            mult *= self.p
        return FieldElement(self, code)

    def elements(self):
        return (FieldElement(self, c) for c in range(self.q))

    def dlog(self, x):
        return self.dlog_code(self.coerce_code(x))

    # -- traces and the 1 - alpha^n table (lazy, used by character sums) -----

    def trace_code(self, code):
        """Absolute trace GF(q) -> GF(p) as an int in [0, p)."""
        p, m = self.p, self.m
        if m == 1:
            return code
        if self._trace_basis is None:
            basis = []
            for j in range(m):
                n = self._dlog[p**j]
                acc = 0
                for i in range(m):
                    acc = self.add_codes(acc, self._pow[n * p**i % (self.q - 1)])
                assert acc < p, "trace landed outside the prime subfield"
                basis.append(acc)
            self._trace_basis = basis
        acc, c = 0, code
        for j in range(m):
            c, r = divmod(c, p)
            acc += r * self._trace_basis[j]
        return acc % p

    def one_minus_dlog(self):
        """Table t[n] = dlog(1 - alpha^n); the n = 0 entry is None since
        1 - alpha^0 = 0."""
        if self._one_minus_dlog is None:
            out = []
            for n in range(self.q - 1):
                y = self.add_codes(1, self.neg_code(self._pow[n]))
                out.append(None if y == 0 else self._dlog[y])
            self._one_minus_dlog = out
        return self._one_minus_dlog

    def __repr__(self):
        return f"ExtField(p={self.p}, m={self.m})"


@lru_cache(maxsize=None)
def build_field(p, m, size_cap=DEFAULT_SIZE_CAP):
    """Construct (and cache) the canonical GF(p^m)."""
    return ExtField(p, m, size_cap)


def dlog(field, x):
    """n in [0, q-2] with alpha^n = x; raises LogOfZero for x = 0."""
    return field.dlog(x)


def with_primitive_element(field, alpha):
    """A field over the same modulus whose tables are rebuilt around a
    different primitive element; used to probe generator invariance."""
    code = field.coerce_code(alpha)
    if code == 0 or math.gcd(field.dlog_code(code), field.q - 1) != 1:
        raise ValueError("not a primitive element")
    other = object.__new__(ExtField)
    other.p, other.m, other.q = field.p, field.m, field.q
    other._p_minus_1 = field.p - 1
    other.modulus = field.modulus
    other.alpha_code = code
    other._build_tables()
    other._trace_basis = None
    other._one_minus_dlog = None
    return other


def primitive_elements(field):
    """All primitive elements, as codes, in canonical order."""
    q = field.q
    codes = [field._pow[n] for n in range(q - 1) if math.gcd(n, q - 1) == 1]
    return sorted(codes)


# ---------------------------------------------------------------------------
# GF(2^f) residue fields


class RFElement:
    """Element of a ResidueField, backed by an int bit-vector."""

    __slots__ = ("field", "bits")

    def __init__(self, field, bits):
        self.field = field
        self.bits = bits

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        if isinstance(other, RFElement):
            return self.field is other.field and self.bits == other.bits
        if isinstance(other, int):
            return self.bits == (other & 1)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.bits))

    def __add__(self, other):
        return RFElement(self.field, self.bits ^ self.field.coerce_bits(other))

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        return RFElement(self.field, self.field.mul_bits(self.bits, self.field.coerce_bits(other)))

    __rmul__ = __mul__

    def __pow__(self, n):
        return RFElement(self.field, self.field.pow_bits(self.bits, n))

    def order(self):
        if self.bits == 0:
            raise DivisionByZero("order of zero")
        t, x = 1, self.bits
        while x != 1:
            x = self.field.mul_bits(x, self.bits)
            t += 1
        return t

    def __repr__(self):
        return f"RFElement(GF(2^{self.field.f}), bits={bin(self.bits)})"


class ResidueField:
    """GF(2^f) = GF(2)[X]/(f_can), f_can the canonical factor of Phi_k mod 2.

    The class gamma of X has multiplicative order exactly k, realizing the
    residue ring of the cyclotomic integers of conductor k modulo the
    canonical prime over 2.
    """

    __slots__ = ("k", "f", "modulus", "_gamma_pows")

    def __init__(self, k, modulus_value, f):
        self.k = k
        self.f = f
        self.modulus = modulus_value  # int bit-vector of f_can
        self._gamma_pows = None

    def coerce_bits(self, x):
        if isinstance(x, RFElement):
            if x.field is not self:
                raise ValueError("elements belong to different residue fields")
            return x.bits
        if isinstance(x, int):
            return x & 1
        raise TypeError(f"cannot coerce {x!r}")

    def mul_bits(self, a, b):
        return polybin._mod2(polybin._mul2(a, b), self.modulus)

    def pow_bits(self, a, n):
        if n < 0:
            raise ValueError("negative power in a residue field")
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul_bits(out, base)
            base = self.mul_bits(base, base)
            n >>= 1
        return out

    @property
    def zero(self):
        return RFElement(self, 0)

    @property
    def one(self):
        return RFElement(self, 1)

    @property
    def gamma(self):
        return RFElement(self, polybin._mod2(2, self.modulus))

    def element(self, bits):
        return RFElement(self, polybin._mod2(bits, self.modulus))

    def gamma_pow_bits(self):
        """Cached table of gamma^j bits for j in [0, k)."""
        if self._gamma_pows is None:
            g = self.gamma.bits
            out = [1]
            for _ in range(self.k - 1):
                out.append(self.mul_bits(out[-1], g))
            assert self.mul_bits(out[-1], g) == 1
            self._gamma_pows = out
        return self._gamma_pows

    def modulus_poly(self):
        return polybin.BinaryPoly(self.modulus)

    def __repr__(self):
        return f"ResidueField(k={self.k}, f={self.f})"


@lru_cache(maxsize=None)
def _residue_field(k):
    f = multiplicative_order(2, k)
    fcan = polybin.factor_phi_mod2(k)[0]
    return ResidueField(k, fcan.value, f)


def build_residue_field(k):
    """Canonical GF(2^f) containing the order-k roots of unity; k odd > 1."""
    if k % 2 == 0:
        raise EvenK("k must be odd")
    if k == 1:
        raise KisOne("k = 1 gives the prime field; use the profile helpers")
    return _residue_field(k)
