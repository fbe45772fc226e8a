"""Exact arithmetic in GF(p^n) for odd p, built as a single extension of GF(p).

Elements are identified with their base-p integer encoding sum(c_i * p^i) of
the coefficient vector sum(c_i * t^i), where t is a root of the modulus.
The modulus is chosen deterministically: the first monic polynomial of
degree n, scanning coefficient tuples (c_{n-1}, ..., c_0) in ascending
lexicographic order, that is both irreducible and primitive.  Multiplication,
inversion, and square testing run on exp/log tables indexed by encodings.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import DivisionByZero, FieldMismatch, InvalidPrime, ParseError, TooLarge

DEFAULT_CAP = 1 << 24

# full addition tables are only worth the memory for small orders
_ADD_TABLE_MAX_ORDER = 2048


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists in ascending powers
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mod(a, f, p):
    """Remainder of a modulo the monic polynomial f, coefficients mod p."""
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _poly_trim([c % p for c in a[:df]] or [0])


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _monic_polys(deg, p):
    """All monic polynomials of the given degree, ascending coefficient order."""
    for idx in range(p**deg):
        coeffs = []
        r = idx
        for _ in range(deg):
            coeffs.append(r % p)
            r //= p
        yield coeffs + [1]


def _is_irreducible(f, p):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(d, p):
            if _poly_mod(f, g, p) == [0]:
                return False
    return True


class Field:
    """GF(p^n) with n = 2e, so the field is GF(q^2) for q = p^e.

    Attributes:
        p, e, n, q, order: characteristic, q = p^e, n = 2e, order = q^2.
        modulus: monic degree-n coefficient tuple, ascending powers.
        exp, log: numpy int32 tables; exp[j] encodes t^j, log inverts it
            on nonzero encodings (log[0] = -1).
    """

    def __init__(self, p: int, e: int, cap: int = DEFAULT_CAP):
        if p == 2 or not _is_prime(p):
            raise InvalidPrime(f"p = {p} is not an odd prime")
        if e < 1:
            raise InvalidPrime(f"e = {e} is not a positive integer")
        n = 2 * e
        order = p**n
        if order > cap:
            raise TooLarge(f"field order {p}^{n} = {order} exceeds cap {cap}")
        self.p = p
        self.e = e
        self.n = n
        self.q = p**e
        self.order = order

        self.modulus, exp = self._find_primitive_modulus()
        self.exp = np.asarray(exp, dtype=np.int64)
        self.log = np.full(order, -1, dtype=np.int64)
        self.log[self.exp] = np.arange(order - 1)
        if int(self.log[1]) != 0 or np.any(self.log[1:] < 0):
            raise ConsistencyError_never  # pragma: no cover - guarded by search

        pow_p = p ** np.arange(n, dtype=np.int64)
        digits = (np.arange(order, dtype=np.int64)[:, None] // pow_p) % p
        self._digits = digits.astype(np.int16)
        self._pow_p = pow_p
        self._neg_t = (((-digits) % p) * pow_p).sum(axis=1)
        if order <= _ADD_TABLE_MAX_ORDER:
            s = (digits[:, None, :] + digits[None, :, :]) % p
            self._add_t = (s * pow_p).sum(axis=2)
        else:
            self._add_t = None

    def _find_primitive_modulus(self):
        """First irreducible-and-primitive monic degree-n polynomial.

        Candidates are scanned in ascending lexicographic order of
        (c_{n-1}, ..., c_0).  Returns the modulus tuple and the exp table,
        which doubles as the proof that t generates the full cycle.
        """
        p, n, order = self.p, self.n, self.order
        for idx in range(order):
            coeffs = []
            r = idx
            for _ in range(n):
                coeffs.append(r % p)
                r //= p
            f = list(reversed(coeffs)) + []  # (c_{n-1},...,c_0) -> ascending
            f = coeffs[::-1]
            f = f + [1]
            # idx digits give (c_0', c_1', ...) for the tuple read
            # (c_{n-1},...,c_0); reverse to get ascending-power coefficients.
            if not _is_irreducible(f, p):
                continue
            exp = self._exp_cycle(f)
            if exp is not None:
                return tuple(f), exp
        raise InvalidPrime(f"no primitive polynomial of degree {n} over GF({p})")  # pragma: no cover

    def _exp_cycle(self, f):
        """Powers of t mod f as encodings, or None if t is not primitive."""
        p, n, order = self.p, self.n, self.order
        red = [(-c) % p for c in f[:n]]  # t^n = red, ascending
        cur = [1] + [0] * (n - 1)
        exp = []
        for j in range(order - 1):
            enc = 0
            for c in reversed(cur):
                enc = enc * p + c
            if enc == 1 and j > 0:
                return None
            exp.append(enc)
            top = cur[n - 1]
            cur = [0] + cur[: n - 1]
            if top:
                cur = [(a + top * b) % p for a, b in zip(cur, red)]
        # cycle must close back at 1
        enc = 0
        for c in reversed(cur):
            enc = enc * p + c
        return exp if enc == 1 else None

    # -- scalar arithmetic on encodings ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return int(self._add_t[a, b])
        s = (self._digits[a] + self._digits[b]) % self.p
        return int((s * self._pow_p).sum())

    def neg(self, a: int) -> int:
        return int(self._neg_t[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.order - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return int(self.exp[(self.log[a] * k) % (self.order - 1)])

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        return int(self.log[a]) % 2 == 0

    def sqrt(self, a: int) -> tuple[int, ...]:
        """All square roots of a, ascending by encoding."""
        if a == 0:
            return (0,)
        la = int(self.log[a])
        if la % 2:
            return ()
        r = int(self.exp[la // 2])
        return tuple(sorted({r, self.neg(r)}))

    # -- vectorized arithmetic on encoding arrays --------------------------

    def vadd(self, a, b):
        if self._add_t is not None:
            return self._add_t[a, b]
        s = (self._digits[a] + self._digits[b]) % self.p
        return (s * self._pow_p).sum(axis=-1)

    def vneg(self, a):
        return self._neg_t[a]

    def vmul(self, a, b):
        out = self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        """Inverses of nonzero encodings (zero entries are caller-masked)."""
        return self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)]

    # -- elements -----------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to a different field")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return FieldElement(self, value % self.p)

    def elem(self, enc: int) -> "FieldElement":
        """Element with the given encoding in [0, order)."""
        if not 0 <= enc < self.order:
            raise ValueError(f"encoding {enc} out of range")
        return FieldElement(self, enc)

    def from_coeffs(self, coeffs) -> "FieldElement":
        if len(coeffs) > self.n or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coefficient vector out of range")
        enc = sum(c * self.p**i for i, c in enumerate(coeffs))
        return FieldElement(self, enc)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def t(self) -> "FieldElement":
        return FieldElement(self, self.p)

    def elements(self):
        return (FieldElement(self, a) for a in range(self.order))

    # -- text ----------------------------------------------------------------

    _TERM_RE = re.compile(r"^(\d+)?(t(?:\^(\d+))?)?$")

    def parse(self, text: str) -> "FieldElement":
        """Parse canonical element syntax, e.g. "0", "2+3t", "1+t^2".

        Strict: coefficients must lie in 1..p-1 (no implicit reduction),
        exponents in 2..n-1, and no power may repeat.
        """
        if text == "0":
            return self.zero
        coeffs = [0] * self.n
        seen = set()
        for term in text.split("+"):
            m = self._TERM_RE.match(term)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ParseError(f"malformed term {term!r}")
            coeff_s, t_part, exp_s = m.groups()
            if t_part is None:
                power = 0
                coeff = int(coeff_s)
            else:
                if exp_s is None:
                    power = 1
                else:
                    power = int(exp_s)
                    if not 2 <= power <= self.n - 1:
                        raise ParseError(f"exponent {power} out of range in {term!r}")
                coeff = int(coeff_s) if coeff_s is not None else 1
            if not 1 <= coeff <= self.p - 1:
                raise ParseError(f"coefficient {coeff} out of range in {term!r}")
            if power in seen:
                raise ParseError(f"repeated power t^{power} in {text!r}")
            seen.add(power)
            coeffs[power] = coeff
        return self.from_coeffs(coeffs)

    def format(self, enc: int) -> str:
        if enc == 0:
            return "0"
        terms = []
        for i in range(self.n):
            c = (enc // self.p**i) % self.p
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "t" if i == 1 else f"t^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        mod = self.format(sum(c * self.p**i for i, c in enumerate(self.modulus[: self.n])))
        return f"Field(GF({self.p}^{self.n}), t^{self.n}+{mod})" if mod != "0" else f"Field(GF({self.p}^{self.n}))"


class FieldElement:
    """Immutable element of a Field, wrapping its integer encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field: Field, enc: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "enc", int(enc))

    def __setattr__(self, *args):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("operands from different fields")
            return other.enc
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.enc, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.enc, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(b, self.enc))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.enc, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.enc, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(b, self.enc))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.enc))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.enc, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.enc))

    def is_square(self) -> bool:
        return self.field.is_square(self.enc)

    def sqrt(self) -> set["FieldElement"]:
        return {FieldElement(self.field, r) for r in self.field.sqrt(self.enc)}

    @property
    def coeffs(self) -> tuple[int, ...]:
        p = self.field.p
        return tuple((self.enc // p**i) % p for i in range(self.field.n))

    @property
    def log(self):
        """Discrete log base t, or None for zero."""
        if self.enc == 0:
            return None
        return int(self.field.log[self.enc])

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.enc))

    def __str__(self):
        return self.field.format(self.enc)

    def __repr__(self):
        return f"<{self} in GF({self.field.order})>"


def build_field(p: int, e: int, cap: int = DEFAULT_CAP) -> Field:
    """Construct GF(p^(2e)) with its deterministic primitive modulus."""
    return Field(p, e, cap=cap)
