"""Arithmetic in small finite fields F_{p^e}.

Fields are built by make_field(p, e).  The modulus is always the
lexicographically least monic irreducible polynomial of degree e over F_p
(coefficients compared constant-term first), so element encodings are
reproducible across runs and platforms.  Element i has coefficients equal to
the base-p digits of i, constant term first; enumeration order is i ascending.

All elements of a field are interned at construction time and arithmetic is
table-driven, which keeps exhaustive searches cheap.  The default order bound
of 121 covers every field the bundled verification grids touch.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    BadParameter,
    FieldTooLarge,
    MixedFields,
    NotPrime,
    NotQuadraticExtension,
)
from .primes import is_prime

DEFAULT_MAX_FIELD_ORDER = 121


def _poly_rem(f: list[int], g: Sequence[int], p: int) -> list[int]:
    """Remainder of f by monic g, coefficients low-to-high, mod p."""
    r = list(f)
    dg = len(g) - 1
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c:
            for t in range(dg + 1):
                r[k - dg + t] = (r[k - dg + t] - c * g[t]) % p
    return r[:dg]


def _is_irreducible(tail: tuple[int, ...], p: int, e: int) -> bool:
    """Test x^e + tail for irreducibility by trial division.

    A reducible monic polynomial of degree e has a monic factor of degree at
    most e // 2, so dividing by every monic polynomial of those degrees is a
    complete test (cheap at the orders we allow).
    """
    if e == 1:
        return True
    f = list(tail) + [1]
    for d in range(1, e // 2 + 1):
        for idx in range(p**d):
            g = _digits(idx, p, d) + [1]
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def _digits(i: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(i % p)
        i //= p
    return out


def _least_irreducible_tail(p: int, e: int) -> tuple[int, ...]:
    """Constant-term-first lexicographically least irreducible monic tail."""
    if e == 1:
        return (0,)  # the polynomial x
    from itertools import product

    for tail in product(range(p), repeat=e):
        if _is_irreducible(tail, p, e):
            return tail
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


class FieldElement:
    """An element of a FieldSpec, identified by its index encoding."""

    __slots__ = ("field", "idx")

    def __init__(self, field: "FieldSpec", idx: int):
        self.field = field
        self.idx = idx

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(_digits(self.idx, self.field.p, self.field.e))

    def _same(self, other: "FieldElement") -> None:
        if self.field is not other.field and self.field != other.field:
            raise MixedFields(f"{self.field} vs {other.field}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return self.field.elements[self.field.add_table[self.idx][other.idx]]

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        f = self.field
        return f.elements[f.add_table[self.idx][f.neg_table[other.idx]]]

    def __neg__(self) -> "FieldElement":
        return self.field.elements[self.field.neg_table[self.idx]]

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return self.field.elements[self.field.mul_table[self.idx][other.idx]]

    def inv(self) -> "FieldElement":
        if self.idx == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.field.elements[self.field.inv_table[self.idx]]

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inv()

    def __pow__(self, k: int) -> "FieldElement":
        f = self.field
        if self.idx == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero field element")
            return f.one if k == 0 else f.zero
        k %= f.order - 1
        return f.elements[f.pow_idx(self.idx, k)]

    def conj(self) -> "FieldElement":
        return conj(self)

    def __bool__(self) -> bool:
        return self.idx != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.idx == other.idx and (
            self.field is other.field or self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.field, self.idx))

    def serialize(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"F{self.field.order}:{self.serialize()}"


class FieldSpec:
    """A concrete F_{p^e} with interned elements and arithmetic tables.

    Immutable after construction; safe to share across threads.  Structural
    equality is on (p, e, modulus) so independently built copies of the same
    field interoperate, while fields with different moduli are hard errors in
    mixed arithmetic.
    """

    __slots__ = (
        "p",
        "e",
        "order",
        "modulus",
        "elements",
        "add_table",
        "mul_table",
        "neg_table",
        "inv_table",
        "frob_table",
        "conj_table",
        "_hash",
    )

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise BadParameter(f"extension degree must be >= 1, got {e}")
        self.p = p
        self.e = e
        self.order = p**e
        tail = _least_irreducible_tail(p, e)
        self.modulus = tail + (1,)  # monic, low-to-high
        self._hash = hash((p, e, self.modulus))
        self._build_tables()
        self.elements: tuple[FieldElement, ...] = tuple(
            FieldElement(self, i) for i in range(self.order)
        )

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.order
        tail = self.modulus[:-1]
        digits = [_digits(i, p, e) for i in range(q)]

        def encode(cs: Sequence[int]) -> int:
            acc = 0
            for c in reversed(cs):
                acc = acc * p + c
            return acc

        self.add_table = [
            [encode([(a + b) % p for a, b in zip(digits[i], digits[j])]) for j in range(q)]
            for i in range(q)
        ]
        self.neg_table = [encode([(-a) % p for a in digits[i]]) for i in range(q)]

        mul = []
        for i in range(q):
            row = []
            for j in range(q):
                conv = [0] * (2 * e - 1)
                di, dj = digits[i], digits[j]
                for a in range(e):
                    ca = di[a]
                    if ca:
                        for b in range(e):
                            conv[a + b] = (conv[a + b] + ca * dj[b]) % p
                for k in range(2 * e - 2, e - 1, -1):
                    c = conv[k]
                    if c:
                        conv[k] = 0
                        for t in range(e):
                            conv[k - e + t] = (conv[k - e + t] - c * tail[t]) % p
                row.append(encode(conv[:e]))
            mul.append(row)
        self.mul_table = mul

        inv = [0] * q
        for i in range(1, q):
            row = mul[i]
            for j in range(1, q):
                if row[j] == 1:
                    inv[i] = j
                    break
        self.inv_table = inv

        self.frob_table = [self.pow_idx(i, p) for i in range(q)]
        if e % 2 == 0:
            t = list(range(q))
            for _ in range(e // 2):
                t = [self.frob_table[i] for i in t]
            self.conj_table = t
        else:
            self.conj_table = None

    def pow_idx(self, idx: int, k: int) -> int:
        """Index of elements[idx] ** k for k >= 0, by square-and-multiply."""
        result = 1 if self.order > 1 else 0
        base = idx
        mul = self.mul_table
        while k:
            if k & 1:
                result = mul[result][base]
            base = mul[base][base]
            k >>= 1
        return result

    @property
    def zero(self) -> FieldElement:
        return self.elements[0]

    @property
    def one(self) -> FieldElement:
        return self.elements[1]

    @property
    def gen(self) -> FieldElement:
        """The class of x; equals the prime-field element 1's successor base p."""
        if self.e == 1:
            raise BadParameter("prime field has no polynomial generator x")
        return self.elements[self.p]

    def element(self, value) -> FieldElement:
        """Coerce an int (mod p, embedded as a constant) or coeff sequence."""
        if isinstance(value, FieldElement):
            if value.field is self or value.field == self:
                return self.elements[value.idx]
            raise MixedFields(f"{value.field} vs {self}")
        if isinstance(value, int):
            return self.elements[value % self.p]
        coeffs = list(value)
        if len(coeffs) != self.e:
            raise BadParameter(
                f"need {self.e} coefficients for F_{self.p}^{self.e}, got {len(coeffs)}"
            )
        acc = 0
        for c in reversed(coeffs):
            acc = acc * self.p + (c % self.p)
        return self.elements[acc]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self is other or (
            self.p == other.p and self.e == other.e and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def _build_field(p: int, e: int) -> FieldSpec:
    return FieldSpec(p, e)


def make_field(p: int, e: int, max_order: int | None = None) -> FieldSpec:
    """Canonical F_{p^e}; FieldTooLarge when p^e exceeds the order bound."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise BadParameter(f"extension degree must be >= 1, got {e}")
    limit = DEFAULT_MAX_FIELD_ORDER if max_order is None else max_order
    if p**e > limit:
        raise FieldTooLarge(f"field order {p}^{e} exceeds enumeration limit {limit}")
    return _build_field(p, e)


def conj(x: FieldElement) -> FieldElement:
    """The involution x -> x^q on a field presented as degree 2 over F_q."""
    field = x.field
    if field.conj_table is None:
        raise NotQuadraticExtension(
            f"{field} has odd degree {field.e}; no quadratic conjugation"
        )
    return field.elements[field.conj_table[x.idx]]


def enumerate_elements(field: FieldSpec) -> Iterator[FieldElement]:
    """All q elements, in the deterministic index (coefficient) order."""
    return iter(field.elements)
