"""Finite fields GF(p^k), projective points, and orthogonality graphs.

Field elements are encoded as integers 0..q-1 whose base-p digits are the
polynomial coefficients (constant term = least significant digit). The
modulus is the lexicographically smallest monic irreducible of degree k,
comparing coefficient lists low-degree-first, so element encodings and
vertex orderings are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import BadDimension, NotPrime, Overflow, TooLarge
from .graphs import Graph

Q_LIMIT = 1 << 16
POINT_LIMIT = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def gaussian_count(q: int, k: int) -> int:
    """Number of projective points of dimension k over GF(q): (q^k-1)/(q-1)."""
    return (q**k - 1) // (q - 1)


# --- polynomial helpers over GF(p); coefficient lists, low degree first ---

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) - 1 >= dn and any(num):
        shift = len(num) - 1 - dn
        factor = (num[-1] * inv_lead) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        _poly_trim(num)
        if not num:
            break
    return num


def _poly_divides(den: list[int], num: list[int], p: int) -> bool:
    return not _poly_mod(num, den, p)


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=d):
            den = list(tail) + [1]
            if _poly_divides(den, poly, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) with arithmetic on integer-encoded elements."""

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]  # length k+1, monic, index i = coeff of x^i

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a, low degree first, length k."""
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _encode(self, cs) -> int:
        val = 0
        for c in reversed(list(cs)):
            val = val * self.p + (c % self.p)
        return val

    def add(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self._encode((x + y) % self.p for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        return self._encode((-c) % self.p for c in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x == 0:
                continue
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_mod(prod, list(self.modulus), self.p)
        return self._encode(rem + [0] * (self.k - len(rem)))

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    @cached_property
    def minus_one(self) -> int:
        return self.neg(1)

    def quadratic_character(self, a: int) -> int:
        """+1 on nonzero squares, -1 on non-squares, 0 at 0 (odd q only)."""
        if self.q % 2 == 0:
            raise BadDimension("quadratic character needs odd field order")
        if a == 0:
            return 0
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def dot(self, x, y) -> int:
        """Standard inner product sum x_i * y_i of two coordinate vectors."""
        s = 0
        for a, b in zip(x, y):
            s = self.add(s, self.mul(a, b))
        return s


def make_field(p: int, k: int = 1, q_limit: int = Q_LIMIT) -> FieldSpec:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise TooLarge(f"extension degree must be >= 1, got {k}")
    q = p**k
    if q > q_limit:
        raise TooLarge(f"field order {q} exceeds limit {q_limit}")
    if k == 1:
        modulus = (0, 1)  # the polynomial x
    else:
        modulus = None
        for tail in product(range(p), repeat=k):
            cand = list(tail) + [1]
            if _is_irreducible(cand, p):
                modulus = tuple(cand)
                break
        assert modulus is not None  # degree-k irreducibles always exist
    return FieldSpec(p, k, q, modulus)


def field_for_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q, via its prime factorization."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = 2
    while q % p != 0:
        p += 1
        if p * p > q:
            p = q
            break
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return make_field(p, k)


def projective_points(f: FieldSpec, n: int,
                      point_limit: int = POINT_LIMIT) -> list[tuple[int, ...]]:
    """All normalized projective points of F^n, in enumeration order.

    Points are grouped by the position of the leading 1, earliest first;
    the free trailing coordinates run in ascending encoded order. Each
    projective class appears exactly once (first nonzero coordinate is 1).
    """
    if n < 1:
        raise BadDimension("dimension must be >= 1")
    count = gaussian_count(f.q, n)
    if count > point_limit:
        raise Overflow(f"{count} projective points exceed limit {point_limit}")
    pts: list[tuple[int, ...]] = []
    for lead in range(n):
        for tail in product(f.elements(), repeat=n - 1 - lead):
            pts.append((0,) * lead + (1,) + tail)
    return pts


def orthogonality_graph(f: FieldSpec, n: int) -> Graph:
    """Graph on projective points of F^n; [x] ~ [y] iff x.y = 0, x != y.

    Self-orthogonal (isotropic) points carry no loop; they are exactly
    the vertices of non-maximal degree.
    """
    if n < 3:
        raise BadDimension("orthogonality graph needs dimension >= 3")
    pts = projective_points(f, n)
    edges = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if f.dot(pts[i], pts[j]) == 0:
                edges.append((i, j))
    return Graph(len(pts), tuple(edges))


def er_graph(q: int) -> Graph:
    """Polarity graph of the projective plane over GF(q) (dimension 3)."""
    return orthogonality_graph(field_for_order(q), 3)


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular parameters (v, k, lam, mu)."""

    v: int
    k: int
    lam: int
    mu: int

    @property
    def is_feasible(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu


def predicted_derived_srg(q: int, n: int) -> SrgParams | None:
    """Predicted strongly regular parameters of the derived orthogonality graph.

    Odd n: ([n-1]_q, [n-2]_q - 1, [n-3]_q - 2, [n-3]_q). Even n with odd q:
    the same shifted by eps*q^(n/2-1) (eps*q^(n/2-2) on mu), where
    eps = sigma(-1)^(n/2) and sigma is the quadratic character. Even n with
    even q has no prediction (returns None).
    """
    if n <= 3:
        raise BadDimension(f"no derived-graph prediction for dimension {n}")
    f = field_for_order(q)
    kq = lambda k: gaussian_count(q, k)
    if n % 2 == 1:
        return SrgParams(kq(n - 1), kq(n - 2) - 1, kq(n - 3) - 2, kq(n - 3))
    if q % 2 == 0:
        return None
    eps = f.quadratic_character(f.minus_one) ** (n // 2)
    shift = eps * q ** (n // 2 - 1)
    return SrgParams(kq(n - 1) + shift, kq(n - 2) - 1 + shift,
                     kq(n - 3) - 2 + shift, kq(n - 3) + eps * q ** (n // 2 - 2))


def measure_srg(g: Graph) -> SrgParams | None:
    """Measured (v, k, lam, mu) if g is strongly regular, else None.

    Degenerate cases (irregular, edgeless, or complete graphs) yield None.
    """
    if g.order < 2:
        return None
    degs = [len(ns) for ns in g.adjacency]
    if len(set(degs)) != 1:
        return None
    nbrs = [set(ns) for ns in g.adjacency]
    lams: set[int] = set()
    mus: set[int] = set()
    for u in range(g.order):
        for v in range(u + 1, g.order):
            common = len(nbrs[u] & nbrs[v])
            if g.has_edge(u, v):
                lams.add(common)
            else:
                mus.add(common)
            if len(lams) > 1 or len(mus) > 1:
                return None
    if not lams or not mus:
        return None  # edgeless or complete: parameters degenerate
    return SrgParams(g.order, degs[0], lams.pop(), mus.pop())
