"""Exact Laurent polynomials and truncated power series over them.

A Laurent polynomial in r torus variables z_1..z_r is stored as a dict
mapping integer exponent tuples of length r to nonzero Python ints, so all
arithmetic is exact.  A TruncatedSeries is a polynomial in one auxiliary
variable q, truncated at a fixed cap, whose coefficients are Laurent
polynomials; dividing by (1 - q z^mu) is the workhorse operation and is done
by the linear recurrence b_k = a_k + z^mu b_{k-1} rather than by building
the geometric series and convolving.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional

Exponent = tuple[int, ...]


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Laurent polynomial with integer coefficients in ``rank`` variables."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Optional[Mapping[Exponent, int]] = None):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        self.rank = rank
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != rank:
                    raise ValueError(
                        f"exponent {exp!r} has length {len(exp)}, expected {rank}"
                    )
                if coeff:
                    key = tuple(int(e) for e in exp)
                    c = clean.get(key, 0) + int(coeff)
                    if c:
                        clean[key] = c
                    else:
                        del clean[key]
        self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        exp = tuple(int(e) for e in exponent)
        return cls(len(exp), {exp: coeff})

    # -- ring operations ----------------------------------------------

    def _check_rank(self, other: "LaurentPoly") -> None:
        if self.rank != other.rank:
            raise ValueError(
                f"rank mismatch: {self.rank} vs {other.rank}"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_rank(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            c = out.get(exp, 0) + coeff
            if c:
                out[exp] = c
            else:
                out.pop(exp, None)
        return _raw(self.rank, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return _raw(self.rank, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        self._check_rank(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = _add_exponents(ea, eb)
                c = out.get(key, 0) + ca * cb
                if c:
                    out[key] = c
                else:
                    del out[key]
        return _raw(self.rank, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, k: int) -> "LaurentPoly":
        if k == 0:
            return LaurentPoly.zero(self.rank)
        return _raw(self.rank, {e: k * c for e, c in self.terms.items()})

    def shifted(self, mu: Exponent) -> "LaurentPoly":
        """Multiply by the monomial z^mu (cheap: keys translate)."""
        if len(mu) != self.rank:
            raise ValueError("shift exponent has wrong length")
        return _raw(self.rank, {_add_exponents(e, mu): c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms):
            coeff = self.terms[exp]
            mono = "*".join(
                f"z{i+1}^{e}" if e != 1 else f"z{i+1}"
                for i, e in enumerate(exp)
                if e
            )
            if not mono:
                bits.append(f"{coeff}")
            elif coeff == 1:
                bits.append(mono)
            elif coeff == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{coeff}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    # -- extraction ----------------------------------------------------

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.rank, 0)

    def coefficient(self, exponent: Iterable[int]) -> int:
        return self.terms.get(tuple(int(e) for e in exponent), 0)

    def max_abs_exponent(self) -> int:
        """Largest |e_i| over all stored exponents (0 for the zero poly)."""
        best = 0
        for exp in self.terms:
            for e in exp:
                a = -e if e < 0 else e
                if a > best:
                    best = a
        return best


def _raw(rank: int, terms: dict[Exponent, int]) -> LaurentPoly:
    """Internal: wrap an already-normalized term dict without copying."""
    p = LaurentPoly.__new__(LaurentPoly)
    p.rank = rank
    p.terms = terms
    return p


def constant_term(p: LaurentPoly) -> int:
    """Coefficient of z^0, the quantity Weyl integration extracts."""
    return p.constant_term()


def product(polys: Iterable[LaurentPoly], rank: int) -> LaurentPoly:
    out = LaurentPoly.one(rank)
    for p in polys:
        out = out * p
    return out


KeepPredicate = Callable[[Exponent, int], bool]


class TruncatedSeries:
    """Polynomial in q of degree <= cap with LaurentPoly coefficients."""

    __slots__ = ("rank", "cap", "coeffs")

    def __init__(self, rank: int, cap: int, coeffs: Optional[list[LaurentPoly]] = None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.rank = rank
        self.cap = cap
        if coeffs is None:
            coeffs = [LaurentPoly.zero(rank) for _ in range(cap + 1)]
        else:
            if len(coeffs) != cap + 1:
                raise ValueError("need exactly cap+1 coefficients")
            for c in coeffs:
                if c.rank != rank:
                    raise ValueError("coefficient rank mismatch")
        self.coeffs = list(coeffs)

    @classmethod
    def one(cls, rank: int, cap: int) -> "TruncatedSeries":
        s = cls(rank, cap)
        s.coeffs[0] = LaurentPoly.one(rank)
        return s

    def coefficient(self, k: int) -> LaurentPoly:
        if not 0 <= k <= self.cap:
            raise IndexError(f"degree {k} outside truncation cap {self.cap}")
        return self.coeffs[k]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        cap = min(self.cap, other.cap)
        out = TruncatedSeries(self.rank, cap)
        for i in range(cap + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(cap + 1 - i):
                b = other.coeffs[j]
                if b:
                    out.coeffs[i + j] = out.coeffs[i + j] + a * b
        return out

    def scale_poly(self, p: LaurentPoly) -> "TruncatedSeries":
        return TruncatedSeries(self.rank, self.cap, [c * p for c in self.coeffs])

    def mul_geometric(
        self, mu: Exponent, keep: Optional[KeepPredicate] = None
    ) -> "TruncatedSeries":
        """Multiply by 1/(1 - q z^mu), optionally pruning new exponents.

        The recurrence b_k = a_k + z^mu b_{k-1} realizes the division exactly.
        ``keep(exponent, k)`` may drop exponents that provably cannot reach
        the constant term later; with keep=None the result is exact.
        """
        mu = tuple(int(e) for e in mu)
        if len(mu) != self.rank:
            raise ValueError("weight has wrong length")
        out = TruncatedSeries(self.rank, self.cap)
        prev = LaurentPoly.zero(self.rank)
        for k in range(self.cap + 1):
            cur = self.coeffs[k] + prev.shifted(mu)
            if keep is not None and cur:
                kept = {e: c for e, c in cur.terms.items() if keep(e, k)}
                if len(kept) != len(cur.terms):
                    cur = _raw(self.rank, kept)
            out.coeffs[k] = cur
            prev = cur
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.rank == other.rank
            and self.cap == other.cap
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        bits = [f"({c!r})*q^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(bits) if bits else "0"


def geometric_factor(mu: Iterable[int], cap: int) -> TruncatedSeries:
    """The series 1/(1 - q z^mu) truncated at q^cap."""
    mu = tuple(int(e) for e in mu)
    return TruncatedSeries.one(len(mu), cap).mul_geometric(mu)
