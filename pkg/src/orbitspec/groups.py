"""Root data for compact connected groups and their sphere actions.

A GroupSpec carries exactly what Weyl-integration needs: the torus rank, the
list of roots as integer exponent vectors, the Weyl group order, and (once an
action is attached) the weights of the ambient real representation, listed
with multiplicity.  Supported families are U(n), Sp(n) and SO(2n); products
concatenate torus coordinates.

Conventions.  U(n): roots e_i - e_j (i != j), |W| = n!.  Sp(n): roots
+-2f_i and +-f_i +- f_j (i < j), |W| = 2^n n!.  SO(2n): roots +-g_i +- g_j
(i < j), |W| = 2^(n-1) n!; SO(2) is a torus, not accepted by the orthogonal
constructor.  A complex representation with torus weights w contributes the
pair of weights +-w to the realified action, so realifying C^d doubles the
weight list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from math import factorial
from typing import Iterable, Sequence

Weight = tuple[int, ...]

_FAMILIES = ("U", "Sp", "SOeven")


@dataclass(frozen=True)
class GroupSpec:
    """Torus-level description of a compact group with an optional action.

    Attributes
    ----------
    factors : tuple of (family, rank) pairs, families drawn from
        {"U", "Sp", "SOeven"}; for "SOeven" the recorded rank n means SO(2n).
    rank : total torus rank (sum over factors).
    roots : integer exponent vectors of all roots, zero-padded to ``rank``.
    weyl_order : order of the Weyl group (product over factors).
    dim : real dimension of the group, rank + len(roots).
    ambient_weights : weights of the attached real action, with multiplicity;
        empty when no action is attached.
    """

    factors: tuple[tuple[str, int], ...]
    rank: int
    roots: tuple[Weight, ...]
    weyl_order: int
    dim: int
    ambient_weights: tuple[Weight, ...] = field(default=())

    @property
    def ambient_real_dim(self) -> int:
        return len(self.ambient_weights)

    def with_action(self, weights: Iterable[Iterable[int]]) -> "GroupSpec":
        """Attach ambient weights (listed with multiplicity, one per real dim)."""
        ws = tuple(tuple(int(e) for e in w) for w in weights)
        for w in ws:
            if len(w) != self.rank:
                raise ValueError(
                    f"weight {w!r} has length {len(w)}, torus rank is {self.rank}"
                )
        return replace(self, ambient_weights=ws)

    def describe(self) -> str:
        return " x ".join(
            f"SO({2 * n})" if fam == "SOeven" else f"{fam}({n})"
            for fam, n in self.factors
        )


def _unit(rank: int, i: int, value: int = 1) -> Weight:
    w = [0] * rank
    w[i] = value
    return tuple(w)


def make_unitary(n: int) -> GroupSpec:
    """U(n).  Rank n; roots e_i - e_j for i != j; |W| = n!."""
    if n < 1:
        raise ValueError("U(n) needs n >= 1")
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                w = [0] * n
                w[i] = 1
                w[j] = -1
                roots.append(tuple(w))
    return GroupSpec(
        factors=(("U", n),),
        rank=n,
        roots=tuple(roots),
        weyl_order=factorial(n),
        dim=n * n,
    )


def make_symplectic(n: int) -> GroupSpec:
    """Sp(n), the compact quaternionic group of rank n; |W| = 2^n n!."""
    if n < 1:
        raise ValueError("Sp(n) needs n >= 1")
    roots = []
    for i in range(n):
        roots.append(_unit(n, i, 2))
        roots.append(_unit(n, i, -2))
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    w = [0] * n
                    w[i] = si
                    w[j] = sj
                    roots.append(tuple(w))
    return GroupSpec(
        factors=(("Sp", n),),
        rank=n,
        roots=tuple(roots),
        weyl_order=(2**n) * factorial(n),
        dim=n * (2 * n + 1),
    )


def make_so_even(n: int) -> GroupSpec:
    """SO(2n) for n >= 2.  SO(2) is a torus; use make_unitary(1) for circles."""
    if n < 2:
        raise ValueError(
            "SO(2) is a torus with no roots; use make_unitary(1) for circle factors"
        )
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    w = [0] * n
                    w[i] = si
                    w[j] = sj
                    roots.append(tuple(w))
    return GroupSpec(
        factors=(("SOeven", n),),
        rank=n,
        roots=tuple(roots),
        weyl_order=(2 ** (n - 1)) * factorial(n),
        dim=n * (2 * n - 1),
    )


def product(a: GroupSpec, b: GroupSpec) -> GroupSpec:
    """Direct product; torus coordinates concatenate, Weyl orders multiply."""
    if a.ambient_weights or b.ambient_weights:
        raise ValueError("attach ambient weights after taking products")
    rank = a.rank + b.rank
    pad_a = tuple(w + (0,) * b.rank for w in a.roots)
    pad_b = tuple((0,) * a.rank + w for w in b.roots)
    return GroupSpec(
        factors=a.factors + b.factors,
        rank=rank,
        roots=pad_a + pad_b,
        weyl_order=a.weyl_order * b.weyl_order,
        dim=a.dim + b.dim,
    )


def _realified_weights(complex_weights: Sequence[Weight]) -> tuple[Weight, ...]:
    """Realify C^d: each complex weight w contributes +w and -w."""
    out = []
    for w in complex_weights:
        out.append(tuple(w))
        out.append(tuple(-e for e in w))
    return tuple(out)


def isospectral_pair(n: int) -> tuple[GroupSpec, GroupSpec]:
    """The two sphere actions whose invariant spectra coincide.

    For odd n >= 3 and m = (n-1)/2, both groups act on the realification of
    C^{2n} (the sphere S^{4n-1}):

    * U(n) acting by the standard representation plus its dual, torus
      weights +-e_i, each appearing twice after realification;
    * Sp(m) x SO(2n-2m) acting by the quaternionic standard representation
      on the first C^{2m} and the (complexified) vector representation on
      the remaining C^{2n-2m}, weights +-f_i and +-g_j, each twice.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("the construction needs odd n >= 3")
    m = (n - 1) // 2
    k = n - m  # SO(2k) factor, 2k = 2n - 2m

    g1 = make_unitary(n)
    w1 = [_unit(n, i) for i in range(n)]
    g1 = g1.with_action(_realified_weights(w1) * 2)

    g2 = product(make_symplectic(m), make_so_even(k))
    rank2 = m + k
    w2 = [_unit(rank2, i) for i in range(m)] + [
        _unit(rank2, m + j) for j in range(k)
    ]
    g2 = g2.with_action(_realified_weights(w2) * 2)

    assert g1.ambient_real_dim == g2.ambient_real_dim == 4 * n
    return g1, g2


# -- serialization ----------------------------------------------------


def group_to_json(g: GroupSpec) -> str:
    """Serialize factors and action to the interchange schema."""
    distinct: list[Weight] = []
    mult: list[int] = []
    for w in g.ambient_weights:
        if distinct and distinct[-1] == w:
            mult[-1] += 1
        else:
            try:
                k = distinct.index(w)
            except ValueError:
                distinct.append(w)
                mult.append(1)
            else:
                mult[k] += 1
    payload = {
        "factors": [{"family": fam, "rank": r} for fam, r in g.factors],
        "ambient_weights": [list(w) for w in distinct],
        "multiplicity": mult,
    }
    return json.dumps(payload, sort_keys=True)


def group_from_json(text: str) -> GroupSpec:
    """Rebuild a GroupSpec from the interchange schema.

    Root data is reconstructed from the factor list, so the schema never
    carries roots or Weyl orders explicitly.
    """
    payload = json.loads(text)
    factors = payload.get("factors")
    if not factors:
        raise ValueError("schema needs a nonempty 'factors' list")
    spec = None
    for entry in factors:
        fam = entry["family"]
        r = int(entry["rank"])
        if fam == "U":
            piece = make_unitary(r)
        elif fam == "Sp":
            piece = make_symplectic(r)
        elif fam == "SOeven":
            piece = make_so_even(r)
        else:
            raise ValueError(f"unknown family {fam!r}; expected one of {_FAMILIES}")
        spec = piece if spec is None else product(spec, piece)
    weights = payload.get("ambient_weights", [])
    mult = payload.get("multiplicity", [1] * len(weights))
    if len(mult) != len(weights):
        raise ValueError("multiplicity list must match ambient_weights")
    expanded = []
    for w, m in zip(weights, mult):
        if m < 1:
            raise ValueError("multiplicities must be positive")
        expanded.extend([tuple(int(e) for e in w)] * int(m))
    return spec.with_action(expanded) if expanded else spec
