"""Concrete orthogonal matrix realizations of the sphere actions.

Complex representations are realified with coordinates ordered as all real
parts then all imaginary parts, so a complex-linear map P + iQ becomes the
block matrix [[P, -Q], [Q, P]].  Lie algebras are handed around as lists of
skew-symmetric generators; disconnected groups carry coset representatives
of the component group alongside.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm


def realify(M: np.ndarray) -> np.ndarray:
    """Real matrix of a complex-linear map, coordinates (Re..., Im...)."""
    P, Q = np.asarray(M).real, np.asarray(M).imag
    return np.block([[P, -Q], [Q, P]])


def u_algebra(n: int) -> list[np.ndarray]:
    """Basis of anti-Hermitian n x n matrices (n^2 of them)."""
    out = []
    for a in range(n):
        X = np.zeros((n, n), dtype=complex)
        X[a, a] = 1j
        out.append(X)
    for a in range(n):
        for b in range(a + 1, n):
            X = np.zeros((n, n), dtype=complex)
            X[a, b] = 1
            X[b, a] = -1
            out.append(X)
            Y = np.zeros((n, n), dtype=complex)
            Y[a, b] = 1j
            Y[b, a] = 1j
            out.append(Y)
    return out


def sp_algebra(m: int) -> list[np.ndarray]:
    """Basis of sp(m) inside u(2m): blocks [[A, B], [-conj(B), conj(A)]]
    with A anti-Hermitian and B complex symmetric; m(2m+1) generators."""
    out = []
    for A in u_algebra(m):
        X = np.zeros((2 * m, 2 * m), dtype=complex)
        X[:m, :m] = A
        X[m:, m:] = A.conj()
        out.append(X)
    for a in range(m):
        for b in range(a, m):
            for val in (1, 1j):
                B = np.zeros((m, m), dtype=complex)
                B[a, b] += val
                B[b, a] += val
                if a == b:
                    B[a, b] = val
                X = np.zeros((2 * m, 2 * m), dtype=complex)
                X[:m, m:] = B
                X[m:, :m] = -B.conj()
                out.append(X)
    return out


def so_algebra(k: int) -> list[np.ndarray]:
    """Basis of real antisymmetric k x k matrices."""
    out = []
    for a in range(k):
        for b in range(a + 1, k):
            X = np.zeros((k, k))
            X[a, b] = 1
            X[b, a] = -1
            out.append(X)
    return out


@dataclass
class IsometricAction:
    """A compact group acting orthogonally on R^N.

    generators : skew-symmetric N x N matrices spanning the Lie algebra
    components : orthogonal coset representatives of the component group,
        the identity first.  Orbits of the full group are unions of
        connected-orbit images under these.
    """

    name: str
    ambient_dim: int
    generators: tuple
    components: tuple = field(default=())

    def __post_init__(self):
        if not self.components:
            self.components = (np.eye(self.ambient_dim),)
        self.generators = tuple(np.asarray(g, dtype=float) for g in self.generators)
        self.components = tuple(np.asarray(c, dtype=float) for c in self.components)
        n = self.ambient_dim
        for X in self.generators:
            if X.shape != (n, n):
                raise ValueError(f"generator shape {X.shape} does not match ambient dim {n}")
            if np.abs(X + X.T).max() > 1e-12 * max(1.0, np.abs(X).max()):
                raise ValueError("generators must be skew-symmetric")
        for C in self.components:
            if C.shape != (n, n) or np.abs(C.T @ C - np.eye(n)).max() > 1e-10:
                raise ValueError("component representatives must be orthogonal")

    @property
    def group_dim(self) -> int:
        return len(self.generators)

    def orbit_tangent(self, v: np.ndarray) -> np.ndarray:
        """Columns X_i v spanning the tangent space of the orbit at v."""
        return np.column_stack([X @ v for X in self.generators])

    def algebra_element(self, coeffs) -> np.ndarray:
        out = np.zeros((self.ambient_dim, self.ambient_dim))
        for c, X in zip(coeffs, self.generators):
            out += c * X
        return out

    def exp_element(self, coeffs) -> np.ndarray:
        return expm(self.algebra_element(coeffs))

    def random_element(self, rng, spread: float = np.pi) -> np.ndarray:
        """A group element: exp of a random algebra vector times a random
        component representative.  Not Haar, but supports every component."""
        coeffs = rng.normal(0.0, spread, size=self.group_dim)
        comp = self.components[rng.integers(len(self.components))]
        return self.exp_element(coeffs) @ comp


def _block_embed(mats: list[np.ndarray], total: int, offset: int) -> list[np.ndarray]:
    out = []
    for X in mats:
        M = np.zeros((total, total), dtype=complex)
        k = X.shape[0]
        M[offset : offset + k, offset : offset + k] = X
        out.append(M)
    return out


def unitary_double_action(n: int) -> IsometricAction:
    """U(n) acting on the realification of C^n + conj(C^n), a (4n)-sphere
    ambient; the generator for X is diag(X, conj(X)) realified."""
    gens = []
    for X in u_algebra(n):
        M = np.zeros((2 * n, 2 * n), dtype=complex)
        M[:n, :n] = X
        M[n:, n:] = X.conj()
        gens.append(realify(M))
    return IsometricAction(
        name=f"U({n}) twisted double", ambient_dim=4 * n, generators=tuple(gens)
    )


def quaternion_orthogonal_action(n: int) -> IsometricAction:
    """Sp(m) x SO(2k) on the realification of C^{2m} + C^{2k}, m = (n-1)/2,
    k = n - m; the orthogonal factor acts by real rotation matrices applied
    complex-linearly."""
    if n < 3 or n % 2 == 0:
        raise ValueError("the construction needs odd n >= 3")
    m = (n - 1) // 2
    k = n - m
    d = 2 * n  # complex dimension
    gens = []
    for X in _block_embed(sp_algebra(m), d, 0):
        gens.append(realify(X))
    for X in _block_embed([M.astype(complex) for M in so_algebra(2 * k)], d, 2 * m):
        gens.append(realify(X))
    return IsometricAction(
        name=f"Sp({m}) x SO({2 * k}) product", ambient_dim=4 * n, generators=tuple(gens)
    )


def reduced_unitary_action() -> IsometricAction:
    """The quotient-reducing action on the fixed 7-sphere of the unitary
    side: U(2) in its twisted double representation on R^8."""
    a = unitary_double_action(2)
    a.name = "U(2) reduced"
    return a


def reduced_quaternion_action() -> IsometricAction:
    """Sp(1) x O(2) on R^8: the quaternionic factor on the first C^2, the
    full orthogonal group of a plane on the second C^2 (rotations in the
    identity component plus a reflection component)."""
    d = 4
    gens = []
    for X in _block_embed(sp_algebra(1), d, 0):
        gens.append(realify(X))
    rot = np.zeros((d, d), dtype=complex)
    rot[2, 3] = -1
    rot[3, 2] = 1
    gens.append(realify(rot))
    refl = np.eye(d, dtype=complex)
    refl[3, 3] = -1
    return IsometricAction(
        name="Sp(1) x O(2) reduced",
        ambient_dim=8,
        generators=tuple(gens),
        components=(np.eye(8), realify(refl)),
    )


def circle_subaction_unitary(n: int = 3) -> IsometricAction:
    """The circle diag(z, 1, ..., 1) inside the unitary group, acting on the
    same R^{4n} ambient space; its fixed subspace is the reduction locus."""
    M = np.zeros((2 * n, 2 * n), dtype=complex)
    M[0, 0] = 1j
    M[n, n] = -1j
    return IsometricAction(
        name="reduction circle (unitary side)", ambient_dim=4 * n,
        generators=(realify(M),),
    )


def circle_subaction_quaternion(n: int = 3) -> IsometricAction:
    """The circle of rotations of the first plane of the orthogonal factor,
    acting on R^{4n}; its fixed subspace is the reduction locus."""
    if n < 3 or n % 2 == 0:
        raise ValueError("the construction needs odd n >= 3")
    m = (n - 1) // 2
    M = np.zeros((2 * n, 2 * n), dtype=complex)
    M[2 * m, 2 * m + 1] = -1
    M[2 * m + 1, 2 * m] = 1
    return IsometricAction(
        name="reduction circle (quaternionic side)", ambient_dim=4 * n,
        generators=(realify(M),),
    )


def fixed_embedding_unitary() -> np.ndarray:
    """Isometric inclusion R^8 -> R^12 of the unitary side's fixed sphere:
    reduced complex coordinates (w1..w4) land in ambient slots (2,3,5,6)."""
    return _complex_slot_embedding([1, 2, 4, 5], 6)


def fixed_embedding_quaternion() -> np.ndarray:
    """Isometric inclusion R^8 -> R^12 for the quaternionic side: reduced
    coordinates land in ambient slots (1,2,5,6)."""
    return _complex_slot_embedding([0, 1, 4, 5], 6)


def _complex_slot_embedding(slots: list[int], total: int) -> np.ndarray:
    d = len(slots)
    E = np.zeros((2 * total, 2 * d))
    for j, s in enumerate(slots):
        E[s, j] = 1.0
        E[total + s, d + j] = 1.0
    return E
