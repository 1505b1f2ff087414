"""Polarization-tensor algebra on the unit sphere.

The transverse-traceless polarization sum, summed over the two physical
polarizations and integrated over propagation directions, collapses onto a
single isotropic rank-4 tensor.  Production code only ever needs that
two-coefficient isotropic form; the dense rank-4 routines here exist as
independent oracles for it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quadrature import ToleranceError, gauss_legendre


def as_vector(v):
    """Validate and return a finite 3-vector as a float array."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector components must be finite")
    return arr


def unit_vector(v, tol=1e-12):
    """Validate that ``v`` lies on the unit sphere (within ``tol``)."""
    arr = as_vector(v)
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > tol:
        raise ValueError(f"direction must be normalized; |v| = {norm!r}")
    return arr


@dataclass(frozen=True)
class IsotropicRank4:
    """Isotropic rank-4 tensor a (d_ik d_jl + d_il d_jk) + b d_ij d_kl.

    The polarization-sum angular integral produces the member with a = 3,
    b = -2, exposed as :data:`P_TENSOR`.
    """

    a: float
    b: float

    def component(self, i, j, k, l):
        """Single component, indices 1..3."""
        for idx in (i, j, k, l):
            if idx not in (1, 2, 3):
                raise ValueError(f"tensor index {idx} out of range 1..3")
        return (self.a * ((i == k) * (j == l) + (i == l) * (j == k))
                + self.b * (i == j) * (k == l))

    def dense(self):
        """Full 81-component array (0-based indices)."""
        eye = np.eye(3)
        return (self.a * (np.einsum("ik,jl->ijkl", eye, eye)
                          + np.einsum("il,jk->ijkl", eye, eye))
                + self.b * np.einsum("ij,kl->ijkl", eye, eye))

    def as_symmetric_map(self):
        """The tensor as a linear map on symmetric 3x3 matrices.

        Acting on a symmetric A it gives 2a A + b tr(A) I, i.e. eigenvalue
        2a on the 5-dimensional traceless subspace and 2a + 3b on the trace
        direction (6 and 0 for the polarization tensor).
        """
        basis = symmetric_basis()
        mat = np.empty((6, 6))
        for m in range(6):
            img = 2.0 * self.a * basis[m] + self.b * np.trace(basis[m]) * np.eye(3)
            for n in range(6):
                mat[m, n] = np.sum(img * basis[n])
        return mat


P_TENSOR = IsotropicRank4(3.0, -2.0)


def symmetric_basis():
    """Orthonormal basis of symmetric 3x3 matrices under the Frobenius inner
    product: three diagonal directions and three normalized off-diagonal ones."""
    s = 1.0 / np.sqrt(2.0)
    basis = np.zeros((6, 3, 3))
    for m in range(3):
        basis[m, m, m] = 1.0
    for m, (i, j) in enumerate([(0, 1), (0, 2), (1, 2)], start=3):
        basis[m, i, j] = basis[m, j, i] = s
    return basis


def contract_K(tensor: IsotropicRank4, xi, v):
    """Scalar contraction P^{ijkl} Xi_i v_j Xi_k v_l.

    For the isotropic form this collapses to
    a [ (Xi.Xi)(v.v) + (Xi.v)^2 ] + b (Xi.v)^2, verified against the explicit
    81-term sum in the test suite.  With a = 3, b = -2 it equals
    3 |Xi|^2 |v|^2 + (Xi.v)^2 and is therefore nonnegative.
    """
    xi = as_vector(xi)
    v = as_vector(v)
    dot = float(xi @ v)
    return (tensor.a * (float(xi @ xi) * float(v @ v) + dot * dot)
            + tensor.b * dot * dot)


def contract_K_dense(tensor: IsotropicRank4, xi, v):
    """Brute-force 81-term contraction; oracle for :func:`contract_K`."""
    xi = as_vector(xi)
    v = as_vector(v)
    return float(np.einsum("ijkl,i,j,k,l->", tensor.dense(), xi, v, xi, v))


def transverse_dyad(khat):
    """Two orthonormal vectors spanning the plane transverse to ``khat``.

    The first leg is built by crossing with the coordinate axis of khat's
    smallest |component|, which keeps the construction well-conditioned for
    every direction (no polar degeneracy).
    """
    khat = unit_vector(khat)
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(khat)))] = 1.0
    e1 = np.cross(khat, axis)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(khat, e1)
    return e1, e2


def polarization_tensors(khat):
    """The plus and cross polarization tensors for propagation along khat."""
    e1, e2 = transverse_dyad(khat)
    plus = np.outer(e1, e1) - np.outer(e2, e2)
    cross = np.outer(e1, e2) + np.outer(e2, e1)
    return plus, cross


def polarization_sum(khat):
    """Sum over polarizations of eps_ij eps_kl as a dense rank-4 array.

    Equals P_ik P_jl + P_il P_jk - P_ij P_kl with the transverse projector
    P_ij = d_ij - khat_i khat_j, independently of the dyad orientation.
    """
    plus, cross = polarization_tensors(khat)
    return (np.einsum("ij,kl->ijkl", plus, plus)
            + np.einsum("ij,kl->ijkl", cross, cross))


def polarization_sum_projector(khat):
    """Transverse-projector form of the polarization sum (cross-check path)."""
    khat = unit_vector(khat)
    proj = np.eye(3) - np.outer(khat, khat)
    return (np.einsum("ik,jl->ijkl", proj, proj)
            + np.einsum("il,jk->ijkl", proj, proj)
            - np.einsum("ij,kl->ijkl", proj, proj))


def _khat_grid(n_theta, n_phi):
    # Gauss-Legendre in cos(theta); uniform midpoint rule in phi is
    # spectrally accurate for the periodic direction
    mu, w_mu = gauss_legendre(n_theta)
    phis = (np.arange(n_phi) + 0.5) * (2.0 * np.pi / n_phi)
    w_phi = 2.0 * np.pi / n_phi
    sin_theta = np.sqrt(1.0 - mu**2)
    khats = np.empty((n_theta, n_phi, 3))
    khats[..., 0] = sin_theta[:, None] * np.cos(phis)[None, :]
    khats[..., 1] = sin_theta[:, None] * np.sin(phis)[None, :]
    khats[..., 2] = mu[:, None]
    weights = w_mu[:, None] * w_phi * np.ones(n_phi)[None, :]
    return khats.reshape(-1, 3), weights.reshape(-1)


def angular_polarization_integral(n_theta=32, n_phi=64, check_tol=1e-10):
    """Solid-angle integral of the polarization sum by sphere quadrature.

    Returns the dense rank-4 result; it must converge to (8 pi / 15) times
    the isotropic tensor with a = 3, b = -2.  The result is cross-checked
    against a refined grid and a :class:`ToleranceError` carrying the
    achieved residual is raised if the two disagree beyond ``check_tol``.
    """
    def accumulate(n_t, n_p):
        khats, weights = _khat_grid(n_t, n_p)
        total = np.zeros((3, 3, 3, 3))
        for khat, w in zip(khats, weights):
            total += w * polarization_sum(khat)
        return total

    coarse = accumulate(n_theta, n_phi)
    fine = accumulate(n_theta + 8, n_phi + 16)
    residual = float(np.max(np.abs(fine - coarse)))
    if residual > check_tol:
        raise ToleranceError(
            f"sphere quadrature not converged: residual {residual:g}",
            fine, residual)
    return fine


def angular_polarization_integral_mc(n_samples, seed=0):
    """Monte Carlo estimate of the same solid-angle integral.

    Uniform directions from a counter-based generator; statistical accuracy
    ~ 1/sqrt(n_samples) relative.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    mu = rng.uniform(-1.0, 1.0, n_samples)
    phi = rng.uniform(0.0, 2.0 * np.pi, n_samples)
    sin_theta = np.sqrt(1.0 - mu**2)
    khats = np.stack([sin_theta * np.cos(phi), sin_theta * np.sin(phi), mu], axis=1)

    # polarization_sum, vectorized over the sample axis via the projector form
    proj = np.eye(3)[None] - np.einsum("ni,nj->nij", khats, khats)
    sums = (np.einsum("nik,njl->nijkl", proj, proj)
            + np.einsum("nil,njk->nijkl", proj, proj)
            - np.einsum("nij,nkl->nijkl", proj, proj))
    return 4.0 * np.pi * sums.mean(axis=0)
