# encoding: utf-8

import numbers

import numpy as np

from ._const import (
    DEFAULT_DECOMPOSITION_LIMIT,
    DEFAULT_GROUP_TOLERANCE,
    DEFAULT_SUPPORT_TOLERANCE,
)
from ._logger import logger
from .error import (
    ConvergenceFailure,
    DimensionMismatchError,
    MismatchedSupportGridsError,
    TooLargeError,
    UnknownVertexError,
)


class SpectralDecomposition(object):
    """
    Grouped spectral decomposition ``A = sum(theta_r * E_r)`` of an adjacency matrix.
    Eigenvalues are distinct and in descending order.
    """

    @property
    def order(self):
        return self.__adjacency.shape[0]

    @property
    def adjacency(self):
        return self.__adjacency

    @property
    def eigenvalues(self):
        return self.__eigenvalues

    @property
    def multiplicities(self):
        return self.__multiplicities

    @property
    def idempotents(self):
        return self.__idempotents

    @property
    def stacked(self):
        """
        The idempotents as one array of shape ``(len(self), n, n)``.
        """

        return self.__stacked

    @property
    def residual(self):
        return self.__residual

    @property
    def group_tolerance(self):
        return self.__group_tolerance

    @property
    def spectral_radius(self):
        return float(np.max(np.abs(self.__eigenvalues))) if len(self.__eigenvalues) else 0.0

    def __init__(self, adjacency, eigenvalues, multiplicities, idempotents, group_tolerance):
        self.__adjacency = adjacency
        self.__eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.__multiplicities = tuple(multiplicities)
        self.__idempotents = tuple(idempotents)
        self.__stacked = np.array(self.__idempotents, dtype=float).reshape(
            len(self.__idempotents), adjacency.shape[0], adjacency.shape[0]
        )
        self.__group_tolerance = group_tolerance

        reconstructed = sum(
            (theta * E for theta, E in zip(self.__eigenvalues, self.__idempotents)),
            np.zeros_like(adjacency, dtype=float),
        )
        self.__residual = float(np.linalg.norm(adjacency - reconstructed))

    def __len__(self):
        return len(self.__eigenvalues)

    def __repr__(self):
        return "SpectralDecomposition(eigenvalues={}, multiplicities={}, residual={:.3g})".format(
            np.round(self.__eigenvalues, 6).tolist(), list(self.__multiplicities), self.__residual
        )

    def validate_vertex(self, v):
        if (
            not isinstance(v, numbers.Integral)
            or isinstance(v, bool)
            or not 0 <= v < self.order
        ):
            raise UnknownVertexError(
                "vertex {!r} not in a graph with {:d} vertices".format(v, self.order)
            )

    def projections(self, vector):
        """
        ``[E_r z for each r]``.
        """

        vector = np.asarray(vector, dtype=float)
        if vector.shape != (self.order,):
            raise DimensionMismatchError(
                "vector of shape {} for order {:d}".format(vector.shape, self.order)
            )

        return [E.dot(vector) for E in self.__idempotents]

    def diagonal_weights(self, v):
        self.validate_vertex(v)

        return self.__stacked[:, v, v].copy()

    def columns(self, v):
        """
        ``E_r e_v`` for every ``r``, stacked into shape ``(len(self), n)``.
        """

        self.validate_vertex(v)

        return self.__stacked[:, :, v]

    def to_dict(self, with_idempotents=False):
        result = {
            "eigenvalues": [float(theta) for theta in self.__eigenvalues],
            "multiplicities": list(self.__multiplicities),
            "residual": self.__residual,
            "group_tolerance": self.__group_tolerance,
        }
        if with_idempotents:
            result["idempotents"] = [E.tolist() for E in self.__idempotents]

        return result


def _group_eigenvalues(values, tolerance):
    groups = []
    for index, value in enumerate(values):
        if groups and groups[-1][-1][1] - value <= tolerance:
            groups[-1].append((index, value))
        else:
            groups.append([(index, value)])

    return groups


def eigen_decompose(
    graph, group_tol=DEFAULT_GROUP_TOLERANCE, limit=DEFAULT_DECOMPOSITION_LIMIT
):
    """
    Symmetric eigendecomposition of the adjacency matrix with eigenvalues closer
    than ``group_tol * max(1, rho)`` merged, and ``E_r = Y_r Y_r^T``.

    :raises specwalk.ConvergenceFailure: the eigensolver fails or the reconstruction
        residual exceeds the grouping tolerance.
    :raises specwalk.TooLargeError: ``graph.order`` exceeds ``limit``.
    """

    n = graph.order
    if n < 1:
        raise ValueError("spectral decomposition requires at least one vertex")
    if n > limit:
        raise TooLargeError(
            "dense decompositions are limited to {:d} vertices: order={:d}".format(limit, n)
        )
    if group_tol <= 0:
        raise ValueError("group tolerance must be positive: {}".format(group_tol))

    adjacency = graph.adjacency_matrix(dtype=float)

    try:
        values, vectors = np.linalg.eigh(adjacency)
    except np.linalg.LinAlgError as e:
        raise ConvergenceFailure("eigensolver did not converge: {}".format(e))

    values = values[::-1]
    vectors = vectors[:, ::-1]
    rho = float(np.max(np.abs(values)))
    tolerance = group_tol * max(1.0, rho)

    eigenvalues = []
    multiplicities = []
    idempotents = []
    for group in _group_eigenvalues(values, tolerance):
        indices = [index for index, _value in group]
        basis = vectors[:, indices]
        eigenvalues.append(float(np.mean([value for _index, value in group])))
        multiplicities.append(len(indices))
        idempotents.append(basis.dot(basis.T))

    decomp = SpectralDecomposition(
        adjacency, eigenvalues, multiplicities, idempotents, group_tolerance=group_tol
    )
    logger.debug(
        "eigen_decompose: order={:d}, distinct={:d}, residual={:.3g}".format(
            n, len(decomp), decomp.residual
        )
    )

    if decomp.residual > 10 * group_tol * n:
        raise ConvergenceFailure(
            "decomposition residual {:.3g} exceeds {:.3g}".format(
                decomp.residual, 10 * group_tol * n
            )
        )

    return decomp


class SpectralDensity(object):
    """
    Weights ``z^T E_r z`` of a unit vector ``z`` over the eigenvalues ``theta_r``.
    """

    @property
    def eigenvalues(self):
        return self.__eigenvalues

    @property
    def weights(self):
        return self.__weights

    @property
    def support_tolerance(self):
        return self.__support_tolerance

    @property
    def support(self):
        """
        Indices ``r`` with weight above the support tolerance.
        """

        return [r for r, weight in enumerate(self.__weights) if weight > self.__support_tolerance]

    @property
    def support_eigenvalues(self):
        return [float(self.__eigenvalues[r]) for r in self.support]

    def __init__(self, eigenvalues, weights, support_tolerance=DEFAULT_SUPPORT_TOLERANCE):
        self.__eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.__weights = np.clip(np.asarray(weights, dtype=float), 0.0, None)
        self.__support_tolerance = support_tolerance

    def __len__(self):
        return len(self.__weights)

    def __repr__(self):
        return "SpectralDensity({})".format(
            ", ".join(
                "{:.6g}: {:.6g}".format(theta, weight)
                for theta, weight in zip(self.__eigenvalues, self.__weights)
            )
        )

    def items(self):
        return list(zip(self.__eigenvalues.tolist(), self.__weights.tolist()))

    def to_dict(self):
        return {
            "eigenvalues": self.__eigenvalues.tolist(),
            "weights": self.__weights.tolist(),
            "support": self.support,
        }


def _characteristic_vector(decomp, vertices):
    if isinstance(vertices, numbers.Integral):
        vertices = [vertices]

    vertices = sorted(set(vertices))
    if not vertices:
        raise ValueError("empty vertex subset")
    for v in vertices:
        decomp.validate_vertex(v)

    z = np.zeros(decomp.order)
    z[vertices] = 1.0 / np.sqrt(len(vertices))

    return z


def spectral_density(decomp, a, support_tolerance=DEFAULT_SUPPORT_TOLERANCE):
    """
    Spectral density of a vertex, or of a vertex subset ``S`` through its
    normalized characteristic vector.

    :raises specwalk.UnknownVertexError: a vertex is out of range.
    """

    z = _characteristic_vector(decomp, a)
    weights = [float(z.dot(E).dot(z)) for E in decomp.idempotents]

    return SpectralDensity(decomp.eigenvalues, weights, support_tolerance=support_tolerance)


def fidelity(p, q):
    """
    ``sum(sqrt(p_r * q_r))``: at most one, with equality iff the densities agree.

    :raises specwalk.MismatchedSupportGridsError: the eigenvalue lists differ.
    """

    if len(p) != len(q) or not np.allclose(p.eigenvalues, q.eigenvalues, rtol=0, atol=1e-9):
        raise MismatchedSupportGridsError("densities are over different eigenvalue lists")

    return min(1.0, float(np.sum(np.sqrt(p.weights * q.weights))))


def commutant_project(decomp, matrix):
    """
    ``Phi(M) = sum(E_r M E_r)``, the orthogonal projection onto matrices commuting with ``A``.

    :raises specwalk.DimensionMismatchError: ``matrix`` is not ``n x n``.
    """

    matrix = np.asarray(matrix)
    if matrix.shape != (decomp.order, decomp.order):
        raise DimensionMismatchError(
            "expected a {0:d}x{0:d} matrix, got {1}".format(decomp.order, matrix.shape)
        )

    return sum(E.dot(matrix).dot(E) for E in decomp.idempotents)


def average_state(decomp, a):
    """
    ``Phi(D_a)`` for the vertex state ``D_a = e_a e_a^T``.
    """

    columns = decomp.columns(a)

    return columns.T.dot(columns)


def average_states_similar(decomp, a, b, tol=1e-8):
    """
    Return |True| if ``Phi(D_a)`` and ``Phi(D_b)`` have the same eigenvalues.
    """

    spectrum_a = np.linalg.eigvalsh(average_state(decomp, a))
    spectrum_b = np.linalg.eigvalsh(average_state(decomp, b))

    return bool(np.max(np.abs(spectrum_a - spectrum_b)) < tol)


def average_states_equal(decomp, a, b, tol=1e-8):
    """
    Return |True| if ``Phi(D_a)`` and ``Phi(D_b)`` agree entrywise, which happens
    iff ``a`` and ``b`` are strongly cospectral.
    """

    difference = average_state(decomp, a) - average_state(decomp, b)

    return bool(np.max(np.abs(difference)) < tol)


def walk_module_projection(decomp, z, support_tolerance=DEFAULT_SUPPORT_TOLERANCE):
    """
    Orthogonal projection onto the walk module of ``z``:
    ``sum((E_r z)(E_r z)^T / |E_r z|^2)`` over the eigenvalue support of ``z``.
    """

    projection = np.zeros((decomp.order, decomp.order))
    for y in decomp.projections(z):
        norm2 = float(y.dot(y))
        if norm2 > support_tolerance:
            projection += np.outer(y, y) / norm2

    return projection


class AverageMixingMatrix(object):
    """
    ``M_hat[a, b] = sum((E_r)[a, b] ** 2)`` together with the discriminant of
    the minimal polynomial, which clears its denominators when squared.
    """

    @property
    def matrix(self):
        return self.__matrix

    @property
    def disc(self):
        return self.__disc

    def __init__(self, matrix, disc=None):
        self.__matrix = matrix
        self.__disc = disc

    def __repr__(self):
        return "AverageMixingMatrix(order={:d}, disc={})".format(
            self.__matrix.shape[0], self.__disc
        )

    def rows_equal(self, a, b, tol=1e-8):
        return bool(np.max(np.abs(self.__matrix[a] - self.__matrix[b])) < tol)

    def scaled(self):
        """
        ``disc**2 * M_hat``; entries are integers up to rounding.
        """

        if self.__disc is None:
            raise ValueError("discriminant is not attached")

        return float(self.__disc) ** 2 * self.__matrix

    def integrality_defect(self):
        """
        Largest ``|x - round(x)| / max(1, |x|)`` over the entries of ``disc**2 * M_hat``.
        """

        scaled = self.scaled()

        return float(np.max(np.abs(scaled - np.round(scaled)) / np.maximum(1.0, np.abs(scaled))))

    def to_dict(self):
        return {
            "matrix": self.__matrix.tolist(),
            "disc": None if self.__disc is None else str(self.__disc),
        }


def average_mixing_matrix(decomp, disc=None):
    matrix = sum(E * E for E in decomp.idempotents)

    return AverageMixingMatrix(matrix, disc=disc)


def mixing_rows_equal(mixing, a, b, tol=1e-8):
    """
    Rows ``a`` and ``b`` of the average mixing matrix agree entrywise within ``tol``;
    for cospectral vertices this happens iff they are strongly cospectral.
    """

    n = mixing.matrix.shape[0]
    for v in (a, b):
        if not 0 <= v < n:
            raise UnknownVertexError("vertex {} out of range 0..{:d}".format(v, n - 1))

    return mixing.rows_equal(a, b, tol=tol)
