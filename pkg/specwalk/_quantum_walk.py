# encoding: utf-8

import csv
import io
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import logsumexp

from ._const import (
    DEFAULT_AUTOMORPHISM_LIMIT,
    EXACT_POWER_SUM_LIMIT,
    ORBIT_CLOSENESS_BOUND,
    REFINEMENT_ITERATIONS,
)
from ._cospectral import are_cospectral, are_strongly_cospectral, validate_pair
from ._enum import CertificateKind
from ._exact import minimal_polynomial
from ._logger import logger
from ._matrix import to_rational_string
from ._partition import Partition, automorphisms, coarsest_equitable_partition
from ._poly import power_sums
from .error import InvariantViolation


TransferAmplitude = namedtuple("TransferAmplitude", "amplitude magnitude orbit_distance")
ScanResult = namedtuple("ScanResult", "t_star magnitude refined")
WalkTraceRow = namedtuple("WalkTraceRow", "t real imag magnitude orbit_distance")


class PureState(object):
    """
    Unit vector ``z``; the density matrix ``D = z z^*`` is built on demand.
    """

    @property
    def vector(self):
        return self.__vector

    def __init__(self, vector):
        vector = np.asarray(vector, dtype=complex)
        norm = np.linalg.norm(vector)
        if not np.isclose(norm, 1.0, rtol=0, atol=1e-9):
            raise ValueError("state vector is not a unit vector: norm={}".format(norm))

        self.__vector = vector

    @classmethod
    def from_vertex(cls, order, v):
        vector = np.zeros(order, dtype=complex)
        vector[v] = 1.0

        return cls(vector)

    def density(self):
        return np.outer(self.__vector, np.conj(self.__vector))


def _distance_from_magnitude(magnitude):
    return math.sqrt(max(0.0, 2.0 - 2.0 * magnitude ** 2))


def _amplitudes(decomp, a, b, times):
    weights = decomp.stacked[:, a, b]
    phases = np.exp(1j * np.outer(np.atleast_1d(times), decomp.eigenvalues))

    return phases.dot(weights)


def evolution_matrix(decomp, t):
    """
    ``U(t) = exp(itA) = sum(exp(i t theta_r) E_r)``.
    """

    return sum(
        np.exp(1j * t * theta) * E for theta, E in zip(decomp.eigenvalues, decomp.idempotents)
    )


def evolve_state(decomp, a, t):
    """
    The vertex state ``e_a`` after time ``t``; its density is ``D_a(t)``.
    """

    decomp.validate_vertex(a)

    return PureState(evolution_matrix(decomp, t)[:, a])


def orbit_distance(decomp, a, b, t):
    """
    ``|D_a(t) - D_b|`` in the Frobenius norm, from the full density matrices.
    """

    decomp.validate_vertex(b)
    target = PureState.from_vertex(decomp.order, b).density()

    return float(np.linalg.norm(evolve_state(decomp, a, t).density() - target))


def transfer_amplitude(decomp, a, b, t):
    """
    :return: ``TransferAmplitude(amplitude, magnitude, orbit_distance)`` with
        ``amplitude = U(t)[a, b]`` and ``orbit_distance = |D_a(t) - D_b|``.
    :raises specwalk.UnknownVertexError:
    """

    decomp.validate_vertex(a)
    decomp.validate_vertex(b)

    amplitude = complex(_amplitudes(decomp, a, b, t)[0])
    magnitude = abs(amplitude)

    return TransferAmplitude(amplitude, magnitude, _distance_from_magnitude(magnitude))


def scan_max_transfer(decomp, a, b, t_max, steps):
    """
    Largest ``|U(t)[a, b]|`` on ``[0, t_max]``: a grid of ``steps`` points followed by
    a bounded scalar refinement on the interval bracketing the best grid point.
    Ties are broken towards the smaller time.

    :return: ``ScanResult(t_star, magnitude, refined)``
    :raises specwalk.UnknownVertexError:
    """

    decomp.validate_vertex(a)
    decomp.validate_vertex(b)
    if not t_max > 0:
        raise ValueError("t_max must be positive: {}".format(t_max))
    if steps < 2:
        raise ValueError("steps must be at least 2: {}".format(steps))

    times = np.linspace(0.0, t_max, steps)
    magnitudes = np.abs(_amplitudes(decomp, a, b, times))
    best = int(np.argmax(magnitudes))
    t_star = float(times[best])
    magnitude = float(magnitudes[best])

    lower = float(times[max(best - 1, 0)])
    upper = float(times[min(best + 1, steps - 1)])
    result = minimize_scalar(
        lambda t: -abs(_amplitudes(decomp, a, b, t)[0]),
        bounds=(lower, upper),
        method="bounded",
        options={"maxiter": REFINEMENT_ITERATIONS, "xatol": 1e-12},
    )

    refined = bool(-result.fun > magnitude)
    if refined:
        t_star = float(result.x)
        magnitude = float(-result.fun)

    logger.debug(
        "scan ({:d}, {:d}): t*={:.12g}, magnitude={:.12g}, refined={}".format(
            a, b, t_star, magnitude, refined
        )
    )

    return ScanResult(t_star, magnitude, refined)


def walk_trace(decomp, a, b, t_max, steps):
    """
    Rows ``(t, re U_ab, im U_ab, |U_ab|, orbit_distance)`` on an even grid of ``[0, t_max]``.
    """

    decomp.validate_vertex(a)
    decomp.validate_vertex(b)

    times = np.linspace(0.0, t_max, steps)
    rows = []
    for t, amplitude in zip(times, _amplitudes(decomp, a, b, times)):
        magnitude = abs(amplitude)
        rows.append(
            WalkTraceRow(
                float(t),
                float(amplitude.real),
                float(amplitude.imag),
                float(magnitude),
                _distance_from_magnitude(magnitude),
            )
        )

    return rows


def dumps_walk_trace_csv(rows):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(WalkTraceRow._fields)
    for row in rows:
        writer.writerow([repr(value) for value in row])

    return stream.getvalue()


def write_walk_trace_csv(rows, file_path):
    with io.open(file_path, "w", encoding="utf-8", newline="") as f:
        f.write(dumps_walk_trace_csv(rows))


class Certificate(object):
    """
    Closeness evidence at a single time with the threshold it was compared against.
    ``provenance`` keeps the exact values the threshold was derived from.
    """

    @property
    def kind(self):
        return self.__kind

    @property
    def a(self):
        return self.__a

    @property
    def b(self):
        return self.__b

    @property
    def time(self):
        return self.__time

    @property
    def observed(self):
        return self.__observed

    @property
    def threshold(self):
        return self.__threshold

    @property
    def verdict(self):
        return self.__verdict

    @property
    def provenance(self):
        return self.__provenance

    def __init__(self, kind, a, b, time, observed, threshold, verdict, provenance):
        self.__kind = kind
        self.__a = a
        self.__b = b
        self.__time = time
        self.__observed = observed
        self.__threshold = threshold
        self.__verdict = verdict
        self.__provenance = provenance

    def __repr__(self):
        return "Certificate(kind={}, t={:.6g}, observed={:.6g}, verdict={})".format(
            self.__kind.value, self.__time, self.__observed, self.__verdict
        )

    def to_dict(self):
        return {
            "kind": self.__kind.value,
            "a": self.__a,
            "b": self.__b,
            "time": self.__time,
            "observed": self.__observed,
            "threshold": self.__threshold,
            "verdict": self.__verdict,
            "provenance": self.__provenance,
        }


def printed_threshold(order, rho):
    """
    ``1 - 1 / (8 n**4 rho**4)``, kept in reports for comparison only.
    """

    if rho == 0:
        return None

    return 1.0 - 1.0 / (8.0 * order ** 4 * rho ** 4)


def log_trace_fft(decomp):
    """
    Natural logarithm of ``tr(F F^T) = sum_r sum_{l<n} theta_r**(2l)``.
    """

    terms = []
    for theta in decomp.eigenvalues:
        if abs(theta) < decomp.group_tolerance:
            terms.append(0.0)
            continue
        terms.extend(2 * ell * math.log(abs(theta)) for ell in range(decomp.order))

    return float(logsumexp(terms))


def exact_trace_fft(psi, order):
    """
    ``tr(F F^T)`` as an integer from the power sums of the minimal polynomial.
    """

    sums = power_sums(psi, 2 * order - 1)

    return sum(sums[2 * ell] for ell in range(order))


def cospectrality_certificate(graph, decomp, a, b, t):
    """
    Certify cospectrality when ``1 - |U(t)[a, b]| <= 1 / (8 tr(F F^T)**2)``.
    Above the exact power-sum limit the threshold underflows and the certificate
    is vacuous.

    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    :raises specwalk.InvariantViolation: a certified pair is not cospectral.
    """

    validate_pair(graph, a, b)

    observed = transfer_amplitude(decomp, a, b, t).magnitude
    log_trace = log_trace_fft(decomp)
    provenance = {
        "log_trace_fft": log_trace,
        "printed_threshold": printed_threshold(graph.order, decomp.spectral_radius),
        "vacuous": graph.order > EXACT_POWER_SUM_LIMIT,
    }

    if provenance["vacuous"]:
        logger.debug("cospectrality threshold underflow: order={:d}".format(graph.order))
        provenance["trace_fft"] = None

        return Certificate(
            CertificateKind.COSPECTRAL, a, b, t, observed, None, False, provenance
        )

    psi, _disc = minimal_polynomial(graph)
    trace = exact_trace_fft(psi, graph.order)
    if abs(math.log(trace) - log_trace) > 1e-6 * max(1.0, log_trace):
        logger.warning(
            "tr(FF^T): exact {} and numeric exp({:.12g}) disagree".format(trace, log_trace)
        )

    margin = Fraction(1, 8 * trace ** 2)
    threshold = 1.0 - float(margin)
    verdict = 1.0 - observed <= float(margin)
    provenance["trace_fft"] = str(trace)
    provenance["margin"] = to_rational_string(margin)

    if verdict and not are_cospectral(graph, a, b, decomp=decomp).exact:
        raise InvariantViolation(
            "cospectrality certificate issued for the non-cospectral pair ({:d}, {:d})".format(
                a, b
            )
        )

    return Certificate(
        CertificateKind.COSPECTRAL, a, b, t, observed, threshold, verdict, provenance
    )


def strong_cospectrality_certificate(graph, decomp, a, b, t):
    """
    Certify strong cospectrality when ``|D_a(t) - D_b| < 1 / disc(psi)**2``.

    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    :raises specwalk.InvariantViolation: a certified pair is not strongly cospectral.
    """

    validate_pair(graph, a, b)

    observed = transfer_amplitude(decomp, a, b, t).orbit_distance
    _psi, disc = minimal_polynomial(graph)
    bound = Fraction(1, disc ** 2)
    threshold = float(bound)
    verdict = observed < threshold
    provenance = {
        "disc": str(disc),
        "disc_squared": str(disc ** 2),
        "bound": to_rational_string(bound),
        "printed_threshold": printed_threshold(graph.order, decomp.spectral_radius),
    }

    if verdict and not are_strongly_cospectral(
        graph, a, b, decomp=decomp, with_symmetry=False
    ).strongly_cospectral_exact:
        raise InvariantViolation(
            "strong cospectrality certificate issued for ({:d}, {:d})".format(a, b)
        )

    return Certificate(
        CertificateKind.STRONGLY_COSPECTRAL, a, b, t, observed, threshold, verdict, provenance
    )


class ClosenessReport(object):
    """
    Consequences of ``|D_a(t) - D_b| < 1/sqrt(2)``: every automorphism fixing ``a``
    fixes ``b``, and ``{b}`` is a cell of the coarsest equitable partition with
    ``{a}`` as a cell. Checks are |None| when not applicable.
    """

    @property
    def distance(self):
        return self.__distance

    @property
    def close(self):
        return self.__distance < ORBIT_CLOSENESS_BOUND

    @property
    def automorphisms_fix_b(self):
        return self.__automorphisms_fix_b

    @property
    def singleton_transfers(self):
        return self.__singleton_transfers

    def __init__(self, a, b, time, distance, automorphisms_fix_b, singleton_transfers):
        self.__a = a
        self.__b = b
        self.__time = time
        self.__distance = distance
        self.__automorphisms_fix_b = automorphisms_fix_b
        self.__singleton_transfers = singleton_transfers

    def to_dict(self):
        return {
            "kind": CertificateKind.CLOSENESS.value,
            "a": self.__a,
            "b": self.__b,
            "time": self.__time,
            "distance": self.__distance,
            "threshold": ORBIT_CLOSENESS_BOUND,
            "close": self.close,
            "automorphisms_fix_b": self.__automorphisms_fix_b,
            "singleton_transfers": self.__singleton_transfers,
            "conclusion": "verified" if self.close else "no conclusion",
        }


def closeness_report(graph, decomp, a, b, t, automorphism_limit=DEFAULT_AUTOMORPHISM_LIMIT):
    """
    :raises specwalk.UnknownVertexError:
    :raises specwalk.SameVertexError:
    :raises specwalk.InvariantViolation: a consequence fails for a close pair.
    """

    validate_pair(graph, a, b)

    distance = transfer_amplitude(decomp, a, b, t).orbit_distance
    fix_b = None
    singleton = None

    if distance < ORBIT_CLOSENESS_BOUND:
        if graph.order <= automorphism_limit:
            fix_b = all(
                permutation.fixes(b)
                for permutation in automorphisms(graph, limit=automorphism_limit)
                if permutation.fixes(a)
            )

        refined = coarsest_equitable_partition(graph, Partition.with_singleton(graph.order, a))
        singleton = refined.is_singleton(b)

        if fix_b is False or not singleton:
            raise InvariantViolation(
                "closeness consequences fail for ({:d}, {:d}) at t={}".format(a, b, t)
            )

    return ClosenessReport(a, b, t, distance, fix_b, singleton)
