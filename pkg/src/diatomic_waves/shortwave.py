"""Short-wave (``delta = 1``) asymptotics of the two lattice modes.

When the excitation width matches the lattice step, both branches carry
O(1) energy and the field splits into an acoustic part moving at speed
``c`` and an optical part whose front moves at the critical group speed
``c* = -omega_2'(p*)``.  Each part admits two asymptotic evaluators in
the small parameter ``mu = h``:

* *front Airy* forms, valid in an ``O(mu^{2/3})`` neighbourhood of the
  front, built from even/odd spectral splits and the Airy kernel;
* *uniform* forms, valid from the interior up to the front, built from
  stationary-phase data and the envelope amplitudes ``A_pm(y)`` (which
  reduce to WKB away from the front and to the front Airy forms at it).

Public evaluators dispatch between them: interior points use the
uniform form, a band around the front uses the front form (with the
quadratic three-point continuation of the spectral amplitudes beyond
the front), and points beyond the continuation margin return zero.

The uniform optical form is assembled as
``sqrt(2 mu / pi) Re e^{i Theta / mu} [ b(p_max) A_plus(Psi/mu)
+ b(p_min) A_minus(Psi/mu) ]`` where ``p_max``/``p_min`` are the
stationary points with the larger/smaller phase value.  This pairing
reproduces the stationary-phase (WKB) limit on both half-lines with the
correct ``exp(-/+ i pi/4)`` factors and is continuous at ``x = 0`` for
even data; spelling both half-lines this way avoids tracking the four
sign conventions of the two printed per-side formulas separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from .airy import airy_ai_pair, envelope_amplitude
from .dispersion import ACOUSTIC, OPTICAL, Dispersion, LatticeParams
from .errors import ConfigError, NumericalError, RegimeError
from .initial_data import InitialProfile, spectral_vector
from .oracles import WaveField

__all__ = [
    "StationaryPoints",
    "split_even_odd",
    "split_about_pstar",
    "three_point_continue",
    "acoustic_stationary",
    "optical_stationary",
    "acoustic_front_airy",
    "acoustic_uniform",
    "optical_front_airy",
    "optical_uniform",
    "shortwave_total",
]

#: Quadratic-extrapolation stencil ``f(z) = c0 f(0) + c1 f(-z) + c2 f(-2z)``.
DEFAULT_STENCIL = (3.0, -3.0, 1.0)

#: Switch from the uniform form to the front form at ``front - 0.01 width``.
#: The stationary-point machinery stays numerically stable essentially up
#: to the front, and the interior uniform forms are one asymptotic order
#: more accurate than the front forms, so the front band is kept thin.
FRONT_SWITCH_WIDTHS = 0.01

#: Evaluate the front form out to ``front + 5 widths``; zero beyond.
CONTINUATION_WIDTHS = 5.0

_Z_FLOOR = 1e-12
_ROOT_RESIDUAL = 1e-10
_GL_PSI_NODES, _GL_PSI_WEIGHTS = np.polynomial.legendre.leggauss(32)


def _require_unit_delta(params: LatticeParams, mu: float) -> None:
    if mu <= 0.0:
        raise ConfigError(f"mu must be positive, got {mu!r}")
    if abs(params.h - mu) > 1e-9 * mu:
        raise RegimeError(
            f"short-wave evaluators require delta = h/mu = 1, got "
            f"h={params.h!r}, mu={mu!r}; use the band quadrature or the "
            "long-wave evaluators for delta != 1"
        )


def _require_positive_time(t: float) -> None:
    if t <= 0.0:
        raise ConfigError(f"short-wave asymptotics require t > 0, got {t!r}")


# ---------------------------------------------------------------------------
# Spectral splits and continuation
# ---------------------------------------------------------------------------

def split_even_odd(profile: InitialProfile, z) -> tuple[np.ndarray, np.ndarray]:
    """Even/odd split of the unit-step spectral vector in ``z = p**2``.

    ``V1(z) = (V(sqrt z) + V(-sqrt z)) / 2`` and
    ``V2(z) = (V(sqrt z) - V(-sqrt z)) / (2 sqrt z)``, so that
    ``V(p) = V1(p^2) + p V2(p^2)``.  Both return shape ``z.shape + (2,)``
    complex arrays; for real lattice data ``V1`` is real and ``V2``
    purely imaginary.  Requires ``z >= 0`` (use
    :func:`three_point_continue` beyond the front).
    """
    z_arr = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z_arr < 0.0):
        raise ConfigError("split_even_odd needs z >= 0; continue negative z explicitly")
    root = np.sqrt(np.maximum(z_arr, _Z_FLOOR))
    vp = spectral_vector(profile, 1.0, root)
    vm = spectral_vector(profile, 1.0, -root)
    v1 = 0.5 * (vp + vm)
    v2 = (vp - vm) / (2.0 * root[..., None])
    return v1, v2


def split_about_pstar(
    profile: InitialProfile, p_star: float, eta
) -> tuple[np.ndarray, np.ndarray]:
    """Symmetric/antisymmetric split about the critical momentum.

    ``F1(eta) = (V(p* - sqrt eta) + V(p* + sqrt eta)) / 2`` and
    ``F2(eta) = (V(p* - sqrt eta) - V(p* + sqrt eta)) / (2 sqrt eta)``
    (minus side first, matching the front formulas that consume them).
    Requires ``eta >= 0``.
    """
    eta_arr = np.atleast_1d(np.asarray(eta, dtype=float))
    if np.any(eta_arr < 0.0):
        raise ConfigError("split_about_pstar needs eta >= 0")
    root = np.sqrt(np.maximum(eta_arr, _Z_FLOOR))
    vm = spectral_vector(profile, 1.0, p_star - root)
    vp = spectral_vector(profile, 1.0, p_star + root)
    f1 = 0.5 * (vm + vp)
    f2 = (vm - vp) / (2.0 * root[..., None])
    return f1, f2


def three_point_continue(
    f: Callable[[np.ndarray], np.ndarray],
    z,
    stencil: tuple[float, float, float] = DEFAULT_STENCIL,
):
    """Quadratic extrapolation of ``f`` (defined for ``z <= 0``) to ``z > 0``.

    ``f(z) ~= c0 f(0) + c1 f(-z) + c2 f(-2z)`` with the default stencil
    ``(3, -3, 1)`` -- exact for polynomials of degree <= 2.  ``stencil``
    is exposed because one printed source uses ``(3, -3, 2)`` for the
    optical amplitudes; see the project ledger for the comparison.
    """
    z_arr = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z_arr < 0.0):
        raise ConfigError("three_point_continue expects z >= 0 (continuation side)")
    c0, c1, c2 = stencil
    out = (
        c0 * np.asarray(f(np.zeros_like(z_arr)))
        + c1 * np.asarray(f(-z_arr))
        + c2 * np.asarray(f(-2.0 * z_arr))
    )
    if np.isscalar(z) or np.ndim(z) == 0:
        return out[0]
    return out


def _split_with_continuation(
    split: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
    z: np.ndarray,
    stencil: tuple[float, float, float],
) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate a ``z >= 0`` split on a mixed-sign grid.

    Negative arguments use the mirrored three-point rule
    ``g(z) = c0 g(0) + c1 g(-z) + c2 g(-2z)`` (with ``z < 0``, so the
    sample points ``-z`` and ``-2z`` are on the defined side).
    """
    c0, c1, c2 = stencil
    pos = z >= 0.0
    v1 = np.empty(z.shape + (2,), dtype=complex)
    v2 = np.empty_like(v1)
    if np.any(pos):
        v1[pos], v2[pos] = split(z[pos])
    if np.any(~pos):
        zn = z[~pos]
        a1, a2 = split(np.zeros_like(zn))
        b1, b2 = split(-zn)
        d1, d2 = split(-2.0 * zn)
        v1[~pos] = c0 * a1 + c1 * b1 + c2 * d1
        v2[~pos] = c0 * a2 + c1 * b2 + c2 * d2
    return v1, v2


# ---------------------------------------------------------------------------
# Stationary-point machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StationaryPoints:
    """Stationary-phase data of one mode at one ``(x, t)``.

    ``momenta`` holds ``(p,)`` for the acoustic mode or
    ``(p_minus, p_plus)`` straddling ``p*`` for the optical mode;
    ``action`` is the non-negative Airy phase (``S`` acoustic, ``Psi``
    optical) and ``carrier`` the optical mean phase ``Theta`` (zero for
    acoustic).  ``window`` is the x-interval of this side on which the
    stationary problem is solvable (front excluded).
    """

    branch: str
    side: str
    x: float
    t: float
    momenta: tuple[float, ...]
    action: float
    carrier: float
    window: tuple[float, float]

    def __post_init__(self) -> None:
        if self.branch not in ("acoustic", "optical"):
            raise ConfigError(f"unknown branch {self.branch!r}")
        if self.side not in ("left", "right"):
            raise ConfigError(f"unknown side {self.side!r}")
        if not self.action >= 0.0:
            raise NumericalError(
                f"negative action {self.action!r} at x={self.x!r}, t={self.t!r}: "
                "point lies beyond the continuation region"
            )


def _bracket_root(fn: Callable[[float], float], lo: float, hi: float, what: str) -> float:
    f_lo, f_hi = fn(lo), fn(hi)
    # Roots may sit exactly on a bracket edge (e.g. x = 0 puts the acoustic
    # point at the zone edge), where fn returns rounding noise of either sign.
    if abs(f_lo) <= _ROOT_RESIDUAL:
        return lo
    if abs(f_hi) <= _ROOT_RESIDUAL:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise NumericalError(
            f"{what}: no sign change on [{lo!r}, {hi!r}] "
            f"(f(lo)={f_lo!r}, f(hi)={f_hi!r})"
        )
    return float(brentq(fn, lo, hi, xtol=1e-14, rtol=8.9e-16))


def acoustic_stationary(params: LatticeParams, x: float, t: float) -> StationaryPoints:
    """Acoustic stationary momentum ``p`` solving ``omega_1'(p) = |x| / t``.

    The group speed of the smooth acoustic branch decreases from ``c``
    at ``p = 0`` to ``0`` at the zone edge ``p = pi/2``, so there is a
    unique root for ``|x| < c t`` (``p -> pi/2`` as ``x -> 0``).  The
    stored action ``S = omega_1(p) t - p |x|`` is computed in the
    cancellation-free Legendre form ``t m(p) + p (t omega_1'(p) - |x|)``.
    """
    _require_positive_time(t)
    disp = Dispersion(params)
    c = disp.sound_speed
    ax = abs(float(x))
    if ax >= c * t:
        raise NumericalError(
            f"x={x!r} is on or beyond the acoustic front |x| = c t = {c * t!r}; "
            "use acoustic_front_airy there"
        )
    target = ax / t

    def fn(p: float) -> float:
        return float(disp.omega1_smooth_derivs(p, 1)[1]) - target

    p = _bracket_root(fn, 0.0, np.pi / 2.0, "acoustic stationary point")
    residual = abs(fn(p))
    if residual > _ROOT_RESIDUAL:
        raise NumericalError(f"acoustic stationary residual {residual:.3e} > {_ROOT_RESIDUAL}")
    omega1_p = float(disp.omega1_smooth_derivs(p, 1)[1])
    action = float(t * disp.legendre_omega1(p) + p * (t * omega1_p - ax))
    side = "right" if x >= 0.0 else "left"
    window = (0.0, c * t) if side == "right" else (-c * t, 0.0)
    return StationaryPoints(
        branch="acoustic",
        side=side,
        x=float(x),
        t=float(t),
        momenta=(p,),
        action=action,
        carrier=0.0,
        window=window,
    )


def optical_stationary(params: LatticeParams, x: float, t: float) -> StationaryPoints:
    """Optical stationary pair ``p_- < p* < p_+`` with phases ``Theta, Psi``.

    Both momenta solve ``omega_2'(p) = -|x| / t`` (the optical group
    speed runs from 0 at the zone centre through ``-c*`` at ``p*`` back
    to 0 at the zone edge); they exist for ``|x| < c* t``.  With the
    side phase ``Phi(p) = p x + omega_2(p) t`` (right) or
    ``p x - omega_2(p) t`` (left), the stored values are
    ``Theta = (Phi(p_+) + Phi(p_-)) / 2`` and the non-negative
    ``Psi = -(t/2) * int_{p_-}^{p_+} (p_+ - s) omega_2''(s) ds``
    (equal to half the phase spread ``|Phi(p_max) - Phi(p_min)|``,
    evaluated as an integral to stay accurate as ``p_+- -> p*``).
    """
    _require_positive_time(t)
    disp = Dispersion(params)
    crit = disp.critical
    ax = abs(float(x))
    if ax >= crit.c_star * t:
        raise NumericalError(
            f"x={x!r} is on or beyond the optical front |x| = c* t = "
            f"{crit.c_star * t!r}; use optical_front_airy there"
        )
    target = -ax / t

    def fn(p: float) -> float:
        return float(disp.omega2_derivs(p, 1)[1]) - target

    p_minus = _bracket_root(fn, 0.0, crit.p_star, "optical stationary point p-")
    p_plus = _bracket_root(fn, crit.p_star, np.pi / 2.0, "optical stationary point p+")
    for p_root, tag in ((p_minus, "p-"), (p_plus, "p+")):
        residual = abs(fn(p_root))
        if residual > _ROOT_RESIDUAL:
            raise NumericalError(
                f"optical stationary residual at {tag}: {residual:.3e} > {_ROOT_RESIDUAL}"
            )

    # Psi = -(t/2) int_{p-}^{p+} (p+ - s) w2''(s) ds  by 32-node Gauss-Legendre.
    half = 0.5 * (p_plus - p_minus)
    mid = 0.5 * (p_plus + p_minus)
    nodes = mid + half * _GL_PSI_NODES
    w2dd = disp.omega2_derivs(nodes, 2)[2]
    psi = float(-0.5 * t * half * np.dot(_GL_PSI_WEIGHTS, (p_plus - nodes) * w2dd))

    w2_minus = float(disp.omega2_derivs(p_minus, 0)[0])
    w2_plus = float(disp.omega2_derivs(p_plus, 0)[0])
    side = "right" if x >= 0.0 else "left"
    sgn = 1.0 if side == "right" else -1.0
    phi_minus = p_minus * x + sgn * w2_minus * t
    phi_plus = p_plus * x + sgn * w2_plus * t
    theta = 0.5 * (phi_plus + phi_minus)
    window = (0.0, crit.c_star * t) if side == "right" else (-crit.c_star * t, 0.0)
    return StationaryPoints(
        branch="optical",
        side=side,
        x=float(x),
        t=float(t),
        momenta=(p_minus, p_plus),
        action=psi,
        carrier=theta,
        window=window,
    )


# ---------------------------------------------------------------------------
# Front Airy evaluators
# ---------------------------------------------------------------------------

def acoustic_front_airy(
    params: LatticeParams,
    profile: InitialProfile,
    mu: float,
    x,
    t: float,
    front: str = "right",
    *,
    stencil: tuple[float, float, float] = DEFAULT_STENCIL,
) -> np.ndarray:
    """Airy representation of the acoustic mode near a front ``x = +-ct``.

    Right front:
    ``(mu/(q t))^{1/3} A(0) Re[ V1(-(x - ct)/(q t)) Ai((x - ct)/w)
    - i (mu/(q t))^{1/3} V2(-(x - ct)/(q t)) Ai'((x - ct)/w) ]``
    with ``w = mu^{2/3} (q t)^{1/3}``; the left front mirrors the
    argument and flips the ``Ai'`` sign.  ``V1``/``V2`` are the even/odd
    spectral splits, continued by the three-point rule beyond the front.
    Returns shape ``(n, 2)`` (heavy, light components).
    """
    _require_unit_delta(params, mu)
    _require_positive_time(t)
    if front not in ("left", "right"):
        raise ConfigError(f"front must be 'left' or 'right', got {front!r}")
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    disp = Dispersion(params)
    c = disp.sound_speed
    q = disp.dispersion_coefficient
    width = mu ** (2.0 / 3.0) * (q * t) ** (1.0 / 3.0)
    cube = (mu / (q * t)) ** (1.0 / 3.0)
    if front == "right":
        z = -(x_arr - c * t) / (q * t)
        ai_arg = (x_arr - c * t) / width
        deriv_sign = -1.0
    else:
        z = (x_arr + c * t) / (q * t)
        ai_arg = -(x_arr + c * t) / width
        deriv_sign = +1.0
    v1, v2 = _split_with_continuation(lambda s: split_even_odd(profile, s), z, stencil)
    ai, aip = airy_ai_pair(ai_arg)
    combo = v1 * ai[:, None] + deriv_sign * 1j * cube * v2 * aip[:, None]
    a0 = disp.modal_matrix(0.0, ACOUSTIC)
    return cube * combo.real @ a0.T


def optical_front_airy(
    params: LatticeParams,
    profile: InitialProfile,
    mu: float,
    x,
    t: float,
    front: str = "right",
    *,
    stencil: tuple[float, float, float] = DEFAULT_STENCIL,
) -> np.ndarray:
    """Airy-envelope representation of the optical mode near ``x = +-c*t``.

    Right front:
    ``2 (mu/(q* t))^{1/3} Re{ e^{i Phi_1(p*)/mu} B(p*) [ F1(-(x - c*t)/(q* t))
    Ai((x - c*t)/w*) + i (mu/(q* t))^{1/3} F2(...) Ai'(...) ] }``
    with ``w* = mu^{2/3} (q* t)^{1/3}`` and the carrier phase
    ``Phi_1(p*) = p* x + omega_2(p*) t``; the left front uses
    ``Phi_2(p*) = p* x - omega_2(p*) t``, mirrored arguments, and a
    ``-i`` on the ``Ai'`` term.  The output oscillates at the carrier
    wavelength ``~ mu / p*`` under an Airy envelope.
    """
    _require_unit_delta(params, mu)
    _require_positive_time(t)
    if front not in ("left", "right"):
        raise ConfigError(f"front must be 'left' or 'right', got {front!r}")
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    disp = Dispersion(params)
    crit = disp.critical
    omega2_star = float(disp.omega2_derivs(crit.p_star, 0)[0])
    width = mu ** (2.0 / 3.0) * (crit.q_star * t) ** (1.0 / 3.0)
    cube = (mu / (crit.q_star * t)) ** (1.0 / 3.0)
    if front == "right":
        z = -(x_arr - crit.c_star * t) / (crit.q_star * t)
        ai_arg = (x_arr - crit.c_star * t) / width
        phase = (crit.p_star * x_arr + omega2_star * t) / mu
        deriv_sign = +1.0
    else:
        z = (x_arr + crit.c_star * t) / (crit.q_star * t)
        ai_arg = -(x_arr + crit.c_star * t) / width
        phase = (crit.p_star * x_arr - omega2_star * t) / mu
        deriv_sign = -1.0
    f1, f2 = _split_with_continuation(
        lambda s: split_about_pstar(profile, crit.p_star, s), z, stencil
    )
    ai, aip = airy_ai_pair(ai_arg)
    combo = f1 * ai[:, None] + deriv_sign * 1j * cube * f2 * aip[:, None]
    carrier = np.exp(1j * phase)
    b_star = disp.modal_matrix(crit.p_star, OPTICAL)
    projected = np.einsum("ij,nj->ni", b_star, combo)
    return 2.0 * cube * (carrier[:, None] * projected).real


# ---------------------------------------------------------------------------
# Uniform evaluators
# ---------------------------------------------------------------------------

def _acoustic_uniform_point(
    disp: Dispersion, profile: InitialProfile, mu: float, x: float, t: float
) -> np.ndarray:
    sp = acoustic_stationary(disp.params, x, t)
    p = sp.momenta[0]
    omega1_dd = float(disp.omega1_smooth_derivs(p, 2)[2])
    mat = disp.modal_matrix(p, ACOUSTIC)
    vt = spectral_vector(profile, 1.0, p)[0]
    amp = (mat @ vt) / np.sqrt(t * abs(omega1_dd))
    env = envelope_amplitude(sp.action / mu, -1 if sp.side == "right" else +1)
    return np.sqrt(2.0 * mu / np.pi) * (amp * env).real


def _optical_uniform_point(
    disp: Dispersion, profile: InitialProfile, mu: float, x: float, t: float
) -> np.ndarray:
    sp = optical_stationary(disp.params, x, t)
    p_minus, p_plus = sp.momenta
    b = []
    for p_root in (p_minus, p_plus):
        omega2_dd = float(disp.omega2_derivs(p_root, 2)[2])
        mat = disp.modal_matrix(p_root, OPTICAL)
        vt = spectral_vector(profile, 1.0, p_root)[0]
        b.append((mat @ vt) / np.sqrt(t * abs(omega2_dd)))
    b_minus, b_plus = b
    # Phi is maximal at p_minus on the right side and at p_plus on the left;
    # the maximum pairs with A_plus (stationary phase: local max -> e^{-i pi/4}).
    if sp.side == "right":
        b_max, b_min = b_minus, b_plus
    else:
        b_max, b_min = b_plus, b_minus
    y = sp.action / mu
    combo = b_max * envelope_amplitude(y, +1) + b_min * envelope_amplitude(y, -1)
    carrier = np.exp(1j * sp.carrier / mu)
    return np.sqrt(2.0 * mu / np.pi) * (carrier * combo).real


def _dispatch_uniform(
    params: LatticeParams,
    profile: InitialProfile,
    mu: float,
    x_arr: np.ndarray,
    t: float,
    *,
    front_speed: float,
    width: float,
    point_fn: Callable[[float], np.ndarray],
    front_fn: Callable[[np.ndarray, str], np.ndarray],
) -> np.ndarray:
    """Assemble interior / front-band / outside values on a grid."""
    front = front_speed * t
    switch = front - FRONT_SWITCH_WIDTHS * width
    outer = front + CONTINUATION_WIDTHS * width
    out = np.zeros(x_arr.shape + (2,), dtype=float)
    interior = np.abs(x_arr) <= switch
    right_band = (x_arr > switch) & (x_arr <= outer)
    left_band = (x_arr < -switch) & (x_arr >= -outer)
    for i in np.flatnonzero(interior):
        out[i] = point_fn(float(x_arr[i]))
    if np.any(right_band):
        out[right_band] = front_fn(x_arr[right_band], "right")
    if np.any(left_band):
        out[left_band] = front_fn(x_arr[left_band], "left")
    return out


def acoustic_uniform(
    params: LatticeParams,
    profile: InitialProfile,
    mu: float,
    x,
    t: float,
    *,
    stencil: tuple[float, float, float] = DEFAULT_STENCIL,
) -> np.ndarray:
    """Uniform acoustic evaluator on the whole line.

    ``sqrt(2 mu / pi) Re[ A(p) Vtilde(p) A_pm(S/mu) ] / sqrt(t |omega_1''(p)|)``
    at the stationary momentum (``A_minus`` right of the origin,
    ``A_plus`` left; both sides meet continuously at ``x = 0``), handed
    over to :func:`acoustic_front_airy` within half an envelope width of
    the front ``|x| = c t`` and zero beyond the 5-width continuation
    margin.  Returns shape ``(n, 2)``.
    """
    _require_unit_delta(params, mu)
    _require_positive_time(t)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    disp = Dispersion(params)
    q = disp.dispersion_coefficient
    width = mu ** (2.0 / 3.0) * (q * t) ** (1.0 / 3.0)
    return _dispatch_uniform(
        params,
        profile,
        mu,
        x_arr,
        t,
        front_speed=disp.sound_speed,
        width=width,
        point_fn=lambda xi: _acoustic_uniform_point(disp, profile, mu, xi, t),
        front_fn=lambda xs, side: acoustic_front_airy(
            params, profile, mu, xs, t, side, stencil=stencil
        ),
    )


def optical_uniform(
    params: LatticeParams,
    profile: InitialProfile,
    mu: float,
    x,
    t: float,
    *,
    stencil: tuple[float, float, float] = DEFAULT_STENCIL,
) -> np.ndarray:
    """Uniform optical evaluator on the whole line.

    ``sqrt(2 mu / pi) Re{ e^{i Theta/mu} [ b(p_max) A_plus(Psi/mu)
    + b(p_min) A_minus(Psi/mu) ] }`` with
    ``b(p) = B(p) Vtilde(p) / sqrt(t |omega_2''(p)|)`` at the stationary
    pair, handed over to :func:`optical_front_airy` within half an
    envelope width of ``|x| = c* t`` and zero beyond the 5-width margin.
    Returns shape ``(n, 2)``.
    """
    _require_unit_delta(params, mu)
    _require_positive_time(t)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    disp = Dispersion(params)
    crit = disp.critical
    width = mu ** (2.0 / 3.0) * (crit.q_star * t) ** (1.0 / 3.0)
    return _dispatch_uniform(
        params,
        profile,
        mu,
        x_arr,
        t,
        front_speed=crit.c_star,
        width=width,
        point_fn=lambda xi: _optical_uniform_point(disp, profile, mu, xi, t),
        front_fn=lambda xs, side: optical_front_airy(
            params, profile, mu, xs, t, side, stencil=stencil
        ),
    )


def shortwave_total(
    params: LatticeParams,
    profile: InitialProfile,
    mu: float,
    x,
    t: float,
    *,
    stencil: tuple[float, float, float] = DEFAULT_STENCIL,
) -> WaveField:
    """Sum of the uniform acoustic and optical evaluators as a field.

    The slow acoustic profile carries the bulk displacement; the optical
    part superposes a fast carrier oscillation under an Airy envelope
    near ``|x| = c* t``.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    total = acoustic_uniform(params, profile, mu, x_arr, t, stencil=stencil)
    total = total + optical_uniform(params, profile, mu, x_arr, t, stencil=stencil)
    return WaveField(
        x=x_arr,
        u=total[:, 0],
        v=total[:, 1],
        t=float(t),
        method="shortwave_total",
    )
