"""Diffusion noise schedule, forward noising, training loss, and DDIM stepping.

All functions here are pure and operate on either numpy arrays or torch
tensors: schedule coefficients are plain Python floats, so `a * x + b * eps`
dispatches to whichever array library `x` belongs to.

Timestep convention: `t` ranges over 0..T where `alpha_bar_at(0) == 1.0`
(no noise) and `alpha_bar_at(t) == alpha_bars[t - 1]` for t >= 1, so
`forward_diffuse(z0, 0, eps)` is exactly the identity on `z0`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, ConfigError


@dataclass(frozen=True)
class NoiseSchedule:
    """Linear-beta diffusion schedule with cumulative alpha products."""

    num_steps: int
    betas: np.ndarray
    alphas: np.ndarray = field(init=False)
    alpha_bars: np.ndarray = field(init=False)

    def __post_init__(self):
        alphas = 1.0 - self.betas
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "alpha_bars", np.cumprod(alphas))

    def alpha_bar_at(self, t: int) -> float:
        if not 0 <= t <= self.num_steps:
            raise ArgumentError(f"timestep t={t} outside 0..{self.num_steps}")
        if t == 0:
            return 1.0
        return float(self.alpha_bars[t - 1])


def build_schedule(num_steps: int = 1000, beta_start: float = 1e-4, beta_end: float = 0.02) -> NoiseSchedule:
    """Build a linear-beta schedule with `num_steps` entries.

    Betas are linearly interpolated between the inclusive endpoints, so they
    are strictly increasing and the cumulative alpha products strictly
    decrease.
    """
    if not isinstance(num_steps, (int, np.integer)) or num_steps < 2:
        raise ConfigError(f"num_steps must be an integer >= 2, got {num_steps!r}")
    if not 0.0 < beta_start < 1.0:
        raise ConfigError(f"beta_start must lie in (0, 1), got {beta_start!r}")
    if not 0.0 < beta_end < 1.0:
        raise ConfigError(f"beta_end must lie in (0, 1), got {beta_end!r}")
    if not beta_start < beta_end:
        raise ConfigError(f"beta_start must be < beta_end, got beta_start={beta_start!r}, beta_end={beta_end!r}")
    betas = np.linspace(float(beta_start), float(beta_end), int(num_steps), dtype=np.float64)
    return NoiseSchedule(num_steps=int(num_steps), betas=betas)


def _check_timestep(schedule: NoiseSchedule, t: int):
    if not 0 <= t <= schedule.num_steps:
        raise ArgumentError(f"timestep t={t} outside 0..{schedule.num_steps}")


def forward_diffuse(z0, t: int, eps, schedule: NoiseSchedule):
    """Closed-form noising: sqrt(abar_t) * z0 + sqrt(1 - abar_t) * eps."""
    if tuple(z0.shape) != tuple(eps.shape):
        raise ArgumentError(f"noise shape {tuple(eps.shape)} does not match image shape {tuple(z0.shape)}")
    _check_timestep(schedule, t)
    abar = schedule.alpha_bar_at(t)
    return math.sqrt(abar) * z0 + math.sqrt(1.0 - abar) * eps


def eps_loss(eps_hat, eps):
    """Mean squared error between predicted and true noise (the training objective)."""
    if tuple(eps_hat.shape) != tuple(eps.shape):
        raise ArgumentError(f"prediction shape {tuple(eps_hat.shape)} does not match noise shape {tuple(eps.shape)}")
    diff = eps_hat - eps
    return (diff * diff).mean()


def ddim_step(zt, eps_hat, t: int, t_prev: int, schedule: NoiseSchedule):
    """One deterministic DDIM update from timestep t down to t_prev."""
    if not t_prev < t:
        raise ArgumentError(f"ddim_step requires t_prev < t, got t_prev={t_prev}, t={t}")
    if t_prev < 0:
        raise ArgumentError(f"t_prev must be >= 0, got {t_prev}")
    _check_timestep(schedule, t)
    abar_t = schedule.alpha_bar_at(t)
    abar_prev = schedule.alpha_bar_at(t_prev)
    x0_pred = (zt - math.sqrt(1.0 - abar_t) * eps_hat) / math.sqrt(abar_t)
    return math.sqrt(abar_prev) * x0_pred + math.sqrt(1.0 - abar_prev) * eps_hat


def ddim_timesteps(num_steps: int, schedule: NoiseSchedule) -> list[int]:
    """Evenly spaced decreasing timestep sequence T..0 with `num_steps` updates."""
    if num_steps < 1:
        raise ArgumentError(f"num_steps must be >= 1, got {num_steps}")
    ts = np.linspace(schedule.num_steps, 0, num_steps + 1)
    out = sorted({int(round(v)) for v in ts}, reverse=True)
    return out


def sample(denoise_fn, z_init, step_schedule, schedule: NoiseSchedule):
    """Fold `ddim_step` over a strictly decreasing timestep sequence ending at 0.

    `denoise_fn(zt, t)` returns the predicted noise for the current latent.
    Deterministic given its inputs; the caller owns all randomness.
    """
    steps = [int(t) for t in step_schedule]
    if len(steps) < 2:
        raise ArgumentError("step_schedule must contain at least a start and end timestep")
    if any(b >= a for a, b in zip(steps, steps[1:])):
        raise ArgumentError(f"step_schedule must be strictly decreasing, got {steps}")
    if steps[-1] != 0:
        raise ArgumentError(f"step_schedule must end at 0, got {steps}")
    z = z_init
    for t, t_prev in zip(steps, steps[1:]):
        z = ddim_step(z, denoise_fn(z, t), t, t_prev, schedule)
    return z
