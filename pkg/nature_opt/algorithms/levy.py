import numpy as np
from scipy.special import gamma


def mantegna_sigma(beta: float) -> float:
    return (
        gamma(1 + beta)
        * np.sin(np.pi * beta / 2)
        / (gamma((1 + beta) / 2) * beta * 2 ** ((beta - 1) / 2))
    ) ** (1 / beta)


def levy_flight(rng: np.random.Generator, beta: float, size=None) -> np.ndarray:
    """Lévy-stable steps by Mantegna's algorithm

    step = u / |v| ** (1 / beta), u ~ N(0, sigma_u^2), v ~ N(0, 1), so
    P(|step| > s) decays like s ** -beta.

    Args:
        rng (np.random.Generator): the run's random stream
        beta (float): stability index in (0, 2]
        size: output shape

    Returns:
        np.ndarray: raw (unscaled) steps
    """
    u = rng.normal(0.0, mantegna_sigma(beta), size=size)
    v = rng.normal(0.0, 1.0, size=size)
    return u / np.abs(v) ** (1 / beta)
