import math
from dataclasses import dataclass, field

from core.exceptions import DomainError

ALPHA_MIN = 1e-3


@dataclass(frozen=True)
class StableParams:
    """Параметры устойчивого распределения S(α, β, μ, σ)"""

    alpha: float
    beta: float
    mu: float
    sigma: float

    def __post_init__(self):
        if not (0.0 < self.alpha <= 2.0):
            raise DomainError(f"alpha должен лежать в (0, 2], получено {self.alpha}")
        if not (-1.0 <= self.beta <= 1.0):
            raise DomainError(f"beta должен лежать в [-1, 1], получено {self.beta}")
        if not (self.sigma > 0.0 and math.isfinite(self.sigma)):
            raise DomainError(f"sigma должна быть положительной, получено {self.sigma}")
        if not math.isfinite(self.mu):
            raise DomainError(f"mu должно быть конечным, получено {self.mu}")

    @classmethod
    def clamped(cls, alpha, beta, mu, sigma):
        """Параметры, приведённые в допустимую область"""
        return cls(
            alpha=min(max(float(alpha), ALPHA_MIN), 2.0),
            beta=min(max(float(beta), -1.0), 1.0),
            mu=float(mu),
            sigma=max(float(sigma), 1e-12),
        )

    def shifted(self, delta_mu):
        return StableParams(self.alpha, self.beta, self.mu + delta_mu, self.sigma)

    def as_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "mu": self.mu, "sigma": self.sigma}


# Подгонка к полевым измерениям задержки DSRC (мс)
DSRC_FIELD_FIT = StableParams(alpha=1.77395, beta=1.0, mu=72.7343, sigma=13.3685)


@dataclass(frozen=True)
class FitConfig:
    """Настройки регрессионной оценки параметров"""

    max_iterations: int = 20
    convergence_tol: float = 1e-3
    k_points: int = 10
    l_points: int = 10
    abscissa_step: float = math.pi / 25

    def __post_init__(self):
        if self.max_iterations < 1:
            raise DomainError("max_iterations должно быть положительным")
        if self.k_points < 2 or self.l_points < 2:
            raise DomainError("Для регрессии нужно не меньше двух точек")
        if not self.abscissa_step > 0:
            raise DomainError("abscissa_step должен быть положительным")
        if not self.convergence_tol > 0:
            raise DomainError("convergence_tol должен быть положительным")


@dataclass(frozen=True)
class FitReport:
    params: StableParams
    iterations_used: int
    converged: bool
    residual_alpha_sigma: float
    residual_beta_mu: float
    notes: tuple[str, ...] = field(default=())

    @property
    def beta_unidentified(self):
        return "beta_unidentified" in self.notes

    @property
    def alpha_nudged(self):
        return "alpha_nudged" in self.notes

    def as_dict(self):
        return {
            **self.params.as_dict(),
            "iterations_used": self.iterations_used,
            "converged": self.converged,
            "residual_alpha_sigma": self.residual_alpha_sigma,
            "residual_beta_mu": self.residual_beta_mu,
            "notes": list(self.notes),
        }
