"""Binomial GLM with logit link, fitted by iteratively reweighted least squares."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from virality.chi2 import chi2_sf
from virality.errors import ConvergenceError, DataError, RankDeficientError

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 50
# Fisher information beyond this condition number is treated as singular.
MAX_CONDITION = 1e13


class SeparationWarning(UserWarning):
    """Fit did not converge, most likely because of (quasi-)complete separation."""


def expit(eta):
    """Inverse logit, stable for large |eta|."""
    eta = np.asarray(eta, dtype=np.float64)
    out = np.empty_like(eta)
    pos = eta >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-eta[pos]))
    e = np.exp(eta[~pos])
    out[~pos] = e / (1.0 + e)
    return out


def log_likelihood(beta, X, y) -> float:
    """Bernoulli log-likelihood sum of y*eta - log(1 + exp(eta))."""
    eta = X @ beta
    return float(np.sum(y * eta - np.logaddexp(0.0, eta)))


@dataclass(frozen=True)
class DesignMatrix:
    X: np.ndarray
    y: np.ndarray
    names: tuple[str, ...]

    def __post_init__(self):
        X = np.array(self.X, dtype=np.float64)
        y = np.array(self.y, dtype=np.float64)
        if X.ndim != 2:
            raise DataError("design matrix must be two-dimensional")
        if y.shape != (X.shape[0],):
            raise DataError("response length does not match design rows")
        if X.shape[1] == 0 or not np.all(X[:, 0] == 1.0):
            raise DataError("first design column must be the all-ones intercept")
        if not np.all((y == 0.0) | (y == 1.0)):
            raise DataError("responses must be 0 or 1")
        names = tuple(self.names) if self.names else tuple(f"x{i}" for i in range(X.shape[1]))
        if len(names) != X.shape[1]:
            raise DataError("one name per design column required")
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "names", names)

    @classmethod
    def from_columns(cls, covariates, y, names=None) -> "DesignMatrix":
        """Build from covariate columns; the intercept is prepended."""
        covariates = np.asarray(covariates, dtype=np.float64)
        if covariates.ndim == 1:
            covariates = covariates[:, None]
        X = np.column_stack([np.ones(len(y)), covariates]) if covariates.size else np.ones((len(y), 1))
        if names is not None:
            names = ("intercept", *names)
        return cls(X, y, names)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    def drop(self, column: str) -> "DesignMatrix":
        if column == self.names[0]:
            raise ValueError("cannot drop the intercept")
        keep = [i for i, name in enumerate(self.names) if name != column]
        if len(keep) == len(self.names):
            raise KeyError(column)
        return DesignMatrix(self.X[:, keep], self.y, tuple(self.names[i] for i in keep))


@dataclass(frozen=True)
class GlmFit:
    beta: np.ndarray
    std_err: np.ndarray
    cov: np.ndarray
    log_lik: float
    iterations: int
    converged: bool
    names: tuple[str, ...]
    n: int

    def coefficient(self, name: str) -> float:
        return float(self.beta[self.names.index(name)])

    def to_dict(self) -> dict:
        return {
            "names": list(self.names),
            "beta": self.beta.tolist(),
            "std_err": self.std_err.tolist(),
            "cov": self.cov.tolist(),
            "log_lik": self.log_lik,
            "iterations": self.iterations,
            "converged": self.converged,
            "n": self.n,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GlmFit":
        return cls(
            beta=np.array(d["beta"], dtype=np.float64),
            std_err=np.array(d["std_err"], dtype=np.float64),
            cov=np.array(d["cov"], dtype=np.float64).reshape(len(d["beta"]), len(d["beta"])),
            log_lik=d["log_lik"],
            iterations=d["iterations"],
            converged=d["converged"],
            names=tuple(d["names"]),
            n=d["n"],
        )


def dependent_columns(X: np.ndarray, names: Sequence[str]) -> list[str]:
    """Columns that are linear combinations of earlier columns."""
    dependent = []
    kept: list[int] = []
    rank = 0
    for j in range(X.shape[1]):
        r = np.linalg.matrix_rank(X[:, kept + [j]])
        if r > rank:
            kept.append(j)
            rank = r
        else:
            dependent.append(names[j])
    return dependent


def _canonical_order(X, y):
    # Sorting rows makes the floating-point reductions independent of input order.
    keys = [y] + [X[:, j] for j in range(X.shape[1] - 1, -1, -1)]
    order = np.lexsort(keys[::-1])
    return X[order], y[order]


def fit_logistic(
    design: DesignMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> GlmFit:
    """Maximum-likelihood logistic regression by IRLS (Newton-Raphson).

    Starts at beta = 0 and stops once the largest coefficient update is
    below ``tol``. If that does not happen within ``max_iter`` iterations,
    or the Fisher information becomes numerically singular, the last
    iterate is returned with ``converged=False`` and a
    ``SeparationWarning`` is issued.
    """
    X, y = design.X, design.y
    n, k = X.shape
    if n <= k:
        raise DataError(f"need more observations ({n}) than coefficients ({k})")
    if y.min() == y.max():
        raise DataError(f"response is constant ({int(y[0])}); nothing to model")
    dependent = dependent_columns(X, design.names)
    if dependent:
        raise RankDeficientError(
            f"design is rank deficient; dependent columns: {', '.join(dependent)}", dependent
        )
    X, y = _canonical_order(X, y)

    beta = np.zeros(k)
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        p = expit(X @ beta)
        w = p * (1.0 - p)
        info = X.T @ (X * w[:, None])
        if np.linalg.cond(info) > MAX_CONDITION:
            break
        step = np.linalg.solve(info, X.T @ (y - p))
        beta = beta + step
        if np.max(np.abs(step)) < tol:
            converged = True
            break

    p = expit(X @ beta)
    w = p * (1.0 - p)
    info = X.T @ (X * w[:, None])
    if np.linalg.cond(info) > MAX_CONDITION:
        cov = np.full((k, k), np.nan)
        converged = False
    else:
        cov = np.linalg.inv(info)
        cov = 0.5 * (cov + cov.T)
    if not converged:
        warnings.warn(
            f"logistic fit did not converge after {iterations} iterations; "
            "the data may be (quasi-)separated",
            SeparationWarning,
            stacklevel=2,
        )
    std_err = np.sqrt(np.diag(cov))
    return GlmFit(
        beta=beta,
        std_err=std_err,
        cov=cov,
        log_lik=log_likelihood(beta, X, y),
        iterations=iterations,
        converged=converged,
        names=design.names,
        n=n,
    )


def score_residuals(fit: GlmFit, design: DesignMatrix) -> np.ndarray:
    """Gradient of the log-likelihood, sum_n (y_n - p_n) f_n, at the fit."""
    p = expit(design.X @ fit.beta)
    return design.X.T @ (design.y - p)


def wald_statistics(fit: GlmFit) -> np.ndarray:
    """beta_i / std_err_i for each coefficient (reported as "t" values)."""
    if not fit.converged:
        raise ConvergenceError("Wald statistics need a converged fit")
    return fit.beta / fit.std_err


@dataclass(frozen=True)
class LikelihoodRatioTest:
    statistic: float
    df: int
    p_value: float


def likelihood_ratio_test(full: GlmFit, reduced: GlmFit, df: int | None = None) -> LikelihoodRatioTest:
    """Twice the log-likelihood gain of ``full`` over the nested ``reduced`` model."""
    if df is None:
        df = len(full.beta) - len(reduced.beta)
    if df < 1 and not (df == 0 and full.names == reduced.names):
        raise ValueError("degrees of freedom must be at least 1")
    statistic = 2.0 * (full.log_lik - reduced.log_lik)
    if statistic < -1e-8:
        raise ConvergenceError(
            f"negative likelihood-ratio statistic {statistic:.3g}: models not nested or fit failed"
        )
    statistic = max(statistic, 0.0)
    p_value = 1.0 if df == 0 else chi2_sf(statistic, df)
    return LikelihoodRatioTest(statistic, df, p_value)


def predict(fit_or_beta, features) -> float | np.ndarray:
    """p(RT | f) = 1 / (1 + exp(-sum_i beta_i f_i))."""
    beta = fit_or_beta.beta if isinstance(fit_or_beta, GlmFit) else np.asarray(fit_or_beta, dtype=np.float64)
    f = np.asarray(features, dtype=np.float64)
    if f.shape[-1] != beta.shape[0]:
        raise ValueError(f"expected {beta.shape[0]} features, got {f.shape[-1]}")
    p = expit(np.atleast_1d(f @ beta))
    return float(p[0]) if f.ndim == 1 else p
