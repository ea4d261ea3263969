"""Exhaustive censuses of monic integer polynomials over coefficient boxes."""

from .runner import (run_census, CensusReport, BudgetExceeded, default_budget,
                     DEFAULT_BUDGET, BUDGET_ENV)
from .demoivre import demoivre_census, demoivre_poly, fit_exponent, ExponentFit

__all__ = ["run_census", "CensusReport", "BudgetExceeded", "default_budget",
           "DEFAULT_BUDGET", "BUDGET_ENV", "demoivre_census", "demoivre_poly",
           "fit_exponent", "ExponentFit"]
