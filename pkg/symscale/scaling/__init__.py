__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from symscale.scaling.akima import AkimaInterpolant, akima_interpolate
from symscale.scaling.flops import training_flops
from symscale.scaling.hparams import SweepGrid, SweepPoint, optimal_hparams
from symscale.scaling.pareto import pareto_front, pareto_frame
from symscale.scaling.power_law import AccuracyLawFit, PowerLawFit, fit_accuracy_law, fit_power_law
from symscale.scaling.tradeoff import TradeoffReport, optimal_tradeoff
