# faht/ensemble/__init__.py
"""Sliding-window ensemble of Hoeffding trees."""

from .window import EnsemblePrediction, WindowEnsemble, ensemble_predict, ensemble_process

__all__ = ["EnsemblePrediction", "WindowEnsemble", "ensemble_predict", "ensemble_process"]
