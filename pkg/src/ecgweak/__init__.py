"""Weakly supervised PVC detection for ECG records.

Pipeline: parse records (WFDB or CSV), remove baseline wander, locate
per-beat fiducials, vote with auto-thresholded heuristics, fit a
factor-graph label model, train a noise-aware classifier, evaluate.
"""

__version__ = "0.1.0"
