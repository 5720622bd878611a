"""Concrete example models, addressable by stable string identifiers."""

from pwreject.models import linear_or, mvn_ball, normal_mean, nuisance

MODEL_IDS = ("interval", "or_null", "nuisance", "ball")

__all__ = ["MODEL_IDS", "normal_mean", "linear_or", "nuisance", "mvn_ball"]
