"""The 13 adjustable hyperparameters of a DFNN and their bounds.

Axis order is fixed once and for all here; setting ranks, ledger columns
and report columns all follow it.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import InvalidHyperparameters

AF_VALUES = ("relu", "sigmoid", "softmax", "tanh")
KI_VALUES = ("constant", "glorot_normal", "glorot_uniform", "he_normal", "he_uniform")
OPT_VALUES = ("sgd", "adam", "adagrad", "nadam", "adamax")

# Canonical axis order: structural pair first, then the non-structural axes.
STRUCTURAL_NAMES = ("nhl", "nodes")
NONSTRUCTURAL_NAMES = (
    "af", "ki", "opt", "lr", "mom", "decay", "dropout",
    "epochs", "batch_size", "l1", "l2",
)
ALL_NAMES = STRUCTURAL_NAMES + NONSTRUCTURAL_NAMES

CATEGORICAL_NAMES = ("af", "ki", "opt")

# Default admissible ranges; campaigns may override them.
DEFAULT_BOUNDS = {
    "nhl": (1, 4),
    "nodes": (1, 1005),
    "lr": (0.001, 0.3),
    "mom": (0.0, 0.9),
    "decay": (0.0, 0.1),
    "dropout": (0.0, 0.5),
    "epochs": (5, 2000),
    "batch_size": (1, None),  # upper bound is the case count, checked at train time
    "l1": (0.0, 0.03),
    "l2": (0.0, 0.2),
}


@dataclass(frozen=True)
class DfnnHyperparameters:
    """One concrete value assignment to all 13 adjustable hyperparameters."""

    nhl: int
    nodes: tuple[int, ...]
    af: str
    ki: str
    opt: str
    lr: float
    mom: float
    decay: float
    dropout: float
    epochs: int
    batch_size: int
    l1: float
    l2: float

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(int(n) for n in self.nodes))

    def value_of(self, name: str):
        return getattr(self, name)

    def with_value(self, name: str, value) -> "DfnnHyperparameters":
        return replace(self, **{name: value})

    def validate(self, bounds: dict | None = None) -> None:
        """Raise InvalidHyperparameters when any value is out of range."""
        b = dict(DEFAULT_BOUNDS)
        if bounds:
            b.update(bounds)
        problems = []
        lo, hi = b["nhl"]
        if not (lo <= self.nhl <= hi):
            problems.append(f"nhl={self.nhl} outside [{lo},{hi}]")
        if len(self.nodes) != self.nhl:
            problems.append(f"nodes has {len(self.nodes)} entries for nhl={self.nhl}")
        lo, hi = b["nodes"]
        for n in self.nodes:
            if not (lo <= n <= hi):
                problems.append(f"node count {n} outside [{lo},{hi}]")
        if self.af not in AF_VALUES:
            problems.append(f"unknown activation {self.af!r}")
        if self.ki not in KI_VALUES:
            problems.append(f"unknown initializer {self.ki!r}")
        if self.opt not in OPT_VALUES:
            problems.append(f"unknown optimizer {self.opt!r}")
        for name in ("lr", "mom", "decay", "dropout", "epochs", "l1", "l2"):
            lo, hi = b[name]
            v = getattr(self, name)
            if not (lo <= v <= hi):
                problems.append(f"{name}={v} outside [{lo},{hi}]")
        if self.batch_size < b["batch_size"][0]:
            problems.append(f"batch_size={self.batch_size} < {b['batch_size'][0]}")
        if self.epochs != int(self.epochs):
            problems.append("epochs must be an integer")
        if problems:
            raise InvalidHyperparameters("; ".join(problems))


def uniform_nodes(nhl: int, node_count: int) -> tuple[int, ...]:
    """Per-layer node list with the same width on every hidden layer."""
    return (int(node_count),) * int(nhl)


def make_hp(nhl: int, nodes: int | Sequence[int], **kwargs) -> DfnnHyperparameters:
    """Convenience constructor accepting a scalar or per-layer node spec."""
    if isinstance(nodes, int):
        nodes = uniform_nodes(nhl, nodes)
    return DfnnHyperparameters(nhl=nhl, nodes=tuple(nodes), **kwargs)
