from dataclasses import dataclass
from typing import Optional

METHODS = ("expansion1", "expansion2", "expansion3", "mc", "ift")


@dataclass(frozen=True)
class PriceEstimate:
    """ATM call price per unit spot produced by one method."""

    price: float
    method: str
    t: float
    stderr: Optional[float] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if (self.stderr is not None) != (self.method == "mc"):
            raise ValueError("stderr is reported for Monte Carlo estimates only")
