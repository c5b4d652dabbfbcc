"""
modules/weights.py
------------------
Weight vectors: one positive exact rational per conjugacy class of
generators.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Mapping, Sequence, Tuple

from models.errors import IrrationalWeight, NonPositiveWeight, WeightNotClassConstant
from models.verdicts import format_rational
from modules.coxeter import GeneratorClasses

logger = logging.getLogger(__name__)


def parse_rational(raw: Any) -> Fraction:
    """Integers, Fractions and "p/q" or decimal strings; floats are rejected."""
    if isinstance(raw, bool):
        raise IrrationalWeight(f"not a rational weight: {raw!r}")
    if isinstance(raw, (int, Fraction)):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            raise IrrationalWeight(f"not an exact rational: {raw!r}", {"value": raw}) from None
    raise IrrationalWeight(f"weights must be exact rationals, got {type(raw).__name__} {raw!r}",
                           {"value": repr(raw)})


@dataclass(frozen=True)
class WeightVector:
    classes: GeneratorClasses
    values: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.classes):
            raise WeightNotClassConstant(
                f"{len(self.values)} weights for {len(self.classes)} generator classes")
        for name, q in zip(self.classes.variable_names, self.values):
            if q <= 0:
                raise NonPositiveWeight(f"weight {name} = {q} is not positive",
                                        {"variable": name, "value": format_rational(q)})

    # ---- construction ------------------------------------------------------

    @classmethod
    def uniform(cls, classes: GeneratorClasses, q: Any) -> "WeightVector":
        value = parse_rational(q)
        return cls(classes, tuple(value for _ in classes.blocks))

    @classmethod
    def from_values(cls, classes: GeneratorClasses, values: Sequence[Any]) -> "WeightVector":
        return cls(classes, tuple(parse_rational(v) for v in values))

    @classmethod
    def from_generator_map(cls, classes: GeneratorClasses, weights: Mapping[str, Any]) -> "WeightVector":
        values = []
        for block in classes.blocks:
            missing = [s for s in block if s not in weights]
            if missing:
                raise WeightNotClassConstant(f"no weight for generators {missing}", {"missing": missing})
            parsed = {s: parse_rational(weights[s]) for s in block}
            distinct = set(parsed.values())
            if len(distinct) != 1:
                raise WeightNotClassConstant(
                    f"conjugate generators {list(block)} carry different weights",
                    {s: format_rational(q) for s, q in parsed.items()},
                )
            values.append(distinct.pop())
        unknown = sorted(set(weights) - {s for b in classes.blocks for s in b})
        if unknown:
            logger.warning("⚠️ ignoring weights for unknown generators %s", unknown)
        return cls(classes, tuple(values))

    # ---- derived -----------------------------------------------------------

    def inverse(self) -> "WeightVector":
        return WeightVector(self.classes, tuple(1 / q for q in self.values))

    def scale(self, s: Fraction) -> "WeightVector":
        return WeightVector(self.classes, tuple(s * q for q in self.values))

    @property
    def leq_one(self) -> bool:
        return all(q <= 1 for q in self.values)

    @property
    def geq_one(self) -> bool:
        return all(q >= 1 for q in self.values)

    @property
    def is_one(self) -> bool:
        return all(q == 1 for q in self.values)

    def of(self, s: str) -> Fraction:
        return self.values[self.classes.class_of(s)]

    def to_dict(self) -> Dict[str, Any]:
        return {name: format_rational(q) for name, q in zip(self.classes.variable_names, self.values)}
