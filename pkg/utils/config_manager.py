from fractions import Fraction
from typing import Any, Dict

DEFAULTS: Dict[str, Any] = {
    "MAX_ORDER": 200_000,
    "MAX_BALL": 14,
    "PRECISION_BITS": 1024,
    "THREADS": 1,
    "MAX_GENERATORS": 24,
    "MAX_FACES": 500_000,
    "MAX_CIRCUIT_LENGTH": 16,
    "ISOLATION_TOLERANCE": "1/1000000000000",
}


class ConfigManager:
    def __init__(self, config: Dict[str, Any]):
        self.config = config

    def get(self, key: str, default: Any = None) -> Any:
        return self.config.get(key, default)

    def _get_int(self, key: str) -> int:
        value = self.config.get(key)
        return int(DEFAULTS[key] if value is None else value)

    def get_max_order(self) -> int:
        return self._get_int("MAX_ORDER")

    def get_max_ball(self) -> int:
        return self._get_int("MAX_BALL")

    def get_precision_bits(self) -> int:
        return self._get_int("PRECISION_BITS")

    def get_threads(self) -> int:
        return self._get_int("THREADS")

    def get_max_generators(self) -> int:
        return self._get_int("MAX_GENERATORS")

    def get_max_faces(self) -> int:
        return self._get_int("MAX_FACES")

    def get_max_circuit_length(self) -> int:
        return self._get_int("MAX_CIRCUIT_LENGTH")

    def get_isolation_tolerance(self) -> Fraction:
        value = self.config.get("ISOLATION_TOLERANCE") or DEFAULTS["ISOLATION_TOLERANCE"]
        return Fraction(str(value))

    def caps(self) -> Dict[str, Any]:
        """All effective caps, for the report trail."""
        return {
            "max_order": self.get_max_order(),
            "max_ball": self.get_max_ball(),
            "precision_bits": self.get_precision_bits(),
            "threads": self.get_threads(),
            "max_generators": self.get_max_generators(),
            "max_faces": self.get_max_faces(),
            "max_circuit_length": self.get_max_circuit_length(),
            "isolation_tolerance": str(self.get_isolation_tolerance()),
        }
