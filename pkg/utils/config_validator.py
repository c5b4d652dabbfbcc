from fractions import Fraction

_POSITIVE_INT_KEYS = [
    "MAX_ORDER",
    "MAX_BALL",
    "PRECISION_BITS",
    "THREADS",
    "MAX_GENERATORS",
    "MAX_FACES",
    "MAX_CIRCUIT_LENGTH",
]


def validate_config(config: dict):
    missing = [k for k in _POSITIVE_INT_KEYS if config.get(k) is None]
    if missing:
        raise ValueError(f"Missing required configuration keys: {missing}")

    for key in _POSITIVE_INT_KEYS:
        value = config[key]
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{key} must be an integer, got {value!r}.")
        if value <= 0:
            raise ValueError(f"{key} must be positive, got {value}.")

    if config["PRECISION_BITS"] < 53:
        raise ValueError("PRECISION_BITS must be at least 53 (double precision).")

    tolerance = config.get("ISOLATION_TOLERANCE")
    if tolerance is not None:
        try:
            tol = Fraction(str(tolerance))
        except (ValueError, ZeroDivisionError) as exc:
            raise TypeError(f"ISOLATION_TOLERANCE must be a rational, got {tolerance!r}.") from exc
        if tol <= 0:
            raise ValueError("ISOLATION_TOLERANCE must be positive.")
