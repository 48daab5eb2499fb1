from ._krc import (  # noqa: F401
    AffineType,
    Crystal,
    build,
    c_r,
    check,
    classical_decomposition,
    dominant_weights,
    level,
    minimal_element,
    tau,
)
