import os


def boolize(s):
    if isinstance(s, str):
        if s.lower() in ["", "false", "0"]:
            return False
        else:
            return True
    return s


def nullable(s):
    if isinstance(s, str) and s.lower() == "none":
        return None
    return s


def intify(s):
    s = nullable(s)
    if s is None:
        return None
    return int(s)


config = {
    "window": int(os.environ.get("FERMICAV_WINDOW", 200)),
    "sum_window": int(os.environ.get("FERMICAV_SUM_WINDOW", 1000)),
    "series_window": int(os.environ.get("FERMICAV_SERIES_WINDOW", 10000)),
    "quadrature_tolerance": float(os.environ.get(
        "FERMICAV_QUADRATURE_TOLERANCE", 1e-10)),
    "quadrature_limit": int(os.environ.get("FERMICAV_QUADRATURE_LIMIT", 200)),
    "oracle_tolerance": float(os.environ.get("FERMICAV_ORACLE_TOLERANCE",
                                             10.0)),
    "absolute_tolerance": float(os.environ.get("FERMICAV_ABSOLUTE_TOLERANCE",
                                               1e-12)),
    "series_tolerance": float(os.environ.get("FERMICAV_SERIES_TOLERANCE",
                                             1e-6)),
    "validity_threshold": float(os.environ.get(
        "FERMICAV_VALIDITY_THRESHOLD", 0.3)),
    "residual_inner_window": int(os.environ.get(
        "FERMICAV_RESIDUAL_INNER_WINDOW", 10)),
    "pool_workers": intify(os.environ.get("FERMICAV_POOL_WORKERS", None)),
    "progress": boolize(os.environ.get("FERMICAV_PROGRESS", False)),
    "significant_digits": int(os.environ.get("FERMICAV_SIGNIFICANT_DIGITS",
                                             17)),
}


def set_config(
    **kwargs,
) -> None:
    """
    Set global configurations

    Args:
        window: truncation window M used when composing Bogoliubov matrices
        sum_window: window M for sum-based quantities (f_k series, V matrix)
        series_window: window M of the reference series in acceptance checks
        quadrature_tolerance: absolute error target of the exact coefficient
            quadrature
        quadrature_limit: maximum number of subdivisions per quadrature panel
        oracle_tolerance: admitted closed-form vs density-matrix discrepancy,
            in units of h^4
        absolute_tolerance: absolute floor added to every discrepancy limit
        series_tolerance: admitted closed-form vs truncated-series discrepancy
            in coefficient units
        validity_threshold: |k|h above which results are flagged as outside
            the perturbative regime
        residual_inner_window: index block |m|,|n| <= inner on which order
            h^2 unitarity residuals are measured
        pool_workers: number of sweep worker processes, None for serial
        progress: show a progress bar during sweeps
        significant_digits: digits used when writing numbers to CSV
    """
    for key in kwargs:
        if key not in config:
            raise KeyError("Unknown configuration key %s" % key)
    config.update(kwargs)
