from ._core import (
    BudgetExceeded,
    FormatError,
    InvalidCodeError,
    analyze,
    bounds,
    catalog,
    census,
    conjecture_leading,
    conjecture_t3,
    count,
    count_report,
    maxmin,
    minimal_codewords,
    table,
    table_csv,
)

__all__ = [
    "BudgetExceeded",
    "FormatError",
    "InvalidCodeError",
    "analyze",
    "bounds",
    "catalog",
    "census",
    "conjecture_leading",
    "conjecture_t3",
    "count",
    "count_report",
    "maxmin",
    "minimal_codewords",
    "table",
    "table_csv",
]
