from .expr import ParseError, evaluate, parse, parse_expr
from .main import main

__all__ = ["ParseError", "evaluate", "main", "parse", "parse_expr"]
