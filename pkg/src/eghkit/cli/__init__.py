from .document import InputDocument, ParseError, parse_input
from .main import main
from .report import RunReport

__all__ = ["InputDocument", "ParseError", "RunReport", "main", "parse_input"]
