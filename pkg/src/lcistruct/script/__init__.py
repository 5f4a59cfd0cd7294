"""Script language: ring declarations, ideal arithmetic and structure workflows."""

from .errors import ScriptError, ScriptNameError, ScriptRuntimeError, ScriptSyntaxError
from .evaluator import Config, Evaluator, check_script, execute, run_source
from .parser import parse
from .printer import pretty

__all__ = [
    "Config",
    "Evaluator",
    "ScriptError",
    "ScriptNameError",
    "ScriptRuntimeError",
    "ScriptSyntaxError",
    "check_script",
    "execute",
    "parse",
    "pretty",
    "run_source",
]
