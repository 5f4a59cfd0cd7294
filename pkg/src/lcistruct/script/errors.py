"""Source-located script errors."""


class ScriptError(Exception):
    """Error with a 1-based line and column in the script source."""

    kind = "error"

    def __init__(self, message, line=None, col=None, source=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col
        self.source = source

    def render(self):
        if self.line is None:
            return f"{self.kind}: {self.message}"
        out = f"{self.kind} at line {self.line}, column {self.col}: {self.message}"
        if self.source is not None:
            lines = self.source.splitlines()
            if 0 < self.line <= len(lines):
                text = lines[self.line - 1]
                out += f"\n  {text}\n  {' ' * (self.col - 1)}^"
        return out

    def __str__(self):
        return self.render()


class ScriptSyntaxError(ScriptError):
    kind = "syntax error"


class ScriptNameError(ScriptError):
    kind = "name error"


class ScriptRuntimeError(ScriptError):
    kind = "runtime error"
