"""Tokenizer for the script language."""

from dataclasses import dataclass

from .errors import ScriptSyntaxError

KEYWORDS = {"ring", "order", "assert"}
# longest first so that "==" wins over "="
SYMBOLS = ("==", "!=", "**", "(", ")", "[", "]", ",", ";", "=", "+", "-", "*", "/", "^", ":")


@dataclass(frozen=True)
class Token:
    kind: str  # NAME NUMBER STRING KEYWORD OP NEWLINE EOF
    text: str
    line: int
    col: int


def tokenize(source):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(source)
    depth = 0

    def emit(kind, text, l, c):
        tokens.append(Token(kind, text, l, c))

    while i < n:
        ch = source[i]
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            if depth == 0:
                emit("NEWLINE", "\n", line, col)
            i += 1
            line, col = line + 1, 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            emit("NUMBER", source[i:j], line, start_col)
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            emit("KEYWORD" if word in KEYWORDS else "NAME", word, line, start_col)
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            while j < n and source[j] not in '"\n':
                j += 1
            if j >= n or source[j] != '"':
                raise ScriptSyntaxError("unterminated string", line, start_col, source)
            emit("STRING", source[i + 1 : j], line, start_col)
            col += j + 1 - i
            i = j + 1
            continue
        for sym in SYMBOLS:
            if source.startswith(sym, i):
                text = "^" if sym == "**" else sym
                emit("OP", text, line, start_col)
                if sym in "([":
                    depth += 1
                elif sym in ")]":
                    depth = max(depth - 1, 0)
                i += len(sym)
                col += len(sym)
                break
        else:
            raise ScriptSyntaxError(f"unexpected character {ch!r}", line, start_col, source)
    emit("EOF", "", line, col)
    return tokens
