# libs/errors.py
from __future__ import annotations


class SnrError(ValueError):
    """
    所有输入 / 契约错误的基类。
    CLI 把它映射为退出码 2。
    """


class ConfigError(SnrError):
    """SNR_* / LOG_LEVEL 无法解析或越界"""


class StructureFileError(SnrError):
    """结构文件读写失败（编码、路径）"""


class SizeCapError(SnrError):
    """carrier 或 table 超出硬上限"""


class ElementRangeError(SnrError):
    """元素不在 0..k-1 内"""


class ArityMismatchError(SnrError):
    pass


class PositionError(SnrError):
    """位置参数（t / i / j）越界"""


class EmptySubsetError(SnrError):
    pass


class NotASubseminearringError(SnrError):
    pass


class EmptyIntersectionError(SnrError):
    pass


class EnumerationGuardError(SnrError):
    """carrier 太大，无法穷举"""


class NotAUnityError(SnrError):
    pass


class NotAUnitError(SnrError):
    pass


class NotAHomomorphismError(SnrError):
    pass


class NotAnEpimorphismError(SnrError):
    pass


class NotAnIdealError(SnrError):
    pass


class DomainMismatchError(SnrError):
    pass


class SearchSpaceError(SnrError):
    pass


class MalformedPartitionError(SnrError):
    pass


class NotACongruenceError(SnrError):
    pass


class StructureSyntaxError(SnrError):
    """Parse error carrying the 1-based line/column of the offending token."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class EntryOutOfRangeError(StructureSyntaxError):
    pass


class WrongEntryCountError(StructureSyntaxError):
    def __init__(
        self,
        operation: str,
        expected: int,
        got: int,
        line: int | None = None,
        column: int | None = None,
    ):
        self.operation = operation
        self.expected = expected
        self.got = got
        super().__init__(
            f"operation '{operation}' expects {expected} entries, got {got}",
            line,
            column,
        )


class TheoremViolationError(RuntimeError):
    """
    An operation that embodies a theorem found its conclusion false.
    Only reachable when the input breaks the theorem's hypotheses.
    """
