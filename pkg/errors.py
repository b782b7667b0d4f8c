class KCliqueError(Exception):
    """Base class for every error raised by this package"""


class GraphParseError(KCliqueError, ValueError):
    """Malformed edge-list input"""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidArgumentError(KCliqueError, ValueError):
    pass


class ContractViolation(KCliqueError, RuntimeError):
    pass


class OracleRefusal(KCliqueError):
    """Input is beyond what a brute-force reference is allowed to handle"""
