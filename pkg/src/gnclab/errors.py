from __future__ import annotations


class RingInputError(ValueError):
    """Bad user input: malformed expression, index out of range, wrong arity."""


class ParseError(RingInputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CapacityError(RuntimeError):
    def __init__(self, required: int, cap: int):
        super().__init__(f"carrier of size {required} exceeds capacity {cap}")
        self.required = required
        self.cap = cap


class ValidationError(ValueError):
    def __init__(self, message: str, axiom: str = None, witness: tuple = None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness
