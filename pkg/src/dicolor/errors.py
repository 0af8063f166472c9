"""Exception hierarchy shared by every module of the package."""


class DicolorError(Exception):
    pass


class LoopArc(DicolorError, ValueError):
    def __init__(self, u):
        super().__init__(f"loop arc at vertex {u}")
        self.u = u


class DuplicateArc(DicolorError, ValueError):
    def __init__(self, u, v):
        super().__init__(f"arc ({u}, {v}) given twice")
        self.u, self.v = u, v


class VertexOutOfRange(DicolorError, ValueError):
    def __init__(self, u, n=None):
        msg = f"vertex {u} out of range" if n is None else f"vertex {u} out of range [0, {n})"
        super().__init__(msg)
        self.u = u


class EmptyDigraph(DicolorError, ValueError):
    def __init__(self):
        super().__init__("digraph has no vertices")


class ParseError(DicolorError, ValueError):
    pass


class DegreeTooHigh(DicolorError, ValueError):
    def __init__(self, v, degree):
        super().__init__(f"vertex {v} has underlying degree {degree} > 2")
        self.v, self.degree = v, degree


class InvalidK(DicolorError, ValueError):
    def __init__(self, k):
        super().__init__(f"block count must be positive, got {k}")
        self.k = k


class PreconditionViolated(DicolorError, ValueError):
    def __init__(self, which):
        super().__init__(which)
        self.which = which


class DigirthTooSmall(PreconditionViolated):
    def __init__(self, found, required):
        found_s = "inf" if found == float("inf") else str(found)
        super().__init__(f"digirth {found_s} is smaller than the required {required}")
        self.found, self.required = found, required


class NotFound(DicolorError, LookupError):
    pass


class IncompleteColoring(DicolorError, ValueError):
    def __init__(self, v):
        super().__init__(f"vertex {v} has no color")
        self.v = v


class TooLarge(DicolorError, ValueError):
    def __init__(self, n, n_cap):
        super().__init__(f"{n} vertices exceeds the exact-search cap of {n_cap}")
        self.n, self.n_cap = n, n_cap


class BadN(DicolorError, ValueError):
    pass


class BadStep(DicolorError, ValueError):
    pass
