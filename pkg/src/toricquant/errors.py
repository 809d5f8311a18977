"""Exception hierarchy.

Domain errors (bad polytopes, failed certificates) derive from
:class:`ToricError`; malformed input documents derive from :class:`InputError`.
The CLI maps the two families to different exit codes.
"""


class ToricError(Exception):
    """Base class for every domain error raised by the library."""

    #: Pipeline stage that raised the error, filled in by ``quantize``.
    stage = None


class ZeroVector(ToricError):
    def __init__(self):
        super().__init__("the zero vector has no primitive form")


class NotSquare(ToricError):
    def __init__(self, rows, cols):
        self.shape = (rows, cols)
        super().__init__(f"matrix is {rows}x{cols}, expected square")


class Singular(ToricError):
    def __init__(self):
        super().__init__("matrix is singular")


class DimensionMismatch(ToricError, ValueError):
    pass


class NotUnimodular(ToricError):
    """Determinant is not +-1.

    ``vertex`` is set when the failure comes from a vertex cone of a polytope.
    """

    def __init__(self, det, vertex=None):
        self.det = det
        self.vertex = vertex
        if vertex is None:
            msg = f"matrix is not unimodular (det={det})"
        else:
            msg = (f"vertex {_fmt_point(vertex)}: active normals are not a "
                   f"lattice basis (det={det})")
        super().__init__(msg)


class NonIntegralOffset(ToricError):
    def __init__(self, index, normal, offset):
        self.index = index
        super().__init__(
            f"facet {index + 1}: offset {offset} is not divisible by the gcd "
            f"of normal {list(normal)}")


class Unbounded(ToricError):
    def __init__(self, direction=None):
        self.direction = direction
        msg = "polytope is unbounded"
        if direction is not None:
            msg += f" (recession direction {list(direction)})"
        super().__init__(msg)


class NotFullDimensional(ToricError):
    def __init__(self, dim, ambient):
        self.dim = dim
        super().__init__(
            f"polytope has dimension {dim} in ambient dimension {ambient}")


class EmptyPolytope(ToricError):
    def __init__(self):
        super().__init__("the inequalities have no common solution")


class RedundantFacet(ToricError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"facet {index + 1} is redundant")


class NotSimple(ToricError):
    def __init__(self, vertex, active):
        self.vertex = vertex
        self.active = tuple(active)
        super().__init__(
            f"vertex {_fmt_point(vertex)} lies on {len(self.active)} facets "
            f"{[j + 1 for j in self.active]}")


class NonIntegralVertex(ToricError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {_fmt_point(vertex)} is not a lattice point")


class BoxTooLarge(ToricError):
    def __init__(self, volume, limit):
        self.volume = volume
        self.limit = limit
        super().__init__(
            f"enumeration box has {volume} points, limit is {limit}")


class SurjectivityFailure(ToricError):
    def __init__(self, invariants):
        self.invariants = tuple(invariants)
        super().__init__(
            "projection does not map Z^N onto Z^n "
            f"(Smith invariants {list(self.invariants)})")


class AllSubsetsPresent(ToricError):
    def __init__(self):
        super().__init__("facet family contains every subset")


class OriginNotContained(ToricError):
    def __init__(self):
        super().__init__("dilation requires the origin to lie in the polytope")


class InputError(Exception):
    """Base class for malformed input documents."""


class ParseError(InputError):
    def __init__(self, msg, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{msg} (line {line}, column {column})")


class SchemaError(InputError):
    def __init__(self, field, msg):
        self.field = field
        super().__init__(f"{field}: {msg}")


def _fmt_point(p):
    return "(" + ", ".join(str(c) for c in p) + ")"
