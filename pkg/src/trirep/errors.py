"""Exception types shared across the package."""


class TrirepError(Exception):
    """Base class for all package-specific errors."""


class InconsistentRotation(TrirepError):
    """The rotation system is malformed or does not describe a sphere embedding."""


class DisconnectedGraph(TrirepError):
    """The input graph must be connected."""


class ReductionCreatesMultiEdge(TrirepError):
    """Suppressing a degree-two vertex would create a parallel edge."""


class NotAlmost4Regular(TrirepError):
    """Degree profile is not three degree-2 outer vertices plus degree-4 vertices."""


class FacesNotBipartite(TrirepError):
    """The bounded faces admit no proper 2-coloring (graph is not Eulerian-planar)."""


class BudgetExceeded(TrirepError):
    """An enumeration hit its configured node budget."""

    def __init__(self, budget: int):
        super().__init__(f"enumeration budget of {budget} nodes exceeded")
        self.budget = budget


class ArcClosesCycle(TrirepError):
    """An edge class of the flat-angle relation closes a cycle."""

    def __init__(self, edges):
        super().__init__(f"arc closes a cycle: {sorted(edges)}")
        self.edges = frozenset(edges)


class ArcTouchesSelf(TrirepError):
    """An edge class of the flat-angle relation touches itself."""

    def __init__(self, edges):
        super().__init__(f"arc touches itself: {sorted(edges)}")
        self.edges = frozenset(edges)


class DegeneratePoleTriangle(TrirepError):
    """The prescribed pole triangle has (near-)zero area."""


class AssignedVertexWithoutSegmentNeighbors(TrirepError):
    """An assigned vertex is not interior to any pseudosegment of the family."""


class SingularSystem(TrirepError):
    """The harmonic system could not be solved; signals an implementation fault."""


class Not3Connected(TrirepError):
    """The operation requires a 3-connected graph."""


class SurfaceNotRigid(TrirepError):
    """No rigid orthogonal surface was obtained, even after perturbation."""


class AmbiguousFlatMembership(TrirepError):
    """A medial edge does not lie on exactly one flat of the surface."""


class NotStretchable(TrirepError):
    """The contact family fails the extremal-point condition."""

    def __init__(self, witness):
        super().__init__(f"not stretchable; witness subset: {witness}")
        self.witness = witness


class InvalidArrangement(TrirepError):
    """The pseudosegment arrangement violates the contact-family axioms."""


class AugmentationError(TrirepError):
    """The enclosing-triangle augmentation could not be carried out."""


class ParseError(TrirepError):
    """A document could not be parsed."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
