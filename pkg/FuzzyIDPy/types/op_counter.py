from dataclasses import dataclass


@dataclass
class OpCounter:
    """Arithmetic performed by a transformation.

    ``additions``, ``multiplications`` and ``divisions`` count the arithmetic
    needed to produce the results; ``evaluations`` and ``comparisons`` count
    the search for the extremizing perturbations.

    Attributes:
        additions (``int``):
            Number of additions.

        multiplications (``int``):
            Number of multiplications.

        divisions (``int``):
            Number of divisions.

        comparisons (``int``):
            Number of candidate comparisons made by the extremizer.

        evaluations (``int``):
            Number of candidate points evaluated by the extremizer.
    """

    additions: int = 0
    multiplications: int = 0
    divisions: int = 0
    comparisons: int = 0
    evaluations: int = 0

    def tally(self, additions: int = 0, multiplications: int = 0, divisions: int = 0,
              comparisons: int = 0, evaluations: int = 0) -> None:
        self.additions += additions
        self.multiplications += multiplications
        self.divisions += divisions
        self.comparisons += comparisons
        self.evaluations += evaluations

    def merge(self, other: "OpCounter") -> "OpCounter":
        self.tally(other.additions, other.multiplications, other.divisions,
                   other.comparisons, other.evaluations)
        return self

    def scaled(self, factor: int) -> "OpCounter":
        """Arithmetic counts multiplied by ``factor``; search counts dropped."""
        return OpCounter(self.additions * factor, self.multiplications * factor, self.divisions * factor)

    def to_dict(self) -> dict:
        return {
            "additions": self.additions,
            "multiplications": self.multiplications,
            "divisions": self.divisions,
            "comparisons": self.comparisons,
            "evaluations": self.evaluations
        }
