"""Exception types raised by the engine."""


class QHopfError(Exception):
    pass


class NonUnitConstantTerm(QHopfError):
    pass


class OddSPowerResidue(QHopfError):
    """A contraction result still contains an odd (or negative) power of s."""

    def __init__(self, key, where=None):
        self.key = key
        self.where = where
        msg = f"s-power {key[1]} in term with key {key}"
        if where:
            msg += f" ({where})"
        super().__init__(msg)


class DegreeOverflow(QHopfError):
    pass


class NonNilpotentArgument(QHopfError):
    pass


class RankOverflow(QHopfError):
    pass


class PresentationMismatch(QHopfError):
    def __init__(self, diffs):
        self.diffs = diffs
        super().__init__(f"{len(diffs)} differing entries: " + "; ".join(str(d) for d in diffs[:5]))


class ClosedFormMismatch(QHopfError):
    def __init__(self, diffs):
        self.diffs = diffs
        super().__init__(f"closed form differs in {len(diffs)} places: " + "; ".join(str(d) for d in diffs[:5]))


class NonSkewFirstOrder(QHopfError):
    pass


class WrongMuMode(QHopfError):
    pass


class ReconstructionAmbiguous(QHopfError):
    def __init__(self, system):
        self.system = system
        super().__init__("reconstruction not unique on the given sparsity pattern")


class ReconstructionInfeasible(QHopfError):
    def __init__(self, system):
        self.system = system
        super().__init__("no matrix on the given sparsity pattern satisfies the brackets")


class NeitherSignMatches(QHopfError):
    def __init__(self, residuals):
        self.residuals = residuals
        super().__init__("RTT relations match the target under neither sign of w")


class UnknownSuite(QHopfError):
    pass


class ConfigError(QHopfError):
    pass
