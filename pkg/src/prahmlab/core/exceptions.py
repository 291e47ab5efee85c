"""Custom exceptions for prahmlab."""


class PrahmLabError(Exception):
    """Base exception for all prahmlab errors."""

    pass


class ConfigError(PrahmLabError):
    """Invalid run configuration."""

    def __init__(self, message: str, key: str | None = None) -> None:
        self.key = key
        super().__init__(message)


class ModeError(PrahmLabError):
    """Error while constructing a waveguide mode."""

    pass


class BelowCutoff(ModeError):
    """Raised when n²ω² ≤ κ², i.e. no real axial wavenumber exists."""

    def __init__(self, omega: float, kappa: float, index: float) -> None:
        self.omega = omega
        self.kappa = kappa
        self.index = index
        super().__init__(
            f"below cutoff: n*omega = {index * abs(omega):.6g} <= kappa = {kappa:.6g}"
        )


class KappaZero(ModeError):
    """Raised when transverse fields are requested for κ = 0."""

    def __init__(self) -> None:
        super().__init__("transverse fields need kappa > 0 (TEM-like modes are not modelled)")


class GridError(PrahmLabError):
    """Error related to sampled field grids."""

    pass


class GridTooSmall(GridError):
    """Raised when a grid cannot support central differences."""

    def __init__(self, axis: str, size: int, required: int = 3) -> None:
        self.axis = axis
        self.size = size
        super().__init__(f"axis {axis!r} has {size} samples, at least {required} required")


class AsymmetricWindow(GridError):
    """Raised when time reversal is requested on a window not centred on t = 0."""

    def __init__(self, t_first: float, t_last: float) -> None:
        self.t_first = t_first
        self.t_last = t_last
        super().__init__(f"time window [{t_first:.6g}, {t_last:.6g}] is not symmetric")


class SpacingMismatch(GridError):
    """Raised when two residual reports are not related by spacing halving."""

    def __init__(self, coarse: float, fine: float) -> None:
        self.coarse = coarse
        self.fine = fine
        super().__init__(f"expected fine spacing {coarse / 2:.6g}, got {fine:.6g}")


class DegenerateResidual(GridError):
    """Raised when a convergence order is requested from a zero residual."""

    def __init__(self, equation: str) -> None:
        self.equation = equation
        super().__init__(f"residual of {equation!r} vanishes, convergence order undefined")


class IncompletePeriod(GridError):
    """Raised when a period average is taken over a partial period."""

    def __init__(self, covered: float, period: float) -> None:
        self.covered = covered
        self.period = period
        super().__init__(
            f"samples cover {covered:.6g}, not a whole number of periods of {period:.6g}"
        )


class GridMismatch(GridError):
    """Raised when paired grids do not share sampling or modulation."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class PacketError(PrahmLabError):
    """Error while building a resonant packet."""

    pass


class PhiOutOfRange(PacketError):
    """Raised when |φ| ≥ (2M+1)π so that τ₁ would not be positive."""

    def __init__(self, phi: float, M: int) -> None:
        self.phi = phi
        self.M = M
        super().__init__(f"|phi| = {abs(phi):.6g} must be below (2M+1)pi for M = {M}")


class NeedTwoProbes(PacketError):
    """Raised when a velocity is requested from fewer than two distinct probes."""

    def __init__(self, count: int) -> None:
        self.count = count
        super().__init__(f"need at least two distinct probe positions, got {count}")


class DegenerateCancellation(PacketError):
    """Raised when the demoted ground-state fields cancel identically (φ = π)."""

    def __init__(self, phi: float) -> None:
        self.phi = phi
        super().__init__(f"fields cancel identically at phi = {phi:.6g}")


class NotGroundState(PacketError):
    """Raised when a ground-state operation receives M > 0."""

    def __init__(self, M: int) -> None:
        self.M = M
        super().__init__(f"ground-state demotion needs M = 0, got M = {M}")


class LadderError(PrahmLabError):
    """Invalid helical packet state."""

    pass


class TxLineError(PrahmLabError):
    """Error in the transmission-line simulation."""

    pass


class DurationTooShort(TxLineError):
    """Raised when a simulation is shorter than one round trip."""

    def __init__(self, duration: float, required: float) -> None:
        self.duration = duration
        self.required = required
        super().__init__(f"duration {duration:.6g} shorter than round trip {required:.6g}")
