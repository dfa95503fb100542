"""Structured two-sided identity check results."""

from __future__ import annotations

from dataclasses import dataclass, field


def _c(x) -> complex:
    return complex(x)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of evaluating both sides of an identity.

    ``rel_residual`` is normalized by max(|lhs|, |rhs|, 1) so that residuals
    of identities whose sides are near zero stay meaningful.  ``params``
    records the parameter point (and any admissibility flags) that produced
    the numbers; ``window_or_terms`` is the lattice-point or term count the
    evaluation actually used.
    """

    identity_id: str
    lhs: complex
    rhs: complex
    params: dict = field(default_factory=dict)
    window_or_terms: int = 0
    tail_bound: float = 0.0

    @property
    def abs_residual(self) -> float:
        return abs(_c(self.lhs) - _c(self.rhs))

    @property
    def rel_residual(self) -> float:
        return self.abs_residual / max(abs(_c(self.lhs)), abs(_c(self.rhs)), 1.0)

    def ok(self, tol: float) -> bool:
        return self.rel_residual <= tol

    def to_jsonable(self) -> dict:
        def enc(v):
            if isinstance(v, complex):
                return [v.real, v.imag]
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v

        return {
            "identity_id": self.identity_id,
            "params": {k: enc(v) for k, v in sorted(self.params.items())},
            "lhs": [_c(self.lhs).real, _c(self.lhs).imag],
            "rhs": [_c(self.rhs).real, _c(self.rhs).imag],
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "window_or_terms": self.window_or_terms,
        }
