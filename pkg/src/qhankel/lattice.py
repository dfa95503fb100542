"""Finitely supported functions on the geometric lattice {q^k : k in Z}.

A QLatticeFunction stores complex values f(q^k) densely over an integer
window [k_min, k_max]; evaluation outside the window is exactly zero.  The
type serializes to a small JSON object and, for real-valued data, to a
two-column CSV.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .qseries import QBase, as_qbase


@dataclass(frozen=True)
class QLatticeFunction:
    q: QBase
    k_min: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "q", as_qbase(self.q))
        object.__setattr__(self, "k_min", int(self.k_min))
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 1 or v.size == 0:
            raise DomainError("lattice values must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(v)):
            raise DomainError("lattice values must be finite")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def k_max(self) -> int:
        return self.k_min + len(self.values) - 1

    @property
    def window(self) -> tuple[int, int]:
        return (self.k_min, self.k_max)

    def __call__(self, k: int) -> complex:
        """Value at the lattice point q^k; zero outside the window."""
        if self.k_min <= k <= self.k_max:
            return complex(self.values[k - self.k_min])
        return 0.0 + 0.0j

    def restrict(self, k_min: int, k_max: int) -> "QLatticeFunction":
        """Values over [k_min, k_max], zero-filled where unsupported."""
        out = np.array([self(k) for k in range(k_min, k_max + 1)], dtype=complex)
        return QLatticeFunction(self.q, k_min, out)

    def weighted_norm_sq(self, weight_exponent: int) -> float:
        """sum_k q^(weight_exponent * k) |f(q^k)|^2 over the support."""
        q = self.q.q
        ks = np.arange(self.k_min, self.k_max + 1)
        return float(np.sum(q ** (weight_exponent * ks) * np.abs(self.values) ** 2))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "q": self.q.q,
            "k_min": self.k_min,
            "values": [[v.real, v.imag] for v in self.values.tolist()],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "QLatticeFunction":
        payload = json.loads(text)
        vals = np.array([complex(re, im) for re, im in payload["values"]])
        return cls(QBase(float(payload["q"])), int(payload["k_min"]), vals)

    def to_csv(self) -> str:
        """Two-column (k, value) format; only for real-valued data."""
        if np.max(np.abs(self.values.imag)) > 1e-12 * max(1.0, float(np.max(np.abs(self.values)))):
            raise DomainError("CSV lattice format holds real-valued data only")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "value"])
        for k, v in zip(range(self.k_min, self.k_max + 1), self.values.real):
            w.writerow([k, format(v, ".17g")])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, q) -> "QLatticeFunction":
        rows = []
        for row in csv.reader(io.StringIO(text)):
            if not row or row[0].strip().lower() == "k":
                continue
            rows.append((int(row[0]), float(row[1])))
        if not rows:
            raise DomainError("empty CSV lattice file")
        rows.sort()
        ks = [k for k, _ in rows]
        if ks != list(range(ks[0], ks[-1] + 1)):
            raise DomainError("CSV lattice file must cover a contiguous k-window")
        return cls(as_qbase(q), ks[0], np.array([v for _, v in rows], dtype=complex))


def indicator(q, k: int) -> QLatticeFunction:
    """The unit point mass at the lattice site q^k."""
    return QLatticeFunction(as_qbase(q), k, np.array([1.0 + 0.0j]))


def q_integral(f: QLatticeFunction) -> complex:
    """Jackson q-integral over (0, inf): (1-q) sum_j f(q^j) q^j, an exact
    finite sum for finitely supported f."""
    q = f.q.q
    ks = np.arange(f.k_min, f.k_max + 1)
    return complex((1.0 - q) * np.sum(q ** ks.astype(float) * f.values))
