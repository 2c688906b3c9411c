"""Finite map tables, the preservation identity, and the constructive
decomposition into the canonical form lam*A + h(A)*I with lam**(k+1) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from random import Random

from .brackets import kcomm_recursive
from .errors import (
    InputNotInTable,
    InvalidOrder,
    LambdaNotRootOfUnity,
    NotTheoremForm,
    PreservationFailed,
    ProbeSetIncomplete,
)
from .fields import FieldTag, roots_of_unity
from .matrices import Mat2
from .randgen import random_scalar


def probe_set(field: FieldTag):
    """The fixed probe inputs a table must cover for decomposition."""
    e11 = Mat2.unit(field, 1, 1)
    e22 = Mat2.unit(field, 2, 2)
    e12 = Mat2.unit(field, 1, 2)
    e21 = Mat2.unit(field, 2, 1)
    return [e11, e22, e12, e21, e11 + e12, e12 + e21]


@dataclass(frozen=True)
class MapTable:
    """A finite sampled map: (input, output) matrix pairs plus field/k metadata."""

    field: FieldTag
    k: int
    entries: tuple  # ((input, output), ...)
    label: str = ""

    def __post_init__(self):
        ins = [a for a, _ in self.entries]
        for i in range(len(ins)):
            for j in range(i + 1, len(ins)):
                if ins[i].eq(ins[j]):
                    raise ValueError("map table inputs must be pairwise distinct")

    def lookup(self, A: Mat2) -> Mat2:
        for inp, out in self.entries:
            if inp.eq(A):
                return out
        raise InputNotInTable(f"{A} is not a table input")

    def has_input(self, A: Mat2) -> bool:
        return any(inp.eq(A) for inp, _ in self.entries)

    def inputs(self):
        return [a for a, _ in self.entries]


@dataclass(frozen=True)
class Decomposition:
    lam: object
    h_table: tuple  # ((input, scalar), ...)
    verified_pairs: int

    def h_of(self, A: Mat2):
        for inp, value in self.h_table:
            if inp.eq(A):
                return value
        raise InputNotInTable(f"{A} has no extracted h value")


@dataclass(frozen=True)
class PreservationVerdict:
    holds: bool
    pair: tuple | None = None
    left: Mat2 | None = None
    right: Mat2 | None = None


@dataclass(frozen=True)
class ShiftVerdict:
    holds: bool
    triple: tuple | None = None
    residue: Mat2 | None = None
    residues: tuple = ()


# -- built-in h rules --------------------------------------------------------


def h_zero(A: Mat2):
    return A.field.zero()


def h_trace(A: Mat2):
    return A.trace()


def h_det(A: Mat2):
    return A.det()


def h_random(field: FieldTag, seed: int):
    """A per-input random scalar rule, stable across calls for equal inputs."""
    cache = []

    def rule(A: Mat2):
        for inp, value in cache:
            if inp.eq(A):
                return value
        rng = Random(seed * 1000003 + len(cache))
        value = random_scalar(field, rng, denominators=field.is_exact)
        cache.append((A, value))
        return value

    return rule


def _check_root(field: FieldTag, lam, k: int):
    power = lam ** (k + 1)
    if not field.eq(power, field.one()):
        raise LambdaNotRootOfUnity(power)


def generate_map(lam, h_spec, inputs, k: int, label: str = "") -> MapTable:
    """Table of A -> lam*A + h(A)*I over the given inputs."""
    if not isinstance(k, int) or k < 1:
        raise InvalidOrder(f"map order must be k >= 1, got {k!r}")
    if not inputs:
        raise ValueError("need at least one input matrix")
    field = inputs[0].field
    lam = field.coerce(lam)
    _check_root(field, lam, k)
    eye = Mat2.identity(field)
    entries = tuple((A, A.scale(lam) + eye.scale(field.coerce(h_spec(A)))) for A in inputs)
    return MapTable(field=field, k=k, entries=entries, label=label)


def verify_preserving(table: MapTable, pairs) -> PreservationVerdict:
    """Check the order-k bracket identity on listed pairs via the recursive oracle."""
    k = table.k
    for A, B in pairs:
        left = kcomm_recursive(table.lookup(A), table.lookup(B), k)
        right = kcomm_recursive(A, B, k)
        if not left.eq(right):
            return PreservationVerdict(holds=False, pair=(A, B), left=left, right=right)
    return PreservationVerdict(holds=True)


def central_shift_check(table: MapTable, triples) -> ShiftVerdict:
    """Additivity up to a central shift: Phi(A+B) - Phi(A) - Phi(B) scalar."""
    residues = []
    for A, B, C in triples:
        if not (A + B).eq(C):
            raise ValueError("triple third member must equal the sum of the first two")
        residue = table.lookup(C) - table.lookup(A) - table.lookup(B)
        if not residue.is_scalar():
            return ShiftVerdict(holds=False, triple=(A, B, C), residue=residue)
        residues.append(residue)
    return ShiftVerdict(holds=True, residues=tuple(residues))


def all_pairs(inputs):
    return [(A, B) for A in inputs for B in inputs]


def decompose(table: MapTable) -> Decomposition:
    """Extract (lam, h) from a table and validate the canonical form globally.

    lam comes from the image of E_11 alone (diagonal difference); every entry
    is then required to leave a scalar residue, and the preservation identity
    is re-checked on all probe pairs as cross-validation.
    """
    field = table.field
    k = table.k
    if not isinstance(k, int) or k < 1:
        raise InvalidOrder(f"decomposition needs k >= 1, got {k!r}")
    probes = probe_set(field)
    missing = [p for p in probes if not table.has_input(p)]
    if missing:
        raise ProbeSetIncomplete(missing)

    D = table.lookup(probes[0])  # image of E_11
    d11, d12, d21, d22 = D.entries
    if not (field.is_zero(d12) and field.is_zero(d21)):
        raise NotTheoremForm("image-of-E11-not-diagonal", D)
    lam = d11 - d22
    if field.is_zero(lam):
        raise NotTheoremForm("lambda-zero", D)
    _check_root(field, lam, k)
    # lam**(k+1) = 1 makes lam**(-k) = lam; keep the implied identity honest
    assert field.eq(lam ** (-k), lam)

    h_table = []
    for A, out in table.entries:
        residue = out - A.scale(lam)
        if not residue.is_scalar():
            raise NotTheoremForm("nonscalar-residue", residue)
        h_val = residue.entries[0]
        assert field.eq(h_val, residue.entries[3])
        h_table.append((A, h_val))

    pairs = all_pairs(probes)
    verdict = verify_preserving(table, pairs)
    if not verdict.holds:
        raise PreservationFailed(verdict.pair, verdict.left, verdict.right)
    return Decomposition(lam=lam, h_table=tuple(h_table), verified_pairs=len(pairs))


# -- randomized exercise of the equivalence ----------------------------------


@dataclass
class CampaignReport:
    field: FieldTag
    k: int
    trials: int
    valid_ok: int = 0
    perturbed_rejected: int = 0
    anomalies: list = dc_field(default_factory=list)
    rejection_kinds: dict = dc_field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.anomalies


def _bad_lambda(field: FieldTag, k: int, rng: Random):
    candidates = [field.coerce(c) for c in (2, 3, 5, -2, -1)]
    if field.variant == "Qi":
        from .fields import GaussianRational

        candidates.append(field.coerce(GaussianRational(0, 1)))
    if field.variant == "C64":
        candidates.append(complex(0.0, 1.0))
    usable = []
    for lam in candidates:
        power = lam ** (k + 1)
        if field.is_exact:
            if not field.eq(power, field.one()):
                usable.append(lam)
        elif abs(power - field.one()) > 10 * field.tolerance:
            usable.append(lam)
    return rng.choice(usable)


def probe_campaign(k: int, field: FieldTag, trials: int, seed: int) -> CampaignReport:
    """Alternate valid round-trips with perturbed maps that must be rejected.

    Valid iterations draw lam from the (k+1)-th roots of unity and a random h,
    then assert preservation plus an exact decomposition round-trip.
    Perturbed iterations use a non-root lam, a non-scalar additive bump, or a
    swapped pair of outputs, and must raise a structural rejection carrying a
    witness.  Every deviation is recorded as an anomaly.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidOrder(f"campaign needs k >= 1, got {k!r}")
    rng = Random(seed)
    report = CampaignReport(field=field, k=k, trials=trials)
    probes = probe_set(field)
    roots = roots_of_unity(field, k + 1)
    eye = Mat2.identity(field)

    for trial in range(trials):
        lam = rng.choice(roots)
        h = h_random(field, seed=rng.randrange(1 << 30))
        table = generate_map(lam, h, probes, k)
        if rng.random() < 0.5:
            verdict = verify_preserving(table, all_pairs(probes))
            if not verdict.holds:
                report.anomalies.append(f"trial {trial}: valid map failed preservation")
                continue
            try:
                dec = decompose(table)
            except Exception as exc:  # noqa: BLE001 - any rejection is an anomaly here
                report.anomalies.append(f"trial {trial}: valid map rejected: {exc!r}")
                continue
            ok = field.eq(dec.lam, table.field.coerce(lam))
            for A, _ in table.entries:
                ok = ok and field.eq(dec.h_of(A), field.coerce(h(A)))
            if ok:
                report.valid_ok += 1
            else:
                report.anomalies.append(f"trial {trial}: round-trip mismatch")
        else:
            kind = rng.choice(("bad-lambda", "residue", "swap"))
            entries = list(table.entries)
            if kind == "bad-lambda":
                bad = _bad_lambda(field, k, rng)
                entries = [(A, A.scale(bad) + eye.scale(field.coerce(h(A)))) for A in probes]
            elif kind == "residue":
                idx = rng.randrange(len(entries))
                A, out = entries[idx]
                entries[idx] = (A, out + Mat2.unit(field, 1, 2))
            else:
                i, j = rng.sample(range(len(entries)), 2)
                (Ai, Oi), (Aj, Oj) = entries[i], entries[j]
                entries[i], entries[j] = (Ai, Oj), (Aj, Oi)
            bad_table = MapTable(field=field, k=k, entries=tuple(entries), label=kind)
            try:
                decompose(bad_table)
            except (NotTheoremForm, LambdaNotRootOfUnity, PreservationFailed) as exc:
                report.perturbed_rejected += 1
                name = type(exc).__name__
                report.rejection_kinds[name] = report.rejection_kinds.get(name, 0) + 1
            else:
                report.anomalies.append(f"trial {trial}: impostor ({kind}) was accepted")
    return report
