"""Named, anchored invariants, covariants and contravariants, with an on-disk cache.

Every entry is synthesized from scratch (kernel of the infinitesimal action)
and then pinned down by its restriction to a small family of forms.  Finished
objects are published to one JSON file per name; a sha256 digest over the
payload guards against stale or corrupted files.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path

from .. import __version__
from ..errors import AnchorMismatch, WrongSpace
from ..families import (
    cubic_family,
    quartic_family,
    random_form,
    rng,
    sylvester_linear_forms,
    sylvester_quintic,
    symbols,
)
from ..forms import Form
from ..scalars import format_rational, qq
from .synthesis import (
    CONTRAVARIANT,
    CovariantSpec,
    SynthesizedObject,
    anchor,
    measure_weight,
    synthesize_space,
)

CACHE_FORMAT = 1


@dataclass(frozen=True)
class Entry:
    name: str
    spec: CovariantSpec
    family: object  # () -> Form with Poly coefficients
    target: object  # () -> scalar or Form
    description: str


def _quartic():
    a, b, c = symbols("a", "b", "c")
    return quartic_family(a, b, c), (a, b, c)


def _cubic():
    a, b, c, d = symbols("a", "b", "c", "d")
    return cubic_family(a, b, c, d), (a, b, c, d)


def _quintic():
    a, b, c = symbols("a", "b", "c")
    return sylvester_quintic(a, b, c), (a, b, c)


def _dual_cubic(coeffs):
    return Form(3, 3, coeffs, dual=True)


def _pippian():
    _, (a, b, c, d) = _cubic()
    return _dual_cubic({(3, 0, 0): -d * b * c, (0, 3, 0): -d * a * c, (0, 0, 3): -d * a * b,
                        (1, 1, 1): -(a * b * c - 4 * d**3)})


def _quippian():
    _, (a, b, c, d) = _cubic()
    k = a * b * c - 10 * d**3
    return _dual_cubic({(3, 0, 0): k * b * c, (0, 3, 0): k * a * c, (0, 0, 3): k * a * b,
                        (1, 1, 1): -6 * d**2 * (5 * a * b * c + 4 * d**3)})


def _xyz():
    return sylvester_linear_forms()


def _c51():
    _, (a, b, c) = _quintic()
    X, Y, Z = _xyz()
    return (X * (b * c) + Y * (a * c) + Z * (a * b)) * (a * b * c)


def _c22():
    _, (a, b, c) = _quintic()
    X, Y, Z = _xyz()
    return X * Y * (a * b) + X * Z * (a * c) + Y * Z * (b * c)


def _c33():
    _, (a, b, c) = _quintic()
    X, Y, Z = _xyz()
    return X * Y * Z * (a * b * c)


def _c44():
    _, (a, b, c) = _quintic()
    X, Y, Z = _xyz()
    return (X**4 * a + Y**4 * b + Z**4 * c) * (a * b * c)


def _c26():
    _, (a, b, c) = _quintic()
    X, Y, Z = _xyz()
    return (X * Y) ** 3 * (a * b) + (Y * Z) ** 3 * (b * c) + (X * Z) ** 3 * (a * c)


ENTRIES = {}


def _register(name, spec, family, target, description):
    ENTRIES[name] = Entry(name, spec, family, target, description)


_register("I2", CovariantSpec(2, 4, 2, 0), lambda: _quartic()[0],
          lambda: (lambda a, b, c: a * c + 3 * b**2)(*_quartic()[1]),
          "I2(a z1^4 + 6b z1^2 z2^2 + c z2^4) = ac + 3b^2")
_register("I3", CovariantSpec(2, 4, 3, 0), lambda: _quartic()[0],
          lambda: (lambda a, b, c: a * b * c - b**3)(*_quartic()[1]),
          "I3(a z1^4 + 6b z1^2 z2^2 + c z2^4) = abc - b^3")
_register("I4", CovariantSpec(3, 3, 4, 0), lambda: _cubic()[0],
          lambda: (lambda a, b, c, d: a * b * c * d - d**4)(*_cubic()[1]),
          "I4(a z1^3 + b z2^3 + c z3^3 + 6d z1 z2 z3) = abcd - d^4")
_register("I6", CovariantSpec(3, 3, 6, 0), lambda: _cubic()[0],
          lambda: (lambda a, b, c, d: a**2 * b**2 * c**2 - 20 * a * b * c * d**3 - 8 * d**6)(*_cubic()[1]),
          "I6(a z1^3 + b z2^3 + c z3^3 + 6d z1 z2 z3) = a^2b^2c^2 - 20abcd^3 - 8d^6")
_register("P", CovariantSpec(3, 3, 3, 3, CONTRAVARIANT), lambda: _cubic()[0], _pippian,
          "Pippian: -d(bc z1*^3 + ac z2*^3 + ab z3*^3) - (abc - 4d^3) z1* z2* z3*")
_register("Q", CovariantSpec(3, 3, 5, 3, CONTRAVARIANT), lambda: _cubic()[0], _quippian,
          "Quippian: (abc - 10d^3)(bc z1*^3 + ac z2*^3 + ab z3*^3) - 6d^2(5abc + 4d^3) z1* z2* z3*")
_register("C40", CovariantSpec(2, 5, 4, 0), lambda: _quintic()[0],
          lambda: (lambda a, b, c: a**2 * b**2 + b**2 * c**2 + a**2 * c**2 - 2 * a * b * c * (a + b + c))(*_quintic()[1]),
          "C40(aX^5 + bY^5 + cZ^5) = a^2b^2 + b^2c^2 + a^2c^2 - 2abc(a + b + c)")
_register("C80", CovariantSpec(2, 5, 8, 0), lambda: _quintic()[0],
          lambda: (lambda a, b, c: a**2 * b**2 * c**2 * (a * b + a * c + b * c))(*_quintic()[1]),
          "C80(aX^5 + bY^5 + cZ^5) = a^2b^2c^2(ab + ac + bc)")
_register("C51", CovariantSpec(2, 5, 5, 1), lambda: _quintic()[0], _c51,
          "C51(aX^5 + bY^5 + cZ^5) = abc(bcX + acY + abZ)")
_register("C22", CovariantSpec(2, 5, 2, 2), lambda: _quintic()[0], _c22,
          "C22(aX^5 + bY^5 + cZ^5) = abXY + acXZ + bcYZ")
_register("C33", CovariantSpec(2, 5, 3, 3), lambda: _quintic()[0], _c33,
          "C33(aX^5 + bY^5 + cZ^5) = abcXYZ")
_register("C44", CovariantSpec(2, 5, 4, 4), lambda: _quintic()[0], _c44,
          "C44(aX^5 + bY^5 + cZ^5) = abc(aX^4 + bY^4 + cZ^4)")
_register("C15", CovariantSpec(2, 5, 1, 5), lambda: _quintic()[0], lambda: _quintic()[0],
          "C15(f) = f")
_register("C26", CovariantSpec(2, 5, 2, 6), lambda: _quintic()[0], _c26,
          "C26(aX^5 + bY^5 + cZ^5) = abX^3Y^3 + bcY^3Z^3 + acX^3Z^3, i.e. H/400")



# -- cache --------------------------------------------------------------------------
_lock = threading.Lock()
_memory = {}
_cache_dir = None


def default_cache_dir() -> Path:
    env = os.environ.get("ASSOCFORMS_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "assocforms"


def set_cache_dir(path) -> None:
    """Use ``path`` for cached synthesis results (``None`` restores the default)."""
    global _cache_dir
    with _lock:
        _cache_dir = Path(path) if path is not None else None
        _memory.clear()


def cache_dir() -> Path:
    return _cache_dir if _cache_dir is not None else default_cache_dir()


def serialize_terms(terms: dict, spec: CovariantSpec) -> list:
    from ..forms import monomial_basis

    basis = monomial_basis(spec.n, spec.d)
    out = []
    for (S, b) in sorted(terms, key=lambda k: (tuple(basis[i] for i in k[0]), k[1]), reverse=True):
        out.append([[list(basis[i]) for i in S], list(b), format_rational(terms[(S, b)])])
    return out


def deserialize_terms(rows: list, spec: CovariantSpec) -> dict:
    from ..forms import monomial_basis

    index = {m: i for i, m in enumerate(monomial_basis(spec.n, spec.d))}
    terms = {}
    for alphas, b, c in rows:
        S = tuple(sorted(index[tuple(a)] for a in alphas))
        terms[(S, tuple(b))] = qq(c)
    return terms


def _payload(obj: SynthesizedObject) -> dict:
    return {
        "format": CACHE_FORMAT,
        "version": __version__,
        "name": obj.name,
        "spec": obj.spec.to_dict(),
        "anchor": obj.anchor,
        "weight": obj.weight,
        "terms": serialize_terms(obj.terms, obj.spec),
    }


def _digest(payload: dict) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def _write_atomic(path: Path, doc: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load(path: Path, entry: Entry):
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    digest = doc.pop("digest", None)
    if digest != _digest(doc) or doc.get("format") != CACHE_FORMAT:
        return None
    if doc.get("spec") != entry.spec.to_dict() or doc.get("name") != entry.name:
        return None
    obj = SynthesizedObject(entry.spec, deserialize_terms(doc["terms"], entry.spec), entry.name)
    obj.anchor = doc.get("anchor", {})
    obj.weight = doc.get("weight")
    return obj


def build(name: str) -> SynthesizedObject:
    """Synthesize, anchor, re-check and weigh a catalogue entry (no caching)."""
    entry = ENTRIES[name]
    space = synthesize_space(entry.spec)
    obj = anchor(name, space.basis, entry.family(), entry.target(), entry.description)
    if not obj.is_invariant():
        raise AnchorMismatch(f"{name}: anchored object is not annihilated by the generators")
    probe = random_form(entry.spec.n, entry.spec.d, rng(12345), size=4)
    obj.weight = measure_weight(obj, probe)
    obj.anchor["space_dimension"] = space.dimension
    obj.anchor["columns"] = space.columns
    obj.anchor["strategy"] = space.strategy
    return obj


def get(name: str, use_cache: bool = True) -> SynthesizedObject:
    if name not in ENTRIES:
        raise KeyError(f"unknown catalogue entry {name!r}")
    with _lock:
        if name in _memory:
            return _memory[name]
    entry = ENTRIES[name]
    path = cache_dir() / f"{name}.json"
    obj = _load(path, entry) if use_cache else None
    if obj is None:
        obj = build(name)
        if use_cache:
            payload = _payload(obj)
            payload["digest"] = _digest(payload)
            try:
                _write_atomic(path, payload)
            except OSError:
                pass
    with _lock:
        _memory.setdefault(name, obj)
        return _memory[name]


def evaluate(name: str, f: Form):
    obj = get(name)
    spec = obj.spec
    if (f.n, f.d) != (spec.n, spec.d):
        raise WrongSpace(f"{name} is defined on Q_{spec.n}^{spec.d}")
    return obj.evaluate(f)


def names_for(n: int, d: int) -> list:
    return [k for k, e in ENTRIES.items() if (e.spec.n, e.spec.d) == (n, d)]


__all__ = ["ENTRIES", "Entry", "build", "cache_dir", "evaluate", "get", "names_for", "set_cache_dir"]
