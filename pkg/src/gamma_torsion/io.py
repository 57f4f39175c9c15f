"""JSON formats for matrices, complexes, homology lifts and hypersurface datasets.

Polynomials are always strings in the canonical printed form, so every
emitted value re-parses to itself.
"""

import json
from importlib import resources

from .chain import BasedChainComplex
from .errors import FileAccessError, InputError
from .hypersurface import HypersurfaceData
from .laurent import RationalFn, format_poly, format_ratfn
from .linalg import Matrix
from .parser import parse_poly_or_ratfn


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FileAccessError(f"cannot read {path}: {exc.strerror}", path=path) from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}", path=path) from exc


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def format_entry(x):
    if isinstance(x, RationalFn):
        return format_ratfn(x)
    return format_poly(x)


def _entry(x):
    if isinstance(x, int):
        x = str(x)
    if not isinstance(x, str):
        raise InputError(f"matrix entries must be polynomial strings, got {x!r}")
    return parse_poly_or_ratfn(x)


def matrix_from_json(obj, cols=None):
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise InputError("a matrix is an array of row arrays")
    widths = {len(r) for r in obj}
    if len(widths) > 1:
        raise InputError(f"matrix rows have differing lengths {sorted(widths)}")
    return Matrix.from_rows([[_entry(x) for x in r] for r in obj], cols)


def matrix_to_json(M):
    return [[format_entry(x) for x in row] for row in M.to_rows()]


def complex_from_json(obj):
    """``{"lengths": [...], "boundaries": [d_1, d_2, ...]}``; lengths optional."""
    if not isinstance(obj, dict) or "boundaries" not in obj:
        raise InputError("a complex is an object with a 'boundaries' array")
    lengths = obj.get("lengths")
    bds = obj["boundaries"]
    if lengths is None:
        return BasedChainComplex.from_boundaries([matrix_from_json(b) for b in bds])
    lengths = [int(n) for n in lengths]
    mats = []
    for k, b in enumerate(bds):
        cols = lengths[k + 1] if k + 1 < len(lengths) else None
        mats.append(matrix_from_json(b, cols))
    return BasedChainComplex(lengths, mats)


def complex_to_json(C):
    return {"lengths": list(C.lengths), "boundaries": [matrix_to_json(b) for b in C.boundaries]}


def hbasis_from_json(obj):
    """``{"<degree>": [[entry, ...], ...]}``: homology lifts as coordinate vectors."""
    if not isinstance(obj, dict):
        raise InputError("an hbasis file maps degrees to lists of vectors")
    out = {}
    for key, vecs in obj.items():
        try:
            deg = int(key)
        except ValueError as exc:
            raise InputError(f"hbasis key {key!r} is not a degree") from exc
        out[deg] = [[_entry(x) for x in v] for v in vecs]
    return out


def dataset_from_json(obj):
    if not isinstance(obj, dict):
        raise InputError("a dataset is a JSON object")
    return HypersurfaceData.from_dict(obj)


def load_dataset(path):
    return dataset_from_json(read_json(path))


def bundled_datasets():
    return sorted(
        p.name[: -len(".json")] for p in resources.files("gamma_torsion.data").iterdir() if p.name.endswith(".json")
    )


def bundled_dataset(name):
    """One of the shipped example datasets, by file stem."""
    path = resources.files("gamma_torsion.data") / f"{name}.json"
    if not path.is_file():
        raise FileAccessError(f"no bundled dataset {name!r}; available: {', '.join(bundled_datasets())}")
    return dataset_from_json(json.loads(path.read_text(encoding="utf-8")))
