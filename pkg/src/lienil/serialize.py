"""JSON encodings for scalars, Grassmann elements, matrices, polynomials,
and supermatrix algebra specs.

Grassmann elements: {"g": 4, "coeffs": {"": "3/2", "1,2": "-1"}} where keys
are comma-separated ascending 1-based generator indices (empty key = scalar
term) and values are scalar text forms.  Matrices: {"n": 2, "entries":
[[elem, ...], ...]}.  Specs: {"ring": {...}, "delta": ..., "T": ..., "n": n}.
"""

from __future__ import annotations

from .grassmann import (GrassmannAlgebra, GrassmannElement, epsilon,
                        endomorphism_from_generator_images, rho, sigma)
from .matrices import Matrix, TransitiveMatrix
from .rings import OracleRing, RingError, RPolynomial
from .scalars import CyclotomicField, parse_scalar
from .supermatrix import SuperAlgebraSpec


class SerializationError(RingError):
    pass


# --- Grassmann elements ---

def _mask_to_key(mask):
    return ",".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1)


def _key_to_mask(key, g):
    if not key.strip():
        return 0
    mask = 0
    for part in key.split(","):
        i = int(part)
        if not 1 <= i <= g:
            raise SerializationError(f"generator index {i} out of range 1..{g}")
        mask |= 1 << (i - 1)
    return mask


def grassmann_to_json(x):
    coeffs = {_mask_to_key(m): str(c)
              for m, c in sorted(x.coeffs.items(),
                                 key=lambda kv: (kv[0].bit_count(), kv[0]))}
    return {"g": x.ring.g, "coeffs": coeffs}


def grassmann_from_json(algebra, doc):
    if doc.get("g", algebra.g) != algebra.g:
        raise SerializationError("generator count mismatch")
    coeffs = {}
    for key, text in doc.get("coeffs", {}).items():
        mask = _key_to_mask(key, algebra.g)
        coeffs[mask] = parse_scalar(algebra.field, text)
    return algebra.element(coeffs)


# --- generic elements ---

def element_to_json(x):
    if isinstance(x, GrassmannElement):
        return grassmann_to_json(x)
    if hasattr(x, "expr"):                       # oracle element
        return str(x.expr)
    if hasattr(x, "is_rational"):                # bare scalar
        return str(x)
    if isinstance(x, RPolynomial):
        return rpoly_to_json(x)
    raise SerializationError(f"no JSON encoding for {type(x).__name__}")


def element_from_json(ring, doc):
    if isinstance(ring, GrassmannAlgebra):
        if isinstance(doc, str):
            return ring.from_scalar(parse_scalar(ring.field, doc))
        return grassmann_from_json(ring, doc)
    if isinstance(ring, OracleRing):
        return ring.element(doc)
    raise SerializationError(f"no JSON decoding for ring {ring!r}")


# --- matrices ---

def matrix_to_json(A):
    return {"n": A.nrows,
            "entries": [[element_to_json(e) for e in row] for row in A.rows]}


def matrix_from_json(ring, doc):
    entries = doc["entries"]
    return Matrix(ring, [[element_from_json(ring, e) for e in row]
                         for row in entries])


# --- polynomials ---

def rpoly_to_json(p):
    return {"coeffs": [element_to_json(c) for c in p.coeffs]}


def rpoly_from_json(poly_ring, doc):
    return poly_ring.element([element_from_json(poly_ring.base, c)
                              for c in doc["coeffs"]])


# --- rings and deltas ---

def ring_to_json(ring):
    if isinstance(ring, GrassmannAlgebra):
        return {"type": "grassmann", "g": ring.g, "root_order": ring.field.order}
    if isinstance(ring, OracleRing):
        return {"type": "oracle", "variables": list(ring.variables)}
    raise SerializationError(f"no JSON encoding for ring {ring!r}")


def ring_from_json(doc):
    kind = doc.get("type")
    if kind == "grassmann":
        return GrassmannAlgebra(doc["g"], CyclotomicField(doc.get("root_order", 1)))
    if kind == "oracle":
        return OracleRing(doc["variables"])
    raise SerializationError(f"unknown ring type {kind!r}")


def delta_from_json(ring, doc):
    if isinstance(doc, str):
        if doc == "epsilon":
            return epsilon(ring, validate=False)
        if doc.startswith("rho_e"):
            order = int(doc.split(":")[1]) if ":" in doc else ring.field.order
            return rho(ring, ring.field.primitive_root(order), validate=False)
        if doc == "sigma":
            return sigma(ring, validate=False)
        raise SerializationError(f"unknown endomorphism {doc!r}")
    if isinstance(doc, dict) and "generator_images" in doc:
        images = [element_from_json(ring, e) for e in doc["generator_images"]]
        return endomorphism_from_generator_images(ring, images)
    raise SerializationError("bad endomorphism descriptor")


def delta_to_json(delta):
    name = delta.name
    if name == "epsilon" or name == "sigma":
        return name
    if name.startswith("rho_"):
        return f"rho_e:{delta.ring.field.order}"
    raise SerializationError(f"no JSON encoding for endomorphism {name!r}")


def spec_to_json(spec):
    return {"ring": ring_to_json(spec.ring),
            "delta": delta_to_json(spec.delta),
            "T": matrix_to_json(spec.T.matrix),
            "n": spec.n}


def spec_from_json(doc):
    ring = ring_from_json(doc["ring"])
    delta = delta_from_json(ring, doc["delta"])
    T = TransitiveMatrix(matrix_from_json(ring, doc["T"]))
    return SuperAlgebraSpec(ring, delta, T)
