"""Exact Fuchsian groups with prescribed rational hyperbolic fixed points.

Thin convenience layer over the compiled core: requests and results are
plain dicts mirroring the JSON documents the command line tool reads and
writes, with rationals as "num/den" strings and primes as decimal strings.
"""

import json

from _fuchsian import (
    build_family_json,
    construct_json,
    next_prime_3mod4,
    render_svg,
    tree_check_json,
    verify_json,
    vp,
)

__all__ = [
    "construct",
    "verify",
    "tree_check",
    "build_family",
    "render",
    "vp",
    "next_prime_3mod4",
]


def _encode(request):
    out = {}
    for key, value in request.items():
        if key in ("points", "classes"):
            out[key] = [str(v) for v in value]
        elif key == "count":
            out[key] = int(value)
        else:
            out[key] = str(value)
    return json.dumps(out)


def construct(**request):
    """Build a group blueprint; e.g. construct(points=[0, 2], v0=-2, x1=-1)."""
    return json.loads(construct_json(_encode(request)))


def verify(blueprint):
    """Re-run every validation check on a blueprint dict."""
    return json.loads(verify_json(json.dumps(blueprint)))


def tree_check(blueprint, prime):
    """Stabilization verdict for the blueprint on the tree at a prime."""
    return json.loads(tree_check_json(json.dumps(blueprint), str(prime)))


def build_family(**request):
    """Pairwise noncommensurable family, e.g. build_family(points=[0, 1], count=3)."""
    return json.loads(build_family_json(_encode(request)))


def render(blueprint):
    """Deterministic SVG drawing of the fundamental domain."""
    return render_svg(json.dumps(blueprint))
