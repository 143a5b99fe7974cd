"""Diameter graphs, Borsuk numbers and explicit partitions of planar convex bodies."""

import json as _json

try:
    from . import _core
except ImportError:  # development layout: extension built next to the package
    import _core

__version__ = "1.0.0"

Body = _core.Body
GeometryError = _core.GeometryError

polygon = _core.polygon
disc = _core.disc
regular_polygon = _core.regular_polygon
reuleaux_polygon = _core.reuleaux_polygon
example_pentagon = _core.example_pentagon
random_polygon = _core.random_polygon
random_symmetric_polygon = _core.random_symmetric_polygon
diameter = _core.diameter
borsuk_number = _core.borsuk_number
render_svg = _core.render_svg


def body_from_json(text_or_dict):
    """Load a body from the JSON schema (string or parsed dict)."""
    if isinstance(text_or_dict, str):
        return _core.body_from_json(text_or_dict)
    return _core.body_from_json(_json.dumps(text_or_dict))


def body_to_json(body):
    return _json.loads(body.to_json())


def certificate(body, eps_rel=1e-9):
    """Borsuk decision certificate as a dict."""
    return _json.loads(_core.certificate(body, eps_rel))


def diameter_graph(body, eps_rel=1e-9):
    """Diameter graph (classes, edges, diameter) as a dict."""
    return _json.loads(_core.diameter_graph(body, eps_rel))


def analyze(body, **kwargs):
    """Full analysis report as a dict; see _core.analyze for options."""
    return _json.loads(_core.analyze(body, **kwargs))


def partition(body, eps_rel=1e-9):
    """Verified partition into alpha pieces, as a dict."""
    return _json.loads(_core.partition(body, eps_rel))


def verify_partition(body, partition_dict, samples=10000):
    """Re-verify a stored partition against its parent body."""
    return _json.loads(_core.verify_partition(body, _json.dumps(partition_dict), samples))


def cross_check(body, **kwargs):
    """Brute-force oracle consistency report as a dict."""
    return _json.loads(_core.cross_check(body, **kwargs))
