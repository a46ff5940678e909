"""Lookup of partition classes by short name, as used on the command line."""

from __future__ import annotations

from .classes import CLASSICAL, PartitionClass, andrews_params_ok
from .partitions import modulus
from .schur_construction import schur7_class, schur_avoidance_class, schur_image_class
from .sp_class import sp_class

NEEDS_P = {"dp", "creg2p", "rp", "sp", "schur", "schur-avoid"}

CLASS_NAMES = sorted(set(CLASSICAL) | {"sp", "schur", "schur-avoid", "schur7"})


def make_class(name: str, **params) -> PartitionClass:
    """Build the class ``name``. ``p`` is required for the classes in ``NEEDS_P``;
    ``t`` takes ``a`` and ``b``; ``a`` and ``b`` take ``l``, ``k`` and ``a``."""
    if name in NEEDS_P:
        if params.get("p") is None:
            raise ValueError(f"class {name!r} needs an odd modulus p")
        modulus(params["p"])
    if name in ("a", "b"):
        l, k, a = (params.get(key) for key in ("l", "k", "a"))
        if None in (l, k, a):
            raise ValueError(f"class {name!r} needs l, k and a")
        if not andrews_params_ok(l, k, a):
            raise ValueError(f"parameters l={l}, k={k}, a={a} violate l/2 < a <= k, l <= k")
    if name == "t" and (params.get("a") is None or params.get("b") is None):
        raise ValueError("class 't' needs a and b")
    if name == "sp":
        return sp_class(params["p"])
    if name == "schur":
        return schur_image_class(params["p"])
    if name == "schur-avoid":
        return schur_avoidance_class(params["p"])
    if name == "schur7":
        return schur7_class()
    try:
        factory = CLASSICAL[name]
    except KeyError:
        raise ValueError(f"unknown class {name!r}; choose from {', '.join(CLASS_NAMES)}") from None
    return factory(**{k: v for k, v in params.items() if v is not None})
