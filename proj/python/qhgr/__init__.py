"""Exact Schubert products in QH*(Gr(m,n)) by two independent routes."""

from ._core import (
    alcove_svg,
    core_to_kbounded,
    from_word,
    grassmannian_shape,
    is_grassmannian,
    is_in_coset_set,
    kbounded_to_core,
    kconjugate,
    length,
    modpet_ok,
    peterson_product,
    postnikov_ok,
    product_text,
    qpieri,
    qproduct,
    reduced_word,
    run_acceptance,
    shape_window,
    strange_dual,
    supports_braid,
    verify_eheq,
)

__all__ = [
    "alcove_svg",
    "core_to_kbounded",
    "from_word",
    "grassmannian_shape",
    "is_grassmannian",
    "is_in_coset_set",
    "kbounded_to_core",
    "kconjugate",
    "length",
    "modpet_ok",
    "peterson_product",
    "postnikov_ok",
    "product_text",
    "qpieri",
    "qproduct",
    "reduced_word",
    "run_acceptance",
    "shape_window",
    "strange_dual",
    "supports_braid",
    "verify_eheq",
]

__version__ = "0.1.0"
