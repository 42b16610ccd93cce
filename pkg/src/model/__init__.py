"""
Pinched-disk quotient model, its extension through a tuning, and SVG figures.
"""

from .extension import extend_model, restrict_to_tuning_image, transported_classes
from .quotient import (
    ModelGraph,
    ModelNode,
    NodeKind,
    canonical_form,
    distinct_fibers,
    fiber,
    isomorphic,
    quotient_model,
)
from .render import render_svg, render_trace_svg

__all__ = [
    "ModelGraph",
    "ModelNode",
    "NodeKind",
    "canonical_form",
    "distinct_fibers",
    "extend_model",
    "fiber",
    "isomorphic",
    "quotient_model",
    "render_svg",
    "render_trace_svg",
    "restrict_to_tuning_image",
    "transported_classes",
]
