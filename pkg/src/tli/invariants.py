"""The full invariant block of a diagram, for comparisons and fuzzing.

Collects every quantity that must survive Reidemeister moves: genus,
shadability, the three presentation abelianizations, the coloring group,
the unordered pair of unit-normalized Laplacian polynomials, and the
coloring module order.  Everything is rendered into plain hashable data
so blocks compare with ==.
"""

from __future__ import annotations

from .coloring import coloring_group, coloring_system, module_order
from .groups import dehn, quotient_presentation, wirtinger
from .tait import dual_tait, laplacian, laplacian_polynomial, tait_graph


def _snf_key(snf):
    return (snf.torsion, snf.free_rank)


def invariant_block(diagram):
    block = {
        "genus": diagram.genus,
        "shadable": diagram.checkerboard_shade() is not None,
        "wirtinger_ab": _snf_key(wirtinger(diagram).abelianization()),
        "dehn_ab": _snf_key(dehn(diagram, with_base=True).abelianization()),
        "quotient_ab": _snf_key(
            quotient_presentation(diagram).abelianization()
        ),
    }
    if block["shadable"]:
        shading = diagram.checkerboard_shade()
        cs = coloring_system(diagram, shading)
        block["coloring"] = _snf_key(coloring_group(cs))
        block["module_order"] = str(module_order(cs))
        d_primal = laplacian_polynomial(laplacian(tait_graph(diagram, shading)))
        d_dual = laplacian_polynomial(laplacian(dual_tait(diagram, shading)))
        block["laplacian_pair"] = tuple(sorted([str(d_primal), str(d_dual)]))
    else:
        block["coloring"] = None
        block["module_order"] = None
        block["laplacian_pair"] = None
    return block
