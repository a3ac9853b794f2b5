"""Rational Witt classes, signatures, determinants and Alexander polynomials
of knots from Seifert matrices, with closed forms for pretzel knots."""

from .arith import factor, is_prime, is_quadratic_residue, padic_split, squarefree_part
from .forms import DiagonalForm, det_of, diagonalize, signature_of, standard_matrices, symmetrize
from .knots import (
    Knot,
    LaurentPoly,
    alexander,
    connected_sum,
    knot_determinant,
    knot_signature,
    load_knot,
    mirror,
    tristram_levine,
    witt_class,
)
from .pretzel import (
    PretzelKnot,
    classify,
    determinant_closed_form,
    predicted_order,
    profile,
    seifert_matrix,
    signature_closed_form,
    stabilize,
    witt_closed_form,
)
from .witt import (
    INFINITE,
    LocalProfile,
    ResidueClass,
    WittClass,
    add,
    equals,
    from_diagonal,
    local_profile,
    negate,
    order,
    residue_at,
    signature,
)

__all__ = [name for name in dir() if not name.startswith("_")]
