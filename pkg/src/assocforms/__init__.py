"""Exact computations with associated forms of homogeneous polynomials.

The main entry points are re-exported here::

    >>> from assocforms import parse_form, associated_form
    >>> str(associated_form(parse_form("z1^4 + z2^4", 2)).form)
    '(1/24) z1*^2 z2*^2'
"""
__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AlgebraError,
    AnchorAmbiguous,
    AnchorMismatch,
    BudgetExceeded,
    DegenerateForm,
    DegreeMismatch,
    DomainMismatch,
    IncompatibleRadicalScale,
    NotDivisible,
    NotSquare,
    ParseError,
    SingularMatrix,
    SingularSystem,
    UnsupportedSpace,
    WrongArity,
    WrongSpace,
)
from .forms import (  # noqa: E402
    Form,
    LinearMap,
    apolar_apply,
    apply_contragredient,
    apply_dual_linear,
    apply_linear,
    hat,
    hessian,
    monomial_basis,
    polar_pair,
    tilde,
)
from .parse import form_from_document, form_to_document, parse_form, serialize  # noqa: E402
from .scalars import QQ, QOmega  # noqa: E402
from .milnor import (  # noqa: E402
    AssociatedForm,
    ReductionSystem,
    associated_form,
    build_reduction,
    delta_phi,
    equivariance_check,
    gradient_products,
    hilbert_function,
    reduce_to_socle,
    verify_inverse_system,
)
from .cit.classical import discriminant, j_invariant, stability_classify, transvectant  # noqa: E402
from .cit import catalogue  # noqa: E402
from .duality import big_psi, check_duality_theorem, psi1, psi2  # noqa: E402

__all__ = [
    "__version__",
    "Form",
    "LinearMap",
    "apolar_apply",
    "apply_contragredient",
    "apply_dual_linear",
    "apply_linear",
    "hat",
    "hessian",
    "monomial_basis",
    "polar_pair",
    "tilde",
    "AssociatedForm",
    "ReductionSystem",
    "associated_form",
    "build_reduction",
    "delta_phi",
    "equivariance_check",
    "gradient_products",
    "hilbert_function",
    "reduce_to_socle",
    "verify_inverse_system",
    "form_from_document",
    "form_to_document",
    "parse_form",
    "serialize",
    "QQ",
    "QOmega",
    "discriminant",
    "j_invariant",
    "stability_classify",
    "transvectant",
    "catalogue",
    "big_psi",
    "check_duality_theorem",
    "psi1",
    "psi2",
    "AlgebraError",
    "AnchorAmbiguous",
    "AnchorMismatch",
    "BudgetExceeded",
    "DegenerateForm",
    "DegreeMismatch",
    "DomainMismatch",
    "IncompatibleRadicalScale",
    "NotDivisible",
    "NotSquare",
    "ParseError",
    "SingularMatrix",
    "SingularSystem",
    "UnsupportedSpace",
    "WrongArity",
    "WrongSpace",
]
