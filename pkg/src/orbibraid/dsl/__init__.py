from .morphisms import (
    ActMor,
    Gen,
    Horiz,
    Id,
    Inv,
    MorExpr,
    PhiMor,
    TensorMor,
    Vert,
    codomain,
    domain,
    mentions_braiding,
    mor_text,
    validate,
)
from .normalize import normalize_presentation
from .objects import (
    ALeaf,
    Act,
    AUnit,
    MLeaf,
    MUnit,
    ObjectExpr,
    Phi,
    SignedSignature,
    Tensor,
    is_module,
    obj_text,
    signature,
    strand_count,
)
from .parser import Diagram, parse_diagram, parse_mor, parse_obj

__all__ = [
    "ALeaf",
    "Act",
    "ActMor",
    "AUnit",
    "Diagram",
    "Gen",
    "Horiz",
    "Id",
    "Inv",
    "MLeaf",
    "MUnit",
    "MorExpr",
    "ObjectExpr",
    "Phi",
    "PhiMor",
    "SignedSignature",
    "Tensor",
    "TensorMor",
    "Vert",
    "codomain",
    "domain",
    "is_module",
    "mentions_braiding",
    "mor_text",
    "normalize_presentation",
    "obj_text",
    "parse_diagram",
    "parse_mor",
    "parse_obj",
    "signature",
    "strand_count",
    "validate",
]
