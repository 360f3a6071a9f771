"""Edge division vectors, the dominance preorder on trees, extremal tree
families, edge-additive topological indices and an exhaustive verifier."""
from .division import (
    EdgeDivisionVector,
    EdgeMuMap,
    OrderRelation,
    Relation,
    center_edges,
    centroidal_vertices,
    compare,
    compare_trees,
    edge_division_vector,
    edge_mu,
    proper_centroidal_vertices,
)
from .enumeration import ClassKind, ClassSpec, count_free_trees, enumerate_class, free_trees, in_class
from .families import (
    FamilyError,
    FamilyKind,
    FamilyParams,
    branch_shift,
    construct,
    edge_move,
    edge_shift,
    parse_family,
)
from .indices import (
    IndexKind,
    IndexSpec,
    MonotoneClass,
    closed_form_wiener,
    index_value,
    monotone_class,
    pairwise_index_oracle,
    parse_index,
    wiener_bruteforce,
)
from .tree import (
    Tree,
    TreeFormatError,
    TreeProfile,
    canonical_code,
    is_isomorphic,
    parse_tree,
    profile,
)
from .verify import VerificationReport

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
