"""Exact-arithmetic pavings of regular nilpotent Hessenberg varieties in
classical Lie types.

The package computes, over the integers and rationals with no floating
point anywhere:

* classical root systems, Weyl groups, and the row decomposition of the
  positive roots (``rootcore``);
* Hessenberg spaces as root subsets closed under adding positive roots
  (``hessenberg``);
* the paving of a regular nilpotent Hessenberg variety by Bruhat cells —
  nonemptiness, dimensions by two independent formulas, per-row dimension
  profiles, and Betti numbers (``paving``);
* explicit matrix realizations of the classical Lie algebras, the
  row-projected adjoint operators, computational verification of the
  supporting structural lemmata, and constructive witness points for every
  nonempty cell (``liealg``);
* an independent type-A oracle that counts flags over small prime fields
  and compares point counts against the predicted cell dimensions
  (``fforacle``).

A command-line interface (``hessenpave``) exposes all of it with
machine-readable JSON/CSV output; see the README for usage.
"""

from .errors import ConsistencyError
from .rootcore import (
    Root,
    RootSystem,
    RowDecomposition,
    WeylElement,
    apply,
    build_root_system,
    compose,
    dominance_leq,
    enumerate_weyl,
    format_root,
    format_word,
    identity_element,
    inverse,
    inversion_set,
    parse_root,
    parse_word,
    rows,
    simple_reflection,
)
from .hessenberg import (
    ComplementIdeal,
    HessenbergSpace,
    complement_ideal,
    enumerate_hessenberg,
    from_function,
    from_negative_roots,
    to_function,
)
from .paving import (
    BettiTable,
    PavingCell,
    cell_dimension,
    cell_dimension_lie,
    cell_nonempty,
    compute_paving,
    poincare_polynomial,
    row_dimension_profile,
)
from .liealg import (
    ChevalleyRealization,
    NilpotentElement,
    StructureConstantTable,
    WitnessResult,
    ad_exp,
    bracket,
    build_chevalley,
    find_witness,
    normalize_type_D,
    psi_matrix,
    sum_of_simple_vectors,
    theta_row,
    verify_lemmata,
)
from .fforacle import (
    BruhatFlag,
    PrimeFieldMatrix,
    count_points,
    enumerate_cell_flags,
    hessenberg_check,
    jordan_nilpotent,
    weyl_to_permutation,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
