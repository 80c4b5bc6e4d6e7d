"""Decision procedures for twin groups and their doodle closures."""

from .conjugacy import (
    CyclicReduction,
    conjugate,
    conjugating_witness,
    cyclic_reduce,
    is_cyclically_reduced,
)
from .doodle import (
    ClosureSummary,
    Permutation,
    SvgGeometry,
    closure_components,
    is_pure,
    permutation_of,
    render_svg,
    split_check,
)
from .endomorphisms import (
    InjectivityReport,
    NonSurjectivityReport,
    injectivity_ball_test,
    make_psi_n,
    non_surjectivity_witness,
    psi_n_apply,
)
from .markov import (
    DestabilizationResult,
    MoveKind,
    apply_move,
    destabilize_m3,
    destabilize_m4,
    destabilize_oracle,
    m1_shift,
    m1_shift_inverse,
    stabilize_m3,
    stabilize_m4,
    tensor,
)
from .oracle import Ball, bfs_equal, conjugator_search, enumerate_ball, twisted_witness_search
from .twisted import (
    Endomap,
    HeisenbergReport,
    TwistedConjugacyVerdict,
    heisenberg_counterexample,
    make_inner,
    make_kappa,
    make_psi,
    make_tau,
    order_of,
    rinfty_witness_family,
    twisted_conjugate,
)
from .words import (
    Move,
    MoveCertificate,
    NormalForm,
    Word,
    certificate,
    equal,
    flip_equivalent,
    inverse,
    is_reduced,
    multiply,
    parity_vector,
    reduce,
    support,
)

__all__ = [
    "Ball",
    "ClosureSummary",
    "CyclicReduction",
    "DestabilizationResult",
    "Endomap",
    "HeisenbergReport",
    "InjectivityReport",
    "Move",
    "MoveCertificate",
    "MoveKind",
    "NonSurjectivityReport",
    "NormalForm",
    "Permutation",
    "SvgGeometry",
    "TwistedConjugacyVerdict",
    "Word",
    "apply_move",
    "bfs_equal",
    "certificate",
    "closure_components",
    "conjugate",
    "conjugating_witness",
    "conjugator_search",
    "cyclic_reduce",
    "destabilize_m3",
    "destabilize_m4",
    "destabilize_oracle",
    "enumerate_ball",
    "equal",
    "flip_equivalent",
    "heisenberg_counterexample",
    "injectivity_ball_test",
    "inverse",
    "is_cyclically_reduced",
    "is_pure",
    "is_reduced",
    "m1_shift",
    "m1_shift_inverse",
    "make_inner",
    "make_kappa",
    "make_psi",
    "make_psi_n",
    "make_tau",
    "multiply",
    "non_surjectivity_witness",
    "order_of",
    "parity_vector",
    "permutation_of",
    "psi_n_apply",
    "reduce",
    "render_svg",
    "rinfty_witness_family",
    "split_check",
    "stabilize_m3",
    "stabilize_m4",
    "support",
    "tensor",
    "twisted_conjugate",
    "twisted_witness_search",
]
