# ruff: noqa: F401
"""Hat-guessing games: models, predictor constructions, exhaustive
evaluation, strategy search and theorem checks."""
from .digraphs import enumerate_digraphs
from .errors import HatError
from .evaluator import (
    EvaluationReport,
    Goal,
    acyclic_adversary,
    average_correct_check,
    check_robust,
    double_correct_coloring,
    evaluate_exhaustive,
    evaluate_sampled,
    parse_goal,
    ps_membership,
    sample_coloring,
    zero_correct_coloring,
)
from .game import (
    OMEGA,
    ColorSpace,
    Cofinite,
    Game,
    PartialColoring,
    all_colorings,
    condition_profile,
    derive_structure,
    make_game,
    mutate_coloring,
    omega_game,
    validate_game,
    view_of,
)
from .lab import TheoremReport, check_theorem
from .parity import (
    ParityFunction,
    check_parity_equation,
    decode_ints,
    encode_ints,
    finite_parity,
    nat_tupler,
    parity_from_robust_fep,
)
from .search import FamilySpec, SearchCertificate, decide_ps, hunt, verify_certificate
from .strategies import (
    Predictor,
    bijection_hint_predictor,
    build_predictor,
    cycle_parity_predictor,
    dual_hint_predictor,
    find_cycle,
    finite_support_fep,
    hint_sum_predictor,
    mod_sum_predictor,
    parity_hint_predictor,
    restrict_colors,
    restrict_to_first_inning,
    run_predictor,
    table_predictor,
)

__version__ = "0.1.0"
