from .axioms import check_brace_axiom, biskew_report, is_biskew, check_power_formula
from .theorems import (check_omega_containment, check_theorem_small_rank,
                       check_elementwise_orders, check_abelian_isomorphism, circle_rank)
from .subgroups import two_of_three_check, sub_brace_check, subset_conditions
