"""Exact counting of m-simple branched covers of an elliptic curve.

Covers with every ramification point of index m are counted by symmetric
group character sums in exact rational arithmetic, connected counts are
extracted by formal logarithms, and each counting series is matched against
the ring Q[E2, E4, E6] by exact fitting.
"""

from .qseries import (DENOM_EXP, DEFAULT_QORDER, QSeries, eta_series,
                      euler_product, exp_series, log_series, q_derivative)
from .partitions import (FrobeniusCoords, conjugate, content_sum,
                         elementary_and_complete, frobenius, hook_dim, n_stat,
                         partition_count, partitions_of, power_sum,
                         power_sum_frobenius, power_sums, shifted)
from .characters import (char_m_cycle, m_cycle_class_size, weighted_char_mn,
                         weighted_char_phi, weighted_char_residue)
from .phipoly import (DPoly, PhiDegreeError, YPoly, build_phi_interpolate,
                      build_phi_symbolic, residue_coeff, shifted_faulhaber)
from .covercount import (CountSeries, branch_count, brute_connected_count,
                         brute_hom_count, connected_series, etaz_block_direct,
                         genus_for, genus_one_series, nhat, zhat_block,
                         zhat_blocks)
from .bloch_okounkov import (TaylorTable, etaz_block_operator, expected_weight,
                             moment_block, renorm_block, zeta_half_neg)
from .quasimod import (DerivationReport, FitFailure, FitUnderdetermined,
                       QMFit, QMPoly, bernoulli, check_derivation_system,
                       eisenstein, eta_derivative_iterate, fit_escalating,
                       fit_qm, qm_eval)

__version__ = "0.1.0"
