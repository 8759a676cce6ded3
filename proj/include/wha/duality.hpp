#pragma once

/**
 * @file duality.hpp
 * @brief Left duality for ll Yetter-Drinfeld modules: the dual action and
 *        coaction, evaluation and coevaluation, and the zig-zag identities
 *        in the truncated monoidal structure.
 *
 * The dual of M carries <h.m*, m> = <m*, S(h) m> and the coaction
 * determined by <m*_[0], m> S(m*_[-1]) = <m*, m_[0]> m_[-1]. Evaluation
 * ev(1_(1).m* (x) 1_(2) m) = <m*, 1_(1) m> 1_(2) lands in H_t and
 * coevaluation coev(z) = z . (sum_i n_i (x) n_i*) leaves it.
 */

#include "wha/yetterdrinfeld.hpp"

namespace wha {

struct DualYDModule {
  YDModule dual;  // ll structure on the coordinate dual basis
};

DualYDModule dual_yd(const WeakHopfAlgebra& h, const YDModule& m);

struct EvCoev {
  TruncatedTensor dual_m;  // M* (x)_t M
  TruncatedTensor m_dual;  // M (x)_t M*
  LinearMap ev;            // ambient M* (x) M -> H_t coordinates
  LinearMap coev;          // H_t coordinates -> ambient M (x) M*
};

EvCoev ev_coev(const WeakHopfAlgebra& h, const YDModule& m);

/// The pairing compatibility of the dual action, the defining identity of
/// the dual coaction, check_yd on the dual, H-(co)linearity of ev and
/// coev, and both zig-zag identities through the unit constraints.
Report verify_left_duality(const WeakHopfAlgebra& h, const YDModule& m);

}  // namespace wha
