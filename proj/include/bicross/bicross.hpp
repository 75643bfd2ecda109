#pragma once

#include "bicross/action.hpp"
#include "bicross/coaction.hpp"

namespace bicross {

/// The smash product AB equipped with the twisted coproduct machinery:
/// an Mha on the two-slot base A (x) B whose canonical maps are the
/// composed operators
///   T1# = (T^-1)12 (T1A)23 T12 R34 (T1B)23 (R^-1)34
///   T2# = (T^-1)34 (T2B)23 T34 R12 (T2A)23 (R^-1)12
/// together with S# = R (SB (x) SA) T and eps# = epsA (x) epsB.
struct Bicrossproduct {
  MhaPtr A, B;
  RightAction act;
  LeftCoaction coact;
  Twists tw;
  LinOp P;
  MhaPtr AB;

  /// Direct-formula slices D#(ab) = sum (a1 (x) 1) Gamma(a2) DB(b), present
  /// on finite instances; an independent route for cross-checking the
  /// composed canonical maps.
  std::optional<LinOp> direct_T1, direct_T2;
};

/// P = Top . Rop on B (x) A.
LinOp compat_P_op(const RightAction& act, const LeftCoaction& coact);

/// The three compatibility conditions gating the construction, plus the
/// coaction-product twist identity and the action-coproduct twist identity
/// they are equivalent to:
///   (C1) P(iB (x) mA) = (iB (x) mA) P13 P12
///   (C2) (DB (x) iA) P = P23 P13 (DB (x) iA), in left-covered form
///   (C3) T . R = Top . Rop
Report check_compat_conditions(const RightAction& act, const LeftCoaction& coact,
                               const ProbeSet& probes);

/// Builds the bicrossproduct. Refuses unless check_compat_conditions and
/// the comodule/module suites pass; force builds anyway (verify_mha on the
/// result will then fail informatively).
Bicrossproduct build_bicrossproduct(const RightAction& act, const LeftCoaction& coact,
                                    const ProbeSet& probes, bool force = false);

/// Post-build consistency: composed canonical maps against the
/// direct-formula slices, multiplicativity of D# on the A part, the
/// one-sided-cover coproduct identities, and right-integral invariance in
/// the left-covered form.
Report check_bicross_consistency(const Bicrossproduct& bi, const ProbeSet& probes);

/// psi#(x* x) is a nonnegative rational for every probe x.
CheckResult check_positivity(const Mha& m, const ProbeSet& probes);

/// Dual construction on CD with
///   T1# = (T^-1)12 (T1C)23 T12 R34 (T1D)23 (R^-1)34
///   T2# = (T^-1)34 (T2D)23 T34 R12 (T2C)23 (R^-1)12
/// and S# = R (SD (x) SC) T, eps# = epsC (x) epsD, phi# = phiC (x) phiD.
struct DualBicrossproduct {
  MhaPtr C, D;
  LeftAction act;
  RightCoaction coact;
  DualTwists tw;
  LinOp P;
  MhaPtr CD;
  std::optional<LinOp> direct_T1, direct_T2;
};

LinOp compat_P_op_dual(const LeftAction& act, const RightCoaction& coact);

/// Dual compatibility trio:
///   (C1') P(mD (x) iC) = (mD (x) iC) P13 P23
///   (C2') (iD (x) DC) P = P12 P13 (iD (x) DC), in right-covered form
///   (C3') P = T . R
Report check_compat_conditions_dual(const LeftAction& act, const RightCoaction& coact,
                                    const ProbeSet& probes);

DualBicrossproduct build_dual_bicrossproduct(const LeftAction& act, const RightCoaction& coact,
                                             const ProbeSet& probes, bool force = false);

Report check_bicross_consistency_dual(const DualBicrossproduct& bi, const ProbeSet& probes);

/// Everything needed to run a matched pair through both constructions,
/// sharing the four constituent algebras.
struct MatchedPairModel {
  MatchedPair mp;
  RightAction act;
  LeftCoaction coact;
  LeftAction dual_act;
  RightCoaction dual_coact;
};
MatchedPairModel instantiate_matched_pair(const MatchedPair& mp);

}  // namespace bicross
