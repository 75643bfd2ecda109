#pragma once

#include "bicross/matched_pair.hpp"
#include "bicross/mha.hpp"

namespace bicross {

/// Left coaction Gamma of B on A making A a left B-comodule coalgebra,
/// held through its cotwist maps only (Gamma itself is never extended or
/// materialized):
///   T(a(x)b)    = Gamma(a)(b(x)1)
///   T_op(a(x)b) = (b(x)1)Gamma(a)
/// both A(x)B -> B(x)A, with closed-form inverses.
struct LeftCoaction {
  MhaPtr B;
  MhaPtr A;
  LinOp T, T_inv;
  LinOp T_op, T_op_inv;

  Shape ab() const { return shape_concat(A->base, B->base); }
  Shape ba() const { return shape_concat(B->base, A->base); }
};

/// T(h (x) delta_k) = delta_k (x) (h <| k) on A = CH, B = F(K).
LeftCoaction coaction_from_matched_pair(const MatchedPair& mp);

/// Gamma(a) = 1 (x) a, so T = T_op = flip.
LeftCoaction trivial_coaction(MhaPtr B, MhaPtr A);

/// Comodule-coalgebra suite: two-sided invertibility of T and T_op, the
/// closed-form inverse on finite instances, sliced coassociativity, the
/// sliced comodule-coalgebra law, both counit laws, and consistency of T
/// against T_op as the two one-sided evaluations of the same coaction.
Report check_comodule_coalgebra(const LeftCoaction& co, const ProbeSet& probes);

/// Sliced finiteness/associativity condition on the iterated-coaction
/// expression; support growth beyond `support_bound` is flagged as
/// NotFinitelySupported.
Report check_coaction_finiteness(const LeftCoaction& co, const ProbeSet& probes,
                                 size_t support_bound = 100000);

/// Gamma(S(a)*) = ((i (x) S)Gamma(a))*, in sliced form.
CheckResult check_coaction_star(const LeftCoaction& co, const ProbeSet& probes);

/// Dual side: right coaction Gamma of C on D, held through
///   T(c(x)d)    = (1(x)c)Gamma(d)
///   T_op(c(x)d) = Gamma(d)(1(x)c)
/// both C(x)D -> D(x)C, with closed-form inverses.
struct RightCoaction {
  MhaPtr C;
  MhaPtr D;
  LinOp T, T_inv;
  LinOp T_op, T_op_inv;

  Shape cd() const { return shape_concat(C->base, D->base); }
  Shape dc() const { return shape_concat(D->base, C->base); }
};

/// T(delta_h (x) k) = (h |> k) (x) delta_h on C = F(H), D = CK.
RightCoaction dual_coaction_from_matched_pair(const MatchedPair& mp);

RightCoaction trivial_right_coaction(MhaPtr C, MhaPtr D);

Report check_comodule_coalgebra_dual(const RightCoaction& co, const ProbeSet& probes);
Report check_coaction_finiteness_dual(const RightCoaction& co, const ProbeSet& probes,
                                      size_t support_bound = 100000);
CheckResult check_coaction_star_dual(const RightCoaction& co, const ProbeSet& probes);

}  // namespace bicross
