#pragma once

#include "bicross/matched_pair.hpp"
#include "bicross/mha.hpp"

namespace bicross {

/// Unital right action of a regular multiplier Hopf algebra A on B making
/// B a right A-module algebra. act: B (x) A -> B, b (x) a -> b <| a.
struct RightAction {
  MhaPtr A;
  MhaPtr B;
  LinOp act;

  Shape ba() const { return shape_concat(B->base, A->base); }
  Shape ab() const { return shape_concat(A->base, B->base); }
};

/// Twist maps of a right action (A must expose a total coproduct):
///   R(b(x)a)      = sum a1 (x) (b <| a2)
///   R^-1(a(x)b)   = sum (b <| S^-1(a2)) (x) a1
///   Rop(b(x)a)    = sum a2 (x) (b <| a1)
///   Rop^-1(a(x)b) = sum (b <| S(a1)) (x) a2
struct Twists {
  LinOp R, R_inv, R_op, R_op_inv;
};
Twists twist_R(const RightAction& act);

/// delta_k <| h = delta_{h^-1 |> k} on A = CH, B = F(K).
RightAction action_from_matched_pair(const MatchedPair& mp);

/// b <| a = eps(a) b.
RightAction trivial_action(MhaPtr A, MhaPtr B);

/// Smash product multiplication m = (mA (x) mB)(iA (x) R (x) iB) on
/// (A(x)B) (x) (A(x)B) -> A(x)B.
LinOp smash_mult(const RightAction& act);

/// Module-algebra law suite: module law, unitality, both twist identities,
/// two-sided invertibility of R and Rop, counit multiplicativity over the
/// action.
Report check_module_algebra(const RightAction& act, const ProbeSet& probes);

/// (b <| a)* = b* <| S(a)*, checked termwise on basis probes.
CheckResult check_action_star(const RightAction& act, const ProbeSet& probes);

/// Dual side: unital left action of D on C making C a left D-module
/// algebra. act: D (x) C -> C, d (x) c -> d |> c.
struct LeftAction {
  MhaPtr D;
  MhaPtr C;
  LinOp act;

  Shape dc() const { return shape_concat(D->base, C->base); }
  Shape cd() const { return shape_concat(C->base, D->base); }
};

/// Twists of the dual side:
///   R(d(x)c)      = sum (d1 |> c) (x) d2
///   R^-1(c(x)d)   = sum d2 (x) (S^-1(d1) |> c)
///   Rop(d(x)c)    = sum (d2 |> c) (x) d1
///   Rop^-1(c(x)d) = sum d1 (x) (S(d2) |> c)
struct DualTwists {
  LinOp R, R_inv, R_op, R_op_inv;
};
DualTwists twist_R_dual(const LeftAction& act);

/// k |> delta_h = delta_{h <| k^-1} on D = CK, C = F(H).
LeftAction dual_action_from_matched_pair(const MatchedPair& mp);

LeftAction trivial_left_action(MhaPtr D, MhaPtr C);

/// Smash product multiplication m = (mC (x) mD)(iC (x) R (x) iD) on
/// (C(x)D) (x) (C(x)D) -> C(x)D.
LinOp smash_mult_dual(const LeftAction& act);

Report check_module_algebra_dual(const LeftAction& act, const ProbeSet& probes);
CheckResult check_action_star_dual(const LeftAction& act, const ProbeSet& probes);

}  // namespace bicross
