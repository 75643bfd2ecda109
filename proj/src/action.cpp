#include "bicross/action.hpp"

#include "bicross/matrix.hpp"

namespace bicross {

namespace {

std::vector<size_t> leg_range(size_t first, size_t count) {
  std::vector<size_t> legs(count);
  for (size_t i = 0; i < count; ++i) legs[i] = first + i;
  return legs;
}

}  // namespace

Twists twist_R(const RightAction& act) {
  const auto& A = act.A;
  const auto& B = act.B;
  if (!A->coproduct)
    throw ShapeMismatch("twist_R: acting algebra must expose a total coproduct");
  const LinOp cop = *A->coproduct;
  const LinOp action = act.act;
  const size_t nb = B->base.size();
  Shape ba = act.ba(), ab = act.ab();
  Shape aone = A->one(), bone = B->one();

  auto split_b_a = [nb](const Word& w) {
    return std::pair{Word(w.begin(), w.begin() + nb), Word(w.begin() + nb, w.end())};
  };
  const size_t na = A->base.size();
  auto split_a_b = [na](const Word& w) {
    return std::pair{Word(w.begin(), w.begin() + na), Word(w.begin() + na, w.end())};
  };
  auto A2 = A;
  auto B2 = B;

  LinOp R("R", ba, ab, [=](const Word& w) {
    auto [bw, aw] = split_b_a(w);
    Vec out(ab);
    for (Vec tv11_ = cop.apply_basis(aw); const auto& [dw, c] : tv11_.support()) {
      auto [a1, a2] = split_slots(*A2, dw);
      Word baw = bw;
      baw.insert(baw.end(), a2.begin(), a2.end());
      Vec term = tensor(Vec::basis(aone, a1), action.apply_basis(baw));
      term *= c;
      out += term;
    }
    return out;
  });

  LinOp R_inv("R^-1", ab, ba, [=](const Word& w) {
    auto [aw, bw] = split_a_b(w);
    Vec out(ba);
    for (Vec tv12_ = cop.apply_basis(aw); const auto& [dw, c] : tv12_.support()) {
      auto [a1, a2] = split_slots(*A2, dw);
      Vec sa2 = A2->antipode_inv.apply_basis(a2);
      Vec acted = action.apply(tensor(Vec::basis(bone, bw), sa2));
      Vec term = tensor(acted, Vec::basis(aone, a1));
      term *= c;
      out += term;
    }
    return out;
  });

  LinOp R_op("Rop", ba, ab, [=](const Word& w) {
    auto [bw, aw] = split_b_a(w);
    Vec out(ab);
    for (Vec tv13_ = cop.apply_basis(aw); const auto& [dw, c] : tv13_.support()) {
      auto [a1, a2] = split_slots(*A2, dw);
      Word baw = bw;
      baw.insert(baw.end(), a1.begin(), a1.end());
      Vec term = tensor(Vec::basis(aone, a2), action.apply_basis(baw));
      term *= c;
      out += term;
    }
    return out;
  });

  LinOp R_op_inv("Rop^-1", ab, ba, [=](const Word& w) {
    auto [aw, bw] = split_a_b(w);
    Vec out(ba);
    for (Vec tv14_ = cop.apply_basis(aw); const auto& [dw, c] : tv14_.support()) {
      auto [a1, a2] = split_slots(*A2, dw);
      Vec sa1 = A2->antipode.apply_basis(a1);
      Vec acted = action.apply(tensor(Vec::basis(bone, bw), sa1));
      Vec term = tensor(acted, Vec::basis(aone, a2));
      term *= c;
      out += term;
    }
    return out;
  });

  return Twists{std::move(R), std::move(R_inv), std::move(R_op), std::move(R_op_inv)};
}

RightAction action_from_matched_pair(const MatchedPair& mp) {
  RightAction out;
  out.A = group_algebra(mp.H);
  out.B = function_algebra(mp.K);
  Shape ba = out.ba();
  Shape bone = out.B->one();
  auto H = mp.H;
  auto tr = mp.tr;
  out.act = LinOp("act", ba, bone, [H, tr, bone](const Word& w) {
    return Vec::basis(bone, {tr(H->inv(w[1]), w[0])});
  });
  return out;
}

RightAction trivial_action(MhaPtr A, MhaPtr B) {
  RightAction out;
  out.A = std::move(A);
  out.B = std::move(B);
  Shape ba = out.ba();
  Shape bone = out.B->one();
  const size_t nb = out.B->base.size();
  LinOp eps = out.A->counit;
  out.act = LinOp("act-trivial", ba, bone, [eps, bone, nb](const Word& w) {
    Word bw(w.begin(), w.begin() + nb);
    Word aw(w.begin() + nb, w.end());
    Scalar c = eps.apply_basis(aw).as_scalar();
    Vec v = Vec::basis(bone, bw);
    v *= c;
    return v;
  });
  return out;
}

LinOp smash_mult(const RightAction& act) {
  const size_t na = act.A->base.size();
  const size_t nb = act.B->base.size();
  Twists tw = twist_R(act);
  Shape amb0 = shape_concat(act.ab(), act.ab());
  LinOp step1 = leg_apply(tw.R, leg_range(na + 1, nb + na), amb0);
  LinOp step2 = leg_apply(act.A->mult, leg_range(1, 2 * na), step1.out_shape());
  LinOp step3 = leg_apply(act.B->mult, leg_range(na + 1, 2 * nb), step2.out_shape());
  LinOp m = compose({step3, step2, step1});
  return LinOp("m#", amb0, act.ab(),
               [m](const Word& w) { return m.apply_basis(w); });
}

Report check_module_algebra(const RightAction& act, const ProbeSet& probes) {
  Report rep;
  rep.suite = "module-algebra";
  const auto& A = *act.A;
  const auto& B = *act.B;
  const size_t na = A.base.size();
  const size_t nb = B.base.size();
  Twists tw = twist_R(act);
  Shape baa = shape_concat(act.ba(), A.base);
  Shape bba = shape_concat(B.base, act.ba());

  {
    auto p = probes.vectors(baa);
    rep.checks.push_back(check_ops_equal(
        "module-law", "(b<|a)<|a' = b<|(aa')",
        compose(act.act, leg_apply(act.act, leg_range(1, nb + na), baa)),
        compose(act.act, leg_apply(A.mult, leg_range(nb + 1, 2 * na), baa)), p));
  }
  {
    // Unital action: b <| 1 = b when A is unital, plus full rank of the
    // action map on finite instances (the span of {b <| a} is all of B).
    std::string law = "span{b<|a} = B and b<|1 = b";
    if (A.unit) {
      auto pb = probes.vectors(B.one());
      std::optional<Counterexample> cex;
      for (const auto& v : pb) {
        Vec acted = act.act.apply(tensor(v, *A.unit));
        if (acted != v) {
          cex = Counterexample{v.describe(), acted.describe(), v.describe()};
          break;
        }
      }
      if (cex)
        rep.checks.push_back(CheckResult::fail("action-unital", law, std::move(*cex)));
      else if (auto dim = shape_dimension(act.ba()); dim && *dim <= 8000) {
        size_t rank = materialize(act.act).rank();
        if (rank != B.dim()) {
          Counterexample c2;
          c2.input = "materialized action matrix";
          c2.lhs = "rank " + std::to_string(rank);
          c2.rhs = "dim B = " + std::to_string(B.dim());
          rep.checks.push_back(CheckResult::fail("action-unital", law, std::move(c2)));
        } else {
          rep.checks.push_back(CheckResult::pass("action-unital", law, pb.size(),
                                                 "rank " + std::to_string(rank)));
        }
      } else {
        rep.checks.push_back(CheckResult::pass("action-unital", law, pb.size()));
      }
    } else {
      rep.checks.push_back(
          CheckResult::skipped("action-unital", law, "acting algebra has no unit"));
    }
  }
  {
    auto p = probes.vectors(baa);
    // (mA (x) iB)(iA (x) R)(R (x) iA) built stepwise.
    LinOp s1 = leg_apply(tw.R, leg_range(1, nb + na), baa);            // A B A
    LinOp s2 = leg_apply(tw.R, leg_range(na + 1, nb + na), s1.out_shape());  // A A B
    LinOp s3 = leg_apply(A.mult, leg_range(1, 2 * na), s2.out_shape());      // A B
    rep.checks.push_back(check_ops_equal(
        "twist-module-identity", "R(iB(x)mA) = (mA(x)iB)(iA(x)R)(R(x)iA)",
        compose(tw.R, leg_apply(A.mult, leg_range(nb + 1, 2 * na), baa)),
        compose({s3, s2, s1}), p));
  }
  {
    auto p = probes.vectors(bba);
    LinOp s1 = leg_apply(tw.R, leg_range(nb + 1, nb + na), bba);             // B A B
    LinOp s2 = leg_apply(tw.R, leg_range(1, nb + na), s1.out_shape());       // A B B
    LinOp s3 = leg_apply(B.mult, leg_range(na + 1, 2 * nb), s2.out_shape()); // A B
    rep.checks.push_back(check_ops_equal(
        "twist-module-algebra-identity", "R(mB(x)iA) = (iA(x)mB)(R(x)iB)(iB(x)R)",
        compose(tw.R, leg_apply(B.mult, leg_range(1, 2 * nb), bba)),
        compose({s3, s2, s1}), p));
  }
  {
    auto pba = probes.vectors(act.ba());
    auto pab = probes.vectors(act.ab());
    auto r = check_ops_equal("twist-bijective", "R^-1 R = id", compose(tw.R_inv, tw.R),
                             identity_op(act.ba()), pba);
    if (r.status == CheckStatus::Pass)
      r = check_ops_equal("twist-bijective", "R R^-1 = id", compose(tw.R, tw.R_inv),
                          identity_op(act.ab()), pab);
    rep.checks.push_back(std::move(r));
    auto r2 = check_ops_equal("twist-op-bijective", "Rop^-1 Rop = id",
                              compose(tw.R_op_inv, tw.R_op), identity_op(act.ba()), pba);
    if (r2.status == CheckStatus::Pass)
      r2 = check_ops_equal("twist-op-bijective", "Rop Rop^-1 = id",
                           compose(tw.R_op, tw.R_op_inv), identity_op(act.ab()), pab);
    rep.checks.push_back(std::move(r2));
  }
  {
    auto p = probes.vectors(act.ba());
    rep.checks.push_back(check_ops_equal(
        "counit-action", "eps(b<|a) = eps(b)eps(a)", compose(B.counit, act.act),
        op_tensor(B.counit, A.counit), p));
  }
  return rep;
}

CheckResult check_action_star(const RightAction& act, const ProbeSet& probes) {
  const auto& A = *act.A;
  const auto& B = *act.B;
  const std::string law = "(b<|a)* = b* <| S(a)*";
  if (!A.star || !B.star)
    return CheckResult::skipped("action-star", law, "no involution present");
  std::vector<Word> words;
  auto dim = shape_dimension(act.ba());
  if (dim && probes.wants_exhaustive(*dim)) {
    words = enumerate_words(act.ba());
  } else {
    std::mt19937_64 rng(probes.seed);
    for (size_t i = 0; i < probes.count; ++i) words.push_back(random_word(act.ba(), rng));
  }
  const size_t nb = B.base.size();
  for (const auto& w : words) {
    Word bw(w.begin(), w.begin() + nb), aw(w.begin() + nb, w.end());
    Vec lhs = B.star->apply(act.act.apply_basis(w));
    Vec sa = A.star->apply(A.antipode.apply_basis(aw));
    Vec rhs = act.act.apply(tensor(B.star->apply(Vec::basis(B.one(), bw)), sa));
    if (lhs != rhs)
      return CheckResult::fail("action-star", law,
                               Counterexample{format_word(act.ba(), w), lhs.describe(),
                                              rhs.describe()});
  }
  return CheckResult::pass("action-star", law, words.size());
}

DualTwists twist_R_dual(const LeftAction& act) {
  const auto& D = act.D;
  const auto& C = act.C;
  if (!D->coproduct)
    throw ShapeMismatch("twist_R_dual: acting algebra must expose a total coproduct");
  const LinOp cop = *D->coproduct;
  const LinOp action = act.act;
  const size_t nd = D->base.size();
  const size_t nc = C->base.size();
  Shape dc = act.dc(), cd = act.cd();
  Shape done = D->one(), cone = C->one();
  auto D2 = D;

  LinOp R("R", dc, cd, [=](const Word& w) {
    Word dw(w.begin(), w.begin() + nd), cw(w.begin() + nd, w.end());
    Vec out(cd);
    for (Vec tv15_ = cop.apply_basis(dw); const auto& [pw, c] : tv15_.support()) {
      auto [d1, d2] = split_slots(*D2, pw);
      Word dcw = d1;
      dcw.insert(dcw.end(), cw.begin(), cw.end());
      Vec term = tensor(action.apply_basis(dcw), Vec::basis(done, d2));
      term *= c;
      out += term;
    }
    return out;
  });

  LinOp R_inv("R^-1", cd, dc, [=](const Word& w) {
    Word cw(w.begin(), w.begin() + nc), dw(w.begin() + nc, w.end());
    Vec out(dc);
    for (Vec tv16_ = cop.apply_basis(dw); const auto& [pw, c] : tv16_.support()) {
      auto [d1, d2] = split_slots(*D2, pw);
      Vec sd1 = D2->antipode_inv.apply_basis(d1);
      Vec acted = action.apply(tensor(sd1, Vec::basis(cone, cw)));
      Vec term = tensor(Vec::basis(done, d2), acted);
      term *= c;
      out += term;
    }
    return out;
  });

  LinOp R_op("Rop", dc, cd, [=](const Word& w) {
    Word dw(w.begin(), w.begin() + nd), cw(w.begin() + nd, w.end());
    Vec out(cd);
    for (Vec tv17_ = cop.apply_basis(dw); const auto& [pw, c] : tv17_.support()) {
      auto [d1, d2] = split_slots(*D2, pw);
      Word dcw = d2;
      dcw.insert(dcw.end(), cw.begin(), cw.end());
      Vec term = tensor(action.apply_basis(dcw), Vec::basis(done, d1));
      term *= c;
      out += term;
    }
    return out;
  });

  LinOp R_op_inv("Rop^-1", cd, dc, [=](const Word& w) {
    Word cw(w.begin(), w.begin() + nc), dw(w.begin() + nc, w.end());
    Vec out(dc);
    for (Vec tv18_ = cop.apply_basis(dw); const auto& [pw, c] : tv18_.support()) {
      auto [d1, d2] = split_slots(*D2, pw);
      Vec sd2 = D2->antipode.apply_basis(d2);
      Vec acted = action.apply(tensor(sd2, Vec::basis(cone, cw)));
      Vec term = tensor(Vec::basis(done, d1), acted);
      term *= c;
      out += term;
    }
    return out;
  });

  return DualTwists{std::move(R), std::move(R_inv), std::move(R_op), std::move(R_op_inv)};
}

LeftAction dual_action_from_matched_pair(const MatchedPair& mp) {
  LeftAction out;
  out.D = group_algebra(mp.K);
  out.C = function_algebra(mp.H);
  Shape dc = out.dc();
  Shape cone = out.C->one();
  auto K = mp.K;
  auto tl = mp.tl;
  out.act = LinOp("act", dc, cone, [K, tl, cone](const Word& w) {
    return Vec::basis(cone, {tl(w[1], K->inv(w[0]))});
  });
  return out;
}

LeftAction trivial_left_action(MhaPtr D, MhaPtr C) {
  LeftAction out;
  out.D = std::move(D);
  out.C = std::move(C);
  Shape dc = out.dc();
  Shape cone = out.C->one();
  const size_t nd = out.D->base.size();
  LinOp eps = out.D->counit;
  out.act = LinOp("act-trivial", dc, cone, [eps, cone, nd](const Word& w) {
    Word dw(w.begin(), w.begin() + nd);
    Word cw(w.begin() + nd, w.end());
    Scalar c = eps.apply_basis(dw).as_scalar();
    Vec v = Vec::basis(cone, cw);
    v *= c;
    return v;
  });
  return out;
}

LinOp smash_mult_dual(const LeftAction& act) {
  const size_t nc = act.C->base.size();
  const size_t nd = act.D->base.size();
  DualTwists tw = twist_R_dual(act);
  Shape amb0 = shape_concat(act.cd(), act.cd());
  LinOp step1 = leg_apply(tw.R, leg_range(nc + 1, nd + nc), amb0);
  LinOp step2 = leg_apply(act.C->mult, leg_range(1, 2 * nc), step1.out_shape());
  LinOp step3 = leg_apply(act.D->mult, leg_range(nc + 1, 2 * nd), step2.out_shape());
  LinOp m = compose({step3, step2, step1});
  return LinOp("m#", amb0, act.cd(), [m](const Word& w) { return m.apply_basis(w); });
}

Report check_module_algebra_dual(const LeftAction& act, const ProbeSet& probes) {
  Report rep;
  rep.suite = "module-algebra";
  const auto& D = *act.D;
  const auto& C = *act.C;
  const size_t nd = D.base.size();
  const size_t nc = C.base.size();
  DualTwists tw = twist_R_dual(act);
  Shape ddc = shape_concat(D.base, act.dc());
  Shape dcc = shape_concat(act.dc(), C.base);

  {
    auto p = probes.vectors(ddc);
    rep.checks.push_back(check_ops_equal(
        "module-law", "d|>(d'|>c) = (dd')|>c",
        compose(act.act, leg_apply(act.act, leg_range(nd + 1, nd + nc), ddc)),
        compose(act.act, leg_apply(D.mult, leg_range(1, 2 * nd), ddc)), p));
  }
  {
    const std::string law = "1|>c = c";
    if (D.unit) {
      auto pc = probes.vectors(C.one());
      std::optional<Counterexample> cex;
      for (const auto& v : pc) {
        Vec acted = act.act.apply(tensor(*D.unit, v));
        if (acted != v) {
          cex = Counterexample{v.describe(), acted.describe(), v.describe()};
          break;
        }
      }
      if (cex)
        rep.checks.push_back(CheckResult::fail("action-unital", law, std::move(*cex)));
      else
        rep.checks.push_back(CheckResult::pass("action-unital", law, pc.size()));
    } else {
      rep.checks.push_back(
          CheckResult::skipped("action-unital", law, "acting algebra has no unit"));
    }
  }
  {
    auto p = probes.vectors(ddc);
    LinOp s1 = leg_apply(tw.R, leg_range(nd + 1, nd + nc), ddc);             // D C D
    LinOp s2 = leg_apply(tw.R, leg_range(1, nd + nc), s1.out_shape());       // C D D
    LinOp s3 = leg_apply(D.mult, leg_range(nc + 1, 2 * nd), s2.out_shape()); // C D
    rep.checks.push_back(check_ops_equal(
        "twist-module-identity", "R(mD(x)iC) = (iC(x)mD)(R(x)iD)(iD(x)R)",
        compose(tw.R, leg_apply(D.mult, leg_range(1, 2 * nd), ddc)), compose({s3, s2, s1}), p));
  }
  {
    auto p = probes.vectors(dcc);
    LinOp s1 = leg_apply(tw.R, leg_range(1, nd + nc), dcc);                  // C D C
    LinOp s2 = leg_apply(tw.R, leg_range(nc + 1, nd + nc), s1.out_shape());  // C C D
    LinOp s3 = leg_apply(C.mult, leg_range(1, 2 * nc), s2.out_shape());      // C D
    rep.checks.push_back(check_ops_equal(
        "twist-module-algebra-identity", "R(iD(x)mC) = (mC(x)iD)(iC(x)R)(R(x)iC)",
        compose(tw.R, leg_apply(C.mult, leg_range(nd + 1, 2 * nc), dcc)), compose({s3, s2, s1}),
        p));
  }
  {
    auto pdc = probes.vectors(act.dc());
    auto pcd = probes.vectors(act.cd());
    auto r = check_ops_equal("twist-bijective", "R^-1 R = id", compose(tw.R_inv, tw.R),
                             identity_op(act.dc()), pdc);
    if (r.status == CheckStatus::Pass)
      r = check_ops_equal("twist-bijective", "R R^-1 = id", compose(tw.R, tw.R_inv),
                          identity_op(act.cd()), pcd);
    rep.checks.push_back(std::move(r));
    auto r2 = check_ops_equal("twist-op-bijective", "Rop^-1 Rop = id",
                              compose(tw.R_op_inv, tw.R_op), identity_op(act.dc()), pdc);
    if (r2.status == CheckStatus::Pass)
      r2 = check_ops_equal("twist-op-bijective", "Rop Rop^-1 = id",
                           compose(tw.R_op, tw.R_op_inv), identity_op(act.cd()), pcd);
    rep.checks.push_back(std::move(r2));
  }
  {
    auto p = probes.vectors(act.dc());
    rep.checks.push_back(check_ops_equal(
        "counit-action", "eps(d|>c) = eps(d)eps(c)", compose(C.counit, act.act),
        op_tensor(D.counit, C.counit), p));
  }
  return rep;
}

CheckResult check_action_star_dual(const LeftAction& act, const ProbeSet& probes) {
  const auto& D = *act.D;
  const auto& C = *act.C;
  const std::string law = "(d|>c)* = S(d)* |> c*";
  if (!D.star || !C.star)
    return CheckResult::skipped("action-star", law, "no involution present");
  std::vector<Word> words;
  auto dim = shape_dimension(act.dc());
  if (dim && probes.wants_exhaustive(*dim)) {
    words = enumerate_words(act.dc());
  } else {
    std::mt19937_64 rng(probes.seed);
    for (size_t i = 0; i < probes.count; ++i) words.push_back(random_word(act.dc(), rng));
  }
  const size_t nd = D.base.size();
  for (const auto& w : words) {
    Word dw(w.begin(), w.begin() + nd), cw(w.begin() + nd, w.end());
    Vec lhs = C.star->apply(act.act.apply_basis(w));
    Vec sd = D.star->apply(D.antipode.apply_basis(dw));
    Vec rhs = act.act.apply(tensor(sd, C.star->apply(Vec::basis(C.one(), cw))));
    if (lhs != rhs)
      return CheckResult::fail("action-star", law,
                               Counterexample{format_word(act.dc(), w), lhs.describe(),
                                              rhs.describe()});
  }
  return CheckResult::pass("action-star", law, words.size());
}

}  // namespace bicross
