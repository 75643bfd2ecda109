#include "bicross/mha.hpp"

#include "bicross/matrix.hpp"

namespace bicross {

Vec ConjLinMap::apply(const Vec& v) const {
  if (!shape_equal(v.shape(), in)) throw ShapeMismatch("conj map " + label + ": shape mismatch");
  Vec out_v(out);
  for (const auto& [w, c] : v.support()) {
    Vec img = on_basis(w);
    img *= c.conj();
    out_v += img;
  }
  return out_v;
}

Shape Mha::slots(size_t n) const {
  Shape s;
  for (size_t i = 0; i < n; ++i) s = shape_concat(s, base);
  return s;
}

std::vector<size_t> Mha::slot(size_t i) const {
  std::vector<size_t> legs;
  const size_t b = base.size();
  for (size_t j = 0; j < b; ++j) legs.push_back((i - 1) * b + j + 1);
  return legs;
}

LinOp Mha::mult_flipped() const {
  const size_t b = base.size();
  Shape two_s = two();
  LinOp m = mult;
  return LinOp("m.flip", two_s, base, [m, b](const Word& w) {
    Word f(w.begin() + b, w.end());
    f.insert(f.end(), w.begin(), w.begin() + b);
    return m.apply_basis(f);
  });
}

std::pair<Word, Word> split_slots(const Mha& m, const Word& w) {
  const size_t b = m.base.size();
  return {Word(w.begin(), w.begin() + b), Word(w.begin() + b, w.end())};
}

MhaPtr group_algebra(GroupPtr H) {
  auto m = std::make_shared<Mha>();
  const auto Hp = H;
  m->name = "C[" + H->name() + "]";
  m->base = Shape{LegType{BasisKind::GroupLike, H}};
  Shape one = m->one();
  Shape two = m->two();
  auto b1 = [one](GroupElement g) { return Vec::basis(one, {std::move(g)}); };
  auto b2 = [two](GroupElement g, GroupElement g2) {
    return Vec::basis(two, {std::move(g), std::move(g2)});
  };

  m->mult = LinOp("m", two, one, [Hp, b1](const Word& w) { return b1(Hp->mul(w[0], w[1])); });
  m->unit = b1(H->identity());
  m->T1 = LinOp("T1", two, two,
                [Hp, b2](const Word& w) { return b2(w[0], Hp->mul(w[0], w[1])); });
  m->T1i = LinOp("T1^-1", two, two,
                 [Hp, b2](const Word& w) { return b2(w[0], Hp->mul(Hp->inv(w[0]), w[1])); });
  m->T2 = LinOp("T2", two, two,
                [Hp, b2](const Word& w) { return b2(Hp->mul(w[0], w[1]), w[1]); });
  m->T2i = LinOp("T2^-1", two, two,
                 [Hp, b2](const Word& w) { return b2(Hp->mul(w[0], Hp->inv(w[1])), w[1]); });
  m->T3 = LinOp("T3", two, two,
                [Hp, b2](const Word& w) { return b2(Hp->mul(w[0], w[1]), w[0]); });
  m->T3i = LinOp("T3^-1", two, two,
                 [Hp, b2](const Word& w) { return b2(w[1], Hp->mul(Hp->inv(w[1]), w[0])); });
  m->T4 = LinOp("T4", two, two,
                [Hp, b2](const Word& w) { return b2(w[1], Hp->mul(w[0], w[1])); });
  m->T4i = LinOp("T4^-1", two, two,
                 [Hp, b2](const Word& w) { return b2(Hp->mul(w[1], Hp->inv(w[0])), w[0]); });
  m->counit = LinOp("eps", one, Shape{}, [](const Word&) { return Vec::scalar(Scalar::one()); });
  m->antipode = LinOp("S", one, one, [Hp, b1](const Word& w) { return b1(Hp->inv(w[0])); });
  m->antipode_inv = m->antipode;
  m->coproduct = LinOp("D", one, two, [b2](const Word& w) { return b2(w[0], w[0]); });
  auto haar = LinOp("int", one, Shape{}, [Hp](const Word& w) {
    return Vec::scalar(w[0] == Hp->identity() ? Scalar::one() : Scalar::zero());
  });
  m->left_integral = haar;
  m->right_integral = haar;
  m->star = ConjLinMap{"star", one, one, [Hp, b1](const Word& w) { return b1(Hp->inv(w[0])); }};
  Vec unit = *m->unit;
  m->local_unit_left = [unit](const Vec&) { return unit; };
  m->local_unit_right = *m->local_unit_left;
  return m;
}

MhaPtr function_algebra(GroupPtr K) {
  auto m = std::make_shared<Mha>();
  const auto Kp = K;
  m->name = "F[" + K->name() + "]";
  m->base = Shape{LegType{BasisKind::Delta, K}};
  Shape one = m->one();
  Shape two = m->two();
  auto b1 = [one](GroupElement g) { return Vec::basis(one, {std::move(g)}); };
  auto b2 = [two](GroupElement g, GroupElement g2) {
    return Vec::basis(two, {std::move(g), std::move(g2)});
  };

  m->mult = LinOp("m", two, one, [b1, one](const Word& w) {
    return w[0] == w[1] ? b1(w[0]) : Vec(one);
  });
  if (K->finite()) {
    Vec u(one);
    for (const auto& k : *K->enumeration()) u.add_term({k}, Scalar::one());
    m->unit = std::move(u);
  }
  m->T1 = LinOp("T1", two, two,
                [Kp, b2](const Word& w) { return b2(Kp->mul(w[0], Kp->inv(w[1])), w[1]); });
  m->T1i = LinOp("T1^-1", two, two,
                 [Kp, b2](const Word& w) { return b2(Kp->mul(w[0], w[1]), w[1]); });
  m->T2 = LinOp("T2", two, two,
                [Kp, b2](const Word& w) { return b2(w[0], Kp->mul(Kp->inv(w[0]), w[1])); });
  m->T2i = LinOp("T2^-1", two, two,
                 [Kp, b2](const Word& w) { return b2(w[0], Kp->mul(w[0], w[1])); });
  m->T3 = LinOp("T3", two, two,
                [Kp, b2](const Word& w) { return b2(w[1], Kp->mul(Kp->inv(w[1]), w[0])); });
  m->T3i = LinOp("T3^-1", two, two,
                 [Kp, b2](const Word& w) { return b2(Kp->mul(w[0], w[1]), w[0]); });
  m->T4 = LinOp("T4", two, two,
                [Kp, b2](const Word& w) { return b2(Kp->mul(w[1], Kp->inv(w[0])), w[0]); });
  m->T4i = LinOp("T4^-1", two, two,
                 [Kp, b2](const Word& w) { return b2(w[1], Kp->mul(w[0], w[1])); });
  m->counit = LinOp("eps", one, Shape{}, [Kp](const Word& w) {
    return Vec::scalar(w[0] == Kp->identity() ? Scalar::one() : Scalar::zero());
  });
  m->antipode = LinOp("S", one, one, [Kp, b1](const Word& w) { return b1(Kp->inv(w[0])); });
  m->antipode_inv = m->antipode;
  if (K->finite()) {
    m->coproduct = LinOp("D", one, two, [Kp, two](const Word& w) {
      Vec out(two);
      for (const auto& a : *Kp->enumeration())
        out.add_term({a, Kp->mul(Kp->inv(a), w[0])}, Scalar::one());
      return out;
    });
  }
  auto haar = LinOp("int", one, Shape{}, [](const Word&) { return Vec::scalar(Scalar::one()); });
  m->left_integral = haar;
  m->right_integral = haar;
  m->star = ConjLinMap{"star", one, one, [b1](const Word& w) { return b1(w[0]); }};
  // Local unit over a finite support: the delta sum over the support.
  auto local = [one](const Vec& v) {
    Vec u(one);
    for (const auto& [w, c] : v.support()) u.add_term(w, Scalar::one());
    return u;
  };
  m->local_unit_left = local;
  m->local_unit_right = local;
  return m;
}

Multiplier multiplier_of_element(const Mha& m, const Vec& v) {
  Shape one = m.one();
  LinOp mult = m.mult;
  return Multiplier{
      LinOp("L", one, one,
            [mult, v, one](const Word& w) { return mult.apply(tensor(v, Vec::basis(one, w))); }),
      LinOp("R", one, one, [mult, v, one](const Word& w) {
        return mult.apply(tensor(Vec::basis(one, w), v));
      })};
}

namespace {

CheckResult bijectivity_check(const std::string& name, const LinOp& op, const LinOp& opi,
                              const ProbeSet& probes, const VerifyMhaOptions& opt) {
  auto probes_in = probes.vectors(op.in_shape());
  auto r1 = check_ops_equal(name, op.label() + "^-1 . " + op.label() + " = id",
                            compose(opi, op), identity_op(op.in_shape()), probes_in);
  if (r1.status == CheckStatus::Fail) return r1;
  auto probes_out = probes.vectors(op.out_shape());
  auto r2 = check_ops_equal(name, op.label() + " . " + op.label() + "^-1 = id",
                            compose(op, opi), identity_op(op.out_shape()), probes_out);
  if (r2.status == CheckStatus::Fail) return r2;

  size_t cases = probes_in.size() + probes_out.size();
  std::string note = "closed-form inverse";
  auto dim = shape_dimension(op.in_shape());
  if (opt.matrix_bijectivity && dim && *dim <= opt.matrix_limit) {
    size_t rank = materialize(op).rank();
    if (rank != *dim) {
      Counterexample cex;
      cex.input = "materialized matrix of " + op.label();
      cex.lhs = "rank " + std::to_string(rank);
      cex.rhs = "rank " + std::to_string(*dim) + " required for bijectivity";
      return CheckResult::fail(name, op.label() + " bijective (matrix rank)", std::move(cex));
    }
    note = "closed-form inverse + matrix rank " + std::to_string(rank);
  }
  return CheckResult::pass(name, op.label() + " bijective", cases, note);
}

CheckResult nondegeneracy_check(const Mha& m, const ProbeSet& probes,
                                const VerifyMhaOptions& opt) {
  const std::string law = "for a != 0 there are b, c with a*b != 0 and c*a != 0";
  auto dim = shape_dimension(m.one());
  if (dim && opt.matrix_bijectivity && *dim <= opt.matrix_limit) {
    auto words = enumerate_words(m.one());
    SparseMatrix left(*dim * *dim, *dim), right(*dim * *dim, *dim);
    for (size_t j = 0; j < words.size(); ++j) {
      Vec a = Vec::basis(m.one(), words[j]);
      for (size_t i = 0; i < words.size(); ++i) {
        Vec b = Vec::basis(m.one(), words[i]);
        for (Vec tv1_ = m.mult.apply(tensor(a, b)); const auto& [w, c] : tv1_.support())
          left.set(i * *dim + word_index(m.one(), w), j, c);
        for (Vec tv2_ = m.mult.apply(tensor(b, a)); const auto& [w, c] : tv2_.support())
          right.set(i * *dim + word_index(m.one(), w), j, c);
      }
    }
    size_t lrank = left.rank(), rrank = right.rank();
    if (lrank != *dim || rrank != *dim) {
      Counterexample cex;
      cex.input = "multiplication operator matrices";
      cex.lhs = "left rank " + std::to_string(lrank) + ", right rank " + std::to_string(rrank);
      cex.rhs = "both must equal dim " + std::to_string(*dim);
      return CheckResult::fail("nondegeneracy", law, std::move(cex));
    }
    return CheckResult::pass("nondegeneracy", law, 2, "matrix rank " + std::to_string(*dim));
  }
  auto vecs = probes.vectors(m.one());
  for (const auto& a : vecs) {
    if (a.is_zero()) continue;
    bool left_ok = false, right_ok = false;
    // Constructive route first: the local units of the support.
    if (m.local_unit_right && !m.mult.apply(tensor(a, (*m.local_unit_right)(a))).is_zero())
      left_ok = true;
    if (m.local_unit_left && !m.mult.apply(tensor((*m.local_unit_left)(a), a)).is_zero())
      right_ok = true;
    for (const auto& [w, c] : a.support()) {
      if (left_ok && right_ok) break;
      Vec b = Vec::basis(m.one(), w);
      if (!left_ok && !m.mult.apply(tensor(a, b)).is_zero()) left_ok = true;
      if (!right_ok && !m.mult.apply(tensor(b, a)).is_zero()) right_ok = true;
    }
    if (!left_ok || !right_ok) {
      Counterexample cex;
      cex.input = a.describe();
      cex.lhs = left_ok ? "left witness found" : "no b with a*b != 0";
      cex.rhs = right_ok ? "right witness found" : "no c with c*a != 0";
      return CheckResult::fail("nondegeneracy", law, std::move(cex), vecs.size());
    }
  }
  return CheckResult::pass("nondegeneracy", law, vecs.size(),
                           "probe witnesses via local units");
}

}  // namespace

Report verify_mha(const Mha& m, const ProbeSet& probes, const VerifyMhaOptions& opt) {
  Report rep;
  rep.suite = "mha-axioms";
  const Shape one = m.one(), two = m.two(), three = m.three();

  {
    auto p3 = probes.vectors(three);
    std::vector<size_t> s12, s23;
    const size_t b = m.base.size();
    for (size_t j = 1; j <= 2 * b; ++j) s12.push_back(j);
    for (size_t j = b + 1; j <= 3 * b; ++j) s23.push_back(j);
    rep.checks.push_back(check_ops_equal(
        "associativity", "m(m(x)i) = m(i(x)m)", compose(m.mult, leg_apply(m.mult, s12, three)),
        compose(m.mult, leg_apply(m.mult, s23, three)), p3));

    rep.checks.push_back(check_ops_equal(
        "coassociativity", "(T2(x)i)(i(x)T1) = (i(x)T1)(T2(x)i)",
        compose(leg_apply(m.T2, s12, three), leg_apply(m.T1, s23, three)),
        compose(leg_apply(m.T1, s23, three), leg_apply(m.T2, s12, three)), p3));
  }
  rep.checks.push_back(nondegeneracy_check(m, probes, opt));
  rep.checks.push_back(bijectivity_check("t1-bijective", m.T1, m.T1i, probes, opt));
  rep.checks.push_back(bijectivity_check("t2-bijective", m.T2, m.T2i, probes, opt));
  rep.checks.push_back(bijectivity_check("t3-bijective", m.T3, m.T3i, probes, opt));
  rep.checks.push_back(bijectivity_check("t4-bijective", m.T4, m.T4i, probes, opt));

  {
    auto p2 = probes.vectors(two);
    auto eps1 = leg_apply(m.counit, m.slot(1), two);
    auto eps2 = leg_apply(m.counit, m.slot(2), two);
    rep.checks.push_back(
        check_ops_equal("counit-left", "(eps(x)i)T1 = m", compose(eps1, m.T1), m.mult, p2));
    rep.checks.push_back(
        check_ops_equal("counit-right", "(i(x)eps)T2 = m", compose(eps2, m.T2), m.mult, p2));
    rep.checks.push_back(check_ops_equal(
        "antipode-left", "m(S(x)i)T1 = eps(x)i",
        compose({m.mult, leg_apply(m.antipode, m.slot(1), two), m.T1}), eps1, p2));
    rep.checks.push_back(check_ops_equal(
        "antipode-right", "m(i(x)S)T2 = i(x)eps",
        compose({m.mult, leg_apply(m.antipode, m.slot(2), two), m.T2}), eps2, p2));
    rep.checks.push_back(check_ops_equal("counit-multiplicative", "eps(xy) = eps(x)eps(y)",
                                         compose(m.counit, m.mult),
                                         op_tensor(m.counit, m.counit), p2));
  }
  rep.checks.push_back(
      bijectivity_check("antipode-bijective", m.antipode, m.antipode_inv, probes, opt));

  if (m.left_integral) {
    auto p2 = probes.vectors(two);
    auto phi2 = leg_apply(*m.left_integral, m.slot(2), two);
    rep.checks.push_back(check_ops_equal("left-integral-invariance",
                                         "(i(x)phi)((x'(x)1)D(x)) = phi(x)x'",
                                         compose(phi2, m.T2), phi2, p2));
  }
  if (m.right_integral) {
    auto p2 = probes.vectors(two);
    auto psi1 = leg_apply(*m.right_integral, m.slot(1), two);
    rep.checks.push_back(check_ops_equal("right-integral-invariance",
                                         "(psi(x)i)(D(x)(1(x)x')) = psi(x)x'",
                                         compose(psi1, m.T1), psi1, p2));
  }

  if (m.star) {
    const auto& star = *m.star;
    auto p2 = probes.vectors(two);
    {
      std::optional<Counterexample> cex;
      for (const auto& v : p2) {
        Vec lhs = star.apply(m.mult.apply(v));
        Vec rhs(one);
        for (const auto& [w, c] : v.support()) {
          auto [w1, w2] = split_slots(m, w);
          Vec prod = m.mult.apply(
              tensor(star.apply(Vec::basis(one, w2)), star.apply(Vec::basis(one, w1))));
          prod *= c.conj();
          rhs += prod;
        }
        if (lhs != rhs) {
          cex = Counterexample{v.describe(), lhs.describe(), rhs.describe()};
          break;
        }
      }
      if (cex)
        rep.checks.push_back(
            CheckResult::fail("star-antiautomorphism", "(xy)* = y*x*", std::move(*cex)));
      else
        rep.checks.push_back(
            CheckResult::pass("star-antiautomorphism", "(xy)* = y*x*", p2.size()));
    }
    {
      auto p1 = probes.vectors(one);
      std::optional<Counterexample> cex;
      for (const auto& v : p1) {
        Vec twice = star.apply(star.apply(v));
        if (twice != v) {
          cex = Counterexample{v.describe(), twice.describe(), v.describe()};
          break;
        }
      }
      if (cex)
        rep.checks.push_back(CheckResult::fail("star-involutive", "x** = x", std::move(*cex)));
      else
        rep.checks.push_back(CheckResult::pass("star-involutive", "x** = x", p1.size()));
    }
    {
      // D is a *-map, in slice form: T1(x* (x) y) = (T4(y* (x) x))^{*(x)*}.
      std::vector<Word> words;
      auto dim2 = shape_dimension(two);
      if (dim2 && probes.wants_exhaustive(*dim2)) {
        words = enumerate_words(two);
      } else {
        std::mt19937_64 rng(probes.seed);
        for (size_t i = 0; i < probes.count; ++i) words.push_back(random_word(two, rng));
      }
      std::optional<Counterexample> cex;
      for (const auto& w : words) {
        auto [wx, wy] = split_slots(m, w);
        Vec lhs = m.T1.apply(tensor(star.apply(Vec::basis(one, wx)), Vec::basis(one, wy)));
        Vec t4 = m.T4.apply(tensor(star.apply(Vec::basis(one, wy)), Vec::basis(one, wx)));
        Vec rhs(two);
        for (const auto& [tw, c] : t4.support()) {
          auto [t1w, t2w] = split_slots(m, tw);
          Vec term = tensor(star.apply(Vec::basis(one, t1w)), star.apply(Vec::basis(one, t2w)));
          term *= c.conj();
          rhs += term;
        }
        if (lhs != rhs) {
          cex = Counterexample{format_word(two, w), lhs.describe(), rhs.describe()};
          break;
        }
      }
      if (cex)
        rep.checks.push_back(CheckResult::fail("star-coproduct-compat",
                                               "D(x*) = D(x)* in slice form", std::move(*cex)));
      else
        rep.checks.push_back(CheckResult::pass("star-coproduct-compat",
                                               "D(x*) = D(x)* in slice form", words.size()));
    }
  }

  // Structural facts for the two basic families.
  if (m.base.size() == 1 && m.base[0].kind == BasisKind::Delta) {
    auto p2 = probes.vectors(two);
    rep.checks.push_back(
        check_ops_equal("commutativity", "m = m.flip", m.mult, m.mult_flipped(), p2));
  }
  if (m.base.size() == 1 && m.base[0].kind == BasisKind::GroupLike) {
    const auto& g = m.base[0].group;
    LinOp lhs1("T1-grouplike", two, two, [g, two](const Word& w) {
      return Vec::basis(two, {w[0], g->mul(w[0], w[1])});
    });
    LinOp lhs2("T2-grouplike", two, two, [g, two](const Word& w) {
      return Vec::basis(two, {g->mul(w[0], w[1]), w[1]});
    });
    auto p2 = probes.vectors(two);
    auto r1 = check_ops_equal("cocommutativity", "T1(h(x)b) = h(x)hb and T2(b(x)h) = bh(x)h",
                              m.T1, lhs1, p2);
    if (r1.status == CheckStatus::Pass)
      r1 = check_ops_equal("cocommutativity", "T1(h(x)b) = h(x)hb and T2(b(x)h) = bh(x)h", m.T2,
                           lhs2, p2);
    rep.checks.push_back(std::move(r1));
  }

  return rep;
}

}  // namespace bicross
