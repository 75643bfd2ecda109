#pragma once

#include "bicross/linop.hpp"
#include "bicross/probes.hpp"
#include "bicross/report.hpp"

#include <memory>

namespace bicross {

/// Conjugate-linear basis map: apply(v) = sum conj(c) * on_basis(w) over the
/// support of v. on_basis(w) is the image of the basis word w itself.
struct ConjLinMap {
  std::string label;
  Shape in, out;
  std::function<Vec(const Word&)> on_basis;

  Vec apply(const Vec& v) const;
};

/// Operational form of a regular multiplier Hopf algebra: the product, the
/// four canonical one-sided coproduct slices with their closed-form
/// inverses, counit, antipode, and optional unit / total coproduct /
/// integrals / involution. A coproduct value is never stored; it exists
/// only through these maps. One element of the algebra occupies one tensor
/// slot = `base` (a single leg for the two basic families, two legs for a
/// bicrossproduct).
struct Mha {
  std::string name;
  Shape base;

  LinOp mult;  // two() -> one()
  std::optional<Vec> unit;

  // T1(a(x)b) = D(a)(1(x)b)      T2(a(x)b) = (a(x)1)D(b)
  // T3(a(x)b) = D(a)(b(x)1)      T4(a(x)b) = (1(x)a)D(b)
  LinOp T1, T2, T3, T4;
  LinOp T1i, T2i, T3i, T4i;

  LinOp counit;  // one() -> scalar
  LinOp antipode, antipode_inv;

  std::optional<LinOp> coproduct;  // one() -> two(), when total
  std::optional<LinOp> left_integral, right_integral;  // one() -> scalar
  std::optional<ConjLinMap> star;

  /// Constructive local units: local_unit_left(v) * v = v and
  /// v * local_unit_right(v) = v on the span of v's support. Total on the
  /// families (the global unit when present, a delta sum otherwise).
  using LocalUnitFn = std::function<Vec(const Vec&)>;
  std::optional<LocalUnitFn> local_unit_left, local_unit_right;

  Shape one() const { return base; }
  Shape two() const { return shape_concat(base, base); }
  Shape three() const { return shape_concat(two(), base); }
  Shape slots(size_t n) const;

  /// 1-based leg indices of tensor slot `i` inside an n-slot word.
  std::vector<size_t> slot(size_t i) const;

  bool finite() const { return shape_enumerable(base); }
  size_t dim() const { return *shape_dimension(base); }

  /// mult with the factors swapped.
  LinOp mult_flipped() const;

  Vec basis1(Word w) const { return Vec::basis(base, std::move(w)); }
};

using MhaPtr = std::shared_ptr<const Mha>;

/// Group algebra CH: basis {h}, D(h) = h(x)h, S(h) = h^-1, eps(h) = 1,
/// two-sided integral = coefficient of e, h* = h^-1.
MhaPtr group_algebra(GroupPtr H);

/// Finite-support function algebra F(K): basis {delta_k}, pointwise
/// product, unit only when K is finite, S(delta_k) = delta_{k^-1},
/// eps(delta_k) = [k = e], integrals = coefficient sum, delta_k* = delta_k.
MhaPtr function_algebra(GroupPtr K);

struct VerifyMhaOptions {
  /// Materialize T1/T2/T3/T4/S on the enumerated basis and check matrix
  /// rank in addition to the closed-form inverses. Needs finite base.
  bool matrix_bijectivity = true;
  /// Largest matrix dimension that will be materialized.
  size_t matrix_limit = 8000;
};

/// Pass/fail per axiom: associativity, nondegeneracy, canonical-map
/// bijectivity, coassociativity (canonical form), counit laws, antipode
/// laws, regularity, counit multiplicativity, integral invariance and
/// *-compatibility when present.
Report verify_mha(const Mha& m, const ProbeSet& probes, const VerifyMhaOptions& opt = {});

/// Left multiplication x -> m*x and right multiplication x -> x*m by a
/// fixed element; multiplier equality is agreement of both on probes.
struct Multiplier {
  LinOp left_apply;
  LinOp right_apply;
};
Multiplier multiplier_of_element(const Mha& m, const Vec& v);

/// Tensor-slot split of a word of m.two() into the two constituent words.
std::pair<Word, Word> split_slots(const Mha& m, const Word& w);

}  // namespace bicross
