#pragma once

#include "bicross/vec.hpp"

#include <functional>
#include <memory>

namespace bicross {

struct BadLegIndex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A linear map between tensor-word spaces, held as a closure over its
/// action on basis words and extended linearly. Operators may shrink or
/// grow the word (counit, coproduct); shapes carry the bookkeeping.
class LinOp {
 public:
  using BasisFn = std::function<Vec(const Word&)>;

  LinOp() = default;
  LinOp(std::string label, Shape in, Shape out, BasisFn on_basis);

  const std::string& label() const { return label_; }
  const Shape& in_shape() const { return in_; }
  const Shape& out_shape() const { return out_; }

  Vec apply(const Vec& v) const;
  Vec apply_basis(const Word& w) const { return on_basis_(w); }

  /// Right-to-left factor list when this operator was built by compose();
  /// used to trace intermediates of a failing composed identity.
  const std::vector<LinOp>& factors() const { return factors_; }

 private:
  friend LinOp compose(std::vector<LinOp> chain);
  std::string label_;
  Shape in_, out_;
  BasisFn on_basis_;
  std::vector<LinOp> factors_;
};

LinOp identity_op(const Shape& s);

/// Swap of the two legs of a two-leg shape.
LinOp flip_op(const LegType& a, const LegType& b);

/// Pure leg shuffle: output leg i is input leg src_of_dst[i] (1-based).
LinOp permute_op(const Shape& in, const std::vector<size_t>& src_of_dst);

/// g after f. Shapes must chain.
LinOp compose(const LinOp& g, const LinOp& f);

/// Composition of a whole chain, applied right to left (chain.back() first),
/// remembering the factors for trace output.
LinOp compose(std::vector<LinOp> chain);

/// F (x) G on the concatenated shapes.
LinOp op_tensor(const LinOp& f, const LinOp& g);

/// F acting on the selected word positions (1-based), identity elsewhere.
/// Output legs land at the selected positions in the order they were
/// listed; when F shrinks the word the leftover selected positions vanish,
/// and when it grows the extra legs are inserted after the last one.
LinOp leg_apply(const LinOp& f, const std::vector<size_t>& legs, const Shape& ambient);

/// Convenience: apply to a vector without building the rebound operator.
Vec leg_apply(const LinOp& f, const std::vector<size_t>& legs, const Vec& v);

LinOp scale_op(const LinOp& f, const Scalar& c);

/// Materializes F on the enumerated input basis and inverts the matrix.
/// Throws NotInvertible when F is singular (a violated bijectivity claim).
struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
LinOp invert(const LinOp& f);

/// First basis word / probe vector where F and G disagree, if any.
struct OpMismatch {
  Vec input;
  Vec lhs;
  Vec rhs;
};
std::optional<OpMismatch> op_mismatch(const LinOp& f, const LinOp& g,
                                      const std::vector<Vec>& probes);

}  // namespace bicross
