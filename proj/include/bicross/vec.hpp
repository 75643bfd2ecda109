#pragma once

#include "bicross/group.hpp"
#include "bicross/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace bicross {

/// Which basis family a tensor leg indexes: group-like basis {h} of the
/// group algebra CH, or delta basis {delta_k} of the function algebra F(K).
enum class BasisKind : uint8_t { GroupLike, Delta };

struct LegType {
  BasisKind kind;
  GroupPtr group;

  friend bool operator==(const LegType& a, const LegType& b) {
    return a.kind == b.kind && a.group == b.group;
  }
  std::string describe() const;
};

/// The shape of a tensor-word space: one leg type per word position. The
/// empty shape is the scalar space (words of length zero).
using Shape = std::vector<LegType>;

Shape shape_concat(const Shape& a, const Shape& b);
std::string shape_describe(const Shape& s);
bool shape_equal(const Shape& a, const Shape& b);

/// Number of basis words, when every leg's group is finite.
std::optional<size_t> shape_dimension(const Shape& s);
bool shape_enumerable(const Shape& s);

/// One basis word: a group element per leg. Tags live in the ambient Shape.
using Word = std::vector<GroupElement>;

/// All basis words of an enumerable shape, in a stable lexicographic order.
std::vector<Word> enumerate_words(const Shape& s);

/// Word -> position in enumerate_words order.
size_t word_index(const Shape& s, const Word& w);

/// Inverse of word_index without materializing the whole enumeration.
Word word_at(const Shape& s, size_t index);

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finitely supported formal linear combination of basis words with Scalar
/// coefficients. The support map is canonical: no zero coefficient is ever
/// stored, so equality is map equality.
class Vec {
 public:
  Vec() = default;
  explicit Vec(Shape shape) : shape_(std::move(shape)) {}

  static Vec basis(Shape shape, Word w, Scalar c = Scalar::one());
  static Vec scalar(Scalar c);  // element of the empty-shape space

  const Shape& shape() const { return shape_; }
  const std::map<Word, Scalar>& support() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  /// Coefficient of w (zero when absent).
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& c);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& c, Vec v) { return v *= c; }
  friend bool operator==(const Vec& a, const Vec& b) {
    return shape_equal(a.shape_, b.shape_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

  /// For the empty shape: the single coefficient (zero when empty).
  Scalar as_scalar() const;

  /// Coefficient-wise complex conjugation.
  Vec conj_coeffs() const;

  std::string describe() const;

 private:
  Shape shape_;
  std::map<Word, Scalar> terms_;
};

Vec tensor(const Vec& v, const Vec& w);
std::string format_word(const Shape& s, const Word& w);

}  // namespace bicross
