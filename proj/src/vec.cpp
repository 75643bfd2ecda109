#include "bicross/vec.hpp"

#include <sstream>

namespace bicross {

std::string LegType::describe() const {
  return (kind == BasisKind::GroupLike ? "C[" : "F[") + group->name() + "]";
}

Shape shape_concat(const Shape& a, const Shape& b) {
  Shape out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string shape_describe(const Shape& s) {
  if (s.empty()) return "scalar";
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += " (x) ";
    out += s[i].describe();
  }
  return out;
}

bool shape_equal(const Shape& a, const Shape& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::optional<size_t> shape_dimension(const Shape& s) {
  size_t dim = 1;
  for (const auto& leg : s) {
    const auto* e = leg.group->enumeration();
    if (!e) return std::nullopt;
    dim *= e->size();
  }
  return dim;
}

bool shape_enumerable(const Shape& s) { return shape_dimension(s).has_value(); }

std::vector<Word> enumerate_words(const Shape& s) {
  std::vector<Word> out;
  auto dim = shape_dimension(s);
  if (!dim) throw ShapeMismatch("enumerate_words: shape is not enumerable");
  out.reserve(*dim);
  Word w(s.size());
  std::vector<size_t> idx(s.size(), 0);
  for (size_t total = 0; total < *dim; ++total) {
    for (size_t i = 0; i < s.size(); ++i) w[i] = (*s[i].group->enumeration())[idx[i]];
    out.push_back(w);
    for (size_t i = s.size(); i-- > 0;) {
      if (++idx[i] < s[i].group->enumeration()->size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

size_t word_index(const Shape& s, const Word& w) {
  size_t index = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    const auto& elems = *s[i].group->enumeration();
    auto it = std::lower_bound(elems.begin(), elems.end(), w[i]);
    if (it == elems.end() || !(*it == w[i]))
      throw ShapeMismatch("word_index: element not in enumeration");
    index = index * elems.size() + static_cast<size_t>(it - elems.begin());
  }
  return index;
}

Word word_at(const Shape& s, size_t index) {
  Word w(s.size());
  for (size_t i = s.size(); i-- > 0;) {
    const auto& elems = *s[i].group->enumeration();
    w[i] = elems[index % elems.size()];
    index /= elems.size();
  }
  return w;
}

Vec Vec::basis(Shape shape, Word w, Scalar c) {
  Vec v(std::move(shape));
  if (w.size() != v.shape_.size()) throw ShapeMismatch("basis word length mismatch");
  v.add_term(std::move(w), c);
  return v;
}

Vec Vec::scalar(Scalar c) {
  Vec v{Shape{}};
  v.add_term(Word{}, c);
  return v;
}

Scalar Vec::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void Vec::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Vec& Vec::operator+=(const Vec& o) {
  if (!shape_equal(shape_, o.shape_)) throw ShapeMismatch("Vec +=: shape mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (!shape_equal(shape_, o.shape_)) throw ShapeMismatch("Vec -=: shape mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Scalar Vec::as_scalar() const {
  if (!shape_.empty()) throw ShapeMismatch("as_scalar on non-scalar shape");
  return terms_.empty() ? Scalar::zero() : terms_.begin()->second;
}

Vec Vec::conj_coeffs() const {
  Vec out(shape_);
  for (const auto& [w, c] : terms_) out.add_term(w, c.conj());
  return out;
}

std::string format_word(const Shape& s, const Word& w) {
  if (w.empty()) return "()";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "(x)";
    const auto& leg = s[i];
    if (leg.kind == BasisKind::Delta) out += "d:";
    out += leg.group->format_element(w[i]);
  }
  return out;
}

std::string Vec::describe() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << format_scalar(c) << ")*" << format_word(shape_, w);
  }
  return os.str();
}

Vec tensor(const Vec& v, const Vec& w) {
  Vec out(shape_concat(v.shape(), w.shape()));
  for (const auto& [a, ca] : v.support()) {
    for (const auto& [b, cb] : w.support()) {
      Word ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      out.add_term(ab, ca * cb);
    }
  }
  return out;
}

}  // namespace bicross
