#include "bicross/probes.hpp"

namespace bicross {

std::string ProbeSet::describe() const {
  switch (mode) {
    case Mode::Exhaustive:
      return "exhaustive";
    case Mode::Random:
      return "random:" + std::to_string(seed) + ":" + std::to_string(count);
    case Mode::Auto:
      return "auto:" + std::to_string(seed) + ":" + std::to_string(count) + ":" +
             std::to_string(exhaustive_limit);
  }
  return "?";
}

Word random_word(const Shape& shape, std::mt19937_64& rng) {
  Word w;
  w.reserve(shape.size());
  for (const auto& leg : shape) w.push_back(leg.group->sample(rng));
  return w;
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> kind(0, 3);
  for (;;) {
    Scalar s;
    int k = kind(rng);
    if (k != 1) s.re = Rat(num(rng), den(rng));
    if (k != 0) s.im = Rat(num(rng), den(rng));
    if (!s.is_zero()) return s;
  }
}

std::vector<Vec> ProbeSet::vectors(const Shape& shape) const {
  auto dim = shape_dimension(shape);
  if (dim && wants_exhaustive(*dim)) {
    std::vector<Vec> out;
    out.reserve(*dim);
    for (auto& w : enumerate_words(shape)) out.push_back(Vec::basis(shape, std::move(w)));
    return out;
  }
  if (mode == Mode::Exhaustive)
    throw ShapeMismatch("exhaustive probes requested on non-enumerable shape " +
                        shape_describe(shape));
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  out.reserve(count);
  std::uniform_int_distribution<int> nterms(1, 3);
  for (size_t i = 0; i < count; ++i) {
    Vec v(shape);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) v.add_term(random_word(shape, rng), random_scalar(rng));
    if (v.is_zero()) {
      --i;
      continue;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<GroupElement>> ProbeSet::group_tuples(
    const std::vector<GroupPtr>& groups) const {
  size_t dim = 1;
  bool finite = true;
  for (const auto& g : groups) {
    if (!g->finite()) {
      finite = false;
      break;
    }
    dim *= g->order();
  }
  if (finite && wants_exhaustive(dim)) {
    std::vector<std::vector<GroupElement>> out;
    out.reserve(dim);
    std::vector<size_t> idx(groups.size(), 0);
    for (size_t total = 0; total < dim; ++total) {
      std::vector<GroupElement> tup;
      tup.reserve(groups.size());
      for (size_t i = 0; i < groups.size(); ++i)
        tup.push_back((*groups[i]->enumeration())[idx[i]]);
      out.push_back(std::move(tup));
      for (size_t i = groups.size(); i-- > 0;) {
        if (++idx[i] < groups[i]->order()) break;
        idx[i] = 0;
      }
    }
    return out;
  }
  if (mode == Mode::Exhaustive)
    throw ShapeMismatch("exhaustive tuples requested over an infinite group");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<GroupElement>> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    std::vector<GroupElement> tup;
    tup.reserve(groups.size());
    for (const auto& g : groups) tup.push_back(g->sample(rng));
    out.push_back(std::move(tup));
  }
  return out;
}

}  // namespace bicross
