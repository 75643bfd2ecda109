#include "bicross/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bicross {

GroupElement Group::sample(std::mt19937_64& rng) const {
  const auto* e = enumeration();
  if (!e) throw GroupError("sample: no enumeration and no sampler for " + name());
  std::uniform_int_distribution<size_t> d(0, e->size() - 1);
  return (*e)[d(rng)];
}

GroupElement::Perm perm_compose(const GroupElement::Perm& p, const GroupElement::Perm& q) {
  GroupElement::Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

GroupElement::Perm perm_inverse(const GroupElement::Perm& p) {
  GroupElement::Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<uint8_t>(x);
  return r;
}

std::string perm_to_cycles(const GroupElement::Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += '(';
    size_t y = x;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(y + 1);
      seen[y] = true;
      y = p[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

std::optional<GroupElement::Perm> perm_from_cycles(const std::string& text, size_t degree) {
  GroupElement::Perm p(degree);
  for (size_t x = 0; x < degree; ++x) p[x] = static_cast<uint8_t>(x);
  if (text == "e" || text == "()") return p;
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') return std::nullopt;
    ++pos;
    std::vector<size_t> cycle;
    while (pos < text.size() && text[pos] != ')') {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) return std::nullopt;
      size_t point = std::stoul(text.substr(start, pos - start));
      if (point < 1 || point > degree) return std::nullopt;
      cycle.push_back(point - 1);
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) return std::nullopt;
    ++pos;  // ')'
    if (cycle.size() < 2) return std::nullopt;
    // Apply the cycle on top of what we have: new = cycle * old.
    GroupElement::Perm c(degree);
    for (size_t x = 0; x < degree; ++x) c[x] = static_cast<uint8_t>(x);
    for (size_t i = 0; i < cycle.size(); ++i)
      c[cycle[i]] = static_cast<uint8_t>(cycle[(i + 1) % cycle.size()]);
    p = perm_compose(p, c);
  }
  return p;
}

namespace {

class TableGroup final : public Group {
 public:
  TableGroup(std::string name, std::vector<std::vector<uint32_t>> table,
             std::vector<std::string> labels)
      : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
    const size_t n = table_.size();
    if (n == 0) throw GroupError("table group must be nonempty");
    for (const auto& row : table_) {
      if (row.size() != n) throw GroupError("table group: table is not square");
      for (uint32_t v : row)
        if (v >= n) throw GroupError("table group: index out of range");
    }
    // Locate the two-sided identity.
    std::optional<uint32_t> id;
    for (uint32_t e = 0; e < n; ++e) {
      bool ok = true;
      for (uint32_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) {
        id = e;
        break;
      }
    }
    if (!id) throw GroupError("table group: no identity element");
    id_ = *id;
    inv_.assign(n, n);
    for (uint32_t x = 0; x < n; ++x) {
      for (uint32_t y = 0; y < n; ++y) {
        if (table_[x][y] == id_ && table_[y][x] == id_) {
          inv_[x] = y;
          break;
        }
      }
      if (inv_[x] == n) throw GroupError("table group: element without inverse");
    }
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b)
        for (uint32_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw GroupError("table group: multiplication is not associative");
    elems_.reserve(n);
    for (uint32_t x = 0; x < n; ++x) elems_.emplace_back(x);
  }

  std::string name() const override { return name_; }
  GroupElement identity() const override { return GroupElement(id_); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return GroupElement(table_[a.table_index()][b.table_index()]);
  }
  GroupElement inv(const GroupElement& a) const override {
    return GroupElement(inv_[a.table_index()]);
  }
  bool contains(const GroupElement& a) const override {
    return a.is_table() && a.table_index() < table_.size();
  }
  const std::vector<GroupElement>* enumeration() const override { return &elems_; }

  std::string format_element(const GroupElement& a) const override {
    uint32_t i = a.table_index();
    if (i < labels_.size() && !labels_[i].empty()) return labels_[i];
    return std::to_string(i);
  }
  std::optional<GroupElement> parse_element(const std::string& text) const override {
    for (uint32_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == text) return GroupElement(i);
    try {
      size_t used = 0;
      unsigned long v = std::stoul(text, &used);
      if (used == text.size() && v < table_.size())
        return GroupElement(static_cast<uint32_t>(v));
    } catch (...) {
    }
    return std::nullopt;
  }

 private:
  std::string name_;
  std::vector<std::vector<uint32_t>> table_;
  std::vector<std::string> labels_;
  std::vector<uint32_t> inv_;
  std::vector<GroupElement> elems_;
  uint32_t id_ = 0;
};

class PermGroup final : public Group {
 public:
  PermGroup(std::string name, size_t degree, std::vector<GroupElement::Perm> gens)
      : name_(std::move(name)), degree_(degree) {
    if (degree_ == 0 || degree_ > 32) throw GroupError("permutation degree out of range");
    GroupElement::Perm id(degree_);
    for (size_t x = 0; x < degree_; ++x) id[x] = static_cast<uint8_t>(x);
    std::set<GroupElement::Perm> closure{id};
    std::vector<GroupElement::Perm> frontier{id};
    for (const auto& g : gens)
      if (g.size() != degree_) throw GroupError("generator degree mismatch");
    while (!frontier.empty()) {
      std::vector<GroupElement::Perm> next;
      for (const auto& p : frontier) {
        for (const auto& g : gens) {
          auto q = perm_compose(g, p);
          if (closure.insert(q).second) next.push_back(q);
        }
      }
      frontier = std::move(next);
      if (closure.size() > 200000) throw GroupError("permutation group too large");
    }
    for (const auto& p : closure) elems_.emplace_back(p);
    for (size_t i = 0; i < elems_.size(); ++i) index_[elems_[i].perm()] = i;
  }

  std::string name() const override { return name_; }
  GroupElement identity() const override {
    GroupElement::Perm id(degree_);
    for (size_t x = 0; x < degree_; ++x) id[x] = static_cast<uint8_t>(x);
    return GroupElement(std::move(id));
  }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return GroupElement(perm_compose(a.perm(), b.perm()));
  }
  GroupElement inv(const GroupElement& a) const override {
    return GroupElement(perm_inverse(a.perm()));
  }
  bool contains(const GroupElement& a) const override {
    return a.is_perm() && index_.count(a.perm()) != 0;
  }
  const std::vector<GroupElement>* enumeration() const override { return &elems_; }

  std::string format_element(const GroupElement& a) const override {
    return perm_to_cycles(a.perm());
  }
  std::optional<GroupElement> parse_element(const std::string& text) const override {
    auto p = perm_from_cycles(text, degree_);
    if (!p || !index_.count(*p)) return std::nullopt;
    return GroupElement(std::move(*p));
  }

 private:
  std::string name_;
  size_t degree_;
  std::vector<GroupElement> elems_;
  std::map<GroupElement::Perm, size_t> index_;
};

class IntegerGroup final : public Group {
 public:
  explicit IntegerGroup(std::string name) : name_(std::move(name)) {}

  std::string name() const override { return name_; }
  GroupElement identity() const override { return GroupElement(Rat(0)); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return GroupElement(a.rat() + b.rat());
  }
  GroupElement inv(const GroupElement& a) const override { return GroupElement(-a.rat()); }
  bool contains(const GroupElement& a) const override {
    return a.is_rat() && denominator(a.rat()) == 1;
  }
  std::string format_element(const GroupElement& a) const override {
    std::ostringstream os;
    os << numerator(a.rat());
    return os.str();
  }
  std::optional<GroupElement> parse_element(const std::string& text) const override {
    auto s = parse_scalar(text);
    if (!s || !s->is_real() || denominator(s->re) != 1) return std::nullopt;
    return GroupElement(s->re);
  }
  GroupElement sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> d(-20, 20);
    return GroupElement(Rat(d(rng)));
  }

 private:
  std::string name_;
};

bool denominator_divides_power(const Rat& r, unsigned m) {
  Int d = denominator(r);
  if (d == 1) return true;
  if (m < 2) return false;
  while (d > 1) {
    if (d % m != 0) {
      // d may still divide a power of m when m is composite; strip common
      // prime content instead of requiring divisibility by m itself.
      Int g = boost::multiprecision::gcd(d, Int(m));
      if (g == 1) return false;
      d /= g;
      continue;
    }
    d /= m;
  }
  return true;
}

class DyadicGroup final : public Group {
 public:
  DyadicGroup(unsigned m, std::string name) : m_(m), name_(std::move(name)) {
    if (m_ < 2) throw GroupError("Z[1/m] requires m >= 2");
    if (name_.empty()) name_ = "Z[1/" + std::to_string(m_) + "]";
  }

  std::string name() const override { return name_; }
  GroupElement identity() const override { return GroupElement(Rat(0)); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return GroupElement(a.rat() + b.rat());
  }
  GroupElement inv(const GroupElement& a) const override { return GroupElement(-a.rat()); }
  bool contains(const GroupElement& a) const override {
    return a.is_rat() && denominator_divides_power(a.rat(), m_);
  }
  std::string format_element(const GroupElement& a) const override {
    std::ostringstream os;
    os << numerator(a.rat());
    if (denominator(a.rat()) != 1) os << '/' << denominator(a.rat());
    return os.str();
  }
  std::optional<GroupElement> parse_element(const std::string& text) const override {
    auto s = parse_scalar(text);
    if (!s || !s->is_real() || !denominator_divides_power(s->re, m_)) return std::nullopt;
    return GroupElement(s->re);
  }
  GroupElement sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> num(-400, 400);
    std::uniform_int_distribution<int> exp(0, 4);
    Rat den(1);
    for (int i = exp(rng); i > 0; --i) den *= m_;
    return GroupElement(Rat(num(rng)) / den);
  }

 private:
  unsigned m_;
  std::string name_;
};

Rat pow_rat(unsigned m, const Int& n) {
  Rat out(1);
  Int e = n >= 0 ? n : Int(-n);
  Rat base(m);
  while (e > 0) {
    if (e % 2 == 1) out *= base;
    base *= base;
    e /= 2;
  }
  if (n < 0) out = Rat(1) / out;
  return out;
}

class SemidirectGroup final : public Group {
 public:
  SemidirectGroup(unsigned m, std::string name) : m_(m), name_(std::move(name)) {
    if (m_ < 2) throw GroupError("Z[1/m] x| Z requires m >= 2");
    if (name_.empty()) name_ = "Z[1/" + std::to_string(m_) + "]x|Z";
  }

  std::string name() const override { return name_; }
  GroupElement identity() const override { return GroupElement(SemiElem{Rat(0), Int(0)}); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    const auto& x = a.semi();
    const auto& y = b.semi();
    return GroupElement(SemiElem{x.k + pow_rat(m_, x.n) * y.k, x.n + y.n});
  }
  GroupElement inv(const GroupElement& a) const override {
    const auto& x = a.semi();
    return GroupElement(SemiElem{-pow_rat(m_, -x.n) * x.k, -x.n});
  }
  bool contains(const GroupElement& a) const override {
    return a.is_semi() && denominator_divides_power(a.semi().k, m_);
  }
  std::string format_element(const GroupElement& a) const override {
    const auto& x = a.semi();
    std::ostringstream os;
    os << numerator(x.k);
    if (denominator(x.k) != 1) os << '/' << denominator(x.k);
    os << '|' << x.n;
    return os.str();
  }
  std::optional<GroupElement> parse_element(const std::string& text) const override {
    auto bar = text.find('|');
    if (bar == std::string::npos) return std::nullopt;
    auto ks = parse_scalar(text.substr(0, bar));
    auto ns = parse_scalar(text.substr(bar + 1));
    if (!ks || !ns || !ks->is_real() || !ns->is_real()) return std::nullopt;
    if (denominator(ns->re) != 1) return std::nullopt;
    if (!denominator_divides_power(ks->re, m_)) return std::nullopt;
    return GroupElement(SemiElem{ks->re, numerator(ns->re)});
  }
  GroupElement sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> num(-400, 400);
    std::uniform_int_distribution<int> exp(0, 4);
    std::uniform_int_distribution<int> zn(-6, 6);
    Rat den(1);
    for (int i = exp(rng); i > 0; --i) den *= m_;
    return GroupElement(SemiElem{Rat(num(rng)) / den, Int(zn(rng))});
  }

 private:
  unsigned m_;
  std::string name_;
};

class Subgroup final : public Group {
 public:
  Subgroup(std::string name, GroupPtr parent, std::vector<GroupElement> elements)
      : name_(std::move(name)), parent_(std::move(parent)) {
    std::set<GroupElement> set(elements.begin(), elements.end());
    for (const auto& a : set) {
      if (!parent_->contains(a)) throw GroupError(name_ + ": element not in parent group");
      if (!set.count(parent_->inv(a))) throw GroupError(name_ + ": not closed under inverse");
      for (const auto& b : set)
        if (!set.count(parent_->mul(a, b))) throw GroupError(name_ + ": not closed under product");
    }
    if (!set.count(parent_->identity())) throw GroupError(name_ + ": missing identity");
    elems_.assign(set.begin(), set.end());
    set_ = std::move(set);
  }

  std::string name() const override { return name_; }
  GroupElement identity() const override { return parent_->identity(); }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override {
    return parent_->mul(a, b);
  }
  GroupElement inv(const GroupElement& a) const override { return parent_->inv(a); }
  bool contains(const GroupElement& a) const override { return set_.count(a) != 0; }
  const std::vector<GroupElement>* enumeration() const override { return &elems_; }
  std::string format_element(const GroupElement& a) const override {
    return parent_->format_element(a);
  }
  std::optional<GroupElement> parse_element(const std::string& text) const override {
    auto e = parent_->parse_element(text);
    if (!e || !set_.count(*e)) return std::nullopt;
    return e;
  }

 private:
  std::string name_;
  GroupPtr parent_;
  std::vector<GroupElement> elems_;
  std::set<GroupElement> set_;
};

}  // namespace

GroupPtr make_table_group(std::string name, std::vector<std::vector<uint32_t>> table,
                          std::vector<std::string> labels) {
  return std::make_shared<TableGroup>(std::move(name), std::move(table), std::move(labels));
}

GroupPtr make_perm_group(std::string name, size_t degree,
                         std::vector<GroupElement::Perm> generators) {
  return std::make_shared<PermGroup>(std::move(name), degree, std::move(generators));
}

GroupPtr make_integer_group(std::string name) {
  return std::make_shared<IntegerGroup>(std::move(name));
}

GroupPtr make_dyadic_group(unsigned m, std::string name) {
  return std::make_shared<DyadicGroup>(m, std::move(name));
}

GroupPtr make_semidirect_group(unsigned m, std::string name) {
  return std::make_shared<SemidirectGroup>(m, std::move(name));
}

GroupPtr make_subgroup(std::string name, GroupPtr parent, std::vector<GroupElement> elements) {
  return std::make_shared<Subgroup>(std::move(name), std::move(parent), std::move(elements));
}

GroupPtr make_subgroup_generated(std::string name, GroupPtr parent,
                                 std::vector<GroupElement> generators) {
  std::set<GroupElement> closure{parent->identity()};
  std::vector<GroupElement> frontier{parent->identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        auto q = parent->mul(g, p);
        if (closure.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
    if (closure.size() > 200000) throw GroupError(name + ": generated subgroup too large");
  }
  return make_subgroup(std::move(name), std::move(parent),
                       std::vector<GroupElement>(closure.begin(), closure.end()));
}

std::pair<GroupElement, GroupElement> factorize(const Group& k_sub, const Group& h_sub,
                                                const Group& parent, const GroupElement& g) {
  const auto* ks = k_sub.enumeration();
  if (!ks) throw GroupError("factorize requires an enumerable K");
  std::optional<std::pair<GroupElement, GroupElement>> found;
  for (const auto& k : *ks) {
    GroupElement h = parent.mul(parent.inv(k), g);
    if (!h_sub.contains(h)) continue;
    if (found)
      throw AmbiguousFactorization("two factorizations of " + parent.format_element(g) +
                                   " (K and H intersect nontrivially)");
    found = {k, h};
  }
  if (!found)
    throw NoFactorization("no factorization of " + parent.format_element(g) +
                          " as k*h (KH does not cover the group)");
  return *found;
}

}  // namespace bicross
