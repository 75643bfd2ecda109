#include "bicross/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bicross {

Scalar inverse(const Scalar& s) {
  Rat n = s.norm2();
  if (n == 0) throw std::domain_error("Scalar: division by zero");
  return Scalar(s.re / n, -s.im / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= inverse(o); }

namespace {

std::string format_rat(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

// Parses "p" or "p/q" starting at pos; advances pos past the token.
std::optional<Rat> parse_rat(std::string_view t, size_t& pos) {
  size_t start = pos;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
  size_t dstart = pos;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos == dstart) return std::nullopt;
  Int num(std::string(t.substr(start, pos - start)));
  Int den = 1;
  if (pos < t.size() && t[pos] == '/') {
    ++pos;
    size_t qstart = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == qstart) return std::nullopt;
    den = Int(std::string(t.substr(qstart, pos - qstart)));
    if (den == 0) return std::nullopt;
  }
  return Rat(num, den);
}

}  // namespace

std::string format_scalar(const Scalar& s) {
  if (s.im == 0) return format_rat(s.re);
  std::string im_part;
  if (s.im == 1)
    im_part = "i";
  else if (s.im == -1)
    im_part = "-i";
  else
    im_part = format_rat(s.im) + "*i";
  if (s.re == 0) return im_part;
  if (s.im > 0) return format_rat(s.re) + "+" + im_part;
  return format_rat(s.re) + im_part;
}

std::optional<Scalar> parse_scalar(std::string_view t) {
  if (t.empty()) return std::nullopt;
  size_t pos = 0;
  Scalar out;

  auto parse_term = [&](bool first) -> bool {
    // A term is "i", "-i", "+i", "p/q", or "p/q*i".
    int sign = 1;
    size_t save = pos;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -1;
      if (!first) ++pos;  // leading sign belongs to parse_rat when first
    }
    if (pos < t.size() && t[pos] == 'i') {
      if (first && sign == -1) return false;  // handled below via save
      ++pos;
      out.im += Rat(sign);
      return true;
    }
    if (first) pos = save;
    auto r = parse_rat(t, pos);
    if (!r) {
      // allow bare "-i" / "+i" as a first term
      pos = save;
      if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        int s2 = t[pos] == '-' ? -1 : 1;
        if (pos + 1 < t.size() && t[pos + 1] == 'i') {
          pos += 2;
          out.im += Rat(s2);
          return true;
        }
      }
      return false;
    }
    Rat val = first ? *r : Rat(sign) * (sign == -1 ? -*r : *r);
    // parse_rat already consumed the sign character when first; when not
    // first we passed the sign ourselves and parse_rat saw digits only.
    if (!first) val = Rat(sign) * *r;
    if (pos < t.size() && t[pos] == '*') {
      if (pos + 1 >= t.size() || t[pos + 1] != 'i') return false;
      pos += 2;
      out.im += val;
    } else if (pos < t.size() && t[pos] == 'i') {
      ++pos;
      out.im += val;
    } else {
      out.re += val;
    }
    return true;
  };

  if (!parse_term(true)) return std::nullopt;
  while (pos < t.size()) {
    if (t[pos] != '+' && t[pos] != '-') return std::nullopt;
    if (!parse_term(false)) return std::nullopt;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << format_scalar(s);
}

}  // namespace bicross
