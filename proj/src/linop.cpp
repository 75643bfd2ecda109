#include "bicross/linop.hpp"

#include "bicross/matrix.hpp"

#include <algorithm>

namespace bicross {

LinOp::LinOp(std::string label, Shape in, Shape out, BasisFn on_basis)
    : label_(std::move(label)), in_(std::move(in)), out_(std::move(out)),
      on_basis_(std::move(on_basis)) {}

Vec LinOp::apply(const Vec& v) const {
  if (!shape_equal(v.shape(), in_))
    throw ShapeMismatch("apply " + label_ + ": expected " + shape_describe(in_) + ", got " +
                        shape_describe(v.shape()));
  Vec out(out_);
  for (const auto& [w, c] : v.support()) {
    Vec img = on_basis_(w);
    img *= c;
    out += img;
  }
  return out;
}

LinOp identity_op(const Shape& s) {
  return LinOp("id", s, s, [s](const Word& w) { return Vec::basis(s, w); });
}

LinOp flip_op(const LegType& a, const LegType& b) {
  Shape in{a, b};
  Shape out{b, a};
  return LinOp("flip", in, out,
               [out](const Word& w) { return Vec::basis(out, Word{w[1], w[0]}); });
}

LinOp permute_op(const Shape& in, const std::vector<size_t>& src_of_dst) {
  if (src_of_dst.size() != in.size()) throw BadLegIndex("permute_op: wrong index count");
  Shape out;
  std::vector<size_t> src0(src_of_dst.size());
  for (size_t i = 0; i < src_of_dst.size(); ++i) {
    if (src_of_dst[i] < 1 || src_of_dst[i] > in.size())
      throw BadLegIndex("permute_op: index out of range");
    src0[i] = src_of_dst[i] - 1;
    out.push_back(in[src0[i]]);
  }
  return LinOp("perm", in, out, [out, src0](const Word& w) {
    Word nw(src0.size());
    for (size_t i = 0; i < src0.size(); ++i) nw[i] = w[src0[i]];
    return Vec::basis(out, nw);
  });
}

LinOp compose(const LinOp& g, const LinOp& f) { return compose(std::vector<LinOp>{g, f}); }

LinOp compose(std::vector<LinOp> chain) {
  if (chain.empty()) throw ShapeMismatch("compose: empty chain");
  // Flatten nested compositions so traces show elementary factors.
  std::vector<LinOp> flat;
  for (auto& op : chain) {
    if (!op.factors().empty())
      flat.insert(flat.end(), op.factors().begin(), op.factors().end());
    else
      flat.push_back(std::move(op));
  }
  for (size_t i = 0; i + 1 < flat.size(); ++i) {
    if (!shape_equal(flat[i].in_shape(), flat[i + 1].out_shape()))
      throw ShapeMismatch("compose: " + flat[i].label() + " after " + flat[i + 1].label() +
                          ": shapes do not chain");
  }
  std::string label;
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i) label += " . ";
    label += flat[i].label();
  }
  Shape in = flat.back().in_shape();
  Shape out = flat.front().out_shape();
  auto factors = flat;
  LinOp op(label, std::move(in), out,
           [flat = std::move(flat)](const Word& w) {
             Vec v = flat.back().apply_basis(w);
             for (size_t i = flat.size() - 1; i-- > 0;) v = flat[i].apply(v);
             return v;
           });
  op.factors_ = std::move(factors);
  return op;
}

LinOp op_tensor(const LinOp& f, const LinOp& g) {
  Shape in = shape_concat(f.in_shape(), g.in_shape());
  Shape out = shape_concat(f.out_shape(), g.out_shape());
  size_t split = f.in_shape().size();
  return LinOp(f.label() + "(x)" + g.label(), in, out, [f, g, split](const Word& w) {
    Word wf(w.begin(), w.begin() + split);
    Word wg(w.begin() + split, w.end());
    return tensor(f.apply_basis(wf), g.apply_basis(wg));
  });
}

LinOp leg_apply(const LinOp& f, const std::vector<size_t>& legs, const Shape& ambient) {
  const size_t nin = f.in_shape().size();
  const size_t nout = f.out_shape().size();
  if (legs.size() != nin) throw BadLegIndex("leg_apply: leg count != operator input arity");
  std::vector<bool> selected(ambient.size(), false);
  for (size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < 1 || legs[i] > ambient.size()) throw BadLegIndex("leg index out of range");
    if (selected[legs[i] - 1]) throw BadLegIndex("duplicate leg index");
    selected[legs[i] - 1] = true;
    if (!(ambient[legs[i] - 1] == f.in_shape()[i]))
      throw ShapeMismatch("leg_apply " + f.label() + ": leg " + std::to_string(legs[i]) +
                          " has the wrong type");
  }

  // The output word is the ambient word with the selected positions
  // replaced, in listed order, by the operator's output legs. A shrinking
  // operator leaves holes that are dropped; a growing one inserts its extra
  // legs after the last replaced position.
  struct Slot {
    bool from_op;    // output leg of f vs passthrough
    size_t index;    // index into f's output word / ambient word
  };
  std::vector<Slot> layout;
  size_t placed = 0;
  std::vector<std::optional<size_t>> at_position(ambient.size());
  for (size_t i = 0; i < std::min(nin, nout); ++i) at_position[legs[i] - 1] = i;
  for (size_t pos = 0; pos < ambient.size(); ++pos) {
    if (!selected[pos]) {
      layout.push_back({false, pos});
      continue;
    }
    if (at_position[pos]) {
      layout.push_back({true, *at_position[pos]});
      ++placed;
      if (nout > nin && *at_position[pos] == nin - 1)
        for (size_t extra = nin; extra < nout; ++extra) layout.push_back({true, extra});
    }
    // Shrunk-away positions contribute nothing.
  }
  if (nin == 0) {
    // Word-growing from nothing is not used; guard anyway.
    for (size_t extra = 0; extra < nout; ++extra) layout.push_back({true, extra});
  }
  (void)placed;

  Shape out_shape;
  out_shape.reserve(layout.size());
  for (const auto& slot : layout)
    out_shape.push_back(slot.from_op ? f.out_shape()[slot.index] : ambient[slot.index]);

  std::string label = f.label() + "_{";
  for (size_t i = 0; i < legs.size(); ++i) label += (i ? "," : "") + std::to_string(legs[i]);
  label += "}";

  std::vector<size_t> legs0(legs.size());
  for (size_t i = 0; i < legs.size(); ++i) legs0[i] = legs[i] - 1;

  return LinOp(label, ambient, out_shape,
               [f, legs0, layout, out_shape](const Word& w) {
                 Word sel(legs0.size());
                 for (size_t i = 0; i < legs0.size(); ++i) sel[i] = w[legs0[i]];
                 Vec img = f.apply_basis(sel);
                 Vec out(out_shape);
                 for (const auto& [iw, c] : img.support()) {
                   Word nw(layout.size());
                   for (size_t s = 0; s < layout.size(); ++s)
                     nw[s] = layout[s].from_op ? iw[layout[s].index] : w[layout[s].index];
                   out.add_term(nw, c);
                 }
                 return out;
               });
}

Vec leg_apply(const LinOp& f, const std::vector<size_t>& legs, const Vec& v) {
  return leg_apply(f, legs, v.shape()).apply(v);
}

LinOp scale_op(const LinOp& f, const Scalar& c) {
  return LinOp("(" + format_scalar(c) + ")*" + f.label(), f.in_shape(), f.out_shape(),
               [f, c](const Word& w) {
                 Vec v = f.apply_basis(w);
                 v *= c;
                 return v;
               });
}

LinOp invert(const LinOp& f) {
  if (!shape_enumerable(f.in_shape()) || !shape_enumerable(f.out_shape()))
    throw NotInvertible("invert " + f.label() + ": shape not enumerable");
  SparseMatrix m = materialize(f);
  auto inv = m.inverse();
  if (!inv) throw NotInvertible("invert " + f.label() + ": singular matrix");
  auto mat = std::make_shared<SparseMatrix>(std::move(*inv));
  Shape in = f.out_shape();
  Shape out = f.in_shape();
  auto words = std::make_shared<std::vector<Word>>(enumerate_words(out));
  return LinOp(f.label() + "^-1", in, out, [mat, words, in, out](const Word& w) {
    size_t col = word_index(in, w);
    Vec v(out);
    for (const auto& [row, c] : mat->column(col)) v.add_term((*words)[row], c);
    return v;
  });
}

std::optional<OpMismatch> op_mismatch(const LinOp& f, const LinOp& g,
                                      const std::vector<Vec>& probes) {
  for (const auto& p : probes) {
    Vec lhs = f.apply(p);
    Vec rhs = g.apply(p);
    if (lhs != rhs) return OpMismatch{p, std::move(lhs), std::move(rhs)};
  }
  return std::nullopt;
}

}  // namespace bicross
