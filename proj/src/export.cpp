#include "bicross/export.hpp"

#include <sstream>

namespace bicross {

namespace {

void export_op(std::ostringstream& os, const Mha& m, const std::string& name,
               const LinOp& op) {
  auto in_words = enumerate_words(op.in_shape());
  os << "op " << name << " " << op.in_shape().size() << " " << op.out_shape().size() << "\n";
  for (size_t i = 0; i < in_words.size(); ++i) {
    Vec img = op.apply_basis(in_words[i]);
    if (img.is_zero()) continue;
    os << "  ";
    // Input as slot indices into the one-slot basis.
    const size_t b = m.base.size();
    for (size_t s = 0; s * b < in_words[i].size(); ++s) {
      Word slot(in_words[i].begin() + s * b, in_words[i].begin() + (s + 1) * b);
      os << (s ? " " : "") << word_index(m.one(), slot);
    }
    os << " ->";
    bool first = true;
    for (const auto& [w, c] : img.support()) {
      os << (first ? " " : " + ") << format_scalar(c) << " *";
      first = false;
      if (w.empty()) {
        os << " ()";
        continue;
      }
      for (size_t s = 0; s * b < w.size(); ++s) {
        Word slot(w.begin() + s * b, w.begin() + (s + 1) * b);
        os << " " << word_index(m.one(), slot);
      }
    }
    os << "\n";
  }
}

}  // namespace

std::string export_structure_constants(const Mha& m) {
  if (!m.finite())
    throw ShapeMismatch("structure-constant export requires a finite basis");
  std::ostringstream os;
  os << "bicross-export 1\n";
  os << "object " << m.name << "\n";
  os << "dim " << m.dim() << "\n";
  os << "basis\n";
  auto words = enumerate_words(m.one());
  for (size_t i = 0; i < words.size(); ++i)
    os << "  " << i << " " << format_word(m.one(), words[i]) << "\n";
  export_op(os, m, "mult", m.mult);
  export_op(os, m, "T1", m.T1);
  export_op(os, m, "T2", m.T2);
  export_op(os, m, "S", m.antipode);
  export_op(os, m, "counit", m.counit);
  os << "end\n";
  return os.str();
}

}  // namespace bicross
