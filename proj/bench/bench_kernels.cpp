// Timing comparison of the OpenMP probe-scan and matrix kernels against
// their serial reference implementations, on the alternating-group
// instance (dim 60, tensor square 3600).

#include "bicross/bicross.hpp"
#include "bicross/matrix.hpp"
#include "bicross/parallel.hpp"

#include <chrono>
#include <iostream>

using namespace bicross;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

MatchedPairModel a5_model() {
  auto G = make_perm_group("A5", 5, {*perm_from_cycles("(1,2,3)", 5),
                                     *perm_from_cycles("(3,4,5)", 5)});
  auto K = make_subgroup_generated(
      "A4", G,
      {GroupElement(*perm_from_cycles("(1,2,3)", 5)),
       GroupElement(*perm_from_cycles("(2,3,4)", 5))});
  auto H = make_subgroup_generated("C5", G,
                                   {GroupElement(*perm_from_cycles("(1,2,3,4,5)", 5))});
  return instantiate_matched_pair(matched_pair_from_factorization(G, K, H));
}

}  // namespace

int main() {
  auto model = a5_model();
  ProbeSet probes = ProbeSet::exhaustive();
  Bicrossproduct bi = build_bicrossproduct(model.act, model.coact, probes, true);
  const Mha& AB = *bi.AB;

  std::cout << "instance: " << AB.name << ", dim " << AB.dim() << "\n\n";

  {
    const Shape dom = AB.two();
    auto dim = *shape_dimension(dom);
    auto ok = [&](size_t i) {
      Word w = word_at(dom, i);
      return AB.T1.apply_basis(w) == bi.direct_T1->apply_basis(w);
    };
    auto t0 = std::chrono::steady_clock::now();
    auto bad_s = scan_first_failure_serial(dim, ok);
    auto t1 = std::chrono::steady_clock::now();
    auto bad_p = scan_first_failure(dim, ok);
    auto t2 = std::chrono::steady_clock::now();
    std::cout << "probe scan over " << dim << " basis words (T1# vs direct slice)\n";
    std::cout << "  serial:   " << seconds(t0, t1) << " s\n";
    std::cout << "  parallel: " << seconds(t1, t2) << " s\n";
    std::cout << "  agree: " << (bad_s == bad_p ? "yes" : "NO") << "\n\n";
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    SparseMatrix m_s = materialize_serial(AB.T1);
    auto t1 = std::chrono::steady_clock::now();
    SparseMatrix m_p = materialize(AB.T1);
    auto t2 = std::chrono::steady_clock::now();
    std::cout << "materialize T1# (" << m_p.rows() << " x " << m_p.cols() << ")\n";
    std::cout << "  serial:   " << seconds(t0, t1) << " s\n";
    std::cout << "  parallel: " << seconds(t1, t2) << " s\n";
    std::cout << "  agree: " << (m_s == m_p ? "yes" : "NO") << "\n\n";

    auto t3 = std::chrono::steady_clock::now();
    size_t r_s = m_p.rank_serial();
    auto t4 = std::chrono::steady_clock::now();
    size_t r_p = m_p.rank();
    auto t5 = std::chrono::steady_clock::now();
    std::cout << "exact rank (" << r_p << ")\n";
    std::cout << "  serial:   " << seconds(t3, t4) << " s\n";
    std::cout << "  parallel: " << seconds(t4, t5) << " s\n";
    std::cout << "  agree: " << (r_s == r_p ? "yes" : "NO") << "\n";
  }
  return 0;
}
