#pragma once

#include "bicross/bicross.hpp"

namespace bicross {

/// Bilinear pairing between two algebras given by a closed form on basis
/// words. The canonical pairing of CH with F(H) is <h, delta_g> = [h = g];
/// pairings of composite bases multiply legwise.
struct Pairing {
  std::string name;
  Shape left_shape, right_shape;
  std::function<Scalar(const Word&, const Word&)> on_basis;

  Scalar eval(const Vec& x, const Vec& f) const;
};

struct PairingMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// <h, delta_g> = [h = g] between the group algebra of H and the function
/// algebra of H. Throws GroupMismatch-style errors when the groups differ.
Pairing canonical_pairing(const MhaPtr& grp_alg, const MhaPtr& fun_alg);

/// Legwise product pairing <a(x)b, c(x)d> = <a,c><b,d> between AB and CD.
Pairing bicross_pairing(const Bicrossproduct& ab, const DualBicrossproduct& cd);

/// Duality suite: multiplication on either side adjoint to the coproduct
/// on the other (via total coproducts, so finite instances only), and the
/// antipodes adjoint to each other.
Report check_pairing(const Pairing& p, const Mha& left, const Mha& right,
                     const ProbeSet& probes);

}  // namespace bicross
