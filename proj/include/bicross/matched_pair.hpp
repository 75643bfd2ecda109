#pragma once

#include "bicross/group.hpp"

#include <functional>
#include <map>

namespace bicross {

struct Report;
struct ProbeSet;

/// Groups H, K with mutual actions tr: H x K -> K (h |> k) and
/// tl: H x K -> H (h <| k) satisfying the matched-pair identities that come
/// from h*k = (h|>k)(h<|k) inside an exact factorization G = KH.
struct MatchedPair {
  GroupPtr H;
  GroupPtr K;
  std::function<GroupElement(const GroupElement&, const GroupElement&)> tr;
  std::function<GroupElement(const GroupElement&, const GroupElement&)> tl;

  struct Source {
    GroupPtr G;
    std::function<GroupElement(const GroupElement&)> embed_h;
    std::function<GroupElement(const GroupElement&)> embed_k;
  };
  std::optional<Source> source;

  std::string describe() const;
};

/// Derives the matched pair from an exact factorization G = KH with
/// K and H subgroups of the finite group G and K cap H = {e}. Checks the
/// factorization exhaustively; failures surface as factorization errors.
MatchedPair matched_pair_from_factorization(GroupPtr G, GroupPtr K, GroupPtr H);

/// Explicit user-supplied actions over finite H, K given as tables.
MatchedPair matched_pair_explicit(
    GroupPtr H, GroupPtr K,
    std::map<std::pair<GroupElement, GroupElement>, GroupElement> tr_table,
    std::map<std::pair<GroupElement, GroupElement>, GroupElement> tl_table);

/// Built-in families. "ZmZ m": K = Z[1/m] normal in Z[1/m] x| Z, so
/// h|>k = m^h k and h<|k = h. "ZmZ m swapped": H = Z[1/m] normal, so
/// h|>k = k and h<|k = m^(-k) h. "trivial": both actions trivial over the
/// given groups.
MatchedPair builtin_matched_pair_zmz(unsigned m, bool swapped = false);
MatchedPair trivial_matched_pair(GroupPtr H, GroupPtr K);

/// Checks the six matched-pair identities (four unit laws are folded into
/// one check each) plus source consistency when present; every failure
/// carries the offending triple.
Report check_matched_pair(const MatchedPair& mp, const ProbeSet& probes);

}  // namespace bicross
