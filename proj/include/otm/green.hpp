// Green's structure of the enumerated monoids, read off the standard
// fingerprints: L by image, R by kernel (which degrades to the domain on the
// injective kinds), J by rank, H = L meet R.  Ideals, idempotents, group
// H-classes with their cyclic/dihedral tags, element orders, and witness
// families of almost-orthogonal idempotents.

#ifndef OTM_GREEN_HPP_
#define OTM_GREEN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "semigroup.hpp"

namespace otm {

struct GreenData {
  std::vector<uint32_t> l_id, r_id, h_id, j_id;  // per element
  uint32_t num_l = 0, num_r = 0, num_h = 0, num_j = 0;
  std::vector<uint32_t> j_rank;                   // per J-class id
  std::vector<std::vector<uint32_t>> h_members;   // per H-class id
  std::vector<uint8_t> h_is_group;                // per H-class id
  std::vector<std::vector<uint32_t>> j_to_h;      // per J-class id
};

inline GreenData green_data(const FiniteSemigroup& S) {
  GreenData G;
  uint32_t m = S.size();
  G.l_id.resize(m);
  G.r_id.resize(m);
  G.h_id.resize(m);
  G.j_id.resize(m);

  std::map<uint64_t, uint32_t> l_index;  // image mask -> id
  std::map<std::vector<uint8_t>, uint32_t> r_index;  // kernel code -> id
  std::map<uint32_t, uint32_t> j_index;  // rank -> id (ranks ascending)
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> h_index;

  for (uint32_t i = 0; i < m; ++i) {
    uint32_t r = S.rank_of(i);
    if (!j_index.count(r)) {
      j_index.emplace(r, 0);
    }
  }
  for (auto& [rank, id] : j_index) {
    id = G.num_j++;
    G.j_rank.push_back(rank);
  }

  for (uint32_t i = 0; i < m; ++i) {
    const PartialTransf& t = S.at(i);
    uint64_t im = t.image_mask();
    auto [lit, lnew] = l_index.emplace(im, G.num_l);
    if (lnew) {
      ++G.num_l;
    }
    G.l_id[i] = lit->second;

    auto [rit, rnew] = r_index.emplace(t.kernel_code(), G.num_r);
    if (rnew) {
      ++G.num_r;
    }
    G.r_id[i] = rit->second;

    G.j_id[i] = j_index.at(S.rank_of(i));

    auto [hit, hnew] = h_index.emplace(std::pair{G.l_id[i], G.r_id[i]}, G.num_h);
    if (hnew) {
      ++G.num_h;
      G.h_members.emplace_back();
      G.h_is_group.push_back(0);
    }
    G.h_id[i] = hit->second;
    G.h_members[hit->second].push_back(i);
    if (S.is_idempotent(i)) {
      G.h_is_group[hit->second] = 1;
    }
  }

  G.j_to_h.resize(G.num_j);
  std::vector<uint8_t> placed(G.num_h, 0);
  for (uint32_t i = 0; i < m; ++i) {
    if (!placed[G.h_id[i]]) {
      placed[G.h_id[i]] = 1;
      G.j_to_h[G.j_id[i]].push_back(G.h_id[i]);
    }
  }
  return G;
}

// I_k = {s : rank(s) <= k}; these are all the ideals.
inline std::vector<uint32_t> ideal(const FiniteSemigroup& S, uint32_t k) {
  if (k > S.n) {
    throw std::invalid_argument("ideal: rank level out of range");
  }
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < S.size(); ++i) {
    if (S.rank_of(i) <= k) {
      out.push_back(i);
    }
  }
  return out;
}

inline std::vector<uint32_t> idempotents(const FiniteSemigroup& S) {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < S.size(); ++i) {
    if (S.is_idempotent(i)) {
      out.push_back(i);
    }
  }
  return out;
}

inline std::vector<uint32_t> idempotents_of_rank(const FiniteSemigroup& S,
                                                 uint32_t k) {
  if (k > S.n) {
    throw std::invalid_argument("idempotents_of_rank: rank out of range");
  }
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < S.size(); ++i) {
    if (S.rank_of(i) == k && S.is_idempotent(i)) {
      out.push_back(i);
    }
  }
  return out;
}

// Least m >= 1 with s^{m+1} = s, when s generates a group; nullopt otherwise.
inline std::optional<uint32_t> element_order(const FiniteSemigroup& S,
                                             uint32_t s) {
  uint32_t p = s;
  for (uint32_t m = 1; m <= S.size(); ++m) {
    uint32_t q = S.product(p, s);  // s^{m+1}
    if (q == s) {
      return m;
    }
    p = q;
  }
  return std::nullopt;
}

inline bool is_group_element(const FiniteSemigroup& S, uint32_t s) {
  return element_order(S, s).has_value();
}

struct GroupHClass {
  std::vector<uint32_t> members;
  uint32_t idempotent;
  bool dihedral;        // false = cyclic
  uint32_t group_order; // k for cyclic of order k, 2k for dihedral
};

// The H-class of an idempotent e, with its isomorphism type identified from
// element orders: cyclic when some element has full order, dihedral when a
// rotation of half order exists and everything outside it is an involution.
inline GroupHClass group_h_class(const FiniteSemigroup& S, uint32_t e) {
  if (!S.is_idempotent(e)) {
    throw std::invalid_argument("group_h_class: element is not idempotent");
  }
  const PartialTransf& t = S.at(e);
  uint64_t im = t.image_mask();
  std::vector<uint8_t> ker = t.kernel_code();
  GroupHClass H;
  H.idempotent = e;
  for (uint32_t i = 0; i < S.size(); ++i) {
    if (S.at(i).image_mask() == im && S.at(i).kernel_code() == ker) {
      H.members.push_back(i);
    }
  }
  uint32_t size = static_cast<uint32_t>(H.members.size());
  uint32_t max_order = 1;
  for (uint32_t x : H.members) {
    auto ord = element_order(S, x);
    if (!ord) {
      throw std::logic_error("group_h_class: member is not a group element");
    }
    max_order = std::max(max_order, *ord);
  }
  if (max_order == size) {
    H.dihedral = false;
    H.group_order = size;
  } else if (2 * max_order == size) {
    uint32_t involutions = 0;
    for (uint32_t x : H.members) {
      if (x != e && S.product(x, x) == e) {
        ++involutions;
      }
    }
    if (involutions < max_order) {
      throw std::logic_error("group_h_class: unrecognized group type");
    }
    H.dihedral = true;
    H.group_order = size;
  } else {
    throw std::logic_error("group_h_class: unrecognized group type");
  }
  return H;
}

// A family of idempotents e_1..e_count in J_k such that for each pair one of
// the two products falls into I_{k-1} (both, under the ordered variant).
// Found by clique search over the compatibility graph; nullopt when none
// exists.
inline std::optional<std::vector<uint32_t>> find_idempotent_family(
    const FiniteSemigroup& S, uint32_t k, uint32_t count, bool ordered = false) {
  std::vector<uint32_t> cand = idempotents_of_rank(S, k);
  uint32_t m = static_cast<uint32_t>(cand.size());
  if (count > m) {
    return std::nullopt;
  }
  std::vector<std::vector<uint8_t>> compat(m, std::vector<uint8_t>(m, 0));
  for (uint32_t a = 0; a < m; ++a) {
    for (uint32_t b = 0; b < m; ++b) {
      if (a == b) {
        continue;
      }
      bool ab = S.rank_of(S.product(cand[a], cand[b])) < k;
      bool ba = S.rank_of(S.product(cand[b], cand[a])) < k;
      compat[a][b] = ordered ? ab : (ab || ba);
    }
  }
  // Unordered families are combinations (compat is symmetric); ordered ones
  // are sequences, so any unused candidate may come next.
  std::vector<uint32_t> chosen;
  std::vector<uint8_t> used(m, 0);
  auto dfs = [&](auto&& self, uint32_t start) -> bool {
    if (chosen.size() == count) {
      return true;
    }
    for (uint32_t i = ordered ? 0 : start; i < m; ++i) {
      if (used[i]) {
        continue;
      }
      bool ok = true;
      for (uint32_t j : chosen) {
        if (!compat[j][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        continue;
      }
      chosen.push_back(i);
      used[i] = 1;
      if (self(self, i + 1)) {
        return true;
      }
      used[i] = 0;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0)) {
    return std::nullopt;
  }
  std::vector<uint32_t> out;
  for (uint32_t i : chosen) {
    out.push_back(cand[i]);
  }
  return out;
}

}  // namespace otm

#endif  // OTM_GREEN_HPP_
