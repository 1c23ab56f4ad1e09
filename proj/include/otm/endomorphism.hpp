// The seven endomorphism families of the oriented transformation monoids:
// inner automorphisms, the collapse-to-rank-1 maps twisted by a stride
// rotation, two-idempotent maps, cyclic-image maps, dihedral-image maps,
// order-2-image maps, and constants.  Also the homomorphism check, the
// structural classifier that assigns exactly one family to a verified
// endomorphism, and the kernel-shape analysis (one collapsed ideal, singleton
// classes above, merges only inside H-classes at the collapse level).

#ifndef OTM_ENDOMORPHISM_HPP_
#define OTM_ENDOMORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "green.hpp"
#include "perm.hpp"
#include "semigroup.hpp"

namespace otm {

struct Endo {
  std::vector<uint32_t> images;

  friend bool operator==(const Endo& a, const Endo& b) {
    return a.images == b.images;
  }
  friend bool operator<(const Endo& a, const Endo& b) {
    return a.images < b.images;
  }
};

struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

inline bool is_endomorphism(const FiniteSemigroup& S, const Endo& phi) {
  uint32_t m = S.size();
  if (phi.images.size() != m) {
    return false;
  }
  for (uint32_t a = 0; a < m; ++a) {
    for (uint32_t b = 0; b < m; ++b) {
      if (phi.images[S.product(a, b)]
          != S.product(phi.images[a], phi.images[b])) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// The unit group J_n, decomposed into words g^i and hg^i.

struct UnitGroup {
  uint32_t one = npos32;
  uint32_t g = npos32;
  uint32_t h = npos32;            // npos32 for the cyclic-unit kinds
  std::vector<uint32_t> g_pow;    // g^0 .. g^{n-1}
  std::vector<uint32_t> hg_pow;   // hg^0 .. hg^{n-1}, empty when h is absent
  std::vector<uint32_t> units;    // all of J_n

  bool dihedral() const noexcept {
    return h != npos32;
  }
};

inline UnitGroup unit_group(const FiniteSemigroup& S) {
  UnitGroup U;
  U.one = S.identity;
  U.g = S.find(make_g(S.n).as_transf());
  if (U.one == npos32 || U.g == npos32) {
    throw std::invalid_argument("unit_group: monoid lacks the rotation g");
  }
  uint32_t p = U.one;
  for (uint32_t i = 0; i < S.n; ++i) {
    U.g_pow.push_back(p);
    U.units.push_back(p);
    p = S.product(p, U.g);
  }
  uint32_t h = S.find(make_h(S.n).as_transf());
  if (h != npos32) {
    U.h = h;
    p = h;
    for (uint32_t i = 0; i < S.n; ++i) {
      U.hg_pow.push_back(p);
      U.units.push_back(p);
      p = S.product(p, U.g);
    }
  }
  return U;
}

// ---------------------------------------------------------------------------
// Family 1: inner automorphisms t -> sigma^{-1} t sigma.

inline Endo inner_auto(const FiniteSemigroup& S, const Perm& sigma) {
  Endo phi;
  phi.images.reserve(S.size());
  for (uint32_t i = 0; i < S.size(); ++i) {
    uint32_t j = S.find(conj_transf(sigma, S.at(i)));
    if (j == npos32) {
      throw std::invalid_argument(
          "inner_auto: conjugation does not preserve the monoid");
    }
    phi.images.push_back(j);
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Family 2 building block.  defect_collapse records what a transformation is
// missing: permutations stay fixed; a corank-1 injective map with domain
// missing i and image missing j becomes the single-point map i -> j; a
// corank-1 full map with kernel pair {i,j} and image missing k becomes the
// two-point map i,j -> k; everything of smaller rank becomes empty.

inline PartialTransf defect_collapse(const PartialTransf& t) {
  uint32_t n = t.n();
  uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  if (t.rank() == n) {
    return t;
  }
  if (t.rank() + 1 == n) {
    uint64_t co_image = all & ~t.image_mask();
    uint32_t j = static_cast<uint32_t>(__builtin_ctzll(co_image)) + 1;
    PartialTransf r(n);
    if (t.domain_size() == n - 1) {
      uint64_t co_domain = all & ~t.domain_mask();
      uint32_t i = static_cast<uint32_t>(__builtin_ctzll(co_domain)) + 1;
      r.set(i, j);
      return r;
    }
    // full of corank 1: exactly one kernel pair
    std::vector<uint32_t> last_seen(n + 1, 0);
    for (uint32_t x = 1; x <= n; ++x) {
      uint32_t v = t[x];
      if (last_seen[v] != 0) {
        r.set(last_seen[v], j);
        r.set(x, j);
        return r;
      }
      last_seen[v] = x;
    }
  }
  return PartialTransf::empty(n);
}

inline Endo collapse_endo(const FiniteSemigroup& S) {
  Endo phi;
  phi.images.reserve(S.size());
  for (uint32_t i = 0; i < S.size(); ++i) {
    uint32_t j = S.find(defect_collapse(S.at(i)));
    if (j == npos32) {
      throw std::invalid_argument(
          "collapse_endo: the collapse leaves the monoid");
    }
    phi.images.push_back(j);
  }
  return phi;
}

// Family 2: collapse then conjugate by the stride rotation sigma_{x,k}.
inline Endo collapse_conj_endo(const FiniteSemigroup& S, uint32_t x, uint32_t k) {
  if (!is_partial_kind(S.kind)) {
    throw std::invalid_argument("collapse_conj_endo: kind is not partial");
  }
  Perm sigma = sigma_xk(S.n, x, k);
  Endo phi;
  phi.images.reserve(S.size());
  for (uint32_t i = 0; i < S.size(); ++i) {
    uint32_t j = S.find(conj_transf(sigma, defect_collapse(S.at(i))));
    if (j == npos32) {
      throw std::invalid_argument(
          "collapse_conj_endo: image leaves the monoid");
    }
    phi.images.push_back(j);
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Family 3: units to e, the rest to f, for idempotents e != f with ef=fe=f.

inline Endo two_idempotent_endo(const FiniteSemigroup& S, uint32_t e, uint32_t f) {
  if (!S.is_idempotent(e) || !S.is_idempotent(f)) {
    throw std::invalid_argument("two_idempotent_endo: e, f must be idempotent");
  }
  if (e == f) {
    throw std::invalid_argument("two_idempotent_endo: requires e != f");
  }
  if (S.product(e, f) != f || S.product(f, e) != f) {
    throw std::invalid_argument("two_idempotent_endo: requires ef = fe = f");
  }
  Endo phi;
  phi.images.assign(S.size(), f);
  for (uint32_t i = 0; i < S.size(); ++i) {
    if (S.rank_of(i) == S.n) {
      phi.images[i] = e;
    }
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Powers of a group element within its maximal subgroup: index 0 holds the
// subgroup identity g0^p.

inline std::vector<uint32_t> group_powers(const FiniteSemigroup& S,
                                          uint32_t g0, uint32_t order) {
  std::vector<uint32_t> pows(order);
  uint32_t p = g0;
  for (uint32_t i = 1; i < order; ++i) {
    pows[i] = p;
    p = S.product(p, g0);
  }
  pows[0] = p;  // g0^order, the identity of the subgroup
  return pows;
}

// Family 4: g^i -> g0^i into a cyclic subgroup of order p dividing n, the
// whole ideal to the empty map.
inline Endo cyclic_image_endo(const FiniteSemigroup& S, uint32_t g0) {
  if (S.kind != Kind::POPI && S.kind != Kind::POP) {
    throw std::invalid_argument("cyclic_image_endo: kind must be popi or pop");
  }
  auto ord = element_order(S, g0);
  if (!ord || *ord <= 1 || S.n % *ord != 0) {
    throw std::invalid_argument(
        "cyclic_image_endo: g0 must be a group element of order p | n, p > 1");
  }
  uint32_t p = *ord;
  UnitGroup U = unit_group(S);
  uint32_t empty_idx = S.find(PartialTransf::empty(S.n));
  std::vector<uint32_t> pows = group_powers(S, g0, p);
  Endo phi;
  phi.images.assign(S.size(), empty_idx);
  for (uint32_t i = 0; i < S.n; ++i) {
    phi.images[U.g_pow[i]] = pows[i % p];
  }
  return phi;
}

// Family 5: units onto a dihedral subgroup of order 2p, ideal to empty.
inline Endo dihedral_image_endo(const FiniteSemigroup& S, uint32_t g0,
                                uint32_t h0) {
  if (S.kind != Kind::PORI && S.kind != Kind::POR) {
    throw std::invalid_argument("dihedral_image_endo: kind must be pori or por");
  }
  auto p_ord = element_order(S, g0);
  auto h_ord = element_order(S, h0);
  if (!p_ord || *p_ord <= 1 || S.n % *p_ord != 0) {
    throw std::invalid_argument(
        "dihedral_image_endo: g0 must have order p | n with p > 1");
  }
  if (!h_ord || *h_ord != 2) {
    throw std::invalid_argument("dihedral_image_endo: h0 must have order 2");
  }
  uint32_t p = *p_ord;
  std::vector<uint32_t> pows = group_powers(S, g0, p);
  uint32_t e0 = pows[0];
  if (S.product(h0, h0) != e0) {
    throw std::invalid_argument(
        "dihedral_image_endo: g0 and h0 must share a maximal subgroup");
  }
  // <g0,h0> dihedral of order 2p: h0 inverts g0 and lies outside <g0>.
  uint32_t g0_inv = pows[p - 1];
  if (S.product(S.product(h0, g0), h0) != g0_inv) {
    throw std::invalid_argument(
        "dihedral_image_endo: h0 does not invert g0");
  }
  if (std::find(pows.begin(), pows.end(), h0) != pows.end()) {
    throw std::invalid_argument(
        "dihedral_image_endo: h0 lies in <g0>, subgroup is not dihedral");
  }
  UnitGroup U = unit_group(S);
  if (!U.dihedral()) {
    throw std::invalid_argument("dihedral_image_endo: units are not dihedral");
  }
  uint32_t empty_idx = S.find(PartialTransf::empty(S.n));
  Endo phi;
  phi.images.assign(S.size(), empty_idx);
  for (uint32_t i = 0; i < S.n; ++i) {
    phi.images[U.g_pow[i]] = pows[i % p];
    phi.images[U.hg_pow[i]] = S.product(h0, pows[i % p]);
  }
  return phi;
}

// Family 6: units onto {e0, h0} for an order-2 group element h0, the ideal to
// an idempotent f of rank at most 2 commuting with h0 onto itself.  Variant a
// sends rotations to e0 and reflections to h0; variants b and c (even n only)
// send g to h0 with h going to e0 resp. h0.
inline Endo involution_image_endo(const FiniteSemigroup& S, uint32_t h0,
                                  uint32_t f, char variant) {
  if (S.kind != Kind::OR && S.kind != Kind::PORI && S.kind != Kind::POR) {
    throw std::invalid_argument(
        "involution_image_endo: kind must be or, pori or por");
  }
  if (variant != 'a' && variant != 'b' && variant != 'c') {
    throw std::invalid_argument("involution_image_endo: variant must be a, b or c");
  }
  if ((variant == 'b' || variant == 'c') && S.n % 2 != 0) {
    throw std::invalid_argument(
        "involution_image_endo: variants b and c need n even");
  }
  auto ord = element_order(S, h0);
  if (!ord || *ord != 2) {
    throw std::invalid_argument("involution_image_endo: h0 must have order 2");
  }
  if (!S.is_idempotent(f) || S.rank_of(f) > 2) {
    throw std::invalid_argument(
        "involution_image_endo: f must be idempotent of rank <= 2");
  }
  if (S.product(h0, f) != f || S.product(f, h0) != f) {
    throw std::invalid_argument("involution_image_endo: requires h0 f = f h0 = f");
  }
  uint32_t e0 = S.product(h0, h0);
  UnitGroup U = unit_group(S);
  Endo phi;
  phi.images.assign(S.size(), f);
  for (uint32_t i = 0; i < S.n; ++i) {
    bool odd = i % 2 == 1;
    uint32_t rot_im, ref_im;
    switch (variant) {
      case 'a': rot_im = e0; ref_im = h0; break;
      case 'b': rot_im = odd ? h0 : e0; ref_im = odd ? h0 : e0; break;
      default:  rot_im = odd ? h0 : e0; ref_im = odd ? e0 : h0; break;
    }
    phi.images[U.g_pow[i]] = rot_im;
    phi.images[U.hg_pow[i]] = ref_im;
  }
  return phi;
}

// Family 7: the constant map at an idempotent.
inline Endo constant_endo(const FiniteSemigroup& S, uint32_t e) {
  if (!S.is_idempotent(e)) {
    throw std::invalid_argument("constant_endo: value must be idempotent");
  }
  Endo phi;
  phi.images.assign(S.size(), e);
  return phi;
}

// ---------------------------------------------------------------------------
// Classification.

struct InnerAutoTag { Perm sigma; };
struct CollapseConjTag { uint32_t x, k; };
struct TwoIdempotentTag { uint32_t e, f; };
struct CyclicImageTag { uint32_t g0, order; };
struct DihedralImageTag { uint32_t g0, h0, order; };
struct InvolutionImageTag { uint32_t h0, f; char variant; };
struct ConstantTag { uint32_t e; };

using EndoClass = std::variant<InnerAutoTag, CollapseConjTag, TwoIdempotentTag,
                               CyclicImageTag, DihedralImageTag,
                               InvolutionImageTag, ConstantTag>;

inline int endo_type(const EndoClass& c) {
  return static_cast<int>(c.index()) + 1;
}

namespace detail {

inline bool same_h_class(const FiniteSemigroup& S, uint32_t a, uint32_t b) {
  return S.at(a).image_mask() == S.at(b).image_mask()
         && S.at(a).kernel_code() == S.at(b).kernel_code();
}

}  // namespace detail

// Assigns the unique family of a verified endomorphism, deciding structurally:
// bijections are inner; a full unit orbit with the ideal collapsing to rank
// <= 1 is a twisted collapse; otherwise the unit image is a single idempotent
// (constant / two-idempotent), a two-element group (order-2 image, or a
// cyclic image of order 2 on the cyclic-unit kinds), or a larger subgroup
// (cyclic / dihedral image).
inline EndoClass classify(const FiniteSemigroup& S, const Endo& phi) {
  uint32_t m = S.size();
  UnitGroup U = unit_group(S);

  std::vector<uint8_t> hit(m, 0);
  bool bijective = true;
  for (uint32_t v : phi.images) {
    if (hit[v]) {
      bijective = false;
      break;
    }
    hit[v] = 1;
  }
  if (bijective) {
    for (const Perm& sigma : dihedral_elements(S.n)) {
      if (inner_auto(S, sigma) == phi) {
        return InnerAutoTag{sigma};
      }
    }
    throw TheoremViolation("classify: bijection is not an inner automorphism");
  }

  // Unit image.
  std::vector<uint32_t> unit_image;
  for (uint32_t u : U.units) {
    unit_image.push_back(phi.images[u]);
  }
  std::sort(unit_image.begin(), unit_image.end());
  unit_image.erase(std::unique(unit_image.begin(), unit_image.end()),
                   unit_image.end());

  std::vector<uint32_t> units_sorted = U.units;
  std::sort(units_sorted.begin(), units_sorted.end());

  // Common image of the whole ideal, when there is one.
  std::optional<uint32_t> ideal_value;
  for (uint32_t i = 0; i < m; ++i) {
    if (S.rank_of(i) < S.n) {
      if (!ideal_value) {
        ideal_value = phi.images[i];
      } else if (*ideal_value != phi.images[i]) {
        ideal_value.reset();
        break;
      }
    }
  }
  uint32_t empty_idx = S.find(PartialTransf::empty(S.n));
  bool ideal_to_empty =
      ideal_value && empty_idx != npos32 && *ideal_value == empty_idx;

  if (unit_image == units_sorted && !ideal_to_empty) {
    if (!is_partial_kind(S.kind)) {
      throw TheoremViolation(
          "classify: non-bijective unit-preserving map on a full kind");
    }
    // Twisted collapse: recover the stride rotation.
    for (uint32_t k = 1; k <= S.n; ++k) {
      if (std::gcd(k, S.n) != 1) {
        continue;
      }
      for (uint32_t x = 1; x <= S.n; ++x) {
        if (collapse_conj_endo(S, x, k) == phi) {
          return CollapseConjTag{x, k};
        }
      }
    }
    throw TheoremViolation("classify: unit-preserving map is not a twisted collapse");
  }

  if (unit_image.size() == 1) {
    uint32_t e = unit_image[0];
    if (!S.is_idempotent(e)) {
      throw TheoremViolation("classify: one-point unit image is not idempotent");
    }
    bool constant = std::all_of(phi.images.begin(), phi.images.end(),
                                [&](uint32_t v) { return v == e; });
    if (constant) {
      return ConstantTag{e};
    }
    if (!ideal_value) {
      throw TheoremViolation("classify: ideal image is not a single element");
    }
    uint32_t f = *ideal_value;
    if (f == e || !S.is_idempotent(f) || S.product(e, f) != f
        || S.product(f, e) != f) {
      throw TheoremViolation("classify: two-idempotent shape violated");
    }
    return TwoIdempotentTag{e, f};
  }

  uint32_t g_img = phi.images[U.g];
  auto g_ord = element_order(S, g_img);
  if (!g_ord) {
    throw TheoremViolation("classify: image of g is not a group element");
  }

  if (!U.dihedral()) {
    // Cyclic-unit kinds: the only remaining family is the cyclic image.
    if (!ideal_to_empty || *g_ord <= 1 || S.n % *g_ord != 0) {
      throw TheoremViolation("classify: invalid cyclic-image shape");
    }
    return CyclicImageTag{g_img, *g_ord};
  }

  uint32_t h_img = phi.images[U.h];
  if (unit_image.size() == 2) {
    // Order-2 image: identify h0 as the non-idempotent of the pair.
    uint32_t a = unit_image[0], b = unit_image[1];
    uint32_t h0 = S.is_idempotent(a) ? b : a;
    auto h0_ord = element_order(S, h0);
    if (!h0_ord || *h0_ord != 2) {
      throw TheoremViolation("classify: two-point unit image without involution");
    }
    uint32_t e0 = S.product(h0, h0);
    if (!ideal_value) {
      throw TheoremViolation("classify: order-2-image ideal not collapsed");
    }
    uint32_t f = *ideal_value;
    char variant;
    if (g_img == e0 && h_img == h0) {
      variant = 'a';
    } else if (g_img == h0 && h_img == e0) {
      variant = 'b';
    } else if (g_img == h0 && h_img == h0) {
      variant = 'c';
    } else {
      throw TheoremViolation("classify: unrecognized order-2 image variant");
    }
    if ((variant != 'a' && S.n % 2 != 0) || S.rank_of(f) > 2
        || !S.is_idempotent(f) || S.product(h0, f) != f
        || S.product(f, h0) != f) {
      throw TheoremViolation("classify: order-2 image constraints violated");
    }
    return InvolutionImageTag{h0, f, variant};
  }

  // Larger subgroup image: dihedral of order 2p.
  auto h_ord = element_order(S, h_img);
  uint32_t p = *g_ord;
  if (!ideal_to_empty || !h_ord || *h_ord != 2 || p <= 1 || S.n % p != 0
      || unit_image.size() != size_t(2) * p) {
    throw TheoremViolation("classify: invalid dihedral-image shape");
  }
  std::vector<uint32_t> pows = group_powers(S, g_img, p);
  if (S.product(h_img, h_img) != pows[0]
      || S.product(S.product(h_img, g_img), h_img) != pows[p - 1]
      || std::find(pows.begin(), pows.end(), h_img) != pows.end()) {
    throw TheoremViolation("classify: dihedral-image subgroup check failed");
  }
  return DihedralImageTag{g_img, h_img, p};
}

// ---------------------------------------------------------------------------
// Kernel shape.

struct KernelShape {
  bool universal = false;
  uint32_t level = 0;          // the rank k of the collapse level
  bool collapses_ideal = false;  // I_{k-1} has >= 2 elements merged into one class
  bool within_h_only = false;    // merges at level k stay inside H-classes
};

struct ShapeViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// The kernel of an endomorphism here is either universal or: the ideal below
// some rank k is one class, every element of rank > k is alone, and classes
// inside rank k only merge H-related elements.
inline KernelShape kernel_shape(const FiniteSemigroup& S, const Endo& phi) {
  uint32_t m = S.size();
  std::vector<std::vector<uint32_t>> classes;
  {
    std::unordered_map<uint32_t, uint32_t> by_value;
    for (uint32_t i = 0; i < m; ++i) {
      auto [it, fresh] = by_value.emplace(phi.images[i],
                                          static_cast<uint32_t>(classes.size()));
      if (fresh) {
        classes.emplace_back();
      }
      classes[it->second].push_back(i);
    }
  }
  if (classes.size() == 1) {
    return KernelShape{true, 0, false, false};
  }

  for (uint32_t k = 1; k <= S.n; ++k) {
    std::vector<uint32_t> ideal_elems;
    for (uint32_t i = 0; i < m; ++i) {
      if (S.rank_of(i) < k) {
        ideal_elems.push_back(i);
      }
    }
    bool ok = true;
    bool merges_in_level = false;
    for (const auto& cls : classes) {
      bool is_ideal_class =
          !ideal_elems.empty() && phi.images[cls[0]] == phi.images[ideal_elems[0]];
      if (is_ideal_class) {
        if (cls != ideal_elems) {
          ok = false;
          break;
        }
        continue;
      }
      if (cls.size() == 1) {
        if (S.rank_of(cls[0]) < k) {
          ok = false;  // a rank-below-k element escaped the ideal class
          break;
        }
        continue;
      }
      for (uint32_t x : cls) {
        if (S.rank_of(x) != k || !detail::same_h_class(S, x, cls[0])) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        break;
      }
      merges_in_level = true;
    }
    if (!ok) {
      continue;
    }
    KernelShape shape;
    shape.universal = false;
    shape.level = k;
    shape.collapses_ideal = ideal_elems.size() >= 2;
    shape.within_h_only = merges_in_level;
    return shape;
  }
  throw ShapeViolation("kernel_shape: partition fits no ideal-collapse level");
}

// ---------------------------------------------------------------------------
// Every construction over every valid parameter choice, tagged.  The union of
// these, as a set of maps, is the classification target.

inline std::vector<std::pair<EndoClass, Endo>> all_type_constructions(
    const FiniteSemigroup& S) {
  std::vector<std::pair<EndoClass, Endo>> out;
  uint32_t m = S.size();

  for (const Perm& sigma : dihedral_elements(S.n)) {
    out.emplace_back(InnerAutoTag{sigma}, inner_auto(S, sigma));
  }

  if (is_partial_kind(S.kind)) {
    for (uint32_t k = 1; k <= S.n; ++k) {
      if (std::gcd(k, S.n) != 1) {
        continue;
      }
      for (uint32_t x = 1; x <= S.n; ++x) {
        out.emplace_back(CollapseConjTag{x, k}, collapse_conj_endo(S, x, k));
      }
    }
  }

  std::vector<uint32_t> idem = idempotents(S);
  for (uint32_t e : idem) {
    for (uint32_t f : idem) {
      if (e != f && S.product(e, f) == f && S.product(f, e) == f) {
        out.emplace_back(TwoIdempotentTag{e, f}, two_idempotent_endo(S, e, f));
      }
    }
    out.emplace_back(ConstantTag{e}, constant_endo(S, e));
  }

  std::vector<std::optional<uint32_t>> order(m);
  for (uint32_t i = 0; i < m; ++i) {
    order[i] = element_order(S, i);
  }

  if (S.kind == Kind::POPI || S.kind == Kind::POP) {
    for (uint32_t g0 = 0; g0 < m; ++g0) {
      if (order[g0] && *order[g0] > 1 && S.n % *order[g0] == 0) {
        out.emplace_back(CyclicImageTag{g0, *order[g0]},
                         cyclic_image_endo(S, g0));
      }
    }
  }

  if (S.kind == Kind::PORI || S.kind == Kind::POR) {
    for (uint32_t g0 = 0; g0 < m; ++g0) {
      if (!order[g0] || *order[g0] <= 1 || S.n % *order[g0] != 0) {
        continue;
      }
      uint32_t p = *order[g0];
      std::vector<uint32_t> pows = group_powers(S, g0, p);
      for (uint32_t h0 = 0; h0 < m; ++h0) {
        if (!order[h0] || *order[h0] != 2) {
          continue;
        }
        if (S.product(h0, h0) != pows[0]) {
          continue;  // different maximal subgroup
        }
        if (S.product(S.product(h0, g0), h0) != pows[p - 1]) {
          continue;
        }
        if (std::find(pows.begin(), pows.end(), h0) != pows.end()) {
          continue;
        }
        out.emplace_back(DihedralImageTag{g0, h0, p},
                         dihedral_image_endo(S, g0, h0));
      }
    }
  }

  if (S.kind == Kind::OR || S.kind == Kind::PORI || S.kind == Kind::POR) {
    std::vector<char> variants = {'a'};
    if (S.n % 2 == 0) {
      variants.push_back('b');
      variants.push_back('c');
    }
    for (uint32_t h0 = 0; h0 < m; ++h0) {
      if (!order[h0] || *order[h0] != 2) {
        continue;
      }
      for (uint32_t f : idem) {
        if (S.rank_of(f) > 2 || S.product(h0, f) != f || S.product(f, h0) != f) {
          continue;
        }
        for (char v : variants) {
          out.emplace_back(InvolutionImageTag{h0, f, v},
                           involution_image_endo(S, h0, f, v));
        }
      }
    }
  }

  return out;
}

}  // namespace otm

#endif  // OTM_ENDOMORPHISM_HPP_
