// Permutations of the chain, the rotation g and reflection h, the cyclic and
// dihedral groups they generate, sigma_{x,k} rotations-with-stride, normalizer
// computation in S_n by exhaustive scan, and brute-forced endomorphism lists
// for C_n and D_2n.

#ifndef OTM_PERM_HPP_
#define OTM_PERM_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "transf.hpp"

namespace otm {

class Perm {
 public:
  explicit Perm(uint32_t n) : _n(n), _img(n) {
    if (n < 1 || n > max_chain) {
      throw std::invalid_argument("Perm: chain size out of range");
    }
    std::iota(_img.begin(), _img.end(), uint8_t(1));
  }

  Perm(uint32_t n, std::vector<uint8_t> img) : _n(n), _img(std::move(img)) {
    if (_img.size() != _n) {
      throw std::invalid_argument("Perm: image vector has wrong length");
    }
    uint64_t seen = 0;
    for (uint8_t v : _img) {
      if (v < 1 || v > _n || (seen >> (v - 1)) & 1) {
        throw std::domain_error("Perm: not a bijection on {1..n}");
      }
      seen |= uint64_t(1) << (v - 1);
    }
  }

  uint32_t n() const noexcept {
    return _n;
  }

  uint32_t operator[](uint32_t i) const {
    return _img[i - 1];
  }

  const std::vector<uint8_t>& entries() const noexcept {
    return _img;
  }

  bool is_identity() const noexcept {
    for (uint32_t i = 0; i < _n; ++i) {
      if (_img[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  Perm inverse() const {
    std::vector<uint8_t> inv(_n);
    for (uint32_t i = 1; i <= _n; ++i) {
      inv[_img[i - 1] - 1] = static_cast<uint8_t>(i);
    }
    return Perm(_n, std::move(inv));
  }

  uint32_t order() const {
    Perm p = *this;
    uint32_t m = 1;
    while (!p.is_identity()) {
      p = compose_perm(p, *this);
      ++m;
    }
    return m;
  }

  PartialTransf as_transf() const {
    return PartialTransf(_n, _img);
  }

  friend bool operator==(const Perm& a, const Perm& b) {
    return a._n == b._n && a._img == b._img;
  }

  friend bool operator!=(const Perm& a, const Perm& b) {
    return !(a == b);
  }

  friend bool operator<(const Perm& a, const Perm& b) {
    return a._img < b._img;
  }

  // Right action: x(ab) = (xa)b.
  friend Perm compose_perm(const Perm& a, const Perm& b) {
    if (a._n != b._n) {
      throw std::invalid_argument("compose_perm: mismatched sizes");
    }
    std::vector<uint8_t> img(a._n);
    for (uint32_t i = 0; i < a._n; ++i) {
      img[i] = b._img[a._img[i] - 1];
    }
    return Perm(a._n, std::move(img));
  }

 private:
  uint32_t _n;
  std::vector<uint8_t> _img;
};

struct PermHash {
  size_t operator()(const Perm& p) const noexcept {
    size_t h = 0xcbf29ce484222325ull;
    for (uint8_t v : p.entries()) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

inline Perm perm_pow(const Perm& p, uint32_t e) {
  Perm r(p.n());
  for (uint32_t i = 0; i < e; ++i) {
    r = compose_perm(r, p);
  }
  return r;
}

// g: i -> i+1 cyclically; a permutation of order n.
inline Perm make_g(uint32_t n) {
  std::vector<uint8_t> img(n);
  for (uint32_t i = 1; i <= n; ++i) {
    img[i - 1] = static_cast<uint8_t>(i == n ? 1 : i + 1);
  }
  return Perm(n, std::move(img));
}

// h: i -> n-i+1; the order-reversing involution.
inline Perm make_h(uint32_t n) {
  std::vector<uint8_t> img(n);
  for (uint32_t i = 1; i <= n; ++i) {
    img[i - 1] = static_cast<uint8_t>(n - i + 1);
  }
  return Perm(n, std::move(img));
}

inline std::vector<Perm> cyclic_elements(uint32_t n) {
  std::vector<Perm> out;
  Perm g = make_g(n);
  Perm p(n);
  for (uint32_t i = 0; i < n; ++i) {
    out.push_back(p);
    p = compose_perm(p, g);
  }
  return out;
}

// {1, g, ..., g^{n-1}, h, hg, ..., hg^{n-1}}, 2n distinct elements for n >= 3.
inline std::vector<Perm> dihedral_elements(uint32_t n) {
  if (n < 3) {
    throw std::invalid_argument("dihedral_elements: requires n >= 3");
  }
  std::vector<Perm> out = cyclic_elements(n);
  Perm g = make_g(n);
  Perm p = make_h(n);
  for (uint32_t i = 0; i < n; ++i) {
    out.push_back(p);
    p = compose_perm(p, g);
  }
  return out;
}

// Conjugate of a partial transformation: sigma^{-1} t sigma.
inline PartialTransf conj_transf(const Perm& sigma, const PartialTransf& t) {
  if (sigma.n() != t.n()) {
    throw std::invalid_argument("conj_transf: mismatched sizes");
  }
  Perm inv = sigma.inverse();
  PartialTransf r(t.n());
  for (uint32_t x = 1; x <= t.n(); ++x) {
    uint32_t y = inv[x];  // x sigma^{-1}
    if (t.defined(y)) {
      r.set(x, sigma[t[y]]);
    }
  }
  return r;
}

inline uint32_t totient(uint32_t n) {
  uint32_t count = 0;
  for (uint32_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) {
      ++count;
    }
  }
  return count;
}

// Reduction of m to the representative in {1..n} (not {0..n-1}).
inline uint32_t reduce_to_chain(int64_t m, uint32_t n) {
  int64_t r = m % static_cast<int64_t>(n);
  if (r <= 0) {
    r += n;
  }
  return static_cast<uint32_t>(r);
}

// sigma_{x,k}: i -> x + (i-1)k reduced to {1..n}; a permutation exactly when
// gcd(k, n) = 1.
inline Perm sigma_xk(uint32_t n, uint32_t x, uint32_t k) {
  if (x < 1 || x > n || k < 1 || k > n) {
    throw std::invalid_argument("sigma_xk: parameters out of the chain");
  }
  if (std::gcd(k, n) != 1) {
    throw std::invalid_argument("sigma_xk: k must be coprime to n");
  }
  std::vector<uint8_t> img(n);
  for (uint32_t i = 1; i <= n; ++i) {
    img[i - 1] = static_cast<uint8_t>(
        reduce_to_chain(int64_t(x) + int64_t(i - 1) * k, n));
  }
  return Perm(n, std::move(img));
}

// All of N_n = {sigma_{x,k}}; n*phi(n) permutations.
inline std::vector<Perm> stride_rotations(uint32_t n) {
  std::vector<Perm> out;
  for (uint32_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) {
      continue;
    }
    for (uint32_t x = 1; x <= n; ++x) {
      out.push_back(sigma_xk(n, x, k));
    }
  }
  return out;
}

template <typename F>
void for_each_perm(uint32_t n, F&& f) {
  std::vector<uint8_t> img(n);
  std::iota(img.begin(), img.end(), uint8_t(1));
  do {
    f(Perm(n, img));
  } while (std::next_permutation(img.begin(), img.end()));
}

// Normalizer of a subgroup G in S_n by plain exhaustive scan over all n!
// permutations; desk scale only.
inline std::vector<Perm> normalizer_in_sn(uint32_t n, const std::vector<Perm>& group) {
  if (n > 8) {
    throw std::length_error("normalizer_in_sn: refusing n > 8");
  }
  std::unordered_set<Perm, PermHash> members(group.begin(), group.end());
  std::vector<Perm> out;
  for_each_perm(n, [&](const Perm& sigma) {
    Perm inv = sigma.inverse();
    for (const Perm& tau : group) {
      Perm c = compose_perm(compose_perm(inv, tau), sigma);
      if (!members.count(c)) {
        return;
      }
    }
    out.push_back(sigma);
  });
  return out;
}

struct Subgroup {
  std::string label;
  std::vector<Perm> elements;
};

namespace detail {

inline std::vector<Perm> group_closure(uint32_t n, std::vector<Perm> gens) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  out.push_back(Perm(n));
  seen.insert(Perm(n));
  for (size_t i = 0; i < out.size(); ++i) {
    for (const Perm& gen : gens) {
      Perm p = compose_perm(out[i], gen);
      if (seen.insert(p).second) {
        out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// The proper normal subgroups of D_2n: <g^p> for each divisor p of n, plus
// <g^2,h> and <g^2,hg> when n is even.  Each returned subgroup is checked
// normal by conjugating with every element of D_2n.
inline std::vector<Subgroup> proper_normal_subgroups_d2n(uint32_t n) {
  if (n < 3) {
    throw std::invalid_argument("proper_normal_subgroups_d2n: requires n >= 3");
  }
  Perm g = make_g(n);
  Perm h = make_h(n);
  std::vector<Subgroup> out;
  for (uint32_t p = 1; p <= n; ++p) {
    if (n % p != 0) {
      continue;
    }
    out.push_back({"<g^" + std::to_string(p) + ">",
                   detail::group_closure(n, {perm_pow(g, p)})});
  }
  if (n % 2 == 0) {
    out.push_back({"<g^2,h>", detail::group_closure(n, {perm_pow(g, 2), h})});
    out.push_back(
        {"<g^2,hg>", detail::group_closure(n, {perm_pow(g, 2), compose_perm(h, g)})});
  }
  std::vector<Perm> full = dihedral_elements(n);
  for (const Subgroup& sub : out) {
    std::unordered_set<Perm, PermHash> members(sub.elements.begin(),
                                               sub.elements.end());
    if (members.size() == 2 * n) {
      throw std::logic_error("proper_normal_subgroups_d2n: subgroup not proper");
    }
    for (const Perm& sigma : full) {
      Perm inv = sigma.inverse();
      for (const Perm& tau : sub.elements) {
        if (!members.count(compose_perm(compose_perm(inv, tau), sigma))) {
          throw std::logic_error("proper_normal_subgroups_d2n: " + sub.label
                                 + " failed the conjugation check");
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Endomorphisms of C_n and D_2n by brute force over generator images.  A map
// on generators that respects the presentation (g^n = h^2 = 1, gh = hg^{n-1})
// extends uniquely to the whole group, so no closure is needed.

struct GroupEndo {
  Perm g_image;
  std::optional<Perm> h_image;       // absent for C_n
  std::vector<uint32_t> images;      // over the canonical element listing
  bool automorphism;
};

struct GroupEndoReport {
  char tag;  // 'c' or 'd'
  uint32_t n;
  std::vector<Perm> elements;        // canonical listing
  std::vector<GroupEndo> endos;
  uint64_t total;
  uint64_t automorphisms;
};

inline GroupEndoReport group_endomorphisms_c(uint32_t n) {
  GroupEndoReport rep;
  rep.tag = 'c';
  rep.n = n;
  rep.elements = cyclic_elements(n);
  for (uint32_t i = 0; i < n; ++i) {
    // g -> g^i always respects g^n = 1.
    GroupEndo e{rep.elements[uint32_t(i)], std::nullopt, {}, false};
    std::vector<bool> hit(n, false);
    for (uint32_t j = 0; j < n; ++j) {
      uint32_t im = (i * j) % n;
      e.images.push_back(im);
      hit[im] = true;
    }
    e.automorphism =
        std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    rep.endos.push_back(std::move(e));
  }
  rep.total = rep.endos.size();
  rep.automorphisms = static_cast<uint64_t>(
      std::count_if(rep.endos.begin(), rep.endos.end(),
                    [](const GroupEndo& e) { return e.automorphism; }));
  return rep;
}

inline GroupEndoReport group_endomorphisms_d2(uint32_t n) {
  GroupEndoReport rep;
  rep.tag = 'd';
  rep.n = n;
  rep.elements = dihedral_elements(n);
  uint32_t size = 2 * n;
  Perm id(n);
  for (uint32_t ai = 0; ai < size; ++ai) {
    const Perm& a = rep.elements[ai];
    if (!perm_pow(a, n).is_identity()) {
      continue;
    }
    for (uint32_t bi = 0; bi < size; ++bi) {
      const Perm& b = rep.elements[bi];
      if (!compose_perm(b, b).is_identity()) {
        continue;
      }
      // gh = hg^{n-1} must be preserved: ab = ba^{n-1}.
      if (compose_perm(a, b) != compose_perm(b, perm_pow(a, n - 1))) {
        continue;
      }
      GroupEndo e{a, b, {}, false};
      std::vector<bool> hit(size, false);
      std::vector<Perm> a_pows;
      Perm p(n);
      for (uint32_t i = 0; i < n; ++i) {
        a_pows.push_back(p);
        p = compose_perm(p, a);
      }
      bool ok = true;
      for (uint32_t idx = 0; idx < size; ++idx) {
        // element listing: g^i at idx < n, hg^{i-n} otherwise
        Perm image = idx < n ? a_pows[idx] : compose_perm(b, a_pows[idx - n]);
        auto it = std::find(rep.elements.begin(), rep.elements.end(), image);
        if (it == rep.elements.end()) {
          ok = false;
          break;
        }
        uint32_t im = static_cast<uint32_t>(it - rep.elements.begin());
        e.images.push_back(im);
        hit[im] = true;
      }
      if (!ok) {
        throw std::logic_error("group_endomorphisms_d2: image escaped D_2n");
      }
      e.automorphism =
          std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
      rep.endos.push_back(std::move(e));
    }
  }
  rep.total = rep.endos.size();
  rep.automorphisms = static_cast<uint64_t>(
      std::count_if(rep.endos.begin(), rep.endos.end(),
                    [](const GroupEndo& e) { return e.automorphism; }));
  return rep;
}

}  // namespace otm

#endif  // OTM_PERM_HPP_
