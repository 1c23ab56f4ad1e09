// otm - oriented transformation monoids on a finite chain
//
// Partial transformations of the chain {1 < 2 < ... < n}.  Transformations
// act on the right, so x(ab) = (xa)b, and every point and value crossing the
// public interface is 1-based.  Internally an image of 0 means "undefined".

#ifndef OTM_TRANSF_HPP_
#define OTM_TRANSF_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace otm {

// Chain sizes are capped so that point sets fit into one 64-bit mask.
inline constexpr uint32_t max_chain = 64;

class PartialTransf {
 public:
  static constexpr uint8_t undef = 0;

  // The map with empty domain on {1..n}.
  explicit PartialTransf(uint32_t n) : _n(checked(n)), _img(n, undef) {}

  PartialTransf(uint32_t n, std::vector<uint8_t> img)
      : _n(checked(n)), _img(std::move(img)) {
    if (_img.size() != _n) {
      throw std::invalid_argument("PartialTransf: image vector has wrong length");
    }
    for (uint8_t v : _img) {
      if (v > _n) {
        throw std::domain_error("PartialTransf: image value out of chain");
      }
    }
  }

  static PartialTransf identity(uint32_t n) {
    PartialTransf t(n);
    for (uint32_t i = 1; i <= n; ++i) {
      t.set(i, i);
    }
    return t;
  }

  static PartialTransf empty(uint32_t n) {
    return PartialTransf(n);
  }

  uint32_t n() const noexcept {
    return _n;
  }

  bool defined(uint32_t i) const {
    return _img[i - 1] != undef;
  }

  // Image of point i, or 0 when i is not in the domain.
  uint32_t operator[](uint32_t i) const {
    return _img[i - 1];
  }

  void set(uint32_t i, uint32_t j) {
    if (i < 1 || i > _n || j > _n) {
      throw std::domain_error("PartialTransf::set: point out of chain");
    }
    _img[i - 1] = static_cast<uint8_t>(j);
  }

  void unset(uint32_t i) {
    _img[i - 1] = undef;
  }

  const std::vector<uint8_t>& entries() const noexcept {
    return _img;
  }

  uint64_t domain_mask() const noexcept {
    uint64_t m = 0;
    for (uint32_t i = 0; i < _n; ++i) {
      if (_img[i] != undef) {
        m |= uint64_t(1) << i;
      }
    }
    return m;
  }

  uint64_t image_mask() const noexcept {
    uint64_t m = 0;
    for (uint32_t i = 0; i < _n; ++i) {
      if (_img[i] != undef) {
        m |= uint64_t(1) << (_img[i] - 1);
      }
    }
    return m;
  }

  uint64_t fix_mask() const noexcept {
    uint64_t m = 0;
    for (uint32_t i = 0; i < _n; ++i) {
      if (_img[i] == i + 1) {
        m |= uint64_t(1) << i;
      }
    }
    return m;
  }

  uint32_t domain_size() const noexcept {
    return static_cast<uint32_t>(__builtin_popcountll(domain_mask()));
  }

  uint32_t rank() const noexcept {
    return static_cast<uint32_t>(__builtin_popcountll(image_mask()));
  }

  bool is_full() const noexcept {
    return domain_size() == _n;
  }

  bool is_injective() const noexcept {
    return rank() == domain_size();
  }

  bool is_permutation() const noexcept {
    return is_full() && rank() == _n;
  }

  // e is idempotent iff ee = e, equivalently Fix(e) = Im(e) with Im(e) inside
  // the domain.
  bool is_idempotent() const noexcept {
    for (uint32_t i = 0; i < _n; ++i) {
      uint8_t j = _img[i];
      if (j != undef && _img[j - 1] != j) {
        return false;
      }
    }
    return true;
  }

  // Canonical kernel encoding: position i holds 0 when i+1 is outside the
  // domain, otherwise the 1-based block number in order of first occurrence.
  // Two transformations have equal kernels iff the encodings are equal.
  std::vector<uint8_t> kernel_code() const {
    std::vector<uint8_t> code(_n, 0);
    std::vector<uint8_t> block_of_value(_n + 1, 0);
    uint8_t next = 0;
    for (uint32_t i = 0; i < _n; ++i) {
      uint8_t j = _img[i];
      if (j == undef) {
        continue;
      }
      if (block_of_value[j] == 0) {
        block_of_value[j] = ++next;
      }
      code[i] = block_of_value[j];
    }
    return code;
  }

  friend bool operator==(const PartialTransf& a, const PartialTransf& b) {
    return a._n == b._n && a._img == b._img;
  }

  friend bool operator!=(const PartialTransf& a, const PartialTransf& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string s = "[";
    for (uint32_t i = 0; i < _n; ++i) {
      if (i > 0) {
        s += ",";
      }
      s += _img[i] == undef ? "-" : std::to_string(int(_img[i]));
    }
    s += "]";
    return s;
  }

 private:
  static uint32_t checked(uint32_t n) {
    if (n < 1 || n > max_chain) {
      throw std::invalid_argument("PartialTransf: chain size must be in 1.."
                                  + std::to_string(max_chain));
    }
    return n;
  }

  uint32_t _n;
  std::vector<uint8_t> _img;
};

// Canonical element order: lexicographic on the entry array, with "undefined"
// sorting after every defined value.  Gives deterministic indices everywhere.
inline bool canonical_less(const PartialTransf& a, const PartialTransf& b) {
  uint32_t n = a.n();
  for (uint32_t i = 1; i <= n; ++i) {
    uint32_t x = a[i] == PartialTransf::undef ? n + 1 : a[i];
    uint32_t y = b[i] == PartialTransf::undef ? n + 1 : b[i];
    if (x != y) {
      return x < y;
    }
  }
  return false;
}

struct CanonicalLess {
  bool operator()(const PartialTransf& a, const PartialTransf& b) const {
    return canonical_less(a, b);
  }
};

struct TransfHash {
  size_t operator()(const PartialTransf& t) const noexcept {
    size_t h = 0xcbf29ce484222325ull;
    for (uint8_t v : t.entries()) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Right-action composition: x(ab) = (xa)b, defined exactly where xa is
// defined and xa lies in Dom(b).
inline PartialTransf compose(const PartialTransf& a, const PartialTransf& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("compose: mismatched chain sizes");
  }
  PartialTransf r(a.n());
  for (uint32_t i = 1; i <= a.n(); ++i) {
    uint32_t j = a[i];
    if (j != PartialTransf::undef && b[j] != PartialTransf::undef) {
      r.set(i, b[j]);
    }
  }
  return r;
}

// Restriction of t to Dom(t) ∩ X, X given as a bit mask.
inline PartialTransf restrict_to(const PartialTransf& t, uint64_t x_mask) {
  PartialTransf r(t.n());
  for (uint32_t i = 1; i <= t.n(); ++i) {
    if ((x_mask >> (i - 1)) & 1 && t.defined(i)) {
      r.set(i, t[i]);
    }
  }
  return r;
}

inline std::vector<uint32_t> mask_to_points(uint64_t mask, uint32_t n) {
  std::vector<uint32_t> pts;
  for (uint32_t i = 1; i <= n; ++i) {
    if ((mask >> (i - 1)) & 1) {
      pts.push_back(i);
    }
  }
  return pts;
}

struct StructureInfo {
  std::vector<uint32_t> domain;
  std::vector<uint32_t> image;
  uint32_t rank;
  std::vector<std::vector<uint32_t>> kernel;  // blocks of Dom by equal image
  std::vector<uint32_t> fixed_points;
  bool idempotent;
};

inline StructureInfo structure(const PartialTransf& t) {
  StructureInfo info;
  info.domain = mask_to_points(t.domain_mask(), t.n());
  info.image = mask_to_points(t.image_mask(), t.n());
  info.rank = t.rank();
  info.fixed_points = mask_to_points(t.fix_mask(), t.n());
  info.idempotent = t.is_idempotent();
  std::vector<std::vector<uint32_t>> blocks(t.n() + 1);
  for (uint32_t i : info.domain) {
    blocks[t[i]].push_back(i);
  }
  for (uint32_t v = 1; v <= t.n(); ++v) {
    if (!blocks[v].empty()) {
      info.kernel.push_back(std::move(blocks[v]));
    }
  }
  return info;
}

}  // namespace otm

#endif  // OTM_TRANSF_HPP_
