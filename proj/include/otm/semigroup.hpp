// Enumerated transformation monoids on the chain: element generation by
// membership predicate (combinatorial, not filter-the-universe), generating
// sets, closure under composition, and the full Cayley table.
//
// Elements are kept in the canonical order (lexicographic entry arrays with
// "undefined" last), so indices are deterministic and exports reproducible.

#ifndef OTM_SEMIGROUP_HPP_
#define OTM_SEMIGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orientation.hpp"
#include "perm.hpp"
#include "transf.hpp"

namespace otm {

inline constexpr uint32_t npos32 = UINT32_MAX;

// Refuse to materialize anything bigger than this.
inline constexpr uint64_t max_table_entries = 100'000'000;
inline constexpr uint64_t max_element_count = 8'000'000;

struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

enum class Kind { OP, POPI, POP, OR, PORI, POR, O, POI, PO, C, D2, T, I, PT };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::OP: return "op";
    case Kind::POPI: return "popi";
    case Kind::POP: return "pop";
    case Kind::OR: return "or";
    case Kind::PORI: return "pori";
    case Kind::POR: return "por";
    case Kind::O: return "o";
    case Kind::POI: return "poi";
    case Kind::PO: return "po";
    case Kind::C: return "c";
    case Kind::D2: return "d2";
    case Kind::T: return "t";
    case Kind::I: return "i";
    case Kind::PT: return "pt";
  }
  return "?";
}

inline Kind kind_from_string(const std::string& s) {
  static const std::unordered_map<std::string, Kind> table = {
      {"op", Kind::OP},   {"popi", Kind::POPI}, {"pop", Kind::POP},
      {"or", Kind::OR},   {"pori", Kind::PORI}, {"por", Kind::POR},
      {"o", Kind::O},     {"poi", Kind::POI},   {"po", Kind::PO},
      {"c", Kind::C},     {"d2", Kind::D2},     {"t", Kind::T},
      {"i", Kind::I},     {"pt", Kind::PT}};
  auto it = table.find(s);
  if (it == table.end()) {
    throw std::invalid_argument("unknown kind tag: " + s);
  }
  return it->second;
}

// The six classification targets.
inline bool is_classification_kind(Kind k) {
  switch (k) {
    case Kind::OP:
    case Kind::POPI:
    case Kind::POP:
    case Kind::OR:
    case Kind::PORI:
    case Kind::POR:
      return true;
    default:
      return false;
  }
}

inline bool is_partial_kind(Kind k) {
  switch (k) {
    case Kind::POPI:
    case Kind::POP:
    case Kind::PORI:
    case Kind::POR:
    case Kind::POI:
    case Kind::PO:
    case Kind::I:
    case Kind::PT:
      return true;
    default:
      return false;
  }
}

inline bool is_injective_kind(Kind k) {
  return k == Kind::POPI || k == Kind::PORI || k == Kind::POI || k == Kind::I
         || k == Kind::C || k == Kind::D2;
}

// The group of units: cyclic for these, dihedral for the OR-family.
inline bool has_dihedral_units(Kind k) {
  return k == Kind::OR || k == Kind::PORI || k == Kind::POR || k == Kind::D2;
}

// ---------------------------------------------------------------------------
// Sequence generation.  A non-constant cyclic word has exactly one descent
// (wraparound included), hence a unique non-decreasing rotation, so emitting
// every rotation of every non-decreasing word lists each cyclic word once,
// except constants which repeat and are emitted once instead.

namespace seqgen {

template <typename F>
void nondecreasing(uint32_t t, uint32_t n, F&& f) {
  std::vector<uint8_t> s(t, 1);
  if (t == 0) {
    f(s);
    return;
  }
  while (true) {
    f(s);
    int i = static_cast<int>(t) - 1;
    while (i >= 0 && s[i] == n) {
      --i;
    }
    if (i < 0) {
      break;
    }
    uint8_t v = static_cast<uint8_t>(s[i] + 1);
    for (uint32_t j = static_cast<uint32_t>(i); j < t; ++j) {
      s[j] = v;
    }
  }
}

template <typename F>
void words(uint32_t t, uint32_t n, F&& f) {
  std::vector<uint8_t> s(t, 1);
  if (t == 0) {
    f(s);
    return;
  }
  while (true) {
    f(s);
    int i = static_cast<int>(t) - 1;
    while (i >= 0 && s[i] == n) {
      s[i] = 1;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++s[i];
  }
}

inline bool is_constant(const std::vector<uint8_t>& s) {
  return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>())
         == s.end();
}

template <typename F>
void cyclic(uint32_t t, uint32_t n, F&& f) {
  nondecreasing(t, n, [&](const std::vector<uint8_t>& base) {
    if (t <= 1 || is_constant(base)) {
      f(base);
      return;
    }
    std::vector<uint8_t> rot(base);
    for (uint32_t r = 0; r < t; ++r) {
      f(rot);
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  });
}

template <typename F>
void anticyclic(uint32_t t, uint32_t n, F&& f) {
  cyclic(t, n, [&](const std::vector<uint8_t>& s) {
    std::vector<uint8_t> rev(s.rbegin(), s.rend());
    f(rev);
  });
}

struct VecHash {
  size_t operator()(const std::vector<uint8_t>& v) const noexcept {
    size_t h = 0xcbf29ce484222325ull;
    for (uint8_t x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

template <typename F>
void oriented(uint32_t t, uint32_t n, F&& f) {
  std::unordered_set<std::vector<uint8_t>, VecHash> seen;
  cyclic(t, n, [&](const std::vector<uint8_t>& s) {
    if (seen.insert(s).second) {
      f(s);
    }
  });
  anticyclic(t, n, [&](const std::vector<uint8_t>& s) {
    if (seen.insert(s).second) {
      f(s);
    }
  });
}

// Injective variants run over the arrangements of a fixed value set.
template <typename F>
void injective_all(const std::vector<uint8_t>& values, F&& f) {
  std::vector<uint8_t> s(values);
  std::sort(s.begin(), s.end());
  do {
    f(s);
  } while (std::next_permutation(s.begin(), s.end()));
}

template <typename F>
void injective_cyclic(const std::vector<uint8_t>& values, F&& f) {
  std::vector<uint8_t> s(values);
  std::sort(s.begin(), s.end());
  uint32_t t = static_cast<uint32_t>(s.size());
  if (t <= 1) {
    f(s);
    return;
  }
  for (uint32_t r = 0; r < t; ++r) {
    f(s);
    std::rotate(s.begin(), s.begin() + 1, s.end());
  }
}

template <typename F>
void injective_oriented(const std::vector<uint8_t>& values, F&& f) {
  injective_cyclic(values, f);
  uint32_t t = static_cast<uint32_t>(values.size());
  if (t <= 2) {
    return;  // cyclic and anti-cyclic arrangements coincide
  }
  std::vector<uint8_t> s(values);
  std::sort(s.begin(), s.end(), std::greater<>());
  for (uint32_t r = 0; r < t; ++r) {
    f(s);
    std::rotate(s.begin(), s.begin() + 1, s.end());
  }
}

template <typename F>
void subsets_of_size(uint32_t n, uint32_t k, F&& f) {
  std::vector<uint8_t> idx(k);
  std::iota(idx.begin(), idx.end(), uint8_t(1));
  if (k == 0) {
    f(idx);
    return;
  }
  if (k > n) {
    return;
  }
  while (true) {
    f(idx);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++idx[i];
    for (uint32_t j = static_cast<uint32_t>(i) + 1; j < k; ++j) {
      idx[j] = static_cast<uint8_t>(idx[j - 1] + 1);
    }
  }
}

}  // namespace seqgen

// ---------------------------------------------------------------------------

namespace detail {

inline PartialTransf place(uint32_t n, const std::vector<uint8_t>& domain,
                           const std::vector<uint8_t>& images) {
  PartialTransf t(n);
  for (size_t i = 0; i < domain.size(); ++i) {
    t.set(domain[i], images[i]);
  }
  return t;
}

template <typename SeqVisitor>
void full_elements(uint32_t n, std::vector<PartialTransf>& out,
                   SeqVisitor&& visit) {
  std::vector<uint8_t> domain(n);
  std::iota(domain.begin(), domain.end(), uint8_t(1));
  visit(n, [&](const std::vector<uint8_t>& seq) {
    out.push_back(place(n, domain, seq));
    if (out.size() > max_element_count) {
      throw CapacityError("element enumeration exceeded the capacity guard");
    }
  });
}

template <typename SeqVisitor>
void partial_elements(uint32_t n, std::vector<PartialTransf>& out,
                      SeqVisitor&& visit) {
  for (uint32_t k = 0; k <= n; ++k) {
    seqgen::subsets_of_size(n, k, [&](const std::vector<uint8_t>& domain) {
      visit(k, [&](const std::vector<uint8_t>& seq) {
        out.push_back(place(n, domain, seq));
        if (out.size() > max_element_count) {
          throw CapacityError("element enumeration exceeded the capacity guard");
        }
      });
    });
  }
}

}  // namespace detail

// Exactly the members of the kind, generated combinatorially per domain.
inline std::vector<PartialTransf> elements_by_predicate(Kind kind, uint32_t n) {
  if (n < 1) {
    throw std::invalid_argument("elements_by_predicate: n must be >= 1");
  }
  if (kind == Kind::T || kind == Kind::PT) {
    // cheap up-front size estimate for the uniform kinds
    uint64_t base = kind == Kind::T ? n : n + 1;
    uint64_t estimate = 1;
    for (uint32_t i = 0; i < n && estimate <= max_element_count; ++i) {
      estimate *= base;
    }
    if (estimate > max_element_count) {
      throw CapacityError("element enumeration exceeded the capacity guard");
    }
  }
  std::vector<PartialTransf> out;
  switch (kind) {
    case Kind::T:
      detail::full_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::words(t, n, f);
      });
      break;
    case Kind::O:
      detail::full_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::nondecreasing(t, n, f);
      });
      break;
    case Kind::OP:
      detail::full_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::cyclic(t, n, f);
      });
      break;
    case Kind::OR:
      detail::full_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::oriented(t, n, f);
      });
      break;
    case Kind::PT:
      detail::partial_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::words(t, n, f);
      });
      break;
    case Kind::PO:
      detail::partial_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::nondecreasing(t, n, f);
      });
      break;
    case Kind::POP:
      detail::partial_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::cyclic(t, n, f);
      });
      break;
    case Kind::POR:
      detail::partial_elements(n, out, [&](uint32_t t, auto f) {
        seqgen::oriented(t, n, f);
      });
      break;
    case Kind::I:
    case Kind::POI:
    case Kind::POPI:
    case Kind::PORI:
      for (uint32_t k = 0; k <= n; ++k) {
        seqgen::subsets_of_size(n, k, [&](const std::vector<uint8_t>& domain) {
          seqgen::subsets_of_size(n, k, [&](const std::vector<uint8_t>& image) {
            auto emit = [&](const std::vector<uint8_t>& seq) {
              out.push_back(detail::place(n, domain, seq));
              if (out.size() > max_element_count) {
                throw CapacityError(
                    "element enumeration exceeded the capacity guard");
              }
            };
            switch (kind) {
              case Kind::I: seqgen::injective_all(image, emit); break;
              case Kind::POI: emit(image); break;  // already sorted
              case Kind::POPI: seqgen::injective_cyclic(image, emit); break;
              default: seqgen::injective_oriented(image, emit); break;
            }
          });
        });
      }
      break;
    case Kind::C:
      for (const Perm& p : cyclic_elements(n)) {
        out.push_back(p.as_transf());
      }
      break;
    case Kind::D2:
      for (const Perm& p : dihedral_elements(n)) {
        out.push_back(p.as_transf());
      }
      break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

// ---------------------------------------------------------------------------
// Generating sets.
//
// The order-preserving cores are idempotent-generated: O_n by the 2(n-1)
// rank-(n-1) idempotents that collapse one adjacent pair, PO_n by those plus
// the n partial identities of rank n-1 (a partial order-preserving map is a
// partial identity followed by a full order-preserving extension).  The
// oriented kinds then need only g, and h on top for the OR-family.  The
// injective kinds use the two-generator presentation {g, s1}.  Correctness is
// certified by the closure-equals-predicate cross check, not assumed.

// Collapses i,i+1 -> i+1 (up) or i+1,i -> i (down); both fix everything else.
inline PartialTransf adjacent_collapse(uint32_t n, uint32_t i, bool up) {
  PartialTransf t = PartialTransf::identity(n);
  if (up) {
    t.set(i, i + 1);
  } else {
    t.set(i + 1, i);
  }
  return t;
}

inline PartialTransf partial_identity(uint32_t n, uint64_t domain_mask) {
  PartialTransf t(n);
  for (uint32_t i = 1; i <= n; ++i) {
    if ((domain_mask >> (i - 1)) & 1) {
      t.set(i, i);
    }
  }
  return t;
}

// s1 fixes 1..n-2 and sends n-1 to n; undefined at n.
inline PartialTransf make_s1(uint32_t n) {
  PartialTransf t(n);
  for (uint32_t i = 1; i + 2 <= n; ++i) {
    t.set(i, i);
  }
  t.set(n - 1, n);
  return t;
}

inline std::vector<PartialTransf> generator_set(Kind kind, uint32_t n) {
  auto g = make_g(n).as_transf();
  auto h = make_h(n).as_transf();
  auto o_gens = [&]() {
    std::vector<PartialTransf> v;
    for (uint32_t i = 1; i < n; ++i) {
      v.push_back(adjacent_collapse(n, i, true));
      v.push_back(adjacent_collapse(n, i, false));
    }
    return v;
  };
  auto pids = [&]() {
    std::vector<PartialTransf> v;
    for (uint32_t i = 1; i <= n; ++i) {
      uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
      v.push_back(partial_identity(n, all & ~(uint64_t(1) << (i - 1))));
    }
    return v;
  };
  std::vector<PartialTransf> gens;
  switch (kind) {
    case Kind::C:
      return {g};
    case Kind::D2:
      return {g, h};
    case Kind::OP:
      gens.push_back(g);
      break;
    case Kind::OR:
      gens.push_back(g);
      gens.push_back(h);
      break;
    case Kind::POP:
      gens.push_back(g);
      break;
    case Kind::POR:
      gens.push_back(g);
      gens.push_back(h);
      break;
    case Kind::POPI:
      return {g, make_s1(n)};
    case Kind::PORI:
      return {g, h, make_s1(n)};
    default:
      throw std::invalid_argument(std::string("generator_set: unsupported kind ")
                                  + to_string(kind));
  }
  if (n < 3) {
    throw std::invalid_argument("generator_set: oriented kinds need n >= 3");
  }
  // collapses before partial identities: one collapse together with g already
  // generates the full orientation-preserving part, so the endomorphism
  // search gets its strongest propagation as early as possible
  for (auto& e : o_gens()) {
    gens.push_back(e);
  }
  if (kind == Kind::POP || kind == Kind::POR) {
    for (auto& p : pids()) {
      gens.push_back(p);
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------

struct FiniteSemigroup {
  Kind kind;
  uint32_t n;
  std::vector<PartialTransf> elements;  // canonical order
  std::vector<uint32_t> table;          // row-major: table[i*size+j] = e_i e_j
  uint32_t identity = npos32;
  std::vector<uint32_t> generators;
  std::vector<uint8_t> ranks;

  uint32_t size() const noexcept {
    return static_cast<uint32_t>(elements.size());
  }

  uint32_t product(uint32_t i, uint32_t j) const {
    return table[size_t(i) * elements.size() + j];
  }

  const PartialTransf& at(uint32_t i) const {
    return elements[i];
  }

  uint32_t find(const PartialTransf& t) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), t,
                               CanonicalLess{});
    if (it == elements.end() || !(*it == t)) {
      return npos32;
    }
    return static_cast<uint32_t>(it - elements.begin());
  }

  bool is_idempotent(uint32_t i) const {
    return product(i, i) == i;
  }

  uint32_t rank_of(uint32_t i) const {
    return ranks[i];
  }

  uint32_t power(uint32_t s, uint32_t e) const {
    // e >= 1
    uint32_t r = s;
    for (uint32_t i = 1; i < e; ++i) {
      r = product(r, s);
    }
    return r;
  }
};

namespace detail {

inline void build_table(FiniteSemigroup& S) {
  uint64_t sz = S.elements.size();
  if (sz * sz > max_table_entries) {
    throw CapacityError("Cayley table would exceed the capacity guard of "
                        + std::to_string(max_table_entries) + " entries");
  }
  std::unordered_map<PartialTransf, uint32_t, TransfHash> index;
  index.reserve(sz * 2);
  for (uint32_t i = 0; i < sz; ++i) {
    index.emplace(S.elements[i], i);
  }
  S.table.resize(sz * sz);
  for (uint32_t i = 0; i < sz; ++i) {
    for (uint32_t j = 0; j < sz; ++j) {
      auto it = index.find(compose(S.elements[i], S.elements[j]));
      if (it == index.end()) {
        throw std::logic_error("build_table: element set is not closed");
      }
      S.table[size_t(i) * sz + j] = it->second;
    }
  }
  S.ranks.resize(sz);
  for (uint32_t i = 0; i < sz; ++i) {
    S.ranks[i] = static_cast<uint8_t>(S.elements[i].rank());
  }
  S.identity = S.find(PartialTransf::identity(S.n));
}

}  // namespace detail

inline FiniteSemigroup make_semigroup(Kind kind, uint32_t n) {
  FiniteSemigroup S;
  S.kind = kind;
  S.n = n;
  S.elements = elements_by_predicate(kind, n);
  detail::build_table(S);
  try {
    for (const PartialTransf& gen : generator_set(kind, n)) {
      uint32_t idx = S.find(gen);
      if (idx == npos32) {
        throw std::logic_error("make_semigroup: generator not in element set");
      }
      S.generators.push_back(idx);
    }
  } catch (const std::invalid_argument&) {
    // kinds without a distinguished generating set
  }
  return S;
}

// BFS closure of a generating set under composition; the result carries the
// same canonical order as make_semigroup so the two can be compared directly.
inline FiniteSemigroup closure(uint32_t n,
                               const std::vector<PartialTransf>& gens,
                               Kind label) {
  std::unordered_set<PartialTransf, TransfHash> seen;
  std::vector<PartialTransf> work;
  for (const PartialTransf& gen : gens) {
    if (gen.n() != n) {
      throw std::invalid_argument("closure: generator has wrong chain size");
    }
    if (seen.insert(gen).second) {
      work.push_back(gen);
    }
  }
  for (size_t i = 0; i < work.size(); ++i) {
    PartialTransf cur = work[i];
    for (const PartialTransf& gen : gens) {
      PartialTransf p = compose(cur, gen);
      if (seen.insert(p).second) {
        work.push_back(p);
        if (work.size() > max_element_count) {
          throw CapacityError("closure exceeded the capacity guard");
        }
      }
    }
  }
  FiniteSemigroup S;
  S.kind = label;
  S.n = n;
  S.elements = std::move(work);
  std::sort(S.elements.begin(), S.elements.end(), CanonicalLess{});
  detail::build_table(S);
  for (const PartialTransf& gen : gens) {
    S.generators.push_back(S.find(gen));
  }
  return S;
}

// ---------------------------------------------------------------------------
// Binary Cayley export: 16-byte header (magic "OTMC", n, size, index width),
// then size*size indices row-major, little-endian.

namespace detail {

inline void put_u32(std::ostream& os, uint32_t v) {
  char b[4] = {char(v & 0xff), char((v >> 8) & 0xff), char((v >> 16) & 0xff),
               char((v >> 24) & 0xff)};
  os.write(b, 4);
}

inline uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16
         | uint32_t(b[3]) << 24;
}

}  // namespace detail

inline void write_cayley(const FiniteSemigroup& S, std::ostream& os) {
  uint32_t size = S.size();
  uint32_t width = size <= 0xff ? 1 : size <= 0xffff ? 2 : 4;
  os.write("OTMC", 4);
  detail::put_u32(os, S.n);
  detail::put_u32(os, size);
  detail::put_u32(os, width);
  for (uint32_t v : S.table) {
    for (uint32_t b = 0; b < width; ++b) {
      os.put(char((v >> (8 * b)) & 0xff));
    }
  }
}

struct CayleyFile {
  uint32_t n;
  uint32_t size;
  std::vector<uint32_t> table;
};

inline CayleyFile read_cayley(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (std::string(magic, 4) != "OTMC") {
    throw std::invalid_argument("read_cayley: bad magic");
  }
  CayleyFile f;
  f.n = detail::get_u32(is);
  f.size = detail::get_u32(is);
  uint32_t width = detail::get_u32(is);
  f.table.resize(uint64_t(f.size) * f.size);
  for (uint32_t& v : f.table) {
    v = 0;
    for (uint32_t b = 0; b < width; ++b) {
      int c = is.get();
      if (c == EOF) {
        throw std::invalid_argument("read_cayley: truncated table");
      }
      v |= uint32_t(uint8_t(c)) << (8 * b);
    }
  }
  return f;
}

}  // namespace otm

#endif  // OTM_SEMIGROUP_HPP_
