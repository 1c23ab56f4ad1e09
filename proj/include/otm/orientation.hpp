// Cyclic / anti-cyclic sequence predicates and the orientation classification
// of a partial transformation.
//
// A sequence (a_1,...,a_t) over the chain is cyclic when at most one index i
// has a_i > a_{i+1}, reading indices cyclically (a_{t+1} = a_1); anti-cyclic
// is the dual with ascents.  A transformation is orientation-preserving
// [-reversing] when the sequence of its images over the sorted domain is
// cyclic [anti-cyclic], and oriented when it is either.

#ifndef OTM_ORIENTATION_HPP_
#define OTM_ORIENTATION_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "transf.hpp"

namespace otm {

namespace detail {

inline void check_chain_values(std::span<const int> seq, int n) {
  for (int v : seq) {
    if (v < 1 || v > n) {
      throw std::domain_error("sequence value out of the chain {1..n}");
    }
  }
}

inline int cyclic_descents(std::span<const int> seq) {
  int t = static_cast<int>(seq.size());
  int descents = 0;
  for (int i = 0; i < t; ++i) {
    if (seq[i] > seq[(i + 1) % t]) {
      ++descents;
    }
  }
  return descents;
}

inline int cyclic_ascents(std::span<const int> seq) {
  int t = static_cast<int>(seq.size());
  int ascents = 0;
  for (int i = 0; i < t; ++i) {
    if (seq[i] < seq[(i + 1) % t]) {
      ++ascents;
    }
  }
  return ascents;
}

}  // namespace detail

// Empty and constant sequences are both cyclic and anti-cyclic; no special
// casing, the descent/ascent counts are simply zero.
inline bool is_cyclic(std::span<const int> seq, int n) {
  detail::check_chain_values(seq, n);
  return detail::cyclic_descents(seq) <= 1;
}

inline bool is_anticyclic(std::span<const int> seq, int n) {
  detail::check_chain_values(seq, n);
  return detail::cyclic_ascents(seq) <= 1;
}

inline bool is_cyclic(const std::vector<int>& seq, int n) {
  return is_cyclic(std::span<const int>(seq), n);
}

inline bool is_anticyclic(const std::vector<int>& seq, int n) {
  return is_anticyclic(std::span<const int>(seq), n);
}

struct OrientationClass {
  bool order_preserving;
  bool order_reversing;
  bool orientation_preserving;
  bool orientation_reversing;

  bool oriented() const noexcept {
    return orientation_preserving || orientation_reversing;
  }
};

// Image sequence of t over its sorted domain.
inline std::vector<int> image_sequence(const PartialTransf& t) {
  std::vector<int> seq;
  for (uint32_t i = 1; i <= t.n(); ++i) {
    if (t.defined(i)) {
      seq.push_back(static_cast<int>(t[i]));
    }
  }
  return seq;
}

inline OrientationClass classify_orientation(const PartialTransf& t) {
  std::vector<int> seq = image_sequence(t);
  OrientationClass c{};
  c.order_preserving = true;
  c.order_reversing = true;
  for (size_t i = 1; i < seq.size(); ++i) {
    if (seq[i - 1] > seq[i]) {
      c.order_preserving = false;
    }
    if (seq[i - 1] < seq[i]) {
      c.order_reversing = false;
    }
  }
  c.orientation_preserving = detail::cyclic_descents(seq) <= 1;
  c.orientation_reversing = detail::cyclic_ascents(seq) <= 1;
  return c;
}

}  // namespace otm

#endif  // OTM_ORIENTATION_HPP_
