// Exact integer evaluation of every endomorphism-counting formula: Fibonacci
// and Lucas closed forms for idempotent totals, per-rank idempotent counts of
// the orientation-preserving kinds, the eps/delta divisor counts, the
// involution fixed-point case counts, per-type subtotals, and the grand
// totals.  Everything runs in arbitrary precision; the golden-ratio powers
// tau^{2k} + theta^{2k} are Lucas numbers and stay in integer arithmetic.

#ifndef OTM_COUNTING_HPP_
#define OTM_COUNTING_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace otm {

using Int = boost::multiprecision::cpp_int;

// F_1 = F_2 = 1 (and F_0 = 0).  The indexing is pinned by the requirement
// that the rank-k idempotent factor at k = n reproduces the direct idempotent
// count of the full orientation-preserving monoid (10 at n = 3).
inline Int fib(int64_t i) {
  if (i < 0) {
    throw std::invalid_argument("fib: negative index");
  }
  Int a = 0, b = 1;
  for (int64_t j = 0; j < i; ++j) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

// Lucas numbers with even index: L_{2k} = tau^{2k} + theta^{2k} exactly,
// where tau, theta = (1 +- sqrt(5))/2.  L_0 = 2, L_1 = 1.
inline Int lucas_even(int64_t k) {
  if (k < 0) {
    throw std::invalid_argument("lucas_even: negative index");
  }
  Int a = 2, b = 1;
  for (int64_t j = 0; j < 2 * k; ++j) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return a;
}

// Out-of-range arguments give 0, which the rank-2 columns rely on.
inline Int binom(int64_t a, int64_t b) {
  if (b < 0 || a < 0 || b > a) {
    return 0;
  }
  Int r = 1;
  for (int64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
  }
  return r;
}

inline Int pow_int(Int base, int64_t e) {
  if (e < 0) {
    throw std::invalid_argument("pow_int: negative exponent");
  }
  Int r = 1;
  for (int64_t i = 0; i < e; ++i) {
    r *= base;
  }
  return r;
}

// eps(n,k): elements of a cyclic group of order k whose order is a divisor
// of n greater than one.
inline int64_t eps_count(int64_t n, int64_t k) {
  if (k < 1) {
    throw std::invalid_argument("eps_count: k must be >= 1");
  }
  int64_t c = 0;
  for (int64_t t = 1; t < k; ++t) {
    int64_t order = k / std::gcd(t, k);
    if (n % order == 0) {
      ++c;
    }
  }
  return c;
}

// delta(n,k) = 1 iff n and k are both even.
inline int parity_delta(int64_t n, int64_t k) {
  int64_t v = ((n + k) % 2 == 0 ? 1 : -1) + (n % 2 == 0 ? 1 : -1)
              + (k % 2 == 0 ? 1 : -1) + 1;
  return static_cast<int>(v / 4);
}

// Number of rank-k idempotents of the full orientation-preserving monoid:
// n for k = 1, else sum_{i=1}^{n-k+1} i^2 C(n-i+k-2, 2k-3).
inline Int count_idem_op_rank(int64_t n, int64_t k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("count_idem_op_rank: rank out of range");
  }
  if (k == 1) {
    return n;
  }
  Int total = 0;
  for (int64_t i = 1; i <= n - k + 1; ++i) {
    total += Int(i) * i * binom(n - i + k - 2, 2 * k - 3);
  }
  return total;
}

// Partial analogue: pick the domain, then a full idempotent on it.
// Equals n 2^{n-1} at k = 1.
inline Int count_idem_pop_rank(int64_t n, int64_t k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("count_idem_pop_rank: rank out of range");
  }
  Int total = 0;
  for (int64_t i = k; i <= n; ++i) {
    total += binom(n, i) * count_idem_op_rank(i, k);
  }
  return total;
}

// Idempotent count of a whole kind, by summing the per-rank counts (the
// injective kinds have binom(n,k) partial identities per rank, plus the
// empty map).
inline Int count_idempotents_formula(Kind kind, int64_t n) {
  switch (kind) {
    case Kind::OP:
    case Kind::OR: {
      Int t = 0;
      for (int64_t k = 1; k <= n; ++k) {
        t += count_idem_op_rank(n, k);
      }
      return t;
    }
    case Kind::POPI:
    case Kind::PORI:
      return pow_int(2, n);
    case Kind::POP:
    case Kind::POR: {
      Int t = 1;
      for (int64_t k = 1; k <= n; ++k) {
        t += count_idem_pop_rank(n, k);
      }
      return t;
    }
    default:
      throw std::invalid_argument("count_idempotents_formula: unsupported kind");
  }
}

// Fibonacci / power / Lucas factors: |{f idempotent : ef = fe = f}| for an
// idempotent e of rank k, per kind family.
inline Int e_count(Kind kind, int64_t k) {
  if (k < 0) {
    throw std::invalid_argument("e_count: negative rank");
  }
  switch (kind) {
    case Kind::OP:
    case Kind::OR:
      if (k < 1) {
        throw std::invalid_argument("e_count: full kinds have rank >= 1");
      }
      return fib(2 * k - 1) + fib(2 * k + 1) - k * k + k - 2;
    case Kind::POPI:
    case Kind::PORI:
      return pow_int(2, k);
    case Kind::POP:
    case Kind::POR: {
      Int t = 1;
      for (int64_t i = 1; i <= k; ++i) {
        t += binom(k, i) * (lucas_even(i) - i * i + i - 2);
      }
      return t;
    }
    default:
      throw std::invalid_argument("e_count: unsupported kind");
  }
}

// |{f idempotent : h0 f = f h0 = f}| for an order-2 group element h0 of rank
// k with the given number of fixed points.  fixcount parity is forced by k:
// one fixed point needs k odd, zero or two need k even.
inline Int h0_count(Kind kind, int64_t k, int fixcount) {
  if (fixcount < 0 || fixcount > 2) {
    throw std::invalid_argument("h0_count: fixcount must be 0, 1 or 2");
  }
  bool k_even = k % 2 == 0;
  if ((fixcount == 1) == k_even) {
    throw std::invalid_argument("h0_count: fixcount inconsistent with rank parity");
  }
  switch (kind) {
    case Kind::PORI:
      return fixcount == 0 ? 1 : fixcount == 1 ? 2 : 4;
    case Kind::OR:
      if (fixcount == 0) {
        return 0;
      }
      if (fixcount == 1) {
        return 1;
      }
      return Int(k) / 2 + 2;
    case Kind::POR:
      if (fixcount == 0) {
        return 1;
      }
      if (fixcount == 1) {
        return 1 + pow_int(2, (k - 1) / 2);
      }
      // (k/2 + 9) 2^{k/2 - 2}, kept integral as (k/2 + 9) 2^{k/2} / 4
      return 1 + (Int(k) / 2 + 9) * pow_int(2, k / 2) / 4;
    default:
      throw std::invalid_argument("h0_count: unsupported kind");
  }
}

// Aggregate of h0_count over all order-2 group elements of one rank-k
// maximal subgroup.
inline Int h0_hclass_aggregate(Kind kind, int64_t k) {
  if (k < 2) {
    return 0;
  }
  Int two_k = ((k % 2 == 0) ? 1 : 0);
  switch (kind) {
    case Kind::PORI:
      if (k == 2) {
        return 1;
      }
      return 2 * Int(k) + two_k * (1 + Int(k) / 2);
    case Kind::OR:
      if (k == 2) {
        return 0;
      }
      return Int(k) + two_k * Int(k) * k / 4;
    case Kind::POR: {
      if (k == 2) {
        return 1;
      }
      Int base = Int(k) + Int(k) * pow_int(2, k / 2);
      if (k % 2 == 0) {
        base += 1 + Int(k) * (k + 2) * pow_int(2, k / 2) / 16;
      }
      return base;
    }
    default:
      throw std::invalid_argument("h0_hclass_aggregate: unsupported kind");
  }
}

// |E(J_k)| per kind.
inline Int idem_rank_count(Kind kind, int64_t n, int64_t k) {
  switch (kind) {
    case Kind::OP:
    case Kind::OR:
      return count_idem_op_rank(n, k);
    case Kind::POPI:
    case Kind::PORI:
      return binom(n, k);
    case Kind::POP:
    case Kind::POR:
      return k == 0 ? Int(1) : count_idem_pop_rank(n, k);
    default:
      throw std::invalid_argument("idem_rank_count: unsupported kind");
  }
}

// ---------------------------------------------------------------------------
// Per-type subtotals.

inline Int type1_count(Kind, int64_t n) {
  return 2 * Int(n);
}

inline Int type2_count(Kind kind, int64_t n) {
  if (kind == Kind::OP || kind == Kind::OR) {
    return 0;
  }
  return Int(n) * totient(static_cast<uint32_t>(n));
}

// Types 3 and 7 together: sum over idempotents e of |E_S(e)|.
inline Int type37_count(Kind kind, int64_t n) {
  switch (kind) {
    case Kind::OP:
    case Kind::OR: {
      Int t = 0;
      for (int64_t k = 1; k <= n; ++k) {
        t += count_idem_op_rank(n, k) * e_count(kind, k);
      }
      return t;
    }
    case Kind::POPI:
    case Kind::PORI:
      return pow_int(3, n);
    case Kind::POP:
    case Kind::POR: {
      Int t = 1;  // the empty map, whose factor is 1
      for (int64_t k = 1; k <= n; ++k) {
        t += count_idem_pop_rank(n, k) * e_count(kind, k);
      }
      return t;
    }
    default:
      throw std::invalid_argument("type37_count: unsupported kind");
  }
}

inline Int type4_count(Kind kind, int64_t n) {
  if (kind != Kind::POPI && kind != Kind::POP) {
    return 0;
  }
  Int t = 0;
  for (int64_t k = 2; k <= n; ++k) {
    t += idem_rank_count(kind, n, k) * eps_count(n, k);
  }
  return t;
}

inline Int type5_count(Kind kind, int64_t n) {
  if (kind != Kind::PORI && kind != Kind::POR) {
    return 0;
  }
  Int t = 0;
  for (int64_t k = 3; k <= n; ++k) {
    t += idem_rank_count(kind, n, k) * k
         * (eps_count(n, k) + 2 * parity_delta(n, k));
  }
  return t;
}

inline Int type6_count(Kind kind, int64_t n) {
  if (kind != Kind::OR && kind != Kind::PORI && kind != Kind::POR) {
    return 0;
  }
  Int variants = (n % 2 == 0 ? 1 : -1) + 2;  // 3 when n is even, else 1
  Int t = 0;
  for (int64_t k = 2; k <= n; ++k) {
    t += idem_rank_count(kind, n, k) * h0_hclass_aggregate(kind, k);
  }
  return variants * t;
}

// ---------------------------------------------------------------------------
// Grand totals, written as the closed forms of the counting theorems; the
// per-type sums above must reproduce them (tested for n up to 12).

namespace detail {

inline Int op_idem_factor(int64_t k) {
  return fib(2 * k - 1) + fib(2 * k + 1) - k * k + k - 2;
}

inline Int pop_idem_factor_sum(int64_t k) {
  Int t = 0;
  for (int64_t i = 1; i <= k; ++i) {
    t += binom(k, i) * (lucas_even(i) - i * i + i - 2);
  }
  return t;
}

}  // namespace detail

inline Int total_formula(Kind kind, int64_t n) {
  if (n < 3) {
    throw std::invalid_argument("total_formula: requires n >= 3");
  }
  Int sign_n = n % 2 == 0 ? 1 : -1;
  switch (kind) {
    case Kind::OP: {
      Int t = 3 * Int(n);
      for (int64_t k = 2; k <= n; ++k) {
        t += count_idem_op_rank(n, k) * detail::op_idem_factor(k);
      }
      return t;
    }
    case Kind::OR: {
      Int t = total_formula(Kind::OP, n);
      Int six = 0;
      for (int64_t k = 3; k <= n; ++k) {
        Int factor = Int(k);
        if (k % 2 == 0) {
          factor += Int(k) * k / 4;
        }
        six += count_idem_op_rank(n, k) * factor;
      }
      return t + (sign_n + 2) * six;
    }
    case Kind::POPI: {
      Int t = 2 * Int(n) + Int(n) * totient(static_cast<uint32_t>(n))
              + pow_int(3, n);
      for (int64_t k = 2; k <= n; ++k) {
        t += binom(n, k) * eps_count(n, k);
      }
      return t;
    }
    case Kind::PORI: {
      Int t = Int(n) * totient(static_cast<uint32_t>(n)) + pow_int(3, n);
      for (int64_t k = 3; k <= n; ++k) {
        t += binom(n, k) * k * (eps_count(n, k) + 2 * parity_delta(n, k));
      }
      t += (sign_n + 2)
           * ((9 * Int(n) + 4) * pow_int(2, n - 3) - 5 * Int(n) * (n - 1) / 2
              - 1);
      t -= 2 * (sign_n + 1) * Int(n);
      return t;
    }
    case Kind::POP: {
      Int t = 1 + 2 * Int(n) + Int(n) * totient(static_cast<uint32_t>(n))
              + Int(n) * pow_int(2, n - 1);
      for (int64_t k = 1; k <= n; ++k) {
        t += binom(n, k) * (lucas_even(k) - k * k + k - 2);
      }
      for (int64_t k = 2; k <= n; ++k) {
        t += count_idem_pop_rank(n, k)
             * (eps_count(n, k) + detail::pop_idem_factor_sum(k));
      }
      return t;
    }
    case Kind::POR: {
      Int t = 1 + 2 * Int(n) + Int(n) * totient(static_cast<uint32_t>(n))
              + Int(n) * pow_int(2, n - 1);
      for (int64_t k = 1; k <= n; ++k) {
        t += binom(n, k) * (lucas_even(k) - k * k + k - 2);
      }
      Int rank2 = 0;
      for (int64_t i = 2; i <= n; ++i) {
        rank2 += binom(n, i) * Int(i) * i * (Int(i) * i - 1) / 12;
      }
      t += (sign_n + 7) * rank2;
      for (int64_t k = 3; k <= n; ++k) {
        Int inv = Int(k) + Int(k) * pow_int(2, k / 2);
        if (k % 2 == 0) {
          inv += 1 + Int(k) * (k + 2) * pow_int(2, k / 2) / 16;
        }
        t += count_idem_pop_rank(n, k)
             * (Int(k) * (eps_count(n, k) + 2 * parity_delta(n, k))
                + detail::pop_idem_factor_sum(k) + (sign_n + 2) * inv);
      }
      return t;
    }
    default:
      throw std::invalid_argument("total_formula: unsupported kind");
  }
}

inline Int type_sum(Kind kind, int64_t n) {
  return type1_count(kind, n) + type2_count(kind, n) + type37_count(kind, n)
         + type4_count(kind, n) + type5_count(kind, n) + type6_count(kind, n);
}

// Appendix counts for the unit groups themselves.
inline Int group_endo_count_formula(Kind kind, int64_t n) {
  if (kind == Kind::C) {
    return n;
  }
  if (kind == Kind::D2) {
    return n % 2 == 1 ? Int(n) * n + 1 : Int(n) * n + 4 * n + 4;
  }
  throw std::invalid_argument("group_endo_count_formula: kind must be c or d2");
}

inline Int group_auto_count_formula(Kind kind, int64_t n) {
  if (kind == Kind::C) {
    return totient(static_cast<uint32_t>(n));
  }
  if (kind == Kind::D2) {
    return Int(n) * totient(static_cast<uint32_t>(n));
  }
  throw std::invalid_argument("group_auto_count_formula: kind must be c or d2");
}

struct CountReport {
  Kind kind;
  int64_t n;
  Int t1, t2, t37, t4, t5, t6;
  Int formula_total;
  std::optional<Int> enumerated_total;
  std::vector<Int> idem_by_rank;  // index = rank, 0..n
};

inline CountReport count_report(Kind kind, int64_t n) {
  CountReport r;
  r.kind = kind;
  r.n = n;
  r.t1 = type1_count(kind, n);
  r.t2 = type2_count(kind, n);
  r.t37 = type37_count(kind, n);
  r.t4 = type4_count(kind, n);
  r.t5 = type5_count(kind, n);
  r.t6 = type6_count(kind, n);
  r.formula_total = total_formula(kind, n);
  r.idem_by_rank.resize(n + 1, 0);
  bool full = kind == Kind::OP || kind == Kind::OR;
  if (!full) {
    r.idem_by_rank[0] = 1;
  }
  for (int64_t k = 1; k <= n; ++k) {
    r.idem_by_rank[k] = idem_rank_count(kind, n, k);
  }
  return r;
}

}  // namespace otm

#endif  // OTM_COUNTING_HPP_
