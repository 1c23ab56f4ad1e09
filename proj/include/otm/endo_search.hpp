// Exhaustive endomorphism enumeration by backtracking over generator images.
//
// Generators are assigned one at a time, units first (their images are
// pre-filtered to group elements of compatible order, idempotent generators
// to idempotents, and in general to elements satisfying the same power
// identity x^{r+q} = x^r as the generator).  After each assignment the
// partial map is closed under products: whenever both factors of a product
// have known images, the product's image is forced, and a clash between two
// factorizations kills the branch.  When all generators are assigned the
// closure has determined the image of every element and checked every
// product pair, so each surviving leaf is exactly one endomorphism.
//
// The closure works on a trail (the discovery list doubles as the undo log),
// so backtracking costs only the work that the branch actually added.

#ifndef OTM_ENDO_SEARCH_HPP_
#define OTM_ENDO_SEARCH_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <thread>
#include <vector>

#include "endomorphism.hpp"
#include "semigroup.hpp"

namespace otm {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  double budget_seconds = 3600.0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

// Least (r, q) with gen^{r+q} = gen^r; r >= 1, q >= 1.
inline std::pair<uint32_t, uint32_t> power_identity(const FiniteSemigroup& S,
                                                    uint32_t s) {
  std::vector<uint32_t> seen_at(S.size(), npos32);
  uint32_t p = s;
  uint32_t step = 1;
  while (seen_at[p] == npos32) {
    seen_at[p] = step;
    p = S.product(p, s);
    ++step;
  }
  uint32_t r = seen_at[p];
  uint32_t q = step - r;
  return {r, q};
}

inline bool satisfies_power_identity(const FiniteSemigroup& S, uint32_t x,
                                     uint32_t r, uint32_t q) {
  uint32_t a = S.power(x, r);
  uint32_t b = a;
  for (uint32_t i = 0; i < q; ++i) {
    b = S.product(b, x);
  }
  return a == b;
}

class EndoSearcher {
 public:
  EndoSearcher(const FiniteSemigroup& S, std::vector<uint32_t> gens,
               std::vector<std::vector<uint32_t>> candidates,
               std::chrono::steady_clock::time_point deadline,
               std::atomic<bool>& out_of_budget)
      : _S(S),
        _gens(std::move(gens)),
        _candidates(std::move(candidates)),
        _deadline(deadline),
        _out_of_budget(out_of_budget),
        _img(S.size(), npos32) {}

  void run(size_t first_lo, size_t first_hi) {
    _first_lo = first_lo;
    _first_hi = first_hi;
    dfs(0);
  }

  std::vector<Endo>& results() {
    return _results;
  }

 private:
  bool derive(uint32_t a, uint32_t b) {
    uint32_t p = _S.product(a, b);
    uint32_t q = _S.product(_img[a], _img[b]);
    if (_img[p] == npos32) {
      _img[p] = q;
      _known.push_back(p);
      return true;
    }
    return _img[p] == q;
  }

  bool close() {
    while (_qhead < _known.size()) {
      uint32_t z = _known[_qhead++];
      for (size_t i = 0; i < _known.size(); ++i) {
        uint32_t w = _known[i];
        if (!derive(z, w) || !derive(w, z)) {
          return false;
        }
      }
    }
    return true;
  }

  void check_budget() {
    if (++_nodes % 1024 == 0) {
      if (_out_of_budget.load(std::memory_order_relaxed)
          || std::chrono::steady_clock::now() > _deadline) {
        _out_of_budget.store(true, std::memory_order_relaxed);
      }
    }
  }

  void dfs(size_t pos) {
    if (_out_of_budget.load(std::memory_order_relaxed)) {
      return;
    }
    if (pos == _gens.size()) {
      Endo phi;
      phi.images.assign(_img.begin(), _img.end());
      _results.push_back(std::move(phi));
      return;
    }
    uint32_t gen = _gens[pos];
    if (_img[gen] != npos32) {
      dfs(pos + 1);  // forced by propagation, already consistent
      return;
    }
    size_t lo = 0, hi = _candidates[pos].size();
    if (pos == 0) {
      lo = _first_lo;
      hi = _first_hi;
    }
    size_t known_mark = _known.size();
    size_t qhead_mark = _qhead;
    for (size_t c = lo; c < hi; ++c) {
      check_budget();
      _img[gen] = _candidates[pos][c];
      _known.push_back(gen);
      if (close()) {
        dfs(pos + 1);
      }
      for (size_t i = known_mark; i < _known.size(); ++i) {
        _img[_known[i]] = npos32;
      }
      _known.resize(known_mark);
      _qhead = qhead_mark;
    }
  }

  const FiniteSemigroup& _S;
  std::vector<uint32_t> _gens;
  std::vector<std::vector<uint32_t>> _candidates;
  std::chrono::steady_clock::time_point _deadline;
  std::atomic<bool>& _out_of_budget;
  std::vector<uint32_t> _img;
  std::vector<uint32_t> _known;
  size_t _qhead = 0;
  size_t _first_lo = 0, _first_hi = 0;
  uint64_t _nodes = 0;
  std::vector<Endo> _results;
};

}  // namespace detail

// All endomorphisms of S, in canonical (lexicographic image array) order.
inline std::vector<Endo> enumerate_endomorphisms(const FiniteSemigroup& S,
                                                 const SearchOptions& opts = {}) {
  std::vector<uint32_t> gens = S.generators;
  if (gens.empty()) {
    throw std::invalid_argument(
        "enumerate_endomorphisms: monoid has no generating set");
  }

  // Candidate images per generator: everything satisfying the generator's
  // power identity.  For g and h this is "group element of dividing order",
  // for idempotent generators it is the idempotents.
  std::vector<std::vector<uint32_t>> candidates;
  for (uint32_t gen : gens) {
    auto [r, q] = detail::power_identity(S, gen);
    std::vector<uint32_t> cand;
    for (uint32_t x = 0; x < S.size(); ++x) {
      if (detail::satisfies_power_identity(S, x, r, q)) {
        cand.push_back(x);
      }
    }
    candidates.push_back(std::move(cand));
  }

  auto deadline = std::chrono::steady_clock::now()
                  + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.budget_seconds));
  std::atomic<bool> out_of_budget{false};

  unsigned threads = opts.threads == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : opts.threads;
  size_t first = candidates[0].size();
  threads = static_cast<unsigned>(
      std::min<size_t>(threads, std::max<size_t>(first, 1)));

  std::vector<Endo> all;
  if (threads <= 1) {
    detail::EndoSearcher searcher(S, gens, candidates, deadline, out_of_budget);
    searcher.run(0, first);
    all = std::move(searcher.results());
  } else {
    std::vector<std::unique_ptr<detail::EndoSearcher>> workers;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      workers.push_back(std::make_unique<detail::EndoSearcher>(
          S, gens, candidates, deadline, out_of_budget));
    }
    for (unsigned t = 0; t < threads; ++t) {
      size_t lo = first * t / threads;
      size_t hi = first * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi]() { workers[t]->run(lo, hi); });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (auto& w : workers) {
      for (Endo& e : w->results()) {
        all.push_back(std::move(e));
      }
    }
  }
  if (out_of_budget.load()) {
    throw BudgetError("enumerate_endomorphisms: search budget exceeded");
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace otm

#endif  // OTM_ENDO_SEARCH_HPP_
