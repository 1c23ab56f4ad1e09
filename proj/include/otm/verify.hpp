// Deterministic verification suites: each check pits an implementation path
// against an independent route (brute-force search, definitional relations,
// closed-form counts) and records a machine-readable pass/fail with a
// re-checkable counterexample on failure.

#ifndef OTM_VERIFY_HPP_
#define OTM_VERIFY_HPP_

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "counting.hpp"
#include "endo_search.hpp"
#include "endomorphism.hpp"
#include "green.hpp"
#include "json_io.hpp"
#include "perm.hpp"
#include "semigroup.hpp"

namespace otm::verify {

struct Check {
  std::string id;
  bool pass;
  std::string detail;
  json counterexample;  // null unless failed
};

class CheckList {
 public:
  void add(const std::string& id, bool pass, const std::string& detail,
           json counterexample = nullptr) {
    _checks.push_back(Check{id, pass, detail,
                            pass ? json(nullptr) : std::move(counterexample)});
  }

  void expect_eq_int(const std::string& id, const Int& got, const Int& want,
                     const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    add(id, got == want, os.str(),
        json{{"got", got.str()}, {"expected", want.str()}});
  }

  const std::vector<Check>& checks() const {
    return _checks;
  }

  bool all_pass() const {
    for (const Check& c : _checks) {
      if (!c.pass) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<Check> _checks;
};

struct Options {
  std::vector<Kind> kinds = {Kind::OP,   Kind::OR,  Kind::POPI,
                             Kind::PORI, Kind::POP, Kind::POR};
  uint32_t n_min = 3;
  uint32_t n_max = 3;
  double budget_seconds = 600.0;
  unsigned threads = 0;
};

namespace detail {

inline std::string tagn(Kind kind, uint32_t n) {
  return std::string(to_string(kind)) + "_" + std::to_string(n);
}

inline std::vector<Endo> enumerate(const FiniteSemigroup& S,
                                   const Options& opt) {
  SearchOptions so;
  so.budget_seconds = opt.budget_seconds;
  so.threads = opt.threads;
  return enumerate_endomorphisms(S, so);
}

}  // namespace detail

// --------------------------------------------------------------------------
// orientation: sequence predicates against the rotation characterization,
// product orientation closure, idempotent characterization.

inline void orientation_suite(CheckList& out) {
  auto rotation_cyclic = [](std::vector<int> seq) {
    if (seq.empty()) {
      return true;
    }
    for (size_t r = 0; r < seq.size(); ++r) {
      if (std::is_sorted(seq.begin(), seq.end())) {
        return true;
      }
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    }
    return false;
  };

  bool agree = true;
  json bad;
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& seq) {
    if (!agree) {
      return;
    }
    std::vector<int> rev(seq.rbegin(), seq.rend());
    if (is_cyclic(seq, 4) != rotation_cyclic(seq)
        || is_anticyclic(seq, 4) != rotation_cyclic(rev)) {
      agree = false;
      bad = json{{"sequence", seq}};
      return;
    }
    if (seq.size() == 5) {
      return;
    }
    for (int v = 1; v <= 4; ++v) {
      seq.push_back(v);
      rec(seq);
      seq.pop_back();
    }
  };
  std::vector<int> seq;
  rec(seq);
  out.add("orientation/descent-vs-rotation", agree,
          "descent counting equals the rotation characterization for all "
          "sequences of length <= 5 over {1..4}",
          bad);

  for (uint32_t n = 3; n <= 4; ++n) {
    auto all = elements_by_predicate(Kind::PT, n);
    std::vector<OrientationClass> cls;
    cls.reserve(all.size());
    for (const auto& t : all) {
      cls.push_back(classify_orientation(t));
    }
    bool ok = true;
    json cx;
    for (size_t i = 0; i < all.size() && ok; ++i) {
      if (!cls[i].oriented()) {
        continue;
      }
      for (size_t j = 0; j < all.size() && ok; ++j) {
        if (!cls[j].oriented()) {
          continue;
        }
        auto p = classify_orientation(compose(all[i], all[j]));
        bool want_preserving =
            (cls[i].orientation_preserving && cls[j].orientation_preserving)
            || (cls[i].orientation_reversing && cls[j].orientation_reversing);
        bool want_reversing =
            (cls[i].orientation_preserving && cls[j].orientation_reversing)
            || (cls[i].orientation_reversing && cls[j].orientation_preserving);
        if ((want_preserving && !p.orientation_preserving)
            || (want_reversing && !p.orientation_reversing)) {
          ok = false;
          cx = json{{"a", to_json(all[i])}, {"b", to_json(all[j])}};
        }
      }
    }
    out.add("orientation/product-closure-n" + std::to_string(n), ok,
            "products of oriented maps preserve/reverse as their factors do");

    bool idem_ok = true;
    json icx;
    for (const auto& t : all) {
      bool by_square = compose(t, t) == t;
      bool by_sets = t.fix_mask() == t.image_mask()
                     && (t.image_mask() & ~t.domain_mask()) == 0;
      if (by_square != by_sets || by_square != t.is_idempotent()) {
        idem_ok = false;
        icx = to_json(t);
        break;
      }
    }
    out.add("orientation/idempotent-characterization-n" + std::to_string(n),
            idem_ok, "e = e^2 iff Fix(e) = Im(e) with Im(e) inside Dom(e)",
            icx);
  }
}

// --------------------------------------------------------------------------
// green: fingerprint classes against the definitional relations from the
// Cayley table, plus closure equals predicate enumeration.

inline void green_suite(CheckList& out, const Options& opt) {
  for (Kind kind : opt.kinds) {
    for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
      auto S = make_semigroup(kind, n);
      auto closed = closure(n, generator_set(kind, n), kind);
      out.add("green/closure-equals-predicate/" + detail::tagn(kind, n),
              S.elements == closed.elements && S.table == closed.table,
              "BFS closure of the generating set reproduces the predicate "
              "enumeration ("
                  + std::to_string(S.size()) + " elements)");

      auto G = green_data(S);
      uint32_t m = S.size();
      // definitional reachability
      std::vector<std::set<uint32_t>> left(m), right(m);
      for (uint32_t s = 0; s < m; ++s) {
        left[s].insert(s);
        right[s].insert(s);
        for (uint32_t u = 0; u < m; ++u) {
          left[s].insert(S.product(u, s));
          right[s].insert(S.product(s, u));
        }
      }
      bool ok = true;
      json cx;
      for (uint32_t s = 0; s < m && ok; ++s) {
        for (uint32_t t = 0; t < m && ok; ++t) {
          bool l_def = left[s] == left[t];
          bool r_def = right[s] == right[t];
          if ((G.l_id[s] == G.l_id[t]) != l_def
              || (G.r_id[s] == G.r_id[t]) != r_def
              || (G.h_id[s] == G.h_id[t]) != (l_def && r_def)) {
            ok = false;
            cx = json{{"s", to_json(S.at(s))}, {"t", to_json(S.at(t))}};
          }
        }
      }
      out.add("green/classes-definitional/" + detail::tagn(kind, n), ok,
              "image/kernel/rank fingerprints agree with the definitional "
              "Green relations",
              cx);
    }
  }
}

// --------------------------------------------------------------------------
// idempotents: per-rank counting formulas against direct enumeration, and
// the Fibonacci/Lucas totals.

inline void idempotents_suite(CheckList& out, uint32_t n_max = 8) {
  for (uint32_t n = 1; n <= n_max; ++n) {
    std::vector<int64_t> op(n + 1, 0), pop(n + 1, 0);
    for (const auto& t : elements_by_predicate(Kind::OP, n)) {
      if (t.is_idempotent()) {
        ++op[t.rank()];
      }
    }
    for (const auto& t : elements_by_predicate(Kind::POP, n)) {
      if (t.is_idempotent()) {
        ++pop[t.rank()];
      }
    }
    bool ok = pop[0] == 1;
    json cx;
    for (uint32_t k = 1; k <= n; ++k) {
      if (count_idem_op_rank(n, k) != op[k]
          || count_idem_pop_rank(n, k) != pop[k]) {
        ok = false;
        cx = json{{"n", n},
                  {"k", k},
                  {"op_formula", count_idem_op_rank(n, k).str()},
                  {"op_enumerated", op[k]},
                  {"pop_formula", count_idem_pop_rank(n, k).str()},
                  {"pop_enumerated", pop[k]}};
      }
    }
    out.add("idempotents/per-rank-n" + std::to_string(n), ok,
            "per-rank idempotent formulas equal direct enumeration", cx);
  }
  for (uint32_t n = 3; n <= n_max + 4; ++n) {
    Int sum = 0;
    for (uint32_t k = 1; k <= n; ++k) {
      sum += count_idem_op_rank(n, k);
    }
    out.add("idempotents/fibonacci-total-n" + std::to_string(n),
            sum == fib(2 * n - 1) + fib(2 * n + 1) - Int(n) * n + n - 2,
            "per-rank sums reproduce the Fibonacci closed form");
    Int sum_pop = 1;
    for (uint32_t k = 1; k <= n; ++k) {
      sum_pop += count_idem_pop_rank(n, k);
    }
    out.add("idempotents/lucas-total-n" + std::to_string(n),
            sum_pop == count_idempotents_formula(Kind::POP, n),
            "per-rank sums reproduce the Lucas closed form");
  }
  out.add("idempotents/op3-anchor", count_idempotents_formula(Kind::OP, 3) == 10,
          "|E| of the rank-3 full orientation-preserving monoid is 10");
}

// --------------------------------------------------------------------------
// normalizer: brute force over S_n equals the stride rotations, of size
// n*phi(n), for both unit groups.

inline void normalizer_suite(CheckList& out, uint32_t n_min = 3,
                             uint32_t n_max = 7) {
  for (uint32_t n = n_min; n <= n_max; ++n) {
    std::set<Perm> expected;
    for (const Perm& p : stride_rotations(n)) {
      expected.insert(p);
    }
    auto nc = normalizer_in_sn(n, cyclic_elements(n));
    auto nd = normalizer_in_sn(n, dihedral_elements(n));
    bool ok = std::set<Perm>(nc.begin(), nc.end()) == expected
              && std::set<Perm>(nd.begin(), nd.end()) == expected
              && nc.size() == size_t(n) * totient(n);
    out.add("normalizer/n" + std::to_string(n), ok,
            "normalizers of both unit groups equal the stride rotations, "
            "size "
                + std::to_string(n) + "*phi(" + std::to_string(n) + ") = "
                + std::to_string(n * totient(n)));
  }
}

// --------------------------------------------------------------------------
// groups: brute-forced endomorphism counts of the unit groups.

inline void groups_suite(CheckList& out, uint32_t c_max = 12,
                         uint32_t d_max = 10) {
  for (uint32_t n = 3; n <= c_max; ++n) {
    auto rep = group_endomorphisms_c(n);
    out.add("groups/cyclic-n" + std::to_string(n),
            Int(rep.total) == group_endo_count_formula(Kind::C, n)
                && Int(rep.automorphisms)
                       == group_auto_count_formula(Kind::C, n),
            "cyclic group has n endomorphisms, phi(n) automorphisms (brute "
            "force "
                + std::to_string(rep.total) + "/"
                + std::to_string(rep.automorphisms) + ")");
  }
  for (uint32_t n = 3; n <= d_max; ++n) {
    auto rep = group_endomorphisms_d2(n);
    out.add("groups/dihedral-n" + std::to_string(n),
            Int(rep.total) == group_endo_count_formula(Kind::D2, n)
                && Int(rep.automorphisms)
                       == group_auto_count_formula(Kind::D2, n),
            "dihedral group endomorphism/automorphism counts match the case "
            "formulas (brute force "
                + std::to_string(rep.total) + "/"
                + std::to_string(rep.automorphisms) + ")");
  }
}

// --------------------------------------------------------------------------
// autos: bijections among all enumerated endomorphisms are exactly the 2n
// conjugations by the dihedral rotations/reflections.

inline void autos_suite(CheckList& out, const Options& opt) {
  for (Kind kind : opt.kinds) {
    for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
      auto S = make_semigroup(kind, n);
      auto endos = detail::enumerate(S, opt);
      std::set<std::vector<uint32_t>> bijections;
      for (const Endo& phi : endos) {
        std::vector<uint8_t> hit(S.size(), 0);
        bool bij = true;
        for (uint32_t v : phi.images) {
          if (hit[v]) {
            bij = false;
            break;
          }
          hit[v] = 1;
        }
        if (bij) {
          bijections.insert(phi.images);
        }
      }
      std::set<std::vector<uint32_t>> inner;
      for (const Perm& sigma : dihedral_elements(n)) {
        inner.insert(inner_auto(S, sigma).images);
      }
      bool ok = bijections == inner && bijections.size() == 2 * size_t(n);
      json cx;
      if (!ok) {
        cx = json{{"bijections", bijections.size()}, {"expected", 2 * n}};
      }
      out.add("autos/" + detail::tagn(kind, n), ok,
              "exactly " + std::to_string(2 * n)
                  + " automorphisms, all inner by the unit reflections and "
                    "rotations",
              cx);
    }
  }
}

// --------------------------------------------------------------------------
// endo-soundness: every family constructor output is an endomorphism.

inline void endo_soundness_suite(CheckList& out, const Options& opt) {
  for (Kind kind : opt.kinds) {
    for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
      auto S = make_semigroup(kind, n);
      auto built = all_type_constructions(S);
      bool ok = true;
      json cx;
      for (auto& [tag, phi] : built) {
        if (!is_endomorphism(S, phi)) {
          ok = false;
          cx = endo_json(tag, phi);
          break;
        }
      }
      out.add("endo-soundness/" + detail::tagn(kind, n), ok,
              std::to_string(built.size())
                  + " constructed maps all pass the homomorphism check",
              cx);
    }
  }
}

// --------------------------------------------------------------------------
// endo-completeness: search equals the union of the families; kernel shapes;
// the structural facts about collapse levels.

inline void endo_completeness_suite(CheckList& out, const Options& opt) {
  for (Kind kind : opt.kinds) {
    for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
      auto S = make_semigroup(kind, n);
      auto endos = detail::enumerate(S, opt);
      auto built = all_type_constructions(S);
      std::set<std::vector<uint32_t>> built_set, found_set;
      for (auto& [tag, phi] : built) {
        built_set.insert(phi.images);
      }
      for (const Endo& phi : endos) {
        found_set.insert(phi.images);
      }
      bool disjoint = built_set.size() == built.size();
      out.add("endo-completeness/families-disjoint/" + detail::tagn(kind, n),
              disjoint, "no map is produced by two families");
      json cx;
      if (built_set != found_set) {
        json missing = json::array(), extra = json::array();
        for (const auto& v : found_set) {
          if (!built_set.count(v)) {
            missing.push_back(v);
          }
        }
        for (const auto& v : built_set) {
          if (!found_set.count(v)) {
            extra.push_back(v);
          }
        }
        cx = json{{"found_not_built", missing}, {"built_not_found", extra}};
      }
      out.add("endo-completeness/search-equals-families/"
                  + detail::tagn(kind, n),
              built_set == found_set,
              "backtracking search finds exactly the union of the seven "
              "families ("
                  + std::to_string(found_set.size()) + " maps)",
              cx);

      // every found endomorphism classifies to exactly one family
      bool classify_ok = true;
      json ccx;
      for (const Endo& phi : endos) {
        try {
          classify(S, phi);
        } catch (const TheoremViolation& e) {
          classify_ok = false;
          ccx = json{{"images", phi.images}, {"error", e.what()}};
          break;
        }
      }
      out.add("endo-completeness/classification-total/" + detail::tagn(kind, n),
              classify_ok, "every endomorphism found classifies to a family",
              ccx);
    }
  }
}

// Kernel shapes of everything found: universal, or ideal collapsed at one
// level with merges only inside H-classes there.
inline void kernel_shape_suite(CheckList& out, const Options& opt) {
  for (Kind kind : opt.kinds) {
    for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
      auto S = make_semigroup(kind, n);
      auto endos = detail::enumerate(S, opt);
      bool ok = true;
      json cx;
      size_t universal = 0;
      for (const Endo& phi : endos) {
        try {
          auto shape = kernel_shape(S, phi);
          universal += shape.universal;
        } catch (const ShapeViolation& e) {
          ok = false;
          cx = json{{"images", phi.images}, {"error", e.what()}};
          break;
        }
      }
      out.add("kernels/" + detail::tagn(kind, n), ok,
              "all " + std::to_string(endos.size())
                  + " kernels are universal or ideal-collapse shaped ("
                  + std::to_string(universal) + " universal)",
              cx);
    }
  }
}

// Structural facts: L/R reflection outside the collapsed ideal, witness
// idempotent families, and the collapse-level restrictions.
inline void structural_suite(CheckList& out, const Options& opt) {
  for (Kind kind : opt.kinds) {
    for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
      auto S = make_semigroup(kind, n);
      bool full = kind == Kind::OP || kind == Kind::OR;

      // witness families
      bool fam_ok = true;
      for (uint32_t k = (n + 2) / 2; k + 1 <= n && fam_ok; ++k) {
        fam_ok = find_idempotent_family(S, k, n - 1).has_value();
      }
      out.add("structural/witness-families/" + detail::tagn(kind, n), fam_ok,
              "n-1 idempotents with rank-dropping products exist at every "
              "admissible level");

      auto G = green_data(S);
      auto endos = detail::enumerate(S, opt);
      bool lr_ok = true, level_ok = true;
      json lr_cx, level_cx;
      for (const Endo& phi : endos) {
        auto shape = kernel_shape(S, phi);
        if (shape.universal) {
          continue;
        }
        // collapse levels: 1 or n on the full kinds; 1, n-1 or n otherwise
        bool admissible = shape.level == 1 || shape.level == n
                          || (!full && shape.level == n - 1);
        if (!admissible) {
          level_ok = false;
          level_cx = json{{"images", phi.images}, {"level", shape.level}};
        }
        if (shape.level >= 2 && shape.level <= n - 1) {
          // forced behaviour at the mid level
          std::set<uint32_t> unit_img;
          for (uint32_t i = 0; i < S.size(); ++i) {
            uint32_t r = S.rank_of(i);
            if (r == n) {
              unit_img.insert(phi.images[i]);
              if (S.rank_of(phi.images[i]) != n) {
                level_ok = false;
              }
            } else if (r == n - 1) {
              if (S.rank_of(phi.images[i]) != 1) {
                level_ok = false;
              }
            } else if (!(S.at(phi.images[i]) == PartialTransf::empty(n))) {
              level_ok = false;
            }
          }
          if (unit_img.size() != (has_dihedral_units(kind) ? 2 * n : n)) {
            level_ok = false;
          }
          if (!level_ok && level_cx.is_null()) {
            level_cx = json{{"images", phi.images}};
          }
        }
        // L/R reflection outside the collapsed ideal
        std::vector<uint32_t> outside;
        for (uint32_t i = 0; i < S.size(); ++i) {
          if (S.rank_of(i) >= shape.level) {
            outside.push_back(i);
          }
        }
        for (size_t a = 0; a < outside.size() && lr_ok; ++a) {
          for (size_t b = a + 1; b < outside.size(); ++b) {
            uint32_t s = outside[a], t = outside[b];
            bool l = G.l_id[s] == G.l_id[t];
            bool lp = G.l_id[phi.images[s]] == G.l_id[phi.images[t]];
            bool r = G.r_id[s] == G.r_id[t];
            bool rp = G.r_id[phi.images[s]] == G.r_id[phi.images[t]];
            if (l != lp || r != rp) {
              lr_ok = false;
              lr_cx = json{{"images", phi.images},
                           {"s", to_json(S.at(s))},
                           {"t", to_json(S.at(t))}};
              break;
            }
          }
        }
      }
      out.add("structural/collapse-levels/" + detail::tagn(kind, n), level_ok,
              "collapse levels restricted to 1"
                  + std::string(full ? "" : ", n-1") + " and n, with the "
                  "forced mid-level behaviour",
              level_cx);
      out.add("structural/lr-reflection/" + detail::tagn(kind, n), lr_ok,
              "images reflect the L and R relations outside the collapsed "
              "ideal",
              lr_cx);
    }
  }
}

// --------------------------------------------------------------------------
// counts: enumerated totals equal the closed forms, per family.

inline void counts_suite(CheckList& out, const Options& opt) {
  for (Kind kind : opt.kinds) {
    for (uint32_t n = opt.n_min; n <= opt.n_max; ++n) {
      auto S = make_semigroup(kind, n);
      auto endos = detail::enumerate(S, opt);
      out.expect_eq_int("counts/total/" + detail::tagn(kind, n),
                        Int(endos.size()), total_formula(kind, n),
                        "enumerated endomorphisms vs the counting theorem");

      std::map<int, Int> per_type;
      for (const Endo& phi : endos) {
        per_type[endo_type(classify(S, phi))] += 1;
      }
      bool ok = per_type[1] == type1_count(kind, n)
                && per_type[2] == type2_count(kind, n)
                && per_type[3] + per_type[7] == type37_count(kind, n)
                && per_type[4] == type4_count(kind, n)
                && per_type[5] == type5_count(kind, n)
                && per_type[6] == type6_count(kind, n);
      json cx;
      if (!ok) {
        cx = json::object();
        for (auto& [t, c] : per_type) {
          cx["T" + std::to_string(t)] = c.str();
        }
      }
      out.add("counts/per-family/" + detail::tagn(kind, n), ok,
              "per-family attribution matches the per-type formulas", cx);
    }
  }
}

}  // namespace otm::verify

#endif  // OTM_VERIFY_HPP_
