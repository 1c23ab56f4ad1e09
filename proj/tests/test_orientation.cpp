#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "otm/json_io.hpp"
#include "otm/orientation.hpp"
#include "otm/perm.hpp"
#include "otm/semigroup.hpp"
#include "otm/transf.hpp"

using namespace otm;

namespace {

PartialTransf pt(uint32_t n, std::initializer_list<int> map) {
  PartialTransf t(n);
  uint32_t i = 1;
  for (int v : map) {
    if (v != 0) {
      t.set(i, static_cast<uint32_t>(v));
    }
    ++i;
  }
  return t;
}

template <typename F>
void for_each_sequence(int max_len, int n, F&& f) {
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> seq(len, 1);
    while (true) {
      f(seq);
      int i = len - 1;
      while (i >= 0 && seq[i] == n) {
        seq[i] = 1;
        --i;
      }
      if (i < 0) {
        break;
      }
      ++seq[i];
    }
  }
}

}  // namespace

TEST_CASE("cyclic/anti-cyclic spot values", "[orientation]") {
  REQUIRE(is_cyclic(std::vector<int>{}, 4));
  REQUIRE(is_anticyclic(std::vector<int>{}, 4));
  REQUIRE(is_cyclic({2, 3, 4, 1}, 4));
  REQUIRE_FALSE(is_anticyclic({2, 3, 4, 1}, 4));
  REQUIRE_FALSE(is_cyclic({1, 3, 2}, 4));
  REQUIRE(is_anticyclic({1, 3, 2}, 4));
  REQUIRE(is_cyclic({1, 1, 1}, 4));
  REQUIRE(is_anticyclic({1, 1, 1}, 4));
  REQUIRE_THROWS_AS(is_cyclic({1, 5}, 4), std::domain_error);
  REQUIRE_THROWS_AS(is_anticyclic({0, 1}, 4), std::domain_error);
}

TEST_CASE("descent counting matches the rotation characterization",
          "[orientation]") {
  // Exhaustive over all sequences of length <= 5 with values in {1..4}.
  for_each_sequence(5, 4, [&](const std::vector<int>& seq) {
    REQUIRE(is_cyclic(seq, 4) == oracles::rotation_cyclic(seq));
    REQUIRE(is_anticyclic(seq, 4) == oracles::rotation_anticyclic(seq));
  });
}

TEST_CASE("sequences both cyclic and anti-cyclic", "[orientation]") {
  // Both iff some rotation is non-decreasing and some rotation is
  // non-increasing.
  for_each_sequence(5, 4, [&](const std::vector<int>& seq) {
    bool both = is_cyclic(seq, 4) && is_anticyclic(seq, 4);
    REQUIRE(both == (oracles::rotation_cyclic(seq)
                     && oracles::rotation_anticyclic(seq)));
  });
  // Length <= 2 and constants are always both.
  REQUIRE((is_cyclic({3}, 4) && is_anticyclic({3}, 4)));
  REQUIRE((is_cyclic({4, 1}, 4) && is_anticyclic({4, 1}, 4)));
}

TEST_CASE("orientation classification of id, g, h, empty", "[orientation]") {
  for (uint32_t n = 3; n <= 6; ++n) {
    auto id = classify_orientation(PartialTransf::identity(n));
    REQUIRE(id.order_preserving);
    REQUIRE(id.orientation_preserving);
    REQUIRE_FALSE(id.order_reversing);
    REQUIRE_FALSE(id.orientation_reversing);

    auto g = classify_orientation(make_g(n).as_transf());
    REQUIRE(g.orientation_preserving);
    REQUIRE_FALSE(g.order_preserving);

    auto h = classify_orientation(make_h(n).as_transf());
    REQUIRE(h.order_reversing);
    REQUIRE(h.orientation_reversing);
    REQUIRE_FALSE(h.orientation_preserving);

    auto e = classify_orientation(PartialTransf::empty(n));
    REQUIRE(e.order_preserving);
    REQUIRE(e.order_reversing);
    REQUIRE(e.oriented());
  }
}

TEST_CASE("monotone implies oriented, over all of PT_4", "[orientation]") {
  for (const PartialTransf& t : elements_by_predicate(Kind::PT, 4)) {
    auto c = classify_orientation(t);
    if (c.order_preserving) {
      REQUIRE(c.orientation_preserving);
    }
    if (c.order_reversing) {
      REQUIRE(c.orientation_reversing);
    }
  }
}

TEST_CASE("composition laws", "[orientation]") {
  auto id4 = PartialTransf::identity(4);
  auto empty4 = PartialTransf::empty(4);
  for (const PartialTransf& t : elements_by_predicate(Kind::PT, 3)) {
    auto id = PartialTransf::identity(3);
    REQUIRE(compose(id, t) == t);
    REQUIRE(compose(t, id) == t);
    REQUIRE(compose(PartialTransf::empty(3), t) == PartialTransf::empty(3));
  }
  REQUIRE(compose(id4, empty4) == empty4);
  REQUIRE_THROWS_AS(compose(id4, PartialTransf::identity(3)),
                    std::invalid_argument);

  // gh = hg^{n-1}
  for (uint32_t n = 3; n <= 6; ++n) {
    auto g = make_g(n).as_transf();
    auto h = make_h(n).as_transf();
    PartialTransf rhs = h;
    for (uint32_t i = 0; i + 1 < n; ++i) {
      rhs = compose(rhs, g);
    }
    REQUIRE(compose(g, h) == rhs);
  }
}

TEST_CASE("composition is associative", "[orientation]") {
  auto pt3 = elements_by_predicate(Kind::PT, 3);
  for (const auto& a : pt3) {
    for (const auto& b : pt3) {
      for (const auto& c : pt3) {
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
      }
    }
  }
  // strided sample of PT_4 triples
  auto pt4 = elements_by_predicate(Kind::PT, 4);
  for (size_t i = 0; i < pt4.size(); i += 37) {
    for (size_t j = 0; j < pt4.size(); j += 41) {
      for (size_t k = 0; k < pt4.size(); k += 43) {
        REQUIRE(compose(compose(pt4[i], pt4[j]), pt4[k])
                == compose(pt4[i], compose(pt4[j], pt4[k])));
      }
    }
  }
}

TEST_CASE("orientation of products", "[orientation]") {
  // preserving*preserving and reversing*reversing are preserving;
  // mixed products are reversing (factors restricted to oriented maps).
  for (uint32_t n : {3u, 4u}) {
    auto all = elements_by_predicate(Kind::PT, n);
    std::vector<PartialTransf> oriented;
    std::vector<OrientationClass> cls;
    for (const auto& t : all) {
      auto c = classify_orientation(t);
      if (c.oriented()) {
        oriented.push_back(t);
        cls.push_back(c);
      }
    }
    for (size_t i = 0; i < oriented.size(); ++i) {
      for (size_t j = 0; j < oriented.size(); ++j) {
        auto p = classify_orientation(compose(oriented[i], oriented[j]));
        if (cls[i].orientation_preserving && cls[j].orientation_preserving) {
          REQUIRE(p.orientation_preserving);
        }
        if (cls[i].orientation_reversing && cls[j].orientation_reversing) {
          REQUIRE(p.orientation_preserving);
        }
        if (cls[i].orientation_preserving && cls[j].orientation_reversing) {
          REQUIRE(p.orientation_reversing);
        }
        if (cls[i].orientation_reversing && cls[j].orientation_preserving) {
          REQUIRE(p.orientation_reversing);
        }
      }
    }
  }
}

TEST_CASE("idempotency equals Fix = Im inside Dom, exhaustively to n = 4",
          "[orientation]") {
  for (uint32_t n = 1; n <= 4; ++n) {
    for (const PartialTransf& t : elements_by_predicate(Kind::PT, n)) {
      bool by_square = compose(t, t) == t;
      bool by_check = t.is_idempotent();
      bool by_sets = t.fix_mask() == t.image_mask()
                     && (t.image_mask() & ~t.domain_mask()) == 0;
      REQUIRE(by_square == by_check);
      REQUIRE(by_square == by_sets);
    }
  }
}

TEST_CASE("structure queries", "[orientation]") {
  auto id4 = structure(PartialTransf::identity(4));
  REQUIRE(id4.rank == 4);
  REQUIRE(id4.fixed_points == std::vector<uint32_t>{1, 2, 3, 4});
  REQUIRE(id4.idempotent);

  auto e = structure(PartialTransf::empty(4));
  REQUIRE(e.rank == 0);
  REQUIRE(e.idempotent);
  REQUIRE(e.domain.empty());

  // Dom = {1,2,3} with every point sent to 3: one kernel block, rank 1.
  auto t = structure(pt(4, {3, 3, 3, 0}));
  REQUIRE(t.rank == 1);
  REQUIRE(t.idempotent);
  REQUIRE(t.kernel == std::vector<std::vector<uint32_t>>{{1, 2, 3}});

  // Two blocks: 1,2 -> 3 and 3 -> 1.
  auto x = structure(pt(3, {3, 3, 1}));
  REQUIRE(x.kernel == std::vector<std::vector<uint32_t>>{{3}, {1, 2}});
  REQUIRE(x.rank == 2);
  REQUIRE_FALSE(x.idempotent);
}

TEST_CASE("restriction", "[orientation]") {
  auto id = PartialTransf::identity(4);
  auto r = restrict_to(id, 0b0110);  // {2,3}
  REQUIRE(r == pt(4, {0, 2, 3, 0}));
  REQUIRE(restrict_to(id, 0) == PartialTransf::empty(4));
  auto h5 = make_h(5).as_transf();
  REQUIRE(restrict_to(h5, 0b00001) == pt(5, {5, 0, 0, 0, 0}));
}

TEST_CASE("transformation JSON round trip", "[orientation]") {
  json j = json::parse(R"({"n": 4, "map": [2, null, 1, 4]})");
  PartialTransf t = transf_from_json(j);
  REQUIRE(t[1] == 2);
  REQUIRE_FALSE(t.defined(2));
  REQUIRE(t[3] == 1);
  REQUIRE(t[4] == 4);
  REQUIRE(to_json(t) == j);

  for (const PartialTransf& u : elements_by_predicate(Kind::PT, 3)) {
    REQUIRE(transf_from_json(to_json(u)) == u);
    // serializer output is stable byte for byte
    REQUIRE(to_json(transf_from_json(to_json(u))).dump() == to_json(u).dump());
  }
}
