#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <set>

#include "otm/perm.hpp"

using namespace otm;

TEST_CASE("g and h", "[perm]") {
  Perm g3 = make_g(3);
  REQUIRE(g3[1] == 2);
  REQUIRE(g3[2] == 3);
  REQUIRE(g3[3] == 1);
  Perm h3 = make_h(3);
  REQUIRE(h3[1] == 3);
  REQUIRE(h3[2] == 2);
  REQUIRE(h3[3] == 1);

  for (uint32_t n = 3; n <= 8; ++n) {
    Perm g = make_g(n), h = make_h(n);
    REQUIRE(g.order() == n);
    REQUIRE(h.order() == 2);
    REQUIRE(perm_pow(g, n).is_identity());
    REQUIRE(compose_perm(h, h).is_identity());
    REQUIRE(compose_perm(g, h) == compose_perm(h, perm_pow(g, n - 1)));
  }
}

TEST_CASE("closed forms of g^k and hg^k", "[perm]") {
  for (uint32_t n = 3; n <= 8; ++n) {
    Perm g = make_g(n), h = make_h(n);
    for (uint32_t k = 0; k < n; ++k) {
      Perm gk = perm_pow(g, k);
      Perm hgk = compose_perm(h, perm_pow(g, k));
      for (uint32_t i = 1; i <= n; ++i) {
        uint32_t expected_g = i <= n - k ? i + k : i + k - n;
        REQUIRE(gk[i] == expected_g);
        uint32_t expected_hg = i <= k ? k - i + 1 : n + k - i + 1;
        REQUIRE(hgk[i] == expected_hg);
      }
      // g^i h = h g^{n-i}
      REQUIRE(compose_perm(gk, h)
              == compose_perm(h, perm_pow(g, (n - k) % n)));
    }
  }
}

TEST_CASE("dihedral elements", "[perm]") {
  REQUIRE_THROWS_AS(dihedral_elements(2), std::invalid_argument);
  for (uint32_t n = 3; n <= 8; ++n) {
    auto d = dihedral_elements(n);
    REQUIRE(d.size() == 2 * n);
    std::set<Perm> distinct(d.begin(), d.end());
    REQUIRE(distinct.size() == 2 * n);
    // element orders: g^i has order n/gcd(i,n); hg^i has order 2
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t expect = i == 0 ? 1 : n / std::gcd(i, n);
      REQUIRE(d[i].order() == expect);
      REQUIRE(d[n + i].order() == 2);
    }
  }
  REQUIRE(dihedral_elements(3).size() == 6);  // all of S_3
}

TEST_CASE("proper normal subgroups of D_2n", "[perm]") {
  auto subs3 = proper_normal_subgroups_d2n(3);
  REQUIRE(subs3.size() == 2);  // <g^1> = C_3 and <g^3> = {1}
  std::set<size_t> sizes3;
  for (auto& s : subs3) {
    sizes3.insert(s.elements.size());
  }
  REQUIRE(sizes3 == std::set<size_t>{1, 3});

  auto subs4 = proper_normal_subgroups_d2n(4);
  // <g>, <g^2>, <g^4>={1}, <g^2,h>, <g^2,hg>
  REQUIRE(subs4.size() == 5);
  std::multiset<size_t> sizes4;
  for (auto& s : subs4) {
    sizes4.insert(s.elements.size());
  }
  REQUIRE(sizes4 == std::multiset<size_t>{1, 2, 4, 4, 4});

  // Any subgroup of D_2n generated by <= 2 elements that passes the
  // conjugation test must appear in the list (or be all of D_2n).
  for (uint32_t n = 3; n <= 6; ++n) {
    auto subs = proper_normal_subgroups_d2n(n);
    auto full = dihedral_elements(n);
    std::set<std::vector<Perm>> listed;
    for (auto& s : subs) {
      listed.insert(s.elements);
    }
    for (const Perm& a : full) {
      for (const Perm& b : full) {
        auto sub = detail::group_closure(n, {a, b});
        if (sub.size() == 2 * n) {
          continue;
        }
        std::set<Perm> members(sub.begin(), sub.end());
        bool normal = true;
        for (const Perm& sigma : full) {
          Perm inv = sigma.inverse();
          for (const Perm& tau : sub) {
            if (!members.count(compose_perm(compose_perm(inv, tau), sigma))) {
              normal = false;
              break;
            }
          }
          if (!normal) {
            break;
          }
        }
        if (normal) {
          REQUIRE(listed.count(sub) == 1);
        }
      }
    }
  }
}

TEST_CASE("stride rotations sigma_{x,k}", "[perm]") {
  REQUIRE(sigma_xk(5, 1, 1).is_identity());
  Perm s = sigma_xk(5, 2, 3);
  REQUIRE(s[1] == 2);
  REQUIRE(s[2] == 5);
  REQUIRE(s[3] == 3);
  REQUIRE(s[4] == 1);
  REQUIRE(s[5] == 4);
  REQUIRE_THROWS_AS(sigma_xk(6, 1, 2), std::invalid_argument);

  // conjugation identities: sigma^{-1} g sigma = g^k and
  // sigma^{-1} h sigma = h g^{2x-k-1 mod n}
  for (uint32_t n = 3; n <= 8; ++n) {
    Perm g = make_g(n), h = make_h(n);
    for (uint32_t k = 1; k <= n; ++k) {
      if (std::gcd(k, n) != 1) {
        continue;
      }
      for (uint32_t x = 1; x <= n; ++x) {
        Perm sigma = sigma_xk(n, x, k);
        Perm inv = sigma.inverse();
        REQUIRE(compose_perm(compose_perm(inv, g), sigma) == perm_pow(g, k));
        uint32_t e = reduce_to_chain(int64_t(2) * x - k - 1, n) % n;
        REQUIRE(compose_perm(compose_perm(inv, h), sigma)
                == compose_perm(h, perm_pow(g, e)));
      }
    }
  }
}

TEST_CASE("totient", "[perm]") {
  REQUIRE(totient(1) == 1);
  REQUIRE(totient(6) == 2);
  REQUIRE(totient(7) == 6);
  REQUIRE(totient(12) == 4);
}

TEST_CASE("normalizers of C_n and D_2n in S_n", "[perm]") {
  for (uint32_t n = 3; n <= 7; ++n) {
    auto nc = normalizer_in_sn(n, cyclic_elements(n));
    auto nd = normalizer_in_sn(n, dihedral_elements(n));
    REQUIRE(nc.size() == n * totient(n));
    REQUIRE(nd.size() == n * totient(n));

    std::set<Perm> expected;
    for (const Perm& p : stride_rotations(n)) {
      expected.insert(p);
    }
    REQUIRE(std::set<Perm>(nc.begin(), nc.end()) == expected);
    REQUIRE(std::set<Perm>(nd.begin(), nd.end()) == expected);
    REQUIRE(expected.count(Perm(n)) == 1);  // identity always normalizes
  }
  REQUIRE(normalizer_in_sn(5, cyclic_elements(5)).size() == 20);
}

namespace {

// The named endomorphism families of C_n and D_2n, as (g-image, h-image)
// generator pairs expanded to full maps.
std::set<std::vector<uint32_t>> named_d2n_family(uint32_t n) {
  auto elems = dihedral_elements(n);
  auto find = [&](const Perm& p) {
    return static_cast<uint32_t>(
        std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  Perm g = make_g(n), h = make_h(n), id(n);
  auto expand = [&](const Perm& a, const Perm& b) {
    std::vector<uint32_t> images;
    for (uint32_t idx = 0; idx < 2 * n; ++idx) {
      Perm image = idx < n ? perm_pow(a, idx)
                           : compose_perm(b, perm_pow(a, idx - n));
      images.push_back(find(image));
    }
    return images;
  };
  std::set<std::vector<uint32_t>> fam;
  // trivial map, and g -> g^i, h -> hg^j
  fam.insert(expand(id, id));
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) {
      fam.insert(expand(perm_pow(g, i), compose_perm(h, perm_pow(g, j))));
    }
  }
  if (n % 2 == 0) {
    Perm gn2 = perm_pow(g, n / 2);
    fam.insert(expand(id, gn2));  // g -> 1, h -> g^{n/2}
    for (uint32_t i = 0; i < n; ++i) {
      Perm hgi = compose_perm(h, perm_pow(g, i));
      for (uint32_t j = 0; j < n; ++j) {
        uint32_t diff = i > j ? i - j : j - i;
        if (diff == n / 2) {
          fam.insert(expand(hgi, compose_perm(h, perm_pow(g, j))));
        }
      }
      fam.insert(expand(hgi, gn2));  // g -> hg^i, h -> g^{n/2}
      fam.insert(expand(hgi, id));   // g -> hg^i, h -> 1
      fam.insert(expand(hgi, hgi));  // g -> hg^i, h -> hg^i
    }
    fam.insert(expand(gn2, id));   // g -> g^{n/2}, h -> 1
    fam.insert(expand(gn2, gn2));  // g -> g^{n/2}, h -> g^{n/2}
  }
  return fam;
}

}  // namespace

TEST_CASE("endomorphisms of C_n", "[perm]") {
  for (uint32_t n = 3; n <= 12; ++n) {
    auto rep = group_endomorphisms_c(n);
    REQUIRE(rep.total == n);
    REQUIRE(rep.automorphisms == totient(n));
    // set equality with the power maps g -> g^i
    std::set<std::vector<uint32_t>> brute;
    for (auto& e : rep.endos) {
      brute.insert(e.images);
    }
    REQUIRE(brute.size() == n);
  }
  auto rep6 = group_endomorphisms_c(6);
  REQUIRE(rep6.total == 6);
  REQUIRE(rep6.automorphisms == 2);
}

TEST_CASE("endomorphisms of D_2n match the named families", "[perm]") {
  for (uint32_t n = 3; n <= 10; ++n) {
    auto rep = group_endomorphisms_d2(n);
    uint64_t expected =
        n % 2 == 1 ? uint64_t(n) * n + 1 : uint64_t(n) * n + 4 * n + 4;
    REQUIRE(rep.total == expected);
    REQUIRE(rep.automorphisms == uint64_t(n) * totient(n));

    std::set<std::vector<uint32_t>> brute;
    for (auto& e : rep.endos) {
      brute.insert(e.images);
    }
    REQUIRE(brute.size() == rep.total);  // all distinct as maps
    REQUIRE(brute == named_d2n_family(n));
  }
  REQUIRE(group_endomorphisms_d2(3).total == 10);
  REQUIRE(group_endomorphisms_d2(4).total == 36);
}
