// JSON forms of the public data: transformations as {"n":4,"map":[2,null,1,4]}
// (1-based, null for undefined, bit-exact round trip), monoid exports,
// endomorphism listings, group reports, and count reports.  Big integers are
// serialized as decimal strings.

#ifndef OTM_JSON_IO_HPP_
#define OTM_JSON_IO_HPP_

#include <json.hpp>
#include <string>

#include "counting.hpp"
#include "endomorphism.hpp"
#include "perm.hpp"
#include "semigroup.hpp"
#include "transf.hpp"

namespace otm {

using nlohmann::json;

inline json to_json(const PartialTransf& t) {
  json map = json::array();
  for (uint32_t i = 1; i <= t.n(); ++i) {
    if (t.defined(i)) {
      map.push_back(t[i]);
    } else {
      map.push_back(nullptr);
    }
  }
  return json{{"n", t.n()}, {"map", map}};
}

inline PartialTransf transf_from_json(const json& j) {
  uint32_t n = j.at("n").get<uint32_t>();
  const json& map = j.at("map");
  if (!map.is_array() || map.size() != n) {
    throw std::invalid_argument("transf_from_json: map must have length n");
  }
  PartialTransf t(n);
  for (uint32_t i = 1; i <= n; ++i) {
    const json& v = map[i - 1];
    if (!v.is_null()) {
      t.set(i, v.get<uint32_t>());
    }
  }
  return t;
}

inline json map_array(const PartialTransf& t) {
  return to_json(t).at("map");
}

inline json to_json(const FiniteSemigroup& S) {
  json elements = json::array();
  for (const PartialTransf& t : S.elements) {
    elements.push_back(map_array(t));
  }
  json gens = json::array();
  for (uint32_t g : S.generators) {
    gens.push_back(g);
  }
  return json{{"kind", to_string(S.kind)},
              {"n", S.n},
              {"elements", elements},
              {"generators", gens}};
}

inline json to_json(const Perm& p) {
  json img = json::array();
  for (uint8_t v : p.entries()) {
    img.push_back(v);
  }
  return img;
}

inline json endo_class_json(const EndoClass& c) {
  json j;
  j["type"] = endo_type(c);
  std::visit(
      [&](const auto& tag) {
        using T = std::decay_t<decltype(tag)>;
        if constexpr (std::is_same_v<T, InnerAutoTag>) {
          j["params"] = {{"sigma", to_json(tag.sigma)}};
        } else if constexpr (std::is_same_v<T, CollapseConjTag>) {
          j["params"] = {{"x", tag.x}, {"k", tag.k}};
        } else if constexpr (std::is_same_v<T, TwoIdempotentTag>) {
          j["params"] = {{"e", tag.e}, {"f", tag.f}};
        } else if constexpr (std::is_same_v<T, CyclicImageTag>) {
          j["params"] = {{"g0", tag.g0}, {"order", tag.order}};
        } else if constexpr (std::is_same_v<T, DihedralImageTag>) {
          j["params"] = {{"g0", tag.g0}, {"h0", tag.h0}, {"order", tag.order}};
        } else if constexpr (std::is_same_v<T, InvolutionImageTag>) {
          j["params"] = {{"h0", tag.h0},
                         {"f", tag.f},
                         {"variant", std::string(1, tag.variant)}};
        } else {
          j["params"] = {{"e", tag.e}};
        }
      },
      c);
  return j;
}

inline json endo_json(const EndoClass& c, const Endo& phi) {
  json j = endo_class_json(c);
  j["images"] = phi.images;
  return j;
}

inline json to_json(const GroupEndoReport& rep) {
  json endos = json::array();
  for (const GroupEndo& e : rep.endos) {
    json je;
    je["g_image"] = to_json(e.g_image);
    if (e.h_image) {
      je["h_image"] = to_json(*e.h_image);
    }
    je["images"] = e.images;
    je["automorphism"] = e.automorphism;
    endos.push_back(je);
  }
  return json{{"group", rep.tag == 'c' ? "c" : "d2"},
              {"n", rep.n},
              {"total", rep.total},
              {"automorphisms", rep.automorphisms},
              {"endomorphisms", endos}};
}

inline std::string int_str(const Int& v) {
  return v.str();
}

inline json to_json(const CountReport& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["n"] = r.n;
  j["per_type"] = {{"T1", int_str(r.t1)},   {"T2", int_str(r.t2)},
                   {"T3_7", int_str(r.t37)}, {"T4", int_str(r.t4)},
                   {"T5", int_str(r.t5)},   {"T6", int_str(r.t6)}};
  j["formula_total"] = int_str(r.formula_total);
  if (r.enumerated_total) {
    j["enumerated_total"] = int_str(*r.enumerated_total);
  } else {
    j["enumerated_total"] = nullptr;
  }
  json idem = json::array();
  for (const Int& v : r.idem_by_rank) {
    idem.push_back(int_str(v));
  }
  j["idempotents_by_rank"] = idem;
  return j;
}

}  // namespace otm

#endif  // OTM_JSON_IO_HPP_
