#include "qnss/json_io.hpp"

namespace qnss::json {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

template <class C, class CoefToJson>
json poly_to_json(const Polynomial<C>& p, CoefToJson&& coef) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"e", to_json(m)}, {"c", coef(c)}});
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

template <class C, class CoefFromJson>
Polynomial<C> poly_from_json(const json& j, CoefFromJson&& coef) {
  return guarded("polynomial", [&] {
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    std::vector<typename Polynomial<C>::Term> terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("e").get<std::vector<Monomial::Exponent>>();
      if (e.size() != nvars) throw InvalidInput("exponent vector has the wrong length");
      terms.emplace_back(Monomial(std::span<const Monomial::Exponent>(e)), coef(t.at("c")));
    }
    return Polynomial<C>::from_terms(nvars, std::move(terms));
  });
}

std::vector<VecPoly> vecs_from_json(const json& j) {
  std::vector<VecPoly> out;
  for (const auto& v : j) out.push_back(vecpoly_from_json(v));
  return out;
}

json vecs_to_json(const std::vector<VecPoly>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

}  // namespace

json to_json(const Rational& r) { return to_string(r); }
json to_json(const GaussQ& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }
json to_json(const QuatQ& q) { return json::array({to_string(q[0]), to_string(q[1]), to_string(q[2]), to_string(q[3])}); }

json to_json(const Monomial& m) {
  json a = json::array();
  for (auto e : m.exponents()) a.push_back(e);
  return a;
}

json to_json(const MPoly& p) {
  return poly_to_json(p, [](const GaussQ& z) { return to_json(z); });
}
json to_json(const QPoly& p) {
  return poly_to_json(p, [](const QuatQ& q) { return to_json(q); });
}

json to_json(const VecPoly& v) {
  json comps = json::array();
  for (const auto& c : v.components()) comps.push_back(to_json(c));
  return {{"nvars", v.nvars()}, {"components", std::move(comps)}};
}

json to_json(const MatPoly& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return {{"n", m.n()}, {"nvars", m.nvars()}, {"entries", std::move(entries)}};
}

json to_json(const ModuleOrder& order) {
  return {{"kind", order.monomial.kind == MonomialOrder::Kind::Grevlex ? "grevlex" : "lex"},
          {"permutation", order.monomial.permutation},
          {"eliminationBlock", order.monomial.elimination_block},
          {"position", order.position == PositionOrder::PositionOverTerm ? "pot" : "top"}};
}

json to_json(const ModuleBasis& basis) {
  json j = {{"rank", basis.rank()},
            {"nvars", basis.nvars()},
            {"order", to_json(basis.order())},
            {"reduced", basis.reduced()},
            {"generators", vecs_to_json(basis.generators())}};
  if (basis.has_cofactors()) {
    j["original"] = vecs_to_json(basis.original());
    json cof = json::array();
    for (std::size_t g = 0; g < basis.size(); ++g) {
      json row = json::array();
      for (const auto& p : basis.cofactors(g)) row.push_back(to_json(p));
      cof.push_back(std::move(row));
    }
    j["cofactors"] = std::move(cof);
  }
  return j;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InvalidInput("rational must be a string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

GaussQ gauss_from_json(const json& j) {
  return guarded("Gaussian rational", [&] { return GaussQ(rational_from_json(j.at("re")), rational_from_json(j.at("im"))); });
}

QuatQ quat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidInput("quaternion must be a 4-element array");
  return QuatQ(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3]));
}

MPoly mpoly_from_json(const json& j) {
  return poly_from_json<GaussQ>(j, [](const json& c) { return gauss_from_json(c); });
}
QPoly qpoly_from_json(const json& j) {
  return poly_from_json<QuatQ>(j, [](const json& c) { return quat_from_json(c); });
}

VecPoly vecpoly_from_json(const json& j) {
  return guarded("vector", [&] {
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    std::vector<MPoly> comps;
    for (const auto& c : j.at("components")) {
      comps.push_back(mpoly_from_json(c));
      if (comps.back().nvars() != nvars) throw InvalidInput("vector component lives in a different ring");
    }
    if (comps.empty()) return VecPoly(0, nvars);
    return VecPoly(std::move(comps));
  });
}

MatPoly matpoly_from_json(const json& j) {
  return guarded("matrix", [&] {
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    std::vector<MPoly> entries;
    for (const auto& e : j.at("entries")) {
      entries.push_back(mpoly_from_json(e));
      if (entries.back().nvars() != nvars) throw InvalidInput("matrix entry lives in a different ring");
    }
    if (entries.size() != n * n) throw InvalidInput("matrix entry count does not match n");
    if (n == 0) return MatPoly(0, nvars);
    return MatPoly(n, std::move(entries));
  });
}

ModuleOrder order_from_json(const json& j) {
  return guarded("order", [&] {
    ModuleOrder o;
    o.monomial.kind = parse_order_kind(j.at("kind").get<std::string>());
    o.monomial.permutation = j.at("permutation").get<std::vector<std::size_t>>();
    o.monomial.elimination_block = j.at("eliminationBlock").get<std::size_t>();
    const auto pos = j.at("position").get<std::string>();
    if (pos == "pot") {
      o.position = PositionOrder::PositionOverTerm;
    } else if (pos == "top") {
      o.position = PositionOrder::TermOverPosition;
    } else {
      throw InvalidInput("unknown position order '" + pos + "'");
    }
    return o;
  });
}

ModuleBasis basis_from_json(const json& j) {
  return guarded("basis", [&] {
    std::vector<VecPoly> original;
    std::vector<std::vector<MPoly>> cofactors;
    if (j.contains("cofactors")) {
      original = vecs_from_json(j.at("original"));
      for (const auto& row : j.at("cofactors")) {
        std::vector<MPoly> r;
        for (const auto& p : row) r.push_back(mpoly_from_json(p));
        cofactors.push_back(std::move(r));
      }
    }
    return ModuleBasis::assemble(vecs_from_json(j.at("generators")), j.at("rank").get<std::size_t>(),
                                 j.at("nvars").get<std::size_t>(), order_from_json(j.at("order")),
                                 j.at("reduced").get<bool>(), std::move(original), std::move(cofactors));
  });
}

}  // namespace qnss::json
