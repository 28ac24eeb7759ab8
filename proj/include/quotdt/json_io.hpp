#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quotdt/half_laurent.hpp"
#include "quotdt/laurent_series.hpp"
#include "quotdt/motivic.hpp"
#include "quotdt/quiver.hpp"
#include "quotdt/trunc_series.hpp"

namespace quotdt::io {

using json = nlohmann::json;

// Series serialize as {"order": N, "coeffs": ["...", ...]} with big
// integers and rationals ("a/b") as decimal strings.

inline json to_json(const TruncSeries<BigInt>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline json to_json(const TruncSeries<Rat>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline json to_json(const HalfLaurent& h) {
  json terms = json::object();
  for (const auto& [e, c] : h.terms()) terms[std::to_string(e)] = c.str();
  return json{{"terms", terms}};
}

inline json to_json(const motivic::MotivicSeries& z) {
  json coeffs = json::array();
  for (const auto& c : z.series.coeffs()) coeffs.push_back(to_json(c));
  return json{{"rank", z.rank}, {"order", z.series.order()}, {"coeffs", coeffs}};
}

inline json to_json(const LaurentSeries<Rat>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return json{{"offset", s.lo()}, {"coeffs", coeffs}};
}

inline TruncSeries<BigInt> integer_series_from_json(const json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("series JSON: missing coeffs array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(parse_bigint(c.get<std::string>()));
  if (coeffs.empty()) throw std::invalid_argument("series JSON: empty coeffs");
  int order = j.value("order", static_cast<int>(coeffs.size()) - 1);
  return TruncSeries<BigInt>(order, std::move(coeffs));
}

inline LaurentSeries<Rat> laurent_series_from_json(const json& j) {
  if (!j.contains("offset") || !j.contains("coeffs"))
    throw std::invalid_argument("laurent series JSON: need offset and coeffs");
  std::vector<Rat> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(parse_rational(c.get<std::string>()));
  if (coeffs.empty()) throw std::invalid_argument("laurent series JSON: empty coeffs");
  return LaurentSeries<Rat>(j["offset"].get<long long>(), std::move(coeffs));
}

// FramedRep JSON:
// {"n":.., "r":.., "field": "Q"|"Fp:<p>", "A": [[..]], "B": .., "C": ..,
//  "v": [[..], ..]} with entries as decimal strings.

using AnyFramedRep = std::variant<quiver::FramedRep<Rat>, quiver::FramedRep<Fp>>;

template <typename F, typename Parse>
quiver::FramedRep<F> framed_rep_from_json_impl(const json& j, Parse parse) {
  quiver::FramedRep<F> rep;
  rep.n = j.at("n").get<int>();
  rep.r = j.at("r").get<int>();
  auto read_matrix = [&](const json& m) {
    Matrix<F> out(rep.n, rep.n);
    if (static_cast<int>(m.size()) != rep.n)
      throw std::invalid_argument("FramedRep JSON: matrix row count mismatch");
    for (int i = 0; i < rep.n; ++i) {
      if (static_cast<int>(m[i].size()) != rep.n)
        throw std::invalid_argument("FramedRep JSON: matrix column count mismatch");
      for (int jj = 0; jj < rep.n; ++jj) out(i, jj) = parse(m[i][jj].get<std::string>());
    }
    return out;
  };
  rep.A = read_matrix(j.at("A"));
  rep.B = read_matrix(j.at("B"));
  rep.C = read_matrix(j.at("C"));
  for (const auto& vj : j.at("v")) {
    std::vector<F> v;
    for (const auto& x : vj) v.push_back(parse(x.get<std::string>()));
    rep.framing.push_back(std::move(v));
  }
  rep.validate();
  return rep;
}

inline AnyFramedRep framed_rep_from_json(const json& j) {
  std::string field = j.value("field", "Q");
  if (field == "Q")
    return framed_rep_from_json_impl<Rat>(j, [](const std::string& s) {
      return parse_rational(s);
    });
  if (field.rfind("Fp:", 0) == 0) {
    int p = std::stoi(field.substr(3));
    return framed_rep_from_json_impl<Fp>(j, [p](const std::string& s) {
      return Fp(std::stoll(s), p);
    });
  }
  throw std::invalid_argument("FramedRep JSON: field must be \"Q\" or \"Fp:<p>\"");
}

template <typename F>
json matrix_to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(quotdt::to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace quotdt::io
