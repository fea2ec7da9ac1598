#include "ado/serialize.hpp"

#include <cstdlib>

namespace ado {

namespace {

nlohmann::json poly_to_json(const SPoly& p) {
  nlohmann::json rows = nlohmann::json::array();
  if (p.is_zero()) return rows;
  for (long e = p.low(); e <= p.high(); ++e) {
    const CycScalar c = p.coeff(e);
    nlohmann::json row = nlohmann::json::array();
    for (const Rat& r : c.coeffs()) row.push_back(r.get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(const ScalarExt& x) {
  nlohmann::json j;
  j["tExp"] = x.t_exp();
  j["sLow"] = x.num().is_zero() ? 0 : x.num().low();
  j["num"] = poly_to_json(x.num());
  j["den"] = poly_to_json(x.den());
  return j;
}

ScalarExt scalar_from_json(const nlohmann::json& j, int N) {
  const long tExp = j.at("tExp").get<long>();
  const long sLow = j.at("sLow").get<long>();
  const int deg = level_data(N).degree;

  auto readPoly = [&](const nlohmann::json& rows, long low) {
    SPoly acc = SPoly::zero(N);
    long e = low;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != deg)
        throw std::invalid_argument("ScalarExt JSON: wrong coefficient width");
      CycScalar c = CycScalar::zero(N);
      for (int k = 0; k < deg; ++k) {
        Rat r(row[static_cast<size_t>(k)].get<std::string>());
        r.canonicalize();
        c += CycScalar::rational(N, r) * CycScalar::xi_power(N, k);
      }
      acc = acc + SPoly::monomial(CycScalar::one(N), e).scaled(c);
      ++e;
    }
    return acc;
  };

  SPoly num = readPoly(j.at("num"), sLow);
  SPoly den = readPoly(j.at("den"), 0);
  if (den.is_zero()) den = SPoly::constant(CycScalar::one(N));
  return ScalarExt::fraction(std::move(num), std::move(den), tExp);
}

nlohmann::json to_json(const HomologyClass& cls) {
  nlohmann::json j;
  j["side"] = cls.side == HomologyClass::Side::Multifork ? "multifork" : "scan";
  j["n"] = cls.n;
  j["N"] = cls.N;
  nlohmann::json coords = nlohmann::json::array();
  for (const ScalarExt& c : cls.coords) coords.push_back(to_json(c));
  j["coords"] = std::move(coords);
  return j;
}

HomologyClass class_from_json(const nlohmann::json& j) {
  HomologyClass cls;
  cls.side = j.at("side").get<std::string>() == "scan"
                 ? HomologyClass::Side::Scan
                 : HomologyClass::Side::Multifork;
  cls.n = j.at("n").get<int>();
  cls.N = j.at("N").get<int>();
  for (const auto& c : j.at("coords"))
    cls.coords.push_back(scalar_from_json(c, cls.N));
  return cls;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("ADO_FIXTURE_DIR")) return env;
#ifdef ADO_DEFAULT_FIXTURE_DIR
  return ADO_DEFAULT_FIXTURE_DIR;
#else
  return "data/fixtures";
#endif
}

std::string fixture_path(int n, int N) {
  return fixture_dir() + "/classes_n" + std::to_string(n) + "_N" +
         std::to_string(N) + ".json";
}

}  // namespace ado
