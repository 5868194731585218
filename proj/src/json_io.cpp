#include "twistlab/json_io.hpp"

namespace twistlab {

json mat_to_json(const Mat& a) {
  json rows = json::array();
  for (size_t k = 0; k < a.rows(); ++k) {
    json row = json::array();
    for (size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(k, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j, size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError("matrix must have n rows");
  Mat a(n, n);
  for (size_t k = 0; k < n; ++k) {
    const auto& row = j[k];
    if (!row.is_array() || row.size() != n) throw InputError("matrix row must have n entries");
    for (size_t c = 0; c < n; ++c) {
      const auto& e = row[c];
      if (e.is_string())
        a(k, c) = parse_rat(e.get<std::string>());
      else if (e.is_number_integer())
        a(k, c) = Rat(std::to_string(e.get<long long>()));
      else
        throw InputError("matrix entries must be strings \"p/q\"");
    }
  }
  return a;
}

json family_to_json(const TwistingFamily& f) {
  json grid = json::array();
  for (size_t i = 0; i < f.m(); ++i) {
    json row = json::array();
    for (size_t l = 0; l < f.m(); ++l) row.push_back(mat_to_json(f.A(i, l)));
    grid.push_back(row);
  }
  return json{{"m", f.m()}, {"n", f.n()}, {"A", grid}};
}

TwistingFamily family_from_json(const json& j) {
  if (!j.is_object()) throw InputError("family must be a JSON object");
  for (const char* key : {"m", "n", "A"})
    if (!j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  if (!j["m"].is_number_unsigned() || !j["n"].is_number_unsigned())
    throw InputError("m and n must be positive integers");
  size_t m = j["m"].get<size_t>(), n = j["n"].get<size_t>();
  if (m == 0 || n == 0) throw InputError("m and n must be positive integers");
  const auto& g = j["A"];
  if (!g.is_array() || g.size() != m) throw InputError("A must be an m x m grid");
  std::vector<Mat> mats;
  for (size_t i = 0; i < m; ++i) {
    if (!g[i].is_array() || g[i].size() != m) throw InputError("A must be an m x m grid");
    for (size_t l = 0; l < m; ++l) mats.push_back(mat_from_json(g[i][l], n));
  }
  return TwistingFamily(m, n, std::move(mats));
}

TwistingFamily family_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return family_from_json(j);
}

json report_to_json(const VerifyReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) {
    json w = json::object();
    auto put = [&](const char* name, int x) {
      if (x >= 0) w[name] = x + 1;
    };
    put("i", v.i);
    put("i2", v.i2);
    put("l", v.l);
    put("j", v.j);
    put("j2", v.j2);
    put("k", v.k);
    vs.push_back(json{{"cond", v.cond}, {"witness", w}});
  }
  return json{{"is_twisting", r.is_twisting}, {"violations", vs}};
}

}  // namespace twistlab
