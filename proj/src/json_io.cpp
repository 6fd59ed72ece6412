#include "braidnorm/json_io.hpp"

#include <json.hpp>

namespace braidnorm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json weights_json(const WeightVector& v) {
  ordered_json arr = ordered_json::array();
  for (const Rational& x : v.s) arr.push_back(to_string(x));
  return arr;
}

WeightVector weights_from_json(const ordered_json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("weight vector must be an array");
  WeightVector v;
  for (const auto& entry : arr)
    v.s.push_back(parse_rational(entry.get<std::string>()));
  return v;
}

ordered_json parse_object(const std::string& text, const char* what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw std::invalid_argument(std::string("malformed ") + what + " JSON");
  return j;
}

}  // namespace

std::string bound_report_to_json(const BoundReport& report) {
  ordered_json j;
  j["f_max"] = to_string(report.f_max);
  j["half_bound"] = to_string(report.half_bound);
  j["asymptotic_bound"] = to_string(report.asymptotic_bound);
  j["argmax"] = {{"v1", weights_json(report.argmax.v1)},
                 {"v2", weights_json(report.argmax.v2)}};
  j["summary"] = {{"k_gen", report.summary.k_gen},
                  {"k_sigma", report.summary.k_sigma},
                  {"k", report.summary.k}};
  j["terms"] = {{"R", to_string(report.terms.R)},
                {"S", to_string(report.terms.S)},
                {"T", to_string(report.terms.T)},
                {"D", to_string(report.terms.D)}};
  return j.dump();
}

BoundReport bound_report_from_json(const std::string& text) {
  const ordered_json j = parse_object(text, "bound report");
  BoundReport report;
  try {
    report.f_max = parse_rational(j.at("f_max").get<std::string>());
    report.half_bound = parse_rational(j.at("half_bound").get<std::string>());
    report.asymptotic_bound =
        parse_rational(j.at("asymptotic_bound").get<std::string>());
    report.argmax.v1 = weights_from_json(j.at("argmax").at("v1"));
    report.argmax.v2 = weights_from_json(j.at("argmax").at("v2"));
    report.summary.k_gen = j.at("summary").at("k_gen").get<long long>();
    report.summary.k_sigma = j.at("summary").at("k_sigma").get<long long>();
    report.summary.k = j.at("summary").at("k").get<std::vector<long long>>();
    report.terms.R = parse_rational(j.at("terms").at("R").get<std::string>());
    report.terms.S = parse_rational(j.at("terms").at("S").get<std::string>());
    report.terms.T = parse_rational(j.at("terms").at("T").get<std::string>());
    report.terms.D = parse_rational(j.at("terms").at("D").get<std::string>());
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed bound report: ") + e.what());
  }
  return report;
}

LinkParams params_from_json(const std::string& text) {
  const ordered_json j = parse_object(text, "parameter");
  LinkParams params;
  try {
    params.k = j.at("k").get<long>();
    params.g = j.at("g").get<long>();
    params.p = j.at("p").get<long>();
    params.lambda = parse_rational(j.at("lambda").get<std::string>());
    if (j.contains("area"))
      params.ambient_area = parse_rational(j.at("area").get<std::string>());
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed parameter JSON: ") + e.what());
  }
  validate(params);
  return params;
}

std::string params_to_json(const LinkParams& params) {
  ordered_json j;
  j["k"] = params.k;
  j["g"] = params.g;
  j["p"] = params.p;
  j["lambda"] = to_string(params.lambda);
  j["area"] = to_string(params.ambient_area);
  return j.dump();
}

Homotopy homotopy_from_json(const std::string& text) {
  const ordered_json j = parse_object(text, "homotopy");
  Homotopy h;
  try {
    h.m = j.at("M").get<int>();
    h.n = j.at("N").get<int>();
    const auto& ja = j.at("a");
    const auto& jb = j.at("b");
    if (!ja.is_array() || !jb.is_array() || ja.size() != jb.size())
      throw std::invalid_argument("homotopy arrays must match");
    h.grid.resize(ja.size());
    for (std::size_t idx = 0; idx < ja.size(); ++idx) {
      const auto& pa = ja[idx];
      const auto& pb = jb[idx];
      if (!pa.is_array() || pa.size() != 2 || !pb.is_array() || pb.size() != 2)
        throw std::invalid_argument("chart entries must be [re, im] pairs");
      h.grid[idx] = {Complex(pa[0].get<double>(), pa[1].get<double>()),
                     Complex(pb[0].get<double>(), pb[1].get<double>())};
    }
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed homotopy JSON: ") + e.what());
  }
  validate(h);
  return h;
}

std::string homotopy_to_json(const Homotopy& h) {
  validate(h);
  ordered_json ja = ordered_json::array();
  ordered_json jb = ordered_json::array();
  for (const ChartPoint& pt : h.grid) {
    ja.push_back({pt.a.real(), pt.a.imag()});
    jb.push_back({pt.b.real(), pt.b.imag()});
  }
  ordered_json j;
  j["M"] = h.m;
  j["N"] = h.n;
  j["a"] = std::move(ja);
  j["b"] = std::move(jb);
  return j.dump();
}

WeightVector weight_vector_from_csv(const std::string& text, long p) {
  WeightVector v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    v.s.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<long>(v.s.size()) != p)
    throw std::invalid_argument("weight vector must have exactly p entries");
  return v;
}

}  // namespace braidnorm
