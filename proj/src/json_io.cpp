#include "tpline/json_io.hpp"

namespace tpline::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::Input, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Input, what); }

Json poly_summary(const Poly16& p) {
  return Json{{"terms", p.term_count()}, {"sha256", content_hash(p)}, {"text", to_string(p)}};
}

Poly16 poly_from_summary(const Json& j) { return parse_poly(field(j, "text").get<std::string>()); }

}  // namespace

Json rational_json(const Rational& value) { return to_string(value); }

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  bad("expected a rational string, got " + j.dump());
}

Json quad_json(const QuadNum& value) {
  return Json{{"a", to_string(value.a())}, {"b", to_string(value.b())}, {"d", to_string(value.d())}};
}

QuadNum quad_from(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return QuadNum(rational_from(j));
  return QuadNum(rational_from(field(j, "a")), rational_from(field(j, "b")),
                 rational_from(field(j, "d")));
}

namespace {

template <class T, class F>
Json matrix_json_impl(const Matrix<T>& m, F&& element) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, class F>
Matrix<T> matrix_from_impl(const Json& j, F&& element) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("expected a nested array matrix");
  const std::size_t cols = j[0].size();
  Matrix<T> m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element(j[r][c]);
  }
  return m;
}

}  // namespace

Json matrix_json(const MatQ& m) { return matrix_json_impl(m, rational_json); }
MatQ matrix_from(const Json& j) { return matrix_from_impl<Rational>(j, rational_from); }
Json matrix_json(const MatK& m) { return matrix_json_impl(m, quad_json); }
MatK quad_matrix_from(const Json& j) { return matrix_from_impl<QuadNum>(j, quad_from); }

Json index_set_json(const IndexSet& set) { return Json(set.indices()); }

IndexSet index_set_from(const Json& j) {
  if (!j.is_array()) bad("expected an index array");
  return IndexSet(j.get<std::vector<std::size_t>>());
}

Json config_json(const ConfigBlocks& blocks) {
  Json arr = Json::array();
  for (const MatQ& b : blocks.blocks()) arr.push_back(matrix_json(b));
  return Json{{"blocks", std::move(arr)}};
}

ConfigBlocks config_from(const Json& j) {
  const Json& arr = field(j, "blocks");
  if (!arr.is_array() || arr.size() != 4) bad("\"blocks\" must hold exactly four 4x2 matrices");
  return ConfigBlocks({matrix_from(arr[0]), matrix_from(arr[1]), matrix_from(arr[2]),
                       matrix_from(arr[3])});
}

Json params_json(const LWParams& params) {
  Json obj = Json::object();
  for (char c = 'a'; c <= 'p'; ++c) obj[std::string(1, c)] = rational_json(params[c]);
  return Json{{"params", std::move(obj)}};
}

LWParams params_from(const Json& j) {
  const Json& obj = j.contains("params") ? j.at("params") : j;
  std::array<Rational, 16> values;
  for (char c = 'a'; c <= 'p'; ++c)
    values[static_cast<std::size_t>(c - 'a')] = rational_from(field(obj, std::string(1, c).c_str()));
  return LWParams(values);
}

Json tp_report_json(const TpReport& report, bool square) {
  Json out{{"ok", report.ok}, {"witness", nullptr}, {"minors_checked", report.minors_checked}};
  if (report.witness) {
    Json w = Json::object();
    if (square) w["rows"] = index_set_json(report.witness->rows);
    w["cols"] = index_set_json(report.witness->cols);
    w["minor"] = rational_json(report.witness->value);
    out["witness"] = std::move(w);
  }
  return out;
}

TpReport tp_report_from(const Json& j) {
  TpReport report;
  report.ok = field(j, "ok").get<bool>();
  if (j.contains("minors_checked")) report.minors_checked = j.at("minors_checked").get<std::size_t>();
  const Json& w = field(j, "witness");
  if (!w.is_null()) {
    MinorWitness witness;
    witness.rows = w.contains("rows") ? index_set_from(w.at("rows")) : IndexSet::range(1, 4);
    witness.cols = index_set_from(field(w, "cols"));
    witness.value = rational_from(field(w, "minor"));
    report.witness = std::move(witness);
  }
  return report;
}

namespace {

Json form_json(const BilinearForm& f) {
  return Json{{"xy", rational_json(f.xy)}, {"x", rational_json(f.x)}, {"y", rational_json(f.y)},
              {"one", rational_json(f.one)}};
}

BilinearForm form_from(const Json& j) {
  return BilinearForm{rational_from(field(j, "xy")), rational_from(field(j, "x")),
                      rational_from(field(j, "y")), rational_from(field(j, "one"))};
}

Json line_json(const LineRep& line) {
  Json plucker = Json::array();
  Json approx = Json::array();
  for (const QuadNum& p : line.plucker) {
    plucker.push_back(quad_json(p));
    approx.push_back(p.approx());
  }
  return Json{{"span", matrix_json(line.span)}, {"plucker", std::move(plucker)},
              {"approx", std::move(approx)}};
}

LineRep line_from(const Json& j) {
  LineRep line;
  line.span = quad_matrix_from(field(j, "span"));
  const Json& p = field(j, "plucker");
  if (!p.is_array() || p.size() != 6) bad("plucker must have six entries");
  for (std::size_t k = 0; k < 6; ++k) line.plucker[k] = quad_from(p[k]);
  return line;
}

}  // namespace

Json solution_json(const TransversalSolution& s) {
  Json incidence = Json::array();
  for (const auto& row : s.incidence) incidence.push_back(Json::array({quad_json(row[0]), quad_json(row[1])}));
  return Json{
      {"g", matrix_json(s.canonical.g)},
      {"X", matrix_json(s.canonical.x)},
      {"forms", {{"f", form_json(s.f)}, {"h", form_json(s.h)}}},
      {"quadratic",
       {{"A", rational_json(s.quadratic.a)},
        {"B", rational_json(s.quadratic.b)},
        {"C", rational_json(s.quadratic.c)},
        {"D", rational_json(s.quadratic.discriminant)}}},
      {"lines", Json::array({line_json(s.lines[0]), line_json(s.lines[1])})},
      {"incidence", std::move(incidence)},
      {"warnings", s.warnings},
  };
}

TransversalSolution solution_from(const Json& j) {
  TransversalSolution s;
  s.canonical.g = matrix_from(field(j, "g"));
  s.canonical.x = matrix_from(field(j, "X"));
  s.canonical.y = sign_matrix_y();
  s.f = form_from(field(field(j, "forms"), "f"));
  s.h = form_from(field(field(j, "forms"), "h"));
  const Json& q = field(j, "quadratic");
  s.quadratic = Quadratic{rational_from(field(q, "A")), rational_from(field(q, "B")),
                          rational_from(field(q, "C")), rational_from(field(q, "D"))};
  const Json& lines = field(j, "lines");
  if (!lines.is_array() || lines.size() != 2) bad("solution must hold two lines");
  s.lines = {line_from(lines[0]), line_from(lines[1])};
  const Json& inc = field(j, "incidence");
  if (!inc.is_array() || inc.size() != 4) bad("incidence table must be 4x2");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 2; ++k) s.incidence[i][k] = quad_from(inc[i][k]);
  s.warnings = field(j, "warnings").get<std::vector<std::string>>();
  return s;
}

Json curve_json(const CurveSpec& curve) {
  if (curve.kind == CurveSpec::Kind::RationalNormal) return Json{{"kind", "rational_normal"}};
  Json comps = Json::array();
  for (const auto& comp : curve.components) {
    Json c = Json::array();
    for (const Rational& v : comp) c.push_back(rational_json(v));
    comps.push_back(std::move(c));
  }
  return Json{{"kind", "polynomial"}, {"components", std::move(comps)}};
}

CurveSpec curve_from(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "rational_normal") return CurveSpec::rational_normal();
  if (kind != "polynomial") bad("unknown curve kind \"" + kind + "\"");
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != 4) bad("a polynomial curve needs four components");
  std::array<std::vector<Rational>, 4> components;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!comps[k].is_array()) bad("curve components must be coefficient arrays");
    for (const Json& v : comps[k]) components[k].push_back(rational_from(v));
  }
  return CurveSpec::polynomial(std::move(components));
}

Json sample_report_json(const CurveSpec& curve, const SampleReport& report,
                        const std::vector<ScalingRow>& scaling) {
  Json ts = Json::array();
  for (const Rational& t : report.ts) ts.push_back(rational_json(t));
  Json minors = Json::array();
  for (const SampledMinor& m : report.minors)
    minors.push_back(Json{{"rows", index_set_json(m.rows)}, {"value", rational_json(m.value)},
                          {"kappa", m.kappa}});
  Json scale = Json::array();
  for (const ScalingRow& row : scaling)
    scale.push_back(Json{{"rows", index_set_json(row.rows)}, {"kappa", row.kappa},
                         {"ratio", rational_json(row.ratio)}, {"ok", row.ok}});
  return Json{{"curve", curve_json(curve)},  {"ts", std::move(ts)},
              {"epsilon", rational_json(report.epsilon)},
              {"W", matrix_json(report.w)},  {"minors", std::move(minors)},
              {"ok", report.ok},             {"scaling", std::move(scale)}};
}

SampleReport sample_report_from(const Json& j) {
  SampleReport report;
  const Json& ts = field(j, "ts");
  if (!ts.is_array() || ts.size() != 4) bad("ts must hold four values");
  for (std::size_t k = 0; k < 4; ++k) report.ts[k] = rational_from(ts[k]);
  report.epsilon = rational_from(field(j, "epsilon"));
  report.w = matrix_from(field(j, "W"));
  for (const Json& m : field(j, "minors"))
    report.minors.push_back(SampledMinor{index_set_from(field(m, "rows")),
                                         rational_from(field(m, "value")),
                                         field(m, "kappa").get<unsigned>()});
  report.ok = field(j, "ok").get<bool>();
  return report;
}

Json certificate_json(const IdentityCertificate& cert) {
  const PrintedFGH fgh = printed_fgh();
  Json spots = Json::array();
  for (const SpotEvaluation& s : cert.spots) {
    Json params = Json::array();
    for (const Rational& v : s.params) params.push_back(rational_json(v));
    spots.push_back(Json{{"params", std::move(params)}, {"lhs", rational_json(s.lhs)},
                         {"rhs", rational_json(s.rhs)}, {"agree", s.lhs == s.rhs}});
  }
  return Json{{"equal", cert.equal},
              {"lhs", poly_summary(cert.lhs)},
              {"rhs", poly_summary(cert.rhs)},
              {"difference", poly_summary(cert.difference)},
              {"printed",
               {{"F", to_string(fgh.f)}, {"G", to_string(fgh.g)}, {"H", to_string(fgh.h)}}},
              {"spots", std::move(spots)}};
}

IdentityCertificate certificate_from(const Json& j) {
  IdentityCertificate cert;
  cert.equal = field(j, "equal").get<bool>();
  cert.lhs = poly_from_summary(field(j, "lhs"));
  cert.rhs = poly_from_summary(field(j, "rhs"));
  cert.difference = poly_from_summary(field(j, "difference"));
  for (const Json& s : field(j, "spots")) {
    SpotEvaluation spot;
    const Json& params = field(s, "params");
    if (!params.is_array() || params.size() != 16) bad("spot params must hold 16 values");
    for (std::size_t k = 0; k < 16; ++k) spot.params[k] = rational_from(params[k]);
    spot.lhs = rational_from(field(s, "lhs"));
    spot.rhs = rational_from(field(s, "rhs"));
    cert.spots.push_back(std::move(spot));
  }
  return cert;
}

Json instance_json(const TpInstance& instance) {
  Json out = params_json(instance.params);
  out["blocks"] = config_json(instance.blocks).at("blocks");
  return out;
}

TpInstance instance_from(const Json& j) { return TpInstance{params_from(j), config_from(j)}; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Input, std::string("JSON parse error: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tpline::io
