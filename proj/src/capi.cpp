#include "tpline/tpline.h"

#include <functional>
#include <sstream>
#include <string>

#include "render.hpp"
#include "tpline/json_io.hpp"

struct tpl_report {
  tpl_status status = TPL_OK;
  bool has_result = false;
  tpline::io::Json json;
  std::function<std::string(const tpline::io::Json&)> text;
  std::string rendered;
  std::string message;
};

namespace {

using tpline::ErrorKind;
using tpline::io::Json;

tpl_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input:
    case ErrorKind::Domain:
    case ErrorKind::Dimension:
    case ErrorKind::Context:
      return TPL_ERR_INPUT;
    case ErrorKind::HypothesisViolation:
    case ErrorKind::NotTotallyPositive:
    case ErrorKind::NoRealSolution:
    case ErrorKind::SearchFailure:
      return TPL_ERR_HYPOTHESIS;
    case ErrorKind::Degenerate:
    case ErrorKind::Singular:
      return TPL_ERR_DEGENERATE;
    case ErrorKind::Arithmetic:
    case ErrorKind::Internal:
      return TPL_ERR_INTERNAL;
  }
  return TPL_ERR_INTERNAL;
}

// Runs body against a fresh report, translating exceptions into status codes.
template <class Body>
tpl_status run(tpl_report** out, Body&& body) {
  auto* report = new (std::nothrow) tpl_report;
  if (report == nullptr) return TPL_ERR_INTERNAL;
  try {
    body(*report);
  } catch (const tpline::Error& e) {
    report->status = status_of(e.kind());
    report->message = std::string(tpline::to_string(e.kind())) + " error: " + e.what();
  } catch (const nlohmann::json::exception& e) {
    report->status = TPL_ERR_INPUT;
    report->message = std::string("input error: ") + e.what();
  } catch (const std::exception& e) {
    report->status = TPL_ERR_INTERNAL;
    report->message = std::string("internal error: ") + e.what();
  }
  const tpl_status status = report->status;
  if (out != nullptr)
    *out = report;
  else
    delete report;
  return status;
}

void set_result(tpl_report& report, Json json, std::string (*text)(const Json&)) {
  report.json = std::move(json);
  report.text = text;
  report.has_result = true;
}

const char* require_text(const char* text, const char* what) {
  if (text == nullptr) tpline::fail(ErrorKind::Input, std::string(what) + " is null");
  return text;
}

tpline::SampleTimes parse_times(const std::string& csv) {
  tpline::SampleTimes ts;
  std::stringstream ss(csv);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 4) tpline::fail(ErrorKind::Input, "expected exactly four sample times");
    ts[k++] = tpline::parse_rational(item);
  }
  if (k != 4) tpline::fail(ErrorKind::Input, "expected exactly four sample times");
  return ts;
}

}  // namespace

extern "C" {

tpl_status tpl_check_tp(const char* input_json, tpl_report** out) {
  return run(out, [&](tpl_report& r) {
    const Json in = tpline::io::parse(require_text(input_json, "input"));
    const bool square = in.contains("X");
    const tpline::TpReport tp = square ? tpline::check_tp_square(tpline::io::matrix_from(in.at("X")))
                                       : tpline::check_tp_config(tpline::io::config_from(in));
    set_result(r, tpline::io::tp_report_json(tp, square), tpline::render::tp_report);
    if (!tp.ok) {
      r.status = TPL_ERR_HYPOTHESIS;
      r.message = "hypothesis violation: " + tpline::describe(*tp.witness);
    }
  });
}

tpl_status tpl_factor(const char* input_json, tpl_report** out) {
  return run(out, [&](tpl_report& r) {
    const Json in = tpline::io::parse(require_text(input_json, "input"));
    const tpline::MatQ x = tpline::io::matrix_from(in.contains("X") ? in.at("X") : in);
    set_result(r, tpline::io::params_json(tpline::lw_factor(x)), tpline::render::params);
  });
}

tpl_status tpl_solve(const char* config_json, tpl_report** out) {
  return run(out, [&](tpl_report& r) {
    const Json in = tpline::io::parse(require_text(config_json, "input"));
    const auto solution = tpline::solve_transversals(tpline::io::config_from(in));
    set_result(r, tpline::io::solution_json(solution), tpline::render::solution);
  });
}

tpl_status tpl_verify_identity(uint32_t spots, uint64_t seed, tpl_report** out) {
  return run(out, [&](tpl_report& r) {
    const auto cert = tpline::verify_identity(spots, seed);
    set_result(r, tpline::io::certificate_json(cert), tpline::render::certificate);
  });
}

tpl_status tpl_curve_sample(const char* curve_json, const char* ts_csv, const char* epsilon,
                            tpl_report** out) {
  return run(out, [&](tpl_report& r) {
    const tpline::CurveSpec curve = curve_json == nullptr
                                        ? tpline::CurveSpec::rational_normal()
                                        : tpline::io::curve_from(tpline::io::parse(curve_json));
    const tpline::SampleTimes ts = parse_times(require_text(ts_csv, "ts"));
    const std::string eps_text = epsilon == nullptr ? "auto" : epsilon;
    const tpline::Rational eps = eps_text == "auto" ? tpline::epsilon_threshold(curve, ts)
                                                    : tpline::parse_rational(eps_text);
    const auto report = tpline::lemma_sample(curve, ts, eps);
    const auto scaling = tpline::scaling_check(curve, ts, eps);
    set_result(r, tpline::io::sample_report_json(curve, report, scaling), tpline::render::sample);
    if (!report.ok) {
      r.status = TPL_ERR_HYPOTHESIS;
      r.message = "hypothesis violation: not all 70 sampled minors are positive";
    }
  });
}

tpl_status tpl_schubert_count(int k, int n, tpl_report** out) {
  return run(out, [&](tpl_report& r) {
    const tpline::Integer count = tpline::schubert_count(k, n);
    set_result(r, Json{{"k", k}, {"n", n}, {"count", count.get_str()}}, tpline::render::schubert);
  });
}

tpl_status tpl_random_instance(uint64_t seed, uint32_t bound, tpl_report** out) {
  return run(out, [&](tpl_report& r) {
    Json json = tpline::io::instance_json(tpline::random_tp_instance(seed, bound));
    Json ordered{{"seed", seed}, {"bound", bound}};
    for (auto& [key, value] : json.items()) ordered[key] = value;
    set_result(r, std::move(ordered), tpline::render::instance);
  });
}

const char* tpl_report_render(tpl_report* report, tpl_format format) {
  if (report == nullptr || !report->has_result) return "";
  try {
    report->rendered =
        format == TPL_FORMAT_TEXT ? report->text(report->json) : tpline::io::dump(report->json);
  } catch (const std::exception& e) {
    report->rendered.clear();
    report->message = std::string("render error: ") + e.what();
  }
  return report->rendered.c_str();
}

const char* tpl_report_message(const tpl_report* report) {
  return report == nullptr ? "" : report->message.c_str();
}

void tpl_report_free(tpl_report* report) { delete report; }

const char* tpl_status_name(tpl_status status) {
  switch (status) {
    case TPL_OK: return "ok";
    case TPL_ERR_INTERNAL: return "internal";
    case TPL_ERR_INPUT: return "input";
    case TPL_ERR_HYPOTHESIS: return "hypothesis-violation";
    case TPL_ERR_DEGENERATE: return "degenerate";
  }
  return "unknown";
}

const char* tpl_version(void) { return "0.1.0"; }

}  // extern "C"
