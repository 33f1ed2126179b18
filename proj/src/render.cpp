#include "render.hpp"

#include <sstream>

namespace tpline::render {

namespace {

std::string quad_text(const io::Json& q) { return to_string(io::quad_from(q)); }

void matrix_text(std::ostringstream& os, const std::string& name, const io::Json& m) {
  os << name << ":\n";
  for (const auto& row : m) {
    os << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ", ";
      os << (row[c].is_string() ? row[c].get<std::string>() : quad_text(row[c]));
    }
    os << "]\n";
  }
}

std::string indices(const io::Json& arr) {
  std::string out = "{";
  for (std::size_t k = 0; k < arr.size(); ++k) out += (k ? "," : "") + std::to_string(arr[k].get<int>());
  return out + "}";
}

}  // namespace

std::string tp_report(const io::Json& r) {
  std::ostringstream os;
  os << "totally positive: " << (r.at("ok").get<bool>() ? "yes" : "no") << "\n";
  os << "minors checked: " << r.at("minors_checked").get<std::size_t>() << "\n";
  if (!r.at("witness").is_null()) {
    const auto& w = r.at("witness");
    os << "witness:";
    if (w.contains("rows")) os << " rows " << indices(w.at("rows"));
    os << " cols " << indices(w.at("cols")) << " minor " << w.at("minor").get<std::string>() << "\n";
  }
  return os.str();
}

std::string params(const io::Json& p) {
  std::ostringstream os;
  for (const auto& [name, value] : p.at("params").items())
    os << name << " = " << value.get<std::string>() << "\n";
  return os.str();
}

std::string solution(const io::Json& s) {
  std::ostringstream os;
  matrix_text(os, "g", s.at("g"));
  matrix_text(os, "X", s.at("X"));
  for (const char* name : {"f", "h"}) {
    const auto& f = s.at("forms").at(name);
    os << name << ": (" << f.at("xy").get<std::string>() << ") xy + (" << f.at("x").get<std::string>()
       << ") x + (" << f.at("y").get<std::string>() << ") y + (" << f.at("one").get<std::string>()
       << ")\n";
  }
  const auto& q = s.at("quadratic");
  os << "quadratic: (" << q.at("A").get<std::string>() << ") x^2 + (" << q.at("B").get<std::string>()
     << ") x + (" << q.at("C").get<std::string>() << "), D = " << q.at("D").get<std::string>()
     << "\n";
  int index = 1;
  for (const auto& line : s.at("lines")) {
    os << "line " << index++ << " plucker:";
    for (const auto& p : line.at("plucker")) os << " [" << quad_text(p) << "]";
    os << "\n  approx:";
    for (const auto& p : line.at("approx")) os << " " << p.get<double>();
    os << "\n";
  }
  bool all_zero = true;
  for (const auto& row : s.at("incidence"))
    for (const auto& v : row) all_zero = all_zero && io::quad_from(v).is_zero();
  os << "incidence determinants: " << (all_zero ? "all exactly 0" : "NONZERO ENTRIES") << "\n";
  os << "warnings:";
  for (const auto& w : s.at("warnings")) os << " " << w.get<std::string>();
  os << "\n";
  return os.str();
}

std::string certificate(const io::Json& c) {
  std::ostringstream os;
  os << "identity holds: " << (c.at("equal").get<bool>() ? "yes" : "no") << "\n";
  for (const char* name : {"lhs", "rhs", "difference"}) {
    const auto& p = c.at(name);
    os << name << ": " << p.at("terms").get<std::size_t>() << " terms, sha256 "
       << p.at("sha256").get<std::string>() << "\n";
  }
  if (!c.at("equal").get<bool>()) os << "difference = " << c.at("difference").at("text").get<std::string>() << "\n";
  os << "spot evaluations:\n";
  for (const auto& s : c.at("spots"))
    os << "  lhs " << s.at("lhs").get<std::string>() << "  rhs " << s.at("rhs").get<std::string>()
       << (s.at("agree").get<bool>() ? "  agree" : "  differ") << "\n";
  return os.str();
}

std::string sample(const io::Json& s) {
  std::ostringstream os;
  os << "epsilon: " << s.at("epsilon").get<std::string>() << "\n";
  os << "all 70 minors positive: " << (s.at("ok").get<bool>() ? "yes" : "no") << "\n";
  matrix_text(os, "W", s.at("W"));
  os << "minors (rows, kappa, value):\n";
  for (const auto& m : s.at("minors"))
    os << "  " << indices(m.at("rows")) << "  " << m.at("kappa").get<int>() << "  "
       << m.at("value").get<std::string>() << "\n";
  if (!s.at("scaling").empty()) {
    bool all = true;
    for (const auto& r : s.at("scaling")) all = all && r.at("ok").get<bool>();
    os << "halving-ratio scaling check: " << (all ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

std::string schubert(const io::Json& c) { return c.at("count").get<std::string>() + "\n"; }

std::string instance(const io::Json& inst) {
  std::ostringstream os;
  os << params(inst);
  int k = 1;
  for (const auto& b : inst.at("blocks")) matrix_text(os, "W" + std::to_string(k++), b);
  return os.str();
}

}  // namespace tpline::render
