#pragma once

#include <string>

#include "tpline/json_io.hpp"

namespace tpline::render {

// Human-readable views of the JSON reports; both views carry the same data.
std::string tp_report(const io::Json& report);
std::string params(const io::Json& params);
std::string solution(const io::Json& solution);
std::string certificate(const io::Json& cert);
std::string sample(const io::Json& sample);
std::string schubert(const io::Json& count);
std::string instance(const io::Json& instance);

}  // namespace tpline::render
