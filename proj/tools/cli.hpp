#pragma once
// Command-line front end and the JSON codecs it shares with the Python module.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rebit/galois.hpp"
#include "rebit/group.hpp"

namespace rebit::cli {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kCheckFailed = 1, kMalformed = 2, kInvalid = 3, kUsage = 64 };

// "p/q" for rationals, "c0,...,c7" otherwise.
std::string cyc_text(const CycNum& x);
CycNum cyc_parse(const std::string& s);

Json tensor_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);
Json gelt_json(const GElt& g);
GElt gelt_from_json(const Json& j);
Json matrix_json(const Matrix& m);

Json classify_json(const Tensor& t);
Json decompose_json(const Tensor& t);
Json invariants_json(const Tensor& t);
Json h1_json(const std::string& group);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rebit::cli
