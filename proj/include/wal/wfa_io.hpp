#pragma once

#include <string>

#include "json.hpp"
#include "wal/wfa.hpp"

namespace wal {

using Json = nlohmann::ordered_json;

Json semiring_to_json(const Semiring& S);
Semiring semiring_from_json(const Json& j, const std::string& alphabet);

/// Only nonzero entries are written; omitted entries read back as 0.
Json wfa_to_json(const Wfa& A);
Wfa wfa_from_json(const Json& j);

Wfa load_wfa(const std::string& path);
void save_wfa(const Wfa& A, const std::string& path);

Json read_json_file(const std::string& path);

}  // namespace wal
