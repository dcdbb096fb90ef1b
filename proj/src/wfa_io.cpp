#include "wal/wfa_io.hpp"

#include <fstream>
#include <sstream>

namespace wal {

Json semiring_to_json(const Semiring& S) { return S.name(); }

Semiring semiring_from_json(const Json& j, const std::string& alphabet) {
  if (!j.is_string()) throw DomainError("semiring must be a string tag");
  return Semiring(parse_tag(j.get<std::string>()), alphabet);
}

Json wfa_to_json(const Wfa& A) {
  const Semiring& S = A.semiring;
  Json j;
  j["semiring"] = S.name();
  Json alpha = Json::array();
  for (char a : A.alphabet) alpha.push_back(std::string(1, a));
  j["alphabet"] = alpha;
  j["states"] = A.states;
  Json init = Json::object();
  Json fin = Json::object();
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!S.is_zero(A.initial[i])) init[A.states[i]] = S.render(A.initial[i]);
    if (!S.is_zero(A.final[i])) fin[A.states[i]] = S.render(A.final[i]);
  }
  j["initial"] = init;
  j["final"] = fin;
  Json trans = Json::array();
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t a = 0; a < A.alphabet.size(); ++a)
      for (std::size_t k = 0; k < A.size(); ++k) {
        const Value& x = A.transitions[a][i][k];
        if (S.is_zero(x)) continue;
        trans.push_back({{"from", A.states[i]},
                         {"letter", std::string(1, A.alphabet[a])},
                         {"to", A.states[k]},
                         {"weight", S.render(x)}});
      }
  j["transitions"] = trans;
  return j;
}

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field '") + key + "'");
  return *it;
}

Value weight(const Semiring& S, const Json& j) {
  if (j.is_string()) return S.parse(j.get<std::string>());
  if (j.is_number_integer()) return S.parse(std::to_string(j.get<long long>()));
  throw DomainError("weights must be strings");
}

}  // namespace

Wfa wfa_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw DomainError("automaton must be a JSON object");
    std::string alphabet;
    for (const auto& a : field(j, "alphabet")) {
      auto s = a.get<std::string>();
      if (s.size() != 1) throw DomainError("letters must be single characters: '" + s + "'");
      alphabet += s;
    }
    Semiring S = semiring_from_json(field(j, "semiring"), alphabet);
    Wfa A(S, alphabet, field(j, "states").get<std::vector<std::string>>());
    if (auto it = j.find("initial"); it != j.end())
      for (const auto& [q, v] : it->items()) A.initial[A.state_index(q)] = weight(S, v);
    if (auto it = j.find("final"); it != j.end())
      for (const auto& [q, v] : it->items()) A.final[A.state_index(q)] = weight(S, v);
    if (auto it = j.find("transitions"); it != j.end())
      for (const auto& t : *it) {
        auto letter = field(t, "letter").get<std::string>();
        if (letter.size() != 1) throw DomainError("transition letter must be one character");
        Value& slot = A.at(field(t, "from").get<std::string>(), letter[0],
                           field(t, "to").get<std::string>());
        slot = S.add(slot, weight(S, field(t, "weight")));
      }
    return A;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed automaton: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("'" + path + "': " + e.what());
  }
}

Wfa load_wfa(const std::string& path) { return wfa_from_json(read_json_file(path)); }

void save_wfa(const Wfa& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << wfa_to_json(A).dump(2) << "\n";
}

}  // namespace wal
