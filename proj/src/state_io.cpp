#include "fermient/state_io.hpp"

#include "fermient/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace fermient {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

double number_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("amplitude entry lacks \"") + key + "\"");
  if (!it->is_number()) fail(std::string("\"") + key + "\" is not a number");
  return it->get<double>();
}

}  // namespace

FockState parse_state(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!doc.is_object()) fail("state document must be a JSON object");
  auto n_it = doc.find("n_modes");
  if (n_it == doc.end() || !n_it->is_number_integer()) fail("\"n_modes\" must be an integer");
  const int n = n_it->get<int>();
  auto amps = doc.find("amplitudes");
  if (amps == doc.end() || !amps->is_array()) fail("\"amplitudes\" must be an array");

  std::vector<MaskAmplitude> entries;
  std::set<long long> seen;
  for (const json& e : *amps) {
    if (!e.is_object()) fail("amplitude entries must be objects");
    auto m = e.find("mask");
    if (m == e.end() || !m->is_number_integer()) fail("\"mask\" must be an integer");
    const long long mask = m->get<long long>();
    if (mask < 0) fail("negative mask " + std::to_string(mask));
    if (!seen.insert(mask).second) fail("mask " + std::to_string(mask) + " listed twice");
    if (n >= 1 && n <= max_modes && mask >= (1LL << n)) {
      throw Error(ErrorCode::invalid_argument,
                  "mask " + std::to_string(mask) + " out of range for " + std::to_string(n) +
                      " modes");
    }
    entries.push_back({static_cast<Mask>(mask), Complex(number_field(e, "re"), number_field(e, "im"))});
  }
  return make_state(n, entries);
}

FockState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

std::string format_state(const FockState& state, int indent) {
  json amps = json::array();
  for (Mask m = 0; m < state.dim(); ++m) {
    const Complex a = state[m];
    if (a == Complex{}) continue;
    amps.push_back({{"mask", m}, {"re", a.real()}, {"im", a.imag()}});
  }
  json doc = {{"n_modes", state.n_modes()}, {"amplitudes", amps}};
  return doc.dump(indent);
}

}  // namespace fermient
