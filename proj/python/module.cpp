#include "cakecut/selftest.hpp"
#include "cakecut/simulate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

namespace py = pybind11;
using namespace cakecut;

namespace {

// JSON crosses the boundary as text; the Python side wraps it with json.loads.
std::string simulate_json(const std::string& scenario) {
  return to_json(simulate(parse_scenario(Json::parse(scenario)))).dump();
}

std::string attack_json(const std::string& scenario, std::size_t attacker) {
  auto s = parse_scenario(Json::parse(scenario));
  if (attacker < 1 || attacker > s.profile.size()) throw py::value_error("attacker out of range");
  return to_json(run_attack(s, attacker - 1)).dump();
}

std::string run_json(const std::string& scenario, const std::string& protocol) {
  auto s = parse_scenario(Json::parse(scenario));
  s.protocols = {protocol};
  s.attack.reset();
  auto r = simulate(s);
  Json out = to_json(r)["protocols"][0];
  if (r.protocols[0].transcript) out["transcript_text"] = write_transcript(*r.protocols[0].transcript);
  return out.dump();
}

py::dict verify_text(const std::string& text) {
  std::istringstream in(text);
  auto v = verify_transcript(read_transcript(in));
  py::list records;
  for (const auto& r : v.records) records.append(to_string(r));
  py::dict out;
  out["ok"] = v.ok;
  out["records"] = records;
  out["allocation"] = v.allocation ? py::object(py::str(encode(*v.allocation).dump())) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_cakecut, m) {
  m.doc() = "Simple-fair cake cutting with a sealed-bid moving knife";

  py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);

  m.def("simulate_json", &simulate_json, py::arg("scenario"));
  m.def("attack_json", &attack_json, py::arg("scenario"), py::arg("attacker"));
  m.def("run_json", &run_json, py::arg("scenario"), py::arg("protocol"));
  m.def("verify_text", &verify_text, py::arg("text"));
  m.def("verify_file", [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw py::value_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return verify_text(buf.str());
  });
  m.def("selftest", [] {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& c : run_selftest()) out.emplace_back(c.name, c.ok);
    return out;
  });
  m.def("protocols", &known_protocols);
}
