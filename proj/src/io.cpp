#include "dnls/io.hpp"

#include <fstream>
#include <iomanip>
#include "json.hpp"
#include <sstream>

#include "dnls/error.hpp"

namespace dnls::io {

using nlohmann::ordered_json;

std::string field_to_json(const Field& f) {
  ordered_json j;
  j["grid"]["L"] = f.grid().half_length;
  j["grid"]["N"] = static_cast<std::uint64_t>(f.grid().points);
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (const auto& z : f.values()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

Field field_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw DomainError(std::string("field file is not valid JSON: ") + e.what());
  }
  try {
    const Grid g = make_grid(j.at("grid").at("L").get<double>(),
                             j.at("grid").at("N").get<long long>());
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != g.points || im.size() != g.points) {
      throw DomainError("field arrays do not match grid size");
    }
    std::vector<Complex> values(g.points);
    for (std::size_t k = 0; k < g.points; ++k) {
      values[k] = {re[k].get<double>(), im[k].get<double>()};
    }
    return Field(g, std::move(values));
  } catch (const ordered_json::exception& e) {
    throw DomainError(std::string("malformed field file: ") + e.what());
  }
}

void write_field(const std::string& path, const Field& f) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << field_to_json(f) << '\n';
}

Field read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return field_from_json(buf.str());
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace dnls::io
