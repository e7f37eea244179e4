#pragma once

#include <iosfwd>
#include <string>

#include "dnls/field.hpp"

namespace dnls::io {

/// {"grid":{"L":..,"N":..},"re":[..],"im":[..]}, shortest round-trip floats.
std::string field_to_json(const Field& f);
Field field_from_json(const std::string& text);

void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);

/// 17 significant digits.
std::string csv_number(double v);

}  // namespace dnls::io
