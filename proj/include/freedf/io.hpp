#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "freedf/definetti.hpp"
#include "freedf/table.hpp"
#include "freedf/weingarten.hpp"

namespace freedf {

using Json = nlohmann::ordered_json;

/// {"category","m","n","basis":[RGS],"entries":[[p/q]]}
Json to_json(const CategoryMatrix& matrix);
/// Throws SchemaError, BadRational.
CategoryMatrix category_matrix_from_json(const Json& j);

/// {"n","max_order","kind","repr","values":{"m":{key:"p/q"}}}; dense keys are
/// 1-based tuples "1,2", kernel keys are RGS strings "0,1".
Json to_json(const FunctionalTable& table);
/// Throws SchemaError, IncompleteTable (naming missing keys) and BadRational.
/// With `allow_decimal`, values may also be decimal literals.
FunctionalTable table_from_json(const Json& j, bool allow_decimal = false);

/// {"category","kind","coefficients":{"m":{RGS:"p/q"}}}
Json to_json(const CoefficientFamily& family);
CoefficientFamily coefficient_family_from_json(const Json& j);

Json to_json(const InvarianceReport& report);
Json to_json(const AsymptoticReport& report);

std::string to_text(const CategoryMatrix& matrix);
std::string to_text(const FunctionalTable& table);
std::string to_text(const CoefficientFamily& family);
std::string to_text(const InvarianceReport& report);
std::string to_text(const AsymptoticReport& report);

/// Throws IoError when the file cannot be read, SchemaError on malformed JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace freedf
