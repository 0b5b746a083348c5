#include "freedf/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "freedf/error.hpp"

namespace freedf {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorCode::SchemaError, message); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) schema("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) schema(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) schema(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) schema(std::string("field \"") + name + "\" must be a string");
  return v.get<std::string>();
}

Rational scalar(const Json& v, const std::string& where, bool allow_decimal) {
  if (!v.is_string()) schema(where + ": scalars are strings such as \"1/2\"");
  try {
    return parse_rational(v.get<std::string>(), allow_decimal);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

int order_key(const std::string& key, int max_order) {
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(key, &used);
  } catch (const std::exception&) {
    schema("order key \"" + key + "\" is not an integer");
  }
  if (used != key.size() || m < 1 || m > max_order) {
    schema("order key \"" + key + "\" outside 1.." + std::to_string(max_order));
  }
  return m;
}

std::string block_text(const Partition& p) { return p.to_block_string(); }

Json slice_json(const CoefficientSlice& slice) {
  Json out = Json::object();
  for (const auto& [p, v] : slice) out[p.to_string()] = to_string(v);
  return out;
}

}  // namespace

Json to_json(const CategoryMatrix& matrix) {
  Json j;
  j["category"] = category_name(matrix.category);
  j["m"] = matrix.m;
  j["n"] = matrix.n;
  j["basis"] = Json::array();
  for (const auto& p : matrix.basis) j["basis"].push_back(p.to_string());
  j["entries"] = Json::array();
  for (std::size_t r = 0; r < matrix.entries.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < matrix.entries.cols(); ++c) row.push_back(to_string(matrix.entries(r, c)));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

CategoryMatrix category_matrix_from_json(const Json& j) {
  CategoryMatrix out;
  out.category = parse_category(string_field(j, "category"));
  out.m = int_field(j, "m");
  out.n = int_field(j, "n");
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) schema("field \"basis\" must be an array");
  for (const auto& b : basis) {
    if (!b.is_string()) schema("basis entries are RGS strings");
    out.basis.push_back(b.get<std::string>().empty() ? Partition() : parse_partition(b.get<std::string>()));
  }
  const Json& entries = field(j, "entries");
  const std::size_t size = out.basis.size();
  if (!entries.is_array() || entries.size() != size) schema("field \"entries\" must be a square array over the basis");
  out.entries = RationalMatrix(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    if (!entries[r].is_array() || entries[r].size() != size) schema("matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < size; ++c) {
      out.entries(r, c) = scalar(entries[r][c], "entry (" + std::to_string(r) + "," + std::to_string(c) + ")", false);
    }
  }
  return out;
}

Json to_json(const FunctionalTable& table) {
  Json j;
  j["n"] = table.n();
  j["max_order"] = table.max_order();
  j["kind"] = kind_name(table.kind());
  j["repr"] = representation_name(table.representation());
  Json values = Json::object();
  const bool dense = table.representation() == Representation::Dense;
  for (int m = 1; m <= table.max_order(); ++m) {
    Json order = Json::object();
    const std::size_t count = table.entry_count(m);
    const auto* classes = dense ? nullptr : &kernel_classes(m, table.n()).classes;
    for (std::size_t s = 0; s < count; ++s) {
      const std::string key = dense ? table.tuple_at(m, s).to_string() : (*classes)[s].to_string();
      order[key] = to_string(table.at_slot(m, s));
    }
    values[std::to_string(m)] = std::move(order);
  }
  j["values"] = std::move(values);
  return j;
}

FunctionalTable table_from_json(const Json& j, bool allow_decimal) {
  const int n = int_field(j, "n");
  const int max_order = int_field(j, "max_order");
  if (n < 1) schema("field \"n\" must be at least 1");
  if (max_order < 0 || max_order > kMaxOrder) schema("field \"max_order\" must lie in 0.." + std::to_string(kMaxOrder));
  const std::string kind = string_field(j, "kind");
  const std::string repr = string_field(j, "repr");
  TableKind k;
  if (kind == "moments") k = TableKind::Moments;
  else if (kind == "cumulants") k = TableKind::Cumulants;
  else schema("field \"kind\" must be \"moments\" or \"cumulants\"");
  Representation r;
  if (repr == "dense") r = Representation::Dense;
  else if (repr == "kernel") r = Representation::Kernel;
  else schema("field \"repr\" must be \"dense\" or \"kernel\"");

  FunctionalTable table(k, r, n, max_order);
  const Json& values = field(j, "values");
  if (!values.is_object()) schema("field \"values\" must be an object");
  std::vector<const Json*> orders(static_cast<std::size_t>(max_order) + 1, nullptr);
  for (const auto& [key, order] : values.items()) orders[static_cast<std::size_t>(order_key(key, max_order))] = &order;

  for (int m = 1; m <= max_order; ++m) {
    const std::size_t count = table.entry_count(m);
    std::vector<bool> seen(count, false);
    if (const Json* order = orders[static_cast<std::size_t>(m)]) {
      if (!order->is_object()) schema("values of order " + std::to_string(m) + " must be an object");
      const auto& index = kernel_classes(m, n).index;
      for (const auto& [key, value] : order->items()) {
        const std::string where = "order " + std::to_string(m) + " key \"" + key + "\"";
        std::size_t slot = 0;
        try {
          if (r == Representation::Dense) {
            IndexTuple i = parse_tuple(key, n);
            if (i.size() != m) schema(where + ": tuple has the wrong length");
            slot = dense_slot(i, n);
          } else {
            Partition p = parse_partition(key);
            if (p.size() != m) schema(where + ": partition has the wrong size");
            if (p.to_string() != key) schema(where + ": kernel keys must be canonical RGS strings");
            auto it = index.find(p);
            if (it == index.end()) schema(where + ": kernel needs more than n = " + std::to_string(n) + " variables");
            slot = it->second;
          }
        } catch (const Error& e) {
          if (e.code() == ErrorCode::SchemaError) throw;
          schema(where + ": " + e.what());
        }
        if (seen[slot]) schema(where + ": duplicate entry");
        seen[slot] = true;
        table.at_slot(m, slot) = scalar(value, where, allow_decimal);
      }
    }
    std::string missing;
    std::size_t missing_count = 0;
    for (std::size_t s = 0; s < count; ++s) {
      if (seen[s]) continue;
      if (++missing_count <= 10) {
        if (!missing.empty()) missing += ", ";
        missing += "\"" + (r == Representation::Dense ? table.tuple_at(m, s).to_string()
                                                      : kernel_classes(m, n).classes[s].to_string()) + "\"";
      }
    }
    if (missing_count) {
      if (missing_count > 10) missing += " and " + std::to_string(missing_count - 10) + " more";
      throw Error(ErrorCode::IncompleteTable, "order " + std::to_string(m) + " is missing keys " + missing);
    }
  }
  return table;
}

Json to_json(const CoefficientFamily& family) {
  Json j;
  j["category"] = category_name(family.category);
  j["kind"] = coefficient_kind_name(family.kind);
  Json coeffs = Json::object();
  for (const auto& [m, slice] : family.orders) coeffs[std::to_string(m)] = slice_json(slice);
  j["coefficients"] = std::move(coeffs);
  return j;
}

CoefficientFamily coefficient_family_from_json(const Json& j) {
  CoefficientFamily family;
  family.category = parse_category(string_field(j, "category"));
  family.kind = parse_coefficient_kind(string_field(j, "kind"));
  const Json& coeffs = field(j, "coefficients");
  if (!coeffs.is_object()) schema("field \"coefficients\" must be an object");
  for (const auto& [key, slice] : coeffs.items()) {
    const int m = order_key(key, kMaxOrder);
    if (!slice.is_object()) schema("coefficients of order " + key + " must be an object");
    const auto& basis = enumerate_category(family.category, m);
    auto& out = family.orders[m];
    for (const auto& [rgs, value] : slice.items()) {
      const std::string where = "order " + key + " key \"" + rgs + "\"";
      Partition p;
      try {
        p = parse_partition(rgs);
      } catch (const Error& e) {
        schema(where + ": " + e.what());
      }
      if (p.size() != m || !category_contains(family.category, p)) {
        schema(where + ": not in " + std::string(category_name(family.category)) + " at order " + key);
      }
      if (!out.emplace(p, scalar(value, where, false)).second) schema(where + ": duplicate entry");
    }
    if (out.size() != basis.size()) {
      std::string missing;
      for (const auto& p : basis) {
        if (!out.count(p)) missing += (missing.empty() ? "\"" : ", \"") + p.to_string() + "\"";
      }
      schema("coefficients of order " + key + " are missing " + missing);
    }
  }
  return family;
}

Json to_json(const InvarianceReport& report) {
  Json j;
  j["verdict"] = verdict_name(report.verdict);
  j["category"] = category_name(report.category);
  j["n"] = report.n;
  j["max_order"] = report.max_order;
  Json coeffs = Json::object();
  for (const auto& [m, slice] : report.coefficients.orders) coeffs[std::to_string(m)] = slice_json(slice);
  j["coefficients"] = std::move(coeffs);
  j["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) {
    Json item;
    item["m"] = w.m;
    item["tuple"] = w.tuple.to_string();
    item["expected"] = to_string(w.expected);
    item["actual"] = to_string(w.actual);
    j["witnesses"].push_back(std::move(item));
  }
  j["failure_count"] = report.failure_count;
  return j;
}

Json to_json(const AsymptoticReport& report) {
  Json j;
  j["category"] = category_name(report.category);
  j["m"] = report.m;
  j["tolerance"] = report.tolerance;
  j["series"] = Json::array();
  for (const auto& s : report.series) {
    Json item;
    item["kernel"] = s.kernel.to_string();
    item["quantity"] = s.quantity;
    item["target"] = to_string(s.target);
    item["n"] = s.dimensions;
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(to_string(v));
    item["values"] = std::move(values);
    item["trend"] = trend_name(s.trend);
    item["rate"] = s.rate ? Json(*s.rate) : Json(nullptr);
    j["series"].push_back(std::move(item));
  }
  return j;
}

std::string to_text(const CategoryMatrix& matrix) {
  std::ostringstream out;
  out << category_name(matrix.category) << " m=" << matrix.m << " n=" << matrix.n << " size=" << matrix.basis.size()
      << '\n';
  for (std::size_t r = 0; r < matrix.basis.size(); ++r) {
    out << "  [" << matrix.basis[r].to_string() << "] " << block_text(matrix.basis[r]) << ':';
    for (std::size_t c = 0; c < matrix.basis.size(); ++c) out << ' ' << to_string(matrix.entries(r, c));
    out << '\n';
  }
  return out.str();
}

std::string to_text(const FunctionalTable& table) {
  std::ostringstream out;
  out << kind_name(table.kind()) << " (" << representation_name(table.representation()) << ") n=" << table.n()
      << " max_order=" << table.max_order() << '\n';
  const bool dense = table.representation() == Representation::Dense;
  for (int m = 1; m <= table.max_order(); ++m) {
    out << "order " << m << '\n';
    for (std::size_t s = 0; s < table.entry_count(m); ++s) {
      if (dense) {
        out << "  (" << table.tuple_at(m, s).to_string() << ")";
      } else {
        const auto& p = kernel_classes(m, table.n()).classes[s];
        out << "  [" << p.to_string() << "] " << block_text(p);
      }
      out << " = " << to_string(table.at_slot(m, s)) << '\n';
    }
  }
  return out.str();
}

std::string to_text(const CoefficientFamily& family) {
  std::ostringstream out;
  out << coefficient_kind_name(family.kind) << " coefficients for " << category_name(family.category) << '\n';
  for (const auto& [m, slice] : family.orders) {
    out << "order " << m << '\n';
    for (const auto& [p, v] : slice) out << "  [" << p.to_string() << "] " << block_text(p) << " = " << to_string(v) << '\n';
  }
  return out.str();
}

std::string to_text(const InvarianceReport& report) {
  std::ostringstream out;
  out << verdict_name(report.verdict) << ' ' << category_name(report.category) << " n=" << report.n
      << " max_order=" << report.max_order << " failures=" << report.failure_count << '\n';
  for (const auto& [m, slice] : report.coefficients.orders) {
    out << "order " << m << '\n';
    for (const auto& [p, v] : slice) out << "  c[" << p.to_string() << "] " << block_text(p) << " = " << to_string(v) << '\n';
  }
  for (const auto& w : report.witnesses) {
    out << "witness m=" << w.m << " (" << w.tuple.to_string() << ") expected " << to_string(w.expected)
        << " actual " << to_string(w.actual) << '\n';
  }
  return out.str();
}

std::string to_text(const AsymptoticReport& report) {
  std::ostringstream out;
  out << category_name(report.category) << " m=" << report.m << " tolerance=" << report.tolerance << '\n';
  for (const auto& s : report.series) {
    out << "  " << s.quantity << " [" << s.kernel.to_string() << "] " << block_text(s.kernel) << " -> "
        << to_string(s.target) << ": " << trend_name(s.trend);
    if (s.rate) out << " rate " << *s.rate;
    out << '\n';
    for (std::size_t k = 0; k < s.values.size(); ++k) {
      out << "    n=" << s.dimensions[k] << ' ' << to_string(s.values[k]) << '\n';
    }
  }
  return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    schema(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

}  // namespace freedf
