#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

#include "freedf/cumulants.hpp"
#include "freedf/definetti.hpp"
#include "freedf/error.hpp"
#include "freedf/io.hpp"
#include "freedf/weingarten.hpp"

namespace freedf::cli {

namespace {

struct Common {
  std::string format = "json";
  std::string output;
};

struct Emitter {
  const Common& common;
  std::ostream& out;

  void emit(const Json& j, const std::string& text) const {
    const std::string body = common.format == "json" ? j.dump(2) + "\n" : text;
    if (common.output.empty()) {
      out << body;
    } else {
      write_text_file(common.output, body);
    }
  }
};

std::string scalar_text(const std::string& label, const Rational& v) { return label + " = " + to_string(v) + "\n"; }

FunctionalTable load_table(const std::string& path, bool allow_decimal = false) {
  return table_from_json(read_json_file(path), allow_decimal);
}

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("-o,--output", common.output, "Write the result to a file instead of stdout");
}

CLI::Option* add_category(CLI::App* sub, std::string& category) {
  return sub->add_option("--category,-c", category, "o+, s+, h+ or b+")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of free easy quantum groups and de Finetti invariance checks", "freedf"};
  app.require_subcommand(1);
  Common common;
  const Emitter emitter{common, out};
  std::function<int()> action;

  std::string category;
  int m = 0;
  int n = 0;
  int max_order = 0;
  std::string input;
  std::string text_i;
  std::string text_j;
  std::string partition_text;

  {
    auto* sub = app.add_subcommand("partitions", "Enumerate P(m) or the category C(m)");
    add_common(sub, common);
    sub->add_option("--m", m, "Order")->required();
    sub->add_option("--category,-c", category, "Restrict to a category");
    sub->callback([&] {
      action = [&] {
        const bool all = category.empty();
        const auto list = all ? enumerate_partitions(m) : enumerate_category(parse_category(category), m);
        Json j;
        j["m"] = m;
        j["category"] = all ? Json(nullptr) : Json(category_name(parse_category(category)));
        j["count"] = list.size();
        j["partitions"] = Json::array();
        std::string text = (all ? std::string("P") : std::string(category_name(parse_category(category)))) + "(" +
                           std::to_string(m) + "): " + std::to_string(list.size()) + "\n";
        for (const auto& p : list) {
          j["partitions"].push_back(p.to_string());
          text += "  [" + p.to_string() + "] " + p.to_block_string() + "\n";
        }
        emitter.emit(j, text);
        return 0;
      };
    });
  }

  for (const char* name : {"gram", "weingarten"}) {
    const bool is_gram = std::string(name) == "gram";
    auto* sub = app.add_subcommand(name, is_gram ? "Gram matrix n^{#(p v q)} over C(m)"
                                                 : "Exact Weingarten matrix, the inverse Gram matrix");
    add_common(sub, common);
    add_category(sub, category);
    sub->add_option("--m", m, "Order")->required();
    sub->add_option("--n", n, "Dimension")->required();
    sub->callback([&, is_gram] {
      action = [&, is_gram] {
        const CategoryId cat = parse_category(category);
        if (is_gram) {
          const auto g = gram(cat, m, n);
          emitter.emit(to_json(g), to_text(g));
        } else {
          const auto w = weingarten(cat, m, n);
          emitter.emit(to_json(*w), to_text(*w));
        }
        return 0;
      };
    });
  }

  {
    auto* sub = app.add_subcommand("haar", "Haar-state moment h(u_{i1 j1} ... u_{im jm})");
    add_common(sub, common);
    add_category(sub, category);
    sub->add_option("--n", n, "Dimension")->required();
    sub->add_option("--i", text_i, "Row indices, e.g. 1,2")->required();
    sub->add_option("--j", text_j, "Column indices, e.g. 1,2")->required();
    sub->callback([&] {
      action = [&] {
        const CategoryId cat = parse_category(category);
        const IndexTuple i = parse_tuple(text_i, n);
        const IndexTuple j = parse_tuple(text_j, n);
        const Rational v = haar_moment(cat, n, i, j);
        Json out_json;
        out_json["category"] = category_name(cat);
        out_json["n"] = n;
        out_json["i"] = i.to_string();
        out_json["j"] = j.to_string();
        out_json["value"] = to_string(v);
        emitter.emit(out_json, scalar_text("h(" + i.to_string() + " | " + j.to_string() + ")", v));
        return 0;
      };
    });
  }

  {
    auto* sub = app.add_subcommand("transform", "Free moments to cumulants or back, by the input's kind");
    add_common(sub, common);
    sub->add_option("--input,-i", input, "Table JSON")->required();
    sub->callback([&] {
      action = [&] {
        const auto table = load_table(input);
        const auto result =
            table.kind() == TableKind::Moments ? cumulants_from_moments(table) : moments_from_cumulants(table);
        emitter.emit(to_json(result), to_text(result));
        return 0;
      };
    });
  }

  std::string mode = "rational";
  double tolerance = 1e-9;
  std::size_t max_witnesses = 16;
  {
    auto* sub = app.add_subcommand("check", "Decide invariance of a moment table");
    add_common(sub, common);
    add_category(sub, category);
    sub->add_option("--input,-i", input, "Moment table JSON")->required();
    sub->add_option("--mode", mode, "Scalar mode")->check(CLI::IsMember({"rational", "float"}));
    sub->add_option("--tolerance", tolerance, "Relative tolerance, float mode only")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-witnesses", max_witnesses, "Witnesses to report");
    sub->callback([&] {
      action = [&] {
        CheckOptions options;
        options.mode = mode == "float" ? ScalarMode::Float : ScalarMode::Rational;
        options.tolerance = tolerance;
        options.max_witnesses = max_witnesses;
        options.record_residuals = false;
        const auto table = load_table(input, options.mode == ScalarMode::Float);
        const auto report = check_invariance(table, parse_category(category), options);
        emitter.emit(to_json(report), to_text(report));
        return report.verdict == Verdict::Pass ? 0 : 1;
      };
    });
  }

  std::vector<int> orders;
  {
    auto* sub = app.add_subcommand("solve", "Coefficients c (from moments) or C (from cumulants)");
    add_common(sub, common);
    add_category(sub, category);
    sub->add_option("--input,-i", input, "Moment or cumulant table JSON")->required();
    sub->add_option("--order", orders, "Orders to solve; default all");
    sub->callback([&] {
      action = [&] {
        const auto table = load_table(input);
        const CategoryId cat = parse_category(category);
        CoefficientFamily family;
        family.category = cat;
        family.kind = table.kind() == TableKind::Moments ? CoefficientKind::MomentCoefficients
                                                         : CoefficientKind::CumulantCoefficients;
        std::vector<int> which = orders;
        if (which.empty()) {
          for (int k = 1; k <= table.max_order(); ++k) which.push_back(k);
        }
        std::sort(which.begin(), which.end());
        which.erase(std::unique(which.begin(), which.end()), which.end());
        Json info = Json::object();
        std::string notes;
        for (int k : which) {
          auto solved = table.kind() == TableKind::Moments ? solve_moment_coefficients(table, cat, k)
                                                           : solve_cumulant_coefficients(table, cat, k);
          Json entry;
          entry["method"] = solved.by_mobius ? "mobius" : "linear";
          entry["unique"] = solved.unique;
          entry["rank"] = solved.rank;
          entry["unknowns"] = solved.unknowns;
          info[std::to_string(k)] = std::move(entry);
          if (!solved.unique) {
            notes += "order " + std::to_string(k) + ": underdetermined (rank " + std::to_string(solved.rank) +
                     " of " + std::to_string(solved.unknowns) + "), free coefficients set to 0\n";
          }
          family.orders[k] = std::move(solved.coefficients);
        }
        Json j = to_json(family);
        j["solve"] = std::move(info);
        emitter.emit(j, to_text(family) + notes);
        return 0;
      };
    });
  }

  {
    auto* sub = app.add_subcommand("convert", "Convert a coefficient family between c and C");
    add_common(sub, common);
    sub->add_option("--input,-i", input, "Coefficient family JSON")->required();
    sub->callback([&] {
      action = [&] {
        const auto family = convert_coefficients(coefficient_family_from_json(read_json_file(input)));
        emitter.emit(to_json(family), to_text(family));
        return 0;
      };
    });
  }

  std::uint64_t seed = 0;
  std::string repr = "kernel";
  std::string kind = "moments";
  {
    auto* sub = app.add_subcommand("generate", "Random invariant model from seeded cumulant coefficients");
    add_common(sub, common);
    add_category(sub, category);
    sub->add_option("--n", n, "Dimension")->required();
    sub->add_option("--max-order,-M", max_order, "Largest order")->required()->check(CLI::Range(0, kMaxOrder));
    sub->add_option("--seed", seed, "Generator seed")->required();
    sub->add_option("--repr", repr, "Output representation")->check(CLI::IsMember({"kernel", "dense"}));
    sub->add_option("--kind", kind, "Emit moments or cumulants")->check(CLI::IsMember({"moments", "cumulants"}));
    sub->callback([&] {
      action = [&] {
        auto model = generate_invariant_model(parse_category(category), n, max_order, seed);
        FunctionalTable table = kind == "moments" ? model.moments : model.cumulants;
        if (repr == "dense") table = table.to_dense();
        emitter.emit(to_json(table), to_text(table));
        return 0;
      };
    });
  }

  {
    auto* sub = app.add_subcommand("semicircular", "Moments of a free semicircular system");
    add_common(sub, common);
    sub->add_option("--n", n, "Dimension")->required();
    sub->add_option("--max-order,-M", max_order, "Largest order")->required()->check(CLI::Range(0, kMaxOrder));
    sub->add_option("--repr", repr, "Output representation")->check(CLI::IsMember({"kernel", "dense"}));
    sub->callback([&] {
      action = [&] {
        FunctionalTable table = semicircular_model(n, max_order);
        if (repr == "dense") table = table.to_dense();
        emitter.emit(to_json(table), to_text(table));
        return 0;
      };
    });
  }

  std::string tuple_text;
  {
    auto* sub = app.add_subcommand("reconstruct", "Value of the infinite invariant sequence at a tuple over the naturals");
    add_common(sub, common);
    add_category(sub, category);
    sub->add_option("--input,-i", input, "Table JSON, or a restricted family (phi_tilde / kappa_tilde)")->required();
    sub->add_option("--tuple,-t", tuple_text, "Index tuple, e.g. 1,7,1")->required();
    sub->callback([&] {
      action = [&] {
        const CategoryId cat = parse_category(category);
        const Json j = read_json_file(input);
        const CoefficientFamily restricted = j.contains("coefficients")
                                                 ? coefficient_family_from_json(j)
                                                 : restrict_to_category(table_from_json(j), cat);
        const IndexTuple i = parse_tuple(tuple_text);
        const Rational v = reconstruct_infinite(restricted, cat, i);
        Json out_json;
        out_json["category"] = category_name(cat);
        out_json["tuple"] = i.to_string();
        out_json["value"] = to_string(v);
        emitter.emit(out_json, scalar_text("value(" + i.to_string() + ")", v));
        return 0;
      };
    });
  }

  std::vector<std::string> inputs;
  double probe_tolerance = 1e-12;
  {
    auto* sub = app.add_subcommand("asymptotics", "Trend of mixed cumulants and pairing moments as n grows");
    add_common(sub, common);
    add_category(sub, category);
    sub->add_option("--m", m, "Order")->required();
    sub->add_option("--input,-i", inputs, "Moment tables, one per dimension")->required();
    sub->add_option("--tolerance", probe_tolerance, "Absolute tolerance for the trend verdict")
        ->check(CLI::NonNegativeNumber);
    sub->callback([&] {
      action = [&] {
        std::vector<MomentTable> models;
        for (const auto& path : inputs) models.push_back(load_table(path));
        const auto report = asymptotic_freeness_probe(models, parse_category(category), m, probe_tolerance);
        emitter.emit(to_json(report), to_text(report));
        return 0;
      };
    });
  }

  {
    auto* sub = app.add_subcommand("block-sum", "Normalized block sum over tuples with a pairing below their kernel");
    add_common(sub, common);
    sub->add_option("--input,-i", input, "Moment table JSON")->required();
    sub->add_option("--partition,-p", partition_text, "Non-crossing pairing as RGS, e.g. 0,0,1,1")->required();
    sub->add_option("--n", n, "Dimension; defaults to the table's");
    sub->callback([&] {
      action = [&] {
        const auto table = load_table(input);
        const Partition p = parse_partition(partition_text);
        const int dim = n > 0 ? n : table.n();
        const Rational v = normalized_block_sum(table, p, dim);
        Json out_json;
        out_json["partition"] = p.to_string();
        out_json["n"] = dim;
        out_json["value"] = to_string(v);
        emitter.emit(out_json, scalar_text("block sum [" + p.to_string() + "] " + p.to_block_string(), v));
        return 0;
      };
    });
  }

  auto report_error = [&err](std::string_view code, const std::string& message) {
    Json j;
    j["error"] = code;
    j["message"] = message;
    err << j.dump() << '\n';
    return 2;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error("Usage", e.what());
  } catch (const Error& e) {
    return report_error(error_name(e.code()), e.what());
  }

  try {
    if (const char* dir = std::getenv("FREEDF_CACHE_DIR"); dir && *dir) set_weingarten_cache_dir(dir);
    return action();
  } catch (const Error& e) {
    return report_error(error_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return report_error("Internal", e.what());
  }
}

}  // namespace freedf::cli
