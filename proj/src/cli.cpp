#include "coxeter/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coxeter/center.hpp"
#include "coxeter/error.hpp"
#include "coxeter/finite_type.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/word_problem.hpp"

namespace coxeter::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const CanonicalElement& e) { return Json(e.letters()); }

Json to_json(GeneratorSet set) { return Json(set.members()); }

Json to_json(const std::vector<CanonicalElement>& elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(to_json(e));
  return out;
}

std::string type_name(const std::optional<FiniteTypeTag>& tag) {
  return tag ? tag->to_string() : std::string("infinite");
}

struct Check {
  std::string name;
  bool pass;
};

std::vector<Check> verify(const CoxeterMatrix& m, const Options& options) {
  std::vector<Check> checks;
  WordProblem wp(m);

  const Theorem2Report report = check_theorem2(m);
  checks.push_back({"theorem2.supports_in_finite_part", report.supports_in_finite_part});
  checks.push_back({"theorem2.finite_part_center_equals_center", report.finite_part_matches});
  checks.push_back({"theorem2.essential_part_center_trivial", report.essential_part_trivial});

  const CenterDescription& z = report.full_center;
  bool structure = z.elements.size() == (std::size_t{1} << z.rank_n);
  for (const auto& a : z.elements) {
    structure = structure && wp.multiply(a, a).is_identity();
    for (const auto& b : z.elements) {
      structure = structure && std::binary_search(z.elements.begin(), z.elements.end(),
                                                  wp.multiply(a, b));
    }
  }
  checks.push_back({"center.elementary_abelian_2_group", structure});

  bool central = true;
  for (const auto& e : z.elements) central = central && wp.commutes_with(e, m.generators());
  checks.push_back({"center.commutes_with_generators", central});

  // Brute force: the whole group when it fits under the cap, a ball otherwise.
  const auto enumeration = oracle::enumerate_group(m, options.cap);
  std::vector<CanonicalElement> brute;
  std::vector<CanonicalElement> expected;
  std::string scope;
  if (enumeration.complete) {
    brute = oracle::brute_center(m, enumeration.elements);
    expected = z.elements;
    scope = "complete enumeration, " + std::to_string(enumeration.elements.size()) + " elements";
  } else {
    const auto window = oracle::ball(m, options.radius);
    brute = oracle::brute_center(m, window);
    for (const auto& e : z.elements) {
      if (e.length() <= options.radius) expected.push_back(e);
    }
    scope = "ball of radius " + std::to_string(options.radius) + ", " +
            std::to_string(window.size()) + " elements";
  }
  checks.push_back({"oracle.center_matches (" + scope + ")", brute == expected});

  bool longest = true;
  for (const auto& e : brute) {
    const GeneratorSet t = support(e);
    longest = longest && is_spherical(m, t) && longest_element(wp, t) == e;
  }
  checks.push_back({"oracle.central_elements_are_longest_elements", longest});
  return checks;
}

int run_command(const std::string& command, const SystemDocument& doc, const Options& options,
                std::ostream& out) {
  const CoxeterMatrix& m = doc.matrix;
  const bool json = options.format == Format::Json;
  WordProblem wp(m);

  auto word_arg = [&](std::size_t i) -> Word {
    if (i >= options.words.size()) {
      throw Error(ErrorCode::ParseError, "command \"" + command + "\" needs --word");
    }
    return parse_word(options.words[i], doc);
  };
  auto subset_arg = [&]() -> GeneratorSet {
    return options.subset.empty() ? m.generators() : parse_subset(options.subset, doc);
  };
  auto print_element = [&](const CanonicalElement& e) {
    if (json) {
      out << Json{{"word", to_json(e)}, {"length", e.length()}}.dump() << '\n';
    } else {
      out << format_word(e.letters()) << '\n';
    }
  };

  if (command == "validate") {
    if (json) {
      Json j{{"valid", true}, {"rank", m.rank()}};
      if (!doc.names.empty()) j["names"] = doc.names;
      out << j.dump() << '\n';
    } else {
      out << "valid rank=" << m.rank() << '\n';
    }
    return kSuccess;
  }
  if (command == "reduce") {
    print_element(wp.reduce(word_arg(0)));
    return kSuccess;
  }
  if (command == "mul") {
    CanonicalElement product = wp.reduce(word_arg(0));
    for (std::size_t i = 1; i < options.words.size(); ++i) {
      product = wp.multiply(product, wp.reduce(word_arg(i)));
    }
    print_element(product);
    return kSuccess;
  }
  if (command == "inv") {
    print_element(wp.invert(wp.reduce(word_arg(0))));
    return kSuccess;
  }
  if (command == "descents") {
    const GeneratorSet d = wp.right_descents(wp.reduce(word_arg(0)));
    if (json) {
      out << Json{{"descents", to_json(d)}}.dump() << '\n';
    } else {
      out << format_word(d.members()) << '\n';
    }
    return kSuccess;
  }
  if (command == "components") {
    Json list = Json::array();
    for (const auto& c : components(m, subset_arg())) {
      const auto tag = classify_component(c, m);
      if (json) {
        list.push_back(Json{{"members", to_json(c.members)},
                            {"type", tag ? Json(tag->to_string()) : Json(nullptr)}});
      } else {
        out << format_word(c.members.members()) << " : " << type_name(tag) << '\n';
      }
    }
    if (json) out << Json{{"components", list}}.dump() << '\n';
    return kSuccess;
  }
  if (command == "spherical") {
    const bool result = is_spherical(m, subset_arg());
    if (json) {
      out << Json{{"spherical", result}}.dump() << '\n';
    } else {
      out << (result ? "true" : "false") << '\n';
    }
    return kSuccess;
  }
  if (command == "longest") {
    print_element(longest_element(wp, subset_arg()));
    return kSuccess;
  }
  if (command == "essential") {
    const EssentialSubset split = essential_subset(m);
    if (json) {
      out << Json{{"essential", to_json(split.members)},
                  {"complement", to_json(split.complement)}}.dump()
          << '\n';
    } else {
      out << "essential=" << format_word(split.members.members()) << '\n'
          << "complement=" << format_word(split.complement.members()) << '\n';
    }
    return kSuccess;
  }
  if (command == "center") {
    const CenterDescription z = center(wp);
    if (json) {
      Json supports = Json::array();
      for (GeneratorSet t : z.supports) supports.push_back(to_json(t));
      out << Json{{"rank", z.rank_n},
                  {"generators", to_json(z.generators)},
                  {"supports", supports},
                  {"elements", to_json(z.elements)}}.dump()
          << '\n';
    } else {
      out << "rank=" << z.rank_n << '\n';
      for (std::size_t i = 0; i < z.generators.size(); ++i) {
        out << "generator=" << format_word(z.generators[i].letters()) << '\n'
            << "support=" << format_word(z.supports[i].members()) << '\n';
      }
      for (const auto& e : z.elements) out << "element=" << format_word(e.letters()) << '\n';
    }
    return kSuccess;
  }
  if (command == "enumerate") {
    const auto result = oracle::enumerate_group(m, options.cap);
    if (json) {
      out << Json{{"order", result.elements.size()},
                  {"complete", result.complete},
                  {"elements", to_json(result.elements)}}.dump()
          << '\n';
    } else {
      out << "order=" << result.elements.size()
          << " complete=" << (result.complete ? "true" : "false") << '\n';
      for (const auto& e : result.elements) out << "element=" << format_word(e.letters()) << '\n';
    }
    return result.complete ? kSuccess : kCapExceeded;
  }
  if (command == "verify") {
    const auto checks = verify(m, options);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    if (json) {
      Json list = Json::array();
      for (const auto& c : checks) list.push_back(Json{{"name", c.name}, {"pass", c.pass}});
      out << Json{{"checks", list}, {"pass", ok}}.dump() << '\n';
    } else {
      for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    }
    return ok ? kSuccess : kVerificationFailed;
  }
  throw Error(ErrorCode::ParseError, "unknown command \"" + command + "\"");
}

}  // namespace

int dispatch(const std::string& command, const SystemDocument& doc, const Options& options,
             std::ostream& out, std::ostream& err) {
  try {
    return run_command(command, doc, options, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::CapExceeded ? kCapExceeded : kInvalidInput;
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact computations in Coxeter groups: word problem, finite types, centers"};
  std::string command;
  std::string path;
  std::string format = "text";
  Options options;
  app.add_option("command", command, "Operation to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("input", path, "System document (JSON); '-' or omitted reads standard input");
  app.add_option("--word", options.words, "Space-separated generator indices (repeat for mul)");
  app.add_option("--subset", options.subset, "Space-separated generator indices");
  app.add_option("--cap", options.cap, "Enumeration cap")->capture_default_str();
  app.add_option("--radius", options.radius, "Ball radius for infinite groups")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }
  options.format = format == "json" ? Format::Json : Format::Text;

  try {
    const SystemDocument doc = path.empty() || path == "-" ? load_system(in) : load_system(path);
    return dispatch(command, doc, options, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace coxeter::cli
