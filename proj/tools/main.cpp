// Command-line front end; talks to the library exclusively through the C
// interface in braidnorm.h.

#include <braidnorm.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;

struct StringDeleter {
  void operator()(char* s) const { bn_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ParamsDeleter {
  void operator()(bn_params* p) const { bn_params_free(p); }
};
using OwnedParams = std::unique_ptr<bn_params, ParamsDeleter>;

struct WordDeleter {
  void operator()(bn_word* w) const { bn_word_free(w); }
};
using OwnedWord = std::unique_ptr<bn_word, WordDeleter>;

struct HomotopyDeleter {
  void operator()(bn_homotopy* h) const { bn_homotopy_free(h); }
};
using OwnedHomotopy = std::unique_ptr<bn_homotopy, HomotopyDeleter>;

// usage problems exit 2, failed checks and numeric trouble exit 1
class CommandError : public std::runtime_error {
 public:
  CommandError(const std::string& what, int code)
      : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void check(bn_status status) {
  if (status == BN_OK) return;
  const int code =
      (status == BN_ERR_PARSE || status == BN_ERR_INVALID_ARGUMENT) ? 2 : 1;
  throw CommandError(bn_last_error(), code);
}

struct ParamFlags {
  long k = 0;
  long g = 0;
  long p = 1;
  std::string lambda;
  std::string area;
  std::string config;
  bool k_set = false;
  bool lambda_set = false;
  bool area_set = false;
  bool g_set = false;
  bool p_set = false;

  void register_on(CLI::App* cmd, bool with_areas = true) {
    cmd->add_option("--k", k, "contractible circles (k >= 2)")
        ->each([this](const std::string&) { k_set = true; });
    cmd->add_option("--g", g, "genus / non-contractible circles")
        ->each([this](const std::string&) { g_set = true; });
    cmd->add_option("--p", p, "boundary components (p >= 1)")
        ->each([this](const std::string&) { p_set = true; });
    if (with_areas) {
      cmd->add_option("--lambda", lambda, "disc area as NUM/DEN")
          ->each([this](const std::string&) { lambda_set = true; });
      cmd->add_option("--area", area, "total surface area as NUM/DEN (default 1)")
          ->each([this](const std::string&) { area_set = true; });
      cmd->add_option("--config", config,
                      "JSON file {\"k\":..,\"g\":..,\"p\":..,\"lambda\":\"..\"}");
    }
  }

  OwnedParams resolve() {
    ordered_json j;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw CommandError("cannot read config file '" + config + "'", 2);
      std::stringstream buffer;
      buffer << in.rdbuf();
      j = ordered_json::parse(buffer.str(), nullptr, false);
      if (j.is_discarded() || !j.is_object())
        throw CommandError("malformed config file '" + config + "'", 2);
      // flags still win below; remember the config signature for words
      if (!k_set && j.contains("k")) k = j["k"].get<long>();
      if (!g_set && j.contains("g")) g = j["g"].get<long>();
      if (!p_set && j.contains("p")) p = j["p"].get<long>();
    }
    if (k_set) j["k"] = k;
    if (g_set) j["g"] = g;
    if (p_set) j["p"] = p;
    if (lambda_set) j["lambda"] = lambda;
    if (area_set) j["area"] = area;
    if (!j.contains("g")) j["g"] = g;
    if (!j.contains("p")) j["p"] = p;
    if (!j.contains("k") || !j.contains("lambda"))
      throw CommandError("--k and --lambda are required (flags or --config)", 2);
    bn_params* raw = nullptr;
    check(bn_params_from_json(j.dump().c_str(), &raw));
    return OwnedParams(raw);
  }

  // signature for word parsing: k + g strands
  long n_strands() const { return k + g; }
};

OwnedWord parse_word_flag(const ParamFlags& flags, const std::string& text,
                          int mode = BN_MODE_RESTRICTED) {
  bn_word* raw = nullptr;
  check(bn_word_parse(text.c_str(), flags.n_strands(), flags.g, flags.p, mode, &raw));
  return OwnedWord(raw);
}

std::string weights_line(const ordered_json& arr) {
  std::string out = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].get<std::string>();
  }
  return out + "]";
}

std::string summary_line(const ordered_json& summary) {
  std::ostringstream os;
  os << "k_gen=" << summary.at("k_gen").get<long long>()
     << " k_sigma=" << summary.at("k_sigma").get<long long>() << " k=[";
  const auto& k = summary.at("k");
  for (std::size_t i = 0; i < k.size(); ++i)
    os << (i ? "," : "") << k[i].get<long long>();
  os << "]";
  return os.str();
}

void print_bound_table(const std::string& word_text, const ordered_json& report) {
  std::cout << "word:        " << (word_text.empty() ? "(empty)" : word_text) << "\n"
            << "summary:     " << summary_line(report.at("summary")) << "\n"
            << "f_max:       " << report.at("f_max").get<std::string>() << "\n"
            << "half bound:  " << report.at("half_bound").get<std::string>() << "\n"
            << "asymptotic:  " << report.at("asymptotic_bound").get<std::string>() << "\n"
            << "witness v1:  " << weights_line(report.at("argmax").at("v1")) << "\n"
            << "witness v2:  " << weights_line(report.at("argmax").at("v2")) << "\n"
            << "terms:       R=" << report.at("terms").at("R").get<std::string>()
            << " S=" << report.at("terms").at("S").get<std::string>()
            << " T=" << report.at("terms").at("T").get<std::string>()
            << " D=" << report.at("terms").at("D").get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hofer-energy lower bounds for braid types on surfaces"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(28);

  auto* bound = app.add_subcommand(
      "bound", "lower bound for the Hofer norm of a braid word");
  ParamFlags bound_params;
  bound_params.register_on(bound);
  std::string bound_word;
  bool bound_json = false;
  bound->add_option("--word", bound_word, "braid word, e.g. \"s1 z1^2 a1\"");
  bound->add_flag("--json", bound_json, "emit the canonical report JSON");

  auto* eval = app.add_subcommand(
      "eval", "evaluate the weighted homomorphism at explicit weights");
  ParamFlags eval_params;
  eval_params.register_on(eval);
  std::string eval_word, eval_v1, eval_v2;
  bool eval_json = false;
  eval->add_option("--word", eval_word, "braid word");
  eval->add_option("--v1", eval_v1, "first weight vector, e.g. \"1/5,0\"")->required();
  eval->add_option("--v2", eval_v2, "second weight vector")->required();
  eval->add_flag("--json", eval_json, "emit JSON");

  auto* maximize = app.add_subcommand(
      "maximize", "closed-form and vertex-enumeration maxima with witnesses");
  ParamFlags max_params;
  max_params.register_on(maximize);
  std::string max_word;
  bool max_json = false, max_sweep = false;
  maximize->add_option("--word", max_word, "braid word");
  maximize->add_flag("--sweep", max_sweep, "also list every vertex pair value");
  maximize->add_flag("--json", max_json, "emit JSON");

  auto* expand = app.add_subcommand(
      "expand", "expand c generators and solve the last boundary loop");
  ParamFlags expand_params;
  expand_params.register_on(expand, /*with_areas=*/false);
  std::string expand_word;
  bool expand_zlast = false;
  auto* expand_word_opt =
      expand->add_option("--word", expand_word, "restricted word to expand");
  expand->add_flag("--z-last", expand_zlast, "print the solved z_p word");

  auto* checkrel = app.add_subcommand(
      "check-relations", "randomised consistency checks of the generator values");
  ParamFlags check_params;
  check_params.register_on(checkrel);
  unsigned long long check_seed = 20240817ULL;
  int check_trials = 100;
  checkrel->add_option("--seed", check_seed, "RNG seed (fixed default)");
  checkrel->add_option("--trials", check_trials, "weight pairs to sample");

  auto* intersect = app.add_subcommand(
      "intersect", "signed diagonal intersections of a sampled homotopy");
  std::string homotopy_file, model_name;
  double tol = 1e-9;
  int grid = 256;
  bool intersect_json = false;
  intersect->add_option("--homotopy", homotopy_file, "homotopy JSON file");
  intersect->add_option("--model", model_name, "built-in model: elementary|sigma");
  intersect->add_option("--tol", tol, "subdivision tolerance in grid units");
  intersect->add_option("--grid", grid, "built-in model resolution (default 256)");
  intersect->add_flag("--json", intersect_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bound->parsed()) {
      const OwnedParams params = bound_params.resolve();
      const OwnedWord word = parse_word_flag(bound_params, bound_word);
      char* raw = nullptr;
      check(bn_bound_report_json(params.get(), word.get(), &raw));
      const OwnedString report(raw);
      if (bound_json) {
        std::cout << report.get() << "\n";
      } else {
        print_bound_table(bound_word, ordered_json::parse(report.get()));
      }
      return 0;
    }

    if (eval->parsed()) {
      const OwnedParams params = eval_params.resolve();
      const OwnedWord word = parse_word_flag(eval_params, eval_word);
      char* raw = nullptr;
      check(bn_f_value(params.get(), word.get(), eval_v1.c_str(), eval_v2.c_str(),
                       &raw));
      const OwnedString value(raw);
      if (eval_json) {
        ordered_json j;
        j["value"] = value.get();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "f = " << value.get() << "\n";
      }
      return 0;
    }

    if (maximize->parsed()) {
      const OwnedParams params = max_params.resolve();
      const OwnedWord word = parse_word_flag(max_params, max_word);
      char* raw = nullptr;
      check(bn_maximize_json(params.get(), word.get(), max_sweep ? 1 : 0, &raw));
      const OwnedString result(raw);
      if (max_json) {
        std::cout << result.get() << "\n";
        return 0;
      }
      const ordered_json j = ordered_json::parse(result.get());
      std::cout << "closed form: " << j.at("closed").get<std::string>() << "\n"
                << "vertex max:  " << j.at("lp").get<std::string>() << "\n"
                << "agree:       " << (j.at("agree").get<bool>() ? "yes" : "NO") << "\n"
                << "witness v1:  " << weights_line(j.at("witness").at("v1")) << "\n"
                << "witness v2:  " << weights_line(j.at("witness").at("v2")) << "\n"
                << "terms:       R=" << j.at("terms").at("R").get<std::string>()
                << " S=" << j.at("terms").at("S").get<std::string>()
                << " T=" << j.at("terms").at("T").get<std::string>()
                << " D=" << j.at("terms").at("D").get<std::string>() << "\n";
      if (max_sweep) {
        for (const auto& row : j.at("sweep"))
          std::cout << "  v1=" << weights_line(row.at("v1"))
                    << " v2=" << weights_line(row.at("v2"))
                    << " f=" << row.at("value").get<std::string>() << "\n";
      }
      return j.at("agree").get<bool>() ? 0 : 1;
    }

    if (expand->parsed()) {
      if (expand_word_opt->count() == 0 && !expand_zlast)
        throw CommandError("expand needs --word and/or --z-last", 2);
      if (expand_word_opt->count() > 0) {
        const OwnedWord word = parse_word_flag(expand_params, expand_word);
        bn_word* out = nullptr;
        check(bn_word_expand(word.get(), &out));
        const OwnedWord expanded(out);
        char* raw = nullptr;
        check(bn_word_format(expanded.get(), &raw));
        const OwnedString text(raw);
        std::cout << "expanded: " << text.get() << "\n";
      }
      if (expand_zlast) {
        bn_word* out = nullptr;
        check(bn_z_last_word(expand_params.k, expand_params.g, expand_params.p, &out));
        const OwnedWord zword(out);
        char* raw = nullptr;
        check(bn_word_format(zword.get(), &raw));
        const OwnedString text(raw);
        std::cout << "z_last:   " << text.get() << "\n";
      }
      return 0;
    }

    if (checkrel->parsed()) {
      const OwnedParams params = check_params.resolve();
      char* raw = nullptr;
      check(bn_check_relations_json(params.get(), check_seed, check_trials, &raw));
      const OwnedString result(raw);
      const ordered_json j = ordered_json::parse(result.get());
      for (const auto& line : j.at("lines"))
        std::cout << line.get<std::string>() << "\n";
      return j.at("ok").get<bool>() ? 0 : 1;
    }

    if (intersect->parsed()) {
      if (homotopy_file.empty() == model_name.empty())
        throw CommandError("intersect needs exactly one of --homotopy or --model", 2);
      OwnedHomotopy homotopy;
      if (!homotopy_file.empty()) {
        std::ifstream in(homotopy_file);
        if (!in)
          throw CommandError("cannot read homotopy file '" + homotopy_file + "'", 2);
        std::stringstream buffer;
        buffer << in.rdbuf();
        bn_homotopy* out = nullptr;
        check(bn_homotopy_from_json(buffer.str().c_str(), &out));
        homotopy.reset(out);
      } else {
        bn_homotopy* out = nullptr;
        check(bn_homotopy_model(model_name.c_str(), grid, grid, &out));
        homotopy.reset(out);
      }
      char* raw = nullptr;
      check(bn_intersections_json(homotopy.get(), tol, &raw));
      const OwnedString result(raw);
      if (intersect_json) {
        std::cout << result.get() << "\n";
        return 0;
      }
      const ordered_json j = ordered_json::parse(result.get());
      for (const auto& rec : j.at("records"))
        std::cout << "cell (" << rec.at("cell")[0].get<int>() << ", "
                  << rec.at("cell")[1].get<int>() << ")  at (s, t) = ("
                  << rec.at("s").get<double>() << ", " << rec.at("t").get<double>()
                  << ")  sign " << (rec.at("sign").get<int>() > 0 ? "+1" : "-1")
                  << "\n";
      std::cout << "total:            " << j.at("total").get<long long>() << "\n"
                << "boundary winding: " << j.at("boundary_winding").get<long long>()
                << "\n"
                << "agreement:        "
                << (j.at("agree").get<bool>() ? "yes" : "NO") << "\n";
      return j.at("agree").get<bool>() ? 0 : 1;
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
