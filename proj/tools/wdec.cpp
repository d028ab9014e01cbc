#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdec/report.hpp"

namespace {

using namespace wdec;

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_input = 2;
constexpr int exit_stage = 3;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::input:
    case ErrorKind::not_associative:
    case ErrorKind::not_closed:
    case ErrorKind::unsupported:
    case ErrorKind::too_large:
      return exit_input;
    default:
      return exit_stage;
  }
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream os(*path);
  if (!os) throw Error(ErrorKind::input, "cannot write '" + *path + "'");
  os << text;
}

struct InputArgs {
  std::string family;
  std::size_t n = 0;
  std::string input;

  bool given() const { return !family.empty() || !input.empty(); }

  InputData load() const {
    if (!family.empty() && !input.empty()) throw Error(ErrorKind::input, "give either --family/--n or --input, not both");
    if (!input.empty()) return input_from_file(input);
    if (family.empty()) throw Error(ErrorKind::input, "no input: use --family and --n, or --input");
    if (n == 0) throw Error(ErrorKind::input, "--n must be at least 1");
    return input_from_family(family, n);
  }
};

void add_input_options(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("--family", in.family, "Semigroup family: sym, si, ft, pt, hall, qp, b");
  cmd->add_option("--n", in.n, "Matrix size for --family");
  cmd->add_option("--input", in.input, "Table or algebra JSON file");
}

std::map<std::string, Rational> parse_lift_params(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      std::size_t end = item.find(',', start);
      if (end == std::string::npos) end = item.size();
      std::string part = item.substr(start, end - start);
      start = end + 1;
      if (part.empty()) continue;
      auto eq = part.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::input, "--lift-params expects name=value, got '" + part + "'");
      out[part.substr(0, eq)] = parse_rational(part.substr(eq + 1));
    }
  }
  return out;
}

AssocMode parse_assoc(const std::string& s) {
  if (s == "auto") return AssocMode::automatic;
  if (s == "exhaustive") return AssocMode::exhaustive;
  if (s == "sampled") return AssocMode::sampled;
  if (s == "off") return AssocMode::off;
  throw Error(ErrorKind::input, "--check-assoc must be exhaustive, sampled, off or auto");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Wedderburn decomposition of finite-dimensional algebras over Q"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Enumerate a Boolean matrix semigroup and write its multiplication table");
  std::string gen_family;
  std::size_t gen_n = 0;
  std::optional<std::string> gen_out;
  gen->add_option("--family", gen_family, "sym, si, ft, pt, hall, qp, b")->required();
  gen->add_option("--n", gen_n, "Matrix size")->required();
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Run the full decomposition");
  InputArgs dec_in;
  add_input_options(dec, dec_in);
  std::optional<std::string> dec_out;
  std::string format = "json";
  PipelineOptions opt;
  std::vector<std::string> lift_params;
  std::string check_assoc = "auto";
  bool timing = false;
  dec->add_option("--out", dec_out, "Report file (default: stdout)");
  dec->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  dec->add_option("--seed", opt.seed, "Seed for every randomized search");
  dec->add_option("--kronecker-max-degree", opt.kronecker_max_degree, "Degree cap for polynomial factorization");
  dec->add_option("--primitive-trials", opt.primitive_trials, "Random trials per field-splitting node");
  dec->add_flag("--lift,!--no-lift", opt.lift, "Lift the semisimple quotient into the algebra (default on)");
  dec->add_option("--lift-params", lift_params, "Free lifting parameters as name=value (comma separated)");
  dec->add_option("--check-assoc", check_assoc, "exhaustive, sampled, off or auto");
  dec->add_option("--field", opt.field, "Ground field (only Q)");
  dec->add_flag("--timing", timing, "Print elapsed time to stderr");

  // verify
  auto* ver = app.add_subcommand("verify", "Re-check a report against its input");
  InputArgs ver_in;
  add_input_options(ver, ver_in);
  std::string ver_report;
  ver->add_option("--report", ver_report, "Report JSON written by decompose")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      auto elements = generate(parse_family(gen_family), gen_n);
      MultiplicationTable t = table_of(elements);
      Json j = table_to_json(t);
      Json names = Json::array();
      for (const auto& m : elements) names.push_back(m.to_string());
      j["elements"] = names;
      write_output(gen_out, j.dump() + "\n");
      (gen_out ? std::cout : std::cerr) << t.order << "\n";
      return exit_ok;
    }

    if (*dec) {
      opt.lift_params = parse_lift_params(lift_params);
      opt.check_assoc = parse_assoc(check_assoc);
      auto start = std::chrono::steady_clock::now();
      InputData in = dec_in.load();
      Decomposition d = run_pipeline(in, opt);
      if (format == "json") {
        write_output(dec_out, report_json(d, in, opt).dump(1) + "\n");
        (dec_out ? std::cout : std::cerr) << d.summary() << "\n";
      } else {
        write_output(dec_out, report_text(d));
        if (dec_out) std::cout << d.summary() << "\n";
      }
      if (timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        std::cerr << "elapsed " << dt.count() << " s\n";
      }
      for (const auto& e : d.errors)
        std::cerr << "error [" << e.stage << "] " << to_string(e.kind) << ": " << e.message << "\n";
      return d.complete() ? exit_ok : exit_stage;
    }

    if (*ver) {
      std::ifstream is(ver_report);
      if (!is) throw Error(ErrorKind::input, "cannot open '" + ver_report + "'");
      Json report;
      try {
        report = Json::parse(is);
      } catch (const Json::exception& e) {
        throw Error(ErrorKind::input, "report is not valid JSON: " + std::string(e.what()));
      }
      InputData in;
      if (ver_in.given()) {
        in = ver_in.load();
      } else if (report.contains("input") && report["input"].contains("family")) {
        in = input_from_family(report["input"]["family"].get<std::string>(), report["input"]["n"].get<std::size_t>());
      } else if (report.contains("input") && report["input"].contains("file")) {
        in = input_from_file(report["input"]["file"].get<std::string>());
      } else {
        throw Error(ErrorKind::input, "no input given and the report does not name one");
      }
      bool ok = true;
      for (const auto& c : verify_report(report, in)) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.ok) std::cout << ": " << c.detail;
        std::cout << "\n";
        ok = ok && c.ok;
      }
      return ok ? exit_ok : exit_verify;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_stage;
  }
  return exit_ok;
}
