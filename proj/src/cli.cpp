#include "stern/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "stern/extremal.hpp"
#include "stern/genproduct.hpp"
#include "stern/matrixrep.hpp"
#include "stern/oracle.hpp"
#include "stern/poly_json.hpp"
#include "stern/stern_core.hpp"
#include "stern/verify.hpp"

namespace stern {

namespace {

std::string read_argument_or_file(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw std::invalid_argument("cannot open file: " + value.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // strip whitespace, including trailing newlines
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             text.end());
  return text;
}

mpz_class parse_decimal(const std::string& text) {
  mpz_class n;
  if (text.empty() || mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0 ||
      n < 0)
    throw std::invalid_argument("expected a nonnegative decimal integer");
  return n;
}

std::string expansion_line(std::uint64_t n, const Expansion& h) {
  std::string line = std::to_string(n) + " =";
  bool first = true;
  for (std::size_t idx = h.mults.size(); idx-- > 0;) {
    const int j = h.mults[idx];
    if (j == 0) continue;
    line += first ? " " : " + ";
    first = false;
    line += std::to_string(h.base) + "^" + std::to_string(idx);
    if (j != 1) line += "*" + std::to_string(j);
  }
  return line;
}

nlohmann::json check_to_json(const verify::Check& c) {
  return nlohmann::json{{"suite", c.suite},   {"identity", c.name},
                        {"params", c.params}, {"pass", c.pass},
                        {"lhs", c.lhs},       {"rhs", c.rhs}};
}

int run_verify(const std::string& suite, const verify::Options& options,
               const std::string& format, std::ostream& out) {
  const std::vector<verify::Check> checks = verify::run_suite(suite, options);
  const std::size_t failed =
      static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                             [](const verify::Check& c) {
                                               return !c.pass;
                                             }));
  if (format == "json") {
    nlohmann::json report = nlohmann::json::array();
    for (const verify::Check& c : checks) report.push_back(check_to_json(c));
    out << report.dump(2) << "\n";
  } else {
    for (const verify::Check& c : checks) {
      if (c.pass) {
        out << "PASS " << c.suite << "." << c.name << " [" << c.params
            << "]\n";
      } else {
        out << "FAIL " << c.suite << "." << c.name << " "
            << check_to_json(c).dump() << "\n";
      }
    }
    out << (failed == 0 ? "OK" : "FAILED") << " " << (checks.size() - failed)
        << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Base-b Stern polynomials, hyper b-ary expansions and their "
               "verification suites",
               "stern"};
  app.require_subcommand(1);

  int base = 2;
  std::uint64_t n = 0, from = 1, to = 1;
  std::string format = "text";
  std::string n_text, digits_text;
  bool bench = false, at_ones = false;
  unsigned l = 1;
  std::string which = "odd";
  std::string suite = "all";
  verify::Options options;
  options.scan_bound = default_scan_bound();

  auto add_base = [&base](CLI::App* cmd) {
    cmd->add_option("--base,-b", base, "base b >= 2")
        ->required()
        ->check(CLI::Range(2, 1000));
  };
  const auto format_check = CLI::IsMember({"text", "json"});

  CLI::App* eval = app.add_subcommand("eval", "print w_T(n) for one index");
  add_base(eval);
  eval->add_option("--n,-n", n, "index n >= 0")->required();
  eval->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* table =
      app.add_subcommand("table", "print w_T(n) for a range of indices");
  add_base(table);
  table->add_option("--from", from, "first index (default 1)");
  table->add_option("--to", to, "last index")->required();
  table->add_option("--format", format, "text or json")->check(format_check);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list the hyper b-ary expansions of n, one per line");
  add_base(enumerate);
  enumerate->add_option("--n,-n", n, "value to expand")->required();
  enumerate->add_option("--format", format, "text or json")
      ->check(format_check);

  CLI::App* count = app.add_subcommand(
      "count", "number of hyper b-ary expansions of n - 1 (O(digits))");
  add_base(count);
  count->add_option("--n,-n", n_text,
                    "decimal index n, or @file containing it");
  count->add_option("--digits", digits_text,
                    "base-b digit string of n, or @file containing it");
  count->add_flag("--bench", bench, "report digits/second instead of the count");

  CLI::App* convergent = app.add_subcommand(
      "convergent", "continued-fraction convergent of depth l");
  add_base(convergent);
  convergent->add_option("--l,-l", l, "depth l >= 1")
      ->required()
      ->check(CLI::Range(1u, 1u << 20));
  convergent->add_option("--which", which, "odd or even")
      ->required()
      ->check(CLI::IsMember({"odd", "even"}));
  convergent->add_flag("--at-ones", at_ones,
                       "fold numerically at z = t = 1 (exact rational)");
  convergent->add_option("--format", format, "text or json")
      ->check(format_check);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the machine-checked identity suites");
  verify_cmd->add_option("--suite", suite, "ring, core, oracle, product, "
                                           "matrix, extremal, cf or all");
  verify_cmd->add_option("--base-max", options.base_max, "largest base")
      ->check(CLI::Range(2, 16));
  verify_cmd->add_option("--n-max", options.n_max, "index sweep bound");
  verify_cmd->add_option("--product-n-max", options.product_n_max,
                         "finite-product N bound");
  verify_cmd->add_option("--l-max", options.cf_l_max, "convergent depth bound");
  verify_cmd->add_option("--k-max", options.jacobsthal_k_max,
                         "Jacobsthal index bound");
  verify_cmd->add_option("--trials", options.trials,
                         "random trials per ring property");
  verify_cmd->add_option("--seed", options.seed, "random seed");
  verify_cmd->add_option("--format", format, "text or json")
      ->check(format_check);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      const SternPoly w = stern_poly(n, base);
      if (format == "json")
        out << poly_to_json(w).dump() << "\n";
      else
        out << w.text() << "\n";
      return 0;
    }

    if (*table) {
      if (from > to) throw std::invalid_argument("--from exceeds --to");
      SternEngine engine(base);
      if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint64_t i = from; i <= to; ++i)
          rows.push_back({{"n", i}, {"poly", poly_to_json(engine.poly(i))}});
        out << rows.dump(2) << "\n";
      } else {
        for (std::uint64_t i = from; i <= to; ++i)
          out << i << "\t" << engine.poly(i).text() << "\n";
      }
      return 0;
    }

    if (*enumerate) {
      const auto expansions = enumerate_expansions(n, base);
      if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const Expansion& h : expansions)
          rows.push_back(nlohmann::json{{"n", n}, {"mults", h.mults}});
        out << rows.dump(2) << "\n";
      } else {
        for (const Expansion& h : expansions)
          out << expansion_line(n, h) << "\n";
      }
      return 0;
    }

    if (*count) {
      if (n_text.empty() == digits_text.empty())
        throw std::invalid_argument("count needs exactly one of --n, --digits");
      DigitString digits;
      if (!n_text.empty())
        digits = to_digits(parse_decimal(read_argument_or_file(n_text)), base);
      else
        digits = digits_from_text(read_argument_or_file(digits_text), base);
      const auto start = std::chrono::steady_clock::now();
      const mpz_class result = stern_count_big(digits);
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      if (bench) {
        const double rate =
            elapsed.count() > 0 ? digits.size() / elapsed.count() : 0.0;
        out << "digits=" << digits.size() << " seconds=" << elapsed.count()
            << " digits_per_second=" << static_cast<std::uint64_t>(rate)
            << " count_decimal_digits="
            << mpz_sizeinbase(result.get_mpz_t(), 10) << "\n";
      } else {
        out << result.get_str() << "\n";
      }
      return 0;
    }

    if (*convergent) {
      const CFNode node = which == "odd" ? cf_odd(base, l) : cf_even(base, l);
      if (at_ones) {
        const mpq_class value = cf_fold_at_ones(node);
        if (format == "json")
          out << nlohmann::json{{"value", value.get_str()}}.dump() << "\n";
        else
          out << value.get_str() << "\n";
      } else {
        const RationalPair folded = cf_fold(node);
        if (format == "json")
          out << nlohmann::json{{"num", poly_to_json(folded.num())},
                                {"den", poly_to_json(folded.den())}}
                     .dump(2)
              << "\n";
        else
          out << "num: " << folded.num().text() << "\n"
              << "den: " << folded.den().text() << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      const auto& names = verify::suite_names();
      if (suite != "all" &&
          std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite: " + suite);
      return run_verify(suite, options, format, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace stern
