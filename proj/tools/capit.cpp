#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "capitulation/arithmetic.hpp"
#include "capitulation/errors.hpp"
#include "capitulation/presentation.hpp"
#include "capitulation/report.hpp"
#include "capitulation/verify.hpp"

namespace {

using namespace capitulation;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3, kHypothesis = 4 };

void print(const nlohmann::json& doc, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_analyze(const std::string& text, const std::string& name, const std::vector<int>& params,
                std::size_t max_cosets, bool as_json) {
  Presentation pres;
  if (!name.empty()) {
    if (!text.empty()) throw InvalidArgument("give either a presentation or --catalog, not both");
    pres = catalog(name, params);
  } else if (text == "-") {
    pres = parse(std::string(std::istreambuf_iterator<char>(std::cin), {}));
  } else if (!text.empty()) {
    pres = parse(text);
  } else {
    throw InvalidArgument("analyze needs a presentation, '-' or --catalog");
  }
  const auto a = report::analyze(pres, max_cosets);
  print(a.doc, as_json, report::analysis_text(a.doc));
  return a.hypothesis_met ? kOk : kHypothesis;
}

int cmd_verify(int max_n, const std::vector<std::string>& families, bool as_json) {
  const auto outcomes = verify::run(max_n, families);
  std::size_t failed = 0;
  for (const auto& o : outcomes) failed += !o.pass;
  if (as_json) {
    nlohmann::json doc{{"max_n", max_n},
                       {"outcomes", report::outcomes_json(outcomes)},
                       {"passed", outcomes.size() - failed},
                       {"failed", failed}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) std::cout << verify::format(o) << "\n";
    std::cout << "summary: " << outcomes.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capitulation workbench for 2-groups with abelianization (2,4)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  auto* analyze = app.add_subcommand("analyze", "Analyze a presentation or catalog group");
  std::string text, name;
  std::vector<int> params;
  std::size_t max_cosets = kDefaultMaxCosets;
  analyze->add_option("presentation", text, "Presentation text, or - for stdin");
  analyze->add_option("--catalog", name, "Catalog family");
  analyze->add_option("--params", params, "Family parameters, comma separated")->delimiter(',');
  analyze->add_option("--max-cosets", max_cosets, "Coset table limit");
  analyze->add_flag("--json", as_json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks over the catalog");
  int max_n = verify::kMaxMaxN;
  std::vector<std::string> families;
  verify_cmd->add_option("--max-n", max_n, "Largest order exponent, 4..9");
  verify_cmd->add_option("--families", families, "Families, comma separated")->delimiter(',');
  verify_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* predict = app.add_subcommand("predict", "Residue-symbol predictors");
  predict->require_subcommand(1);
  auto* real = predict->add_subcommand("real", "k = Q(sqrt(p1 p2 p3))");
  std::vector<std::uint64_t> primes;
  real->add_option("primes", primes, "Three primes = 1 mod 4")->required()->expected(3);
  real->add_flag("--json", as_json, "Emit JSON");
  auto* biq = predict->add_subcommand("biq", "k = Q(sqrt(2p), i)");
  std::uint64_t p = 0;
  int n = 0;
  biq->add_option("p", p, "Prime = 1 mod 8")->required();
  biq->add_option("--n", n, "2-valuation of the class number of Q(sqrt(-p))")->required();
  biq->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(text, name, params, max_cosets, as_json);
    if (*verify_cmd) return cmd_verify(max_n, families, as_json);
    if (*real) {
      const auto doc = report::prediction_json(arith::predict_real(primes[0], primes[1], primes[2]),
                                               "real", primes);
      print(doc, as_json, report::prediction_text(doc));
      return kOk;
    }
    if (*biq) {
      const auto doc = report::prediction_json(arith::predict_biquadratic(p, n), "biq",
                                               {p, static_cast<std::uint64_t>(n)});
      print(doc, as_json, report::prediction_text(doc));
      return kOk;
    }
  } catch (const CosetLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const OrderTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UndefinedSymbol& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
