// Command-line front end. Exit codes: 0 pass, 1 verification failure,
// 2 usage or input error.

#include <eigspace/constructors.hpp>
#include <eigspace/degeneration.hpp>
#include <eigspace/error.hpp>
#include <eigspace/harness.hpp>
#include <eigspace/json_io.hpp>
#include <eigspace/spectral.hpp>
#include <eigspace/subspace.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace eigspace;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  bool timing = false;
};

void emit(const Common& common, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (common.out.empty() || common.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(common.out);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + common.out);
  f << text;
}

int emit_report(const Common& common, const VerificationReport& rep) {
  emit(common, rep.to_json(common.timing));
  return rep.passed() ? kPass : kFail;
}

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad weight '" + item + "'");
    }
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tools for matrix spaces with few distinct eigenvalues"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "Base seed for all sampling")->capture_default_str();
  app.add_option("--out", common.out, "Output JSON path (default stdout)");
  app.add_flag("--timing", common.timing, "Include elapsed time in reports");

  std::function<int()> action;

  std::size_t n = 0, k = 0, p = 0, samples = 100, trials = 1000, max_n = 6;

  auto* verify = app.add_subcommand("verify-extremal", "Check the extremal space for (n, k, p)");
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k)->required();
  verify->add_option("--p", p)->required();
  verify->add_option("--samples", samples, "Random members to test")->capture_default_str();
  verify->callback([&] { action = [&] { return emit_report(common, verify_extremal({n, k, p}, samples, common.seed)); }; });

  bool include_l_zero = false;
  auto* bound = app.add_subcommand("bound-enum", "Enumerate dimension configurations for (n, k)");
  bound->add_option("--n", n)->required();
  bound->add_option("--k", k)->required();
  bound->add_flag("--include-l-zero", include_l_zero, "Also enumerate configurations with l = 0");
  bound->callback([&] {
    action = [&] {
      const auto e = enumerate_configs(n, k, include_l_zero);
      const std::size_t formula = max_dimension(n, k);
      Json arg = Json::array();
      for (const auto& c : e.argmax) arg.push_back(to_json(c));
      emit(common, Json{{"n", n}, {"k", k}, {"max", e.max_value}, {"formula", formula}, {"argmax", arg}, {"visited", e.visited}});
      return e.max_value == formula ? kPass : kFail;
    };
  });

  std::string weights_text, space_path;
  bool negate = false;
  auto* degen = app.add_subcommand("degenerate", "Limit of a space under a one-parameter subgroup");
  degen->add_option("--weights", weights_text, "Comma-separated integer weights")->required();
  degen->add_option("--space", space_path, "Subspace JSON file")->required();
  degen->add_flag("--neg", negate, "Use the inverse subgroup");
  degen->callback([&] {
    action = [&] {
      const MatrixSubspace v = subspace_from_json(read_json_file(space_path));
      WeightVector w{parse_weights(weights_text)};
      if (negate) w = w.negated();
      const MatrixSubspace lim = degenerate(v, w);
      emit(common, Json{{"weights", w.weights}, {"limit", to_json(lim)}, {"weight_spaces", to_json(weight_decomposition(lim, w))}});
      return kPass;
    };
  });

  std::string which;
  std::size_t id_trials = 25;
  auto* ids = app.add_subcommand("identities", "Check a closed-form identity at random rational points");
  ids->add_option("--check", which)->required()->check(CLI::IsMember({"charpoly", "twozeros", "discriminant"}));
  ids->add_option("--trials", id_trials)->capture_default_str();
  ids->callback([&] {
    action = [&] {
      VerificationReport rep;
      rep.target = "identity " + which;
      rep.seed = common.seed;
      if (which == "charpoly") rep.checks.push_back(check_char_poly_identity(7, id_trials, common.seed));
      if (which == "twozeros") rep.checks.push_back(check_resultant_identity(7, id_trials, common.seed));
      if (which == "discriminant") rep.checks.push_back(check_discriminant_identity(id_trials, common.seed));
      return emit_report(common, rep);
    };
  });

  auto* probe = app.add_subcommand("probe-maximality", "Search for witnesses that no matrix unit can be added");
  probe->add_option("--n", n)->required();
  probe->add_option("--k", k)->required();
  probe->add_option("--p", p)->required();
  probe->add_option("--trials", trials)->capture_default_str();
  probe->callback([&] { action = [&] { return emit_report(common, maximality_probe({n, k, p}, trials, common.seed)); }; });

  std::string matrix_path;
  auto* spectra = app.add_subcommand("spectra", "Spectral profile of a matrix");
  spectra->add_option("--matrix", matrix_path, "QMatrix JSON file")->required();
  spectra->callback([&] {
    action = [&] {
      emit(common, to_json(spectral_profile(matrix_from_json(read_json_file(matrix_path)))));
      return kPass;
    };
  });

  auto* suite = app.add_subcommand("run-suite", "Run every verification section for n <= max-n");
  suite->add_option("--max-n", max_n)->capture_default_str();
  suite->callback([&] { action = [&] { return emit_report(common, run_full_suite(max_n, common.seed)); }; });

  bool swapped = false;
  auto* make = app.add_subcommand("make-space", "Write the extremal space for (n, k, p)");
  make->add_option("--n", n)->required();
  make->add_option("--k", k)->required();
  make->add_option("--p", p)->required();
  make->add_flag("--swapped", swapped, "Block-swapped form");
  make->callback([&] {
    action = [&] {
      const ExtremalParams params{n, k, p};
      emit(common, to_json(swapped ? swapped_extremal_basis(params) : extremal_basis(params)));
      return kPass;
    };
  });

  std::string op, a_path, b_path;
  auto* space_op = app.add_subcommand("space-op", "Subspace operations");
  space_op->add_option("--op", op)->required()->check(CLI::IsMember({"sum", "intersect", "conjugate", "borel-check"}));
  space_op->add_option("--a", a_path, "First subspace JSON file")->required();
  space_op->add_option("--b", b_path, "Second subspace JSON file (sum, intersect)");
  space_op->add_option("--matrix", matrix_path, "Conjugating matrix JSON file (conjugate)");
  space_op->callback([&] {
    action = [&]() -> int {
      const MatrixSubspace a = subspace_from_json(read_json_file(a_path));
      if (op == "sum" || op == "intersect") {
        if (b_path.empty()) throw CLI::RequiredError("--b");
        const auto [s, i] = sum_and_intersection(a, subspace_from_json(read_json_file(b_path)));
        emit(common, to_json(op == "sum" ? s : i));
        return kPass;
      }
      if (op == "conjugate") {
        if (matrix_path.empty()) throw CLI::RequiredError("--matrix");
        emit(common, to_json(conjugate(a, matrix_from_json(read_json_file(matrix_path)))));
        return kPass;
      }
      const bool invariant = is_borel_invariant(a);
      Json violations = Json::array();
      if (invariant) {
        for (const auto& x : check_eij_implications(a))
          violations.push_back(Json{{"rule", to_string(x.rule)}, {"i", x.i}, {"j", x.j}, {"basis_index", x.basis_index}});
      }
      emit(common, Json{{"borel_invariant", invariant}, {"eij_violations", violations}});
      return invariant && violations.empty() ? kPass : kFail;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    return action();
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
}
