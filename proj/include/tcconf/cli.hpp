#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tcconf/certificate.hpp"
#include "tcconf/zcl.hpp"

namespace tcconf::cli {

enum class Command { Table, Certify, Basis, Lemmas, SearchZcl, Rp3 };
enum class OutputFormat { Json, Csv, Text };

/// Algebras accepted by search-zcl: F_2[t]/t^4, H*(Sigma_g^{x n}) and its
/// quotients A_g, B_g, E(g)_inf.
enum class SearchAlgebra { Rp3, Surface, AG, BG, EInfinity };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitGuard = 2;

struct RunConfig {
  Command command = Command::Table;
  std::vector<int> genus{2};
  std::vector<int> points{2};
  std::vector<int> stages{2};
  EvaluationRing ring = EvaluationRing::BG;
  OutputFormat format = OutputFormat::Json;
  bool allow_large = false;
  std::string out_path;
  SearchAlgebra algebra = SearchAlgebra::Rp3;
  SearchStrategy strategy = SearchStrategy::Greedy;
  /// 0 keeps the OpenMP default.
  int threads = 0;
};

/// Throws std::invalid_argument when the config breaks an invariant
/// (stages >= 2, points >= 1, genus >= 0 with genus 0 only for `table`).
void validate(const RunConfig& config);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns 0 when every requested verification passed, 1 on a verification
/// failure and 2 on a guard refusal or invalid config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, honours --out, and runs. Usage errors exit with 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tcconf::cli
