#include <algorithm>
#include <exception>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "report.hpp"
#include "tcconf/cli.hpp"
#include "tcconf/errors.hpp"
#include "tcconf/parallel.hpp"
#include "tcconf/text_format.hpp"

namespace tcconf::cli {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct Cell {
  int genus = 0;
  int points = 0;
  int stages = 0;
};

std::vector<Cell> cells(const RunConfig& config, bool with_stages) {
  std::vector<Cell> out;
  for (int g : sorted_unique(config.genus)) {
    for (int n : sorted_unique(config.points)) {
      if (!with_stages) {
        out.push_back({g, n, 0});
        continue;
      }
      for (int s : sorted_unique(config.stages)) out.push_back({g, n, s});
    }
  }
  return out;
}

std::string cell_name(const Cell& c) {
  std::string name = "(g=" + std::to_string(c.genus) + ", n=" + std::to_string(c.points);
  if (c.stages > 0) name += ", s=" + std::to_string(c.stages);
  return name + ")";
}

// Outcome of one grid cell; the worst code over all cells is the exit code.
struct CellOutcome {
  int code = kExitOk;
  std::string error;
};

/// Runs `body` on every index, concurrently when OpenMP is available, and
/// maps exceptions to exit codes. Results are written by index, so output
/// order never depends on completion order.
std::vector<CellOutcome> for_each_cell(std::size_t count, const std::function<bool(std::size_t)>& body) {
  std::vector<CellOutcome> outcomes(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    auto& o = outcomes[i];
    try {
      if (!body(static_cast<std::size_t>(i))) o.code = kExitVerification;
    } catch (const SizeGuardError& e) {
      o = {kExitGuard, e.what()};
    } catch (const VerificationError& e) {
      o = {kExitVerification, e.what()};
    } catch (const std::exception& e) {
      o = {kExitGuard, e.what()};
    }
  }
  return outcomes;
}

int report_outcomes(const std::vector<CellOutcome>& outcomes, const std::vector<Cell>& cs, std::ostream& err) {
  int code = kExitOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.code == kExitOk) continue;
    if (o.error.empty()) {
      err << "verification failed for " << cell_name(cs[i]) << "\n";
    } else {
      err << "error for " << cell_name(cs[i]) << ": " << o.error << "\n";
    }
    code = std::max(code, o.code);
  }
  return code;
}

CertificateOptions options_for(const RunConfig& config) {
  CertificateOptions opts;
  if (config.allow_large) {
    opts.allow_large = true;
    opts.max_basis = std::numeric_limits<std::size_t>::max();
  }
  return opts;
}

void warn_large(const RunConfig& config, std::ostream& err) {
  if (!config.allow_large) return;
  err << "warning: --allow-large disables the basis limit (" << max_basis_from_env()
      << " monomials) and the term limit (" << static_cast<long long>(max_terms_from_env()) << " terms)\n";
  for (int g : sorted_unique(config.genus)) {
    for (int n : sorted_unique(config.points)) {
      if (g < 1) continue;
      double size = 1;
      for (int i = 0; i < n; ++i) size *= 2.0 * g + 2;
      err << "warning:   basis size for (g=" << g << ", n=" << n << ") is " << static_cast<long long>(size) << "\n";
    }
  }
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- table

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto cs = cells(config, true);
  const auto opts = options_for(config);
  std::vector<TcRecord> recs(cs.size());
  auto outcomes = for_each_cell(cs.size(), [&](std::size_t i) {
    recs[i] = tc_value(cs[i].genus, cs[i].points, cs[i].stages, opts);
    return recs[i].genus == 0 || recs[i].certified;
  });

  if (config.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (outcomes[i].error.empty()) arr.push_back(record_json(recs[i]));
    }
    out << arr.dump(2) << "\n";
  } else if (config.format == OutputFormat::Csv) {
    out << "genus,n,s,upper,lower,tc,certified\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& r = recs[i];
      out << r.genus << ',' << r.points << ',' << r.stages << ',' << r.upper << ',' << r.lower << ',' << r.tc
          << ',' << bool_text(r.certified) << "\n";
    }
  } else {
    out << " g  n  s  upper  lower  TC_s  certified\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& r = recs[i];
      out << std::setw(2) << r.genus << std::setw(3) << r.points << std::setw(3) << r.stages << std::setw(7)
          << r.upper << std::setw(7) << r.lower << std::setw(6) << r.tc << "  "
          << (r.certified ? "yes" : (r.genus == 0 ? "no (closed form)" : "no")) << "\n";
    }
  }
  return report_outcomes(outcomes, cs, err);
}

// ---------------------------------------------------------------- certify

int run_certify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto cs = cells(config, true);
  const auto opts = options_for(config);
  std::vector<Json> docs(cs.size());
  std::vector<std::string> texts(cs.size());
  auto outcomes = for_each_cell(cs.size(), [&](std::size_t i) {
    const auto& c = cs[i];
    Certificate cert;
    std::optional<bool> agrees;
    if (config.ring == EvaluationRing::EInfinity) {
      RingAgreement ra = check_ring_agreement(c.genus, c.points, c.stages, opts);
      agrees = ra.agrees;
      cert = std::move(ra.e_ring);
    } else {
      cert = evaluate_certificate(c.genus, c.points, c.stages, EvaluationRing::BG, opts);
    }
    docs[i] = certificate_json(cert, agrees);
    if (config.format == OutputFormat::Text) {
      std::string t = "certificate " + cell_name(c) + " in " + std::string(to_string(cert.ring)) + "\n";
      for (const auto& f : cert.factors) {
        t += "  factor " + f.label + " [" + std::string(to_string(f.kind)) + "] x" + std::to_string(f.multiplicity) +
             ", " + std::to_string(f.realized.size()) + " terms\n";
      }
      t += "  factor count " + std::to_string(cert.factor_count) + "\n";
      t += "  result " + to_text(cert.result) + "\n";
      t += std::string("  nonzero ") + bool_text(cert.nonzero) + "\n";
      if (cert.pattern) t += std::string("  pattern match ") + bool_text(cert.pattern->matches) + "\n";
      if (agrees) t += std::string("  agrees with B_G ") + bool_text(*agrees) + "\n";
      texts[i] = std::move(t);
    }
    return certificate_verified(cert, agrees);
  });

  if (config.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (outcomes[i].error.empty()) arr.push_back(docs[i]);
    }
    out << arr.dump(2) << "\n";
  } else if (config.format == OutputFormat::Csv) {
    out << "genus,n,s,ring,factor_count,nonzero,support_size,verified\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& d = docs[i];
      out << d["genus"].get<int>() << ',' << d["n"].get<int>() << ',' << d["s"].get<int>() << ','
          << d["ring"].get<std::string>() << ',' << d["factor_count"].get<int>() << ','
          << bool_text(d["nonzero"].get<bool>()) << ',' << d["support_size"].get<std::size_t>() << ','
          << bool_text(d["verified"].get<bool>()) << "\n";
    }
  } else {
    for (const auto& t : texts) out << t;
  }
  return report_outcomes(outcomes, cs, err);
}

// ---------------------------------------------------------------- basis

Json named_words(const std::vector<NamedElement>& elements) {
  Json arr = Json::array();
  for (const auto& e : elements) arr.push_back(e.name);
  return arr;
}

int run_basis(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto cs = cells(config, false);
  std::vector<Json> docs(cs.size());
  auto outcomes = for_each_cell(cs.size(), [&](std::size_t i) {
    const auto& c = cs[i];
    SurfacePower model(c.genus, c.points, options_for(config).max_basis);
    const auto b1 = model.basis_beta1();
    const auto b2 = model.basis_beta2();
    const auto b2p = model.basis_beta2_prime();
    Json d = {{"genus", c.genus},
              {"n", c.points},
              {"beta1", {{"count", b1.size()}, {"words", named_words(b1)}}},
              {"beta2", {{"count", b2.size()}, {"formula", beta2_count(c.genus, c.points)}, {"words", named_words(b2)}}},
              {"beta2_prime", {{"count", b2p.size()}, {"words", named_words(b2p)}}}};
    bool ok = true;
    if (c.genus >= 2) {
      const QuotientAlgebra a = a_quotient(model);
      std::vector<Element> v2, v2p;
      for (const auto& e : b2) v2.push_back(e.value);
      for (const auto& e : b2p) v2p.push_back(e.value);
      const std::size_t dim = a.dimension();
      const std::size_t r2 = rank_in(a, v2);
      const std::size_t r2p = rank_in(a, v2p);
      ok = b2.size() == dim && b2p.size() == dim && r2 == dim && r2p == dim &&
           static_cast<long long>(dim) == beta2_count(c.genus, c.points);
      d["dim_A"] = dim;
      d["rank_beta2"] = r2;
      d["rank_beta2_prime"] = r2p;
      d["poincare_A"] = a.poincare_polynomial();
      const QuotientAlgebra b = b_quotient(model);
      d["dim_B"] = b.dimension();
      d["poincare_B"] = b.poincare_polynomial();
      d["basis_theorem"] = ok;
    } else {
      d["basis_theorem"] = nullptr;
    }
    const QuotientAlgebra e = e_infinity(model);
    d["dim_E_inf"] = e.dimension();
    d["poincare_E_inf"] = e.poincare_polynomial();
    docs[i] = std::move(d);
    return ok;
  });

  if (config.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (outcomes[i].error.empty()) arr.push_back(docs[i]);
    }
    out << arr.dump(2) << "\n";
  } else if (config.format == OutputFormat::Csv) {
    out << "genus,n,beta1,beta2,beta2_prime,dim_A,dim_B,dim_E_inf,basis_theorem\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& d = docs[i];
      auto opt = [&](const char* key) { return d.contains(key) ? d[key].dump() : std::string(); };
      out << d["genus"] << ',' << d["n"] << ',' << d["beta1"]["count"] << ',' << d["beta2"]["count"] << ','
          << d["beta2_prime"]["count"] << ',' << opt("dim_A") << ',' << opt("dim_B") << ',' << d["dim_E_inf"] << ','
          << (d["basis_theorem"].is_null() ? "" : d["basis_theorem"].dump()) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& d = docs[i];
      out << "basis " << cell_name(cs[i]) << "\n";
      for (const char* key : {"beta1", "beta2", "beta2_prime"}) {
        out << "  " << key << " (" << d[key]["count"] << "):";
        for (const auto& w : d[key]["words"]) out << ' ' << w.get<std::string>();
        out << "\n";
      }
      if (d.contains("dim_A")) out << "  dim A_g " << d["dim_A"] << ", dim B_g " << d["dim_B"] << "\n";
      out << "  dim E_inf " << d["dim_E_inf"] << "\n";
    }
  }
  return report_outcomes(outcomes, cs, err);
}

// ---------------------------------------------------------------- lemmas

int run_lemmas(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto cs = cells(config, false);
  std::vector<Json> docs(cs.size());
  auto outcomes = for_each_cell(cs.size(), [&](std::size_t i) {
    const auto& c = cs[i];
    Json checks = Json::array();
    bool ok = true;
    if (c.genus >= 2 && c.points >= 3) {
      const LemmaReport rep = verify_lemma_identities(c.genus, c.points);
      for (const auto& chk : rep.checks) checks.push_back(identity_json(chk));
      ok = rep.passed();
    }
    const IdentityCheck key = verify_key_identity(c.genus, c.points);
    checks.push_back(identity_json(key));
    ok = ok && key.passed();
    docs[i] = {{"genus", c.genus}, {"n", c.points}, {"checks", checks}, {"passed", ok}};
    return ok;
  });

  if (config.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (outcomes[i].error.empty()) arr.push_back(docs[i]);
    }
    out << arr.dump(2) << "\n";
  } else {
    const bool csv = config.format == OutputFormat::Csv;
    if (csv) out << "genus,n,name,cases,failures,passed\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& d = docs[i];
      if (!csv) out << "lemmas " << cell_name(cs[i]) << "\n";
      for (const auto& chk : d["checks"]) {
        if (csv) {
          out << d["genus"] << ',' << d["n"] << ',' << chk["name"].get<std::string>() << ',' << chk["cases"] << ','
              << chk["failures"] << ',' << chk["passed"] << "\n";
        } else {
          out << "  " << (chk["passed"].get<bool>() ? "PASS " : "FAIL ") << std::left << std::setw(8)
              << chk["name"].get<std::string>() << std::right << std::setw(5) << chk["cases"].get<std::size_t>()
              << " cases  " << chk["statement"].get<std::string>() << "\n";
          if (!chk["passed"].get<bool>()) out << "       " << chk["detail"].get<std::string>() << "\n";
        }
      }
    }
  }
  return report_outcomes(outcomes, cs, err);
}

// ---------------------------------------------------------------- search-zcl

std::string_view algebra_name(SearchAlgebra a) {
  switch (a) {
    case SearchAlgebra::Rp3:
      return "rp3";
    case SearchAlgebra::Surface:
      return "surface";
    case SearchAlgebra::AG:
      return "a";
    case SearchAlgebra::BG:
      return "b";
    case SearchAlgebra::EInfinity:
      return "e";
  }
  return "?";
}

QuotientAlgebra search_algebra(const RunConfig& config, const Cell& c) {
  if (config.algebra == SearchAlgebra::Rp3) {
    auto alg = ProductAlgebra::create(LetterAlgebra::truncated_polynomial(Field::GF2, 1, 3), 1);
    return trivial_quotient(alg);
  }
  SurfacePower model(c.genus, c.points, options_for(config).max_basis);
  switch (config.algebra) {
    case SearchAlgebra::AG:
      return a_quotient(model);
    case SearchAlgebra::BG:
      return b_quotient(model);
    case SearchAlgebra::EInfinity:
      return e_infinity(model);
    default:
      return trivial_quotient(model.algebra());
  }
}

int run_search(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Cell> cs;
  if (config.algebra == SearchAlgebra::Rp3) {
    for (int s : sorted_unique(config.stages)) cs.push_back({0, 1, s});
  } else {
    cs = cells(config, true);
  }
  std::vector<Json> docs(cs.size());
  auto outcomes = for_each_cell(cs.size(), [&](std::size_t i) {
    const auto& c = cs[i];
    const QuotientAlgebra q = search_algebra(config, c);
    const ZclResult r = zcl_search(q, c.stages, config.strategy);
    Json d = {{"algebra", std::string(algebra_name(config.algebra))}};
    if (config.algebra != SearchAlgebra::Rp3) {
      d["genus"] = c.genus;
      d["n"] = c.points;
    }
    d["dimension"] = q.dimension();
    const Json found = zcl_json(r);
    for (const auto& [k, v] : found.items()) d[k] = v;
    docs[i] = std::move(d);
    return true;
  });

  if (config.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (outcomes[i].error.empty()) arr.push_back(docs[i]);
    }
    out << arr.dump(2) << "\n";
  } else {
    const bool csv = config.format == OutputFormat::Csv;
    if (csv) out << "algebra,genus,n,s,strategy,dimension,bound\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& d = docs[i];
      const std::string g = d.contains("genus") ? d["genus"].dump() : "";
      const std::string n = d.contains("n") ? d["n"].dump() : "";
      if (csv) {
        out << d["algebra"].get<std::string>() << ',' << g << ',' << n << ',' << d["s"] << ','
            << d["strategy"].get<std::string>() << ',' << d["dimension"] << ',' << d["bound"] << "\n";
      } else {
        out << "zcl_" << d["s"] << "(" << d["algebra"].get<std::string>();
        if (!g.empty()) out << ", g=" << g << ", n=" << n;
        out << ") >= " << d["bound"] << " [" << d["strategy"].get<std::string>() << ", "
            << d["witness"].size() << " factors]\n";
      }
    }
  }
  return report_outcomes(outcomes, cs, err);
}

// ---------------------------------------------------------------- rp3

int run_rp3(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Cell> cs;
  for (int s : sorted_unique(config.stages)) cs.push_back({0, 1, s});
  std::vector<Json> docs(cs.size());
  std::vector<std::string> texts(cs.size());
  auto outcomes = for_each_cell(cs.size(), [&](std::size_t i) {
    const Rp3Report r = rp3_report(cs[i].stages);
    const bool ok = r.nonzero && r.bound == 3 * (r.stages - 1);
    docs[i] = {{"s", r.stages},
               {"bound", r.bound},
               {"expected", 3 * (r.stages - 1)},
               {"nonzero", r.nonzero},
               {"product", tensor_json(r.product)},
               {"verified", ok}};
    texts[i] = to_text(r.product);
    return ok;
  });

  if (config.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (outcomes[i].error.empty()) arr.push_back(docs[i]);
    }
    out << arr.dump(2) << "\n";
  } else {
    const bool csv = config.format == OutputFormat::Csv;
    if (csv) out << "s,bound,expected,nonzero,verified\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!outcomes[i].error.empty()) continue;
      const auto& d = docs[i];
      if (csv) {
        out << d["s"] << ',' << d["bound"] << ',' << d["expected"] << ',' << d["nonzero"] << ',' << d["verified"]
            << "\n";
      } else {
        out << "zcl_" << d["s"] << "(RP3; F2) = " << d["bound"] << " (expected " << d["expected"] << ")\n  "
            << texts[i] << "\n";
      }
    }
  }
  return report_outcomes(outcomes, cs, err);
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.genus.empty() || config.points.empty() || config.stages.empty()) {
    throw std::invalid_argument("--genus, --points and --stages need at least one value");
  }
  for (int s : config.stages) {
    if (s < 2) throw std::invalid_argument("stages must be >= 2, got " + std::to_string(s));
  }
  for (int n : config.points) {
    if (n < 1) throw std::invalid_argument("points must be >= 1, got " + std::to_string(n));
    if (config.command == Command::Lemmas && n < 2) {
      throw std::invalid_argument("lemmas need points >= 2, got " + std::to_string(n));
    }
  }
  const bool uses_genus = config.command != Command::Rp3 &&
                          !(config.command == Command::SearchZcl && config.algebra == SearchAlgebra::Rp3);
  for (int g : config.genus) {
    if (g < 0) throw std::invalid_argument("genus must be >= 0, got " + std::to_string(g));
    if (g == 0 && uses_genus && config.command != Command::Table) {
      throw std::invalid_argument("genus 0 is only available for `table`");
    }
  }
  if (config.threads < 0) throw std::invalid_argument("threads must be >= 0");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  }
  if (config.threads > 0) omp_set_num_threads(config.threads);
  warn_large(config, err);
  switch (config.command) {
    case Command::Table:
      return run_table(config, out, err);
    case Command::Certify:
      return run_certify(config, out, err);
    case Command::Basis:
      return run_basis(config, out, err);
    case Command::Lemmas:
      return run_lemmas(config, out, err);
    case Command::SearchZcl:
      return run_search(config, out, err);
    case Command::Rp3:
      return run_rp3(config, out, err);
  }
  return kExitGuard;
}

}  // namespace tcconf::cli
