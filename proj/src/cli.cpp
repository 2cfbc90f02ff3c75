// Copyright 2026 The gmcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gmcq/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gmcq/evalcode.hpp"
#include "gmcq/gf.hpp"
#include "gmcq/oracle.hpp"
#include "gmcq/presets.hpp"
#include "gmcq/quantum.hpp"
#include "gmcq/selforth.hpp"
#include "json.hpp"

namespace gmcq::cli {
namespace {

using quantum::QuantumRecord;

struct ConfigFlags {
  long q = 0;
  long lambda = 0;
  long tau = 0;
  long rho = 0;
  long sigma = 0;
  long ny = 0;

  CodeConfig config() const { return CodeConfig{q, lambda, tau, rho, sigma, ny, std::nullopt}; }
};

void add_config_flags(CLI::App* app, ConfigFlags& f) {
  app->add_option("--q", f.q, "Size of the base field GF(q)")->required();
  app->add_option("--lambda", f.lambda, "Divisor of q-1")->required();
  app->add_option("--tau", f.tau, "Divisor of q+1 coprime to lambda")->required();
  app->add_option("--rho", f.rho, "Divisor of q+1")->required();
  app->add_option("--sigma", f.sigma, "Number of norm fibres, 2 <= sigma <= rho/gcd(lambda*tau, rho)")->required();
  app->add_option("--ny", f.ny, "Number of Y points, 2 <= ny <= q")->required();
}

enum class Format { kMd, kCsv, kJson };

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  return Format::kMd;
}

struct Row {
  QuantumRecord rec;
  bool verified = false;
  std::string comment;
};

std::string code_string(const QuantumRecord& r) {
  std::ostringstream os;
  os << "[[" << r.n << ',' << r.k << ',' << r.d << "]]_" << r.q;
  return os.str();
}

std::string witness_string(const selforth::FailurePoint& w) {
  std::ostringstream os;
  os << "X^" << w.first.e1 << " Y^" << w.first.e2 << ", X^" << w.second.e1 << " Y^" << w.second.e2;
  return os.str();
}

void emit(std::ostream& out, const std::vector<Row>& rows, Format fmt) {
  switch (fmt) {
    case Format::kJson: {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["records"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        const auto& r = row.rec;
        const auto& c = r.config;
        nlohmann::ordered_json j;
        j["q"] = c.q;
        j["lambda"] = c.lambda;
        j["tau"] = c.tau;
        j["rho"] = c.rho;
        j["sigma"] = c.sigma;
        j["ny"] = c.ny;
        j["t"] = c.t ? nlohmann::ordered_json(*c.t) : nlohmann::ordered_json(nullptr);
        j["n"] = r.n;
        j["k"] = r.k;
        j["d"] = r.d;
        j["defect"] = r.defect;
        j["beats_qgv"] = r.beats_qgv;
        j["self_orthogonal_verified"] = row.verified;
        doc["records"].push_back(std::move(j));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "q,lambda,tau,rho,sigma,ny,t,n,k,d,defect,beats_qgv,self_orthogonal_verified\n";
      for (const auto& row : rows) {
        const auto& r = row.rec;
        const auto& c = r.config;
        out << c.q << ',' << c.lambda << ',' << c.tau << ',' << c.rho << ',' << c.sigma << ',' << c.ny << ','
            << (c.t ? std::to_string(*c.t) : "") << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.defect << ','
            << (r.beats_qgv ? "true" : "false") << ',' << (row.verified ? "true" : "false") << '\n';
      }
      break;
    case Format::kMd:
      out << "| q,lambda,tau,rho,sigma,ny | Code | Beats QGV | Defect | Self-orthogonal verified | Comment |\n";
      out << "|---|---|---|---|---|---|\n";
      for (const auto& row : rows) {
        const auto& r = row.rec;
        const auto& c = r.config;
        out << "| " << c.q << ',' << c.lambda << ',' << c.tau << ',' << c.rho << ',' << c.sigma << ',' << c.ny << " | "
            << code_string(r) << " | " << (r.beats_qgv ? "Yes" : "No") << " | " << r.defect << " | "
            << (row.verified ? "yes" : "no") << " | " << row.comment << " |\n";
      }
      break;
  }
}

/// Builds generator matrices on demand, sharing field and evaluation data across distances.
class Verifier {
 public:
  bool self_orthogonal(const CodeConfig& cfg, long t) {
    const gf::FieldCtx& ctx = field(cfg.q);
    CodeConfig base = cfg;
    base.t.reset();
    const std::string key = to_string(base);
    auto it = evals_.find(key);
    if (it == evals_.end()) it = evals_.emplace(key, evalcode::build_evaluation_data(ctx, base)).first;
    return oracle::is_hermitian_self_orthogonal(ctx, evalcode::build_gen_matrix(ctx, it->second, t));
  }

 private:
  const gf::FieldCtx& field(long q) {
    auto it = fields_.find(q);
    if (it == fields_.end()) {
      it = fields_.emplace(q, std::make_unique<gf::FieldCtx>(gf::FieldCtx::for_q(static_cast<std::uint64_t>(q)))).first;
    }
    return *it->second;
  }

  std::map<long, std::unique_ptr<gf::FieldCtx>> fields_;
  std::map<std::string, evalcode::EvaluationData> evals_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Built {
  std::unique_ptr<gf::FieldCtx> ctx;
  evalcode::GenMatrix g;
};

Built build_matrix(const CodeConfig& cfg, const std::vector<std::uint32_t>& py_codes) {
  require_admissible(cfg);
  const long t = *cfg.t;
  if (t < 2) throw AdmissibilityError("t must be at least 2 (got " + std::to_string(t) + ")");
  if (t > cfg.n_x() + 1) {
    throw AdmissibilityError("t must be at most n_X + 1 = " + std::to_string(cfg.n_x() + 1));
  }
  auto ctx = std::make_unique<gf::FieldCtx>(gf::FieldCtx::for_q(static_cast<std::uint64_t>(cfg.q)));
  std::vector<gf::Felt> ys;
  for (auto code : py_codes) ys.push_back(ctx->element(code));
  const auto ev = evalcode::build_evaluation_data(*ctx, cfg, ys);
  auto g = evalcode::build_gen_matrix(*ctx, ev, t);
  return Built{std::move(ctx), std::move(g)};
}

void print_config(std::ostream& out, const CodeConfig& cfg) {
  out << "config: q=" << cfg.q << " lambda=" << cfg.lambda << " tau=" << cfg.tau << " rho=" << cfg.rho
      << " sigma=" << cfg.sigma << " ny=" << cfg.ny << '\n';
}

int cmd_construct(CodeConfig cfg, const std::vector<std::uint32_t>& py, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Built b = build_matrix(cfg, py);
  const long t = *cfg.t;
  const long delta = quantum::size_delta(t, cfg.ny);
  const long r = evalcode::rank(*b.ctx, b.g.rows);
  const auto ts = selforth::tstar(cfg);

  print_config(out, cfg);
  out << "t: " << t << '\n';
  out << "n: " << cfg.n() << '\n';
  out << "delta_size: " << delta << '\n';
  out << "rank: " << r << '\n';
  out << "k: " << cfg.n() - 2 * delta << '\n';
  out << "footprint_bound: " << evalcode::footprint_bound(b.g.monomials, cfg.n_x(), cfg.ny) << '\n';
  if (ts.status == selforth::TstarStatus::kClosedForm) {
    out << "tstar: " << ts.t_star << '\n';
    out << "self_orthogonality: " << (t <= ts.t_star ? "guaranteed (t <= T*)" : "oracle-needed (t > T*)") << '\n';
  } else {
    out << "tstar: unavailable\n";
    out << "self_orthogonality: oracle-needed (closed form does not apply)\n";
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kUsage;
    }
    evalcode::write_matrix_csv(f, b.g);
    out << "matrix: " << out_path << '\n';
  }
  err << "construct: " << std::fixed << std::setprecision(3) << seconds_since(start) << " s\n";
  return r == delta ? kOk : kCheckFailed;
}

int cmd_verify(CodeConfig cfg, const std::vector<std::uint32_t>& py, long dual_limit, std::ostream& out,
               std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Built b = build_matrix(cfg, py);
  const bool so = oracle::is_hermitian_self_orthogonal(*b.ctx, b.g);
  print_config(out, cfg);
  out << "t: " << *cfg.t << '\n';
  out << "self_orthogonal: " << (so ? "true" : "false") << '\n';
  int code = so ? kOk : kCheckFailed;
  if (dual_limit > 0) {
    const auto budgets = oracle::Budgets::from_env();
    const auto dd = oracle::dual_min_distance(*b.ctx, b.g, dual_limit, budgets.rank_tests);
    switch (dd.status) {
      case oracle::SearchStatus::kExact:
        out << "dual_distance: " << dd.value << '\n';
        break;
      case oracle::SearchStatus::kAtLeast:
        out << "dual_distance: >= " << dd.value << '\n';
        break;
      case oracle::SearchStatus::kBudgetExceeded:
        out << "dual_distance: budget exceeded after " << dd.work << " rank tests\n";
        if (code == kOk) code = kBudget;
        break;
    }
  }
  err << "verify: " << std::fixed << std::setprecision(3) << seconds_since(start) << " s\n";
  return code;
}

int cmd_tstar(const CodeConfig& cfg, bool with_oracle, std::ostream& out, std::ostream& err) {
  require_admissible(cfg);
  const auto ts = selforth::tstar(cfg);
  const auto& row = ts.row;
  print_config(out, cfg);
  out << "case: " << row.case_id << " (L=" << row.L << ", T1=" << row.T1 << ", T2=" << row.T2 << ")\n";
  if (row.exceptional) out << "exceptional: some congruence pairs lie off the lattice and are orthogonal\n";
  const bool closed = ts.status == selforth::TstarStatus::kClosedForm;
  if (closed) {
    out << "tstar: " << ts.t_star << '\n';
    out << "witness: " << witness_string(ts.witness) << '\n';
    out << "branch: " << selforth::to_string(ts.branch) << " (k1=" << ts.k1 << ", k2=" << ts.k2 << ", k3=" << ts.k3
        << ", j=" << ts.j << ")\n";
  } else {
    out << "tstar: unavailable (ny guards do not hold)\n";
  }
  if (!with_oracle) return kOk;
  const long bf = oracle::tstar_bruteforce(cfg.lambda, cfg.tau, cfg.rho, cfg.sigma, cfg.ny);
  out << "tstar_oracle: " << bf << '\n';
  if (closed && bf != ts.t_star) {
    err << "mismatch: closed form " << ts.t_star << ", oracle " << bf << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_family(const std::string& name, long q, Format fmt, bool verify, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto fam = quantum::parse_family(name);
  if (!fam) throw AdmissibilityError("unknown family " + name);
  Verifier verifier;
  std::vector<Row> rows;
  int code = kOk;
  for (auto& rec : quantum::family(*fam, q)) {
    Row row{rec, false, {}};
    if (verify) {
      row.verified = verifier.self_orthogonal(rec.config, rec.d);
      if (!row.verified) {
        err << "mismatch: " << code_string(rec) << " is not Hermitian self-orthogonal\n";
        code = kCheckFailed;
      }
    }
    rows.push_back(std::move(row));
  }
  emit(out, rows, fmt);
  err << name << ": " << rows.size() << " records, oracle " << (verify ? "ran" : "skipped") << ", " << std::fixed
      << std::setprecision(3) << seconds_since(start) << " s\n";
  return code;
}

int cmd_qgv(long q, long n, long k, long d, std::ostream& out) {
  out << "code: [[" << n << ',' << k << ',' << d << "]]_" << q << '\n';
  out << "beats: " << (quantum::qgv_beats(q, n, k, d) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_table(const std::string& name, Format fmt, bool skip_oracle, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto p = presets::preset(name);
  if (!p) throw AdmissibilityError("unknown preset " + name);
  Verifier verifier;
  std::vector<Row> rows;
  long mismatches = 0;
  for (const auto& published : p->rows) {
    const CodeConfig& cfg = published.config;
    const long d = *cfg.t;
    Row row;
    row.comment = published.comment;
    row.verified = !skip_oracle && verifier.self_orthogonal(cfg, d);
    try {
      row.rec = quantum::stabilizer_params(cfg, d, row.verified);
    } catch (const std::domain_error& e) {
      row.rec = quantum::stabilizer_params(cfg, d, true);
      err << "uncertified: " << code_string(row.rec) << ": " << e.what() << '\n';
      ++mismatches;
    }
    if (!skip_oracle && !row.verified) {
      err << "mismatch: " << code_string(row.rec) << " is not Hermitian self-orthogonal\n";
      ++mismatches;
    }
    if (row.rec.n != published.n || row.rec.k != published.k || row.rec.beats_qgv != published.beats_qgv) {
      err << "mismatch: computed " << code_string(row.rec) << (row.rec.beats_qgv ? " Yes" : " No") << ", published [["
          << published.n << ',' << published.k << ',' << d << "]]_" << cfg.q << (published.beats_qgv ? " Yes" : " No")
          << '\n';
      ++mismatches;
    }
    rows.push_back(std::move(row));
  }
  emit(out, rows, fmt);
  err << name << ": " << rows.size() << " rows, " << mismatches << " mismatches, oracle "
      << (skip_oracle ? "skipped" : "ran") << ", " << std::fixed << std::setprecision(3) << seconds_since(start)
      << " s\n";
  return mismatches == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized monomial-Cartesian codes and their quantum stabilizer codes", "gmcq"};
  app.require_subcommand(1);

  ConfigFlags cf;
  long t = 0;
  std::vector<std::uint32_t> py;
  std::string out_path;
  long dual_limit = 0;
  bool with_oracle = false;
  std::string family_name;
  long q = 0, n = 0, k = 0, d = 0;
  std::string format = "md";
  std::string preset_name;
  bool verify_family = false;
  bool skip_oracle = false;

  const std::vector<std::string> formats{"md", "csv", "json"};

  auto* construct = app.add_subcommand("construct", "Build the generator matrix and report code parameters");
  add_config_flags(construct, cf);
  construct->add_option("--t", t, "Distance parameter, t >= 2")->required();
  construct->add_option("--py", py, "Y points as element codes (default: first ny elements of GF(q))");
  construct->add_option("--out", out_path, "Write the generator matrix as CSV");

  auto* verify = app.add_subcommand("verify", "Check Hermitian self-orthogonality on the generator matrix");
  add_config_flags(verify, cf);
  verify->add_option("--t", t, "Distance parameter, t >= 2")->required();
  verify->add_option("--py", py, "Y points as element codes (default: first ny elements of GF(q))");
  verify->add_option("--dual-distance", dual_limit, "Also find the Hermitian dual distance up to this value")
      ->check(CLI::PositiveNumber);

  auto* tstar = app.add_subcommand("tstar", "Closed-form self-orthogonality threshold T*");
  add_config_flags(tstar, cf);
  tstar->add_flag("--oracle", with_oracle, "Compare against brute force");

  auto* family = app.add_subcommand("family", "Quantum codes of one of the three families");
  family->add_option("--name", family_name, "fam1, fam2 or fam3")
      ->required()
      ->check(CLI::IsMember({"fam1", "fam2", "fam3"}));
  family->add_option("--q", q, "Size of the base field")->required();
  family->add_option("--format", format, "md, csv or json")->check(CLI::IsMember(formats));
  family->add_flag("--verify", verify_family, "Check every record's generator matrix");

  auto* qgv = app.add_subcommand("qgv", "Does [[n,k,d]]_q beat the quantum Gilbert-Varshamov bound?");
  qgv->add_option("--q", q)->required();
  qgv->add_option("--n", n)->required();
  qgv->add_option("--k", k)->required();
  qgv->add_option("--d", d)->required();

  auto* table = app.add_subcommand("table", "Reproduce a published parameter table");
  table->add_option("--preset", preset_name, "table2, table3, table4, table5, tableq8 or comparisons")
      ->required()
      ->check(CLI::IsMember(presets::preset_names()));
  table->add_option("--format", format, "md, csv or json")->check(CLI::IsMember(formats));
  table->add_flag("--no-oracle", skip_oracle, "Skip the generator-matrix self-orthogonality check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    CodeConfig cfg = cf.config();
    if (construct->parsed()) {
      cfg.t = t;
      return cmd_construct(cfg, py, out_path, out, err);
    }
    if (verify->parsed()) {
      cfg.t = t;
      return cmd_verify(cfg, py, dual_limit, out, err);
    }
    if (tstar->parsed()) return cmd_tstar(cfg, with_oracle, out, err);
    if (family->parsed()) return cmd_family(family_name, q, parse_format(format), verify_family, out, err);
    if (qgv->parsed()) return cmd_qgv(q, n, k, d, out);
    if (table->parsed()) return cmd_table(preset_name, parse_format(format), skip_oracle, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace gmcq::cli
