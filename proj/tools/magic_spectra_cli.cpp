// Command-line surface: generate squares, compute spectra, verify the
// structural identities and bounds, and emit the error-curve dataset.
//
// Exit codes: 0 success, 2 bad arguments, 3 numeric convergence failure,
// 4 verification failure, 5 I/O failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "magicspectra/magicspectra.hpp"

namespace {

using nlohmann::json;
using namespace magicspectra;

constexpr const char* kArtifactVersion = "0.1.0";

enum class OutputFormat { csv, json, markdown, plain };

const std::map<std::string, OutputFormat> kFormatNames = {
    {"csv", OutputFormat::csv},
    {"json", OutputFormat::json},
    {"markdown", OutputFormat::markdown},
    {"plain", OutputFormat::plain}};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json tolerance_json(const ToleranceConfig& cfg) {
  return {{"eig_tol", cfg.eig_tol},
          {"max_qr_iters", cfg.max_qr_iters},
          {"zero_threshold", cfg.zero_threshold},
          {"norm_iters", cfg.norm_iters},
          {"norm_tol", cfg.norm_tol}};
}

json make_manifest(const std::string& command,
                   const std::vector<std::pair<std::string, std::string>>& params,
                   const ToleranceConfig& cfg) {
  json p = json::object();
  for (const auto& [k, v] : params) p[k] = v;
  return {{"command", command},
          {"parameters", p},
          {"artifact_version", kArtifactVersion},
          {"timestamp", utc_timestamp()},
          {"tolerance_config", tolerance_json(cfg)}};
}

// Writes text to stdout or --out; non-json file outputs get a sibling
// manifest file. Returns an exit code (0 or 5).
int emit(const std::string& text, const std::string& out_path,
         const json& manifest, OutputFormat format) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 5;
  }
  f << text;
  f.flush();
  if (!f.good()) {
    std::cerr << "error: failed writing " << out_path << "\n";
    return 5;
  }
  if (format != OutputFormat::json) {
    const std::string mpath = out_path + ".manifest.json";
    std::ofstream mf(mpath);
    if (!mf) {
      std::cerr << "error: cannot open " << mpath << " for writing\n";
      return 5;
    }
    mf << manifest.dump(2) << '\n';
    if (!mf.good()) return 5;
  }
  return 0;
}

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << '|';
  for (const auto& h : header) os << ' ' << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
  os << '\n';
  for (const auto& row : rows) {
    os << '|';
    for (const auto& cell : row) os << ' ' << cell << " |";
    os << '\n';
  }
  return os.str();
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// generate

std::string render_square(const MagicSquare& sq, OutputFormat format,
                          const json& manifest) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain:
      for (std::size_t i = 1; i <= sq.n; ++i) {
        for (std::size_t j = 1; j <= sq.n; ++j)
          os << sq.at(i, j) << (j < sq.n ? " " : "\n");
      }
      break;
    case OutputFormat::csv:
      for (std::size_t i = 1; i <= sq.n; ++i)
        for (std::size_t j = 1; j <= sq.n; ++j)
          os << sq.at(i, j) << (j < sq.n ? "," : "\n");
      break;
    case OutputFormat::markdown: {
      std::vector<std::string> header;
      for (std::size_t j = 1; j <= sq.n; ++j) header.push_back("c" + std::to_string(j));
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 1; i <= sq.n; ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 1; j <= sq.n; ++j)
          row.push_back(std::to_string(sq.at(i, j)));
        rows.push_back(std::move(row));
      }
      os << markdown_table(header, rows);
      break;
    }
    case OutputFormat::json: {
      json rows = json::array();
      for (std::size_t i = 1; i <= sq.n; ++i) {
        json row = json::array();
        for (std::size_t j = 1; j <= sq.n; ++j) row.push_back(sq.at(i, j));
        rows.push_back(std::move(row));
      }
      const json out = {{"manifest", manifest},
                        {"data",
                         {{"n", sq.n},
                          {"parity", parity_name(sq.parity)},
                          {"magic_sum", magic_sum(sq.n)},
                          {"rows", rows}}}};
      os << out.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// spectrum

std::string format_complex(const Complex& v) {
  if (v.imag() == 0.0) return format_mu(v.real());
  return format_mu(v.real()) + (v.imag() > 0 ? "+" : "") + format_mu(v.imag()) + "i";
}

std::string render_numeric_spectrum(const Spectrum& s, OutputFormat format,
                                    const json& manifest) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain:
      for (const auto& v : s.values) os << format_complex(v) << '\n';
      break;
    case OutputFormat::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : s.values)
        rows.push_back({format_mu(v.real()), format_mu(v.imag())});
      os << csv_table({"re", "im"}, rows);
      break;
    }
    case OutputFormat::markdown: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& v : s.values) rows.push_back({format_complex(v)});
      os << markdown_table({"Eigenvalues of M_n (mu)"}, rows);
      break;
    }
    case OutputFormat::json: {
      json vals = json::array();
      for (const auto& v : s.values)
        vals.push_back({{"re", v.real()}, {"im", v.imag()}});
      const json out = {{"manifest", manifest},
                        {"data", {{"n", s.order}, {"values", vals}}}};
      os << out.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_approx_spectrum(const ApproxSpectrum& a, OutputFormat format,
                                   const json& manifest) {
  std::vector<double> values;
  for (const auto& [j, lam] : a.entries) values.push_back(lam);
  for (double v : a.special) values.push_back(v);
  values.insert(values.end(), a.zero_count, 0.0);
  std::sort(values.begin(), values.end());

  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain:
      for (double v : values) os << format_lambda(v) << '\n';
      break;
    case OutputFormat::csv: {
      std::vector<std::vector<std::string>> rows;
      for (double v : values) rows.push_back({format_lambda(v)});
      os << csv_table({"lambda"}, rows);
      break;
    }
    case OutputFormat::markdown: {
      std::vector<std::vector<std::string>> rows;
      for (double v : values) rows.push_back({format_lambda(v)});
      os << markdown_table({"Approximate eigenvalues (lambda)"}, rows);
      break;
    }
    case OutputFormat::json: {
      json entries = json::array();
      for (const auto& [j, lam] : a.entries)
        entries.push_back({{"j", j}, {"lambda", lam}});
      json special = json::array();
      for (double v : a.special) special.push_back(v);
      const json out = {{"manifest", manifest},
                        {"data",
                         {{"n", a.n},
                          {"parity", parity_name(a.parity)},
                          {"bound", a.bound},
                          {"entries", entries},
                          {"special", special},
                          {"zero_count", a.zero_count}}}};
      os << out.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_both_table(const ErrorReport& rep, OutputFormat format,
                              const json& manifest) {
  const auto rows = spectrum_table_rows(rep);
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) cells.push_back({r.mu, r.lambda, r.error});
  const std::vector<std::string> header = {"Eigenvalues of M_n (mu)",
                                           "Approximation (lambda)",
                                           "Relative error"};
  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain:
      for (const auto& r : rows) {
        os.width(18);
        os << r.mu;
        os.width(22);
        os << r.lambda;
        os.width(16);
        os << r.error;
        os << '\n';
      }
      break;
    case OutputFormat::csv:
      os << csv_table({"mu", "lambda", "rel_err"}, cells);
      break;
    case OutputFormat::markdown:
      os << markdown_table(header, cells);
      break;
    case OutputFormat::json: {
      json jrows = json::array();
      for (const auto& r : rep.rows)
        jrows.push_back({{"mu_re", r.mu.real()},
                         {"mu_im", r.mu.imag()},
                         {"lambda", r.lambda},
                         {"rel_err", r.rel_err},
                         {"complex_flagged", r.complex_flagged}});
      json jspecial = json::array();
      for (const auto& r : rep.special_rows)
        jspecial.push_back({{"mu_re", r.mu.real()},
                            {"lambda", r.lambda},
                            {"rel_err", r.rel_err}});
      const json out = {{"manifest", manifest},
                        {"data",
                         {{"n", rep.n},
                          {"parity", parity_name(rep.parity)},
                          {"rows", jrows},
                          {"special_rows", jspecial},
                          {"zero_count_observed", rep.zero_count_observed},
                          {"zero_count_expected", rep.zero_count_expected},
                          {"e_n", rep.e_n},
                          {"bound", rep.bound},
                          {"pass", rep.pass},
                          {"bijective_pass", rep.bijective_pass}}}};
      os << out.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCheck {
  std::size_t n = 0;
  Parity parity = Parity::Odd;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string format_bound(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void verify_order(std::size_t n, const ToleranceConfig& cfg,
                  std::vector<VerifyCheck>& checks) {
  const Parity parity = parity_of(n);
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({n, parity, name, pass, detail});
  };

  const MagicSquare sq = magic(n);
  add("magic invariants", is_magic(sq), "permutation and sum families");

  switch (parity) {
    case Parity::Odd: {
      bool ident_ok = true;
      std::string detail;
      try {
        const OddDecomposition d = odd_decompose(n);
        const double nrm = verify_perturbation_identity(d, cfg);
        const double expect = 1.0 / static_cast<double>(n);
        ident_ok = std::abs(nrm - expect) <= 1e-9 * expect;
        detail = "||S^-1 T||_2 = " + format_bound(nrm) + ", 1/n = " + format_bound(expect);
      } catch (const Error& e) {
        ident_ok = false;
        detail = e.what();
      }
      add("decomposition identity", ident_ok, detail);

      const ErrorReport rep = report_for_order(n, cfg);
      add("theorem bound", rep.pass,
          "e_n = " + format_bound(rep.e_n) + " <= " + format_bound(rep.bound));

      const BauerFikeCertificate cert = bauer_fike_certificate(n, cfg);
      add("bauer-fike certificate", cert.pass,
          "empirical " + format_bound(cert.empirical_e_n) + " <= certified " +
              format_bound(cert.certified_bound));
      break;
    }
    case Parity::SinglyEven: {
      bool block_ok = true;
      std::string detail = "Q M Q^T block-triangular";
      try {
        singly_even_block_form(n);
      } catch (const Error& e) {
        block_ok = false;
        detail = e.what();
      }
      add("block reduction", block_ok, detail);

      const std::size_t m = n / 2;
      const std::size_t k = (m - 1) / 2;
      bool pairs_ok = true;
      std::string pair_detail =
          "lambda = ±" + format_mu(3.0 * static_cast<double>(m * m));
      try {
        singly_even_exact_pairs(n);
      } catch (const Error& e) {
        pairs_ok = false;
        pair_detail = e.what();
      }
      add("exact eigenpairs", pairs_ok, pair_detail);

      bool zeros_ok = true;
      bool bound_ok = true;
      std::string zero_detail, bound_detail;
      try {
        const ErrorReport rep = report_for_order(n, cfg);
        zero_detail = "zeros observed: " + std::to_string(rep.zero_count_observed) +
                      " (expected 2k-1 = " + std::to_string(2 * k - 1) + ")";
        bound_ok = rep.pass;
        bound_detail =
            "e_n = " + format_bound(rep.e_n) + " <= " + format_bound(rep.bound);
      } catch (const ClassificationError& e) {
        zeros_ok = false;
        bound_ok = false;
        zero_detail = e.what();
        bound_detail = "not evaluated";
      }
      add("zero count", zeros_ok, zero_detail);
      add("theorem bound", bound_ok, bound_detail);
      break;
    }
    case Parity::DoublyEven: {
      bool fact_ok = true;
      std::string detail = "M_n = U S3 U^T exact";
      try {
        doubly_even_factorize(n);
      } catch (const Error& e) {
        fact_ok = false;
        detail = e.what();
      }
      add("factorization exact", fact_ok, detail);

      const std::size_t rank = numerical_rank(sq.to_dense(), cfg);
      add("rank=3", rank == 3, "observed " + std::to_string(rank));

      const double dn = static_cast<double>(n);
      const double lam = dn / 2.0 * std::sqrt((dn * dn * dn - dn) / 3.0);
      bool pairs_ok = true;
      std::string pair_detail = "mu0 = " + format_mu(static_cast<double>(magic_sum(n))) +
                                ", ±" + format_mu(lam);
      try {
        doubly_even_exact_pairs(n);
      } catch (const Error& e) {
        pairs_ok = false;
        pair_detail = e.what();
      }
      add("nonzero eigenvalues", pairs_ok, pair_detail);

      // singular values against the three closed forms
      const DenseMatrix M = sq.to_dense();
      const Spectrum gram = eigen_decompose(M.transposed() * M, cfg);
      std::vector<double> sv;
      for (const auto& v : gram.values) sv.push_back(std::sqrt(std::abs(v.real())));
      std::sort(sv.begin(), sv.end());
      const std::vector<double> expect = {
          dn / 2.0 * std::sqrt((dn * dn - 1.0) / 3.0),
          dn * dn / 2.0 * std::sqrt((dn * dn - 1.0) / 3.0),
          static_cast<double>(magic_sum(n))};
      bool sv_ok = sv.size() >= 3;
      for (std::size_t i = 0; i < 3 && sv_ok; ++i) {
        const double got = sv[sv.size() - 3 + i];
        sv_ok = std::abs(got - expect[i]) <= 1e-9 * expect[i];
      }
      add("singular values", sv_ok, "three closed forms within 1e-9");

      const ErrorReport rep = report_for_order(n, cfg);
      double worst = 0.0;
      for (const auto& r : rep.special_rows) worst = std::max(worst, r.rel_err);
      add("theorem bound", worst <= 1e-9,
          "max special rel err = " + format_bound(worst));
      break;
    }
  }
}

std::string render_verify(const std::vector<VerifyCheck>& checks,
                          OutputFormat format, const json& manifest,
                          const std::string& note) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain: {
      std::size_t last_n = 0;
      for (const auto& c : checks) {
        if (c.n != last_n) {
          os << "n=" << c.n << " [" << parity_name(c.parity) << "]\n";
          last_n = c.n;
        }
        os << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " ("
           << c.detail << ")\n";
      }
      if (!note.empty()) os << note << '\n';
      std::vector<const VerifyCheck*> failures;
      for (const auto& c : checks)
        if (!c.pass) failures.push_back(&c);
      if (failures.empty()) {
        os << "all checks passed\n";
      } else {
        os << "FAILURES:\n";
        for (const auto* c : failures)
          os << "  n=" << c->n << " " << c->name << ": " << c->detail << '\n';
      }
      break;
    }
    case OutputFormat::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : checks)
        rows.push_back({std::to_string(c.n), parity_name(c.parity), c.name,
                        c.pass ? "pass" : "fail", c.detail});
      os << csv_table({"n", "parity", "check", "status", "detail"}, rows);
      break;
    }
    case OutputFormat::markdown: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : checks)
        rows.push_back({std::to_string(c.n), parity_name(c.parity), c.name,
                        c.pass ? "pass" : "fail", c.detail});
      os << markdown_table({"n", "parity", "check", "status", "detail"}, rows);
      break;
    }
    case OutputFormat::json: {
      json jchecks = json::array();
      for (const auto& c : checks)
        jchecks.push_back({{"n", c.n},
                           {"parity", parity_name(c.parity)},
                           {"check", c.name},
                           {"pass", c.pass},
                           {"detail", c.detail}});
      const json out = {{"manifest", manifest},
                        {"data", {{"checks", jchecks}, {"note", note}}}};
      os << out.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// error-curve

std::string render_error_curve(const std::vector<ErrorCurvePoint>& curve,
                               OutputFormat format, const json& manifest) {
  auto fmt_e = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return std::string(buf);
  };
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : curve)
    rows.push_back({std::to_string(p.n), fmt_e(p.e_n), fmt_e(p.bound),
                    p.is_prime ? "1" : "0", std::to_string(p.n_mod_6)});
  const std::vector<std::string> header = {"n", "e_n", "bound", "is_prime",
                                           "n_mod_6"};
  std::ostringstream os;
  switch (format) {
    case OutputFormat::plain:
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
          os << r[i] << (i + 1 < r.size() ? " " : "\n");
      }
      break;
    case OutputFormat::csv:
      os << csv_table(header, rows);
      break;
    case OutputFormat::markdown:
      os << markdown_table(header, rows);
      break;
    case OutputFormat::json: {
      json pts = json::array();
      for (const auto& p : curve) {
        json pt = {{"n", p.n},
                   {"e_n", p.e_n},
                   {"bound", p.bound},
                   {"is_prime", p.is_prime},
                   {"n_mod_6", p.n_mod_6},
                   {"below_bound", p.below_bound},
                   {"prime_near_eps", p.prime_near_eps}};
        if (p.elevated_mod6.has_value()) pt["elevated_mod6"] = *p.elevated_mod6;
        pts.push_back(std::move(pt));
      }
      const json out = {{"manifest", manifest}, {"data", {{"points", pts}}}};
      os << out.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magic-spectra: magic squares, their spectra and error bounds"};
  app.require_subcommand(1);

  ToleranceConfig cfg;
  if (const char* env = std::getenv("MAGIC_SPECTRA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || v <= 0.0) {
      std::cerr << "error: MAGIC_SPECTRA_TOL must be a positive number\n";
      return 2;
    }
    cfg.eig_tol = v;
  }

  std::size_t n = 0;
  std::size_t from = 3, to = 50;
  bool from_given = false, to_given = false;
  std::string mode = "numeric";
  std::string out_path;
  double max_seconds = 60.0;
  OutputFormat format = OutputFormat::plain;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
  };

  CLI::App* generate = app.add_subcommand("generate", "emit magic(n)");
  generate->add_option("--n", n, "order")->required();
  add_format(generate);
  generate->add_option("--out", out_path, "output file");

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of magic(n)");
  spectrum->add_option("--n", n, "order")->required();
  spectrum->add_option("--mode", mode, "numeric | approx | both")
      ->check(CLI::IsMember({"numeric", "approx", "both"}));
  add_format(spectrum);
  spectrum->add_option("--out", out_path, "output file");

  CLI::App* verify = app.add_subcommand("verify", "run per-order checks");
  verify->add_option("--from", from, "first order")->capture_default_str();
  verify->add_option("--to", to, "last order")->capture_default_str();
  std::string parity_filter;
  verify->add_option("--parity", parity_filter, "odd | singly-even | doubly-even")
      ->check(CLI::IsMember({"odd", "singly-even", "doubly-even"}));
  verify->add_option("--max-seconds", max_seconds, "time budget")
      ->capture_default_str();
  add_format(verify);
  verify->add_option("--out", out_path, "output file");

  CLI::App* curve = app.add_subcommand("error-curve", "e_n dataset for odd n");
  curve->add_option("--from", from, "first odd order")->required();
  curve->add_option("--to", to, "last odd order")->required();
  add_format(curve);
  curve->add_option("--out", out_path, "output file (required)")->required();

  // track whether range options were set explicitly (CLI11 count)
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }
  from_given = verify->count("--from") > 0 || curve->count("--from") > 0;
  to_given = verify->count("--to") > 0 || curve->count("--to") > 0;
  (void)from_given;
  (void)to_given;

  try {
    if (*generate) {
      const json manifest = make_manifest(
          "generate", {{"n", std::to_string(n)}, {"format", std::to_string(static_cast<int>(format))}}, cfg);
      const MagicSquare sq = magic(n);
      return emit(render_square(sq, format, manifest), out_path, manifest, format);
    }

    if (*spectrum) {
      const json manifest = make_manifest(
          "spectrum", {{"n", std::to_string(n)}, {"mode", mode}}, cfg);
      std::string text;
      if (mode == "numeric") {
        const Spectrum s = eigen_decompose(magic(n).to_dense(), cfg);
        text = render_numeric_spectrum(s, format, manifest);
      } else if (mode == "approx") {
        text = render_approx_spectrum(approx_spectrum(n), format, manifest);
      } else {
        text = render_both_table(report_for_order(n, cfg), format, manifest);
      }
      return emit(text, out_path, manifest, format);
    }

    if (*verify) {
      if (from < 3 || from > to) {
        std::cerr << "error: need 3 <= --from <= --to\n";
        return 2;
      }
      const json manifest = make_manifest(
          "verify",
          {{"from", std::to_string(from)}, {"to", std::to_string(to)},
           {"parity", parity_filter.empty() ? "all" : parity_filter},
           {"max_seconds", std::to_string(max_seconds)}},
          cfg);
      std::vector<VerifyCheck> checks;
      std::string note;
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t order = from; order <= to; ++order) {
        if (!parity_filter.empty() &&
            parity_name(parity_of(order)) != parity_filter)
          continue;
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > max_seconds) {
          note = "time budget exhausted before n=" + std::to_string(order);
          break;
        }
        verify_order(order, cfg, checks);
      }
      const std::string text = render_verify(checks, format, manifest, note);
      const int code = emit(text, out_path, manifest, format);
      if (code != 0) return code;
      for (const auto& c : checks)
        if (!c.pass) return 4;
      return 0;
    }

    if (*curve) {
      if (from % 2 == 0 || to % 2 == 0 || from < 3 || from > to) {
        std::cerr << "error: error-curve needs odd bounds with 3 <= from <= to\n";
        return 2;
      }
      const json manifest = make_manifest(
          "error-curve",
          {{"from", std::to_string(from)}, {"to", std::to_string(to)}}, cfg);
      const auto points = error_curve(from, to, cfg);
      return emit(render_error_curve(points, format, manifest), out_path,
                  manifest, format);
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedOrderError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
