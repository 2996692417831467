#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "concvec/bipartite.hpp"
#include "concvec/catalog.hpp"
#include "concvec/io.hpp"
#include "concvec/multipartite.hpp"
#include "concvec/oracle.hpp"
#include "concvec/son_algebra.hpp"
#include "concvec/state.hpp"

namespace concvec::cli {

namespace {

using nlohmann::ordered_json;

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : "nan";
}

std::string scientific(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 3);
  return ec == std::errc{} ? std::string(buf, end) : "nan";
}

std::string pair_label(std::size_t i, std::size_t j) {
  return "C" + std::to_string(i) + std::to_string(j);
}

std::string dims_text(const Dims& dims) {
  std::string s = "[";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    s += (k ? ", " : "") + std::to_string(dims[k]);
  }
  return s + "]";
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io::FormatError(0, "cannot write '" + path + "'");
  file << text;
  if (!file) throw io::FormatError(0, "failed writing '" + path + "'");
}

struct BipartiteMeasures {
  double vector_norm;
  double closed_form;
  double i_concurrence;
  double fei;
  double entropy;
  bool has_eof;
  double eof;
};

BipartiteMeasures bipartite_measures(const PureState& psi) {
  BipartiteMeasures m{};
  m.vector_norm = bipartite::concurrence_norm(psi);
  m.closed_form = bipartite::concurrence_closed_form(psi);
  m.i_concurrence = bipartite::i_concurrence(psi);
  m.fei = bipartite::fei_concurrence(psi);
  m.entropy = bipartite::von_neumann_entropy(psi);
  m.has_eof = std::min(psi.dims()[0], psi.dims()[1]) == 2;
  m.eof = m.has_eof ? bipartite::eof(psi) : 0.0;
  return m;
}

}  // namespace

int compute(const ComputeOptions& opts, std::ostream& out) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  const PureState psi = io::read_state_file(opts.state_path);
  if (psi.subsystems() < 2) throw std::invalid_argument("state must have at least 2 subsystems");

  const auto report = multipartite::total_concurrence(psi);
  const auto flag = multipartite::classify(report, opts.tol);
  std::optional<BipartiteMeasures> bi;
  if (psi.subsystems() == 2) bi = bipartite_measures(psi);

  if (opts.format == Format::json) {
    ordered_json doc;
    doc["tool"] = "concvec";
    doc["version"] = kVersion;
    doc["dims"] = psi.dims();
    doc["tolerance"] = opts.tol;
    doc["pairs"] = ordered_json::array();
    for (const auto& p : report.pairs) {
      doc["pairs"].push_back({{"i", p.i}, {"j", p.j}, {"norm", io::round_printed(p.norm)}});
    }
    doc["total"] = io::round_printed(report.total);
    doc["separability"] = multipartite::to_string(flag);
    if (bi) {
      ordered_json b;
      b["vector_norm"] = io::round_printed(bi->vector_norm);
      b["closed_form"] = io::round_printed(bi->closed_form);
      b["i_concurrence"] = io::round_printed(bi->i_concurrence);
      b["fei_concurrence"] = io::round_printed(bi->fei);
      b["entropy"] = io::round_printed(bi->entropy);
      if (bi->has_eof) b["eof"] = io::round_printed(bi->eof);
      doc["bipartite"] = b;
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }

  out << "concvec " << kVersion << "\n";
  out << "dims: " << dims_text(psi.dims()) << "\n";
  out << "tolerance: " << shortest(opts.tol) << "\n";
  for (const auto& p : report.pairs) {
    out << pair_label(p.i, p.j) << ": " << io::format_number(p.norm) << "\n";
  }
  out << "total: " << io::format_number(report.total) << "\n";
  out << "separability: " << multipartite::to_string(flag) << "\n";
  if (bi) {
    out << "vector_norm: " << io::format_number(bi->vector_norm) << "\n";
    out << "closed_form: " << io::format_number(bi->closed_form) << "\n";
    out << "i_concurrence: " << io::format_number(bi->i_concurrence) << "\n";
    out << "fei_concurrence: " << io::format_number(bi->fei) << "\n";
    out << "entropy: " << io::format_number(bi->entropy) << "\n";
    if (bi->has_eof) out << "eof: " << io::format_number(bi->eof) << "\n";
  }
  return kOk;
}

int components(const ComponentsOptions& opts, std::ostream& out) {
  const PureState psi = io::read_state_file(opts.state_path);
  if (!(opts.i < opts.j && opts.j < psi.subsystems())) {
    throw std::invalid_argument("--pair " + std::to_string(opts.i) + " " +
                                std::to_string(opts.j) + " is not a valid pair for " +
                                std::to_string(psi.subsystems()) + " subsystems");
  }
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "# pair " << opts.i << " " << opts.j << "\n";
  if (psi.subsystems() == 2) {
    const auto vec = bipartite::concurrence_vector(psi);
    text << "# alpha beta re im\n";
    for (std::size_t a = 0; a < vec.rows; ++a) {
      for (std::size_t b = 0; b < vec.cols; ++b) {
        const Complex c = vec.at(a, b);
        text << a << " " << b << " " << io::format_number(c.real()) << " "
             << io::format_number(c.imag()) << "\n";
        rows.push_back({{"alpha_i", a}, {"alpha_j", b},
                        {"re", io::round_printed(c.real())},
                        {"im", io::round_printed(c.imag())}});
      }
    }
  } else {
    const auto sub = multipartite::pairwise_subvector(psi, opts.i, opts.j);
    text << "# alpha_i alpha_j value\n";
    for (std::size_t a = 0; a < sub.rows; ++a) {
      for (std::size_t b = 0; b < sub.cols; ++b) {
        text << a << " " << b << " " << io::format_number(sub.at(a, b)) << "\n";
        rows.push_back({{"alpha_i", a}, {"alpha_j", b},
                        {"value", io::round_printed(sub.at(a, b))}});
      }
    }
  }
  if (opts.format == Format::json) {
    ordered_json doc;
    doc["pair"] = {opts.i, opts.j};
    doc["components"] = rows;
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

int gen(const GenOptions& opts, std::ostream& out) {
  PureState psi = [&] {
    if (opts.family == "random") {
      if (opts.dims.empty()) throw std::invalid_argument("--family random requires --dims");
      return random_state(opts.dims, opts.seed);
    }
    catalog::Params p;
    p.m = opts.m;
    p.s = opts.s;
    p.phi = opts.phi;
    p.alpha = opts.alpha;
    p.beta = opts.beta;
    p.n = opts.n;
    return catalog::make(opts.family, p);
  }();
  write_output(opts.out, io::format_state(psi), out);
  return kOk;
}

int sweep(const SweepOptions& opts, std::ostream& out) {
  if (opts.family != "ww" && opts.family != "gw") {
    throw std::invalid_argument("--family must be ww or gw for sweep");
  }
  if (opts.steps < 2) throw std::invalid_argument("--steps must be >= 2");
  if (opts.phi_values.empty()) throw std::invalid_argument("--phi-values must not be empty");

  std::ostringstream csv;
  csv << "s,phi";
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) csv << "," << pair_label(i, j);
  }
  csv << ",C_total\n";
  for (std::size_t t = 0; t < opts.steps; ++t) {
    const double s = static_cast<double>(t) / static_cast<double>(opts.steps - 1);
    for (const double phi : opts.phi_values) {
      const PureState psi = opts.family == "ww" ? catalog::ww_superposition(s, phi)
                                                : catalog::gw_superposition(s, phi);
      const auto report = multipartite::total_concurrence(psi);
      csv << io::format_number(s) << "," << io::format_number(phi);
      for (const auto& p : report.pairs) csv << "," << io::format_number(p.norm);
      csv << "," << io::format_number(report.total) << "\n";
    }
  }
  write_output(opts.out, csv.str(), out);
  return kOk;
}

int verify(const VerifyOptions& opts, std::ostream& out) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  const PureState psi = io::read_state_file(opts.state_path);
  if (psi.subsystems() < 2) throw std::invalid_argument("state must have at least 2 subsystems");
  if (psi.size() > oracle::kMaxDimension) {
    throw std::invalid_argument("total dimension " + std::to_string(psi.size()) +
                                " exceeds the oracle limit of " +
                                std::to_string(oracle::kMaxDimension));
  }
  out << "concvec " << kVersion << " verify\n";
  out << "dims: " << dims_text(psi.dims()) << "\n";
  out << "tolerance: " << shortest(opts.tol) << "\n";
  double worst = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < psi.subsystems(); ++i) {
    for (std::size_t j = i + 1; j < psi.subsystems(); ++j) {
      const auto sub = multipartite::pairwise_subvector(psi, i, j);
      double pair_worst = 0.0;
      for (std::size_t a = 0; a < sub.rows; ++a) {
        for (std::size_t b = 0; b < sub.cols; ++b) {
          const double reference = oracle::definitional_component(psi, i, j, a, b);
          pair_worst = std::max(pair_worst, std::abs(sub.at(a, b) - reference));
          ++count;
        }
      }
      out << pair_label(i, j) << ": max deviation " << scientific(pair_worst) << "\n";
      worst = std::max(worst, pair_worst);
    }
  }
  const bool ok = worst <= opts.tol;
  out << "components: " << count << "\n";
  out << "max deviation: " << scientific(worst) << "\n";
  out << "status: " << (ok ? "ok" : "mismatch") << "\n";
  return ok ? kOk : kMismatch;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concurrence vectors of multipartite pure states", "concvec"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ComputeOptions compute_opts;
  auto* compute_cmd = app.add_subcommand("compute", "Pairwise and total concurrence of a state file");
  compute_cmd->add_option("state", compute_opts.state_path, "State file (JSON)")->required();
  compute_cmd->add_option("--tol", compute_opts.tol, "Separability tolerance");
  bool compute_json = false;
  bool compute_text = false;
  auto* cj = compute_cmd->add_flag("--json", compute_json, "JSON report");
  auto* ct = compute_cmd->add_flag("--text", compute_text, "Text report (default)");
  cj->excludes(ct);

  ComponentsOptions comp_opts;
  auto* comp_cmd = app.add_subcommand("components", "Dump the concurrence components of one pair");
  comp_cmd->add_option("state", comp_opts.state_path, "State file (JSON)")->required();
  std::vector<std::size_t> pair;
  comp_cmd->add_option("--pair", pair, "Subsystem pair i j (0-based)")->expected(2);
  bool comp_json = false;
  comp_cmd->add_flag("--json", comp_json, "JSON output");
  comp_cmd->add_flag("--text", "Text output (default)");

  GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Write a state file for a named family");
  gen_cmd->add_option("--family", gen_opts.family,
                      "ghz | w | anti_w | epr1 | ww | gw | maxent | random")
      ->required();
  gen_cmd->add_option("--m", gen_opts.m, "Number of qubits (ghz, w, anti_w)");
  gen_cmd->add_option("--s", gen_opts.s, "Superposition weight in [0, 1] (ww, gw)");
  gen_cmd->add_option("--phi", gen_opts.phi, "Relative phase (ww, gw)");
  gen_cmd->add_option("--alpha", gen_opts.alpha, "Amplitude of |0> on the third qubit (epr1)");
  gen_cmd->add_option("--beta", gen_opts.beta, "Amplitude of |1> on the third qubit (epr1)");
  gen_cmd->add_option("--n", gen_opts.n, "Local dimension (maxent)");
  gen_cmd->add_option("--dims", gen_opts.dims, "Subsystem dimensions (random)");
  gen_cmd->add_option("--seed", gen_opts.seed, "PRNG seed (random)");
  gen_cmd->add_option("--out", gen_opts.out, "Output path (default: stdout)");

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of pairwise concurrence along a superposition family");
  sweep_cmd->add_option("--family", sweep_opts.family, "ww | gw")->required();
  sweep_cmd->add_option("--steps", sweep_opts.steps, "Number of s values in [0, 1]");
  sweep_cmd->add_option("--phi-values", sweep_opts.phi_values, "Phases to evaluate");
  sweep_cmd->add_option("--out", sweep_opts.out, "Output CSV path (default: stdout)");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed-form components against the dense definition");
  verify_cmd->add_option("state", verify_opts.state_path, "State file (JSON)")->required();
  verify_cmd->add_option("--tol", verify_opts.tol, "Maximum allowed absolute deviation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*compute_cmd) {
      compute_opts.format = compute_json ? Format::json : Format::text;
      return compute(compute_opts, out);
    }
    if (*comp_cmd) {
      if (!pair.empty()) {
        comp_opts.i = pair[0];
        comp_opts.j = pair[1];
      }
      comp_opts.format = comp_json ? Format::json : Format::text;
      return components(comp_opts, out);
    }
    if (*gen_cmd) return gen(gen_opts, out);
    if (*sweep_cmd) return sweep(sweep_opts, out);
    if (*verify_cmd) return verify(verify_opts, out);
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace concvec::cli
