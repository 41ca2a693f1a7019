#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cayley/error.hpp"
#include "cayley/io.hpp"
#include "cayley/measures.hpp"
#include "cayley/spectra.hpp"
#include "cayley/tree.hpp"
#include "cayley/verify.hpp"
#include "cayley/walks.hpp"
#include "cayley/words.hpp"
#include "cayley/zeta.hpp"

namespace {

using cayley::Json;
using cayley::Rat;

struct Output {
  std::string path;   // empty = stdout
  std::string format; // json | csv

  void emit_json(const Json& j) const {
    if (path.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::ofstream out(path);
      out << j.dump(2) << "\n";
    }
  }
  void emit_text(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path);
      out << text;
    }
  }
};

Json rat_json(const Rat& q) {
  Json j;
  j["value"] = cayley::rat_d(q);
  j["exact"] = cayley::rat_str(q);
  return j;
}

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--out", out.path, "write the document to a file instead of stdout");
  cmd->add_option("--format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
}

int run_machine(const std::string& group, const std::string& kind, const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  cayley::MealyMachine m;
  if (kind == "cayley")
    m = cayley::MealyMachine::cayley(g);
  else if (kind == "reset")
    m = cayley::MealyMachine::reset_inverse(g);
  else
    m = cayley::MealyMachine::cayley(g).inverted();
  Json j;
  j["group"] = group;
  j["kind"] = kind;
  j["machine"] = cayley::machine_json(m);
  out.emit_json(j);
  return 0;
}

int run_spectrum(const std::string& group, int level, bool numeric, const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  cayley::SpectrumAtomList atoms = cayley::closed_form_spectrum(g.order(), level);
  Json j;
  j["group"] = group;
  j["n"] = g.order();
  j["level"] = level;
  Json atom_list = Json::array();
  for (const auto& a : atoms.atoms) {
    Json entry;
    entry["p"] = a.p;
    entry["q"] = a.q;
    entry["value"] = a.value();
    entry["multiplicity"] = a.multiplicity;
    atom_list.push_back(entry);
  }
  j["atoms"] = atom_list;
  j["total_multiplicity"] = atoms.total_multiplicity();
  if (numeric) {
    auto clusters = cayley::numeric_spectrum(cayley::adjacency_matrix(g, level));
    Json num = Json::array();
    for (const auto& [value, mult] : clusters) {
      Json entry;
      entry["value"] = value;
      entry["multiplicity"] = mult;
      num.push_back(entry);
    }
    j["numeric"] = num;
    j["numeric_matches"] = cayley::spectrum_matches(atoms, clusters);
  }
  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "p,q,value,multiplicity\n";
    for (const auto& a : atoms.atoms)
      csv << a.p << "," << a.q << "," << a.value() << "," << a.multiplicity << "\n";
    out.emit_text(csv.str());
  } else {
    out.emit_json(j);
  }
  return 0;
}

int run_kns(int n, int q_max, int moments, const std::vector<double>& cdf_points,
            const Output& out) {
  cayley::DiscreteMeasure m = cayley::kns_measure(n, q_max);
  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "p,q,position,weight,weight_exact\n";
    for (const auto& a : m.atoms)
      csv << a.p << "," << a.q << "," << a.lambda() << "," << cayley::rat_d(a.weight) << ","
          << cayley::rat_str(a.weight) << "\n";
    out.emit_text(csv.str());
    return 0;
  }
  Json j;
  j["n"] = n;
  j["q_max"] = q_max;
  j["tail_bound"] = rat_json(m.tail);
  Json atoms = Json::array();
  for (const auto& a : m.atoms) {
    Json entry;
    entry["p"] = a.p;
    entry["q"] = a.q;
    entry["position"] = a.lambda();
    entry["weight"] = cayley::rat_d(a.weight);
    entry["weight_exact"] = cayley::rat_str(a.weight);
    atoms.push_back(entry);
  }
  j["atoms"] = atoms;
  if (moments >= 0) {
    Json list = Json::array();
    for (int i = 0; i <= moments; ++i) {
      auto [value, err] = cayley::moment(m, i);
      Json entry;
      entry["m"] = i;
      entry["value"] = value;
      entry["error_bound"] = err;
      list.push_back(entry);
    }
    j["moments"] = list;
  }
  if (!cdf_points.empty()) {
    Json list = Json::array();
    for (double x : cdf_points) {
      auto [low, high] = cayley::cdf(m, x);
      Json entry;
      entry["x"] = x;
      entry["lower"] = rat_json(low);
      entry["upper"] = rat_json(high);
      list.push_back(entry);
    }
    j["cdf"] = list;
  }
  out.emit_json(j);
  return 0;
}

int run_moments(const std::string& group, int level, int m_max, bool with_walk,
                const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  Json j;
  j["group"] = group;
  j["level"] = level;
  Json list = Json::array();
  for (int m = 0; m <= m_max; ++m) {
    Json entry;
    entry["m"] = m;
    entry["level_moment"] = rat_json(cayley::level_moment(g, level, m));
    if (with_walk) entry["walk_moment"] = rat_json(cayley::return_probability(g, m));
    list.push_back(entry);
  }
  j["moments"] = list;
  out.emit_json(j);
  return 0;
}

int run_fix(const std::string& group, const std::string& word, int k_max, const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  cayley::TreeElement e =
      cayley::TreeElement::from_word(g, cayley::parse_element_word(g, word));
  Json j;
  j["group"] = group;
  j["element"] = e.word_str();
  Json levels = Json::array();
  for (int k = 0; k <= k_max; ++k) {
    Json entry;
    entry["k"] = k;
    cayley::Int fc = cayley::fix_count(e, k);
    entry["fix_count"] = fc.get_str();
    entry["fraction"] = rat_json(cayley::fixed_point_character(e, k));
    levels.push_back(entry);
  }
  j["levels"] = levels;
  out.emit_json(j);
  return 0;
}

int run_depth(const std::string& group, const std::string& word, int k_max, const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  cayley::TreeElement e =
      cayley::TreeElement::from_word(g, cayley::parse_element_word(g, word));
  auto d = cayley::depth(e, k_max);
  Json j;
  j["group"] = group;
  j["element"] = e.word_str();
  j["k_max"] = k_max;
  if (d)
    j["depth"] = *d;
  else
    j["depth"] = nullptr;
  out.emit_json(j);
  return 0;
}

int run_free(const std::string& group, int maxlen, int k_max, const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  cayley::FreenessReport report = cayley::freeness_report(g, maxlen, k_max);
  Json j;
  j["group"] = group;
  j["word_len_max"] = report.word_len_max;
  j["k_max"] = report.k_max;
  j["tested"] = report.tested;
  j["free_on_ball"] = report.free_on_ball;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json entry;
    entry["word"] = e.word_str;
    switch (e.kind) {
      case cayley::FreenessEntry::Kind::identity:
        entry["verdict"] = "identity";
        break;
      case cayley::FreenessEntry::Kind::measure_zero:
        entry["verdict"] = "measure-zero-fixed";
        entry["p"] = e.decay_p;
        entry["decay_verified"] = e.decay_verified;
        break;
      case cayley::FreenessEntry::Kind::interior_witness:
        entry["verdict"] = "interior-witness";
        entry["witness"] = e.witness;
        break;
    }
    entries.push_back(entry);
  }
  j["elements"] = entries;
  out.emit_json(j);
  return 0;
}

int run_zeta(const std::string& group, int level, bool limit, int n, int q_max, int order,
             const Output& out) {
  Json j;
  if (limit) {
    cayley::DiscreteMeasure kns = cayley::kns_measure(n, q_max);
    cayley::LogZetaSeries series = cayley::limit_zeta_log(kns, n, order);
    j["kind"] = "limit";
    j["n"] = n;
    j["q_max"] = q_max;
    j["normalization"] = series.normalization;
    Json coeffs = Json::array();
    for (int r = 1; r <= order; ++r) {
      Json entry;
      entry["r"] = r;
      entry["coefficient"] = series.coeff[r - 1];
      entry["error_bound"] = series.coeff_err[r - 1];
      coeffs.push_back(entry);
    }
    j["log_series"] = coeffs;
  } else {
    cayley::FiniteGroup g = cayley::load_group(group);
    cayley::RegularMultigraph x = cayley::RegularMultigraph::from_level(g, level);
    cayley::ZetaExponent convention = cayley::pin_exponent_convention();
    cayley::LogZetaSeries series = cayley::finite_zeta_log(x, order, convention);
    j["kind"] = "finite";
    j["group"] = group;
    j["level"] = level;
    j["vertices"] = x.vertices;
    j["edges"] = x.edge_count();
    j["exponent_convention"] = series.exponent_convention;
    Json coeffs = Json::array();
    for (int r = 1; r <= order; ++r) {
      Json entry;
      entry["r"] = r;
      entry["c_r"] = cayley::rat_str(Rat(series.exact[r - 1] * Rat(r)));
      entry["coefficient"] = rat_json(series.exact[r - 1]);
      entry["path_count"] = cayley::path_count_oracle(x, r);
      coeffs.push_back(entry);
    }
    j["log_series"] = coeffs;
  }
  out.emit_json(j);
  return 0;
}

int run_walk(const std::string& group, int steps, long long mc, std::uint64_t seed,
             const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  Json j;
  j["group"] = group;
  Json list = Json::array();
  for (int m = 0; m <= steps; ++m) {
    Json entry;
    entry["m"] = m;
    if (mc > 0) {
      entry["p_m"] = cayley::monte_carlo_return(g, m, mc, seed);
      entry["approximate"] = true;
    } else {
      entry["p_m"] = rat_json(cayley::return_probability(g, m));
    }
    list.push_back(entry);
  }
  j["returns"] = list;
  if (mc > 0) {
    j["mc_samples"] = mc;
    j["seed"] = seed;
  }
  out.emit_json(j);
  return 0;
}

int run_structure(const std::string& group, int theorem, int n, const Output& out) {
  cayley::FiniteGroup g = cayley::load_group(group);
  cayley::GammaWitnessReport report = cayley::gamma_depth_witness(g, {theorem, n});
  Json j;
  j["group"] = group;
  j["theorem"] = report.theorem;
  j["n"] = report.n;
  if (report.theorem == 1) {
    j["p"] = report.p;
    if (report.g >= 0) j["g"] = g.label(report.g);
    if (report.h >= 0) j["h"] = g.label(report.h);
    if (report.v >= 0) j["v"] = g.label(report.v);
  } else if (report.g >= 0) {
    j["g"] = g.label(report.g);
    j["f"] = g.label(report.f);
    j["h"] = g.label(report.h);
    j["expected_difference"] = report.expected_difference;
  }
  j["letters_differ"] = report.letters_differ;
  if (report.certified_depth > 0) j["certified_depth"] = report.certified_depth;
  j["note"] = report.note;
  out.emit_json(j);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, measures and zeta functions of Cayley-machine automata groups"};
  app.require_subcommand(1);

  std::string group = "Z2";
  Output out;

  auto* machine_cmd = app.add_subcommand("machine", "dump a Cayley or reset machine");
  std::string machine_kind = "cayley";
  machine_cmd->add_option("--group", group, "builtin name or JSON file")->required();
  machine_cmd->add_option("--kind", machine_kind, "cayley, reset or invert-cayley")
      ->check(CLI::IsMember({"cayley", "reset", "invert-cayley"}));
  add_output_flags(machine_cmd, out);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "level-k spectrum of M_k");
  int level = 0;
  bool numeric = false;
  spectrum_cmd->add_option("--group", group)->required();
  spectrum_cmd->add_option("--level", level)->check(CLI::NonNegativeNumber)->required();
  spectrum_cmd->add_flag("--numeric", numeric, "cross-check with the Jacobi eigensolver");
  add_output_flags(spectrum_cmd, out);

  auto* kns_cmd = app.add_subcommand("kns", "KNS spectral measure");
  int kns_n = 2, q_max = 20, kns_moments = -1;
  std::vector<double> cdf_points;
  kns_cmd->add_option("--n", kns_n)->check(CLI::Range(2, 64))->required();
  kns_cmd->add_option("--qmax", q_max)->check(CLI::Range(2, 4096));
  kns_cmd->add_option("--moments", kns_moments, "emit moments 0..M");
  kns_cmd->add_option("--cdf", cdf_points, "evaluate the distribution function at x");
  add_output_flags(kns_cmd, out);

  auto* moments_cmd = app.add_subcommand("moments", "exact level moments tr(M_k^m)/n^k");
  int m_max = 4;
  bool with_walk = false;
  moments_cmd->add_option("--group", group)->required();
  moments_cmd->add_option("--level", level)->check(CLI::NonNegativeNumber)->required();
  moments_cmd->add_option("--mmax", m_max)->check(CLI::NonNegativeNumber);
  moments_cmd->add_flag("--walk", with_walk, "include wreath-product walk moments");
  add_output_flags(moments_cmd, out);

  auto* fix_cmd = app.add_subcommand("fix", "fixed-point counts per level");
  std::string element;
  int k_max = 8;
  fix_cmd->add_option("--group", group)->required();
  fix_cmd->add_option("--element", element, "comma-separated generator word, e.g. 1,0^-1")
      ->required();
  fix_cmd->add_option("--kmax", k_max)->check(CLI::NonNegativeNumber);
  add_output_flags(fix_cmd, out);

  auto* depth_cmd = app.add_subcommand("depth", "least level after which the element is trivial");
  depth_cmd->add_option("--group", group)->required();
  depth_cmd->add_option("--element", element)->required();
  depth_cmd->add_option("--kmax", k_max)->check(CLI::NonNegativeNumber);
  add_output_flags(depth_cmd, out);

  auto* free_cmd = app.add_subcommand("free", "freeness report on a ball of elements");
  int maxlen = 3;
  free_cmd->add_option("--group", group)->required();
  free_cmd->add_option("--maxlen", maxlen)->check(CLI::PositiveNumber);
  free_cmd->add_option("--kmax", k_max)->check(CLI::NonNegativeNumber);
  add_output_flags(free_cmd, out);

  auto* zeta_cmd = app.add_subcommand("zeta", "Ihara log-zeta series");
  bool limit = false;
  int order = 6;
  zeta_cmd->add_option("--group", group);
  zeta_cmd->add_option("--level", level)->check(CLI::NonNegativeNumber);
  zeta_cmd->add_flag("--limit", limit, "limit series from the KNS measure");
  zeta_cmd->add_option("--n", kns_n)->check(CLI::Range(2, 64));
  zeta_cmd->add_option("--qmax", q_max)->check(CLI::Range(2, 4096));
  zeta_cmd->add_option("-R,--order", order)->check(CLI::Range(0, 64));
  add_output_flags(zeta_cmd, out);

  auto* walk_cmd = app.add_subcommand("walk", "return probabilities on G wr Z");
  int steps = 8;
  long long mc = 0;
  std::uint64_t seed = 1;
  walk_cmd->add_option("--group", group)->required();
  walk_cmd->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  walk_cmd->add_option("--mc", mc, "Monte Carlo samples (approximate mode)");
  walk_cmd->add_option("--seed", seed);
  add_output_flags(walk_cmd, out);

  auto* structure_cmd = app.add_subcommand("structure", "depth witnesses gamma_n");
  int theorem = 1, gamma_n = 1;
  structure_cmd->add_option("--group", group)->required();
  structure_cmd->add_option("--theorem", theorem)->check(CLI::Range(1, 2));
  structure_cmd->add_option("--n", gamma_n)->check(CLI::PositiveNumber);
  add_output_flags(structure_cmd, out);

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  add_output_flags(verify_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return 2;
  }

  try {
    if (machine_cmd->parsed()) return run_machine(group, machine_kind, out);
    if (spectrum_cmd->parsed()) return run_spectrum(group, level, numeric, out);
    if (kns_cmd->parsed()) return run_kns(kns_n, q_max, kns_moments, cdf_points, out);
    if (moments_cmd->parsed()) return run_moments(group, level, m_max, with_walk, out);
    if (fix_cmd->parsed()) return run_fix(group, element, k_max, out);
    if (depth_cmd->parsed()) return run_depth(group, element, k_max, out);
    if (free_cmd->parsed()) return run_free(group, maxlen, k_max, out);
    if (zeta_cmd->parsed()) return run_zeta(group, level, limit, kns_n, q_max, order, out);
    if (walk_cmd->parsed()) return run_walk(group, steps, mc, seed, out);
    if (structure_cmd->parsed()) return run_structure(group, theorem, gamma_n, out);
    if (verify_cmd->parsed()) {
      auto results = cayley::verify::run_all(&std::cout);
      std::ostringstream table;
      int failures = cayley::verify::print_table(results, table);
      out.emit_text(table.str());
      return failures == 0 ? 0 : 1;
    }
  } catch (const cayley::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
