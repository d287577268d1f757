// Command-line front end: every document the library produces is printed in
// one of three formats (json, csv, text) chosen by --format, and every
// number is exact.  Exit codes: 0 success, 1 verification failure,
// 2 inconclusive verification, 64 usage error, 65 malformed input file.

#include "dstab/delta_poly.hpp"
#include "dstab/json_io.hpp"
#include "dstab/partitions.hpp"
#include "dstab/rational.hpp"
#include "dstab/verifier.hpp"

#include "CLI11.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace dstab;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

// Distinguishes unreadable or malformed input files from usage errors.
struct InputFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string delta = "7/2";
  unsigned seed = 0;
  std::string output;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string partition_text(const Partition& p) { return Json(p).dump(); }

int parse_int_arg(const std::string& s, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (...) {
    throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
  }
  if (pos != s.size())
    throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
  return v;
}

Partition parse_partition_arg(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw std::invalid_argument("expected a partition as a JSON array of row lengths, got: " +
                                text);
  Partition p;
  for (const Json& e : j) {
    if (!e.is_number_integer() || e.get<int>() <= 0)
      throw std::invalid_argument("partition rows must be positive integers: " + text);
    p.push_back(e.get<int>());
  }
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1])
      throw std::invalid_argument("partition rows must be weakly decreasing: " + text);
  return p;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFileError("cannot read " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputFileError(path + ": not valid JSON");
  return j;
}

// A file may hold either a bare diagram or a full element.
AlgebraElement read_element_file(Family family, const std::string& path) {
  Json j = load_json_file(path);
  try {
    if (j.is_object() && j.contains("terms")) {
      AlgebraElement x = element_from_json(j);
      if (x.family != family)
        throw std::invalid_argument("element family is " +
                                    std::string(family_name(x.family)));
      return x;
    }
    return basis_element(family, diagram_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw InputFileError(path + ": " + e.what());
  }
}

// --- renderers ------------------------------------------------------------

std::string render_diagram_list(Family family, int n, const std::string& fmt) {
  const auto& basis = enumerate_diagrams(family, n);
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& d : basis) arr.push_back(to_json(d));
    return arr.dump() + "\n";
  }
  if (fmt == "csv") {
    std::string out = "index,n,blocks\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
      out += std::to_string(i) + "," + std::to_string(n) + "," +
             csv_field(to_json(basis[i]).at("blocks").dump()) + "\n";
    return out;
  }
  std::string out;
  for (const auto& d : basis) out += to_json(d).dump() + "\n";
  return out;
}

std::string render_element(const AlgebraElement& x, const std::string& fmt) {
  if (fmt == "json") return to_json(x).dump() + "\n";
  if (fmt == "csv") {
    std::string out = "coeff,diagram\n";
    for (const auto& [d, c] : x.terms)
      out += csv_field(poly_string(c)) + "," + csv_field(to_json(d).dump()) + "\n";
    return out;
  }
  if (x.terms.empty()) return "0\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& [d, c] : x.terms)
    rows.push_back({poly_string(c), to_json(d).dump()});
  return aligned(rows);
}

std::string render_hom_basis(Family family, int m, int n, const std::string& fmt) {
  const auto& basis = hom_basis(family, m, n);
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& h : basis) arr.push_back(to_json(h));
    return arr.dump() + "\n";
  }
  if (fmt == "csv") {
    std::string out = "index,diagram\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
      out += std::to_string(i) + "," + csv_field(to_json(basis[i]).dump()) + "\n";
    return out;
  }
  std::string out;
  for (const auto& h : basis) out += to_json(h).dump() + "\n";
  return out;
}

std::string render_table(const MultiplicityTable& t, const std::string& fmt) {
  if (fmt == "json") return to_json(t).dump() + "\n";
  if (fmt == "csv") {
    std::string out = "lambda,mult\n";
    for (const auto& [lambda, mult] : t.entries)
      out += csv_field(partition_text(lambda)) + "," + mult.get_str() + "\n";
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"lambda", "mult"}};
  for (const auto& [lambda, mult] : t.entries)
    rows.push_back({partition_text(lambda), mult.get_str()});
  return aligned(rows);
}

std::string rank_report_text(const RankReport& r) {
  std::string line = "family=" + std::string(family_name(r.family)) +
                     " m=" + std::to_string(r.m) + " n=" + std::to_string(r.n);
  if (r.a >= 0) line += " a=" + std::to_string(r.a);
  line += " delta=" + rational_string(r.delta0) + " rank=" + r.rank.get_str() +
          " count=" + r.count.get_str() + " agree=" + (r.agree ? "yes" : "no");
  return line;
}

std::string rank_report_csv_row(const RankReport& r) {
  return std::string(family_name(r.family)) + "," + std::to_string(r.m) + "," +
         std::to_string(r.n) + "," + (r.a >= 0 ? std::to_string(r.a) : "") + "," +
         rational_string(r.delta0) + "," + r.rank.get_str() + "," + r.count.get_str() +
         "," + (r.agree ? "true" : "false");
}

std::string render_rank_reports(const std::vector<RankReport>& reports,
                                const std::string& fmt) {
  if (fmt == "json") {
    if (reports.size() == 1) return to_json(reports.front()).dump() + "\n";
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump() + "\n";
  }
  if (fmt == "csv") {
    std::string out = "family,m,n,a,delta,rank,count,agree\n";
    for (const auto& r : reports) out += rank_report_csv_row(r) + "\n";
    return out;
  }
  std::string out;
  for (const auto& r : reports) out += rank_report_text(r) + "\n";
  return out;
}

std::string onset_text(int v) {
  if (v == kNotMeasured) return "not measured";
  if (v == kNotObserved) return "not observed";
  return std::to_string(v);
}

std::string render_stability_report(const StabilityReport& r, const std::string& fmt) {
  if (fmt == "json") return to_json(r).dump() + "\n";
  if (fmt == "csv") {
    if (!r.cells.empty()) {
      std::string out = "a,n,source_dim,target_dim,injective,surjective,vacuous\n";
      for (const auto& c : r.cells)
        out += std::to_string(c.a) + "," + std::to_string(c.n) + "," +
               c.source_dim.get_str() + "," + c.target_dim.get_str() + "," +
               (c.injective ? "true" : "false") + "," +
               (c.surjective ? "true" : "false") + "," +
               (c.vacuous ? "true" : "false") + "\n";
      return out;
    }
    std::string out = "n,lambda,mult\n";
    for (const auto& [n, table] : r.tables)
      for (const auto& [lambda, mult] : table.entries)
        out += std::to_string(n) + "," + csv_field(partition_text(lambda)) + "," +
               mult.get_str() + "\n";
    return out;
  }
  std::string out = "family=" + std::string(family_name(r.family)) +
                    " m=" + std::to_string(r.m) + " n_max=" + std::to_string(r.n_max);
  if (r.a_max >= 0) out += " a_max=" + std::to_string(r.a_max);
  out += "\n";
  auto onset_line = [&out](const char* name, int observed, int predicted) {
    if (observed == kNotMeasured && predicted == kNotMeasured) return;
    out += std::string(name) + " onset: " + onset_text(observed) + " (predicted " +
           onset_text(predicted) + ")\n";
  };
  onset_line("injectivity", r.injectivity_onset, r.predicted_injectivity);
  onset_line("surjectivity", r.surjectivity_onset, r.predicted_surjectivity);
  onset_line("stabilization", r.stabilization_onset, r.predicted_stabilization);
  if (!r.cells.empty()) {
    std::vector<std::vector<std::string>> rows{
        {"a", "n", "source", "target", "injective", "surjective"}};
    for (const auto& c : r.cells) {
      if (c.vacuous) {
        rows.push_back({std::to_string(c.a), std::to_string(c.n), "-", "-",
                        "(vacuous)", ""});
        continue;
      }
      rows.push_back({std::to_string(c.a), std::to_string(c.n),
                      c.source_dim.get_str(), c.target_dim.get_str(),
                      c.injective ? "yes" : "no", c.surjective ? "yes" : "no"});
    }
    out += aligned(rows);
  }
  for (const auto& [n, table] : r.tables) {
    out += "n=" + std::to_string(n) + ":";
    for (const auto& [lambda, mult] : table.entries)
      out += " " + partition_text(lambda) + ":" + mult.get_str();
    out += "\n";
  }
  out += std::string("conclusive=") + (r.conclusive ? "yes" : "no") + " pass=" +
         (r.pass ? "yes" : "no") + "\n";
  for (const auto& note : r.notes) out += "note: " + note + "\n";
  return out;
}

int stability_exit(const StabilityReport& r) {
  if (r.pass) return kExitOk;
  return r.conclusive ? kExitFail : kExitInconclusive;
}

void emit(const Options& opt, const std::string& doc) {
  if (opt.output.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + opt.output);
  out << doc;
}

// Safe sampling ceilings for `verify hom-rank --random`; the presentation
// cost grows with the diagram count, which explodes fastest for P.
int default_max_n(Family family) {
  switch (family) {
    case Family::TL: return 8;
    case Family::Br: return 5;
    case Family::P: return 3;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the Temperley-Lieb, Brauer, and partition "
               "diagram algebras and their stabilization behavior"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--delta", opt.delta, "loop parameter, an exact rational like 7/2")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized verification subsets")
      ->capture_default_str();
  app.add_option("--output", opt.output, "write to this file instead of stdout");

  std::string arg_family;
  int arg_m = 0, arg_n = 0, arg_a = 0;

  auto* c_enumerate = app.add_subcommand("enumerate", "list the diagram basis of the level-N algebra");
  c_enumerate->add_option("family", arg_family, "TL, Br, or P")->required();
  c_enumerate->add_option("n", arg_n, "number of strands")->required();

  std::string file_a, file_b;
  auto* c_multiply = app.add_subcommand("multiply", "multiply two elements given as JSON files");
  c_multiply->add_option("family", arg_family, "TL, Br, or P")->required();
  c_multiply->add_option("file_a", file_a, "left factor (diagram or element JSON)")->required();
  c_multiply->add_option("file_b", file_b, "right factor (diagram or element JSON)")->required();

  auto* c_hom = app.add_subcommand("hom-basis", "list the diagram basis of Hom(M, N)");
  c_hom->add_option("family", arg_family, "TL, Br, or P")->required();
  c_hom->add_option("m", arg_m, "source level")->required();
  c_hom->add_option("n", arg_n, "target level")->required();

  std::string coeff_mode, part_1, part_2, part_3;
  auto* c_coeff = app.add_subcommand(
      "coeff", "structure coefficient: lr, d (three-fold LR sum), kron, or rkron");
  c_coeff->add_option("mode", coeff_mode)->required()
      ->check(CLI::IsMember({"lr", "d", "kron", "rkron"}));
  c_coeff->add_option("lambda", part_1, "partition, e.g. \"[2,1]\"")->required();
  c_coeff->add_option("mu", part_2)->required();
  c_coeff->add_option("nu", part_3)->required();

  std::string branch_arg;
  auto* c_branch = app.add_subcommand("branch", "restrict a simple to a two-block subalgebra");
  c_branch->add_option("family", arg_family, "TL, Br, or P")->required();
  c_branch->add_option("split", branch_arg, "label and split, e.g. \"[2,1]@2+1\"")->required();

  std::string tau_lambda;
  auto* c_tau = app.add_subcommand("tau", "trivial-isotypic compression of a simple");
  c_tau->add_option("family", arg_family, "TL, Br, or P")->required();
  c_tau->add_option("n", arg_n, "level of the simple")->required();
  c_tau->add_option("a", arg_a, "target level")->required();
  c_tau->add_option("lambda", tau_lambda, "label, e.g. \"[3,1]\"")->required();

  auto* c_decompose = app.add_subcommand("decompose-M", "simple decomposition of the induced module M(m)_n");
  c_decompose->add_option("family", arg_family, "TL, Br, or P")->required();
  c_decompose->add_option("m", arg_m, "induction level")->required();
  c_decompose->add_option("n", arg_n, "ambient level")->required();

  std::string delta_arg;
  auto* c_check = app.add_subcommand("check-delta", "test a parameter value for admissibility");
  c_check->add_option("family", arg_family, "TL, Br, or P")->required();
  c_check->add_option("delta", delta_arg, "exact rational to test")->required();
  c_check->add_option("n", arg_n, "level at which to test")->required();

  auto* c_verify = app.add_subcommand("verify", "recompute a claim two ways and compare");
  c_verify->require_subcommand(1);

  int random_count = 0, random_max_n = -1;
  auto* v_rank = c_verify->add_subcommand(
      "hom-rank", "presentation rank of Hom(M, N) against the diagram count");
  v_rank->add_option("family", arg_family, "TL, Br, or P")->required();
  v_rank->add_option("m", arg_m, "source level");
  v_rank->add_option("n", arg_n, "target level");
  v_rank->add_option("--random", random_count, "check this many seeded random (m, n) pairs");
  v_rank->add_option("--max-n", random_max_n, "largest n sampled (default depends on the family)");

  auto* v_stab = c_verify->add_subcommand(
      "stab-deg", "stabilization maps: injectivity and surjectivity onsets");
  v_stab->add_option("family", arg_family, "TL, Br, or P")->required();
  v_stab->add_option("m", arg_m, "induction level")->required();
  v_stab->add_option("a_max", arg_a, "largest twist")->required();
  v_stab->add_option("n_max", arg_n, "horizon (exclusive source level)")->required();

  auto* v_mult = c_verify->add_subcommand(
      "mult-stab", "multiplicity tables of M(m)_n freeze inside the predicted range");
  v_mult->add_option("family", arg_family, "TL, Br, or P")->required();
  v_mult->add_option("m", arg_m, "induction level")->required();
  v_mult->add_option("n_max", arg_n, "largest level measured")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Rational delta0 = parse_rational(opt.delta);
    int exit_code = kExitOk;
    std::string doc;

    if (*c_enumerate) {
      doc = render_diagram_list(family_from_name(arg_family), arg_n, opt.format);
    } else if (*c_multiply) {
      const Family family = family_from_name(arg_family);
      AlgebraElement a = read_element_file(family, file_a);
      AlgebraElement b = read_element_file(family, file_b);
      AlgebraElement product;
      try {
        product = multiply(a, b);
      } catch (const std::invalid_argument& e) {
        throw InputFileError(std::string("factors do not compose: ") + e.what());
      }
      doc = render_element(product, opt.format);
    } else if (*c_hom) {
      doc = render_hom_basis(family_from_name(arg_family), arg_m, arg_n, opt.format);
    } else if (*c_coeff) {
      const Partition lambda = parse_partition_arg(part_1);
      const Partition mu = parse_partition_arg(part_2);
      const Partition nu = parse_partition_arg(part_3);
      unsigned long value = 0;
      if (coeff_mode == "lr") value = lr_coefficient(lambda, mu, nu);
      else if (coeff_mode == "d") value = brauer_branching_coefficient(lambda, mu, nu);
      else if (coeff_mode == "kron") value = kronecker_coefficient(lambda, mu, nu);
      else value = reduced_kronecker(lambda, mu, nu);
      if (opt.format == "json")
        doc = Json{{"lambda", lambda}, {"mode", coeff_mode}, {"mu", mu},
                   {"nu", nu}, {"value", value}}.dump() + "\n";
      else if (opt.format == "csv")
        doc = "mode,lambda,mu,nu,value\n" + coeff_mode + "," +
              csv_field(partition_text(lambda)) + "," + csv_field(partition_text(mu)) +
              "," + csv_field(partition_text(nu)) + "," + std::to_string(value) + "\n";
      else
        doc = std::to_string(value) + "\n";
    } else if (*c_branch) {
      const Family family = family_from_name(arg_family);
      const std::size_t at = branch_arg.find('@');
      const std::size_t plus = branch_arg.find('+', at == std::string::npos ? 0 : at);
      if (at == std::string::npos || plus == std::string::npos)
        throw std::invalid_argument(
            "branch argument must look like \"[2,1]@2+1\": " + branch_arg);
      const Partition lambda = parse_partition_arg(branch_arg.substr(0, at));
      const int e = parse_int_arg(branch_arg.substr(at + 1, plus - at - 1), "branch");
      const int f = parse_int_arg(branch_arg.substr(plus + 1), "branch");
      const SimpleLabel top{family, e + f, lambda};
      if (!label_valid(top))
        throw std::invalid_argument("no simple with label " + partition_text(lambda) +
                                    " at level " + std::to_string(e + f));
      Json entries = Json::array();
      std::vector<std::vector<std::string>> rows{{"mu", "nu", "mult"}};
      std::string csv = "mu,nu,mult\n";
      for (const SimpleLabel& mu : simple_labels(family, e)) {
        for (const SimpleLabel& nu : simple_labels(family, f)) {
          const unsigned long c = restriction_multiplicity(top, mu, nu);
          if (c == 0) continue;
          entries.push_back(Json{{"mu", mu.lambda}, {"mult", c}, {"nu", nu.lambda}});
          rows.push_back({partition_text(mu.lambda), partition_text(nu.lambda),
                          std::to_string(c)});
          csv += csv_field(partition_text(mu.lambda)) + "," +
                 csv_field(partition_text(nu.lambda)) + "," + std::to_string(c) + "\n";
        }
      }
      if (opt.format == "json")
        doc = Json{{"e", e}, {"entries", entries}, {"f", f},
                   {"family", family_name(family)}, {"lambda", lambda}}.dump() + "\n";
      else if (opt.format == "csv") doc = csv;
      else doc = aligned(rows);
    } else if (*c_tau) {
      const Family family = family_from_name(arg_family);
      const SimpleLabel top{family, arg_n, parse_partition_arg(tau_lambda)};
      if (!label_valid(top))
        throw std::invalid_argument("no simple with label " + tau_lambda +
                                    " at level " + std::to_string(arg_n));
      Json entries = Json::array();
      std::vector<std::vector<std::string>> rows{{"mu", "mult"}};
      std::string csv = "mu,mult\n";
      for (const SimpleLabel& mu : simple_labels(family, arg_a)) {
        const unsigned long c = tau_simple_multiplicity(top, mu);
        if (c == 0) continue;
        entries.push_back(Json{{"mu", mu.lambda}, {"mult", c}});
        rows.push_back({partition_text(mu.lambda), std::to_string(c)});
        csv += csv_field(partition_text(mu.lambda)) + "," + std::to_string(c) + "\n";
      }
      if (opt.format == "json")
        doc = Json{{"a", arg_a}, {"entries", entries}, {"family", family_name(family)},
                   {"lambda", top.lambda}, {"n", arg_n}}.dump() + "\n";
      else if (opt.format == "csv") doc = csv;
      else doc = aligned(rows);
    } else if (*c_decompose) {
      doc = render_table(decompose_M(family_from_name(arg_family), arg_m, arg_n),
                         opt.format);
    } else if (*c_check) {
      const Family family = family_from_name(arg_family);
      const Rational value = parse_rational(delta_arg);
      const ParameterStatus st = check_parameter(family, value, arg_n);
      if (opt.format == "json")
        doc = Json{{"admissible", st.admissible}, {"delta", rational_string(value)},
                   {"family", family_name(family)}, {"n", arg_n},
                   {"reason", st.reason}}.dump() + "\n";
      else if (opt.format == "csv")
        doc = "admissible,reason\n" + std::string(st.admissible ? "true" : "false") +
              "," + csv_field(st.reason) + "\n";
      else doc = st.admissible ? "admissible\n" : "excluded: " + st.reason + "\n";
    } else if (*v_rank) {
      const Family family = family_from_name(arg_family);
      std::vector<RankReport> reports;
      if (random_count > 0) {
        const int max_n = random_max_n >= 0 ? random_max_n : default_max_n(family);
        std::mt19937 gen(opt.seed);
        std::uniform_int_distribution<int> pick_n(0, max_n);
        for (int i = 0; i < random_count; ++i) {
          const int n = pick_n(gen);
          const int m = std::uniform_int_distribution<int>(0, n)(gen);
          reports.push_back(hom_rank_report(family, m, n, delta0));
        }
      } else if (v_rank->count("m") > 0 && v_rank->count("n") > 0) {
        reports.push_back(hom_rank_report(family, arg_m, arg_n, delta0));
      } else {
        throw std::invalid_argument("hom-rank needs M and N, or --random COUNT");
      }
      bool all_agree = true;
      for (const auto& r : reports) all_agree = all_agree && r.agree;
      exit_code = all_agree ? kExitOk : kExitFail;
      doc = render_rank_reports(reports, opt.format);
    } else if (*v_stab) {
      const StabilityReport r = measure_stability_degrees(
          family_from_name(arg_family), arg_m, arg_a, arg_n, delta0);
      exit_code = stability_exit(r);
      doc = render_stability_report(r, opt.format);
    } else if (*v_mult) {
      const StabilityReport r =
          verify_multiplicity_stability(family_from_name(arg_family), arg_m, arg_n);
      exit_code = stability_exit(r);
      doc = render_stability_report(r, opt.format);
    }

    emit(opt, doc);
    return exit_code;
  } catch (const InputFileError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFail;
  }
}
