// Command-line front end: geography charts, family reports, Newton tables,
// Chow-ring reduction, 2-ray game traces, the curated nonrigid table and
// determinantal numerology for plane-curve double covers.

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dp3/json_io.hpp"

namespace {

using dp3::Int;
using dp3::Json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::vector<std::string> tokens;
  size_t i = 0;

  bool done() const { return i >= tokens.size(); }
  std::string peek() const { return done() ? "" : tokens[i]; }
  std::string next() {
    if (done()) throw CliError("missing argument");
    return tokens[i++];
  }
};

bool looks_like_int(const std::string& s) {
  if (s.empty()) return false;
  size_t k = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

Int parse_int(const std::string& s) {
  if (!looks_like_int(s)) throw CliError("expected an integer, got '" + s + "'");
  return std::stoll(s);
}

// Splits "3:-4" into the class 3M-4L.
dp3::DivClass parse_class(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw CliError("expected a class as m:l (e.g. 3:-4 for 3M-4L), got '" + s + "'");
  return {parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
}

std::vector<Int> parse_csv_ints(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw CliError("expected a comma-separated integer list");
  return out;
}

struct Output {
  std::optional<std::string> path;
  void write(const std::string& doc) const {
    if (!path) {
      std::cout << doc;
      return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw CliError("cannot open output file " + *path);
    f << doc;
  }
};

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw CliError("unsupported format '" + fmt + "' for this subcommand");
}

dp3::FamilyParams read_family_positionals(Args& args) {
  Int v[4];
  for (Int& x : v) {
    std::string t = args.next();
    if (t == "--") t = args.next();
    x = parse_int(t);
  }
  dp3::FamilyParams fam{v[0], v[1], v[2], v[3]};
  if (!(0 <= fam.a && fam.a <= fam.b && fam.b <= fam.c))
    throw CliError("family twists must satisfy 0 <= a <= b <= c");
  return fam;
}

std::string matrix_block(const dp3::WeightMatrix& mat) {
  std::ostringstream out;
  auto rows = mat.display_rows();
  for (const auto& row : rows) {
    out << " ";
    for (Int x : row) {
      std::string s = std::to_string(x);
      out << std::string(s.size() >= 4 ? 1 : 4 - s.size(), ' ') << s;
    }
    out << "\n";
  }
  out << " ";
  for (const auto& name : mat.names) {
    out << std::string(name.size() >= 4 ? 1 : 4 - name.size(), ' ') << name;
  }
  out << "\n";
  return out.str();
}

int cmd_geography(Args& args, Output& out) {
  dp3::GeographyWindow w;
  std::string fmt = "tsv";
  while (!args.done()) {
    std::string t = args.next();
    if (t == "--n-min") w.n_min = parse_int(args.next());
    else if (t == "--n-max") w.n_max = parse_int(args.next());
    else if (t == "--d-max") w.d_max = parse_int(args.next());
    else if (t == "--format") fmt = args.next();
    else throw CliError("unknown option '" + t + "'");
  }
  check_format(fmt, {"tsv", "svg", "json"});
  auto points = dp3::enumerate_geography(w);
  if (fmt == "tsv") out.write(dp3::render_tsv(points));
  else if (fmt == "svg") out.write(dp3::render_svg(points, w));
  else out.write(dp3::geography_json(points).dump(2) + "\n");
  return 0;
}

int cmd_family(Args& args, Output& out) {
  dp3::FamilyParams fam = read_family_positionals(args);
  std::string fmt = "text";
  while (!args.done()) {
    std::string t = args.next();
    if (t == "--format") fmt = args.next();
    else throw CliError("unknown option '" + t + "'");
  }
  check_format(fmt, {"text", "json"});

  auto adm = dp3::admissible(fam);
  std::ostringstream doc;
  Json j = dp3::family_report_json(fam);
  doc << "family " << fam.str() << ", d = " << fam.d() << ": "
      << (adm.ok ? "admissible" : "not admissible") << "\n";
  if (!adm.ok) {
    doc << "  reason: " << adm.reason << "\n";
  } else {
    auto mk = dp3::anticanonical(fam);
    auto k2 = dp3::canonical_square(fam);
    auto sigma = dp3::sigma_position(fam);
    auto table = dp3::newton_table(fam);
    doc << "-K = " << mk.str() << "\n";
    doc << "-K . Gamma = " << dp3::anticanonical_dot_gamma(fam) << "\n";
    doc << "K^2 = " << k2.cycle.str() << " ("
        << (k2.interior ? "interior of the Mori cone" : "not interior");
    if (!k2.iff_known) doc << "; sufficient direction only for n >= 0";
    doc << ")\n";
    doc << "sigma position: " << dp3::to_string(sigma) << " (margin "
        << dp3::sigma_margin(fam) << ")\n";
    doc << "newton table: " << table.rows.size() << " monomials";
    if (!table.rows.empty()) {
      doc << ", by coefficient degree:";
      for (const auto& [deg, monos] : table.grouped()) doc << " " << deg << ":" << monos.size();
      doc << "; val(F) = " << dp3::valuation(table);
    }
    doc << "\n";
  }
  out.write(fmt == "json" ? j.dump(2) + "\n" : doc.str());
  return 0;
}

int cmd_newton(Args& args, Output& out) {
  dp3::FamilyParams fam = read_family_positionals(args);
  std::string fmt = "text";
  dp3::DivisibilityProfile profile;
  while (!args.done()) {
    std::string t = args.next();
    if (t == "--format") fmt = args.next();
    else if (t == "--profile") {
      std::ifstream f(args.next());
      if (!f) throw CliError("cannot read profile file");
      Json pj = Json::parse(f, nullptr, true);
      profile = dp3::profile_from_json(pj);
    } else throw CliError("unknown option '" + t + "'");
  }
  check_format(fmt, {"text", "json"});

  auto table = dp3::newton_table(fam);
  if (fmt == "json") {
    Json j = dp3::to_json(table);
    if (!table.rows.empty()) j["val"] = dp3::valuation(table, profile);
    out.write(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream doc;
  doc << "newton table for X in |" << dp3::DivClass{3, fam.n}.str() << "| on "
      << dp3::ambient_scroll(fam).str() << "\n";
  doc << "deg_uv  monomials\n";
  for (const auto& [deg, monos] : table.grouped()) {
    doc << deg << "\t";
    for (size_t i = 0; i < monos.size(); ++i) doc << (i ? " " : "") << monos[i].str();
    doc << "\n";
  }
  if (!profile.empty()) {
    doc << "profile:";
    for (const auto& [m, p] : profile) doc << " u^" << p << "|" << m.str();
    doc << "\n";
  }
  if (!table.rows.empty()) doc << "val(F) = " << dp3::valuation(table, profile) << "\n";
  out.write(doc.str());
  return 0;
}

int cmd_chow(Args& args, Output& out) {
  std::vector<Int> twists;
  int base_dim = 1;
  std::string expr_text;
  while (!args.done()) {
    std::string t = args.next();
    if (t == "--scroll") twists = parse_csv_ints(args.next());
    else if (t == "--base-dim") base_dim = static_cast<int>(parse_int(args.next()));
    else if (t == "--expr") expr_text = args.next();
    else throw CliError("unknown option '" + t + "'");
  }
  if (twists.empty() || expr_text.empty())
    throw CliError("chow needs --scroll A0,A1,... and --expr \"...\"");
  dp3::StandardScroll scroll{base_dim, twists};
  dp3::ScrollRing ring(scroll);
  dp3::ChowExpr expr = dp3::ChowExpr::parse(expr_text);
  auto red = ring.reduce(expr);
  std::ostringstream doc;
  doc << scroll.str() << ", dim " << ring.dim() << "\n";
  if (red.number) doc << expr_text << " = " << *red.number << "\n";
  else doc << expr_text << " = " << red.normal.str() << " (normal form)\n";
  out.write(doc.str());
  return 0;
}

int cmd_link(Args& args, Output& out) {
  dp3::FamilyParams fam = read_family_positionals(args);
  std::string fmt = "text";
  std::vector<dp3::DivClass> extensions;
  while (!args.done()) {
    std::string t = args.next();
    if (t == "--extend") extensions.push_back(parse_class(args.next()));
    else if (t == "--format") fmt = args.next();
    else throw CliError("unknown option '" + t + "'");
  }
  check_format(fmt, {"text", "json"});
  dp3::LinkTrace tr = dp3::trace_link(fam, extensions);
  if (fmt == "json") {
    out.write(dp3::to_json(tr).dump(2) + "\n");
    return 0;
  }
  std::ostringstream doc;
  doc << "2-ray game for X in |" << dp3::DivClass{3, fam.n}.str() << "| on "
      << dp3::ambient_scroll(fam).str();
  if (!extensions.empty()) {
    doc << " extended by";
    for (const auto& e : extensions) doc << " " << e.str();
  }
  doc << "\n";
  doc << "ambient weight matrix (rows: M-weights / L-weights):\n" << matrix_block(tr.ambient);
  doc << "-K = " << tr.anticanonical.str() << "\n";
  for (const auto& s : tr.steps) {
    doc << "wall " << s.wall.str() << ": " << dp3::to_string(s.kind);
    if (&s == &tr.steps.front()) doc << " (-K.Gamma = " << s.k_pairing << ")";
    doc << "; blocks {";
    for (size_t i = 0; i < s.before_block.size(); ++i) doc << (i ? "," : "") << s.before_block[i];
    doc << "} | {";
    for (size_t i = 0; i < s.after_block.size(); ++i) doc << (i ? "," : "") << s.after_block[i];
    doc << "}\n";
  }
  doc << "terminal " << tr.terminal.ray.str() << ": far block {";
  for (size_t i = 0; i < tr.terminal.far_block.size(); ++i)
    doc << (i ? "," : "") << tr.terminal.far_block[i];
  doc << "} (" << tr.terminal.far_block.size()
      << (tr.terminal.far_block.size() == 1 ? " column) -> " : " columns) -> ")
      << tr.terminal.heuristic << "\n";
  doc << "sections of k*edge, k=1..3:";
  for (Int c : tr.terminal.section_counts) doc << " " << c;
  doc << "\n";
  for (const auto& c : tr.curated) doc << "curated: " << c << "\n";
  out.write(doc.str());
  return 0;
}

int cmd_table2(Args& args, Output& out) {
  bool verify = false;
  std::string fmt = "text";
  while (!args.done()) {
    std::string t = args.next();
    if (t == "--verify") verify = true;
    else if (t == "--format") fmt = args.next();
    else throw CliError("unknown option '" + t + "'");
  }
  check_format(fmt, {"text", "json"});
  const auto& rows = dp3::nonrigid_table();
  if (fmt == "json") {
    Json j = Json::array();
    for (const auto& r : rows) {
      Json rj = dp3::to_json(r);
      if (verify) {
        auto mu = dp3::verify_mu(r);
        auto fw = dp3::verify_first_wall(r);
        rj["verify"] = Json{{"mu_ok", mu.ok},
                            {"edge", dp3::to_json(mu.edge)},
                            {"expected", dp3::to_json(mu.expected)},
                            {"first_wall_ok", fw.ok},
                            {"k_gamma", fw.k_gamma}};
      }
      j.push_back(rj);
    }
    out.write(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream doc;
  bool all_ok = true;
  for (const auto& r : rows) {
    doc << "no. " << r.id << ": X in |" << dp3::DivClass{3, r.fam.n}.str() << "| on "
        << dp3::ambient_scroll(r.fam).str() << ", mu = " << r.mu
        << (r.special_only ? " (special members)" : "") << "\n";
    doc << "  link: " << r.link_moves << "\n";
    doc << "  other model: " << r.other_model << (r.other_model_uncertain ? " (uncertain)" : "")
        << "\n";
    if (!r.extensions.empty()) {
      doc << "  unprojection classes:";
      for (size_t i = 0; i < r.extensions.size(); ++i)
        doc << " " << r.extension_names[i] << " in " << r.extensions[i].str();
      if (r.extensions_reconstructed) doc << " (reconstructed)";
      doc << "\n";
    }
    if (!r.singular_member_equation.empty())
      doc << "  singularity on the special member: " << r.singular_member_equation << "\n";
    if (r.other_model_scroll)
      doc << "  other model ambient: X' in |" << r.other_model_class << "| in the weighted scroll\n"
          << matrix_block(*r.other_model_scroll);
    if (verify) {
      auto mu = dp3::verify_mu(r);
      auto fw = dp3::verify_first_wall(r);
      all_ok = all_ok && mu.ok && fw.ok;
      doc << "  verify: -" << r.mu << "K-L = " << mu.expected.str() << ", mobile edge = "
          << mu.edge.str() << (mu.ok ? " [ok]" : " [MISMATCH]") << "; first wall " << fw.opening
          << " vs -K.Gamma = " << fw.k_gamma << (fw.ok ? " [ok]" : " [MISMATCH]") << "\n";
    }
  }
  if (verify) doc << (all_ok ? "all rows verified\n" : "VERIFICATION FAILURES\n");
  out.write(doc.str());
  return verify && !all_ok ? 1 : 0;
}

int cmd_theta(Args& args, Output& out) {
  Int degree = -1;
  int e = -1;
  std::map<Int, Int> overrides;
  std::optional<std::vector<Int>> partition;
  std::string fmt = "text";
  while (!args.done()) {
    std::string t = args.next();
    if (t == "--degree") degree = parse_int(args.next());
    else if (t == "--e") e = static_cast<int>(parse_int(args.next()));
    else if (t == "--p") {
      std::string kv = args.next();
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw CliError("--p expects N=V");
      overrides[parse_int(kv.substr(0, eq))] = parse_int(kv.substr(eq + 1));
    } else if (t == "--partition") partition = parse_csv_ints(args.next());
    else if (t == "--format") fmt = args.next();
    else throw CliError("unknown option '" + t + "'");
  }
  check_format(fmt, {"text", "json"});
  if (degree < 0 || e < 0) throw CliError("theta needs --degree D and --e E");

  dp3::DetFormat fmt_out;
  std::vector<Int> h0;
  if (partition) {
    fmt_out = dp3::format_from_partition(degree, e, *partition);
  } else {
    dp3::CoverSpec spec{degree, e, overrides};
    h0 = dp3::h0_table(spec, degree + 3);
    fmt_out = dp3::derive_format(spec);
  }
  Int n_max = degree + 3;
  auto series = dp3::hilbert_series(fmt_out, n_max);
  auto moduli = dp3::moduli_count(fmt_out);

  if (fmt == "json") {
    out.write(dp3::theta_report_json(degree, e, h0, fmt_out, series, moduli).dump(2) + "\n");
    return 0;
  }
  std::ostringstream doc;
  doc << "plane curve of degree " << degree << ", lambda^2 = O"
      << (e == 1 ? "(-1)" : "") << "\n";
  if (!h0.empty()) {
    doc << "h0(lambda(n)), n=0.." << degree + 3 << ":";
    for (Int v : h0) doc << " " << v;
    doc << "\n";
  }
  doc << "format: " << fmt_out.size() << "x" << fmt_out.size()
      << " symmetric, partition " << fmt_out.partition_str() << "\n";
  doc << "entry degrees:\n";
  for (const auto& row : fmt_out.entry_matrix()) {
    doc << " ";
    for (Int x : row) doc << " " << x;
    doc << "\n";
  }
  auto join = [&](const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  doc << "generator degrees r_i: " << join(fmt_out.generator_degrees()) << "\n";
  doc << "relation degrees  l_i: " << join(fmt_out.relation_degrees()) << "\n";
  doc << "hilbert series, n=0.." << n_max << ": " << join(series) << "\n";
  doc << "moduli: params " << moduli.params << ", gauge " << moduli.gauge << ", family "
      << moduli.family_dim << "; all curves of degree " << degree << ": "
      << moduli.all_curves_dim << "\n";
  out.write(doc.str());
  return 0;
}

int usage() {
  std::cerr
      << "usage: dp3 <subcommand> [args]\n"
         "  geography [--n-min I] [--n-max I] [--d-max I] [--format tsv|svg|json]\n"
         "  family N A B C [--format text|json]\n"
         "  newton N A B C [--profile FILE] [--format text|json]\n"
         "  chow --scroll A0,A1,... [--base-dim K] --expr \"...\"\n"
         "  link N A B C [--extend m:l ...] [--format text|json]\n"
         "  table2 [--verify] [--format text|json]\n"
         "  theta --degree D --e E [--p N=V ...] [--partition P1,P2,...] [--format text|json]\n"
         "Negative positional integers may be escaped with '--', e.g. dp3 family -- -2 1 2 2.\n"
         "Global option: --output FILE writes the document to a file.\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  Output out;
  for (int i = 1; i < argc; ++i) args.tokens.emplace_back(argv[i]);
  // Extract the global output flag wherever it appears.
  for (size_t i = 0; i + 1 < args.tokens.size(); ++i) {
    if (args.tokens[i] == "--output") {
      out.path = args.tokens[i + 1];
      args.tokens.erase(args.tokens.begin() + i, args.tokens.begin() + i + 2);
      break;
    }
  }
  if (args.done()) return usage();
  std::string cmd = args.next();
  try {
    if (cmd == "geography") return cmd_geography(args, out);
    if (cmd == "family") return cmd_family(args, out);
    if (cmd == "newton") return cmd_newton(args, out);
    if (cmd == "chow") return cmd_chow(args, out);
    if (cmd == "link") return cmd_link(args, out);
    if (cmd == "table2") return cmd_table2(args, out);
    if (cmd == "theta") return cmd_theta(args, out);
    if (cmd == "--help" || cmd == "-h" || cmd == "help") return usage();
    std::cerr << "dp3: unknown subcommand '" << cmd << "'\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "dp3: " << ex.what() << "\n";
    return 1;
  }
}
