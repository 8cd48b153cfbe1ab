#include "latsb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "latsb/counting.hpp"
#include "latsb/schemes.hpp"
#include "latsb/search.hpp"

namespace latsb::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

unsigned parse_unsigned(std::string_view s, const std::string& what) {
  unsigned v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw std::invalid_argument("bad " + what + ": '" + std::string(s) + "'");
  return v;
}

bool is_binary_word(std::string_view s) {
  return !s.empty() && s.find_first_not_of("01") == std::string_view::npos;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// JSON number when it fits, decimal string otherwise.
nlohmann::json big_json(const BigNat& x) {
  if (x <= BigNat(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
  return x.str();
}

std::string describe(const LoadedLattice& L) {
  switch (L.kind) {
    case LoadedLattice::Kind::powerset:
      return "Pow(" + std::to_string(L.n) + ")";
    case LoadedLattice::Kind::projective:
      return "Sub(F_" + std::to_string(L.q) + "^" + std::to_string(L.n) + ")";
    case LoadedLattice::Kind::named:
    case LoadedLattice::Kind::file:
      break;
  }
  return "lattice of height " + std::to_string(L.n) + " with " + std::to_string(L.lattice().size()) + " elements";
}

std::optional<BoundParams> bound_params_for(const LoadedLattice& L, unsigned d) {
  switch (L.kind) {
    case LoadedLattice::Kind::powerset:
      return BoundParams::make(BoundFamily::powerset(), L.n, d);
    case LoadedLattice::Kind::projective:
      return BoundParams::make(BoundFamily::projective(L.q), L.n, d);
    case LoadedLattice::Kind::named:
    case LoadedLattice::Kind::file:
      if (!is_modular(L.lattice())) return std::nullopt;
      return BoundParams::for_lattice(L.lattice(), d);
  }
  return std::nullopt;
}

std::optional<HeightWindow> window_of(const RunConfig& cfg) {
  if (cfg.window.empty()) return std::nullopt;
  if (cfg.window[0] > cfg.window[1]) throw std::invalid_argument("--window needs m <= M");
  return HeightWindow{cfg.window[0], cfg.window[1]};
}

std::vector<unsigned> range_of(const std::optional<unsigned>& single, const std::vector<unsigned>& many,
                               const std::optional<unsigned>& lo, const std::optional<unsigned>& hi, const char* flag) {
  std::vector<unsigned> out = many;
  if (single) out.push_back(*single);
  if (lo || hi) {
    if (!lo || !hi) throw std::invalid_argument(std::string("--") + flag + "-min and --" + flag + "-max go together");
    if (*lo > *hi) throw std::invalid_argument(std::string("empty ") + flag + " range");
    for (unsigned v = *lo; v <= *hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string("no value for ") + flag);
  return out;
}

SearchBudget budget_of(const RunConfig& cfg) { return SearchBudget{cfg.budget_nodes, cfg.budget_secs}; }

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") out << text;
  else write_file(cfg.output, text);
}

// ---- subcommands ----

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const LoadedLattice loaded = load_lattice(cfg, MaterializationCap::from_env());
  const Lattice& L = loaded.lattice();
  out << "lattice-valid: true\n";
  out << "jordan_dedekind: " << yes_no(has_jordan_dedekind(L)) << '\n';
  out << "modular: " << yes_no(is_modular(L)) << '\n';
  out << "distributive: " << yes_no(is_distributive(L)) << '\n';
  out << "geometric: " << yes_no(is_geometric(L)) << '\n';
  out << "height: " << L.rank() << '\n';
  out << "whitney: [";
  const WhitneyTable w = whitney(L);
  for (std::size_t k = 0; k < w.counts.size(); ++k) out << (k ? "," : "") << w.counts[k];
  out << "]\n";
  return ok;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const MaterializationCap cap = MaterializationCap::from_env();
  const auto window = window_of(cfg);
  std::optional<LoadedLattice> explicit_lattice;
  std::optional<BoundFamily> family;
  if (cfg.powerset) {
    family = BoundFamily::powerset();
  } else if (cfg.projective) {
    if (cfg.q < 2) throw std::invalid_argument("q must be at least 2");
    family = BoundFamily::projective(cfg.q);
  } else {
    explicit_lattice = load_lattice(cfg, cap);
    family = BoundFamily::explicit_lattice(explicit_lattice->lattice());
  }
  const std::vector<unsigned> ns = explicit_lattice ? std::vector<unsigned>{explicit_lattice->n}
                                                    : range_of(cfg.n, {}, cfg.n_min, cfg.n_max, "n");
  const std::vector<unsigned> ds = range_of(std::nullopt, cfg.d, cfg.d_min, cfg.d_max, "d");

  std::string csv = bound_csv_header() + "\n";
  for (unsigned n : ns) {
    if (window && window->second > n) throw std::invalid_argument("height window exceeds n = " + std::to_string(n));
    for (unsigned d : ds) {
      const BoundParams p = BoundParams::make(*family, n, d);
      BoundReport r = make_bound_report(p, window, cap);
      if (cfg.oracle) {
        try {
          std::optional<LoadedLattice> built;
          RunConfig src;
          src.n = n;
          src.q = cfg.q;
          src.powerset = cfg.powerset;
          src.projective = cfg.projective;
          const Lattice* L = nullptr;
          if (explicit_lattice) {
            L = &explicit_lattice->lattice();
          } else {
            built = load_lattice(src, cap);
            L = &built->lattice();
          }
          SearchProblem problem = SearchProblem::make(*L, d, window, budget_of(cfg));
          problem.workers = cfg.workers;
          const SearchResult res = max_code(problem);
          if (res.proven_optimal) r.oracle_max = BigNat(res.best_size);
        } catch (const CapacityError&) {
        }
      }
      csv += to_csv_row(r) + "\n";
    }
  }
  emit(cfg, csv, out);
  return ok;
}

int cmd_fig5(const RunConfig& cfg, std::ostream& out) {
  const unsigned d = cfg.d.empty() ? 4 : cfg.d.front();
  if (cfg.d.size() > 1) throw std::invalid_argument("fig5 takes a single d");
  unsigned lo = 4, hi = 20;
  if (cfg.n) lo = hi = *cfg.n;
  if (cfg.n_min) lo = *cfg.n_min;
  if (cfg.n_max) hi = *cfg.n_max;
  if (lo > hi) throw std::invalid_argument("empty n range");

  std::vector<OverlayPoint> overlay;
  std::string overlay_text;
  if (!cfg.overlay.empty()) {
    overlay_text = read_file(cfg.overlay);
    overlay = parse_overlay(overlay_text);
  }

  const auto rows = fig5_rows(cfg.q, d, lo, hi, MaterializationCap::from_env());
  const std::filesystem::path csv_path = cfg.output.empty() ? std::filesystem::path("fig5.csv") : std::filesystem::path(cfg.output);
  std::filesystem::path stem = csv_path;
  stem.replace_extension();
  const std::filesystem::path gp_path = stem.string() + ".gp";
  const std::filesystem::path overlay_path = stem.string() + "_overlay.csv";

  write_file(csv_path.string(), fig5_csv(rows));
  out << "wrote " << csv_path.string() << '\n';
  if (!cfg.overlay.empty()) {
    std::string copy = "series,n,log2_size\n";
    for (const auto& p : overlay) copy += p.line + "\n";
    write_file(overlay_path.string(), copy);
    out << "wrote " << overlay_path.string() << '\n';
  }
  write_file(gp_path.string(), fig5_gnuplot(csv_path.filename().string(),
                                            cfg.overlay.empty() ? std::string() : overlay_path.filename().string(), overlay));
  out << "wrote " << gp_path.string() << '\n';
  return ok;
}

LoadedLattice scheme_lattice(const RunConfig& cfg, const SchemeFile& file) {
  const MaterializationCap cap = MaterializationCap::from_env();
  const RunConfig& header = file.source;
  if (header.powerset || header.projective || !header.name.empty()) return load_lattice(header, cap);
  const bool cli_source = cfg.powerset || cfg.projective || !cfg.name.empty() || !cfg.lattice_path.empty();
  if (cli_source) return load_lattice(cfg, cap);
  // No header and no flags: binary words of a common length are power-set elements.
  RunConfig guess;
  guess.powerset = true;
  for (const auto& e : file.elements) {
    if (!is_binary_word(e)) throw std::invalid_argument("scheme file needs a header line to say which lattice it lives in");
    if (guess.n && *guess.n != e.size()) throw std::invalid_argument("binary words of different lengths");
    guess.n = static_cast<unsigned>(e.size());
  }
  if (!guess.n) throw std::invalid_argument("empty scheme file");
  return load_lattice(guess, cap);
}

std::string names_of(const Lattice& L, std::span<const ElementId> ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + L.name(ids[i]);
  return s;
}

std::string distance_text(const std::optional<unsigned>& d) { return d ? std::to_string(*d) : std::string("undefined"); }

int cmd_scheme(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.scheme_path.empty()) throw std::invalid_argument("scheme needs --file");
  const SchemeFile file = parse_scheme_file(read_file(cfg.scheme_path));
  const LoadedLattice loaded = scheme_lattice(cfg, file);
  const Lattice& L = loaded.lattice();
  std::vector<ElementId> ids;
  for (const auto& e : file.elements) ids.push_back(loaded.parse_element(e));
  const Scheme S(L, ids);

  out << "lattice: " << describe(loaded) << '\n';
  out << "scheme: size " << S.size() << ", heights " << S.min_height() << ".." << S.max_height() << '\n';

  if (cfg.as_code) {
    if (loaded.kind != LoadedLattice::Kind::powerset) throw std::invalid_argument("--as-code reads binary words in Pow(n)");
    std::vector<std::vector<Digit>> code;
    for (const auto& e : file.elements) code.push_back(parse_binary_vector(e));
    const auto w = verify_transform(
        "support", std::span<const std::vector<Digit>>(code),
        [](const std::vector<Digit>& a, const std::vector<Digit>& b) { return hamming_distance(a, b); }, L,
        [](const std::vector<Digit>& v) { return support_transform(v); });
    out << "transform: " << w.description << ", " << w.pairs_checked << " pairs, injective " << yes_no(w.injective)
        << ", distance-preserving " << yes_no(w.distance_preserving) << '\n';
    if (w.violation) out << "violation: " << w.violation_detail << '\n';
    out << "code d: " << distance_text(w.code_min_distance) << ", scheme d: " << distance_text(w.scheme_min_distance) << '\n';
  }

  const auto before = S.min_distance_if_defined();
  if (cfg.action == "mindist") {
    if (!before) {
      err << "error: undefined minimum distance\n";
      return input_error;
    }
    out << "d: " << *before << '\n';
    return ok;
  }
  if (cfg.w.empty()) throw std::invalid_argument(cfg.action + " needs -w");
  const ElementId w = loaded.parse_element(cfg.w);
  out << "w: " << L.name(w) << " (height " << L.height(w) << ")\n";

  std::optional<PunctureResult> result;
  if (cfg.action == "puncture") {
    result = puncture(S, w);
  } else {
    ProjectionChooser chooser = cfg.seed ? ProjectionChooser::seeded(*cfg.seed) : ProjectionChooser::least_id();
    result = puncture_project(S, w, chooser);
    out << "chooser: " << chooser.describe() << '\n';
  }
  out << "images: " << names_of(L, result->images) << '\n';
  out << "image heights: " << result->scheme.min_height() << ".." << result->scheme.max_height() << '\n';
  if (result->collided) out << "collision: two elements share an image\n";
  const auto after = result->min_distance;
  if (before && after && *before == *after) {
    out << "d: " << *before << " → " << *after << " (d unchanged)\n";
  } else if (before && after) {
    out << "d: " << *before << " → " << *after << " (drop " << static_cast<int>(*before) - static_cast<int>(*after) << ")\n";
  } else {
    out << "d: " << distance_text(before) << " → " << distance_text(after) << '\n';
  }
  return ok;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const LoadedLattice loaded = load_lattice(cfg, MaterializationCap::from_env());
  const Lattice& L = loaded.lattice();
  if (cfg.d.size() != 1) throw std::invalid_argument("search takes exactly one -d");
  SearchProblem problem = SearchProblem::make(L, cfg.d.front(), window_of(cfg), budget_of(cfg));
  problem.workers = cfg.workers;
  const SearchResult r = max_code(problem);

  nlohmann::ordered_json j;
  j["best_size"] = r.best_size;
  j["proven_optimal"] = r.proven_optimal;
  j["nodes"] = r.nodes;
  j["scheme"] = nlohmann::json::array();
  for (ElementId e : r.scheme) j["scheme"].push_back(L.name(e));
  if (const auto params = bound_params_for(loaded, problem.d)) {
    const SandwichCheck c = sandwich_check(problem, r, *params);
    j["sandwich"] = {{"gv_lower", big_json(c.gv_lower)}, {"lsb", big_json(c.upper)}, {"status", c.pass ? "PASS" : "FAIL"}};
  } else {
    j["sandwich"] = {{"status", "n/a: lattice is not modular"}};
  }
  emit(cfg, j.dump(2) + "\n", out);
  return r.proven_optimal ? ok : inconclusive;
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n) throw std::invalid_argument("probe needs -n");
  if (cfg.l.empty() || cfg.d.empty()) throw std::invalid_argument("probe needs -l and -d");
  std::string csv = "q,n,l,d,bound,optimum,gap,proven_optimal,attained,trivial,nodes\n";
  bool all_proven = true;
  for (unsigned l : cfg.l) {
    for (unsigned d : cfg.d) {
      const ConjectureRow row = conjecture_probe(cfg.q, *cfg.n, l, d, budget_of(cfg), cfg.workers);
      std::ostringstream os;
      os << row.q << ',' << row.n << ',' << row.l << ',' << row.d << ',' << row.bound << ',';
      if (row.optimum) os << *row.optimum;
      os << ',';
      if (const auto g = row.gap()) os << *g;
      os << ',' << yes_no(row.proven_optimal) << ',' << yes_no(row.attained) << ',' << yes_no(row.trivial) << ','
         << row.nodes;
      csv += os.str() + "\n";
      all_proven = all_proven && row.proven_optimal;
    }
  }
  emit(cfg, csv, out);
  return all_proven ? ok : inconclusive;
}

int cmd_export(const RunConfig& cfg, std::ostream& out, bool dot) {
  const LoadedLattice loaded = load_lattice(cfg, MaterializationCap::from_env());
  emit(cfg, dot ? to_dot(loaded.lattice()) : to_json(loaded.lattice()), out);
  return ok;
}

void add_source(CLI::App* sub, RunConfig& cfg, std::vector<unsigned>& powerset_n, std::vector<CLI::Option*>& powerset_opts) {
  sub->add_option("--name", cfg.name, "named lattice: M3, N5, L1, L2");
  powerset_opts.push_back(sub->add_option("--powerset", powerset_n, "power set lattice of {1..N}")->expected(0, 1));
  sub->add_flag("--projective", cfg.projective, "subspace lattice of F_q^n");
  sub->add_option("--lattice", cfg.lattice_path, "lattice JSON file");
  sub->add_option("-q", cfg.q, "field order");
  sub->add_option("-n", cfg.n, "n");
}

}  // namespace

ElementId LoadedLattice::parse_element(std::string_view text) const {
  const std::string t(trim(text));
  if (proj) return proj->parse_element(t);
  const Lattice& L = lattice();
  if (auto id = L.find(t)) return *id;
  if (t == "O") return L.bottom();
  if (t == "I") return L.top();
  if (kind == Kind::powerset && is_binary_word(t)) {
    if (t.size() != n) throw std::invalid_argument("'" + t + "' has length " + std::to_string(t.size()) + ", expected " + std::to_string(n));
    return support_transform(parse_binary_vector(t));
  }
  throw std::invalid_argument("no element '" + t + "'");
}

LoadedLattice load_lattice(const RunConfig& cfg, const MaterializationCap& cap) {
  const int sources = (cfg.powerset ? 1 : 0) + (cfg.projective ? 1 : 0) + (cfg.name.empty() ? 0 : 1) +
                      (cfg.lattice_path.empty() ? 0 : 1);
  if (sources != 1) throw std::invalid_argument("pick exactly one of --name, --powerset, --projective, --lattice");
  LoadedLattice out;
  if (cfg.powerset) {
    if (!cfg.n) throw std::invalid_argument("--powerset needs N");
    out.kind = LoadedLattice::Kind::powerset;
    out.n = *cfg.n;
    out.plain = build_powerset_lattice(out.n, cap);
  } else if (cfg.projective) {
    if (!cfg.n) throw std::invalid_argument("--projective needs -n");
    if (!is_prime(cfg.q)) throw std::invalid_argument("q must be prime to build the lattice");
    out.kind = LoadedLattice::Kind::projective;
    out.q = cfg.q;
    out.n = *cfg.n;
    out.proj = build_projective_lattice(out.n, out.q, cap);
  } else if (!cfg.name.empty()) {
    out.kind = LoadedLattice::Kind::named;
    out.plain = build_named_lattice(cfg.name);
    out.n = out.plain->rank();
  } else {
    out.kind = LoadedLattice::Kind::file;
    out.plain = lattice_from_json(read_file(cfg.lattice_path));
    out.n = out.plain->rank();
  }
  return out;
}

std::vector<OverlayPoint> parse_overlay(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<OverlayPoint> points;
  bool header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    const std::string where = "overlay line " + std::to_string(i + 1);
    if (line.empty()) continue;
    if (!header) {
      if (line != "series,n,log2_size") throw std::invalid_argument(where + ": expected header 'series,n,log2_size'");
      header = true;
      continue;
    }
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos)
      throw std::invalid_argument(where + ": expected three fields");
    OverlayPoint p;
    p.series = std::string(trim(line.substr(0, c1)));
    if (p.series.empty()) throw std::invalid_argument(where + ": empty series name");
    p.n = parse_unsigned(trim(line.substr(c1 + 1, c2 - c1 - 1)), where + " n");
    const std::string_view v = trim(line.substr(c2 + 1));
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), p.log2_size);
    if (ec != std::errc{} || ptr != v.data() + v.size()) throw std::invalid_argument(where + ": bad log2_size");
    p.line = std::string(line);
    points.push_back(std::move(p));
  }
  if (!header) throw std::invalid_argument("overlay file is empty");
  return points;
}

std::vector<Fig5Row> fig5_rows(unsigned q, unsigned d, unsigned n_min, unsigned n_max, const MaterializationCap& cap) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const BoundFamily family = BoundFamily::projective(q);
  std::vector<Fig5Row> rows;
  for (unsigned n = n_min; n <= n_max; ++n) {
    Fig5Row row;
    row.n = n;
    row.lsb = lsb(BoundParams::make(family, n, d));
    if (is_prime(q) && projective_materializable(n, q, cap)) row.gv_lower = gv_lower(family, n, d, std::nullopt, cap);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string fig5_csv(const std::vector<Fig5Row>& rows) {
  std::ostringstream os;
  os << "n,lsb,lsb_log2,gv_lower,gv_lower_log2\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.lsb << ',' << log2_rendered(r.lsb) << ',';
    if (r.gv_lower) os << *r.gv_lower << ',' << log2_rendered(*r.gv_lower);
    else os << ',';
    os << '\n';
  }
  return os.str();
}

std::string fig5_gnuplot(const std::string& csv_name, const std::string& overlay_name, const std::vector<OverlayPoint>& overlay) {
  auto quoted = [](std::string s) {
    std::string r;
    for (char c : s)
      if (c != '\'') r += c;
    return "'" + r + "'";
  };
  std::vector<std::string> series;
  for (const auto& p : overlay)
    if (std::find(series.begin(), series.end(), p.series) == series.end()) series.push_back(p.series);

  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key top left\n"
     << "set grid\n"
     << "set xlabel 'n'\n"
     << "set ylabel 'log2 of size'\n"
     << "plot " << quoted(csv_name) << " every ::1 using 1:3 with linespoints title 'LSB', \\\n"
     << "     " << quoted(csv_name) << " every ::1 using 1:5 with linespoints title 'GV-type lower bound (not EV-GVB)'";
  for (const auto& s : series)
    os << ", \\\n     " << quoted(overlay_name) << " every ::1 using 2:(strcol(1) eq " << quoted(s)
       << " ? $3 : NaN) with points title " << quoted(s);
  os << "\npause -1\n";
  return os.str();
}

SchemeFile parse_scheme_file(std::string_view text) {
  SchemeFile file;
  bool first = true;
  for (std::string_view raw : split_lines(text)) {
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (first && line.find('=') != std::string_view::npos) {
      first = false;
      std::istringstream fields{std::string(line)};
      std::string kv;
      bool has_q = false;
      while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad scheme header field '" + kv + "'");
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "q") {
          file.source.q = parse_unsigned(value, "q");
          has_q = true;
        } else if (key == "n") {
          file.source.n = parse_unsigned(value, "n");
        } else if (key == "name") {
          file.source.name = value;
        } else {
          throw std::invalid_argument("unknown scheme header key '" + key + "'");
        }
      }
      if (file.source.name.empty()) {
        if (!file.source.n) throw std::invalid_argument("scheme header needs n");
        (has_q ? file.source.projective : file.source.powerset) = true;
      }
      continue;
    }
    first = false;
    file.elements.emplace_back(line);
  }
  if (file.elements.empty()) throw std::invalid_argument("scheme file lists no elements");
  return file;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::vector<unsigned> powerset_n;
  std::vector<CLI::Option*> powerset_opts;

  CLI::App app{"Singleton-type bounds and searches on finite lattices"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "classify a lattice");
  add_source(check, cfg, powerset_n, powerset_opts);

  auto* bounds = app.add_subcommand("bounds", "bound table as CSV");
  add_source(bounds, cfg, powerset_n, powerset_opts);
  bounds->add_option("--n-min", cfg.n_min);
  bounds->add_option("--n-max", cfg.n_max);
  bounds->add_option("-d", cfg.d, "minimum distance (repeatable)");
  bounds->add_option("--d-min", cfg.d_min);
  bounds->add_option("--d-max", cfg.d_max);
  bounds->add_option("--window", cfg.window, "height window m M")->expected(2);
  bounds->add_flag("--oracle", cfg.oracle, "fill oracle_max by exact search where the lattice can be built");
  bounds->add_option("--budget-nodes", cfg.budget_nodes);
  bounds->add_option("--budget-secs", cfg.budget_secs);
  bounds->add_option("--workers", cfg.workers);
  bounds->add_option("-o", cfg.output, "output file");

  auto* fig5 = app.add_subcommand("fig5", "bound curves over n as CSV plus a gnuplot script");
  fig5->add_option("-q", cfg.q, "field order");
  fig5->add_option("-d", cfg.d, "minimum distance");
  fig5->add_option("-n", cfg.n);
  fig5->add_option("--n-min", cfg.n_min);
  fig5->add_option("--n-max", cfg.n_max);
  fig5->add_option("--overlay", cfg.overlay, "CSV of extra points: series,n,log2_size");
  fig5->add_option("-o", cfg.output, "CSV path; the script and overlay copy go next to it");

  auto* scheme = app.add_subcommand("scheme", "minimum distance and puncturing of a scheme file");
  scheme->add_option("action", cfg.action)->required()->check(CLI::IsMember({"mindist", "puncture", "puncture-project"}));
  scheme->add_option("--file", cfg.scheme_path)->required();
  add_source(scheme, cfg, powerset_n, powerset_opts);
  scheme->add_option("-w", cfg.w, "element to puncture by");
  scheme->add_option("--seed", cfg.seed);
  scheme->add_flag("--as-code", cfg.as_code, "read binary words as a code and check the support transform");

  auto* search = app.add_subcommand("search", "largest scheme with minimum distance d");
  add_source(search, cfg, powerset_n, powerset_opts);
  search->add_option("-d", cfg.d)->required();
  search->add_option("--window", cfg.window)->expected(2);
  search->add_option("--budget-nodes", cfg.budget_nodes);
  search->add_option("--budget-secs", cfg.budget_secs);
  search->add_option("--workers", cfg.workers);
  search->add_option("-o", cfg.output);

  auto* probe = app.add_subcommand("probe", "constant-dimension optimum against [n-a, l-a]_q");
  probe->add_option("-q", cfg.q);
  probe->add_option("-n", cfg.n)->required();
  probe->add_option("-l", cfg.l)->required();
  probe->add_option("-d", cfg.d)->required();
  probe->add_option("--budget-nodes", cfg.budget_nodes);
  probe->add_option("--budget-secs", cfg.budget_secs);
  probe->add_option("--workers", cfg.workers);
  probe->add_option("-o", cfg.output);

  auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram as Graphviz DOT");
  add_source(export_dot, cfg, powerset_n, powerset_opts);
  export_dot->add_option("-o", cfg.output);

  auto* export_json = app.add_subcommand("export-json", "lattice as JSON");
  add_source(export_json, cfg, powerset_n, powerset_opts);
  export_json->add_option("-o", cfg.output);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  for (CLI::App* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  try {
    for (CLI::Option* o : powerset_opts) {
      if (o->count() == 0) continue;
      cfg.powerset = true;
      if (!powerset_n.empty() && powerset_n.front() != 0) {
        if (cfg.n && *cfg.n != powerset_n.front()) throw std::invalid_argument("--powerset and -n disagree");
        cfg.n = powerset_n.front();
      }
    }

    if (cfg.subcommand == "check") return cmd_check(cfg, out);
    if (cfg.subcommand == "bounds") return cmd_bounds(cfg, out);
    if (cfg.subcommand == "fig5") return cmd_fig5(cfg, out);
    if (cfg.subcommand == "scheme") return cmd_scheme(cfg, out, err);
    if (cfg.subcommand == "search") return cmd_search(cfg, out);
    if (cfg.subcommand == "probe") return cmd_probe(cfg, out);
    if (cfg.subcommand == "export-dot") return cmd_export(cfg, out, true);
    if (cfg.subcommand == "export-json") return cmd_export(cfg, out, false);
  } catch (const LatticeError& e) {
    err << "error: not a lattice: " << e.what() << '\n';
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  err << "error: unknown subcommand\n";
  return input_error;
}

}  // namespace latsb::cli
