#ifndef LATSB_CLI_HPP
#define LATSB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latsb/bounds.hpp"
#include "latsb/lattice.hpp"
#include "latsb/projective.hpp"

namespace latsb::cli {

enum ExitCode : int { ok = 0, input_error = 2, inconclusive = 3 };

/// Everything the subcommands read, filled in by the argument parser.
struct RunConfig {
  std::string subcommand;

  // lattice source; exactly one of these is used
  std::string name;                     // --name M3|N5|L1|L2
  bool powerset = false;                // --powerset [N]; N lands in n
  bool projective = false;              // --projective
  std::string lattice_path;             // --lattice FILE.json

  unsigned q = 2;
  std::optional<unsigned> n;
  std::optional<unsigned> n_min, n_max;
  std::vector<unsigned> d;
  std::optional<unsigned> d_min, d_max;
  std::vector<unsigned> l;
  std::vector<unsigned> window;         // empty or {m, M}

  std::string output;                   // -o
  std::string overlay;                  // --overlay
  std::string scheme_path;              // scheme --file
  std::string action;                   // scheme action
  std::string w;                        // scheme -w
  bool as_code = false;
  bool oracle = false;

  std::optional<std::uint64_t> seed;
  std::uint64_t budget_nodes = 10'000'000;
  double budget_secs = 60.0;
  int workers = 0;
};

/// A lattice picked on the command line, with the family it belongs to.
struct LoadedLattice {
  enum class Kind { powerset, projective, named, file };

  Kind kind = Kind::file;
  unsigned q = 0;
  unsigned n = 0;
  std::optional<ProjectiveLattice> proj;
  std::optional<Lattice> plain;

  const Lattice& lattice() const { return proj ? proj->lattice : *plain; }
  /// Element from its textual descriptor: subspace rows, a binary vector for
  /// the power set, an element name otherwise; "O" and "I" always work.
  ElementId parse_element(std::string_view text) const;
};

LoadedLattice load_lattice(const RunConfig& cfg, const MaterializationCap& cap);

/// Overlay points for fig5: header "series,n,log2_size", one point per line.
struct OverlayPoint {
  std::string series;
  unsigned n = 0;
  double log2_size = 0.0;
  std::string line;  // as read
};

/// Throws std::invalid_argument with the line number on malformed input.
std::vector<OverlayPoint> parse_overlay(std::string_view text);

struct Fig5Row {
  unsigned n = 0;
  BigNat lsb;
  std::optional<BigNat> gv_lower;
};

std::vector<Fig5Row> fig5_rows(unsigned q, unsigned d, unsigned n_min, unsigned n_max, const MaterializationCap& cap);
std::string fig5_csv(const std::vector<Fig5Row>& rows);
std::string fig5_gnuplot(const std::string& csv_name, const std::string& overlay_name, const std::vector<OverlayPoint>& overlay);

/// Scheme file: an optional header line ("q=2 n=3", "n=4" or "name=M3"), then
/// one element descriptor per line. '#' starts a comment.
struct SchemeFile {
  RunConfig source;  // lattice part only
  std::vector<std::string> elements;
};

SchemeFile parse_scheme_file(std::string_view text);

/// Runs one command line. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latsb::cli

#endif  // LATSB_CLI_HPP
