#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcst/exact.hpp"
#include "vcst/problems.hpp"

namespace vcst {

// --- instance files ---------------------------------------------------------------

enum class InstanceKind { Vcst, Cds, Activation, Nws, SetCover, GridSteiner };

std::string to_string(InstanceKind k);
// Accepts the canonical lower-case names ("vcst", "cds", "activation",
// "nws", "set-cover", "grid-steiner"); anything else raises
// InvalidInstanceError.
InstanceKind instance_kind_from_string(const std::string& s);

// In-memory form of an instance file.  Serialization is canonical — keys
// sorted, two-space indent, weights/lengths/coords/levels as exact decimal
// strings — so saving a loaded file reproduces it byte for byte.
struct InstanceFile {
  int schema = 1;
  InstanceKind kind = InstanceKind::Vcst;
  std::string family;      // generator family, empty for hand-written files
  std::uint64_t seed = 0;  // generator seed
  GraphData graph;         // unused (n == 0) for set-cover files
  std::vector<int> terminals;
  // activation payload
  std::vector<Fixed> levels;
  std::vector<std::vector<std::uint64_t>> tables;
  // set-cover payload
  int universe = 0;
  std::vector<WeightedSet> sets;
};

// Canonical JSON bytes (ends with a newline).
std::string instance_to_text(const InstanceFile& f);
// Parses and structurally validates one instance; malformed JSON, an
// unknown schema version, or out-of-range indices raise
// InvalidInstanceError.
InstanceFile instance_from_text(const std::string& text);

void save_instance(const InstanceFile& f, const std::string& path);
InstanceFile load_instance(const std::string& path);

// Typed views.  Each checks the file kind, builds the graph, and lets the
// instance constructors run their own validation.
VcstInstance as_vcst(const InstanceFile& f);
CdsInstance as_cds(const InstanceFile& f);
NwsInstance as_nws(const InstanceFile& f);
ActivationInstance as_activation(const InstanceFile& f);
// Edge-weighted Steiner payload: the returned graph carries the lengths,
// the file's terminals are the Steiner terminals.
Graph as_grid_steiner(const InstanceFile& f);
std::pair<int, std::vector<WeightedSet>> as_set_cover(const InstanceFile& f);

// Copies a constructed graph back into plain data (for building files out
// of solver-side objects).
GraphData graph_to_data(const Graph& g);

// --- benchmark rows ----------------------------------------------------------------

// One CSV row of a benchmark run.  `ratio` must be present exactly when
// `opt` is, and may not fall below 1 - 1e-9 (a solver beating the exact
// optimum is an invariant violation, not luck).
struct BenchRow {
  std::string instance_id;
  int n = 0;
  int m = 0;
  InstanceKind kind = InstanceKind::Vcst;
  std::string algorithm;
  Fixed objective;
  std::optional<Fixed> opt;
  std::optional<double> ratio;
  std::string certs = "-";  // compact certificate flags, "-" when none apply
  std::int64_t wall_ms = 0;
};

// "instance_id,n,m,kind,algorithm,objective,opt,ratio,certs,wall_ms"
std::string bench_csv_header();
// One line without trailing newline; validates the ratio invariants.
std::string bench_csv_row(const BenchRow& row);

}  // namespace vcst
