#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seamrep/cyclotomic.hpp"
#include "seamrep/diagram.hpp"

namespace seamrep {

using Order = std::optional<UnityOrder>;

// ell | d+1; never at generic q.
bool is_critical(int d, const Order& order);

// Delta minus {d < k} when ell | k+1; all of Delta otherwise.
std::vector<int> delta0(int n, int k, const Order& order);
bool in_delta0(int n, int k, int d, const Order& order);

struct OrbitInfo {
  int d = 0;
  bool critical = false;
  std::vector<int> orbit;       // increasing, within Delta_{n,k}
  std::optional<int> d_minus;   // reflection through the mirror below, if in Delta
  std::optional<int> d_plus;    // reflection through the mirror above, if in Delta
};

// Classes of Delta_{n,k} under reflections through the mirrors d = -1 mod ell.
// k = 0 gives the Temperley-Lieb case.
std::vector<OrbitInfo> orbits(int n, int k, const Order& order);

struct CellDims {
  int d = 0;
  long long cell = 0;
  long long rad = 0;
  long long irre = 0;  // 0 outside Delta^0
};

long long radical_dimension(int n, int k, int d, const Order& order);
std::vector<CellDims> dims(int n, int k, const Order& order);

struct CellStructure {
  int d = 0;
  bool critical = false;
  bool in_delta0 = false;
  long long dim_cell = 0;
  long long dim_rad = 0;
  long long dim_irre = 0;
  long long dim_proj = 0;  // 0 outside Delta^0
  std::optional<int> d_minus;
  std::optional<int> d_plus;
  std::string cell_sequence;  // e.g. "0 -> I6 -> C4 -> I4 -> 0" or "C2 = I2"
  std::string proj_sequence;  // e.g. "0 -> C0 -> P4 -> C4 -> 0" or "P2 = C2"
};

struct StructureReport {
  int n = 0;
  int k = 0;
  Order order;
  std::vector<int> delta;
  std::vector<int> delta0;
  std::vector<std::vector<int>> orbit_classes;
  std::vector<CellStructure> cells;
  std::vector<std::vector<int>> D;  // rows delta, columns delta0
  std::vector<std::vector<int>> C;  // D^T D
  long long dim_algebra = 0;
};

StructureReport structure_report(int n, int k, const Order& order);

// Generator z of Cell^d used for cyclicity: (n+k,d)-diagram with (n+k-d)/2 nested arcs.
Diagram cyclic_generator(int n, int k, int d);
// Single (n+k,n+k)-diagram a = B x Id_k with a z = v, no loops.
Diagram lift(int n, int k, const Diagram& v, const Diagram& z);

struct BratteliRow {
  int n = 0;
  std::vector<int> nodes;      // Delta_{n,k}
  std::vector<int> excluded;   // parity-compatible d in [0, n+k] with n + d < k
  std::vector<int> critical;   // critical members of nodes
  std::vector<std::vector<int>> classes;
};

struct Bratteli {
  int k = 0;
  Order order;
  std::vector<BratteliRow> rows;
  std::vector<int> critical_columns;  // d with ell | d+1 up to n_max + k
};

Bratteli bratteli(int n_max, int k, const Order& order);
std::string bratteli_text(const Bratteli& b);
std::string bratteli_dot(const Bratteli& b);

}  // namespace seamrep
