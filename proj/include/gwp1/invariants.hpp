#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gwp1/symmetric.hpp"
#include "gwp1/wave.hpp"

namespace gwp1 {

struct InvariantRecord {
  std::vector<int> ks;  // sorted
  EpsLaurent value;
};

/// (g, d) -> rational part of the invariant.
using GenusDegreeTable = std::map<std::pair<int, int>, Rat>;

/// Memoizes wave_data by order for one computation.
class WaveCache {
 public:
  const WaveData& get(int order);

 private:
  std::map<int, WaveData> data_;
};

/// Truncation order used for ks: sum(k_j + 2) + n.
int default_order(const std::vector<int>& ks);

/// <tau_k> from S1 at truncation `order` (default k + 3).
InvariantRecord one_point_invariant(int k, int order = 0);

/// Coefficient of prod z_j^-(k_j+2) in S_n (n >= 2), read in `region`.
EpsLaurent sn_coefficient(const WaveData& w, const std::vector<int>& ks, const std::vector<int>& region = {});

/// S_n as a MultiSeries, truncated to the prefix floors `floors`.
MultiSeries sn_series(const WaveData& w, int n, const std::vector<int>& floors, const std::vector<int>& region = {});

/// Prefix floors sum_{s<=r} (k_(region s) + 2) for reading the target coefficient.
std::vector<int> target_floors(const std::vector<int>& ks, const std::vector<int>& region);

struct InvariantOptions {
  int order = 0;               // 0: default_order
  std::vector<int> region;     // empty: |z_1| > ... > |z_n|
  bool doubling_check = true;
};

/// <tau_k1 ... tau_kn> for n >= 2. Throws ConsistencyError when doubling the
/// truncation order changes the value.
InvariantRecord n_point_invariant(const std::vector<int>& ks, const InvariantOptions& opt = {},
                                  WaveCache* cache = nullptr);

/// Dispatches to one_point_invariant or n_point_invariant.
InvariantRecord invariant(const std::vector<int>& ks, const InvariantOptions& opt = {}, WaveCache* cache = nullptr);

GenusDegreeTable invariant_by_genus(const InvariantRecord& rec);

/// Sum over n >= 1 and ks with sum(k_j + 1) <= D of t_k1...t_kn / n! <tau_k1...tau_kn>.
MiwaPolynomial free_energy(int D);

}  // namespace gwp1
