#ifndef K3ENUM_CURVECOUNTS_HPP
#define K3ENUM_CURVECOUNTS_HPP

#include <optional>
#include <vector>

#include "k3enum/linalg.hpp"
#include "k3enum/rational.hpp"
#include "k3enum/series.hpp"
#include "k3enum/w_basis.hpp"

namespace k3enum {

/// Dense table indexed by genus 0..g_max and a second index
/// first_column..last_column. Entries default to zero.
class GenusTable {
 public:
  GenusTable() = default;
  GenusTable(int g_max, int first_column, int last_column);

  int g_max() const { return static_cast<int>(entries_.rows()) - 1; }
  int first_column() const { return first_column_; }
  int last_column() const { return first_column_ + static_cast<int>(entries_.cols()) - 1; }

  /// Throws std::out_of_range outside the table.
  const Rational& operator()(int g, int column) const;
  Rational& operator()(int g, int column);

  bool is_integral() const;
  const RationalMatrix& matrix() const { return entries_; }

  friend bool operator==(const GenusTable& a, const GenusTable& b) {
    return a.first_column_ == b.first_column_ && a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  void check(int g, int column) const;

  int first_column_ = 0;
  RationalMatrix entries_;
};

/// r_{g,h}, h >= 0.
class BpsTable : public GenusTable {
 public:
  BpsTable() = default;
  BpsTable(int g_max, int h_max) : GenusTable(g_max, 0, h_max) {}
  int h_max() const { return last_column(); }
};

/// r_{g,k} for the class k alpha, alpha primitive, k >= 1.
class DivisibleBpsTable : public GenusTable {
 public:
  DivisibleBpsTable() = default;
  DivisibleBpsTable(int g_max, int k_max) : GenusTable(g_max, 1, k_max) {}
  int k_max() const { return last_column(); }
};

/// R_{g,k}: coefficient of u^(2g-2) v^(k alpha) in the Gromov-Witten potential.
class GwPotentialTable : public GenusTable {
 public:
  GwPotentialTable() = default;
  GwPotentialTable(int g_max, int k_max) : GenusTable(g_max, 1, k_max) {}
  int k_max() const { return last_column(); }
};

/// Genus 0 row: r_{0,h} = coefficient of q^h in prod (1 - q^n)^-24.
BpsTable yau_zaslow(int h_max);

/// r_{g,h} from the z-slices of prod (1-q^n)^-20 (1-zq^n)^-2 (1-z^-1 q^n)^-2
/// written in powers of w' = z - 2 + 1/z. Throws std::logic_error if a slice
/// is asymmetric or an entry is not an integer.
BpsTable kkv_table(int g_max, int h_max);

/// eta^-24 (sum n sigma_1(n) q^n)^g, i.e. eta^-24 (-1/24 q d/dq E2)^g;
/// min exponent -1, known below q_trunc.
LaurentSeries bryan_leung(int genus, int q_trunc);

/// e(P_n(S,h)) for 0 <= h <= h_max and n <= n_max. Integers.
class PairsEulerTable {
 public:
  PairsEulerTable(int h_max, int n_max);

  int h_max() const { return static_cast<int>(rows_.size()) - 1; }
  int n_max() const { return n_max_; }

  /// Zero for n < 1 - h. Throws std::out_of_range for h or n beyond the window.
  Integer at(int n, int h) const;
  void set(int n, int h, Integer value);

 private:
  int n_max_;
  std::vector<std::vector<Integer>> rows_;  // row h starts at n = 1 - h
};

/// Coefficient of y^n in (y/(1-y)^2) * (q^h slice of the (1 - y q^n) product).
/// Throws std::invalid_argument for h_max < 0 or n_max < 1.
PairsEulerTable kawai_yoshioka(int h_max, int n_max);

/// w Z_{P,h}: the q^h slice of prod (1-q^n)^-20 (1+yq^n)^-2 (1+y^-1 q^n)^-2
/// in powers of w = y + 2 + 1/y. Throws std::out_of_range unless 0 <= h < q_trunc.
WPolynomial pairs_partition_w(int h, int q_trunc);

/// w Z_{GW,h} = sum_g r_{g,h} w^g. Throws std::invalid_argument if the table
/// does not cover genus 0..h at h.
WPolynomial gw_partition_w(int h, const BpsTable& table);

/// sum_n (-1)^(n-1) e(P_n(S,h)) y^n over the table window.
LaurentPoly signed_pairs_series(const PairsEulerTable& table, int h);

/// First h at which w * signed_pairs_series disagrees with the (1 + y q^n)
/// slice on the exponents the window determines, i.e. y^-h .. y^(n_max - 1).
std::optional<int> kawai_yoshioka_reassembly_mismatch(const PairsEulerTable& table);

struct CorrespondenceReport {
  int h_max = 0;
  bool pass = false;
  std::optional<int> first_mismatch;
  WPolynomial gw_side;     ///< at the mismatch
  WPolynomial pairs_side;  ///< at the mismatch
};

/// Compares gw_partition_w and pairs_partition_w for h = 0..h_max.
CorrespondenceReport gw_pairs_check(int h_max);
/// Same, with the Gromov-Witten side taken from the given table
/// (h_max = table.h_max(); needs g_max >= h_max).
CorrespondenceReport gw_pairs_check(const BpsTable& table);

/// (2 sin(d u / 2))^(2g - 2) as a Laurent series in u known below u_trunc.
LaurentSeries sine_kernel(int genus, int d, int u_trunc);

/// R_{g,k} = [u^(2g-2)] sum_{d | k} (1/d) sum_g' r_{g',k/d} (2 sin(d u/2))^(2g'-2)
/// for g <= g_max, k <= k_max. Throws std::invalid_argument if u_trunc < 2 g_max
/// or the table does not cover the window.
GwPotentialTable gv_forward(const DivisibleBpsTable& bps, int g_max, int k_max, int u_trunc);
GwPotentialTable gv_forward(const DivisibleBpsTable& bps);

/// Inverse of gv_forward on the full window of gw.
DivisibleBpsTable gv_invert(const GwPotentialTable& gw);

}  // namespace k3enum

#endif  // K3ENUM_CURVECOUNTS_HPP
