#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skw/partition.hpp"

namespace skw {

/// Nonnegative integer or infinity (the grade of the unit ideal).
class ExtInt {
 public:
  constexpr ExtInt(std::int64_t v = 0) : v_(v), inf_(false) {}
  static constexpr ExtInt infinity() {
    ExtInt e;
    e.inf_ = true;
    return e;
  }
  constexpr bool is_infinite() const { return inf_; }
  constexpr std::int64_t value() const { return v_; }
  std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }
  /// "inf"/"infinity" or a decimal integer.
  static ExtInt parse(const std::string& s);

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.v_ <=> b.v_;
  }

 private:
  std::int64_t v_;
  bool inf_;
};

/// Grades of determinantal ideals I_t(phi) (kind Minors, indexed by t) or
/// of Fitting ideals Fitt_j(M) (kind Fitting, indexed by j).
class GradeOracle {
 public:
  enum class Kind { Minors, Fitting };

  GradeOracle(Kind kind, std::map<int, ExtInt> values, std::optional<ExtInt> fallback = std::nullopt);
  /// grade I_t of the generic g x f matrix.
  static GradeOracle generic_minors(int f, int g);
  /// grade Fitt_j of the cokernel of the generic g x f matrix.
  static GradeOracle generic_fitting(int f, int g);

  Kind kind() const { return kind_; }
  /// For Minors, t <= 0 is the unit ideal. Throws MissingGradeError when
  /// no value is known.
  ExtInt grade(int index) const;

 private:
  Kind kind_;
  std::map<int, ExtInt> values_;
  std::optional<ExtInt> fallback_;
  std::function<ExtInt(int)> formula_;
};

/// Radical of the ideal of r_n-minors of d_n.
struct ProfileEntry {
  enum class Kind { UnitIdeal, MinorSize, ZeroIdeal, ContainsMaxMinors };
  Kind kind = Kind::UnitIdeal;
  int t = 0;  // MinorSize only

  std::string to_string() const;
  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Entries for n = 1 .. |lambda/mu|.
struct RadicalProfile {
  bool case_one = true;
  std::vector<ProfileEntry> entries;
  const ProfileEntry& at(int n) const { return entries.at(n - 1); }
};

/// (start, finish) of the nonzero window; nullopt when T < 0. The empty
/// shape gives (0, 0).
std::optional<std::pair<int, int>> component_bounds(const SkewShape& shape, int f, int g);
/// Ranks of the degree-j components, j = 0 .. |lambda/mu|, from the
/// filtration by partitions mu <= gamma <= lambda.
std::vector<std::int64_t> component_ranks(const SkewShape& shape, int f, int g);
/// r_1 .. r_{len-1}: r_n = sum_{i >= n} (-1)^{i-n} ranks[i].
std::vector<std::int64_t> expected_ranks(const std::vector<std::int64_t>& ranks);

/// Grade of I_t of a generic g x f matrix: inf for t <= 0,
/// (f-t+1)(g-t+1) up to min(f, g), 0 beyond.
ExtInt generic_grade(int f, int g, int t);

/// Throws EmptyShapeError for lambda == mu, and Error if overlapping
/// ranges ever disagree.
RadicalProfile radical_profile(const SkewShape& shape, int f, int g);

/// grade I_{f-j+1} >= l_1 + ... + l_j for all j >= max(1, f - T).
bool predict_acyclic(const SkewShape& shape, int f, const GradeOracle& grades, int T);
/// Acyclic and nonzero for the generic map (f, g >= 1).
bool predict_acyclic_generic(const SkewShape& shape, int f, int g);
/// Acyclic with nonzero torsion-free cokernel module, generic map.
bool predict_torsion_free_generic(const SkewShape& shape, int f, int g);
/// grade I_{f-k+1} >= 1 + l_1 + ... + l_k for all k >= max(1, f - T).
bool predict_torsion_free_presentation(const SkewShape& shape, int f, const GradeOracle& grades, int T);
/// Module of rank r with projective dimension <= 1, given grades of its
/// Fitting ideals. Throws HypothesisViolatedError if l_1 > r.
bool predict_torsion_free_module(const SkewShape& shape, int r, const GradeOracle& fitting_grades);

enum class BeMode { Acyclic, TorsionFree };
/// grades[k-1] = grade I(phi_k); checks grade >= k (+1 for TorsionFree).
bool be_criteria(const std::vector<ExtInt>& grades, BeMode mode);

}  // namespace skw
