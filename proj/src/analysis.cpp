#include "skw/analysis.hpp"

#include <algorithm>

#include "skw/errors.hpp"
#include "skw/tableau.hpp"

namespace skw {

ExtInt ExtInt::parse(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return infinity();
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v < 0) throw Error("bad grade value '" + s + "'");
  return ExtInt(v);
}

GradeOracle::GradeOracle(Kind kind, std::map<int, ExtInt> values, std::optional<ExtInt> fallback)
    : kind_(kind), values_(std::move(values)), fallback_(fallback) {}

GradeOracle GradeOracle::generic_minors(int f, int g) {
  GradeOracle o(Kind::Minors, {});
  o.formula_ = [f, g](int t) { return generic_grade(f, g, t); };
  return o;
}

GradeOracle GradeOracle::generic_fitting(int f, int g) {
  GradeOracle o(Kind::Fitting, {});
  // Fitt_j of the cokernel is I_{g-j}.
  o.formula_ = [f, g](int j) { return generic_grade(f, g, g - j); };
  return o;
}

ExtInt GradeOracle::grade(int index) const {
  if (kind_ == Kind::Minors && index <= 0) return ExtInt::infinity();
  if (formula_) return formula_(index);
  if (auto it = values_.find(index); it != values_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw MissingGradeError(std::string(kind_ == Kind::Minors ? "grade of I_" : "grade of Fitt_") +
                          std::to_string(index) + " not supplied");
}

std::string ProfileEntry::to_string() const {
  switch (kind) {
    case Kind::UnitIdeal: return "unit";
    case Kind::MinorSize: return "I_" + std::to_string(t);
    case Kind::ZeroIdeal: return "zero";
    case Kind::ContainsMaxMinors: return "contains_I_g";
  }
  return "?";
}

std::optional<std::pair<int, int>> component_bounds(const SkewShape& shape, int f, int g) {
  if (shape.is_empty()) return std::pair{0, 0};
  if (shape.threshold(f, g) < 0) return std::nullopt;
  const int total = shape.lambda().weight();
  return std::pair{total - shape.nu_double_prime(g).weight(), total - shape.nu_prime(f).weight()};
}

std::vector<std::int64_t> component_ranks(const SkewShape& shape, int f, int g) {
  std::vector<std::int64_t> ranks(shape.size() + 1, 0);
  for (const auto& gamma : partitions_inside(shape.lambda())) {
    if (!gamma.contains(shape.mu())) continue;
    const SkewShape lower(gamma, shape.mu());
    const SkewShape upper(shape.lambda(), gamma);
    const std::int64_t a = count_semistandard(lower, g, Convention::Schur);
    if (a == 0) continue;
    ranks[upper.size()] += a * count_semistandard(upper, f, Convention::Weyl);
  }
  return ranks;
}

std::vector<std::int64_t> expected_ranks(const std::vector<std::int64_t>& ranks) {
  std::vector<std::int64_t> r;
  for (std::size_t n = 1; n < ranks.size(); ++n) {
    std::int64_t s = 0;
    for (std::size_t i = n; i < ranks.size(); ++i) s += (i - n) % 2 ? -ranks[i] : ranks[i];
    r.push_back(s);
  }
  return r;
}

ExtInt generic_grade(int f, int g, int t) {
  if (t <= 0) return ExtInt::infinity();
  if (t > std::min(f, g)) return ExtInt(0);
  return ExtInt(std::int64_t(f - t + 1) * (g - t + 1));
}

namespace {

ProfileEntry minor_entry(int t) {
  if (t <= 0) return {ProfileEntry::Kind::UnitIdeal, 0};
  return {ProfileEntry::Kind::MinorSize, t};
}

}  // namespace

RadicalProfile radical_profile(const SkewShape& shape, int f, int g) {
  if (shape.is_empty()) throw EmptyShapeError();
  const int size = shape.size();
  RadicalProfile out;
  out.entries.assign(size, {});
  if (f - g >= shape.height()) {
    out.case_one = false;
    for (int n = 1; n <= size; ++n)
      out.entries[n - 1].kind = (size - n) % 2 == 0 ? ProfileEntry::Kind::ZeroIdeal
                                                    : ProfileEntry::Kind::ContainsMaxMinors;
    return out;
  }
  const auto bounds = component_bounds(shape, f, g);
  if (!bounds) return out;  // zero complex: every r_n vanishes
  const auto [start, finish] = *bounds;
  const int T = shape.threshold(f, g);
  const auto [k, l] = shape.kl_sequences();

  std::vector<std::optional<ProfileEntry>> assigned(size + 1);
  auto assign = [&](int n, ProfileEntry e, const char* rule) {
    if (n < 1 || n > size) return;
    if (assigned[n] && !(*assigned[n] == e))
      throw Error("radical profile ranges disagree at n=" + std::to_string(n) + " (" + rule + ": " +
                  e.to_string() + " vs " + assigned[n]->to_string() + ") for " + shape.to_string());
    assigned[n] = e;
  };
  for (int n = 1; n <= std::min(start, size); ++n) assign(n, {}, "below start");
  for (int n = finish + 1; n <= size; ++n) assign(n, {}, "above finish");
  for (int n = sum_k_from(k, 1 + g - T) + 1; n <= sum_l_upto(l, f - T); ++n) assign(n, minor_entry(1 + T), "a");
  for (int j = std::max(f - T + 1, 1); j <= static_cast<int>(l.size()); ++j)
    for (int n = sum_l_upto(l, j - 1) + 1; n <= sum_l_upto(l, j); ++n) assign(n, minor_entry(f - j + 1), "b");
  for (int j = T; 1 + g - j <= static_cast<int>(k.size()); --j)
    for (int n = sum_k_from(k, 2 + g - j) + 1; n <= sum_k_from(k, 1 + g - j); ++n) assign(n, minor_entry(j), "c");
  for (int n = 1; n <= size; ++n) {
    if (!assigned[n])
      throw Error("radical profile leaves n=" + std::to_string(n) + " uncovered for " + shape.to_string());
    out.entries[n - 1] = *assigned[n];
  }
  return out;
}

bool predict_acyclic(const SkewShape& shape, int f, const GradeOracle& grades, int T) {
  if (T < 0) return true;
  const auto l = shape.kl_sequences().second;
  for (int j = std::max(1, f - T); j <= f; ++j)
    if (grades.grade(f - j + 1) < ExtInt(sum_l_upto(l, j))) return false;
  return true;
}

bool predict_acyclic_generic(const SkewShape& shape, int f, int g) {
  if (shape.is_empty()) throw EmptyShapeError();
  const auto l = shape.kl_sequences().second;
  const int slack = g - f + 1;
  if (l.at(0) <= slack) return true;
  const auto shift = shape.detect_shift();
  if (!shift) return false;
  const Partition& gamma = shift->gamma;
  const int g1 = gamma[0];
  return slack < g1 && g1 <= g && gamma.conjugate()[g1 - 1] > g1 - slack;
}

bool predict_torsion_free_generic(const SkewShape& shape, int f, int g) {
  if (shape.is_empty()) throw EmptyShapeError();
  return shape.kl_sequences().second.at(0) <= g - f;
}

bool predict_torsion_free_presentation(const SkewShape& shape, int f, const GradeOracle& grades, int T) {
  if (T < 0) return true;
  const auto l = shape.kl_sequences().second;
  for (int k = std::max(1, f - T); k <= f; ++k)
    if (grades.grade(f - k + 1) < ExtInt(1 + sum_l_upto(l, k))) return false;
  return true;
}

bool predict_torsion_free_module(const SkewShape& shape, int r, const GradeOracle& fitting_grades) {
  if (shape.is_empty()) throw EmptyShapeError();
  if (r < 1) throw HypothesisViolatedError("module rank must be at least 1");
  const auto l = shape.kl_sequences().second;
  if (l.at(0) > r)
    throw HypothesisViolatedError("lambda differs from mu in " + std::to_string(l[0]) + " columns, more than r = " +
                                  std::to_string(r));
  const int T = shape.threshold(0, r);
  const int lo = std::max(1, -T);
  // Fitting ideals grow with the index and the l-sums stop growing past H.
  const int hi = std::max(lo, static_cast<int>(l.size()));
  for (int k = lo; k <= hi; ++k)
    if (fitting_grades.grade(r + k - 1) < ExtInt(1 + sum_l_upto(l, k))) return false;
  return true;
}

bool be_criteria(const std::vector<ExtInt>& grades, BeMode mode) {
  for (std::size_t k = 1; k <= grades.size(); ++k)
    if (grades[k - 1] < ExtInt(static_cast<std::int64_t>(k) + (mode == BeMode::TorsionFree ? 1 : 0))) return false;
  return true;
}

}  // namespace skw
