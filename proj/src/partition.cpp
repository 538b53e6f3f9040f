#include "skw/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "skw/errors.hpp"

namespace skw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidShapeError("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidShapeError("partition parts must be weakly decreasing: " + to_string());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.front(), 0);
  for (int p : parts_)
    for (int i = 0; i < p; ++i) ++conj[i];
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition partition_from_conjugate(const std::vector<int>& conj_parts) {
  return Partition(conj_parts).conjugate();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void inside_rec(const Partition& outer, std::size_t row, int cap, std::vector<int>& cur,
                std::vector<Partition>& out) {
  if (row == outer.parts().size()) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(cap, outer[row]); p >= 0; --p) {
    cur.push_back(p);
    inside_rec(outer, row + 1, p, cur, out);
    cur.pop_back();
  }
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidShapeError("bad integer in shape: '" + std::string(s) + "'");
  return v;
}

Partition parse_partition(std::string_view s) {
  std::vector<int> parts;
  if (s.empty() || s == "0" || s == "()") return {};
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    parts.push_back(parse_int(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (weight >= 0) partitions_rec(weight, weight, cur, out);
  return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  inside_rec(outer, 0, outer.empty() ? 0 : outer[0], cur, out);
  return out;
}

SkewShape::SkewShape(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (!lambda_.contains(mu_))
    throw InvalidShapeError("mu = (" + mu_.to_string() + ") is not contained in lambda = (" +
                            lambda_.to_string() + ")");
}

SkewShape SkewShape::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  if (cleaned.empty()) throw InvalidShapeError("empty shape string");
  std::string_view v(cleaned);
  auto slash = v.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(v));
  return SkewShape(parse_partition(v.substr(0, slash)), parse_partition(v.substr(slash + 1)));
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 0; i < lambda_.length(); ++i)
    for (int j = mu_[i] + 1; j <= lambda_[i]; ++j) out.push_back({i + 1, j});
  return out;
}

SkewShape SkewShape::conjugate() const { return SkewShape(lambda_.conjugate(), mu_.conjugate()); }

int SkewShape::width() const {
  int w = 0;
  for (int i = 0; i < lambda_.length(); ++i) w = std::max(w, lambda_[i] - mu_[i]);
  return w;
}

int SkewShape::height() const { return conjugate().width(); }

Partition SkewShape::nu_double_prime(int n) const {
  std::vector<int> parts(lambda_.length());
  for (int i = 0; i < lambda_.length(); ++i)
    parts[i] = std::min(lambda_[i], std::max(mu_[i], mu_[i] + n));
  return Partition(std::move(parts));
}

Partition SkewShape::nu_prime(int n) const {
  Partition lc = lambda_.conjugate();
  Partition mc = mu_.conjugate();
  std::vector<int> conj(lc.length());
  for (int i = 0; i < lc.length(); ++i)
    conj[i] = std::max(mc[i], std::min(lc[i], lc[i] - n));
  return partition_from_conjugate(conj);
}

NuBounds SkewShape::nu_bounds(int n) const { return {nu_prime(n), nu_double_prime(n), n}; }

std::pair<std::vector<int>, std::vector<int>> SkewShape::kl_sequences() const {
  const int w = width();
  const int h = height();
  std::vector<int> k(w), l(h);
  for (int n = 1; n <= w; ++n) k[n - 1] = nu_double_prime(n).weight() - nu_double_prime(n - 1).weight();
  for (int n = 1; n <= h; ++n) l[n - 1] = nu_prime(n - 1).weight() - nu_prime(n).weight();
  return {k, l};
}

int SkewShape::threshold(int f, int g) const {
  if (is_empty()) throw EmptyShapeError();
  const int w = width();
  const int h = height();
  // Containment is monotone in t: it holds for t <= min(f-H, g-W) and fails
  // once both f-t and g-t are <= 0.
  const int lo = std::min(f - h, g - w) - 1;
  for (int t = std::max(f, g) + w + h + 1; t >= lo; --t)
    if (nu_double_prime(g - t).contains(nu_prime(f - t))) return t;
  return lo;  // unreachable: containment holds at lo
}

std::optional<ShiftData> SkewShape::detect_shift() const {
  if (is_empty()) throw EmptyShapeError();
  int first = -1, last = -1;
  for (int i = 0; i < lambda_.length(); ++i) {
    if (lambda_[i] != mu_[i]) {
      if (first < 0) first = i;
      else if (last != i - 1) return std::nullopt;  // gap between nonempty rows
      last = i;
    }
  }
  const int t = mu_[first];
  std::vector<int> gamma;
  for (int i = first; i <= last; ++i) {
    if (mu_[i] != t) return std::nullopt;
    gamma.push_back(lambda_[i] - t);
  }
  return ShiftData{first, t, Partition(std::move(gamma))};
}

std::string SkewShape::to_string() const {
  if (mu_.empty()) return lambda_.empty() ? "0" : lambda_.to_string();
  return lambda_.to_string() + "/" + mu_.to_string();
}

std::vector<SkewShape> all_skew_shapes(int max_weight, bool include_empty) {
  std::vector<SkewShape> out;
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& lambda : partitions_of(w)) {
      auto inner = partitions_inside(lambda);
      std::stable_sort(inner.begin(), inner.end(),
                       [](const Partition& a, const Partition& b) { return a.weight() < b.weight(); });
      for (const auto& mu : inner) {
        if (!include_empty && mu == lambda) continue;
        out.emplace_back(lambda, mu);
      }
    }
  }
  return out;
}

int sum_k_from(const std::vector<int>& k, int from) {
  int s = 0;
  for (int t = std::max(from, 1); t <= static_cast<int>(k.size()); ++t) s += k[t - 1];
  return s;
}

int sum_l_upto(const std::vector<int>& l, int to) {
  int s = 0;
  for (int t = 1; t <= std::min(to, static_cast<int>(l.size())); ++t) s += l[t - 1];
  return s;
}

}  // namespace skw
