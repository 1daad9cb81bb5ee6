#include "bethe/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bethe {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k + 1 < parts.size() && parts[k] < parts[k + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition string: " + text);
    }
    if (pos != item.size()) throw std::invalid_argument("bad partition string: " + text);
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition string");
  return Partition(parts);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts[k]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Integer hook_length_dimension(const Partition& shape) {
  const int n = shape.n();
  Integer numerator = factorial(n);
  Integer hooks = 1;
  const int rows = shape.rows();
  std::vector<int> col_len(rows ? shape.parts[0] : 0, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < shape.parts[r]; ++c) ++col_len[c];
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < shape.parts[r]; ++c) {
      const int arm = shape.parts[r] - (c + 1);
      const int leg = col_len[c] - (r + 1);
      hooks *= arm + leg + 1;
    }
  }
  if (numerator % hooks != 0) throw std::logic_error("hook length formula did not divide");
  return numerator / hooks;
}

int StandardTableau::row_of(int entry) const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int value : rows[r])
      if (value == entry) return static_cast<int>(r) + 1;
  throw std::out_of_range("entry not in tableau: " + std::to_string(entry));
}

int StandardTableau::col_of(int entry) const {
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c] == entry) return static_cast<int>(c) + 1;
  throw std::out_of_range("entry not in tableau: " + std::to_string(entry));
}

bool StandardTableau::is_standard() const {
  if (static_cast<int>(rows.size()) != shape.rows()) return false;
  std::vector<bool> seen(shape.n() + 1, false);
  for (int r = 0; r < shape.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape.parts[r]) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > shape.n() || seen[v]) return false;
      seen[v] = true;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape) {
  const int n = shape.n();
  const int k = shape.rows();
  std::vector<StandardTableau> out;
  StandardTableau current;
  current.shape = shape;
  current.rows.assign(k, {});

  // Grow by placing 1..n; a box may open row r when row r-1 is strictly longer.
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(current);
      return;
    }
    for (int r = 0; r < k; ++r) {
      const int filled = static_cast<int>(current.rows[r].size());
      if (filled >= shape.parts[r]) continue;
      if (r > 0 && static_cast<int>(current.rows[r - 1].size()) <= filled) continue;
      current.rows[r].push_back(next);
      self(self, next + 1);
      current.rows[r].pop_back();
    }
  };
  rec(rec, 1);

  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return content_vector(a) > content_vector(b);
  });
  return out;
}

int content(const StandardTableau& t, int entry) {
  if (entry < 1 || entry > t.entry_count())
    throw std::out_of_range("content: entry out of range");
  return t.col_of(entry) - t.row_of(entry);
}

std::vector<int> content_vector(const StandardTableau& t) {
  const int n = t.entry_count();
  std::vector<int> c(n, 0);
  for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
    for (int col = 0; col < static_cast<int>(t.rows[r].size()); ++col)
      c[t.rows[r][col] - 1] = (col + 1) - (r + 1);
  return c;
}

StandardTableau restrict_tableau(const StandardTableau& t, int i) {
  if (i < 1 || i > t.entry_count()) throw std::out_of_range("restrict_tableau: bad index");
  StandardTableau out;
  std::vector<int> parts;
  for (const auto& row : t.rows) {
    std::vector<int> kept;
    for (int v : row)
      if (v <= i) kept.push_back(v);
    if (kept.empty()) break;
    parts.push_back(static_cast<int>(kept.size()));
    out.rows.push_back(std::move(kept));
  }
  out.shape = Partition(parts);
  return out;
}

Partition restricted_shape(const StandardTableau& t, int i) {
  std::vector<int> parts;
  for (const auto& row : t.rows) {
    int count = 0;
    for (int v : row)
      if (v <= i) ++count;
    if (count == 0) break;
    parts.push_back(count);
  }
  return Partition(parts);
}

WeightData weight_data(const Partition& shape) {
  WeightData wd;
  wd.N = shape.n();
  wd.L = std::max(shape.rows() - 1, 0);
  wd.m.resize(wd.L);
  for (int i = 1; i <= wd.L; ++i) {
    int sum = 0;
    for (int j = i + 1; j <= shape.rows(); ++j) sum += shape.part(j);
    wd.m[i - 1] = sum;
  }
  return wd;
}

int WeightData::total() const { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace bethe
