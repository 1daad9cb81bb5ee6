#pragma once

#include <string>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/// Partition of N with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int n() const;  // Σ parts
  int rows() const { return static_cast<int>(parts.size()); }
  /// k-th part, 1-based; 0 past the last row.
  int part(int k) const { return (k >= 1 && k <= rows()) ? parts[k - 1] : 0; }

  bool operator==(const Partition&) const = default;

  static Partition parse(const std::string& text);  // "3,2,1"
  std::string to_string() const;
};

std::vector<Partition> partitions_of(int n);

/// Hook-length dimension of the irreducible representation labelled by λ,
/// in exact integer arithmetic.
Integer hook_length_dimension(const Partition& shape);

/// Standard filling stored as row lists of entries.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // rows[r][c] = entry in row r+1, column c+1

  int entry_count() const { return shape.n(); }
  /// 1-based row/column of a 1-based entry; throws if out of range.
  int row_of(int entry) const;
  int col_of(int entry) const;
  bool is_standard() const;

  bool operator==(const StandardTableau&) const = default;
};

/// All standard tableaux of the given shape, sorted so that content vectors
/// decrease lexicographically (the row-reading filling comes first).
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape);

/// Content of the box holding `entry`: column − row.
int content(const StandardTableau& t, int entry);
std::vector<int> content_vector(const StandardTableau& t);

/// The sub-tableau on entries {1..i}.
StandardTableau restrict_tableau(const StandardTableau& t, int i);

/// Shape of restrict_tableau(t, i) without building it.
Partition restricted_shape(const StandardTableau& t, int i);

/// Level structure of the Bethe coordinates attached to λ.
struct WeightData {
  int N = 0;
  int L = 0;             // #rows − 1
  std::vector<int> m;    // m[i-1] = Σ_{j>i} λ_j
  int total() const;     // Σ m_i
};

WeightData weight_data(const Partition& shape);

}  // namespace bethe
