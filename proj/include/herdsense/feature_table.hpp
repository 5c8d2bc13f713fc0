// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "herdsense/types.hpp"

namespace herdsense {

struct RowMeta {
  std::string device_id;
  std::int64_t timestamp_max = 0;
  std::string label;
  // Set when a window had a zero-variance axis; kurtosis and skewness for
  // that axis are emitted as 0.
  bool degenerate = false;

  friend bool operator==(const RowMeta&, const RowMeta&) = default;
};

// Rectangular table of named feature columns, the unit exchanged between
// pipeline stages. One RowMeta per row.
struct FeatureTable {
  std::vector<std::string> column_names;
  Mat values;  // rows() x column_names.size()
  std::vector<RowMeta> meta;

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }

  bool has_column(const std::string& name) const;
  // Throws a schema error when the column is absent.
  Index column_index(const std::string& name) const;
  Vec column(const std::string& name) const;

  FeatureTable select_rows(const std::vector<Index>& indices) const;

  std::vector<std::string> row_labels() const;

  // Verifies the shape invariants; throws on violation.
  void check_consistent() const;
};

// Distinct row labels in canonical activity order (STN, REL, RUS, ETC,
// then others lexicographically). Unlabeled rows are skipped.
std::vector<std::string> label_vocabulary(const FeatureTable& table);

}  // namespace herdsense
