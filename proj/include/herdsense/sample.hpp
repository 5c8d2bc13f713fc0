// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace herdsense {

// One tri-axial accelerometer reading; accelerations in g, timestamps in
// epoch milliseconds. An empty label means unlabeled.
struct Sample {
  std::string device_id;
  std::int64_t timestamp = 0;
  double acc_x = 0.0;
  double acc_y = 0.0;
  double acc_z = 0.0;
  std::string label;
  // Cleaning segment within a device; windows never span segments.
  std::int32_t segment = 0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

// Canonical ordering of the merged activity classes. Unknown labels rank
// after the four canonical ones, lexicographically.
inline int canonical_label_rank(const std::string& label) {
  if (label == "STN") return 0;
  if (label == "REL") return 1;
  if (label == "RUS") return 2;
  if (label == "ETC") return 3;
  return 4;
}

inline bool label_order_less(const std::string& a, const std::string& b) {
  const int ra = canonical_label_rank(a);
  const int rb = canonical_label_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

inline bool sample_stream_less(const Sample& a, const Sample& b) {
  if (a.device_id != b.device_id) return a.device_id < b.device_id;
  return a.timestamp < b.timestamp;
}

}  // namespace herdsense
