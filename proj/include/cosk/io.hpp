#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosk/curvature.hpp"
#include "cosk/lab.hpp"

namespace cosk {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TensorFile {
  CurvatureTensor R;
  bool kahler = false;
  int m = 0;                // valid when kahler
  double bianchi = 0;       // residuals measured on load
  double kahler_res = 0;
  std::string digest;       // digest of the canonical serialized form
};

// Canonical JSON form: nonzero entries [i, j, k, l, value] with 1-based
// indices, i < j, k < l, (i,j) <= (k,l), in strictly ascending order.
std::string write_tensor_json(const CurvatureTensor& R, bool kahler);

// Parses, validates ranges/ordering/finiteness, rebuilds the tensor, and
// re-measures the residuals; throws IoError (with the residual in the
// message) on any violation.  The stored kahler flag is advisory: it must be
// consistent with the recomputed residual.
TensorFile read_tensor_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// FNV-1a 64-bit, hex encoded.
std::string digest_hex(const std::string& data);

struct ReportMeta {
  std::string kind;  // "verify", "spectrum", ...
  std::vector<int> m_list;
  std::uint64_t seed = 0;
  int trials = 0;
  double tolerance = 0;
  std::optional<std::string> input_digest;
};
std::string report_json(const ReportMeta& meta,
                        const std::vector<VerificationReport>& reports);

}  // namespace cosk
