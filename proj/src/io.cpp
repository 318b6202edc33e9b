#include "cosk/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cosk/kahler.hpp"

namespace cosk {

using nlohmann::json;

namespace {

constexpr int kMaxDim = 32;  // dense n^4 storage; keep files desk-scale

constexpr const char* kTensorFormat = "curvature-tensor/1";
constexpr const char* kReportFormat = "curvature-report/1";
constexpr const char* kConvention = "sectional-positive";

int require_index(const json& v, const char* what) {
  if (!v.is_number())
    throw IoError(std::string("entry ") + what + " must be a number");
  double d = v.get<double>();
  if (!(std::floor(d) == d) || std::abs(d) > 1e9)
    throw IoError(std::string("entry ") + what + " must be an integer");
  return static_cast<int>(d);
}

}  // namespace

std::string write_tensor_json(const CurvatureTensor& R, bool kahler) {
  const int n = R.dim();
  json j;
  j["format"] = kTensorFormat;
  j["convention"] = kConvention;
  j["n"] = n;
  j["kahler"] = kahler;
  if (kahler) j["m"] = n / 2;
  json entries = json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::make_pair(k, l) < std::make_pair(i, jj)) continue;
          double v = R(i, jj, k, l);
          if (v == 0.0) continue;
          entries.push_back(json::array({i + 1, jj + 1, k + 1, l + 1, v}));
        }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

TensorFile read_tensor_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw IoError("top level must be an object");
    if (!j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != kTensorFormat)
      throw IoError("missing or unsupported format tag");
    if (!j.contains("convention") || !j["convention"].is_string() ||
        j["convention"].get<std::string>() != kConvention)
      throw IoError("missing or unsupported sign convention");
    if (!j.contains("n") || !j["n"].is_number())
      throw IoError("missing dimension n");
    const int n = require_index(j["n"], "n");
    if (n < 1) throw IoError("dimension n must be positive");
    if (n > kMaxDim) throw IoError("dimension n is too large for dense storage");
    if (!j.contains("kahler") || !j["kahler"].is_boolean())
      throw IoError("missing kahler flag");
    const bool claimed = j["kahler"].get<bool>();
    if (claimed && j.contains("m")) {
      int m = require_index(j["m"], "m");
      if (2 * m != n) throw IoError("field m does not match n / 2");
    }
    if (!j.contains("entries") || !j["entries"].is_array())
      throw IoError("missing entries array");

    CurvatureTensor R(n);
    std::vector<int> prev;
    for (const json& e : j["entries"]) {
      if (!e.is_array() || e.size() != 5)
        throw IoError("each entry must be [i, j, k, l, value]");
      int i = require_index(e[0], "i"), jj = require_index(e[1], "j");
      int k = require_index(e[2], "k"), l = require_index(e[3], "l");
      if (!(1 <= i && i < jj && jj <= n && 1 <= k && k < l && l <= n))
        throw IoError("entry indices must satisfy 1 <= i < j <= n, 1 <= k < l <= n");
      if (std::make_pair(i, jj) > std::make_pair(k, l))
        throw IoError("entry pairs must satisfy (i,j) <= (k,l)");
      std::vector<int> cur = {i, jj, k, l};
      if (!prev.empty() && !(prev < cur))
        throw IoError("entries must be strictly ascending and unique");
      prev = cur;
      if (!e[4].is_number()) throw IoError("entry value must be a number");
      double v = e[4].get<double>();
      if (!std::isfinite(v)) throw IoError("entry value must be finite");
      if (v == 0.0) throw IoError("explicit zero entries are not canonical");
      R.set(i - 1, jj - 1, k - 1, l - 1, v);
    }

    TensorFile tf{CurvatureTensor(1), false, 0, 0.0, 0.0, ""};
    tf.bianchi = bianchi_residual(R);
    const double scale = scale_of(R);
    if (tf.bianchi > 1e-10 * scale) {
      std::ostringstream msg;
      msg << "first Bianchi identity violated; residual = " << tf.bianchi;
      throw IoError(msg.str());
    }

    if (n % 2 == 0) {
      tf.kahler_res = kahler_residual(R);
      if (tf.kahler_res <= 1e-10 * scale) {
        tf.kahler = true;
        tf.m = n / 2;
      } else if (claimed) {
        std::ostringstream msg;
        msg << "kahler flag set but the tensor is not invariant under the "
               "complex structure; residual = "
            << tf.kahler_res;
        throw IoError(msg.str());
      }
    } else {
      tf.kahler_res = std::numeric_limits<double>::infinity();
      if (claimed)
        throw IoError("kahler flag set but the dimension is odd");
    }

    tf.R = std::move(R);
    tf.digest = digest_hex(write_tensor_json(tf.R, tf.kahler));
    return tf;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed tensor file: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof())
    throw IoError("error while reading file: " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << text;
  out.close();
  if (!out) throw IoError("error while writing file: " + path);
}

std::string digest_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string report_json(const ReportMeta& meta,
                        const std::vector<VerificationReport>& reports) {
  json j;
  j["format"] = kReportFormat;
  j["kind"] = meta.kind;
  j["m"] = meta.m_list;
  j["seed"] = meta.seed;
  j["trials"] = meta.trials;
  j["tolerance"] = meta.tolerance;
  if (meta.input_digest) j["input_digest"] = *meta.input_digest;
  json rs = json::array();
  for (const VerificationReport& r : reports) {
    json jr;
    jr["suite"] = r.suite;
    jr["m"] = r.m;
    jr["seed"] = r.seed;
    jr["trials"] = r.trials;
    jr["all_pass"] = r.all_pass();
    json cs = json::array();
    for (const CheckRecord& c : r.checks) {
      json jc;
      jc["name"] = c.name;
      jc["lhs"] = c.lhs;
      jc["rhs"] = c.rhs;
      jc["residual"] = c.residual;
      jc["tol"] = c.tol;
      jc["pass"] = c.pass;
      cs.push_back(std::move(jc));
    }
    jr["checks"] = std::move(cs);
    rs.push_back(std::move(jr));
  }
  j["reports"] = std::move(rs);
  return j.dump(2);
}

}  // namespace cosk
