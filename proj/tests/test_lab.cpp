// Verification suites.  The chains are pure algebra, so they must pass on
// every valid operator and every unitary frame; the implication and corollary
// suites encode the positivity statements with their frozen tolerances.
#include <doctest.h>

#include "cosk/lab.hpp"
#include "test_support.hpp"

using namespace cosk;

namespace {

void require_all(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    CAPTURE(r.suite);
    CAPTURE(c.name);
    CAPTURE(c.lhs);
    CAPTURE(c.rhs);
    CAPTURE(c.residual);
    CHECK(c.pass);
  }
  REQUIRE(!r.checks.empty());
  CHECK(r.all_pass());
}

}  // namespace

TEST_CASE("report bookkeeping") {
  VerificationReport r;
  r.suite = "unit";
  CHECK(r.add_eq("eq ok", 1.0, 1.0 + 1e-12, 1e-9).pass);
  CHECK_FALSE(r.add_eq("eq bad", 1.0, 1.1, 1e-9).pass);
  CHECK(r.add_leq("leq ok", 3.0, 4.0, 1e-9).pass);
  CHECK_FALSE(r.add_leq("leq bad", 5.0, 4.0, 1e-9).pass);
  CHECK(r.add_flag("flag", true).pass);
  CHECK_FALSE(r.all_pass());
  CHECK(r.checks.size() == 5);
}

TEST_CASE("identity chains pass on models and random draws") {
  for (int m : {2, 3}) {
    std::vector<KahlerOperator> ops;
    ops.push_back(const_hsc(m, 4.0));
    ops.push_back(random_kahler(m, 21 + m));
    if (m >= 2) ops.push_back(cp_times_flat(m - 1));
    for (const auto& op : ops) {
      for (std::uint64_t fs : {0u, 91u}) {
        UnitaryFrame fr =
            fs == 0 ? UnitaryFrame::standard(m) : random_unitary_frame(m, fs);
        require_all(identity_chain_flat(op, fr));
        require_all(identity_chain_ob(op, fr));
        require_all(identity_chain_h(op, fr));
        require_all(identity_chain_ric_perp(op, fr));
        require_all(identity_chain_mixed(op, fr));
      }
    }
  }
}

TEST_CASE("identity suite wrapper") {
  require_all(identity_suite(2, 2, 5));
  require_all(identity_suite(3, 1, 5));
}

TEST_CASE("implication suite") {
  for (int part : {1, 2, 3, 4}) {
    VerificationReport r = implication_suite(2, part, 2, 80, 7);
    require_all(r);
    CHECK(r.m == 2);
    CHECK(r.trials == 2);
  }
  require_all(implication_suite(3, 2, 1, 60, 7));
}

TEST_CASE("corollary suite") {
  require_all(corollary_suite(2, 3, 11));
  require_all(corollary_suite(3, 2, 11));
}

TEST_CASE("model suite goldens") {
  require_all(model_suite(2));
  require_all(model_suite(3));
}
