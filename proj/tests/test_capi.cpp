// Exercises the shared library through its C header only.

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "antilin/antilin.h"

namespace {

const char* kBell =
    R"({"dim_a":2,"dim_b":2,"coeff":{"rows":2,"cols":2,"data":[[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]}})";
const char* kSkewed =
    R"({"dim_a":2,"dim_b":2,"coeff":{"rows":2,"cols":2,"data":[[0.8944271909999159,0],[0,0],[0,0],[0.4472135954999579,0]]}})";

struct Owned {
  char* p = nullptr;
  ~Owned() { al_string_free(p); }
};

TEST(CApi, StatusNamesAndExitCodes) {
  EXPECT_STREQ(al_status_name(AL_OK), "Ok");
  EXPECT_STREQ(al_status_name(AL_ERR_NOT_UNIT), "NotUnit");
  EXPECT_STREQ(al_status_name(AL_ERR_INVALID_ARGUMENT), "InvalidArgument");
  EXPECT_STREQ(al_status_name(AL_ERR_NULL_ARGUMENT), "NullArgument");
  EXPECT_EQ(al_exit_code(AL_OK), 0);
  EXPECT_EQ(al_exit_code(AL_ERR_PARSE), 2);
  EXPECT_EQ(al_exit_code(AL_ERR_NON_FINITE), 2);
  EXPECT_EQ(al_exit_code(AL_ERR_DIM_MISMATCH), 2);
  EXPECT_EQ(al_exit_code(AL_ERR_TOLERANCE_EXCEEDED), 3);
  EXPECT_EQ(al_exit_code(AL_ERR_INTERNAL), 1);
  EXPECT_GT(std::strlen(al_version()), 0u);
}

TEST(CApi, StateLifecycle) {
  al_state* s = nullptr;
  ASSERT_EQ(al_state_from_json(kBell, &s), AL_OK);
  size_t da = 0, db = 0;
  ASSERT_EQ(al_state_dims(s, &da, &db), AL_OK);
  EXPECT_EQ(da, 2u);
  EXPECT_EQ(db, 2u);
  double norm = 0;
  ASSERT_EQ(al_state_norm(s, &norm), AL_OK);
  EXPECT_NEAR(norm, 1.0, 1e-15);
  std::vector<double> coeff(8);
  ASSERT_EQ(al_state_coeff(s, coeff.data(), 4), AL_OK);
  EXPECT_NEAR(coeff[0], std::sqrt(0.5), 1e-15);
  EXPECT_EQ(coeff[2], 0.0);
  EXPECT_NEAR(coeff[6], std::sqrt(0.5), 1e-15);
  EXPECT_EQ(al_state_coeff(s, coeff.data(), 3), AL_ERR_DIM_MISMATCH);

  Owned text;
  ASSERT_EQ(al_state_to_json(s, &text.p), AL_OK);
  al_state* back = nullptr;
  ASSERT_EQ(al_state_from_json(text.p, &back), AL_OK);
  al_state_free(back);
  al_state_free(s);
  al_state_free(nullptr);
}

TEST(CApi, StateConstructors) {
  al_state* s = nullptr;
  const double c[] = {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 2, 0};
  ASSERT_EQ(al_state_from_coeff(2, 3, c, &s), AL_OK);
  std::vector<double> out(12);
  ASSERT_EQ(al_state_coeff(s, out.data(), 6), AL_OK);
  for (int k = 0; k < 12; ++k) EXPECT_EQ(out[k], c[k]);
  al_state_free(s);

  ASSERT_EQ(al_state_maximally_entangled(3, &s), AL_OK);
  double norm = 0;
  al_state_norm(s, &norm);
  EXPECT_NEAR(norm, 1.0, 1e-15);
  al_state_free(s);
  EXPECT_EQ(al_state_maximally_entangled(0, &s), AL_ERR_INVALID_ARGUMENT);
}

TEST(CApi, RandomStatesAreDeterministic) {
  al_state *a = nullptr, *b = nullptr;
  ASSERT_EQ(al_state_random(3, 3, 5, 1, &a), AL_OK);
  ASSERT_EQ(al_state_random(3, 3, 5, 1, &b), AL_OK);
  Owned ja, jb;
  al_state_to_json(a, &ja.p);
  al_state_to_json(b, &jb.p);
  EXPECT_STREQ(ja.p, jb.p);
  al_state_free(a);
  al_state_free(b);
  EXPECT_EQ(al_state_random(2, 3, 5, 1, &a), AL_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ErrorsCarryMessages) {
  al_state* s = nullptr;
  EXPECT_EQ(al_state_from_json("{", &s), AL_ERR_PARSE);
  EXPECT_NE(std::string(al_last_error()).find("ParseError"), std::string::npos);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(al_state_from_json(R"({"dim_a":1,"dim_b":1,"coeff":{"rows":1,"cols":1,"data":[[1e999,0]]}})", &s),
            AL_ERR_NON_FINITE);
  EXPECT_EQ(al_state_from_json(nullptr, &s), AL_ERR_NULL_ARGUMENT);
  EXPECT_EQ(al_state_dims(nullptr, nullptr, nullptr), AL_ERR_NULL_ARGUMENT);
}

TEST(CApi, TeleportBellAndSkewed) {
  al_state *bell = nullptr, *skewed = nullptr;
  ASSERT_EQ(al_state_from_json(kBell, &bell), AL_OK);
  ASSERT_EQ(al_state_from_json(kSkewed, &skewed), AL_OK);

  al_teleport* tm = nullptr;
  ASSERT_EQ(al_teleport_create(bell, bell, &tm), AL_OK);
  size_t da = 0, dc = 0;
  al_teleport_dims(tm, &da, &dc);
  EXPECT_EQ(da, 2u);
  EXPECT_EQ(dc, 2u);
  const double in[] = {1, 0, 0, 0};
  double out[4];
  ASSERT_EQ(al_teleport_apply(tm, in, 2, out, 2), AL_OK);
  EXPECT_NEAR(out[0], 0.5, 1e-15);
  EXPECT_NEAR(out[2], 0.0, 1e-15);
  EXPECT_EQ(al_teleport_apply(tm, in, 3, out, 2), AL_ERR_DIM_MISMATCH);
  double bound = 0, tn = 0, fid = 0;
  ASSERT_EQ(al_teleport_bounds(tm, &bound, &tn, &fid), AL_OK);
  EXPECT_NEAR(bound, 0.25, 1e-14);
  EXPECT_NEAR(tn, 1.0, 1e-14);
  EXPECT_NEAR(fid, 1.0, 1e-14);
  al_teleport_free(tm);

  ASSERT_EQ(al_teleport_create(bell, skewed, &tm), AL_OK);
  ASSERT_EQ(al_teleport_bounds(tm, nullptr, &tn, &fid), AL_OK);
  EXPECT_NEAR(tn, std::sqrt(0.4) + std::sqrt(0.1), 1e-12);
  EXPECT_NEAR(fid, 0.9486832980505138, 1e-9);
  al_teleport_free(tm);

  al_state* big = nullptr;
  al_state_maximally_entangled(3, &big);
  EXPECT_EQ(al_teleport_create(bell, big, &tm), AL_ERR_DIM_MISMATCH);
  al_state_free(big);
  al_state_free(bell);
  al_state_free(skewed);
}

TEST(CApi, ReportOutputContract) {
  const std::string doc = std::string(R"({"psi_ab":)") + kBell + R"(,"phi_bc":)" + kSkewed + "}";
  Owned json, summary;
  ASSERT_EQ(al_report("teleport", doc.c_str(), 1e-10, &json.p, &summary.p), AL_OK);
  EXPECT_NE(std::string(json.p).find("\"fidelity\": 0.948683298050513"), std::string::npos);
  EXPECT_NE(std::string(summary.p).find("teleport"), std::string::npos);

  Owned failing;
  EXPECT_EQ(al_report("teleport", doc.c_str(), 1e-30, &failing.p, nullptr), AL_ERR_TOLERANCE_EXCEEDED);
  ASSERT_NE(failing.p, nullptr);
  EXPECT_NE(std::string(failing.p).find("\"passed\": false"), std::string::npos);
  EXPECT_NE(std::string(al_last_error()).find("teleport."), std::string::npos);

  Owned none;
  EXPECT_EQ(al_report("teleport", "{]", 1e-10, &none.p, nullptr), AL_ERR_PARSE);
  EXPECT_EQ(al_report("warp", "{}", 1e-10, &none.p, nullptr), AL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(al_report("teleport", doc.c_str(), 0.0, &none.p, nullptr), AL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(none.p, nullptr);
}

TEST(CApi, VerifyDefaultsAndSmallRun) {
  al_verify_config cfg = al_verify_defaults();
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.trials, 100);
  ASSERT_EQ(cfg.n_dims, 3u);
  EXPECT_EQ(cfg.dims[0], 2u);
  EXPECT_EQ(cfg.dims[2], 4u);
  EXPECT_EQ(cfg.tolerance, 1e-10);

  cfg.trials = 3;
  Owned a, b;
  ASSERT_EQ(al_verify(&cfg, &a.p, nullptr), AL_OK);
  cfg.threads = 2;
  ASSERT_EQ(al_verify(&cfg, &b.p, nullptr), AL_OK);
  EXPECT_STREQ(a.p, b.p);

  cfg.trials = 0;
  Owned c;
  EXPECT_EQ(al_verify(&cfg, &c.p, nullptr), AL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(al_verify(nullptr, &c.p, nullptr), AL_ERR_NULL_ARGUMENT);
}

}  // namespace
